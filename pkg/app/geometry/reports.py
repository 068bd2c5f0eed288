"""
Serialization of censuses and classification records.
"""
import json
import logging
from pathlib import Path

from geometry.cubics import CUBIC_NAMES
from geometry.lines import LineOrbitLabel, point_od
from geometry.orbits import SCHEMA_VERSION, OrbitCensus, stabilizer_report
from geometry.parsing import format_plane
from geometry.planes import representative, valid_labels

logger = logging.getLogger(__name__)


def bit_rows(rows, h):
    return [[format(x, f'0{h}b') for x in row] for row in rows]


def _rows_from_bits(rows):
    return tuple(tuple(int(x, 2) for x in row) for row in rows)


def census_body(census):
    """Everything but the runtime; identical for identical configurations."""
    h = census.q.bit_length() - 1
    return {
        'schema_version': SCHEMA_VERSION,
        'q': census.q,
        'modulus': census.modulus,
        'group': census.group,
        'checksum': census.checksum,
        'complete': census.complete,
        'labels': {
            label: {
                'count': count,
                'representative': bit_rows(
                    census.representatives[label], h
                ),
            }
            for label, count in census.counts.items()
        },
        'totals': {
            'planes': census.total,
            'labels': len(census.counts),
        },
        'distributions': {
            ','.join(map(str, key)): count
            for key, count in census.distributions.items()
        },
        'sampled': census.sampled,
    }


def dumps_body(census):
    return json.dumps(
        census_body(census), ensure_ascii=False, sort_keys=True, indent=2,
    )


def census_filename(census):
    return f'census-q{census.q}-{census.group}-{census.checksum[:12]}.json'


def write_census(census, directory):
    """Write the census file and return its path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / census_filename(census)
    document = census_body(census)
    document['runtime'] = round(census.runtime_seconds, 3)
    path.write_text(
        json.dumps(document, ensure_ascii=False, sort_keys=True, indent=2),
        encoding='utf-8',
    )
    logger.info('wrote %s', path)
    return path


def read_census(path):
    document = json.loads(Path(path).read_text(encoding='utf-8'))
    if document.get('schema_version') != SCHEMA_VERSION:
        raise ValueError(
            f'unsupported census schema {document.get("schema_version")!r}'
        )
    labels = document['labels']
    return OrbitCensus(
        q=document['q'],
        modulus=document['modulus'],
        group=document['group'],
        counts={k: v['count'] for k, v in labels.items()},
        representatives={
            k: _rows_from_bits(v['representative']) for k, v in labels.items()
        },
        total=document['totals']['planes'],
        complete=document['complete'],
        distributions={
            tuple(int(x) for x in key.split(',')): count
            for key, count in document['distributions'].items()
        },
        sampled=document.get('sampled', {}),
        runtime_seconds=document.get('runtime', 0.0),
    )


def record_dict(plane, label, record):
    """JSON-ready classification of one plane."""
    F = plane.spec
    cubic = record.cubic
    data = {
        'q': F.q,
        'modulus': F.modulus_bits,
        'plane': [list(row) for row in plane.generators],
        'label': str(label),
        'point_od': record.point_od.as_list(),
        'nucleus_meet_dim': record.nucleus_meet_dim,
        'cubic': (
            dict(zip(CUBIC_NAMES, cubic.coefficients()))
            if cubic is not None else None
        ),
        'cubic_type': record.cubic_type.value if record.cubic_type else None,
        'rank_le2_collinear': record.rank_le2_collinear,
    }
    if record.inflexion_count is not None:
        data['inflexion_count'] = record.inflexion_count
    if record.line_od is not None:
        data['line_od'] = {
            str(label): record.line_od[label]
            for label in LineOrbitLabel if label in record.line_od
        }
    return data


def representative_rows(F, stabilizers=False):
    """One row per orbit valid at q: label, generators and distribution."""
    rows = []
    for label in valid_labels(F.q):
        plane = representative(label, F)
        row = {
            'label': str(label),
            'plane': format_plane(plane),
            'point_od': point_od(plane).as_list(),
        }
        if stabilizers:
            report = stabilizer_report(label, F)
            row['stabilizer_order'] = report.stabilizer_order
            row['orbit_size'] = report.orbit_size
        rows.append(row)
    return rows
