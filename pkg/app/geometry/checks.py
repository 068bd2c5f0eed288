"""
Named verification checks run by the verify command and the API.
"""
import logging

from geometry import cubics
from geometry.exceptions import (
    GeometryError,
    UnsupportedFieldError,
)
from geometry.field import (
    admissible_scalars,
    count_cubic_roots_depressed,
    solve_quadratic,
)
from geometry.lines import point_od
from geometry.orbits import (
    CheckResult,
    census,
    pgl3_order,
    stabilizer_order,
    verify_bijections,
    verify_nonexistence,
)
from geometry.planes import (
    PlaneOrbitLabel,
    classify_plane,
    hyperplane_od,
    pi_c,
    plane_ods,
    representative,
    valid_labels,
)

logger = logging.getLogger(__name__)


def check_table1(F, **options):
    rows = {}
    passed = True
    expected = plane_ods(F.q) if F.q > 2 else {}
    for label in valid_labels(F.q):
        plane = representative(label, F)
        got = classify_plane(plane)
        od = point_od(plane)
        ok = got is label and (label not in expected or od == expected[label])
        passed &= ok
        rows[str(label)] = {
            'classified': str(got),
            'point_od': od.as_list(),
            'expected_od': (
                expected[label].as_list() if label in expected else None
            ),
            'passed': ok,
        }
    return CheckResult('table1', passed, rows)


def _census_for(F, options):
    result = options.get('census')
    if result is None:
        if F.q > 4:
            raise UnsupportedFieldError('exhaustive checks need q <= 4')
        result = census(F, shards=options.get('shards'))
    return result


def check_nonexistence(F, **options):
    result = _census_for(F, options)
    return verify_nonexistence(F.q, result.distributions, result.witnesses)


def check_orbit_stabilizer(F, **options):
    result = _census_for(F, options)
    group = pgl3_order(F.q)
    rows = {}
    for label in valid_labels(F.q):
        count = result.counts.get(str(label), 0)
        order = stabilizer_order(representative(label, F))
        rows[str(label)] = {
            'count': count,
            'stabilizer': order,
            'product': count * order,
        }
    passed = all(row['product'] == group for row in rows.values())
    return CheckResult('orbit-stabilizer', passed, {
        'group_order': group, 'labels': rows,
    })


def check_sigma6_hyperplanes(F, **options):
    q = F.q
    od = hyperplane_od(representative(PlaneOrbitLabel.S6, F))
    expected = [0, q + 1, 1, q * q - 1]
    return CheckResult('sigma6-hyperplanes', od == expected, {
        'hyperplane_od': od, 'expected': expected,
    })


def expected_inflexions(F, c):
    """0, 1 or 3 inflexions of the cubic of pi_c, from c alone."""
    inv = F.inv(c)
    if F.trace(c) != F.trace(1):
        return 1
    if F.q != 4 and inv in admissible_scalars(F):
        return 3
    return 0


def check_inflexion_trichotomy(F, **options):
    if F.q < 8:
        raise UnsupportedFieldError('the trichotomy sweep needs q >= 8')
    counts = {0: 0, 1: 0, 3: 0}
    mismatches = []
    for c in range(1, F.q):
        C = cubics.cubic_of_plane(pi_c(F, c))
        got = len(cubics.inflexion_points(C))
        want = expected_inflexions(F, c)
        if got != want:
            mismatches.append({'c': c, 'inflexions': got, 'expected': want})
        counts[got] = counts.get(got, 0) + 1
    admissible = len(admissible_scalars(F))
    bound = (F.q - 2) // 6
    return CheckResult(
        'inflexion-trichotomy',
        not mismatches
        and admissible == bound
        and sorted(k for k, v in counts.items() if v) == [0, 1, 3],
        {
            'counts': {str(k): v for k, v in counts.items()},
            'admissible': admissible,
            'expected_admissible': bound,
            'mismatches': mismatches,
        },
    )


def _brute_roots(F, coeffs):
    roots = []
    for x in range(F.q):
        value = 0
        for c in coeffs:
            value = F.mul(value, x) ^ c
        if not value:
            roots.append(x)
    return roots


def check_solvers(F, **options):
    mismatches = []
    # every leading coefficient up to q=8, then 1 and a primitive element
    alphas = range(1, F.q) if F.q <= 8 else (1, F.primitive)
    for a in alphas:
        for b in range(F.q):
            for c in range(F.q):
                got = [r.bits for r in solve_quadratic(
                    F.element(a), F.element(b), F.element(c)
                )]
                want = _brute_roots(F, [a, b, c])
                if sorted(got) != sorted(set(want)):
                    mismatches.append({
                        'quadratic': [a, b, c], 'roots': got,
                    })
    if F.q > 2:
        for a in range(1, F.q):
            count, _ = count_cubic_roots_depressed(F.element(a))
            if count != len(_brute_roots(F, [1, 0, 1, a])):
                mismatches.append({'depressed_cubic': a, 'count': count})
    return CheckResult('solvers', not mismatches, {
        'mismatches': mismatches[:20],
    })


def _bijection(name):
    def check(F, **options):
        return verify_bijections(
            F, name, samples=options.get('samples', 0),
            seed=options.get('seed'),
            exhaustive=options.get('exhaustive', False),
            census_result=options.get('census'),
        )
    return check


CHECKS = {
    'table1': check_table1,
    'nonexistence': check_nonexistence,
    'sigma14-bijection': _bijection('sigma14-bijection'),
    'sigma12-bijection': _bijection('sigma12-bijection'),
    'sigma13-bijection': _bijection('sigma13-bijection'),
    'sigma6-hyperplanes': check_sigma6_hyperplanes,
    'orbit-stabilizer': check_orbit_stabilizer,
    'inflexion-trichotomy': check_inflexion_trichotomy,
    'solvers': check_solvers,
}


def run_check(name, F, **options):
    """Run one named check; unsupported fields are reported, not raised."""
    try:
        func = CHECKS[name]
    except KeyError:
        raise UnsupportedFieldError(f'unknown check {name!r}')
    try:
        return func(F, **options)
    except UnsupportedFieldError as exc:
        return CheckResult(name, False, {'error': str(exc)})
    except GeometryError as exc:
        logger.error('check %s failed: %s', name, exc)
        return CheckResult(name, False, {'error': str(exc)})
