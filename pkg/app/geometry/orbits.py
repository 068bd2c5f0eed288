"""
PGL(3,q) acting on planes of PG(5,q): group enumeration, orbit closure,
the exhaustive q=2 orbit table with its Sym7 fusion, stabilizers,
censuses and the counting checks built on them.
"""
import hashlib
import itertools
import logging
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm

from geometry import cubics
from geometry.conf import geometry_setting
from geometry.exceptions import (
    DependenceError,
    InternalInvariantError,
    UnsupportedFieldError,
)
from geometry.field import extension, field_for
from geometry.lines import LineOrbitLabel, representative_line
from geometry.parsing import format_plane
from geometry.planes import (
    ORDER,
    PlaneOrbitLabel,
    PlaneProbe,
    classify_plane,
    classify_probe,
    representative,
    valid_labels,
)
from geometry.projective import (
    Plane,
    ProjectivePoint,
    cross,
    det3,
    dot,
    mat_inv,
    mat_mul,
    mat_vec,
    normalize,
    pg2_points,
    quotient_lines,
    scale,
    transpose,
)
from geometry.veronese import (
    Collineation,
    apply,
    class_code,
    conic_of,
    pack,
    point_class_table,
    preimage,
    random_collineation,
    veronese_points,
    veronese_vector,
)

logger = logging.getLogger(__name__)

IRREDUCIBLE = cubics.FactorizationType.IRREDUCIBLE_CUBIC

SCHEMA_VERSION = 1
GROUPS = ('pgl3', 'sym7')


def pgl3_order(q):
    return q**3 * (q**3 - 1) * (q**2 - 1)


def pgl3_generators(F):
    """diag(xi,1,1), a transposition, a 3-cycle and the transvection I+E01."""
    xi = F.primitive
    return (
        Collineation(F, ((xi, 0, 0), (0, 1, 0), (0, 0, 1))),
        Collineation(F, ((0, 1, 0), (1, 0, 0), (0, 0, 1))),
        Collineation(F, ((0, 0, 1), (1, 0, 0), (0, 1, 0))),
        Collineation(F, ((1, 1, 0), (0, 1, 0), (0, 0, 1))),
    )


@lru_cache(maxsize=None)
def _nonzero_vectors(F):
    return tuple(
        v for v in itertools.product(range(F.q), repeat=3) if any(v)
    )


def iter_pgl3(F):
    """Every element of PGL(3,q) once; first rows are normalized."""
    vectors = _nonzero_vectors(F)
    for r0 in pg2_points(F):
        for r1 in vectors:
            k = cross(F, r0, r1)
            if not any(k):
                continue
            for r2 in vectors:
                if dot(F, k, r2):
                    yield Collineation(F, (r0, r1, tuple(r2)))


class UnionFind:
    def __init__(self, X):
        self.parent = {x: x for x in X}
        self.rank = {x: 0 for x in X}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self):
        groups = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def orbit_of(flat, generators=None):
    """Closure of a line or plane under the group generated by generators."""
    generators = generators or pgl3_generators(flat.spec)
    seen = {flat.key: flat}
    queue = deque([flat])
    while queue:
        X = queue.popleft()
        for g in generators:
            Y = apply(g, X)
            if Y.key not in seen:
                seen[Y.key] = Y
                queue.append(Y)
    return list(seen.values())


@lru_cache(maxsize=None)
def q2_orbit_table():
    """Plane key -> (label, plane) for every plane of PG(5,2) meeting V."""
    F = field_for(2)
    group = list(iter_pgl3(F))
    table = {}
    for label in valid_labels(2):
        rep = representative(label, F)
        for g in group:
            image = apply(g, rep)
            known, _ = table.setdefault(image.key, (label, image))
            if known is not label:
                raise InternalInvariantError(
                    f'{label} and {known} share a plane', record=image,
                )
    logger.info('q=2 orbit table: %d planes', len(table))
    return table


def q2_label(plane):
    entry = q2_orbit_table().get(plane.key)
    if entry is None:
        raise InternalInvariantError(
            'plane meets V but is missing from the q=2 orbit table',
            record=plane,
        )
    return entry[0]


def _frame_maps(F):
    """
    Linear maps of PG(5,2) permuting the seven points of V(F_2) by a
    transposition and by a 7-cycle; the seven points sum to zero.
    """
    points = veronese_points(F)
    total = [0] * 6
    for v in points:
        total = [a ^ b for a, b in zip(total, v)]
    if any(total):
        raise InternalInvariantError('points of V(F_2) do not form a frame')
    basis_inv = mat_inv(F, transpose(points[:6]))
    maps = []
    for sigma in ((1, 0, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6, 0)):
        images = transpose([points[sigma[i]] for i in range(6)])
        maps.append(mat_mul(F, images, basis_inv))
    return maps


def fused_name(labels):
    return '='.join(str(x) for x in sorted(labels, key=ORDER.index))


@lru_cache(maxsize=None)
def sym7_fusion():
    """PGL(3,2) label -> name of its Sym7 class, e.g. 'Σ1=Σ2'."""
    F = field_for(2)
    table = q2_orbit_table()
    uf = UnionFind(table)
    for key, (_, plane) in table.items():
        for M in _frame_maps(F):
            image = Plane(F, [mat_vec(F, M, g) for g in plane.generators])
            if image.key not in table:
                raise InternalInvariantError(
                    'frame permutation leaves the planes meeting V',
                    record=image,
                )
            uf.union(key, image.key)
    fusion = {}
    for members in uf.classes():
        labels = {table[key][0] for key in members}
        for label in labels:
            fusion[label] = fused_name(labels)
    logger.info('Sym7 fusion: %d classes', len(set(fusion.values())))
    return fusion


def _unit(i):
    v = [0, 0, 0]
    v[i] = 1
    return tuple(v)


def _completion(F, p):
    """Invertible matrix whose first column is p."""
    for j, k in ((1, 2), (0, 2), (0, 1)):
        A = transpose((tuple(p), _unit(j), _unit(k)))
        if det3(F, A):
            return A
    raise InternalInvariantError(f'cannot complete {p} to a basis')


@lru_cache(maxsize=None)
def _point_stabilizer(F):
    """Matrices [[1,a,b],[0,B]] with B in GL(2,q): they fix e0."""
    mats = []
    q = F.q
    for a00, a01, a10, a11 in itertools.product(range(q), repeat=4):
        if not F.mul(a00, a11) ^ F.mul(a01, a10):
            continue
        for a, b in itertools.product(range(q), repeat=2):
            mats.append(((1, a, b), (0, a00, a01), (0, a10, a11)))
    return tuple(mats)


def _anchored(F, anchor, targets):
    """Elements g with g(anchor) in targets, as 3x3 matrices."""
    back = mat_inv(F, _completion(F, anchor))
    tail = [mat_mul(F, S, back) for S in _point_stabilizer(F)]
    for r in targets:
        head = _completion(F, r)
        for T in tail:
            yield mat_mul(F, head, T)


def _codes_of(flat):
    F = flat.spec
    table = point_class_table(F)
    out = []
    for v in flat.vectors():
        code = table[pack(F, v)] if table is not None else class_code(F, v)
        out.append((v, code))
    return out


def _candidates(flat):
    """Group elements that may stabilize flat, anchored where possible."""
    F = flat.spec
    coded = _codes_of(flat)
    rank1 = [preimage(F, v) for v, code in coded if code == 0]
    if rank1:
        return _anchored(F, rank1[0], rank1), set(rank1)
    rank2 = [v for v, code in coded if code in (1, 2)]
    if rank2:
        duals = sorted({
            conic_of(ProjectivePoint.of(F, v)).line for v in rank2
        })
        return (
            transpose(mat_inv(F, h))
            for h in _anchored(F, duals[0], duals)
        ), None
    if F.q > 4:
        raise UnsupportedFieldError(
            'stabilizers without rank-1 or rank-2 anchors need q <= 4'
        )
    return (g.A for g in iter_pgl3(F)), None


def stabilizer_elements(flat):
    F = flat.spec
    points = frozenset(flat.vectors())
    candidates, rank1 = _candidates(flat)
    for A in candidates:
        g = Collineation(F, A)
        if rank1 is not None and any(
            g.apply_pg2(u) not in rank1 for u in rank1
        ):
            continue
        if all(
            normalize(F, g.apply_vector(v)) in points
            for v in flat.canonical
        ):
            yield g


def stabilizer_order(flat):
    return sum(1 for _ in stabilizer_elements(flat))


@dataclass(frozen=True)
class StabilizerReport:
    label: str
    representative: object
    stabilizer_order: int
    orbit_size: int


def stabilizer_report(label, F):
    rep = (
        representative_line(label, F)
        if isinstance(label, LineOrbitLabel)
        else representative(label, F)
    )
    order = stabilizer_order(rep)
    group = pgl3_order(F.q)
    if group % order:
        raise InternalInvariantError(
            f'stabilizer of {label} has order {order} not dividing {group}'
        )
    return StabilizerReport(str(label), rep, order, group // order)


@dataclass
class ShardResult:
    """Tallies of one census shard; merging is order independent."""
    counts: Counter = field(default_factory=Counter)
    first: dict = field(default_factory=dict)
    distributions: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)
    total: int = 0

    def add(self, order, plane, label, od):
        self.total += 1
        self.counts[label] += 1
        rows = plane.canonical
        if label not in self.first or order < self.first[label][0]:
            self.first[label] = (order, rows)
        key = (od.r1, od.r2, od.r3)
        self.distributions[key] += 1
        if key not in self.witnesses or order < self.witnesses[key][0]:
            self.witnesses[key] = (order, rows)

    def merge(self, other):
        self.total += other.total
        self.counts.update(other.counts)
        self.distributions.update(other.distributions)
        for mine, theirs in (
            (self.first, other.first), (self.witnesses, other.witnesses),
        ):
            for key, value in theirs.items():
                if key not in mine or value[0] < mine[key][0]:
                    mine[key] = value
        return self


def _unpack(F, packed):
    mask = F.q - 1
    return tuple((packed >> (F.h * j)) & mask for j in range(6))


def _scaled(F, v):
    return [pack(F, scale(F, c, v)) for c in range(F.q)]


def _census_anchor(task):
    """Classify every plane through nu(anchor) whose owner is anchor."""
    h, modulus, anchor, owners = task
    F = field_for(h=h, modulus=modulus)
    table = point_class_table(F)
    nu = veronese_points(F)
    index = {v: i for i, v in enumerate(nu)}
    params = pg2_points(F)
    p = nu[anchor]
    pivot = next(i for i, x in enumerate(p) if x)
    sp0 = _scaled(F, p)

    result = ShardResult()
    for j, (a, b) in enumerate(quotient_lines(F, pivot)):
        sp1, sp2 = _scaled(F, a), _scaled(F, b)
        packed = [sp0[c0] ^ sp1[c1] ^ sp2[c2] for c0, c1, c2 in params]
        codes = [table[x] for x in packed]

        owner = anchor
        for x, code in zip(packed, codes):
            if code == 0:
                i = index[normalize(F, _unpack(F, x))]
                if i < owner and (owners is None or i in owners):
                    owner = i
                    break
        if owner != anchor:
            continue

        plane = Plane(F, (p, a, b))
        probe = PlaneProbe(plane, codes)
        try:
            label, _ = classify_probe(probe)
        except InternalInvariantError as exc:
            raise InternalInvariantError(
                f'{exc} [plane {format_plane(plane)}]', record=exc.record,
            ) from exc
        result.add((anchor, j), plane, label, probe.point_od)
    return result


def _random_planes(task):
    """Classify random planes; planes without rank-1 points are skipped."""
    h, modulus, count, seed = task
    F = field_for(h=h, modulus=modulus)
    rng = np.random.default_rng(seed)
    result = ShardResult()
    skipped = 0
    for n in range(count):
        rows = [tuple(int(x) for x in r) for r in rng.integers(0, F.q, (3, 6))]
        try:
            plane = Plane(F, rows)
        except DependenceError:
            continue
        probe = PlaneProbe(plane)
        if probe.point_od.r1 == 0:
            skipped += 1
            continue
        label, _ = classify_probe(probe)
        result.add((n,), plane, label, probe.point_od)
    logger.debug('random planes: %d without rank-1 points', skipped)
    return result


def _run(func, tasks, shards, progress, desc):
    bar = dict(total=len(tasks), disable=not progress, desc=desc)
    if shards <= 1:
        return [func(t) for t in tqdm(tasks, **bar)]
    with Pool(shards) as pool:
        return list(tqdm(pool.imap(func, tasks), **bar))


@dataclass
class OrbitCensus:
    q: int
    modulus: str
    group: str
    counts: dict
    representatives: dict
    total: int
    complete: bool
    distributions: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    sampled: dict = field(default_factory=dict)
    runtime_seconds: float = 0.0

    @property
    def checksum(self):
        config = f'{self.q}|{self.modulus}|{self.group}'
        return hashlib.sha256(config.encode()).hexdigest()

    def labels(self):
        return list(self.counts)


def census(F, group='pgl3', shards=None, full=True, anchors=3, samples=0,
           seed=None, progress=None):
    """
    Classify planes meeting V(F_q).

    With full=True every such plane is enumerated once: the planes through
    nu(i) are taken from the lines of the quotient PG(4,q) and a plane is
    kept by the smallest index of its rank-1 points. Otherwise only the
    planes through the first `anchors` Veronese points are enumerated and
    `samples` random planes are classified on top.
    """
    if group not in GROUPS:
        raise UnsupportedFieldError(f'unknown group {group!r}')
    if group == 'sym7' and F.q != 2:
        raise UnsupportedFieldError('the Sym7 fusion exists only at q=2')
    if point_class_table(F) is None:
        raise UnsupportedFieldError('censuses need q <= 8')

    shards = shards or geometry_setting('SHARDS')
    progress = geometry_setting('PROGRESS') if progress is None else progress
    seed = geometry_setting('SEED') if seed is None else seed
    start = time.monotonic()

    n = F.q * F.q + F.q + 1
    ids = list(range(n)) if full else list(range(min(anchors, n)))
    owners = None if full else frozenset(ids)
    tasks = [(F.h, F.modulus, i, owners) for i in ids]
    logger.info(
        'census q=%d group=%s: %d anchors on %d shards',
        F.q, group, len(tasks), shards,
    )
    merged = ShardResult()
    for result in _run(_census_anchor, tasks, shards, progress, 'anchors'):
        merged.merge(result)

    sampled = ShardResult()
    if samples:
        chunks = max(shards, 1)
        sizes = [samples // chunks + (k < samples % chunks)
                 for k in range(chunks)]
        tasks = [(F.h, F.modulus, size, seed + k)
                 for k, size in enumerate(sizes) if size]
        for result in _run(_random_planes, tasks, shards, progress, 'samples'):
            sampled.merge(result)

    ordered = [label for label in ORDER if label in merged.counts]
    counts = {str(label): merged.counts[label] for label in ordered}
    reps = {str(label): merged.first[label][1] for label in ordered}
    if group == 'sym7':
        counts, reps = _fuse(ordered, merged)

    result = OrbitCensus(
        q=F.q,
        modulus=F.modulus_bits,
        group=group,
        counts=counts,
        representatives=reps,
        total=merged.total,
        complete=full,
        distributions=dict(sorted(merged.distributions.items())),
        witnesses={k: v[1] for k, v in sorted(merged.witnesses.items())},
        sampled={
            str(label): sampled.counts[label]
            for label in ORDER if label in sampled.counts
        },
        runtime_seconds=time.monotonic() - start,
    )
    logger.info(
        'census q=%d: %d planes in %d classes (%.1fs)',
        F.q, result.total, len(counts), result.runtime_seconds,
    )
    return result


def _fuse(ordered, merged):
    fusion = sym7_fusion()
    counts, reps = {}, {}
    for label in ordered:
        name = fusion[label]
        if name not in counts:
            counts[name] = 0
            reps[name] = merged.first[label][1]
        counts[name] += merged.counts[label]
    return counts, reps


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)


def forbidden_distribution(q, r1, r2, r3):
    """[1,0,q^2+q] and [2,r2<q,r3] do not occur."""
    return (r1 == 1 and r2 == 0) or (r1 == 2 and r2 < q)


def verify_nonexistence(q, distributions, witnesses=None):
    witnesses = witnesses or {}
    violations = []
    for (r1, r2, r3), count in distributions.items():
        if forbidden_distribution(q, r1, r2, r3):
            violations.append({
                'distribution': [r1, r2, r3],
                'count': count,
                'witness': witnesses.get((r1, r2, r3)),
            })
    return CheckResult('nonexistence', not violations, {
        'violations': violations,
    })


def bijection_pairing(check, h):
    """
    (line orbit, plane orbit, extension degree) of a bijection check.

    The plane with one rational inflexion pairs with o15 over GF(q^2),
    the one with none with o17 over GF(q^3); which of the two is Σ12
    depends on the parity of h.
    """
    S = PlaneOrbitLabel
    Lo = LineOrbitLabel
    one = S.S12 if h % 2 == 0 else S.S13
    pairings = {
        'sigma14-bijection': (Lo.O14, S.S14, 1),
        'sigma12-bijection': (
            (Lo.O15, S.S12, 2) if one is S.S12 else (Lo.O17, S.S12, 3)
        ),
        'sigma13-bijection': (
            (Lo.O15, S.S13, 2) if one is S.S13 else (Lo.O17, S.S13, 3)
        ),
    }
    return pairings[check]


def planes_on_line(L):
    """The distinct planes <L, nu(u)> over u in PG(2,q) with nu(u) off L."""
    F = L.spec
    seen = {}
    for u in pg2_points(F):
        y = veronese_vector(F, u)
        if L.contains(y):
            continue
        plane = Plane(F, (*L.generators, y))
        seen.setdefault(plane.key, plane)
    return list(seen.values())


def inflexions_on(plane, degree):
    """Inflexions of the plane's cubic on the parameter line z = 0."""
    C = cubics.cubic_of_plane(plane)
    if C.is_zero() or not C.a012:
        return 0
    embedding = extension(plane.spec, degree) if degree > 1 else None
    return len(cubics.inflexions_on_line(C, (1, 0, 0), (0, 1, 0), embedding))


def _plane_orbit_count(F, label, census_result):
    """Census count of a plane orbit, else |PGL(3,q)| / |stabilizer|."""
    done = census_result is not None and census_result.complete
    if done and census_result.group == 'pgl3':
        return census_result.counts.get(str(label), 0)
    return stabilizer_report(label, F).orbit_size


def verify_bijections(F, check, samples=0, seed=None, exhaustive=False,
                      census_result=None, progress=None):
    """
    Every tested line of the paired orbit lies in exactly one plane with
    a single rank-1 point whose three inflexions lie on it, and that plane
    has the paired label.

    With exhaustive=True the whole line orbit is tested and its size must
    equal the size of the plane orbit.
    """
    line_label, plane_label, degree = bijection_pairing(check, F.h)
    if plane_label not in valid_labels(F.q):
        raise UnsupportedFieldError(f'{plane_label} does not exist at q={F.q}')
    seed = geometry_setting('SEED') if seed is None else seed
    progress = geometry_setting('PROGRESS') if progress is None else progress
    rng = np.random.default_rng(seed)

    base = representative_line(line_label, F)
    if exhaustive:
        lines = orbit_of(base)
    else:
        lines = [base] + [
            apply(random_collineation(F, rng), base) for _ in range(samples)
        ]
    failures = []
    for L in tqdm(lines, desc=check, disable=not progress):
        matches = []
        for plane in planes_on_line(L):
            probe = PlaneProbe(plane)
            if probe.point_od.r1 != 1:
                continue
            # every point of a line component passes the Hessian test
            if probe.factorization.kind is not IRREDUCIBLE:
                continue
            if inflexions_on(plane, degree) == 3:
                matches.append(plane)
        labels = [str(classify_plane(p)) for p in matches]
        if labels != [str(plane_label)]:
            failures.append({
                'line': [list(r) for r in L.canonical],
                'planes': [format_plane(p) for p in matches],
                'labels': labels,
            })

    details = {
        'line_orbit': str(line_label),
        'plane_orbit': str(plane_label),
        'extension_degree': degree,
        'lines': len(lines),
        'failures': failures[:20],
    }
    passed = not failures
    if exhaustive:
        planes = _plane_orbit_count(F, plane_label, census_result)
        details['plane_orbit_size'] = planes
        passed &= planes == len(lines)
    logger.info(
        '%s at q=%d: %d lines, %d failures', check, F.q, len(lines),
        len(failures),
    )
    return CheckResult(check, passed, details)
