"""Brute-force convex-hull ground truth and instance generators.

Everything here is desk-scale and deliberately independent of the checker's
predicates: determinants, ranks, and projections are reimplemented locally
so that checker-oracle agreement in the tests is evidence, not tautology.

The only optimization is a vectorized int64 fast path for hyperplane
enumeration, guarded by proven magnitude bounds so it stays exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import GenerationFailed, NotFullDimensional, NotSimplicial
from .normals import (
    POLYGONAL,
    SIMPLICIAL,
    TraditionalFormComplex,
    validate_traditional,
)

Scalar = int | Fraction
Point = tuple[Scalar, ...]

# Largest |coordinate| per dimension for which every int64 intermediate in
# the vectorized path provably fits: side values are bounded by
# 2 * n * (n-1)! * (2B)^(n-1) * B < 2^63.
_INT64_COORD_LIMIT = {3: 500_000, 4: 12_000, 5: 4_500}


@dataclass(frozen=True)
class SupportSet:
    """Supporting hyperplanes of conv(points): dot(normal, x) >= offset holds
    weakly for every input point, and each hyperplane contains at least n
    affinely independent input points."""

    hyperplanes: tuple[tuple[Point, Scalar], ...]

    def __len__(self):
        return len(self.hyperplanes)


# ---------------------------------------------------------------------------
# Local exact arithmetic (kept separate from the checker's kernel on purpose)
# ---------------------------------------------------------------------------


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _dotp(u, v):
    return sum(a * b for a, b in zip(u, v))


def _det(rows) -> Scalar:
    d = len(rows)
    if d == 1:
        return rows[0][0]
    if d == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(d):
        a = rows[0][j]
        if a == 0:
            continue
        minor = [
            [rows[r][c] for c in range(d) if c != j] for r in range(1, d)
        ]
        total += (-1) ** j * a * _det(minor)
    return total


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < cols:
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][pivot_col] != 0), None
        )
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][pivot_col] != 0:
                f = Fraction(rows[r][pivot_col], pr[pivot_col])
                rows[r] = [x - f * y for x, y in zip(rows[r], pr)]
        rank += 1
        pivot_col += 1
    return rank


def _ortho_residual(x, basis):
    """x minus its orthogonal projection onto span(basis), exactly."""
    if not basis:
        return tuple(x)
    k = len(basis)
    gram = [[Fraction(_dotp(a, b)) for b in basis] for a in basis]
    rhs = [Fraction(_dotp(a, x)) for a in basis]
    for col in range(k):
        pivot = next(r for r in range(col, k) if gram[r][col] != 0)
        gram[col], gram[pivot] = gram[pivot], gram[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        for r in range(k):
            if r != col and gram[r][col] != 0:
                f = gram[r][col] / gram[col][col]
                gram[r] = [x_ - f * y_ for x_, y_ in zip(gram[r], gram[col])]
                rhs[r] -= f * rhs[col]
    lam = [rhs[i] / gram[i][i] for i in range(k)]
    out = list(x)
    for coeff, b in zip(lam, basis):
        out = [o - coeff * c for o, c in zip(out, b)]
    return tuple(out)


def _direction_basis_of(ids, coords):
    base = coords[ids[0]]
    basis = []
    for i in ids[1:]:
        d = _sub(coords[i], base)
        r = _ortho_residual(d, basis)
        if any(c != 0 for c in r):
            basis.append(d)
    return basis


def _collinear_coeff(v, w):
    pivot = next((i for i, c in enumerate(v) if c != 0), None)
    if pivot is None:
        raise ValueError("zero reference vector")
    for a, b in zip(v, w):
        if a * w[pivot] != b * v[pivot]:
            return None
    return Fraction(w[pivot]) / Fraction(v[pivot])


# ---------------------------------------------------------------------------
# Hull supports
# ---------------------------------------------------------------------------


def brute_hull_supports(points) -> SupportSet:
    """All supporting hyperplanes spanned by n-subsets of the input.

    Exponential by design; intended for at most a few dozen points with
    n <= 5.  Raises NotFullDimensional when the points do not span R^n.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        raise NotFullDimensional("no points")
    n = len(pts[0])
    if len(pts) < n + 1:
        raise NotFullDimensional(f"need at least {n + 1} points")
    diffs = [_sub(p, pts[0]) for p in pts[1:]]
    if _rank(diffs) != n:
        raise NotFullDimensional("points do not span the ambient space")

    all_int = all(isinstance(c, int) for p in pts for c in p)
    limit = _INT64_COORD_LIMIT.get(n)
    if all_int and limit and max(abs(c) for p in pts for c in p) <= limit:
        planes = _supports_int64(pts, n)
    else:
        planes = _supports_exact(pts, n)
    return SupportSet(hyperplanes=tuple(sorted(planes)))


def _normal_through(subset_pts, n):
    base = subset_pts[0]
    rows = [_sub(p, base) for p in subset_pts[1:]]
    normal = []
    for j in range(n):
        cols = [[row[c] for c in range(n) if c != j] for row in rows]
        normal.append((-1) ** j * _det(cols))
    return tuple(normal)


def _canonical_plane(normal, offset):
    from math import gcd

    nums = []
    dens = []
    for c in list(normal) + [offset]:
        f = Fraction(c)
        nums.append(f.numerator)
        dens.append(f.denominator)
    scale = 1
    for d in dens:
        scale = scale * d // gcd(scale, d)
    ints = [f * scale for f in
            (Fraction(c) for c in list(normal) + [offset])]
    ints = [int(v) for v in ints]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _supports_exact(pts, n):
    planes = set()
    for subset in combinations(range(len(pts)), n):
        normal = _normal_through([pts[i] for i in subset], n)
        if all(c == 0 for c in normal):
            continue
        offset = _dotp(normal, pts[subset[0]])
        lo = hi = 0
        ok = True
        for q in pts:
            s = _dotp(normal, q) - offset
            if s > 0:
                hi = 1
            elif s < 0:
                lo = -1
            if lo and hi:
                ok = False
                break
        if not ok:
            continue
        if lo:  # flip to the inner orientation: all sides >= 0
            normal = tuple(-c for c in normal)
            offset = -offset
        planes.add(_canonical_plane(normal, offset))
    return planes


def _np_det(a):
    d = a.shape[-1]
    if d == 1:
        return a[..., 0, 0]
    if d == 2:
        return a[..., 0, 0] * a[..., 1, 1] - a[..., 0, 1] * a[..., 1, 0]
    out = None
    for j in range(d):
        cols = [c for c in range(d) if c != j]
        term = ((-1) ** j) * a[..., 0, j] * _np_det(a[..., 1:, cols])
        out = term if out is None else out + term
    return out


def _supports_int64(pts, n):
    import numpy as np

    arr = np.array(pts, dtype=np.int64)
    k = len(pts)
    combos = np.array(list(combinations(range(k), n)), dtype=np.intp)
    base = arr[combos[:, 0]]
    diffs = arr[combos[:, 1:]] - base[:, None, :]
    normals = np.empty((len(combos), n), dtype=np.int64)
    for j in range(n):
        cols = [c for c in range(n) if c != j]
        normals[:, j] = ((-1) ** j) * _np_det(diffs[:, :, cols])
    nz = np.any(normals != 0, axis=1)
    normals, base = normals[nz], base[nz]
    offsets = np.einsum("sj,sj->s", normals, base)
    sides = normals @ arr.T - offsets[:, None]
    mins = sides.min(axis=1)
    maxs = sides.max(axis=1)
    keep = (mins >= 0) | (maxs <= 0)
    normals, offsets = normals[keep], offsets[keep]
    flip = maxs[keep] <= 0
    normals[flip] *= -1
    offsets[flip] *= -1
    g = np.gcd.reduce(
        np.concatenate([np.abs(normals), np.abs(offsets)[:, None]], axis=1),
        axis=1,
    )
    normals //= g[:, None]
    offsets //= g
    return {
        (tuple(int(c) for c in nrm), int(off))
        for nrm, off in zip(normals, offsets)
    }


# ---------------------------------------------------------------------------
# Surface-is-hull-boundary decision
# ---------------------------------------------------------------------------


def _support_point_sets(pts, supports):
    out = []
    for normal, offset in supports.hyperplanes:
        out.append(
            frozenset(
                i for i, p in enumerate(pts) if _dotp(normal, p) == offset
            )
        )
    return out


def _chart_drop(normal):
    drop = max(range(len(normal)), key=lambda i: abs(normal[i]))
    return drop


def _charted(p, drop):
    return tuple(c for i, c in enumerate(p) if i != drop)


def _simplex_chart_volume(ids, coords, drop):
    base = _charted(coords[ids[0]], drop)
    rows = [_sub(_charted(coords[i], drop), base) for i in ids[1:]]
    return abs(_det(rows))


def _lex_min(ids, coords):
    return min(ids, key=lambda i: coords[i])


def _proper_faces(ids, coords, dim):
    """Proper (dim-1)-faces of conv(ids) inside its own affine hull."""
    faces = set()
    if dim == 0:
        return faces
    for subset in combinations(ids, dim):
        basis = _direction_basis_of(list(subset), coords)
        if len(basis) != dim - 1:
            continue  # affinely dependent subset
        base = coords[subset[0]]
        on_face = []
        neg = pos = False
        ref = None
        sides = {}
        degenerate = False
        for q in ids:
            r = _ortho_residual(_sub(coords[q], base), basis)
            if all(c == 0 for c in r):
                on_face.append(q)
                continue
            if ref is None:
                ref = r
                sides[q] = 1
                continue
            lam = _collinear_coeff(ref, r)
            if lam is None:
                degenerate = True  # q leaves aff(ids): caller passed bad dim
                break
            sides[q] = 1 if lam > 0 else -1
        if degenerate:
            continue
        for s in sides.values():
            pos = pos or s > 0
            neg = neg or s < 0
        if pos and neg:
            continue
        if not sides:
            continue  # everything on the flat: not a proper face
        faces.add(frozenset(on_face))
    return faces


def _affine_dim(ids, coords):
    return len(_direction_basis_of(list(ids), coords))


def _triangulate_face(ids, coords, apex_rule):
    """Cone triangulation of conv(ids) into simplices of its own dimension.

    apex_rule "index" fans from the lowest id (valid when every id is a
    vertex, as in generated hull facets); "lex" fans from the coordinatewise
    smallest point, which is always a vertex.
    """
    ids = sorted(ids)
    dim = _affine_dim(ids, coords)
    if len(ids) == dim + 1:
        return [tuple(ids)]
    apex = ids[0] if apex_rule == "index" else _lex_min(ids, coords)
    simplices = []
    for face in _proper_faces(ids, coords, dim):
        if apex in face:
            continue
        for sub in _triangulate_face(face, coords, apex_rule):
            simplices.append((apex, *sub))
    return simplices


def _hull_chart_volume(ids, coords, drop):
    vol = 0
    for simplex in _triangulate_face(ids, coords, "lex"):
        vol += _simplex_chart_volume(list(simplex), coords, drop)
    return vol


def is_hull_boundary(t: TraditionalFormComplex) -> bool:
    """Does this simplicial surface embed onto the boundary of its vertex hull?

    True iff every vertex lies on the hull boundary, every facet lies inside
    a supporting hyperplane, and the facets assigned to each supporting
    hyperplane cover its hull facet exactly (certified by exact volume sums,
    which also rules out folds and double covers).
    """
    if not t.is_simplicial:
        raise NotSimplicial("hull-boundary oracle needs simplicial input")
    validate_traditional(t)
    pts = t.vertices
    supports = brute_hull_supports(pts)
    on_sets = _support_point_sets(pts, supports)

    covered = set()
    for s in on_sets:
        covered |= s
    if len(covered) != len(pts):
        return False  # some vertex is strictly inside the hull

    facet_sets = [frozenset(f) for f in t.facets]
    assignment = {}
    for fi, fset in enumerate(facet_sets):
        home = next(
            (si for si, s in enumerate(on_sets) if fset <= s), None
        )
        if home is None:
            return False  # facet not inside any supporting hyperplane
        assignment.setdefault(home, []).append(fi)

    for si, (normal, _offset) in enumerate(supports.hyperplanes):
        drop = _chart_drop(normal)
        hull_vol = _hull_chart_volume(on_sets[si], pts, drop)
        facet_vol = sum(
            _simplex_chart_volume(list(t.facets[fi]), pts, drop)
            for fi in assignment.get(si, [])
        )
        if facet_vol != hull_vol:
            return False
    return True


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _extreme_points(pts, supports):
    n = len(pts[0])
    on_sets = _support_point_sets(pts, supports)
    normals = [h[0] for h in supports.hyperplanes]
    extreme = []
    for i in range(len(pts)):
        mine = [normals[si] for si, s in enumerate(on_sets) if i in s]
        if len(mine) >= n and _rank(mine) == n:
            extreme.append(i)
    return extreme


def _assemble_complex(n, coords, facet_simplices) -> TraditionalFormComplex:
    used = sorted({v for f in facet_simplices for v in f})
    remap = {old: new for new, old in enumerate(used)}
    vertices = [coords[old] for old in used]
    facets = sorted(tuple(sorted(remap[v] for v in f)) for f in facet_simplices)
    ridge_map = {}
    corner_map = {}
    for f in facets:
        for sub in combinations(f, n - 1):
            ridge_map.setdefault(frozenset(sub), len(ridge_map))
        for sub in combinations(f, n - 2):
            corner_map.setdefault(frozenset(sub), len(corner_map))
    ridges = sorted(tuple(sorted(s)) for s in ridge_map)
    corners = sorted(tuple(sorted(s)) for s in corner_map)
    mode = POLYGONAL if n == 3 else SIMPLICIAL
    return TraditionalFormComplex(
        n=n,
        vertices=vertices,
        corners=corners,
        ridges=ridges,
        facets=facets,
        mode=mode,
    )


def gen_convex_surface(
    seed: int, n: int, num_points: int, coord_bound: int
) -> TraditionalFormComplex:
    """Deterministic simplicial hull boundary from seeded integer samples.

    Samples integer points in a box, keeps the extreme ones, and fan
    triangulates every supporting facet from its lowest-index vertex
    (recursively, so shared faces triangulate consistently).  The PRNG is
    Python's random.Random (Mersenne Twister) used through randrange only.
    """
    if n < 3:
        raise GenerationFailed("dimension must be >= 3")
    rng = random.Random(seed)
    for _attempt in range(64):
        raw = [
            tuple(rng.randrange(-coord_bound, coord_bound + 1) for _ in range(n))
            for _ in range(num_points)
        ]
        pts = list(dict.fromkeys(raw))
        if len(pts) < n + 1:
            continue
        diffs = [_sub(p, pts[0]) for p in pts[1:]]
        if _rank(diffs) != n:
            continue
        supports = brute_hull_supports(pts)
        extreme = set(_extreme_points(pts, supports))
        on_sets = _support_point_sets(pts, supports)
        facet_simplices = []
        for s in on_sets:
            facet_simplices.extend(
                _triangulate_face(sorted(s & extreme), pts, "index")
            )
        complex = _assemble_complex(n, pts, facet_simplices)
        counts = {}
        for f in complex.facets:
            for sub in combinations(f, n - 1):
                counts[sub] = counts.get(sub, 0) + 1
        if any(c != 2 for c in counts.values()):
            continue  # degenerate triangulation; resample
        return complex
    raise GenerationFailed(
        f"no full-dimensional sample after retries "
        f"(seed={seed}, n={n}, points={num_points}, bound={coord_bound})"
    )


def dent(
    t: TraditionalFormComplex, vertex: int, factor
) -> TraditionalFormComplex:
    """Move one vertex toward the centroid of the others; keep combinatorics.

    The target is the centroid of the remaining vertices, which lies strictly
    inside their hull, so factors approaching 1 always bury the vertex and
    break convexity at some incident corner.  factor 0 keeps the surface.
    """
    f = Fraction(factor)
    k = len(t.vertices)
    n = t.n
    v = t.vertices[vertex]
    centroid = tuple(
        Fraction(sum(w[i] for w in t.vertices) - v[i], k - 1) for i in range(n)
    )
    moved = tuple(c + f * (g - c) for c, g in zip(v, centroid))
    vertices = list(t.vertices)
    vertices[vertex] = moved
    return TraditionalFormComplex(
        n=t.n,
        vertices=vertices,
        corners=list(t.corners),
        ridges=list(t.ridges),
        facets=list(t.facets),
        mode=t.mode,
    )
