"""Incidence poset of corners, ridges, and facets, plus wheel-star extraction.

The standard-form complex stores the three top dimensions of the face poset
together with one Euclidean inner normal per corner-ridge and corner-facet
incidence.  Geometry never enters this module beyond the normals' rank; all
structure checks are combinatorial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .exact import Vector, is_zero, rank_le3


@dataclass(frozen=True, order=True)
class CellId:
    dim: int
    index: int

    def __str__(self):
        return f"cell(dim={self.dim}, index={self.index})"


@dataclass(frozen=True)
class WheelStar:
    """A corner's star as a wheel: cyclically ordered rim of ridges and facets.

    rim_facets[i] is the facet joining rim_ridges[i] and rim_ridges[(i+1) % m];
    normals are attached in the same order.
    """

    corner: CellId
    rim_ridges: tuple[int, ...]
    rim_facets: tuple[int, ...]
    ridge_normals: tuple[Vector, ...]
    facet_normals: tuple[Vector, ...]

    @property
    def m(self) -> int:
        return len(self.rim_ridges)


@dataclass(frozen=True)
class FaceCounts:
    by_dim: dict[int, int]
    corner_ridge: int
    corner_facet: int

    def f(self, dim: int) -> int:
        return self.by_dim.get(dim, 0)


class StandardFormComplex:
    """P[n-3, n-2, n-1] with normals per corner-ridge/corner-facet incidence.

    Cells are addressed by (dim, index) with indices dense per dimension.
    Instances are immutable after construction except for the per-corner wheel
    cache, whose writes are idempotent and therefore safe under concurrency.
    """

    def __init__(
        self,
        n: int,
        num_corners: int,
        num_ridges: int,
        num_facets: int,
        corner_ridge_pairs,
        corner_facet_pairs,
        ridge_facet_pairs,
        ridge_normals: dict[tuple[int, int], Vector],
        facet_normals: dict[tuple[int, int], Vector],
    ):
        if n < 3:
            raise InvalidInputError(f"ambient dimension must be >= 3, got {n}")
        self.n = n
        self.num_corners = num_corners
        self.num_ridges = num_ridges
        self.num_facets = num_facets
        self.corner_ridges = [[] for _ in range(num_corners)]
        self.corner_facets = [[] for _ in range(num_corners)]
        self.ridge_facets = [[] for _ in range(num_ridges)]
        self._corner_facet_set: set[tuple[int, int]] = set()
        for c, r in corner_ridge_pairs:
            self._check_index(c, num_corners, "corner")
            self._check_index(r, num_ridges, "ridge")
            self.corner_ridges[c].append(r)
        for c, f in corner_facet_pairs:
            self._check_index(c, num_corners, "corner")
            self._check_index(f, num_facets, "facet")
            self.corner_facets[c].append(f)
            self._corner_facet_set.add((c, f))
        for r, f in ridge_facet_pairs:
            self._check_index(r, num_ridges, "ridge")
            self._check_index(f, num_facets, "facet")
            self.ridge_facets[r].append(f)
        self.ridge_normals = dict(ridge_normals)
        self.facet_normals = dict(facet_normals)
        self._wheel_cache: dict[tuple[int, bool], WheelStar] = {}

    @staticmethod
    def _check_index(i: int, count: int, kind: str) -> None:
        if not 0 <= i < count:
            raise InvalidInputError(f"{kind} index {i} out of range")

    # -- cell id helpers -------------------------------------------------

    @property
    def corner_dim(self) -> int:
        return self.n - 3

    def corner_id(self, index: int) -> CellId:
        return CellId(self.n - 3, index)

    def ridge_id(self, index: int) -> CellId:
        return CellId(self.n - 2, index)

    def facet_id(self, index: int) -> CellId:
        return CellId(self.n - 1, index)

    def corners(self):
        return (self.corner_id(i) for i in range(self.num_corners))


def validate_standard(complex: StandardFormComplex) -> None:
    """Check manifold-star structure and normal attachment; raise on failure.

    Valid means: every ridge bounds exactly two facets, the incidence relation
    is closed (a corner on a ridge is on the ridge's facets), every incidence
    carries exactly one nonzero normal and there are no stray normals, every
    corner's star walks as a single wheel with m >= 2, the normals at a corner
    span at most 3 dimensions, and the facet adjacency graph is connected.
    """
    cx = complex
    for r in range(cx.num_ridges):
        k = len(cx.ridge_facets[r])
        if k != 2:
            raise InvalidInputError(
                f"ridge {r} is incident to {k} facets, expected 2"
            )
        a, b = cx.ridge_facets[r]
        if a == b:
            raise InvalidInputError(f"ridge {r} lists facet {a} twice")

    want_rn = {(c, r) for c in range(cx.num_corners) for r in cx.corner_ridges[c]}
    if len(want_rn) != sum(len(rr) for rr in cx.corner_ridges):
        raise InvalidInputError("duplicate corner-ridge incidence pair")
    want_fn = {(c, f) for c in range(cx.num_corners) for f in cx.corner_facets[c]}
    if len(want_fn) != sum(len(ff) for ff in cx.corner_facets):
        raise InvalidInputError("duplicate corner-facet incidence pair")
    for key in cx.ridge_normals.keys() - want_rn:
        raise InvalidInputError(f"ridge normal without incidence: {key}")
    for key in want_rn - cx.ridge_normals.keys():
        raise InvalidInputError(f"missing ridge normal for incidence {key}")
    for key in cx.facet_normals.keys() - want_fn:
        raise InvalidInputError(f"facet normal without incidence: {key}")
    for key in want_fn - cx.facet_normals.keys():
        raise InvalidInputError(f"missing facet normal for incidence {key}")
    for key, v in cx.ridge_normals.items():
        if is_zero(v) or len(v) != cx.n:
            raise InvalidInputError(f"bad ridge normal at {key}")
    for key, v in cx.facet_normals.items():
        if is_zero(v) or len(v) != cx.n:
            raise InvalidInputError(f"bad facet normal at {key}")

    for c in range(cx.num_corners):
        star_facets = set(cx.corner_facets[c])
        for r in cx.corner_ridges[c]:
            for f in cx.ridge_facets[r]:
                if f not in star_facets:
                    raise InvalidInputError(
                        f"incidence not closed: corner {c} on ridge {r} "
                        f"but not on its facet {f}"
                    )
        _walk_wheel(cx, c)  # raises on multi-cycle / broken stars
        normals = [cx.ridge_normals[(c, r)] for r in cx.corner_ridges[c]]
        normals += [cx.facet_normals[(c, f)] for f in cx.corner_facets[c]]
        rank, _ = rank_le3(normals)
        if rank > 3:
            raise InvalidInputError(
                f"normals at corner {c} span more than 3 dimensions"
            )

    _check_connected(cx)


def _walk_wheel(cx: StandardFormComplex, c: int) -> tuple[list[int], list[int]]:
    """Walk the ridge-facet cycle of corner c's star; raise if not one cycle."""
    ridges = sorted(cx.corner_ridges[c])
    facets = sorted(set(cx.corner_facets[c]))
    m = len(ridges)
    if m < 2:
        raise InvalidInputError(f"corner {c} has {m} ridges, expected >= 2")
    if len(facets) != m:
        raise InvalidInputError(
            f"corner {c} star has {m} ridges but {len(facets)} facets"
        )
    facet_ridges = {f: [] for f in facets}
    ridge_star_facets = {r: [] for r in ridges}
    for r in ridges:
        for f in cx.ridge_facets[r]:
            facet_ridges[f].append(r)
            ridge_star_facets[r].append(f)
    for f, rr in facet_ridges.items():
        if len(rr) != 2:
            raise InvalidInputError(
                f"facet {f} meets corner {c}'s star in {len(rr)} ridges, "
                f"expected 2 (pinched or broken star)"
            )
    # Deterministic start and direction: lowest ridge, then its lower facet.
    r0 = ridges[0]
    f0 = min(ridge_star_facets[r0])
    rim_r, rim_f = [r0], [f0]
    r, f = r0, f0
    for _ in range(m - 1):
        a, b = facet_ridges[f]
        r = b if a == r else a
        if r == r0:
            raise InvalidInputError(
                f"corner {c} star closes after {len(rim_r)} ridges of {m} "
                f"(multiple cycles)"
            )
        rim_r.append(r)
        fa, fb = ridge_star_facets[r]
        f = fb if fa == f else fa
        rim_f.append(f)
    # The last facet must close the cycle back to r0.
    a, b = facet_ridges[rim_f[-1]]
    if {a, b} != {rim_r[-1], r0}:
        raise InvalidInputError(f"corner {c} star does not close into a cycle")
    return rim_r, rim_f


def wheel_star(
    complex: StandardFormComplex, corner: CellId, reverse: bool = False
) -> WheelStar:
    """The corner's star as a wheel with deterministic rim order.

    `reverse` flips the rim direction; verdicts downstream are required to be
    invariant under it (exercised by tests).  Results are cached per corner.
    """
    c = corner.index
    key = (c, reverse)
    cached = complex._wheel_cache.get(key)
    if cached is not None:
        return cached
    rim_r, rim_f = _walk_wheel(complex, c)
    if reverse:
        # Keep the start ridge, reverse the traversal: facet i must still join
        # rim ridges i and i+1.
        rim_r = [rim_r[0]] + rim_r[:0:-1]
        rim_f = rim_f[::-1]
    star = WheelStar(
        corner=corner,
        rim_ridges=tuple(rim_r),
        rim_facets=tuple(rim_f),
        ridge_normals=tuple(complex.ridge_normals[(c, r)] for r in rim_r),
        facet_normals=tuple(complex.facet_normals[(c, f)] for f in rim_f),
    )
    complex._wheel_cache[key] = star
    return star


def face_counts(complex: StandardFormComplex) -> FaceCounts:
    cx = complex
    return FaceCounts(
        by_dim={
            cx.n - 3: cx.num_corners,
            cx.n - 2: cx.num_ridges,
            cx.n - 1: cx.num_facets,
        },
        corner_ridge=sum(len(r) for r in cx.corner_ridges),
        corner_facet=sum(len(f) for f in cx.corner_facets),
    )


def _check_connected(cx: StandardFormComplex) -> None:
    if cx.num_facets == 0:
        raise InvalidInputError("complex has no facets")
    seen = [False] * cx.num_facets
    stack = [0]
    seen[0] = True
    adjacency = [[] for _ in range(cx.num_facets)]
    for r in range(cx.num_ridges):
        a, b = cx.ridge_facets[r]
        adjacency[a].append(b)
        adjacency[b].append(a)
    while stack:
        f = stack.pop()
        for g in adjacency[f]:
            if not seen[g]:
                seen[g] = True
                stack.append(g)
    if not all(seen):
        raise InvalidInputError(
            "facet adjacency graph is disconnected (two surfaces glued?)"
        )
