"""Global convexity verdicts: iterate the local test over all corners.

A closed, connected, bounded cellwise-flat surface is the boundary of a
convex body exactly when every corner passes the local test, so the driver
is a loop with fail-fast semantics plus an exhaustive diagnostic variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .complexes import CellId, StandardFormComplex, validate_standard, wheel_star
from .errors import InvalidInputError
from .local import Cone, FlatPass, Inconsistent, check_cone_convex, reduce_to_3d
from .normals import TraditionalFormComplex, to_standard

INCONSISTENT = "inconsistent"
NON_CONVEX_CONE = "non_convex_cone"
EDGE_COUNT_EXCEEDED = "edge_count_exceeded"


@dataclass(frozen=True)
class Convex:
    pass


@dataclass(frozen=True)
class NotConvex:
    reason: Literal["inconsistent", "non_convex_cone", "edge_count_exceeded"]
    witness: CellId | None = None


@dataclass(frozen=True)
class InvalidInput:
    reason: str


Verdict = Convex | NotConvex | InvalidInput


@dataclass(frozen=True)
class CheckOptions:
    """Tuning knobs for check_convexity.

    skip_validation trusts a complex validated earlier in the same pipeline;
    reverse_rims flips every wheel's rim direction (verdicts must not change,
    which the test suite exercises).
    """

    skip_validation: bool = False
    reverse_rims: bool = False


@dataclass(frozen=True)
class CornerResult:
    corner: CellId
    passed: bool
    kind: Literal["flat", "cone", "inconsistent", "non_convex_cone"]
    detail: str = ""


def _local_result(
    complex: StandardFormComplex, corner: CellId, reverse: bool
) -> CornerResult:
    star = wheel_star(complex, corner, reverse=reverse)
    verdict = reduce_to_3d(star)
    if isinstance(verdict, Inconsistent):
        return CornerResult(corner, False, "inconsistent", verdict.reason)
    if isinstance(verdict, FlatPass):
        return CornerResult(corner, True, "flat")
    assert isinstance(verdict, Cone)
    if check_cone_convex(verdict.realization):
        return CornerResult(corner, True, "cone")
    return CornerResult(corner, False, "non_convex_cone")


def check_convexity(
    complex: StandardFormComplex, options: CheckOptions | None = None
) -> Verdict:
    """Verdict for a standard-form complex; stops at the first failing corner.

    Corners are processed in index order, so the witness is deterministic and
    independent of any parallel scheduling a caller might add on top.
    """
    opts = options or CheckOptions()
    if not opts.skip_validation:
        try:
            validate_standard(complex)
        except InvalidInputError as exc:
            return InvalidInput(str(exc))
    for corner in complex.corners():
        result = _local_result(complex, corner, opts.reverse_rims)
        if not result.passed:
            reason = (
                INCONSISTENT if result.kind == "inconsistent" else NON_CONVEX_CONE
            )
            return NotConvex(reason=reason, witness=corner)
    return Convex()


def corners_checked(complex: StandardFormComplex, verdict: Verdict) -> int:
    """How many local tests the fail-fast driver ran for this verdict."""
    if isinstance(verdict, InvalidInput):
        return 0
    if isinstance(verdict, Convex):
        return complex.num_corners
    if verdict.witness is None:
        return 0
    return verdict.witness.index + 1


def corner_report(
    complex: StandardFormComplex, options: CheckOptions | None = None
) -> list[CornerResult]:
    """Exhaustive per-corner diagnostics, in corner index order.

    check_convexity returns Convex exactly when every entry passes.
    """
    opts = options or CheckOptions()
    if not opts.skip_validation:
        validate_standard(complex)
    return [
        _local_result(complex, corner, opts.reverse_rims)
        for corner in complex.corners()
    ]


def precheck_edge_count(t: TraditionalFormComplex) -> Verdict:
    """R^3 topology precheck: f_1 <= 3*f_0 - 6 for any 2-sphere.

    Surfaces that exceed the planar bound cannot be spheres and therefore
    cannot bound a convex body; this runs on counts alone, before any
    geometric predicate.
    """
    if t.n != 3:
        raise InvalidInputError("edge-count precheck applies to R^3 input only")
    f0 = len(t.vertices)
    if f0 < 4:
        raise InvalidInputError(f"closed surface needs >= 4 vertices, got {f0}")
    f1 = len(t.ridges)
    if f1 > 3 * f0 - 6:
        return NotConvex(reason=EDGE_COUNT_EXCEEDED, witness=None)
    return Convex()


def check_traditional(
    t: TraditionalFormComplex,
    options: CheckOptions | None = None,
    precheck: bool = True,
) -> tuple[Verdict, int]:
    """Full pipeline for traditional input: precheck, convert, check.

    Returns (verdict, corners_checked).  The precheck applies to R^3 input
    and short-circuits with zero corners checked.
    """
    if t.n == 3 and precheck:
        try:
            pre = precheck_edge_count(t)
        except InvalidInputError as exc:
            return InvalidInput(str(exc)), 0
        if isinstance(pre, NotConvex):
            return pre, 0
    try:
        std = to_standard(t)
    except InvalidInputError as exc:
        return InvalidInput(str(exc)), 0
    verdict = check_convexity(std, options)
    return verdict, corners_checked(std, verdict)
