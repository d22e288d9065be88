"""Exact rational linear algebra for the convexity checker.

Scalars are plain Python ints or fractions.Fraction; both are exact and mix
freely, and all routines here avoid division unless the result type demands
it, so integer inputs stay integers on the hot path.  Only the handful of
operations the checker actually needs live here: signs of 2- and 3-frames,
ranks up to 3, collinearity coefficients, and dot-product coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInPlane, ZeroVector

Scalar = int | Fraction
Vector = tuple[Scalar, ...]


def as_exact(x) -> Scalar:
    """Coerce to an exact scalar; Fractions with denominator 1 become ints."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Scalar:
    """Parse 'p/q', a decimal string, or an integer literal, exactly.

    Decimals convert as p/10^k; no binary floating point is involved.
    """
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        return as_exact(Fraction(int(num), int(den)))
    if "." in text or "e" in text or "E" in text:
        return as_exact(Fraction(text))
    return int(text)


def format_rational(x: Scalar) -> str:
    x = as_exact(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


def vec(coords) -> Vector:
    return tuple(as_exact(c) for c in coords)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vscale(c: Scalar, u: Vector) -> Vector:
    return tuple(as_exact(c * a) for a in u)


def dot(u: Vector, v: Vector) -> Scalar:
    return sum(a * b for a, b in zip(u, v, strict=True))


def is_zero(u: Vector) -> bool:
    return all(a == 0 for a in u)


def sign_det3(a: Vector, b: Vector, c: Vector) -> int:
    """Exact sign of det[a; b; c] for 3-vectors (rows in given order)."""
    if not (len(a) == len(b) == len(c) == 3):
        raise ValueError("sign_det3 requires 3-vectors")
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    return (det > 0) - (det < 0)


def collinearity_coefficient(v: Vector, w: Vector) -> Scalar | None:
    """Return lambda with w == lambda * v, or None if w is not a multiple.

    Raises ZeroVector for v == 0.
    """
    pivot = next((i for i, c in enumerate(v) if c != 0), None)
    if pivot is None:
        raise ZeroVector("collinearity against the zero vector")
    vp = v[pivot]
    wp = w[pivot]
    # Cross-multiplied comparison keeps everything division-free.
    for a, b in zip(v, w, strict=True):
        if a * wp != b * vp:
            return None
    return as_exact(Fraction(wp) / Fraction(vp))


def same_ray(v: Vector, w: Vector) -> bool:
    """True iff w = lambda * v with lambda > 0 (both nonzero)."""
    lam = collinearity_coefficient(v, w)
    return lam is not None and lam > 0


def opposite_ray(v: Vector, w: Vector) -> bool:
    """True iff w = lambda * v with lambda < 0."""
    lam = collinearity_coefficient(v, w)
    return lam is not None and lam < 0


def _reduce(v: Vector, echelon: list[tuple[Vector, int]]) -> Vector:
    # Fraction-free elimination against rows already in echelon form.
    for row, pivot in echelon:
        if v[pivot] != 0:
            rp, vp = row[pivot], v[pivot]
            v = tuple(a * rp - b * vp for a, b in zip(v, row, strict=True))
    return v


def rank_le3(vectors) -> tuple[int, tuple[Vector, ...]]:
    """Greedy rank of a vector list, capped at 4.

    Returns (rank, basis) where basis is the maximal independent subset in
    first-seen order.  Rank 4 means "spans more than 3 dimensions" and comes
    back without a basis.
    """
    basis: list[Vector] = []
    echelon: list[tuple[Vector, int]] = []
    for v in vectors:
        r = _reduce(v, echelon)
        pivot = next((i for i, c in enumerate(r) if c != 0), None)
        if pivot is None:
            continue
        basis.append(v)
        if len(basis) == 4:
            return 4, ()
        echelon.append((r, pivot))
    return len(basis), tuple(basis)


def in_span(v: Vector, basis) -> bool:
    echelon: list[tuple[Vector, int]] = []
    for b in basis:
        r = _reduce(b, echelon)
        pivot = next((i for i, c in enumerate(r) if c != 0), None)
        if pivot is not None:
            echelon.append((r, pivot))
    return is_zero(_reduce(v, echelon))


def coords_in_basis(v: Vector, e1: Vector, e2: Vector, e3: Vector) -> Vector:
    """Dot-product coordinate triple (e1.v, e2.v, e3.v).

    This is a Gram coordinate map, not an orthonormal projection: it is
    injective on span{e1,e2,e3} and preserves orientation signs there because
    the Gram matrix of an independent triple is positive definite.
    """
    return (as_exact(dot(e1, v)), as_exact(dot(e2, v)), as_exact(dot(e3, v)))


@dataclass(frozen=True)
class PlaneFrame:
    """An ordered pair of independent vectors fixing an oriented 2-subspace.

    Orientation signs of in-plane pairs are computed division-free through a
    nonsingular coordinate pair (pivot columns) found at construction.
    """

    e1: Vector
    e2: Vector

    def __post_init__(self):
        i = next((k for k, c in enumerate(self.e1) if c != 0), None)
        if i is None:
            raise ZeroVector("frame basis vector is zero")
        j = None
        for k in range(len(self.e1)):
            if k == i:
                continue
            if self.e1[i] * self.e2[k] - self.e1[k] * self.e2[i] != 0:
                j = k
                break
        if j is None:
            raise ValueError("frame basis vectors are linearly dependent")
        d = self.e1[i] * self.e2[j] - self.e1[j] * self.e2[i]
        object.__setattr__(self, "_pi", i)
        object.__setattr__(self, "_pj", j)
        object.__setattr__(self, "_psign", sign(d))

    def contains(self, v: Vector) -> bool:
        """Exact membership test for span{e1, e2}."""
        i, j = self._pi, self._pj
        d = self.e1[i] * self.e2[j] - self.e1[j] * self.e2[i]
        # Cramer numerators for v = alpha*e1 + beta*e2 on the pivot pair.
        alpha = v[i] * self.e2[j] - v[j] * self.e2[i]
        beta = self.e1[i] * v[j] - self.e1[j] * v[i]
        return all(
            v[k] * d == alpha * self.e1[k] + beta * self.e2[k]
            for k in range(len(v))
        )

    def orient(self, a: Vector, b: Vector) -> int:
        """Orientation sign of (a, b); caller guarantees both are in-plane."""
        i, j = self._pi, self._pj
        return sign(a[i] * b[j] - a[j] * b[i]) * self._psign

    def cross_value(self, a: Vector, b: Vector) -> Scalar:
        """Scaled in-plane cross product; its sign matches orient(a, b).

        Values differ from true frame-coordinate determinants by the fixed
        positive factor |pivot determinant|, so sums of these may be compared
        and signed consistently.
        """
        i, j = self._pi, self._pj
        return (a[i] * b[j] - a[j] * b[i]) * self._psign


def orient2(frame: PlaneFrame, a: Vector, b: Vector) -> int:
    """Sign of det of the coordinates of (a, b) in the frame's basis.

    Raises NotInPlane for vectors outside span(frame).
    """
    if not frame.contains(a):
        raise NotInPlane(f"vector {a} outside the frame plane")
    if not frame.contains(b):
        raise NotInPlane(f"vector {b} outside the frame plane")
    return frame.orient(a, b)
