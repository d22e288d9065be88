import random
from fractions import Fraction

import pytest

from plconvex.errors import NotInPlane, ZeroVector
from plconvex.exact import (
    PlaneFrame,
    as_exact,
    collinearity_coefficient,
    coords_in_basis,
    format_rational,
    orient2,
    parse_rational,
    rank_le3,
    sign_det3,
)


def test_sign_det3_examples():
    assert sign_det3((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
    assert sign_det3((1, 0, 0), (0, 1, 0), (1, 1, 0)) == 0
    assert sign_det3((0, 1, 0), (1, 0, 0), (0, 0, 1)) == -1


def test_sign_det3_antisymmetry_and_scaling():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (
            tuple(rng.randrange(-5, 6) for _ in range(3)) for _ in range(3)
        )
        s = sign_det3(a, b, c)
        assert sign_det3(b, a, c) == -s
        assert sign_det3(a, c, b) == -s
        lam = Fraction(rng.randrange(1, 9), rng.randrange(1, 9))
        scaled = tuple(lam * x for x in a)
        assert sign_det3(scaled, b, c) == s


def test_orient2_examples():
    frame = PlaneFrame((1, 0, 0), (0, 1, 0))
    assert orient2(frame, (1, 0, 0), (0, 1, 0)) == 1
    assert orient2(frame, (1, 0, 0), (2, 0, 0)) == 0
    assert orient2(frame, (0, 1, 0), (1, 0, 0)) == -1


def test_orient2_not_in_plane():
    frame = PlaneFrame((1, 0, 0), (0, 1, 0))
    with pytest.raises(NotInPlane):
        orient2(frame, (1, 0, 1), (0, 1, 0))


def test_orient2_oblique_frame():
    # Frame orientation is the ordered basis itself, whatever the plane.
    frame = PlaneFrame((1, 1, 0, 2), (0, 1, 1, 0))
    assert orient2(frame, (1, 1, 0, 2), (0, 1, 1, 0)) == 1
    assert orient2(frame, (0, 1, 1, 0), (1, 1, 0, 2)) == -1
    assert orient2(frame, (1, 2, 1, 2), (2, 3, 1, 4)) == -1  # (e1+e2, 2e1+e2)


def test_rank_le3_examples():
    rank, basis = rank_le3([(1, 0, 0), (2, 0, 0)])
    assert rank == 1 and basis == ((1, 0, 0),)
    rank, basis = rank_le3([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert rank == 2 and basis == ((1, 0, 0), (0, 1, 0))
    assert rank_le3([]) == (0, ())


def test_rank_le3_caps_at_four():
    vecs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 0), (0, 0, 0, 1)]
    rank, basis = rank_le3(vecs)
    assert rank == 4
    assert basis == ()


def _gauss_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_rank_le3_matches_gaussian_oracle():
    rng = random.Random(11)
    for _ in range(300):
        h = rng.randrange(1, 7)
        w = rng.randrange(1, 7)
        rows = [tuple(rng.randrange(-3, 4) for _ in range(w)) for _ in range(h)]
        expect = min(_gauss_rank(rows), 4)
        assert rank_le3(rows)[0] == expect


def test_collinearity_coefficient():
    assert collinearity_coefficient((1, 2, 0), (2, 4, 0)) == 2
    assert collinearity_coefficient((1, 2, 0), (-1, -2, 0)) == -1
    assert collinearity_coefficient((1, 2, 0), (1, 0, 0)) is None
    with pytest.raises(ZeroVector):
        collinearity_coefficient((0, 0, 0), (1, 0, 0))


def test_coords_in_basis_examples():
    e = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert coords_in_basis((0, 0, 1), *e) == (0, 0, 1)
    assert coords_in_basis((1, 1, 0), *e) == (1, 1, 0)
    assert coords_in_basis(
        (1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    ) == (1, 0, 0)


def test_gram_coordinates_preserve_orientation():
    # Orientation of triples inside span(e1,e2,e3) survives the dot-product
    # coordinate map because the Gram matrix is positive definite.
    rng = random.Random(3)
    for _ in range(200):
        e = [tuple(rng.randrange(-4, 5) for _ in range(4)) for _ in range(3)]
        if rank_le3(e)[0] != 3:
            continue
        coeffs = [
            tuple(rng.randrange(-3, 4) for _ in range(3)) for _ in range(3)
        ]
        vectors = [
            tuple(
                sum(c[k] * e[k][i] for k in range(3)) for i in range(4)
            )
            for c in coeffs
        ]
        mapped = [coords_in_basis(v, *e) for v in vectors]
        # Reference orientation: determinant of the coefficient matrix.
        assert sign_det3(*mapped) == sign_det3(*coeffs)


def test_rational_parsing_round_trip():
    assert parse_rational("5") == 5
    assert parse_rational("-1.25") == Fraction(-5, 4)
    assert parse_rational("2/3") == Fraction(2, 3)
    assert as_exact(Fraction(4, 2)) == 2 and isinstance(as_exact(Fraction(4, 2)), int)
    for text in ["5", "-7", "2/3", "-11/4"]:
        assert format_rational(parse_rational(text)) == text
