from fractions import Fraction
from pathlib import Path

import pytest

from conftest import CUBE_OFF, cube_traditional, simplex_boundary
from plconvex import (
    Convex,
    InvalidInput,
    NotConvex,
    check_convexity,
    check_traditional,
    to_standard,
)
from plconvex.errors import InvalidInputError, ParseError
from plconvex.formats import (
    parse_off,
    parse_plc,
    serialize_off,
    serialize_plc,
)

DATA = Path(__file__).parent / "data"


def test_parse_off_cube():
    t = parse_off(CUBE_OFF)
    assert len(t.vertices) == 8
    assert len(t.facets) == 6
    assert len(t.ridges) == 12
    verdict, _ = check_traditional(t)
    assert isinstance(verdict, Convex)


def test_parse_off_rejects_bad_header():
    with pytest.raises(ParseError, match="OFF header"):
        parse_off("NOFF\n1 0 0\n0 0 0\n")


def test_parse_off_reports_line_numbers():
    bad = CUBE_OFF.replace("0 0 2", "0 0 x", 1)
    with pytest.raises(ParseError, match="line 7"):
        parse_off(bad)


def test_parse_off_edge_in_three_facets():
    text = CUBE_OFF.strip() + "\n3 0 1 5\n"
    text = text.replace("8 6 12", "8 7 12")
    t = parse_off(text)
    verdict, _ = check_traditional(t)
    assert isinstance(verdict, InvalidInput)


def test_parse_off_nonplanar_facet():
    bad = CUBE_OFF.replace("2 2 0", "2 2 1", 1)
    t = parse_off(bad)
    verdict, _ = check_traditional(t)
    assert isinstance(verdict, InvalidInput)
    assert "plane" in verdict.reason or "planar" in verdict.reason.lower()


def test_off_round_trip():
    t = parse_off(CUBE_OFF)
    again = parse_off(serialize_off(t))
    assert again.vertices == t.vertices
    assert again.facets == t.facets
    assert again.ridges == t.ridges


def test_off_exact_decimals_and_fractions():
    text = (
        "OFF\n4 4 6\n0 0 0\n1.5 0 0\n0 2/3 0\n0 0 1\n"
        "3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n"
    )
    t = parse_off(text)
    assert t.vertices[1] == (Fraction(3, 2), 0, 0)
    assert t.vertices[2] == (0, Fraction(2, 3), 0)
    # 2/3 has no finite decimal form: the OFF serializer must refuse.
    with pytest.raises(InvalidInputError, match="PLC"):
        serialize_off(t)


def test_plc_standard_round_trip():
    std = to_standard(cube_traditional())
    text = serialize_plc(std)
    again = parse_plc(text)
    assert serialize_plc(again) == text
    assert isinstance(check_convexity(again), Convex)


def test_plc_traditional_round_trip():
    t = simplex_boundary(4)
    text = serialize_plc(t)
    again = parse_plc(text)
    assert serialize_plc(again) == text
    assert again.vertices == t.vertices
    verdict, _ = check_traditional(again)
    assert isinstance(verdict, Convex)


def test_golden_cube_standard_file():
    # Frozen output of the normal-derivation run on the canonical cube.
    text = (DATA / "cube_standard.plc").read_text()
    std = parse_plc(text)
    assert isinstance(check_convexity(std), Convex)
    assert serialize_plc(std) == text


def test_plc_missing_normal_rejected():
    std = to_standard(cube_traditional())
    text = serialize_plc(std)
    lines = [
        line for line in text.splitlines()
        if not line.startswith("normal facet 0 0 ")
    ]
    parsed = parse_plc("\n".join(lines))
    verdict = check_convexity(parsed)
    assert isinstance(verdict, InvalidInput)
    assert "missing facet normal" in verdict.reason


def test_plc_duplicate_normal_rejected():
    std = to_standard(cube_traditional())
    text = serialize_plc(std)
    dup = next(
        line for line in text.splitlines() if line.startswith("normal ridge")
    )
    with pytest.raises(ParseError, match="duplicate"):
        parse_plc(text + dup + "\n")


def test_plc_traditional_4simplex_verdict():
    text = serialize_plc(simplex_boundary(4))
    verdict, _ = check_traditional(parse_plc(text))
    assert isinstance(verdict, Convex)


def test_plc_rejects_bad_headers():
    with pytest.raises(ParseError, match="plc"):
        parse_plc("form standard\nn 3\n")
    with pytest.raises(ParseError, match="version"):
        parse_plc("plc 2\nform standard\nn 3\n")
    with pytest.raises(ParseError, match="unknown form"):
        parse_plc("plc 1\nform sideways\nn 3\n")
    with pytest.raises(ParseError, match="dimension"):
        parse_plc("plc 1\nform standard\nn 2\n")
    with pytest.raises(ParseError, match="unknown record"):
        parse_plc("plc 1\nform traditional\nn 3\nblob 0\n")


def test_plc_sparse_ids_rejected():
    with pytest.raises(ParseError, match="dense"):
        parse_plc("plc 1\nform traditional\nn 3\nvertex 1 0 0 0\n")


def test_check_equivalence_between_forms():
    # The PLC-standard serialization of a converted surface must give the
    # same verdict and witness as checking the traditional file directly.
    from plconvex.oracle import dent, gen_convex_surface

    t = gen_convex_surface(seed=77, n=3, num_points=12, coord_bound=60)
    for surface in (t, dent(t, 3, Fraction(3, 4))):
        direct, _ = check_traditional(surface)
        std = parse_plc(serialize_plc(to_standard(surface)))
        via_std = check_convexity(std)
        assert type(direct) is type(via_std)
        if isinstance(direct, NotConvex):
            assert direct.witness == via_std.witness
