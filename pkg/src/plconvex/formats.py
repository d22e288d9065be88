"""Surface file formats: OFF (R^3 polygonal) and PLC structured text.

OFF is the usual ASCII Object File Format restricted to what the checker
needs: a counts line, vertex rows, and facet rows with cyclic vertex order.
Vertex coordinates parse exactly; decimals are read as p/10^k and "p/q"
literals are accepted as a liberal extension.  The serializer only emits
plain OFF (integers or finite decimals) and refuses coordinates that have
no finite decimal form, pointing at PLC instead.

PLC is this project's structured-text format for both input forms in any
ambient dimension; the full grammar is documented in the README.
"""

from __future__ import annotations

import io
from fractions import Fraction

from .complexes import StandardFormComplex
from .errors import InvalidInputError, ParseError
from .exact import Scalar, Vector, as_exact, format_rational, parse_rational
from .normals import POLYGONAL, SIMPLICIAL, TraditionalFormComplex


# ---------------------------------------------------------------------------
# OFF
# ---------------------------------------------------------------------------


def parse_off(text: str) -> TraditionalFormComplex:
    """Parse an OFF document into an R^3 polygonal traditional complex.

    Edges are derived from consecutive facet-boundary pairs; every vertex
    becomes a corner.  Structural and geometric validation (manifold edges,
    exact facet planarity) happens in the traditional-form validator invoked
    by the conversion step; this parser only enforces the file syntax.
    """
    lines = text.splitlines()
    rows = [
        (i + 1, line.split("#", 1)[0].strip())
        for i, line in enumerate(lines)
    ]
    rows = [(ln, s) for ln, s in rows if s]
    if not rows:
        raise ParseError("empty OFF document")
    ln, header = rows[0]
    if header != "OFF":
        raise ParseError(f"expected OFF header, got {header!r}", ln)
    if len(rows) < 2:
        raise ParseError("missing counts line", ln)
    ln, counts = rows[1]
    parts = counts.split()
    if len(parts) != 3:
        raise ParseError("counts line must be 'V F E'", ln)
    try:
        nv, nf, _ne = (int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad counts line: {exc}", ln) from None
    body = rows[2:]
    if len(body) != nv + nf:
        raise ParseError(
            f"expected {nv} vertex and {nf} facet lines, got {len(body)}"
        )
    vertices: list[Vector] = []
    for ln, s in body[:nv]:
        parts = s.split()
        if len(parts) != 3:
            raise ParseError("vertex line needs 3 coordinates", ln)
        try:
            vertices.append(tuple(parse_rational(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate: {exc}", ln) from None
    facets: list[tuple[int, ...]] = []
    for ln, s in body[nv:]:
        parts = s.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError as exc:
            raise ParseError(f"bad facet line: {exc}", ln) from None
        if not nums or len(nums) != nums[0] + 1:
            raise ParseError("facet line must be 'k i1 ... ik'", ln)
        cycle = tuple(nums[1:])
        if nums[0] < 3:
            raise ParseError("facet needs at least 3 vertices", ln)
        for v in cycle:
            if not 0 <= v < nv:
                raise ParseError(f"facet vertex {v} out of range", ln)
        facets.append(cycle)
    edges = {}
    for cycle in facets:
        k = len(cycle)
        for i in range(k):
            a, b = cycle[i], cycle[(i + 1) % k]
            if a == b:
                raise ParseError(f"degenerate edge ({a},{b}) in a facet")
            edges.setdefault(frozenset((a, b)), len(edges))
    ridges = [None] * len(edges)
    for key, idx in edges.items():
        ridges[idx] = tuple(sorted(key))
    return TraditionalFormComplex(
        n=3,
        vertices=vertices,
        corners=[(v,) for v in range(nv)],
        ridges=ridges,
        facets=facets,
        mode=POLYGONAL,
    )


def _off_coord(x: Scalar) -> str:
    x = Fraction(as_exact(x))
    den = x.denominator
    k2 = k5 = 0
    while den % 2 == 0:
        den //= 2
        k2 += 1
    while den % 5 == 0:
        den //= 5
        k5 += 1
    if den != 1:
        raise InvalidInputError(
            f"coordinate {format_rational(x)} has no finite decimal form; "
            f"write this complex as PLC instead"
        )
    digits = max(k2, k5)
    if digits == 0:
        return str(x.numerator)
    scaled = x.numerator * 10**digits // x.denominator
    s = str(abs(scaled)).rjust(digits + 1, "0")
    body = f"{s[:-digits]}.{s[-digits:]}"
    return "-" + body if scaled < 0 else body


def serialize_off(t: TraditionalFormComplex) -> str:
    if t.n != 3 or t.mode != POLYGONAL:
        raise InvalidInputError("OFF output is limited to R^3 polygonal form")
    out = io.StringIO()
    out.write("OFF\n")
    out.write(f"{len(t.vertices)} {len(t.facets)} {len(t.ridges)}\n")
    for v in t.vertices:
        out.write(" ".join(_off_coord(c) for c in v) + "\n")
    for cycle in t.facets:
        out.write(" ".join(str(x) for x in (len(cycle), *cycle)) + "\n")
    return out.getvalue()


# ---------------------------------------------------------------------------
# PLC
# ---------------------------------------------------------------------------


def _plc_tokens(text: str):
    for i, raw in enumerate(text.splitlines()):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield i + 1, s.split()


def parse_plc(text: str) -> StandardFormComplex | TraditionalFormComplex:
    """Parse a PLC document into the declared in-memory form."""
    tokens = list(_plc_tokens(text))
    if not tokens or tokens[0][1][0] != "plc":
        raise ParseError("missing 'plc' header")
    ln, head = tokens[0]
    if len(head) != 2 or head[1] != "1":
        raise ParseError("unsupported plc version", ln)
    form = None
    n = None
    i = 1
    while i < len(tokens) and (form is None or n is None):
        ln, tok = tokens[i]
        if tok[0] == "form" and len(tok) == 2:
            form = tok[1]
        elif tok[0] == "n" and len(tok) == 2:
            n = int(tok[1])
        else:
            raise ParseError(f"expected form/n declarations, got {tok[0]!r}", ln)
        i += 1
    if form not in ("standard", "traditional"):
        raise ParseError(f"unknown form {form!r}")
    if n is None or n < 3:
        raise ParseError(f"bad ambient dimension {n!r}")
    body = tokens[i:]
    if form == "traditional":
        return _parse_plc_traditional(n, body)
    return _parse_plc_standard(n, body)


def _parse_plc_traditional(n, body) -> TraditionalFormComplex:
    vertices = {}
    cells = {"corner": {}, "ridge": {}, "facet": {}}
    for ln, tok in body:
        kind = tok[0]
        if kind == "vertex":
            if len(tok) != n + 2:
                raise ParseError(f"vertex line needs id + {n} coordinates", ln)
            vid = int(tok[1])
            if vid in vertices:
                raise ParseError(f"duplicate vertex id {vid}", ln)
            try:
                vertices[vid] = tuple(parse_rational(p) for p in tok[2:])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coordinate: {exc}", ln) from None
        elif kind in cells:
            idx = int(tok[1])
            if idx in cells[kind]:
                raise ParseError(f"duplicate {kind} id {idx}", ln)
            cells[kind][idx] = tuple(int(p) for p in tok[2:])
        else:
            raise ParseError(f"unknown record {kind!r}", ln)
    for name, table in (("vertex", vertices),) + tuple(cells.items()):
        if sorted(table) != list(range(len(table))):
            raise ParseError(f"{name} ids must be dense from 0")
    coords = [vertices[i] for i in range(len(vertices))]
    mode = POLYGONAL if n == 3 else SIMPLICIAL
    return TraditionalFormComplex(
        n=n,
        vertices=coords,
        corners=[cells["corner"][i] for i in range(len(cells["corner"]))],
        ridges=[cells["ridge"][i] for i in range(len(cells["ridge"]))],
        facets=[cells["facet"][i] for i in range(len(cells["facet"]))],
        mode=mode,
    )


def _parse_plc_standard(n, body) -> StandardFormComplex:
    counts = {}
    incidences = {"corner_ridge": [], "corner_facet": [], "ridge_facet": []}
    ridge_normals = {}
    facet_normals = {}
    for ln, tok in body:
        kind = tok[0]
        if kind in ("corners", "ridges", "facets"):
            if len(tok) != 2:
                raise ParseError(f"{kind} line needs one count", ln)
            counts[kind] = int(tok[1])
        elif kind == "incidence":
            if len(tok) != 4 or tok[1] not in (
                "corner_ridge",
                "corner_facet",
                "ridge_facet",
            ):
                raise ParseError("incidence line: kind id id", ln)
            incidences[tok[1]].append((int(tok[2]), int(tok[3])))
        elif kind == "normal":
            if len(tok) != 4 + n or tok[1] not in ("ridge", "facet"):
                raise ParseError(
                    f"normal line: ridge|facet cid id + {n} coordinates", ln
                )
            key = (int(tok[2]), int(tok[3]))
            table = ridge_normals if tok[1] == "ridge" else facet_normals
            if key in table:
                raise ParseError(f"duplicate normal for incidence {key}", ln)
            try:
                table[key] = tuple(parse_rational(p) for p in tok[4:])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coordinate: {exc}", ln) from None
        else:
            raise ParseError(f"unknown record {kind!r}", ln)
    for kind in ("corners", "ridges", "facets"):
        if kind not in counts:
            raise ParseError(f"missing {kind} count")
    return StandardFormComplex(
        n=n,
        num_corners=counts["corners"],
        num_ridges=counts["ridges"],
        num_facets=counts["facets"],
        corner_ridge_pairs=incidences["corner_ridge"],
        corner_facet_pairs=incidences["corner_facet"],
        ridge_facet_pairs=incidences["ridge_facet"],
        ridge_normals=ridge_normals,
        facet_normals=facet_normals,
    )


def serialize_plc(obj: StandardFormComplex | TraditionalFormComplex) -> str:
    out = io.StringIO()
    out.write("plc 1\n")
    if isinstance(obj, TraditionalFormComplex):
        out.write("form traditional\n")
        out.write(f"n {obj.n}\n")
        for i, v in enumerate(obj.vertices):
            out.write(
                f"vertex {i} " + " ".join(format_rational(c) for c in v) + "\n"
            )
        for name, cells in (
            ("corner", obj.corners),
            ("ridge", obj.ridges),
            ("facet", obj.facets),
        ):
            for i, cell in enumerate(cells):
                out.write(f"{name} {i} " + " ".join(map(str, cell)) + "\n")
        return out.getvalue()
    out.write("form standard\n")
    out.write(f"n {obj.n}\n")
    out.write(f"corners {obj.num_corners}\n")
    out.write(f"ridges {obj.num_ridges}\n")
    out.write(f"facets {obj.num_facets}\n")
    for c in range(obj.num_corners):
        for r in sorted(obj.corner_ridges[c]):
            out.write(f"incidence corner_ridge {c} {r}\n")
        for f in sorted(obj.corner_facets[c]):
            out.write(f"incidence corner_facet {c} {f}\n")
    for r in range(obj.num_ridges):
        for f in sorted(obj.ridge_facets[r]):
            out.write(f"incidence ridge_facet {r} {f}\n")
    for (c, r), v in sorted(obj.ridge_normals.items()):
        out.write(
            f"normal ridge {c} {r} "
            + " ".join(format_rational(x) for x in v)
            + "\n"
        )
    for (c, f), v in sorted(obj.facet_normals.items()):
        out.write(
            f"normal facet {c} {f} "
            + " ".join(format_rational(x) for x in v)
            + "\n"
        )
    return out.getvalue()


def parse_path(path: str, fmt: str | None = None):
    """Parse a surface file, inferring the format from the extension."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt is None:
        fmt = "off" if path.lower().endswith(".off") else "plc"
    if fmt == "off":
        return parse_off(text)
    if fmt == "plc":
        return parse_plc(text)
    raise ParseError(f"unknown format {fmt!r}")
