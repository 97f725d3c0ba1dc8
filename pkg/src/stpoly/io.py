"""JSON interchange documents.

A document is a JSON object with ``"schema": 1`` and either a polygon block
(``vertices``, optional ``marks``, optional ``labels``) or a ``halfspaces``
block.  Every rational is a string ``"p"`` or ``"p/q"``; floats are refused
everywhere.  Example::

    {"schema": 1,
     "vertices": [["0", "0"], ["2", "1"], ["4", "0"]],
     "marks": [{"x": "2", "y": "1/2", "cut": "up"}]}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .delzant import DelzantError, HalfspaceSystem
from .geometry import ConvexPolygon, GeometryError, convex_hull, format_rational, rational
from .labels import LabeledPolygon, LabelError, PinchTuple, SimpleLabel
from .semitoric import MarkedPoint, SemitoricRepresentative, cut_name, make_representative
from .series import SeriesError, default_order, format_series, parse_series

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    """Malformed document; ``path`` locates the offending value."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


@dataclass(frozen=True)
class PolygonDocument:
    kind: str                                   # polygon | representative | labeled | halfspaces
    representative: Optional[SemitoricRepresentative] = None
    labeled: Optional[LabeledPolygon] = None
    halfspaces: Optional[HalfspaceSystem] = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def polygon(self) -> Optional[ConvexPolygon]:
        return self.representative.polygon if self.representative is not None else None

    @classmethod
    def of(cls, obj) -> "PolygonDocument":
        if isinstance(obj, PolygonDocument):
            return obj
        if isinstance(obj, LabeledPolygon):
            return cls("labeled", obj.representative, labeled=obj)
        if isinstance(obj, SemitoricRepresentative):
            return cls("representative", obj)
        if isinstance(obj, ConvexPolygon):
            return cls("polygon", SemitoricRepresentative(obj, ()))
        if isinstance(obj, HalfspaceSystem):
            return cls("halfspaces", halfspaces=obj)
        raise TypeError(f"cannot wrap {type(obj).__name__} in a document")


# ---------------------------------------------------------------------------
# parsing helpers


def _rat(value, path: str) -> Fraction:
    if isinstance(value, float):
        raise DocumentError(path, f"floating point forbidden: {value!r}")
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(path, f"expected a rational string, got {type(value).__name__}")
    try:
        return rational(value)
    except (TypeError, ValueError) as exc:
        raise DocumentError(path, str(exc)) from None


def _int(value, path: str) -> int:
    if isinstance(value, float):
        raise DocumentError(path, f"floating point forbidden: {value!r}")
    if isinstance(value, bool):
        raise DocumentError(path, "expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        q = _rat(value, path)
        if q.denominator == 1:
            return int(q)
    raise DocumentError(path, f"expected an integer, got {value!r}")


def _obj(value, path: str, allowed: set, required: set = frozenset()) -> dict:
    if not isinstance(value, dict):
        raise DocumentError(path, f"expected an object, got {type(value).__name__}")
    for k in value:
        if k not in allowed:
            raise DocumentError(f"{path}.{k}", "unknown field")
    for k in sorted(required):
        if k not in value:
            raise DocumentError(f"{path}.{k}", "missing field")
    return value


def _list(value, path: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(path, f"expected a list, got {type(value).__name__}")
    return value


def _series(text, path: str, K: int):
    if not isinstance(text, str):
        raise DocumentError(path, "expected a series string")
    try:
        return parse_series(text, K)
    except SeriesError as exc:
        raise DocumentError(path, str(exc)) from None


def _orientation(pts) -> Fraction:
    n = len(pts)
    return sum(pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n))


def _parse_vertices(raw, strict: bool, warnings: list) -> list:
    pts = []
    for i, v in enumerate(_list(raw, "$.vertices")):
        p = f"$.vertices[{i}]"
        v = _list(v, p)
        if len(v) != 2:
            raise DocumentError(p, "a vertex is a pair [x, y]")
        pts.append((_rat(v[0], p + "[0]"), _rat(v[1], p + "[1]")))
    if len(pts) < 3:
        raise DocumentError("$.vertices", "a polygon needs at least 3 vertices")
    if len(set(pts)) != len(pts):
        raise DocumentError("$.vertices", "duplicate vertices")
    hull = convex_hull(pts)
    if len(hull) >= 3:
        # input order must trace the hull, possibly with collinear extras
        order = [p for p in pts if p in hull]
        start = order.index(min(order))
        rotated = order[start:] + order[:start]
        if _orientation(pts) < 0:
            msg = "vertex list is clockwise; reordered counterclockwise"
            if strict:
                raise DocumentError("$.vertices", msg)
            warnings.append(msg)
        elif rotated != hull:
            msg = "vertex list is not in counterclockwise boundary order; reordered"
            if strict:
                raise DocumentError("$.vertices", msg)
            warnings.append(msg)
        if len(hull) != len(pts):
            warnings.append("collinear boundary points dropped")
    return pts


def _parse_mark(raw, i: int) -> MarkedPoint:
    p = f"$.marks[{i}]"
    m = _obj(raw, p, {"x", "y", "cut"}, {"x", "cut"})
    cut = m["cut"]
    if cut not in ("up", "down"):
        raise DocumentError(p + ".cut", f"expected 'up' or 'down', got {cut!r}")
    y = None if m.get("y") is None else _rat(m["y"], p + ".y")
    return MarkedPoint(_rat(m["x"], p + ".x"), y, cut)


def _parse_labels(raw, R: SemitoricRepresentative) -> LabeledPolygon:
    lab = _obj(raw, "$.labels", {"order", "simple", "tuples"}, {"order"})
    K = _int(lab["order"], "$.labels.order")
    if K < 1:
        raise DocumentError("$.labels.order", "order must be positive")
    if ("simple" in lab) == ("tuples" in lab):
        raise DocumentError("$.labels", "give exactly one of 'simple' or 'tuples'")
    try:
        if "simple" in lab:
            out = []
            for i, s in enumerate(_list(lab["simple"], "$.labels.simple")):
                p = f"$.labels.simple[{i}]"
                s = _obj(s, p, {"series", "kappa"}, {"series", "kappa"})
                try:
                    out.append(SimpleLabel(_series(s["series"], p + ".series", K), _int(s["kappa"], p + ".kappa")))
                except LabelError as exc:
                    raise DocumentError(p, str(exc)) from None
            return LabeledPolygon(R, simple=tuple(out))
        tuples = []
        for i, t in enumerate(_list(lab["tuples"], "$.labels.tuples")):
            p = f"$.labels.tuples[{i}]"
            t = _obj(t, p, {"s", "g"}, {"s", "g"})
            s = [_series(x, f"{p}.s[{k}]", K) for k, x in enumerate(_list(t["s"], p + ".s"))]
            g = [[_series(x, f"{p}.g[{r}][{c}]", K) for c, x in enumerate(_list(row, f"{p}.g[{r}]"))]
                 for r, row in enumerate(_list(t["g"], p + ".g"))]
            try:
                tuples.append(PinchTuple(tuple(s), tuple(map(tuple, g))))
            except LabelError as exc:
                raise DocumentError(p, str(exc)) from None
        return LabeledPolygon(R, tuples=tuple(tuples))
    except LabelError as exc:
        raise DocumentError("$.labels", str(exc)) from None


def _parse_halfspaces(raw) -> HalfspaceSystem:
    h = _obj(raw, "$.halfspaces", {"dimension", "facets"}, {"dimension", "facets"})
    n = _int(h["dimension"], "$.halfspaces.dimension")
    facets = []
    for i, f in enumerate(_list(h["facets"], "$.halfspaces.facets")):
        p = f"$.halfspaces.facets[{i}]"
        f = _obj(f, p, {"normal", "offset"}, {"normal", "offset"})
        u = tuple(_int(c, f"{p}.normal[{k}]") for k, c in enumerate(_list(f["normal"], p + ".normal")))
        facets.append((u, _rat(f["offset"], p + ".offset")))
    try:
        return HalfspaceSystem(n, tuple(facets))
    except DelzantError as exc:
        raise DocumentError("$.halfspaces", str(exc)) from None


def parse_document(text: str, *, strict: bool = False) -> PolygonDocument:
    try:
        data = json.loads(text, parse_float=lambda s: float(s))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", f"invalid JSON: {exc.msg}") from None
    return document_from_json(data, strict=strict)


def document_from_json(data: Any, *, strict: bool = False) -> PolygonDocument:
    top = _obj(data, "$", {"schema", "vertices", "marks", "labels", "halfspaces"}, {"schema"})
    if _int(top["schema"], "$.schema") != SCHEMA_VERSION:
        raise DocumentError("$.schema", f"unsupported schema version {top['schema']!r}")
    warnings: list[str] = []
    if "halfspaces" in top:
        extra = [k for k in ("vertices", "marks", "labels") if k in top]
        if extra:
            raise DocumentError(f"$.{extra[0]}", "not allowed together with 'halfspaces'")
        return PolygonDocument("halfspaces", halfspaces=_parse_halfspaces(top["halfspaces"]))
    if "vertices" not in top:
        raise DocumentError("$.vertices", "missing field")
    pts = _parse_vertices(top["vertices"], strict, warnings)
    marks = [_parse_mark(m, i) for i, m in enumerate(_list(top.get("marks", []), "$.marks"))]
    try:
        R = make_representative(pts, marks)
    except GeometryError as exc:
        raise DocumentError("$.vertices", str(exc)) from None
    if [c.sort_key() for c in marks] != [c.sort_key() for c in R.marks]:
        warnings.append("marks reordered lexicographically")
    if "labels" in top:
        if "marks" not in top:
            raise DocumentError("$.labels", "labels need a 'marks' block")
        L = _parse_labels(top["labels"], R)
        return PolygonDocument("labeled", R, labeled=L, warnings=tuple(warnings))
    kind = "representative" if "marks" in top else "polygon"
    return PolygonDocument(kind, R, warnings=tuple(warnings))


# ---------------------------------------------------------------------------
# writing


def _label_block(L: LabeledPolygon) -> dict:
    if L.simple is not None:
        K = L.simple[0].order if L.simple else default_order()
        return {"order": K, "simple": [{"series": format_series(l.series), "kappa": l.kappa} for l in L.simple]}
    K = L.tuples[0].order if L.tuples else default_order()
    return {"order": K, "tuples": [
        {"s": [format_series(s) for s in t.s], "g": [[format_series(x) for x in row] for row in t.g]}
        for t in L.tuples
    ]}


def document_to_json(doc) -> dict:
    doc = PolygonDocument.of(doc)
    out: dict = {"schema": SCHEMA_VERSION}
    if doc.kind == "halfspaces":
        H = doc.halfspaces
        out["halfspaces"] = {
            "dimension": H.dimension,
            "facets": [{"normal": list(u), "offset": format_rational(l)} for u, l in H.facets],
        }
        return out
    R = doc.representative
    out["vertices"] = [[format_rational(x), format_rational(y)] for x, y in R.polygon.vertices]
    if doc.kind != "polygon":
        marks = []
        for c in R.marks:
            m = {"x": format_rational(c.x)}
            if c.y is not None:
                m["y"] = format_rational(c.y)
            m["cut"] = cut_name(c.cut)
            marks.append(m)
        out["marks"] = marks
    if doc.kind == "labeled":
        out["labels"] = _label_block(doc.labeled)
    return out


_SCALAR_ARRAY = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def dumps(data) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(data, indent=2)
    return _SCALAR_ARRAY.sub(lambda m: "[" + ", ".join(t.strip() for t in m.group(1).split(",")) + "]", text) + "\n"


def write_document(doc) -> str:
    return dumps(document_to_json(doc))


def read_document(path: str, *, strict: bool = False) -> PolygonDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read(), strict=strict)
