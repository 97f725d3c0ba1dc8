"""Polygon surgeries: corner chops and their inverse, strictly-minimal
classification against the five minimal families, and transition-family cut
removal."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (
    ConvexPolygon,
    GeometryError,
    Point,
    edge_directions_at_vertex,
    line_intersection,
    polygon_from_vertices,
    primitive_direction,
    rational,
)
from .semitoric import (
    DOWN,
    UP,
    GroupElement,
    Issue,
    MarkedPoint,
    SemitoricRepresentative,
    apply_group,
    canonicalize,
    classify_vertex,
    cut_segment,
    flip_representatives,
    forget_heights,
    make_representative,
    parse_cut,
    sigma,
    validate,
)


class SurgeryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# triangle / cut incidence


def _triangle(p: Point, q: Point, r: Point) -> ConvexPolygon:
    return polygon_from_vertices([p, q, r])


def _segment_meets_triangle(T: ConvexPolygon, seg) -> bool:
    (x, y0), (_, y1) = seg
    lo, hi = min(y0, y1), max(y0, y1)
    ext = T.vertical_extent(x)
    return ext is not None and ext[0] <= hi and lo <= ext[1]


def triangle_is_clear(R: SemitoricRepresentative, T: ConvexPolygon) -> bool:
    """True if the closed triangle holds no mark and meets no cut."""
    for c in R.marks:
        if c.y is not None and T.contains((c.x, c.y)):
            return False
        seg = cut_segment(R.polygon, c)
        if seg is not None and _segment_meets_triangle(T, seg):
            return False
    return True


# ---------------------------------------------------------------------------
# corner chop


@dataclass(frozen=True)
class ChopSpec:
    vertex: int
    size: Fraction

    def __post_init__(self):
        object.__setattr__(self, "size", rational(self.size))
        if self.size <= 0:
            raise SurgeryError("chop size must be positive")


@dataclass(frozen=True)
class ChopResult:
    result: SemitoricRepresentative      # in the coordinates of the input
    flips: tuple[int, ...]               # flip vector of the working representative
    working: SemitoricRepresentative     # chopped working representative
    edge: int                            # index of the new edge in ``working``


def _chop_in(R: SemitoricRepresentative, q: Point, s: Fraction) -> SemitoricRepresentative:
    """Chop vertex q of R directly; raise SurgeryError with the reason."""
    P = R.polygon
    i = P.index(q)
    if i is None:
        raise SurgeryError(f"{q} is not a vertex")
    vc = classify_vertex(R, i)
    if vc.kind != "delzant":
        raise SurgeryError(f"vertex {q} is {vc}, not a Delzant corner")
    v1, v2 = edge_directions_at_vertex(P, i)
    if s >= P.edge_length(i) or s >= P.edge_length(i - 1):
        raise SurgeryError(f"chop size {s} is not smaller than both incident edges")
    a = (q[0] + s * v1[0], q[1] + s * v1[1])
    b = (q[0] + s * v2[0], q[1] + s * v2[1])
    if not triangle_is_clear(R, _triangle(q, a, b)):
        raise SurgeryError("chop triangle contains a mark or meets a cut")
    vs = list(P.vertices)
    vs[i:i + 1] = [b, a]
    out = SemitoricRepresentative(polygon_from_vertices(vs), R.marks)
    v = validate(out)
    if not v.valid:
        raise SurgeryError("chopped polygon is invalid: " + "; ".join(map(str, v.issues)))
    return out


def corner_chop_detailed(R: SemitoricRepresentative, vertex, size) -> ChopResult:
    """Corner chop of size ``size`` at ``vertex`` (index or point of R).

    The chop is made in the first flip representative (identity first) in
    which the image of the vertex is a Delzant corner and the chop triangle
    avoids every mark and cut; the result is mapped back by the same flips.
    """
    s = rational(size)
    if s <= 0:
        raise SurgeryError("chop size must be positive")
    if not validate(R).valid:
        raise SurgeryError("input representative is invalid")
    p = R.polygon.vertex(vertex) if isinstance(vertex, int) else tuple(map(rational, vertex))
    if R.polygon.index(p) is None:
        raise SurgeryError(f"{p} is not a vertex")
    reasons = []
    for flips, Rf in flip_representatives(R):
        q = sigma(GroupElement(0, Fraction(0), flips), R.eps, [c.x for c in R.marks])(p)
        try:
            W = _chop_in(Rf, q, s)
        except SurgeryError as exc:
            reasons.append(f"flips {flips}: {exc}")
            continue
        back = apply_group(W, GroupElement(0, Fraction(0), flips))
        edge = next(j for j in range(len(W.polygon)) if _is_new_edge(Rf, W, j))
        return ChopResult(back, flips, W, edge)
    raise SurgeryError("no representative admits this chop: " + " | ".join(reasons))


def _is_new_edge(before: SemitoricRepresentative, after: SemitoricRepresentative, j: int) -> bool:
    u, v = after.polygon.edges()[j]
    old = set(before.polygon.vertices)
    return u not in old and v not in old


def corner_chop(R: SemitoricRepresentative, vertex, size) -> SemitoricRepresentative:
    return corner_chop_detailed(R, vertex, size).result


# ---------------------------------------------------------------------------
# reverse corner chop


def reverse_corner_chop(R: SemitoricRepresentative, edge: int) -> Optional[SemitoricRepresentative]:
    """Undo a corner chop whose new edge is ``edge`` (in R's own coordinates).

    Returns None when the edge is not the result of a chop: the neighbouring
    edges must meet beyond it at equal lattice distance, the restored corner
    must be Delzant, and the restored triangle must avoid marks and cuts.
    """
    P = R.polygon
    n = len(P)
    if n < 4:
        return None
    A, B = P.vertex(edge), P.vertex(edge + 1)
    prev, nxt = P.vertex(edge - 1), P.vertex(edge + 2)
    dA = primitive_direction((A[0] - prev[0], A[1] - prev[1]))
    dB = primitive_direction((B[0] - nxt[0], B[1] - nxt[1]))
    q = line_intersection(A, dA, B, dB)
    if q is None:
        return None
    sa = (q[0] - A[0]) / dA[0] if dA[0] else (q[1] - A[1]) / dA[1]
    sb = (q[0] - B[0]) / dB[0] if dB[0] else (q[1] - B[1]) / dB[1]
    if sa <= 0 or sb <= 0 or sa != sb:
        return None
    vs = list(P.vertices)
    i = edge % n
    if i == n - 1:
        vs = vs[1:n - 1] + [q]
    else:
        vs[i:i + 2] = [q]
    try:
        Q = polygon_from_vertices(vs)
    except GeometryError:
        return None
    if len(Q) != n - 1 or Q.index(q) is None:
        return None
    out = SemitoricRepresentative(Q, R.marks)
    if not triangle_is_clear(out, _triangle(q, A, B)):
        return None
    if classify_vertex(out, Q.index(q)).kind != "delzant":
        return None
    if not validate(out).valid:
        return None
    return out


def detect_unchoppable_edges(R: SemitoricRepresentative) -> list[int]:
    """Edges of R (in R's coordinates) that undo a corner chop."""
    return [e for e in range(len(R.polygon)) if reverse_corner_chop(R, e) is not None]


@dataclass(frozen=True)
class ReverseChop:
    flips: tuple[int, ...]
    edge: int


def find_reverse_chop(R: SemitoricRepresentative) -> Optional[ReverseChop]:
    """First reverse chop in any flip representative (an orbit invariant)."""
    for flips, Rf in flip_representatives(R):
        edges = detect_unchoppable_edges(Rf)
        if edges:
            return ReverseChop(flips, edges[0])
    return None


def unchop(R: SemitoricRepresentative, edge: int, flips=None) -> SemitoricRepresentative:
    """Reverse chop at ``edge`` of the flip representative ``flips`` of R
    (R itself when ``flips`` is None), mapped back to R's coordinates."""
    flips = tuple(parse_cut(f) for f in flips) if flips is not None else (UP,) * R.m
    g = GroupElement(0, Fraction(0), flips)
    Rf = apply_group(R, g)
    out = reverse_corner_chop(Rf, edge)
    if out is None:
        raise SurgeryError(f"edge {edge} cannot be un-chopped")
    return apply_group(out, g)


# ---------------------------------------------------------------------------
# minimal families


def _marks_on(vertices, xs) -> list[MarkedPoint]:
    """Up-cut marks at the given x values, spread over the vertical chord."""
    P = polygon_from_vertices(vertices)
    out = []
    for x in sorted(set(xs)):
        k = xs.count(x)
        lo, hi = P.vertical_extent(x)
        for t in range(1, k + 1):
            out.append(MarkedPoint(x, lo + (hi - lo) * Fraction(t, k + 1), UP))
    return out


def _family(vertices, xs) -> SemitoricRepresentative:
    vertices = [tuple(map(rational, v)) for v in vertices]
    xs = [rational(x) for x in xs]
    return make_representative(vertices, _marks_on(vertices, xs))


def type1(a) -> SemitoricRepresentative:
    a = rational(a)
    if a <= 0:
        raise SurgeryError("type (1) needs a > 0")
    return _family([(0, 0), (a, a / 2), (2 * a, 0)], [a])


def type2(a, b) -> SemitoricRepresentative:
    a, b = rational(a), rational(b)
    if a <= 0 or b < 0:
        raise SurgeryError("type (2) needs a > 0 and b >= 0")
    if b == 0:
        return _family([(0, 0), (a, a), (2 * a, 0)], [a, a])
    return _family([(0, 0), (a, a), (a + b, a), (2 * a + b, 0)], [a, a + b])


def type3a(a, b, n: int) -> SemitoricRepresentative:
    a, b = rational(a), rational(b)
    if a <= 0 or b <= 0 or n < 1:
        raise SurgeryError("type (3a) needs a, b > 0 and n >= 1")
    return _family([(0, 0), (a, a), (a + b, a), (n * a + b, 0)], [a])


def type3b(a, n: int) -> SemitoricRepresentative:
    a = rational(a)
    if a <= 0 or n < 2:
        raise SurgeryError("type (3b) needs a > 0 and n >= 2")
    return _family([(0, 0), (a, a), (n * a, 0)], [a])


def type3c(a, b, n: int) -> SemitoricRepresentative:
    a, b = rational(a), rational(b)
    if a <= 0 or not -a < b < 0 or n < 2:
        raise SurgeryError("type (3c) needs a > 0, -a < b < 0 and n >= 2")
    return _family([(0, 0), (a + b, a + b), (a, a + b / (n - 1)), (n * a + b, 0)], [a])


FAMILIES = {"type1": type1, "type2": type2, "type3a": type3a, "type3b": type3b, "type3c": type3c}


@dataclass(frozen=True)
class MinimalClassification:
    kind: str                       # type1 ... type3c, not-minimal, no-marks, unmatched
    params: tuple = ()
    witness: Optional[ReverseChop] = None

    def __str__(self) -> str:
        if self.kind in FAMILIES:
            names = {"type1": "a", "type2": "ab", "type3a": "abn", "type3b": "an", "type3c": "abn"}[self.kind]
            inner = ", ".join(f"{k}={_fmt(v)}" for k, v in zip(names, self.params))
            return f"{self.kind}({inner})"
        if self.kind == "not-minimal" and self.witness is not None:
            return f"not-minimal(edge={self.witness.edge}, flips={list(self.witness.flips)})"
        return self.kind


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _x_normalized(R: SemitoricRepresentative) -> SemitoricRepresentative:
    dx = R.polygon.xmin
    P = polygon_from_vertices([(x - dx, y) for x, y in R.polygon.vertices])
    return SemitoricRepresentative(P, tuple(MarkedPoint(c.x - dx, c.y, c.cut) for c in R.marks))


def _candidates(W: Fraction, xs: list[Fraction]):
    if len(xs) == 2:
        a, b = xs[0], xs[1] - xs[0]
        if a > 0 and W == 2 * a + b:
            yield "type2", (a, b)
        return
    if len(xs) != 1:
        return
    a = xs[0]
    if a <= 0:
        return
    if W == 2 * a:
        yield "type1", (a,)
    for n in range(1, math.ceil(W / a) + 1):
        if W - n * a > 0:
            yield "type3a", (a, W - n * a, n)
    q = W / a
    if q.denominator == 1 and q >= 2:
        yield "type3b", (a, int(q))
    n = math.ceil(q)
    if q.denominator != 1 and n >= 2:
        yield "type3c", (a, W - n * a, n)


def strictly_minimal_type(R: SemitoricRepresentative) -> MinimalClassification:
    v = validate(R)
    if not v.valid:
        raise SurgeryError("input representative is invalid")
    rc = find_reverse_chop(R)
    if rc is not None:
        return MinimalClassification("not-minimal", witness=rc)
    if R.m == 0:
        return MinimalClassification("no-marks")
    N = _x_normalized(R)
    target = canonicalize(forget_heights(N))
    W = N.polygon.xmax
    for kind, params in _candidates(W, [c.x for c in N.marks]):
        try:
            cand = FAMILIES[kind](*params)
        except SurgeryError:
            continue
        if canonicalize(forget_heights(cand)) == target:
            return MinimalClassification(kind, tuple(params))
    return MinimalClassification("unmatched")


# ---------------------------------------------------------------------------
# transition families


@dataclass(frozen=True)
class TransitionResult:
    polygon_after: SemitoricRepresentative
    valid: bool
    diagnosis: tuple[Issue, ...] = ()


def transition_cut_removal(R: SemitoricRepresentative, k: int, direction) -> TransitionResult:
    """Point cut k in ``direction`` (flipping only that cut), delete mark k
    and re-check every corner with the remaining cuts."""
    if not 0 <= k < R.m:
        raise IndexError(f"mark index {k} out of range for {R.m} marks")
    if not validate(R).valid:
        raise SurgeryError("input representative is invalid")
    want = parse_cut(direction)
    flips = [UP] * R.m
    if R.marks[k].cut != want:
        flips[k] = DOWN
    Rf = apply_group(R, GroupElement(0, Fraction(0), tuple(flips)))
    after = SemitoricRepresentative(Rf.polygon, Rf.marks[:k] + Rf.marks[k + 1:])
    v = validate(after)
    return TransitionResult(after, v.valid, v.issues)
