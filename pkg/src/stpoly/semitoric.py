"""Marked semitoric polygon representatives and the action identifying them.

A representative is a convex rational polygon together with interior marked
points, each carrying a vertical cut pointing up (+1) or down (-1).  The group
of vertical shears, vertical translations and cut flips acts on
representatives; an orbit is a marked semitoric polygon.

Marks may be *heightless* (``y is None``): that is the unmarked invariant
where only the x-coordinate and the cut direction of each mark are kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .geometry import (
    ConvexPolygon,
    GeometryError,
    Point,
    det2,
    edge_directions_at_vertex,
    format_rational,
    polygon_from_vertices,
    rational,
)

UP, DOWN = 1, -1
MAX_FLIP_SEARCH_MARKS = 8


def parse_cut(value) -> int:
    if value in (UP, "up", "+1", "1"):
        return UP
    if value in (DOWN, "down", "-1"):
        return DOWN
    raise ValueError(f"cut direction must be 'up' or 'down', got {value!r}")


def cut_name(eps: int) -> str:
    return "up" if eps == UP else "down"


@dataclass(frozen=True)
class MarkedPoint:
    x: Fraction
    y: Optional[Fraction]
    cut: int = UP

    def __post_init__(self):
        object.__setattr__(self, "x", rational(self.x))
        if self.y is not None:
            object.__setattr__(self, "y", rational(self.y))
        object.__setattr__(self, "cut", parse_cut(self.cut))

    @property
    def position(self) -> Optional[Point]:
        return None if self.y is None else (self.x, self.y)

    def sort_key(self):
        return (self.x, Fraction(0) if self.y is None else self.y)

    def __str__(self) -> str:
        y = "?" if self.y is None else format_rational(self.y)
        return f"({format_rational(self.x)},{y}) {cut_name(self.cut)}"


@dataclass(frozen=True)
class SemitoricRepresentative:
    polygon: ConvexPolygon
    marks: tuple[MarkedPoint, ...] = ()

    @property
    def m(self) -> int:
        return len(self.marks)

    @property
    def eps(self) -> tuple[int, ...]:
        return tuple(c.cut for c in self.marks)

    @property
    def heightless(self) -> bool:
        return any(c.y is None for c in self.marks)

    @property
    def vertices(self):
        return self.polygon.vertices


def make_representative(vertices: Iterable, marks: Iterable = ()) -> SemitoricRepresentative:
    """Build a representative, sorting marks lexicographically (stably).

    ``marks`` holds MarkedPoint values or ``(x, y, cut)`` triples; ``y`` may
    be None for a heightless mark.
    """
    P = polygon_from_vertices(list(vertices))
    ms = [c if isinstance(c, MarkedPoint) else MarkedPoint(*c) for c in marks]
    ms.sort(key=MarkedPoint.sort_key)
    return SemitoricRepresentative(P, tuple(ms))


def forget_heights(R: SemitoricRepresentative) -> SemitoricRepresentative:
    return SemitoricRepresentative(R.polygon, tuple(MarkedPoint(c.x, None, c.cut) for c in R.marks))


# ---------------------------------------------------------------------------
# corner conditions


def T_power(v, k: int):
    """T^k v with T = [[1, 0], [1, 1]]."""
    return (v[0], v[1] + k * v[0])


@dataclass(frozen=True)
class VertexClass:
    kind: str            # "delzant", "fake", "hidden" or "unclassifiable"
    k: int               # number of cuts ending at the vertex
    determinant: int     # det(v1, v2) for k = 0, det(v1, T^k v2) otherwise
    vertex: Optional[Point] = None

    @property
    def ok(self) -> bool:
        return self.kind != "unclassifiable"

    def __str__(self) -> str:
        if self.kind in ("fake", "hidden"):
            return f"{self.kind}({self.k})"
        if self.kind == "unclassifiable":
            return f"unclassifiable(k={self.k}, det={self.determinant})"
        return self.kind


def cut_endpoint(P: ConvexPolygon, c: MarkedPoint) -> Optional[Point]:
    """Boundary point where the cut of ``c`` leaves the polygon."""
    ext = P.vertical_extent(c.x)
    if ext is None:
        return None
    return (c.x, ext[1] if c.cut == UP else ext[0])


def cut_segment(P: ConvexPolygon, c: MarkedPoint) -> Optional[tuple[Point, Point]]:
    """The cut as a closed segment; a heightless mark cuts its whole chord."""
    ext = P.vertical_extent(c.x)
    if ext is None:
        return None
    end = (c.x, ext[1] if c.cut == UP else ext[0])
    if c.y is None:
        return (c.x, ext[0]), (c.x, ext[1])
    return (c.x, c.y), end


def cut_multiplicities(R: SemitoricRepresentative) -> dict[Point, list[int]]:
    hits: dict[Point, list[int]] = {}
    for i, c in enumerate(R.marks):
        e = cut_endpoint(R.polygon, c)
        if e is not None:
            hits.setdefault(e, []).append(i)
    return hits


def classify_corner(v1, v2, k: int, vertex=None) -> VertexClass:
    if k == 0:
        d = det2(v1, v2)
        return VertexClass("delzant" if d == 1 else "unclassifiable", 0, d, vertex)
    d = det2(v1, T_power(v2, k))
    kind = {0: "fake", 1: "hidden"}.get(d, "unclassifiable")
    return VertexClass(kind, k, d, vertex)


def classify_vertex(R: SemitoricRepresentative, i: int, hits=None) -> VertexClass:
    """Class of vertex ``i``; ``hits`` may pass a precomputed cut_multiplicities(R)."""
    P = R.polygon
    p = P.vertex(i)
    if hits is None:
        hits = cut_multiplicities(R)
    k = len(hits.get(p, ()))
    v1, v2 = edge_directions_at_vertex(P, i)
    return classify_corner(v1, v2, k, p)


@dataclass(frozen=True)
class Issue:
    kind: str
    where: object
    detail: str = ""
    determinant: Optional[int] = None

    def __str__(self) -> str:
        where = self.where
        if isinstance(where, tuple) and len(where) == 2 and all(isinstance(t, Fraction) for t in where):
            where = f"({format_rational(where[0])},{format_rational(where[1])})"
        s = f"{self.kind} at {where}"
        if self.detail:
            s += f": {self.detail}"
        if self.determinant is not None:
            s += f" (det {self.determinant})"
        return s


@dataclass(frozen=True)
class Verdict:
    valid: bool
    simple: bool
    issues: tuple[Issue, ...] = ()
    classes: tuple[VertexClass, ...] = ()

    def __bool__(self) -> bool:
        return self.valid

    def class_at(self, p) -> Optional[VertexClass]:
        return next((c for c in self.classes if c.vertex == p), None)


def validate(R: SemitoricRepresentative) -> Verdict:
    P = R.polygon
    issues: list[Issue] = []
    for i, c in enumerate(R.marks):
        if c.y is None:
            inside = P.xmin < c.x < P.xmax
        else:
            inside = P.contains((c.x, c.y), strict=True)
        if not inside:
            issues.append(Issue("mark-not-interior", i, str(c)))
    keys = [c.sort_key() for c in R.marks]
    if any(keys[i] > keys[i + 1] for i in range(len(keys) - 1)):
        issues.append(Issue("marks-not-lexicographic", "marks"))

    hits = cut_multiplicities(R)
    vset = set(P.vertices)
    for p, idx in sorted(hits.items()):
        if p not in vset:
            issues.append(Issue("cut-hits-edge-interior", p, f"cuts {idx}"))

    classes = []
    for i in range(len(P)):
        vc = classify_vertex(R, i, hits)
        classes.append(vc)
        if not vc.ok:
            want = "Delzant" if vc.k == 0 else f"fake or hidden for {vc.k} cuts"
            issues.append(Issue("vertex-condition", vc.vertex, f"not {want}", vc.determinant))
    xs = [c.x for c in R.marks]
    simple = len(set(xs)) == len(xs)
    return Verdict(not issues, simple, tuple(issues), tuple(classes))


# ---------------------------------------------------------------------------
# the group action


@dataclass(frozen=True)
class GroupElement:
    """(shear n, vertical translation b, flips) acting as described in the
    module docstring.  The group is abelian: composition is componentwise."""

    n: int = 0
    b: Fraction = Fraction(0)
    flips: tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("shear must be an integer")
        object.__setattr__(self, "b", rational(self.b))
        object.__setattr__(self, "flips", tuple(parse_cut(f) for f in self.flips))

    @classmethod
    def identity(cls, m: int) -> "GroupElement":
        return cls(0, Fraction(0), (UP,) * m)

    def compose(self, other: "GroupElement") -> "GroupElement":
        if len(self.flips) != len(other.flips):
            raise ValueError("flip vectors have different lengths")
        return GroupElement(self.n + other.n, self.b + other.b,
                            tuple(a * b for a, b in zip(self.flips, other.flips)))

    def inverse(self) -> "GroupElement":
        return GroupElement(-self.n, -self.b, self.flips)

    def skews(self, eps: Sequence[int]) -> tuple[int, ...]:
        """u_k = eps_k (1 - eps'_k) / 2."""
        return tuple(e * (1 - f) // 2 for e, f in zip(eps, self.flips))


def sigma(g: GroupElement, eps: Sequence[int], xs: Sequence[Fraction]):
    u = g.skews(eps)

    def f(p):
        x, y = p
        y = y + g.n * x + g.b
        for uk, xk in zip(u, xs):
            if uk and x >= xk:
                y += uk * (x - xk)
        return (x, y)

    return f


class ActionError(RuntimeError):
    """The image of a valid representative failed validation (a bug)."""


def apply_group(R: SemitoricRepresentative, g: GroupElement, check: bool = True) -> SemitoricRepresentative:
    if len(g.flips) != R.m:
        raise ValueError(f"group element has {len(g.flips)} flips for {R.m} marks")
    if check:
        v = validate(R)
        if not v.valid:
            raise ValueError("cannot act on an invalid representative: "
                             + "; ".join(map(str, v.issues)))
    P = R.polygon
    xs = [c.x for c in R.marks]
    f = sigma(g, R.eps, xs)
    pts = set(P.vertices)
    # a skewed cut line becomes a (possible) break point of the boundary
    for uk, xk in zip(g.skews(R.eps), xs):
        if uk:
            lo, hi = P.vertical_extent(xk)
            pts.update({(xk, lo), (xk, hi)})
    try:
        Q = polygon_from_vertices(sorted(f(p) for p in pts))
    except GeometryError as exc:
        raise ActionError(f"image polygon is malformed: {exc}") from exc
    marks = tuple(
        MarkedPoint(c.x, None if c.y is None else f((c.x, c.y))[1], c.cut * fl)
        for c, fl in zip(R.marks, g.flips)
    )
    out = SemitoricRepresentative(Q, marks)
    if check:
        v = validate(out)
        if not v.valid:
            raise ActionError("image failed validation: " + "; ".join(map(str, v.issues)))
    return out


def flip(R: SemitoricRepresentative, k: int) -> SemitoricRepresentative:
    if not 0 <= k < R.m:
        raise IndexError(f"mark index {k} out of range for {R.m} marks")
    flips = [UP] * R.m
    flips[k] = DOWN
    return apply_group(R, GroupElement(0, Fraction(0), tuple(flips)))


def _base_edge(P: ConvexPolygon) -> tuple[Point, Fraction]:
    p0, p1 = P.vertices[0], P.vertices[1]
    return p0, (p1[1] - p0[1]) / (p1[0] - p0[0])


def canonical_element(R: SemitoricRepresentative) -> GroupElement:
    """The element taking R to its canonical orbit representative:
    all cuts up, base edge slope in [0, 1), base vertex at height 0."""
    flips = R.eps
    Rf = apply_group(R, GroupElement(0, Fraction(0), flips))
    p0, slope = _base_edge(Rf.polygon)
    n = -math.floor(slope)
    b = -(p0[1] + n * p0[0])
    return GroupElement(n, b, flips)


def canonicalize(R: SemitoricRepresentative) -> SemitoricRepresentative:
    return apply_group(R, canonical_element(R))


def equivalent(R1: SemitoricRepresentative, R2: SemitoricRepresentative) -> bool:
    if R1.m != R2.m:
        return False
    return canonicalize(R1) == canonicalize(R2)


def _mark_multiset(R: SemitoricRepresentative):
    return sorted((c.sort_key(), c.y is None, c.cut) for c in R.marks)


def stabilizer(R: SemitoricRepresentative) -> list[GroupElement]:
    """All group elements fixing R (as a polygon with a set of marks).

    Searches every flip vector; for each, the shear and translation are
    pinned by matching the base edge, so the search is exhaustive.
    """
    if R.m > MAX_FLIP_SEARCH_MARKS:
        raise ValueError(f"flip search limited to {MAX_FLIP_SEARCH_MARKS} marks")
    p0, slope0 = _base_edge(R.polygon)
    found = []
    for flips in product((UP, DOWN), repeat=R.m):
        Rf = apply_group(R, GroupElement(0, Fraction(0), flips))
        q0, slope = _base_edge(Rf.polygon)
        dn = slope0 - slope
        if dn.denominator != 1:
            continue
        n = int(dn)
        b = p0[1] - (q0[1] + n * q0[0])
        g = GroupElement(n, b, flips)
        img = apply_group(R, g)
        if img.polygon == R.polygon and _mark_multiset(img) == _mark_multiset(R):
            found.append(g)
    return found


def flip_representatives(R: SemitoricRepresentative):
    """(flips, representative) over all flip vectors, identity first and
    then by number of flipped cuts."""
    if R.m > MAX_FLIP_SEARCH_MARKS:
        raise ValueError(f"flip search limited to {MAX_FLIP_SEARCH_MARKS} marks")
    vecs = sorted(product((UP, DOWN), repeat=R.m), key=lambda f: (f.count(DOWN), [-x for x in f]))
    for flips in vecs:
        yield flips, apply_group(R, GroupElement(0, Fraction(0), flips))
