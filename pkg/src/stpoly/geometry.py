"""Exact planar geometry: rationals, lattice directions and convex polygons.

Every coordinate is a :class:`fractions.Fraction`; floats are refused at the
boundary so that no rounding can enter a determinant or a slope test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Point = tuple[Fraction, Fraction]


class GeometryError(ValueError):
    """Raised for malformed geometric input (non-convex, degenerate, ...)."""


def rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(c in text for c in ".eE"):
            raise ValueError(f"floating point forbidden: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(f"floating point forbidden: {value!r}")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def point(x, y) -> Point:
    return (rational(x), rational(y))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class LatticeVector(NamedTuple):
    dx: int
    dy: int


def primitive_direction(v) -> LatticeVector:
    """Divide an integer (or rational) direction by the gcd of its entries."""
    dx, dy = rational(v[0]), rational(v[1])
    if dx == 0 and dy == 0:
        raise GeometryError("zero direction")
    # clear denominators first so rational directions are accepted too
    scale = math.lcm(dx.denominator, dy.denominator)
    ix, iy = int(dx * scale), int(dy * scale)
    g = math.gcd(ix, iy)
    return LatticeVector(ix // g, iy // g)


def det2(v1, v2):
    return v1[0] * v2[1] - v1[1] * v2[0]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of triangle (o, a, b); positive if CCW."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lattice_length(p: Point, q: Point) -> Fraction:
    """Affine length of the segment pq measured in its primitive direction."""
    d = primitive_direction((q[0] - p[0], q[1] - p[1]))
    if d.dx != 0:
        return (q[0] - p[0]) / d.dx
    return (q[1] - p[1]) / d.dy


def convex_hull(points: Iterable) -> list[Point]:
    """Vertices of the convex hull, CCW, collinear boundary points dropped."""
    pts = sorted(set(point(*p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class ConvexPolygon:
    """Compact strictly convex polygon with rational vertices.

    ``vertices`` are CCW and start at the lexicographically smallest vertex,
    so two polygons are equal exactly when their vertex tuples are.
    Build instances with :func:`polygon_from_vertices`.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        if vs[0] != min(vs):
            raise GeometryError("vertices must start at the lexicographically smallest vertex")
        n = len(vs)
        for i in range(n):
            if cross(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0:
                raise GeometryError("vertices are not in strictly convex CCW order")

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def index(self, p: Point) -> int | None:
        try:
            return self.vertices.index(p)
        except ValueError:
            return None

    @property
    def xmin(self) -> Fraction:
        return min(v[0] for v in self.vertices)

    @property
    def xmax(self) -> Fraction:
        return max(v[0] for v in self.vertices)

    def contains(self, p: Point, strict: bool = False) -> bool:
        for a, b in self.edges():
            c = cross(a, b, p)
            if c < 0 or (strict and c == 0):
                return False
        return True

    def vertical_extent(self, x: Fraction) -> tuple[Fraction, Fraction] | None:
        """(bottom, top) of the slice at abscissa ``x``; None outside."""
        ys = []
        for a, b in self.edges():
            if (x < a[0] and x < b[0]) or (x > a[0] and x > b[0]):
                continue
            if a[0] == b[0]:
                ys.extend((a[1], b[1]))
            else:
                ys.append(a[1] + (b[1] - a[1]) * (x - a[0]) / (b[0] - a[0]))
        if not ys:
            return None
        return min(ys), max(ys)

    def transformed(self, f) -> "ConvexPolygon":
        return polygon_from_vertices([f(v) for v in self.vertices])

    def edge_length(self, i: int) -> Fraction:
        return lattice_length(self.vertex(i), self.vertex(i + 1))

    def area(self) -> Fraction:
        vs = self.vertices
        return sum(det2(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))) / 2


def polygon_from_vertices(points: Sequence) -> ConvexPolygon:
    """Canonical polygon through ``points``.

    The points must be in convex position; points lying on an edge of the
    hull are dropped, strictly interior points or duplicates are errors.
    """
    pts = [point(*p) for p in points]
    if len(set(pts)) != len(pts):
        raise GeometryError("duplicate vertices")
    hull = convex_hull(pts)
    if len(hull) < 3:
        raise GeometryError("fewer than 3 distinct extreme points")
    n = len(hull)
    for p in pts:
        if p in hull:
            continue
        on_boundary = any(
            cross(hull[i], hull[(i + 1) % n], p) == 0 for i in range(n)
        )
        if not on_boundary:
            raise GeometryError(f"non-convex input: {p} is interior to the hull")
    start = hull.index(min(hull))
    return ConvexPolygon(tuple(hull[start:] + hull[:start]))


def inward_normals(P: ConvexPolygon) -> list[tuple[LatticeVector, Fraction]]:
    """Primitive inward normal and offset per edge, so P = {x : u.x >= lam}."""
    out = []
    for a, b in P.edges():
        d = primitive_direction((b[0] - a[0], b[1] - a[1]))
        u = LatticeVector(-d.dy, d.dx)
        out.append((u, u.dx * a[0] + u.dy * a[1]))
    return out


def edge_directions_at_vertex(P: ConvexPolygon, i: int) -> tuple[LatticeVector, LatticeVector]:
    """Primitive directions of the two edges leaving vertex ``i``.

    Ordered so that ``det2(v1, v2) > 0``; on a CCW polygon that is
    (towards next vertex, towards previous vertex).
    """
    p, nxt, prv = P.vertex(i), P.vertex(i + 1), P.vertex(i - 1)
    v1 = primitive_direction((nxt[0] - p[0], nxt[1] - p[1]))
    v2 = primitive_direction((prv[0] - p[0], prv[1] - p[1]))
    return v1, v2


def line_intersection(p1: Point, d1, p2: Point, d2) -> Point | None:
    """Intersection of the lines p1 + s d1 and p2 + t d2 (None if parallel)."""
    den = det2(d1, d2)
    if den == 0:
        return None
    s = Fraction(det2((p2[0] - p1[0], p2[1] - p1[1]), d2)) / den
    return (p1[0] + s * d1[0], p1[1] + s * d1[1])


def polygon_from_halfplanes(halfplanes: Sequence[tuple[Sequence[int], Fraction]]) -> ConvexPolygon:
    """Brute-force intersection of half-planes ``u.x >= lam`` (bounded case)."""
    hs = [((int(u[0]), int(u[1])), rational(lam)) for u, lam in halfplanes]
    cands = set()
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            (u1, l1), (u2, l2) = hs[i], hs[j]
            den = det2(u1, u2)
            if den == 0:
                continue
            x = (l1 * u2[1] - l2 * u1[1]) / den
            y = (u1[0] * l2 - u2[0] * l1) / den
            if all(u[0] * x + u[1] * y >= lam for u, lam in hs):
                cands.add((x, y))
    return polygon_from_vertices(convex_hull(cands))
