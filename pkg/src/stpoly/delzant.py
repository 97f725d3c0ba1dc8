"""Delzant checks for polygons and half-space systems, and the combinatorial
data of the Delzant construction (the map rho, its integer kernel, the level).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import intlinalg as la
from .geometry import ConvexPolygon, Point, det2, edge_directions_at_vertex, inward_normals, rational

NOT_SIMPLE = "not-simple"
NOT_SMOOTH = "not-smooth"
NOT_RATIONAL = "not-rational"


class DelzantError(ValueError):
    pass


@dataclass(frozen=True)
class Failure:
    vertex: tuple
    reason: str
    determinant: int | None = None


@dataclass(frozen=True)
class DelzantVerdict:
    failures: tuple[Failure, ...] = ()
    vertices: tuple[tuple, ...] = ()

    @property
    def is_delzant(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.is_delzant


@dataclass(frozen=True)
class HalfspaceSystem:
    """Facets ``x . u_i >= lam_i`` with primitive integer normals ``u_i``.

    Non-primitive normals are divided by their gcd (and the offset with
    them) on construction, which leaves the half-space unchanged.
    """

    dimension: int
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise DelzantError("dimension must be positive")
        norm = []
        for u, lam in self.facets:
            u = tuple(u)
            if len(u) != self.dimension:
                raise DelzantError(f"normal {u} has wrong length")
            if any(not isinstance(c, int) or isinstance(c, bool) for c in u):
                raise DelzantError(f"normal {u} must be an integer vector")
            g = math.gcd(*u)
            if g == 0:
                raise DelzantError("zero normal")
            norm.append((tuple(c // g for c in u), rational(lam) / g))
        if len(set(norm)) != len(norm):
            raise DelzantError("repeated facet")
        object.__setattr__(self, "facets", tuple(norm))

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return [u for u, _ in self.facets]

    @property
    def offsets(self) -> list[Fraction]:
        return [lam for _, lam in self.facets]


def halfspaces_of_polygon(P: ConvexPolygon) -> HalfspaceSystem:
    return HalfspaceSystem(2, tuple((tuple(u), lam) for u, lam in inward_normals(P)))


def is_delzant_2d(P: ConvexPolygon) -> DelzantVerdict:
    """Smoothness at every vertex of a polygon.

    The witness determinant is that of the inward normals of the edge leaving
    the vertex and the edge arriving at it (CCW), e.g. -4 at the apex of the
    triangle (0,0), (2,1), (4,0).
    """
    normals = inward_normals(P)
    failures = []
    for i, p in enumerate(P.vertices):
        v1, v2 = edge_directions_at_vertex(P, i)
        if det2(v1, v2) != 1:
            u_out, u_in = normals[i][0], normals[i - 1][0]
            failures.append(Failure(p, NOT_SMOOTH, det2(u_out, u_in)))
    return DelzantVerdict(tuple(failures), P.vertices)


def _dot(u, x):
    return sum(a * b for a, b in zip(u, x))


def enumerate_vertices(H: HalfspaceSystem) -> list[tuple[Fraction, ...]]:
    """Vertices of the polyhedron by brute force over n-subsets of facets."""
    n = H.dimension
    U, lam = H.normals, H.offsets
    found = set()
    for S in combinations(range(len(U)), n):
        x = la.solve([U[i] for i in S], [lam[i] for i in S])
        if x is None:
            continue
        if all(_dot(U[i], x) >= lam[i] for i in range(len(U))):
            found.add(tuple(x))
    return sorted(found)


def _is_bounded(H: HalfspaceSystem) -> bool:
    # bounded iff the recession cone {d : U d >= 0} is {0}
    n, U = H.dimension, H.normals
    if la.rank(U) < n:
        return False
    for S in combinations(range(len(U)), n - 1):
        ns = la.nullspace([U[i] for i in S], n)
        if len(ns) != 1:
            continue
        d = ns[0]
        for sgn in (1, -1):
            if all(sgn * _dot(u, d) >= 0 for u in U):
                return False
    return True


def _check_polytope(H: HalfspaceSystem) -> list[tuple[Fraction, ...]]:
    if len(H.facets) < H.dimension + 1 or not _is_bounded(H):
        raise DelzantError("half-space system is unbounded")
    verts = enumerate_vertices(H)
    if not verts:
        raise DelzantError("half-space system is empty")
    base = verts[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in verts[1:]]
    if la.rank(diffs) < H.dimension:
        raise DelzantError("polytope has empty interior")
    return verts


def is_delzant_nd(H: HalfspaceSystem) -> DelzantVerdict:
    """Simple + smooth check at every vertex of a bounded half-space system."""
    verts = _check_polytope(H)
    n, U, lam = H.dimension, H.normals, H.offsets
    failures = []
    for x in verts:
        active = [i for i in range(len(U)) if _dot(U[i], x) == lam[i]]
        if len(active) != n:
            failures.append(Failure(x, NOT_SIMPLE))
            continue
        d = la.det([U[i] for i in active])
        if abs(d) != 1:
            failures.append(Failure(x, NOT_SMOOTH, int(d)))
    return DelzantVerdict(tuple(failures), tuple(verts))


def redundant_facets(H: HalfspaceSystem) -> list[int]:
    """Indices of facets whose face has dimension below n - 1."""
    verts = _check_polytope(H)
    n = H.dimension
    out = []
    for i, (u, lam) in enumerate(H.facets):
        on = [v for v in verts if _dot(u, v) == lam]
        if len(on) < n:
            out.append(i)
            continue
        diffs = [[a - b for a, b in zip(v, on[0])] for v in on[1:]]
        if la.rank(diffs) < n - 1:
            out.append(i)
    return out


@dataclass(frozen=True)
class DelzantConstructionData:
    d: int
    n: int
    rho: tuple[tuple[int, ...], ...]
    kernel_basis: tuple[tuple[int, ...], ...]   # d x (d - n), columns span ker(rho)
    level: tuple[Fraction, ...]
    lam: tuple[Fraction, ...] = field(default=())

    def kernel_columns(self) -> list[list[int]]:
        return la.transpose(self.kernel_basis) if self.kernel_basis else []


def delzant_construct(H: HalfspaceSystem) -> DelzantConstructionData:
    verdict = is_delzant_nd(H)
    if not verdict.is_delzant:
        raise DelzantError(f"not a Delzant polytope: {verdict.failures}")
    red = redundant_facets(H)
    if red:
        raise DelzantError(f"redundant facets: {red}")
    n, d = H.dimension, len(H.facets)
    rho = [[u[r] for u in H.normals] for r in range(n)]
    cols = la.integer_kernel_basis(rho)
    if len(cols) != d - n:
        raise DelzantError("kernel of rho has unexpected rank")
    K = la.transpose(cols)
    lam = H.offsets
    level = tuple(sum(c[i] * lam[i] for i in range(d)) for c in cols)
    return DelzantConstructionData(
        d=d, n=n,
        rho=tuple(map(tuple, rho)),
        kernel_basis=tuple(map(tuple, K)),
        level=level,
        lam=tuple(lam),
    )


def halfspace_system(dimension: int, facets: Sequence) -> HalfspaceSystem:
    return HalfspaceSystem(dimension, tuple((tuple(u), rational(l)) for u, l in facets))


def vertex_point(v) -> Point:
    return (v[0], v[1])
