import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import random_delzant_polygon

from stpoly import intlinalg as la
from stpoly.delzant import (
    NOT_SIMPLE,
    NOT_SMOOTH,
    DelzantError,
    HalfspaceSystem,
    delzant_construct,
    enumerate_vertices,
    halfspace_system,
    halfspaces_of_polygon,
    is_delzant_2d,
    is_delzant_nd,
    redundant_facets,
)
from stpoly.geometry import convex_hull, polygon_from_vertices

TRIANGLE = halfspace_system(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])


def test_non_delzant_witness():
    v = is_delzant_2d(polygon_from_vertices([(0, 0), (2, 1), (4, 0)]))
    assert [(f.vertex, f.reason, f.determinant) for f in v.failures] == [((2, 1), NOT_SMOOTH, -4)]


def test_scaled_triangles_are_delzant():
    for a in (F(1, 3), 1, 5):
        assert is_delzant_2d(polygon_from_vertices([(0, 0), (a, 0), (0, a)]))


def test_normals_are_reduced():
    H = halfspace_system(2, [((2, 0), 1), ((0, 3), 0), ((-1, -1), -1)])
    assert H.facets[0] == ((1, 0), F(1, 2))
    with pytest.raises(DelzantError, match="integer"):
        HalfspaceSystem(2, (((F(1, 2), 0), F(0)),))
    with pytest.raises(DelzantError, match="repeated"):
        halfspace_system(2, [((1, 0), 0), ((2, 0), 0)])


def test_unbounded_and_empty():
    with pytest.raises(DelzantError, match="unbounded"):
        is_delzant_nd(halfspace_system(2, [((1, 0), 0), ((0, 1), 0)]))
    with pytest.raises(DelzantError, match="unbounded"):
        is_delzant_nd(halfspace_system(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)]))
    with pytest.raises(DelzantError, match="empty"):
        is_delzant_nd(halfspace_system(2, [((1, 0), 2), ((0, 1), 0), ((-1, -1), -1)]))


def test_not_simple_in_3d():
    # square pyramid: four facets meet at the apex
    H = halfspace_system(3, [((0, 0, 1), 0), ((1, 0, -1), -1), ((-1, 0, -1), -1),
                             ((0, 1, -1), -1), ((0, -1, -1), -1)])
    v = is_delzant_nd(H)
    assert not v.is_delzant
    assert any(f.reason == NOT_SIMPLE and f.vertex == (0, 0, 1) for f in v.failures)


def test_cube_and_simplex_3d():
    cube = halfspace_system(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0),
                                ((-1, 0, 0), -1), ((0, -1, 0), -1), ((0, 0, -1), -1)])
    assert is_delzant_nd(cube) and len(enumerate_vertices(cube)) == 8
    data = delzant_construct(cube)
    assert la.rank([list(r) for r in data.kernel_basis]) == 3
    simplex = halfspace_system(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, -1, -1), -2)])
    data = delzant_construct(simplex)
    assert data.kernel_columns() == [[1, 1, 1, 1]] and data.level == (F(-2),)


def test_construct_triangle():
    data = delzant_construct(TRIANGLE)
    assert data.rho == ((1, 0, -1), (0, 1, -1))
    assert data.kernel_columns() == [[1, 1, 1]]
    assert data.level == (F(-1),)


def test_construct_refuses_non_delzant_and_redundant():
    with pytest.raises(DelzantError, match="not a Delzant"):
        delzant_construct(halfspaces_of_polygon(polygon_from_vertices([(0, 0), (2, 1), (4, 0)])))
    H = halfspace_system(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1), ((1, 1), -5)])
    assert redundant_facets(H) == [3]
    with pytest.raises(DelzantError, match="redundant"):
        delzant_construct(H)


def _failing_vertices(v):
    return sorted(f.vertex for f in v.failures)


def test_dual_route_on_random_polygons():
    """The edge-direction test and the facet-normal test agree (200 polygons)."""
    rng = random.Random(11)
    delzant = 0
    for k in range(200):
        if k % 2:
            P = random_delzant_polygon(rng).polygon
        else:
            pts = {(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(3, 8))}
            hull = convex_hull(pts)
            if len(hull) < 3:
                continue
            P = polygon_from_vertices(hull)
        v2 = is_delzant_2d(P)
        vn = is_delzant_nd(halfspaces_of_polygon(P))
        assert v2.is_delzant == vn.is_delzant
        assert _failing_vertices(v2) == _failing_vertices(vn)
        assert sorted(vn.vertices) == sorted(P.vertices)
        delzant += v2.is_delzant
    assert delzant >= 100


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1))
def test_kernel_properties_random_delzant(seed):
    P = random_delzant_polygon(random.Random(seed)).polygon
    data = delzant_construct(halfspaces_of_polygon(P))
    M = [list(r) for r in data.kernel_basis]
    rho = [list(r) for r in data.rho]
    assert all(x == 0 for row in la.matmul(rho, M) for x in row)
    assert la.rank(M) == len(P) - 2
    assert la.smith_normal_form(M) == [1] * (len(P) - 2)
    # rho is surjective onto Z^2 for a Delzant polygon
    assert la.smith_normal_form(rho) == [1, 1]
