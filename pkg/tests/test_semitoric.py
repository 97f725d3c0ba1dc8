import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from strategies import base_pool, random_element, random_representative, rngs

from stpoly.figures import EXPECTED_SPECIAL_CORNERS, ORBITS, corpus
from stpoly.semitoric import (
    DOWN,
    UP,
    ActionError,
    GroupElement,
    MarkedPoint,
    apply_group,
    canonical_element,
    canonicalize,
    classify_corner,
    cut_segment,
    equivalent,
    flip,
    flip_representatives,
    forget_heights,
    make_representative,
    sigma,
    stabilizer,
    validate,
)

POOL = base_pool()


@pytest.mark.parametrize("name", sorted(EXPECTED_SPECIAL_CORNERS))
def test_corpus_special_corners(name):
    R = corpus()[name]
    v = validate(R)
    assert v.valid
    special = {(F(x), F(y)): c for (x, y), c in EXPECTED_SPECIAL_CORNERS[name].items()}
    for c in v.classes:
        assert str(c) == special.get(c.vertex, "delzant"), (name, c)


def test_drawn_marked_polygon_has_non_delzant_corner():
    # the drawn coordinates of the two-mark example: (-3, 0) has det 2
    R = make_representative(
        [(0, 0), (0, F(1, 2)), (-1, F(3, 2)), (-2, F(3, 2)), (F(-5, 2), 1), (-3, 0)],
        [(-2, F(3, 5), UP), (-1, F(11, 10), UP)],
    )
    v = validate(R)
    assert not v.valid
    bad = [i for i in v.issues if i.kind == "vertex-condition"]
    assert [(i.where, i.determinant) for i in bad] == [((-3, 0), 2)]


def test_classify_corner_cases():
    assert classify_corner((1, 0), (0, 1), 0).kind == "delzant"
    # apex (2,1) of the triangle (0,0),(4,0),(2,1): towards next, towards previous
    c = classify_corner((-2, -1), (2, -1), 1)
    assert (c.kind, c.determinant) == ("fake", 0)
    # apex (1,1) of (0,0),(3,0),(1,1)
    c = classify_corner((-1, -1), (2, -1), 1)
    assert (c.kind, c.determinant) == ("hidden", 1)
    c = classify_corner((-1, -1), (2, -1), 0)
    assert (c.kind, c.determinant) == ("unclassifiable", 3)


def test_validate_issue_kinds():
    tri = [(0, 0), (2, 1), (4, 0)]
    R = make_representative(tri, [(5, 0, UP)])
    assert "mark-not-interior" in {i.kind for i in validate(R).issues}
    R = make_representative([(0, 0), (4, 0), (4, 4), (0, 4)], [(1, 1, UP)])
    kinds = {i.kind for i in validate(R).issues}
    assert "cut-hits-edge-interior" in kinds
    # marks out of lexicographic order (built without make_representative's sort)
    from stpoly.semitoric import SemitoricRepresentative
    base = corpus()["2ff-uu"]
    R = SemitoricRepresentative(base.polygon, base.marks[::-1])
    assert "marks-not-lexicographic" in {i.kind for i in validate(R).issues}
    assert str(validate(corpus()["not-delzant-triangle"]).issues[0]) == \
        "vertex-condition at (2,1): not Delzant (det 4)"


def test_simple_flag():
    assert validate(corpus()["2ff-uu"]).simple
    assert not validate(corpus()["nonsimple-uu"]).simple


def test_cut_segment():
    R = corpus()["triangle-a"]
    assert cut_segment(R.polygon, R.marks[0]) == ((2, F(1, 2)), (2, 1))
    H = forget_heights(R)
    assert cut_segment(H.polygon, H.marks[0]) == ((2, 0), (2, 1))


def test_marked_point_parsing():
    assert MarkedPoint("1/2", "1", "down").cut == DOWN
    with pytest.raises(ValueError):
        MarkedPoint(0, 0, "sideways")


def test_group_law():
    g = GroupElement(2, F(1, 3), (UP, DOWN))
    h = GroupElement(-1, F(2), (DOWN, DOWN))
    assert g.compose(h) == GroupElement(1, F(7, 3), (DOWN, UP))
    assert g.compose(g.inverse()) == GroupElement.identity(2)
    assert g.compose(h) == h.compose(g)
    with pytest.raises(TypeError):
        GroupElement(F(1, 2), 0, ())


def test_sigma_is_piecewise_shear():
    f = sigma(GroupElement(0, 0, (DOWN,)), (UP,), [F(2)])
    assert f((0, 0)) == (0, 0) and f((4, 0)) == (4, 2)


def test_triangle_flip_gives_partner():
    c = corpus()
    assert flip(c["triangle-a"], 0) == apply_group(c["triangle-b"], GroupElement(0, F(0), (UP,)))
    assert equivalent(c["triangle-a"], c["triangle-b"])


def test_apply_refuses_invalid_input():
    with pytest.raises(ValueError, match="invalid"):
        apply_group(corpus()["not-delzant-triangle"], GroupElement(1, 0, ()))
    with pytest.raises(ValueError, match="flips"):
        apply_group(corpus()["triangle-a"], GroupElement(1, 0, ()))
    assert issubclass(ActionError, RuntimeError)


def test_flip_index_error():
    with pytest.raises(IndexError):
        flip(corpus()["triangle-a"], 1)


@settings(max_examples=60)
@given(rngs(41))
def test_action_is_a_group_action(rng):
    R = random_representative(rng, POOL)
    g, h = random_element(rng, R.m), random_element(rng, R.m)
    assert apply_group(apply_group(R, g), h) == apply_group(R, g.compose(h))
    assert apply_group(apply_group(R, g), g.inverse()) == R
    assert apply_group(R, GroupElement.identity(R.m)) == R


@settings(max_examples=60)
@given(rngs(42))
def test_canonical_form_is_orbit_invariant(rng):
    R = random_representative(rng, POOL)
    C = canonicalize(R)
    assert canonicalize(C) == C
    assert all(c.cut == UP for c in C.marks)
    p0, p1 = C.polygon.vertices[0], C.polygon.vertices[1]
    assert p0[1] == 0 and 0 <= (p1[1] - p0[1]) / (p1[0] - p0[0]) < 1
    S = apply_group(R, random_element(rng, R.m))
    assert canonicalize(S) == C
    assert apply_group(R, canonical_element(R)) == C


def test_orbits_and_cross_orbits():
    c = corpus()
    for group in ORBITS:
        for a in group:
            for b in group:
                assert equivalent(c[a], c[b])
    assert not equivalent(c["2ff-uu"], c["nonsimple-uu"])
    assert not equivalent(c["family-left"], c["family-right"])


def test_heights_matter_for_equivalence():
    a = make_representative([(0, 0), (2, 1), (4, 0)], [(2, F(1, 2), UP)])
    b = make_representative([(0, 0), (2, 1), (4, 0)], [(2, F(1, 3), UP)])
    assert not equivalent(a, b)
    assert equivalent(forget_heights(a), forget_heights(b))


def test_stabilizer_trivial_and_coincident_marks():
    c = corpus()
    assert stabilizer(canonicalize(c["2ff-uu"])) == [GroupElement.identity(2)]
    # two coincident marks with opposite cuts: swapping both cuts maps the
    # mark multiset to itself
    R = c["spins-coincident"]
    assert len(stabilizer(R)) >= 1
    assert all(apply_group(R, g).polygon == R.polygon for g in stabilizer(R))


def test_flip_representatives_order():
    reps = list(flip_representatives(corpus()["2ff-uu"]))
    assert [f for f, _ in reps] == [(UP, UP), (UP, DOWN), (DOWN, UP), (DOWN, DOWN)]
    assert reps[0][1] == corpus()["2ff-uu"]


def test_double_flip_and_commutation_fixed_seed():
    rng = random.Random(3)
    for _ in range(50):
        R = random_representative(rng, POOL)
        if R.m < 2:
            continue
        assert flip(flip(R, 1), 1) == R
        assert flip(flip(R, 0), 1) == flip(flip(R, 1), 0)
