"""Reference corpus: the standard small examples as exact representatives.

Coordinates are read off the usual pictures of these polygons; mark heights
are any interior height on the relevant vertical line (the combinatorics do
not depend on them).  ``ORBITS`` groups representatives of the same marked
semitoric polygon.
"""

from __future__ import annotations

from fractions import Fraction as F

from .semitoric import DOWN, UP, SemitoricRepresentative, make_representative

R1, R2 = 1, 2  # radii used for the spin-oscillator-type family


def _rep(vertices, marks=()):
    return make_representative(vertices, marks)


def two_triangles():
    """A Delzant triangle and the non-Delzant triangle with apex (2,1)."""
    return {
        "delzant-triangle": _rep([(0, 0), (1, 0), (0, 1)]),
        "not-delzant-triangle": _rep([(0, 0), (2, 1), (4, 0)]),
    }


def corpus() -> dict[str, SemitoricRepresentative]:
    c = {}
    c.update(two_triangles())
    # two representatives related by flipping the second cut; the usual
    # drawing puts the bottom-left vertex at (-3, 0), which is not Delzant
    # (det 2), so the smooth completion (-5/2, 0) is used instead
    c["marked-left"] = _rep(
        [(0, 0), (0, F(1, 2)), (-1, F(3, 2)), (-2, F(3, 2)), (F(-5, 2), 1), (F(-5, 2), 0)],
        [(-2, F(3, 5), UP), (-1, F(11, 10), UP)],
    )
    c["marked-right"] = _rep(
        [(0, 1), (0, F(3, 2)), (-2, F(3, 2)), (F(-5, 2), 1), (F(-5, 2), 0), (-1, 0)],
        [(-2, F(3, 5), UP), (-1, F(11, 10), DOWN)],
    )
    c["triangle-a"] = _rep([(0, 0), (2, 1), (4, 0)], [(2, F(1, 2), UP)])
    c["triangle-b"] = _rep([(0, 0), (2, 0), (4, 2)], [(2, F(1, 2), DOWN)])
    c["hidden-a"] = _rep([(0, 0), (1, 1), (3, 0)], [(1, F(1, 2), UP)])
    c["hidden-b"] = _rep([(0, 0), (1, 1), (3, 2), (1, 0)], [(1, F(1, 2), DOWN)])
    ff = [F(2, 5), F(3, 4)]
    c["2ff-uu"] = _rep([(0, 0), (1, 1), (2, 1), (3, 0)], [(1, ff[0], UP), (2, ff[1], UP)])
    c["2ff-ud"] = _rep([(0, 0), (1, 1), (3, 1), (2, 0)], [(1, ff[0], UP), (2, ff[1], DOWN)])
    c["2ff-du"] = _rep([(0, 1), (2, 1), (3, 0), (1, 0)], [(1, ff[0], DOWN), (2, ff[1], UP)])
    c["2ff-dd"] = _rep([(0, 1), (3, 1), (2, 0), (1, 0)], [(1, ff[0], DOWN), (2, ff[1], DOWN)])
    c["nonsimple-uu"] = _rep([(0, 0), (1, 1), (2, 0)], [(1, ff[0], UP), (1, ff[1], UP)])
    c["nonsimple-ud"] = _rep([(0, 0), (1, 1), (2, 1), (1, 0)], [(1, ff[0], UP), (1, ff[1], DOWN)])
    c["nonsimple-du"] = _rep([(0, 1), (1, 1), (2, 0), (1, 0)], [(1, ff[0], DOWN), (1, ff[1], UP)])
    c["nonsimple-dd"] = _rep([(0, 1), (2, 1), (1, 0)], [(1, ff[0], DOWN), (1, ff[1], DOWN)])
    quad = [(-R1 - R2, -R1), (R1 - R2, R1), (R1 + R2, R1), (R2 - R1, -R1)]
    c["spins-toric"] = _rep(quad)
    c["spins-one"] = _rep(quad, [(R1 - R2, 0, UP)])
    c["spins-two"] = _rep(quad, [(R1 - R2, 0, UP), (R2 - R1, 0, DOWN)])
    c["spins-coincident"] = _rep(
        [(-R2, -R1), (0, R1), (R2, R1), (0, -R1)], [(0, 0, UP), (0, 0, DOWN)]
    )
    c["family-left"] = _rep([(0, 0), (0, 2), (2, 2), (4, 0)])
    c["family-middle-up"] = _rep([(0, 0), (0, 2), (2, 2), (4, 0)], [(2, 1, UP)])
    c["family-middle-down"] = _rep([(0, 0), (0, 2), (4, 2), (2, 0)], [(2, 1, DOWN)])
    c["family-right"] = _rep([(0, 0), (0, 2), (4, 2), (2, 0)])
    c["chop-top"] = _rep([(0, 0), (0, 2), (1, 2), (2, 1), (2, 0)], [(1, 1, UP)])
    c["chop-bottom"] = _rep([(0, 0), (0, 2), (2, 2), (2, 1), (1, 0)], [(1, 1, DOWN)])
    c["chop-top-result"] = _rep(
        [(0, 0), (0, F(1, 2)), (1, F(3, 2)), (F(3, 2), F(3, 2)), (2, 1), (2, 0)], [(1, 1, UP)]
    )
    c["chop-bottom-result"] = _rep(
        [(0, 0), (0, F(1, 2)), (F(3, 2), 2), (2, 2), (2, 1), (1, 0)], [(1, 1, DOWN)]
    )
    return c


# Names grouped by orbit.  Each inner tuple is one marked semitoric polygon.
ORBITS = (
    ("marked-left", "marked-right"),
    ("triangle-a", "triangle-b"),
    ("hidden-a", "hidden-b"),
    ("2ff-uu", "2ff-ud", "2ff-du", "2ff-dd"),
    ("nonsimple-uu", "nonsimple-ud", "nonsimple-du", "nonsimple-dd"),
    ("family-middle-up", "family-middle-down"),
    ("chop-top", "chop-bottom"),
    ("chop-top-result", "chop-bottom-result"),
)

# Expected vertex classes, keyed by vertex, for the non-Delzant corners.
EXPECTED_SPECIAL_CORNERS = {
    "triangle-a": {(2, 1): "fake(1)"},
    "triangle-b": {(2, 0): "fake(1)"},
    "hidden-a": {(1, 1): "hidden(1)"},
    "hidden-b": {(1, 0): "fake(1)"},
    "2ff-uu": {(1, 1): "fake(1)", (2, 1): "fake(1)"},
    "nonsimple-uu": {(1, 1): "fake(2)"},
    "nonsimple-dd": {(1, 0): "fake(2)"},
    "family-middle-up": {(2, 2): "fake(1)"},
    "family-middle-down": {(2, 0): "fake(1)"},
}
