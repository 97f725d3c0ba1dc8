"""Exact computations on marked semitoric polygons.

Subpackages by layer: :mod:`geometry` and :mod:`intlinalg` (exact rational
geometry and integer linear algebra), :mod:`delzant` (Delzant tests and the
symplectic-reduction data), :mod:`semitoric` (representatives, corner
conditions, the group action), :mod:`series` and :mod:`labels` (Taylor
series labels and pinch tuples), :mod:`surgeries` (corner chops, minimal
families, transitions), :mod:`io`, :mod:`render` and :mod:`cli`.
"""

from .geometry import ConvexPolygon, polygon_from_vertices, rational
from .delzant import HalfspaceSystem, delzant_construct, is_delzant_2d, is_delzant_nd
from .semitoric import (
    DOWN,
    UP,
    GroupElement,
    MarkedPoint,
    SemitoricRepresentative,
    apply_group,
    canonicalize,
    equivalent,
    flip,
    make_representative,
    validate,
)
from .surgeries import corner_chop, strictly_minimal_type, transition_cut_removal, unchop
from .io import parse_document, write_document
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "ConvexPolygon", "polygon_from_vertices", "rational",
    "HalfspaceSystem", "delzant_construct", "is_delzant_2d", "is_delzant_nd",
    "UP", "DOWN", "GroupElement", "MarkedPoint", "SemitoricRepresentative",
    "apply_group", "canonicalize", "equivalent", "flip", "make_representative", "validate",
    "corner_chop", "strictly_minimal_type", "transition_cut_removal", "unchop",
    "parse_document", "write_document", "render_svg",
]
