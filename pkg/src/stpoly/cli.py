"""Command-line front end: ``stpoly SUBCOMMAND ...``.

Every subcommand reads JSON documents (see :mod:`stpoly.io`), calls one
library operation and prints a document or a few plain lines.  Exit codes:
0 when the answer is yes / the operation succeeded, 1 when the answer is no
or the operation is refused, 2 on usage, I/O or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import delzant as dz
from . import labels as lb
from . import semitoric as st
from . import surgeries as sg
from .geometry import format_rational
from .io import DocumentError, dumps, PolygonDocument, read_document, write_document
from .render import render_svg
from .series import SeriesError, default_order, format_series, parse_series

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class Refused(Exception):
    """The operation is well-formed but mathematically refused (exit 1)."""


def _err(*lines: str):
    for line in lines:
        print(line, file=sys.stderr)


def _load(path: str, args) -> PolygonDocument:
    doc = read_document(path, strict=getattr(args, "strict", False))
    for w in doc.warnings:
        _err(f"warning: {path}: {w}")
    return doc


def _rep(doc: PolygonDocument, path: str) -> st.SemitoricRepresentative:
    if doc.representative is None:
        raise UsageError(f"{path}: expected a polygon document, got {doc.kind}")
    return doc.representative


def _emit(obj) -> None:
    sys.stdout.write(write_document(obj))


def _flips(text: Optional[str], m: int) -> tuple[int, ...]:
    if not text:
        return (st.UP,) * m
    try:
        out = tuple(st.parse_cut(t.strip()) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(out) != m:
        raise UsageError(f"--flips has {len(out)} entries for {m} marks")
    return out


def _element(args, m: int) -> st.GroupElement:
    try:
        b = Fraction(args.translate)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad --translate {args.translate!r}") from None
    if "." in args.translate or "e" in args.translate.lower():
        raise UsageError("floating point forbidden in --translate")
    return st.GroupElement(args.shear, b, _flips(args.flips, m))


def _size(text: str) -> Fraction:
    if any(ch in text for ch in ".eE"):
        raise UsageError(f"floating point forbidden: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    doc = _load(args.file, args)
    if doc.kind == "halfspaces":
        return _report_delzant(dz.is_delzant_nd(doc.halfspaces))
    v = st.validate(doc.representative)
    problems = [str(i) for i in v.issues]
    if doc.labeled is not None:
        problems += [f"labels: {p}" for p in doc.labeled.issues()]
    if problems:
        _err(*problems)
        print("invalid")
        return EXIT_FALSE
    print("valid")
    for c in v.classes:
        x, y = c.vertex
        print(f"({format_rational(x)},{format_rational(y)}) {c}")
    return EXIT_TRUE


def cmd_canon(args) -> int:
    doc = _load(args.file, args)
    if doc.labeled is not None:
        _emit(lb.canonical_labeled(doc.labeled))
    else:
        R = _rep(doc, args.file)
        out = st.canonicalize(R)
        _emit(PolygonDocument(doc.kind, out))
    return EXIT_TRUE


def cmd_equiv(args) -> int:
    a, b = _load(args.a, args), _load(args.b, args)
    if a.labeled is not None and b.labeled is not None:
        same = lb.labeled_equivalent(a.labeled, b.labeled)
    else:
        same = st.equivalent(_rep(a, args.a), _rep(b, args.b))
    print("equivalent" if same else "not equivalent")
    return EXIT_TRUE if same else EXIT_FALSE


def cmd_act(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    g = _element(args, R.m)
    if doc.labeled is not None:
        _emit(lb.act_on_labeled(doc.labeled, g))
    else:
        _emit(PolygonDocument(doc.kind, st.apply_group(R, g)))
    return EXIT_TRUE


def cmd_flip(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    if not 0 <= args.cut < R.m:
        raise UsageError(f"--cut {args.cut} out of range for {R.m} marks")
    _emit(PolygonDocument(doc.kind, st.flip(R, args.cut)))
    return EXIT_TRUE


def cmd_chop(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    if not 0 <= args.vertex < len(R.polygon):
        raise UsageError(f"--vertex {args.vertex} out of range for {len(R.polygon)} vertices")
    try:
        out = sg.corner_chop(R, args.vertex, _size(args.size))
    except sg.SurgeryError as exc:
        raise Refused(str(exc)) from None
    _emit(PolygonDocument(doc.kind, out))
    return EXIT_TRUE


def cmd_unchop(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    if not 0 <= args.edge < len(R.polygon):
        raise UsageError(f"--edge {args.edge} out of range for {len(R.polygon)} edges")
    flips = _flips(args.flips, R.m) if args.flips else None
    try:
        out = sg.unchop(R, args.edge, flips)
    except sg.SurgeryError as exc:
        raise Refused(str(exc)) from None
    _emit(PolygonDocument(doc.kind, out))
    return EXIT_TRUE


def cmd_minimal(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    try:
        c = sg.strictly_minimal_type(R)
    except sg.SurgeryError as exc:
        raise Refused(str(exc)) from None
    print(c)
    return EXIT_TRUE


def cmd_transition(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    if not 0 <= args.mark < R.m:
        raise UsageError(f"--mark {args.mark} out of range for {R.m} marks")
    try:
        res = sg.transition_cut_removal(R, args.mark, args.dir)
    except sg.SurgeryError as exc:
        raise Refused(str(exc)) from None
    kind = "representative" if res.polygon_after.m else "polygon"
    _emit(PolygonDocument(kind, res.polygon_after))
    if not res.valid:
        _err(*map(str, res.diagnosis))
        return EXIT_FALSE
    return EXIT_TRUE


def _report_delzant(v: dz.DelzantVerdict) -> int:
    if v.is_delzant:
        print("delzant")
        return EXIT_TRUE
    print("not delzant")
    for f in v.failures:
        where = "(" + ",".join(format_rational(c) for c in f.vertex) + ")"
        det = "" if f.determinant is None else f" (det {f.determinant})"
        _err(f"{where}: {f.reason}{det}")
    return EXIT_FALSE


def _halfspaces(doc: PolygonDocument) -> dz.HalfspaceSystem:
    if doc.halfspaces is not None:
        return doc.halfspaces
    if doc.representative.m:
        raise UsageError("Delzant commands take an unmarked polygon or a half-space block")
    return dz.halfspaces_of_polygon(doc.polygon)


def cmd_delzant_check(args) -> int:
    doc = _load(args.file, args)
    try:
        if doc.halfspaces is None and not doc.representative.m:
            return _report_delzant(dz.is_delzant_2d(doc.polygon))
        return _report_delzant(dz.is_delzant_nd(_halfspaces(doc)))
    except dz.DelzantError as exc:
        raise Refused(str(exc)) from None


def cmd_delzant_construct(args) -> int:
    doc = _load(args.file, args)
    try:
        data = dz.delzant_construct(_halfspaces(doc))
    except dz.DelzantError as exc:
        raise Refused(str(exc)) from None
    print("rho")
    for row in data.rho:
        print(" ".join(map(str, row)))
    print("kernel")
    for col in data.kernel_columns():
        print(" ".join(map(str, col)))
    print("level")
    print(" ".join(format_rational(x) for x in data.level))
    return EXIT_TRUE


def cmd_render(args) -> int:
    doc = _load(args.file, args)
    R = _rep(doc, args.file)
    v = st.validate(R)
    if not v.valid:
        _err(*map(str, v.issues))
        raise Refused("cannot render an invalid representative")
    svg = render_svg(R)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_TRUE


def _tuple_json(t: lb.PinchTuple) -> dict:
    return {"s": [format_series(s) for s in t.s], "g": [[format_series(x) for x in row] for row in t.g]}


def cmd_labels_verify(args) -> int:
    doc = _load(args.file, args)
    if doc.labeled is None:
        raise UsageError(f"{args.file}: no labels block")
    problems = doc.labeled.issues()
    if problems:
        _err(*problems)
        print("invalid")
        return EXIT_FALSE
    print("valid")
    return EXIT_TRUE


def cmd_labels_extend(args) -> int:
    K = args.order or default_order()
    try:
        s0 = parse_series(args.s0, K)
        chain = [parse_series(c, K) for c in args.chain]
    except SeriesError as exc:
        raise UsageError(str(exc)) from None
    try:
        t = lb.extend_tuple(s0, chain)
    except lb.LabelError as exc:
        raise Refused(str(exc)) from None
    sys.stdout.write(dumps({"order": K, **_tuple_json(t)}))
    return EXIT_TRUE


def cmd_labels_act(args) -> int:
    doc = _load(args.file, args)
    if doc.labeled is None:
        raise UsageError(f"{args.file}: no labels block")
    g = _element(args, doc.representative.m)
    _emit(lb.act_on_labeled(doc.labeled, g, verbatim=args.verbatim))
    return EXIT_TRUE


# ---------------------------------------------------------------------------
# parser


def _add_element_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shear", type=int, default=0, help="integer shear n in (x, y) -> (x, y + n x)")
    p.add_argument("--translate", default="0", help="vertical translation (rational string)")
    p.add_argument("--flips", default=None, help="comma-separated up/down (or 1/-1) per mark; up keeps the cut")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stpoly", description="Exact computations on marked semitoric polygons.")
    ap.add_argument("--strict", action="store_true", help="reject vertex lists not in counterclockwise order")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("validate", help="check the vertex conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("canon", help="print the canonical representative of the orbit")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("equiv", help="exit 0 when both documents lie in one orbit")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("act", help="apply a shear / translation / flip element")
    p.add_argument("file")
    _add_element_args(p)
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("flip", help="flip one cut")
    p.add_argument("file")
    p.add_argument("--cut", type=int, required=True)
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("chop", help="corner chop")
    p.add_argument("file")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--size", required=True)
    p.set_defaults(func=cmd_chop)

    p = sub.add_parser("unchop", help="reverse corner chop at an edge")
    p.add_argument("file")
    p.add_argument("--edge", type=int, required=True)
    p.add_argument("--flips", default=None, help="flip representative in which the edge is read")
    p.set_defaults(func=cmd_unchop)

    p = sub.add_parser("minimal", help="strictly-minimal classification")
    p.add_argument("file")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("transition", help="remove one mark as in a transition family")
    p.add_argument("file")
    p.add_argument("--mark", type=int, required=True)
    p.add_argument("--dir", choices=("up", "down"), required=True)
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("delzant-check", help="Delzant test for a polygon or half-space block")
    p.add_argument("file")
    p.set_defaults(func=cmd_delzant_check)

    p = sub.add_parser("delzant-construct", help="print rho, the kernel basis and the level")
    p.add_argument("file")
    p.set_defaults(func=cmd_delzant_construct)

    p = sub.add_parser("render", help="draw as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("labels", help="label operations")
    lsub = p.add_subparsers(dest="labels_command", metavar="ACTION")
    lsub.required = True
    q = lsub.add_parser("verify", help="check the labels block of a document")
    q.add_argument("file")
    q.set_defaults(func=cmd_labels_verify)
    q = lsub.add_parser("extend", help="complete a pinch tuple from s_0 and a chain g_{i,i+1}")
    q.add_argument("--s0", required=True)
    q.add_argument("--chain", nargs="*", default=[])
    q.add_argument("--order", type=int, default=None)
    q.set_defaults(func=cmd_labels_extend)
    q = lsub.add_parser("act", help="apply a group element to a labeled document")
    q.add_argument("file")
    _add_element_args(q)
    q.add_argument("--verbatim", action="store_true", help="use the literal displayed tuple formula")
    q.set_defaults(func=cmd_labels_act)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except UsageError as exc:
        _err(f"error: {exc}")
        return EXIT_ERROR
    except (DocumentError, SeriesError) as exc:
        _err(f"error: {exc}")
        return EXIT_ERROR
    except OSError as exc:
        _err(f"error: {exc}")
        return EXIT_ERROR
    except Refused as exc:
        _err(f"refused: {exc}")
        return EXIT_FALSE
    except (ValueError, st.ActionError, lb.LabelError) as exc:
        _err(f"refused: {exc}")
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
