"""Labels on marked points: Taylor-series classes with twisting indices
(distinct marks) and pinch tuples (marks coinciding in one fiber).

Unit convention: every label coefficient and every mark height is measured
in units of 2*pi.  The ambiguity "up to 2*pi*X*Z" then becomes "up to integer
shifts of the X coefficient", and the height condition on pinch tuples is a
literal equality of rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .semitoric import (
    GroupElement,
    MarkedPoint,
    SemitoricRepresentative,
    apply_group,
    canonical_element,
    equivalent,
    stabilizer,
)
from .series import SeriesError, TruncatedSeries, compose_series, invert_in_Y


class LabelError(ValueError):
    pass


# ---------------------------------------------------------------------------
# simple labels


@dataclass(frozen=True)
class SimpleLabel:
    """Taylor class (X coefficient in [0, 1), no constant) + twisting index."""

    series: TruncatedSeries
    kappa: int

    def __post_init__(self):
        if isinstance(self.kappa, bool) or not isinstance(self.kappa, int):
            raise LabelError("twisting index must be an integer")
        if self.series.coef(0, 0) != 0:
            raise LabelError("Taylor series label must have zero constant term")
        a = self.series.coef(1, 0)
        if not 0 <= a < 1:
            raise LabelError(f"X coefficient {a} of the class representative must lie in [0, 1)")

    @property
    def order(self) -> int:
        return self.series.order


def combine(label: SimpleLabel) -> TruncatedSeries:
    """The single series S~ = S^ + kappa X."""
    return label.series + TruncatedSeries.X(label.order).scale(label.kappa)


def split(S_tilde: TruncatedSeries) -> SimpleLabel:
    if S_tilde.coef(0, 0) != 0:
        raise LabelError("series must have zero constant term")
    kappa = math.floor(S_tilde.coef(1, 0))
    return SimpleLabel(S_tilde - TruncatedSeries.X(S_tilde.order).scale(kappa), kappa)


def _prefix_skews(g: GroupElement, eps: Sequence[int]) -> list[int]:
    if len(g.flips) != len(eps):
        raise LabelError(f"group element has {len(g.flips)} flips for {len(eps)} marks")
    out, acc = [], 0
    for u in g.skews(eps):
        acc += u
        out.append(acc)
    return out


def act_on_twisting(g: GroupElement, marks_x: Sequence, kappas: Sequence[int],
                    eps: Sequence[int]) -> list[int]:
    """kappa_k -> kappa_k + n + sum_{i <= k} u_i (marks in lexicographic order)."""
    if not len(marks_x) == len(kappas) == len(eps):
        raise LabelError("marks, twisting indices and cut directions differ in length")
    pre = _prefix_skews(g, eps)
    return [k + g.n + p for k, p in zip(kappas, pre)]


def act_on_series_label(g: GroupElement, eps: Sequence[int], k: int,
                        S_tilde: TruncatedSeries) -> TruncatedSeries:
    """S~_k -> S~_k + (n + sum_{i <= k} u_i) X."""
    shift = g.n + _prefix_skews(g, eps)[k]
    return S_tilde + TruncatedSeries.X(S_tilde.order).scale(shift)


# ---------------------------------------------------------------------------
# pinch tuples


@dataclass(frozen=True)
class PinchTuple:
    s: tuple[TruncatedSeries, ...]
    g: tuple[tuple[TruncatedSeries, ...], ...]

    def __post_init__(self):
        n = len(self.s)
        if n < 1:
            raise LabelError("a pinch tuple needs at least one series")
        if len(self.g) != n or any(len(row) != n for row in self.g):
            raise LabelError("g must be an n x n array")
        orders = {x.order for x in self.s} | {x.order for row in self.g for x in row}
        if len(orders) != 1:
            raise LabelError("all series of a tuple must share one order")
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "g", tuple(tuple(r) for r in self.g))

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def order(self) -> int:
        return self.s[0].order

    def rotated(self, r: int) -> "PinchTuple":
        """Cyclic relabelling: s'_mu = s_{mu+r}, g'_{mu,nu} = g_{mu+r,nu+r}."""
        n = self.n
        return PinchTuple(
            tuple(self.s[(mu + r) % n] for mu in range(n)),
            tuple(tuple(self.g[(mu + r) % n][(nu + r) % n] for nu in range(n)) for mu in range(n)),
        )

    def shifted(self, const, xcoef) -> "PinchTuple":
        K = self.order
        d = TruncatedSeries.constant(K, const) + TruncatedSeries.X(K).scale(xcoef)
        return PinchTuple(tuple(x + d for x in self.s), self.g)


def trivial_tuple(s0: TruncatedSeries) -> PinchTuple:
    return PinchTuple((s0,), ((TruncatedSeries.Y(s0.order),),))


@dataclass(frozen=True)
class Violation:
    relation: str          # membership | diagonal | s-relation | cocycle
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.relation}{self.indices}"


@dataclass(frozen=True)
class TupleVerdict:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _positive(g: TruncatedSeries) -> bool:
    return g.coef(0, 0) == 0 and g.coef(0, 1) > 0


def verify_tuple(t: PinchTuple) -> TupleVerdict:
    n, K = t.n, t.order
    Y = TruncatedSeries.Y(K)
    bad: list[Violation] = []
    for mu in range(n):
        for nu in range(n):
            if not _positive(t.g[mu][nu]):
                bad.append(Violation("membership", (mu, nu)))
    for mu in range(n):
        if t.g[mu][mu] != Y:
            bad.append(Violation("diagonal", (mu, mu)))
    for mu in range(n):
        for nu in range(n):
            try:
                if t.s[mu] != compose_series(t.s[nu], t.g[mu][nu]):
                    bad.append(Violation("s-relation", (mu, nu)))
            except SeriesError:
                bad.append(Violation("s-relation", (mu, nu)))
    for mu in range(n):
        for nu in range(n):
            for sg in range(n):
                try:
                    if t.g[mu][sg] != compose_series(t.g[nu][sg], t.g[mu][nu]):
                        bad.append(Violation("cocycle", (mu, nu, sg)))
                except SeriesError:
                    bad.append(Violation("cocycle", (mu, nu, sg)))
    return TupleVerdict(tuple(bad))


def extend_tuple(s0: TruncatedSeries, chain: Sequence[TruncatedSeries]) -> PinchTuple:
    """The unique tuple with s_0 = s0 and g_{mu,mu+1} = chain[mu].

    With G_mu = g_{0,mu} (G_0 = Y, G_{mu+1} = chain[mu] o G_mu) the relations
    force g_{mu,sigma} = G_sigma o G_mu^{-1} and s_mu = s0 o G_mu^{-1}.
    """
    K = s0.order
    for i, c in enumerate(chain):
        if c.order != K:
            raise LabelError(f"chain entry {i} has order {c.order}, expected {K}")
        if not _positive(c):
            raise LabelError(f"chain entry {i} needs zero constant term and positive Y coefficient")
    G = [TruncatedSeries.Y(K)]
    for c in chain:
        G.append(compose_series(c, G[-1]))
    Ginv = [invert_in_Y(x) for x in G]
    n = len(G)
    s = tuple(compose_series(s0, Ginv[mu]) for mu in range(n))
    g = tuple(
        tuple(TruncatedSeries.Y(K) if mu == sg else compose_series(G[sg], Ginv[mu]) for sg in range(n))
        for mu in range(n)
    )
    return PinchTuple(s, g)


def tuple_shift(g: GroupElement, marks: Sequence[MarkedPoint], c0, *,
                verbatim: bool = False) -> tuple[Fraction, int]:
    """(constant shift, X shift) applied to the tuple at the marked value c0.

    Default: the shift induced by the polygon action, i.e. the change of
    height of c0 and the twisting shift of the marks at or before c0,
        n (X + a0) + b + sum_{c_i <= c0} u_i (X + a0 - x_i).
    ``verbatim=True`` uses instead
        n (X + a0) + b + sum_{flipped i, x_i <= a0} (X + x_i - a0),
    which ignores the cut direction and is not compatible with the polygon
    action (kept for comparison only).
    """
    if len(g.flips) != len(marks):
        raise LabelError(f"group element has {len(g.flips)} flips for {len(marks)} marks")
    a0, y0 = c0
    const, xs = g.n * a0 + g.b, g.n
    if verbatim:
        for c, f in zip(marks, g.flips):
            if f == -1 and c.x <= a0:
                const += c.x - a0
                xs += 1
        return const, xs
    for c, u in zip(marks, g.skews([c.cut for c in marks])):
        if u and (c.x, c.y) <= (a0, y0):
            const += u * (a0 - c.x)
            xs += u
    return const, xs


def act_on_tuple(g: GroupElement, marks: Sequence[MarkedPoint], c0, t: PinchTuple, *,
                 verbatim: bool = False) -> PinchTuple:
    const, xs = tuple_shift(g, marks, c0, verbatim=verbatim)
    return t.shifted(const, xs)


# ---------------------------------------------------------------------------
# labeled polygons


def distinct_values(R: SemitoricRepresentative) -> list[tuple[Fraction, Fraction]]:
    out = []
    for c in R.marks:
        p = (c.x, c.y)
        if p not in out:
            out.append(p)
    return out


@dataclass(frozen=True)
class LabeledPolygon:
    representative: SemitoricRepresentative
    simple: Optional[tuple[SimpleLabel, ...]] = None
    tuples: Optional[tuple[PinchTuple, ...]] = None

    def __post_init__(self):
        if (self.simple is None) == (self.tuples is None):
            raise LabelError("give exactly one of simple labels or pinch tuples")
        if self.representative.heightless:
            raise LabelError("labeled polygons need mark heights")
        if self.simple is not None:
            object.__setattr__(self, "simple", tuple(self.simple))
        else:
            object.__setattr__(self, "tuples", tuple(self.tuples))

    def issues(self) -> list[str]:
        R = self.representative
        out = []
        if self.simple is not None:
            if len(self.simple) != R.m:
                out.append(f"{len(self.simple)} simple labels for {R.m} marks")
            if len(distinct_values(R)) != R.m:
                out.append("simple labels need pairwise distinct marked points")
            return out
        vals = distinct_values(R)
        if len(self.tuples) != len(vals):
            out.append(f"{len(self.tuples)} tuples for {len(vals)} distinct marked values")
            return out
        for j, (p, t) in enumerate(zip(vals, self.tuples)):
            mult = sum(1 for c in R.marks if (c.x, c.y) == p)
            if t.n != mult:
                out.append(f"tuple {j} has {t.n} series for {mult} coinciding marks")
            v = verify_tuple(t)
            if not v.ok:
                out.append(f"tuple {j} violates " + ", ".join(map(str, v.violations)))
            for mu, s in enumerate(t.s):
                if s.coef(0, 0) != p[1]:
                    out.append(f"tuple {j} series {mu} has constant {s.coef(0, 0)} != height {p[1]}")
        return out


def act_on_labeled(L: LabeledPolygon, g: GroupElement, *, verbatim: bool = False) -> LabeledPolygon:
    R = L.representative
    R2 = apply_group(R, g)
    if L.simple is not None:
        kap = act_on_twisting(g, [c.x for c in R.marks], [l.kappa for l in L.simple], R.eps)
        return LabeledPolygon(R2, simple=tuple(SimpleLabel(l.series, k) for l, k in zip(L.simple, kap)))
    tuples = tuple(
        act_on_tuple(g, R.marks, p, t, verbatim=verbatim)
        for p, t in zip(distinct_values(R), L.tuples)
    )
    return LabeledPolygon(R2, tuples=tuples)


def as_tuples(L: LabeledPolygon) -> tuple[PinchTuple, ...]:
    if L.tuples is not None:
        return L.tuples
    out = []
    for c, lab in zip(L.representative.marks, L.simple):
        out.append(trivial_tuple(combine(lab) + TruncatedSeries.constant(lab.order, c.y)))
    return tuple(out)


def _cyclic_equal(t1: PinchTuple, t2: PinchTuple) -> bool:
    return t1.n == t2.n and any(t1.rotated(r) == t2 for r in range(t1.n))


def labels_match(L1: LabeledPolygon, L2: LabeledPolygon) -> bool:
    if L1.simple is not None and L2.simple is not None:
        return L1.simple == L2.simple
    t1, t2 = as_tuples(L1), as_tuples(L2)
    return len(t1) == len(t2) and all(_cyclic_equal(a, b) for a, b in zip(t1, t2))


def canonical_labeled(L: LabeledPolygon) -> LabeledPolygon:
    return act_on_labeled(L, canonical_element(L.representative))


def labeled_equivalent(L1: LabeledPolygon, L2: LabeledPolygon) -> bool:
    """Same orbit of (representative, labels).

    Both sides are moved to the canonical representative; the element doing
    so is unique up to the stabilizer of that representative, which is
    searched exhaustively.
    """
    R1, R2 = L1.representative, L2.representative
    if R1.m != R2.m or not equivalent(R1, R2):
        return False
    C1, C2 = canonical_labeled(L1), canonical_labeled(L2)
    for s in stabilizer(C1.representative):
        img = act_on_labeled(C1, s)
        if img.representative == C2.representative and labels_match(img, C2):
            return True
    return False
