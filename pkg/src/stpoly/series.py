"""Truncated bivariate power series over Q.

A :class:`TruncatedSeries` of order K keeps the coefficients of X^i Y^j with
i + j <= K.  All arithmetic truncates back to the same order, so identities
between series are identities "at order K".
"""

from __future__ import annotations

import os
import re
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .geometry import format_rational, rational

DEFAULT_ORDER = 6
ORDER_ENV = "STPOLY_TRUNCATION_ORDER"


class SeriesError(ValueError):
    pass


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORDER
    try:
        K = int(raw)
    except ValueError:
        raise SeriesError(f"{ORDER_ENV} must be a positive integer, got {raw!r}") from None
    if K < 1:
        raise SeriesError(f"{ORDER_ENV} must be a positive integer, got {raw!r}")
    return K


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise SeriesError("order must be positive")
        clean = {}
        for (i, j), c in dict(self.coeffs).items():
            if i < 0 or j < 0:
                raise SeriesError(f"negative exponent in {(i, j)}")
            c = rational(c)
            if c and i + j <= self.order:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs.items())))

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls, K: int) -> "TruncatedSeries":
        return cls(K, {})

    @classmethod
    def constant(cls, K: int, c) -> "TruncatedSeries":
        return cls(K, {(0, 0): rational(c)})

    @classmethod
    def X(cls, K: int) -> "TruncatedSeries":
        return cls(K, {(1, 0): Fraction(1)})

    @classmethod
    def Y(cls, K: int) -> "TruncatedSeries":
        return cls(K, {(0, 1): Fraction(1)})

    def coef(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def with_coef(self, i: int, j: int, c) -> "TruncatedSeries":
        d = dict(self.coeffs)
        d[(i, j)] = rational(c)
        return TruncatedSeries(self.order, d)

    # arithmetic -----------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.constant(self.order, other)
        self._check(other)
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, 0) + c
        return TruncatedSeries(self.order, d)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "TruncatedSeries":
        s = rational(s)
        return TruncatedSeries(self.order, {k: s * c for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        K = self.order
        d: dict = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                if i1 + i2 + j1 + j2 <= K:
                    key = (i1 + i2, j1 + j2)
                    d[key] = d.get(key, 0) + a * b
        return TruncatedSeries(K, d)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise SeriesError("negative power")
        out = TruncatedSeries.constant(self.order, 1)
        for _ in range(e):
            out = out * self
        return out

    def low_degree(self) -> int | None:
        """Lowest total degree with a nonzero coefficient (None for 0)."""
        return min((i + j for i, j in self.coeffs), default=None)

    def __str__(self) -> str:
        return format_series(self)


@lru_cache(maxsize=512)
def _powers(g: "TruncatedSeries") -> tuple[dict, ...]:
    out = [TruncatedSeries.constant(g.order, 1)]
    for _ in range(g.order):
        out.append(out[-1] * g)
    return tuple(p.coeffs for p in out)


def compose_series(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(X, g(X, Y)) at the common order; g must have zero constant term."""
    f._check(g)
    if g.coef(0, 0) != 0:
        raise SeriesError("inner series must have zero constant term")
    K = f.order
    gp = _powers(g)
    acc: dict = {}
    for (i, j), c in f.coeffs.items():
        # X^i * g^j: a shift of the cached power in the X exponent
        for (p, q), d in gp[j].items():
            if p + i + q <= K:
                key = (p + i, q)
                acc[key] = acc.get(key, 0) + c * d
    return TruncatedSeries(K, acc)


def invert_in_Y(g: TruncatedSeries) -> TruncatedSeries:
    """h with g(X, h(X, Y)) = Y = h(X, g(X, Y)) at order K.

    Newton-free fixed point: h <- h + (Y - g(X, h)) / c, with c the Y
    coefficient of g.  Each pass raises the degree of the error by one.
    """
    if g.coef(0, 0) != 0:
        raise SeriesError("series to invert must have zero constant term")
    c = g.coef(0, 1)
    if c <= 0:
        raise SeriesError("series to invert must have positive Y coefficient")
    K = g.order
    Y = TruncatedSeries.Y(K)
    h = Y.scale(1 / c)
    for _ in range(K + 1):
        err = Y - compose_series(g, h)
        if not err.coeffs:
            break
        h = h + err.scale(1 / c)
    return h


# text format ----------------------------------------------------------------

_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?"
    r"(?P<mono>(?:\*?[XY](?:\^\d+)?)*)$"
)
_FACTOR = re.compile(r"([XY])(?:\^(\d+))?")


def parse_series(text: str, order: int | None = None) -> TruncatedSeries:
    """Parse ``"1/3*X + Y - 2*X^2*Y"`` style text."""
    K = default_order() if order is None else order
    s = text.replace(" ", "")
    if not s:
        raise SeriesError("empty series")
    if any(ch in s for ch in ".eE"):
        raise SeriesError(f"floating point forbidden: {text!r}")
    if s[0] not in "+-":
        s = "+" + s
    parts = re.findall(r"[+-][^+-]*", s)
    if "".join(parts) != s:
        raise SeriesError(f"malformed series {text!r}")
    coeffs: dict = {}
    for part in parts:
        sign, body = (-1 if part[0] == "-" else 1), part[1:]
        m = _TERM.match(body)
        if not body or m is None or (m.group("coef") is None and not m.group("mono")):
            raise SeriesError(f"malformed term {part!r} in {text!r}")
        mono = m.group("mono")
        if m.group("coef") is None and mono.startswith("*"):
            raise SeriesError(f"malformed term {part!r} in {text!r}")
        if m.group("coef") is not None and mono and not mono.startswith("*"):
            raise SeriesError(f"missing '*' in term {part!r}")
        try:
            c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise SeriesError(f"zero denominator in {part!r}") from None
        i = j = 0
        for var, exp in _FACTOR.findall(mono):
            e = int(exp) if exp else 1
            if var == "X":
                i += e
            else:
                j += e
        if i + j > K:
            raise SeriesError(f"term {part!r} exceeds truncation order {K}")
        coeffs[(i, j)] = coeffs.get((i, j), 0) + sign * c
    return TruncatedSeries(K, coeffs)


def _monomial(i: int, j: int) -> str:
    f = []
    if i:
        f.append("X" if i == 1 else f"X^{i}")
    if j:
        f.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(f)


def format_series(s: TruncatedSeries) -> str:
    terms = sorted(s.coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0]))
    if not terms:
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _monomial(i, j)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if n == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
