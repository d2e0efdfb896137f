"""Hypergeometric periods of the quintic and the Picard-Fuchs operator.

Everything is expressed in ``v = exp(t/2)``: the closed periods ``I_0..I_3``
are even in ``v`` and the disk function ``J`` is odd.  Logarithmic
dependence on ``t`` is carried by :class:`LogSeries`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Sequence

from .arith import Series

__all__ = [
    "LogSeries",
    "double_factorial",
    "harmonic",
    "hyper_F",
    "hyper_G",
    "big_I",
    "series_J",
    "pf_apply",
    "pf_residual",
    "J_INHOMOGENEITY",
]

#: right-hand side coefficient of ``L J = (15/8) v``
J_INHOMOGENEITY = Fraction(15, 8)


class LogSeries:
    """Polynomial in ``t`` whose coefficients are series in ``v``.

    ``parts[j]`` multiplies ``t**j``.  Trailing zero parts are dropped, so
    ``t_degree`` is the highest power of ``t`` actually present.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[Series]):
        parts = list(parts)
        if not parts:
            raise ValueError("LogSeries needs at least one part")
        order = parts[0].order
        if any(p.order != order for p in parts):
            raise ValueError("all t-parts must share one order")
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        self.parts: tuple[Series, ...] = tuple(parts)

    @classmethod
    def from_series(cls, s: Series) -> "LogSeries":
        return cls([s])

    @classmethod
    def t_power(cls, j: int, order: int) -> "LogSeries":
        zero = Series.zero(order)
        return cls([zero] * j + [Series.one(order)])

    @property
    def order(self) -> int:
        return self.parts[0].order

    @property
    def t_degree(self) -> int:
        return len(self.parts) - 1

    def part(self, j: int) -> Series:
        if j < len(self.parts):
            return self.parts[j]
        return Series.zero(self.order)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def truncate(self, order: int) -> "LogSeries":
        return LogSeries([p.truncate(order) for p in self.parts])

    def __eq__(self, other) -> bool:
        if isinstance(other, LogSeries):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return "LogSeries(" + ", ".join(f"t^{j}: {p!r}" for j, p in enumerate(self.parts)) + ")"

    def _coerce(self, other) -> "LogSeries":
        if isinstance(other, LogSeries):
            return other
        if isinstance(other, Series):
            return LogSeries([other])
        return LogSeries([Series.monomial(0, self.order, other)])

    def __add__(self, other) -> "LogSeries":
        other = self._coerce(other)
        n = max(len(self.parts), len(other.parts))
        return LogSeries([self.part(j) + other.part(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "LogSeries":
        return LogSeries([-p for p in self.parts])

    def __sub__(self, other) -> "LogSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LogSeries":
        return (-self) + other

    def __mul__(self, other) -> "LogSeries":
        if isinstance(other, (Series, LogSeries)):
            other = self._coerce(other)
            out = [Series.zero(self.order)] * (len(self.parts) + len(other.parts) - 1)
            for i, a in enumerate(self.parts):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.parts):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return LogSeries(out)
        return LogSeries([p * other for p in self.parts])

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LogSeries":
        """Divide by a plain series (or scalar); ``t``-dependent divisors are not supported."""
        if isinstance(other, LogSeries):
            if other.t_degree:
                raise ValueError("cannot divide by a series with t-dependence")
            other = other.parts[0]
        return LogSeries([p / other for p in self.parts])

    def d_dt(self) -> "LogSeries":
        """``d/dt``: ``t^j v^m -> j t^(j-1) v^m + (m/2) t^j v^m``."""
        out = []
        for j, p in enumerate(self.parts):
            s = Series._raw(tuple(Fraction(m, 2) * c for m, c in enumerate(p.coeffs)))
            if j + 1 < len(self.parts):
                s = s + (j + 1) * self.parts[j + 1]
            out.append(s)
        return LogSeries(out)

    def times_et(self) -> "LogSeries":
        """Multiply by ``e^t = v**2``."""
        return LogSeries([p.shift(2) for p in self.parts])


def double_factorial(n: int) -> int:
    """``n!!`` with ``0!! = (-1)!! = 1``."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    return prod(range(n, 0, -2))


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, s) for s in range(1, n + 1)), Fraction(0))


def _quintic_ratio(r: int) -> int:
    return factorial(5 * r) // factorial(r) ** 5


def hyper_F(order: int) -> Series:
    """``sum_r (5r)!/(r!)^5 v^(2r)``."""
    cs = [Fraction(0)] * (order + 1)
    for r in range(order // 2 + 1):
        cs[2 * r] = Fraction(_quintic_ratio(r))
    return Series(cs, order)


def hyper_G(l: int, order: int) -> Series:
    """``sum_{r>=1} (5r)!/(r!)^5 H_{lr} v^(2r)`` with ``H_n`` the harmonic number."""
    if l < 1:
        raise ValueError("l must be positive")
    cs = [Fraction(0)] * (order + 1)
    for r in range(1, order // 2 + 1):
        cs[2 * r] = _quintic_ratio(r) * harmonic(l * r)
    return Series(cs, order)


_H_TRUNC = 4  # work modulo H^4


def _hmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * _H_TRUNC
    for i, x in enumerate(a):
        if x:
            for j in range(_H_TRUNC - i):
                out[i + j] += x * b[j]
    return out


def _inverse_power5(r: int) -> list[Fraction]:
    """``(H + r)^-5 = r^-5 (1 + H/r)^-5`` modulo ``H^4``."""
    base = Fraction(1, r ** 5)
    return [base * (-1) ** k * comb(k + 4, 4) / Fraction(r) ** k for k in range(_H_TRUNC)]


def _ratio_in_H(d: int) -> list[Fraction]:
    """``prod_{r<=5d}(5H+r) / prod_{r<=d}(H+r)^5`` as a polynomial mod ``H^4``."""
    acc = [Fraction(1)] + [Fraction(0)] * (_H_TRUNC - 1)
    for r in range(1, 5 * d + 1):
        acc = _hmul(acc, [Fraction(r), Fraction(5), Fraction(0), Fraction(0)])
    for r in range(1, d + 1):
        acc = _hmul(acc, _inverse_power5(r))
    return acc


@lru_cache(maxsize=16)
def big_I(order: int) -> tuple[LogSeries, LogSeries, LogSeries, LogSeries]:
    """The four closed periods ``I_0..I_3`` truncated at ``v^order``.

    ``sum_i I_i H^i = sum_d e^((H+d)t) R_d(H) mod H^4``; expanding
    ``e^(Ht) = sum_j t^j H^j / j!`` puts ``R_d[i-j]/j!`` at ``t^j v^(2d)``.
    """
    coeff = [[[Fraction(0)] * (order + 1) for _ in range(i + 1)] for i in range(_H_TRUNC)]
    for d in range(order // 2 + 1):
        rd = _ratio_in_H(d)
        for i in range(_H_TRUNC):
            for j in range(i + 1):
                coeff[i][j][2 * d] = rd[i - j] / factorial(j)
    return tuple(
        LogSeries([Series(cs, order) for cs in coeff[i]]) for i in range(_H_TRUNC)
    )  # type: ignore[return-value]


def series_J(order: int, method: str = "closed_form") -> Series:
    """The odd disk function ``J`` in ``v``.

    ``closed_form`` uses ``2 (5d)!!/(d!!)^5`` at ``v^d``; ``h_half`` evaluates
    the untruncated hypergeometric sum at ``H = 1/2`` (times 30).
    """
    cs = [Fraction(0)] * (order + 1)
    if method == "closed_form":
        for d in range(1, order + 1, 2):
            cs[d] = Fraction(2 * double_factorial(5 * d), double_factorial(d) ** 5)
    elif method == "h_half":
        half = Fraction(1, 2)
        for d in range((order - 1) // 2 + 1):
            num = prod((5 * half + r for r in range(1, 5 * d + 1)), start=Fraction(1))
            den = prod(((half + r) ** 5 for r in range(1, d + 1)), start=Fraction(1))
            cs[2 * d + 1] = 30 * num / den
    else:
        raise ValueError(f"unknown J method {method!r}")
    return Series(cs, order)


def pf_apply(a: LogSeries | Series) -> LogSeries:
    """Apply ``L = D^4 - 5 e^t (5D+1)(5D+2)(5D+3)(5D+4)`` with ``D = d/dt``."""
    if isinstance(a, Series):
        a = LogSeries.from_series(a)
    if a.t_degree > 4:
        raise ValueError("t-degree above 4 is outside the supported range")
    d4 = a.d_dt().d_dt().d_dt().d_dt()
    b = a
    for k in (4, 3, 2, 1):
        b = 5 * b.d_dt() + k * b
    return d4 - 5 * b.times_et()


def pf_residual(target: str, order: int) -> LogSeries:
    """Picard-Fuchs residual of ``target`` in ``{"I0".."I3", "J"}``.

    The residual is returned on the checked window ``v^0 .. v^(order-2)``;
    for ``J`` the inhomogeneous term ``(15/8) v`` is subtracted first.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    if target == "J":
        res = pf_apply(series_J(order)) - Series.monomial(1, order, J_INHOMOGENEITY)
    elif target in ("I0", "I1", "I2", "I3"):
        res = pf_apply(big_I(order)[int(target[1])])
    else:
        raise ValueError(f"unknown Picard-Fuchs target {target!r}")
    return res.truncate(order - 2)
