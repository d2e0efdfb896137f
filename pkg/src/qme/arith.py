"""Exact arithmetic: rationals, truncated power series, univariate rational functions.

Scalars are :class:`fractions.Fraction`.  A :class:`Series` is a dense,
truncated power series in a single variable ``v``; the pipelines use
``v = exp(t/2)`` so that closed-string series are even and the disk
potential is odd.  :class:`Polynomial` and :class:`RatFunc` are univariate
in ``x``.

All values are immutable; every operation returns a fresh object.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "rat_make",
    "Series",
    "series_mul",
    "series_div",
    "series_exp",
    "series_sqrt",
    "series_compose",
    "series_revert",
    "Polynomial",
    "RatFunc",
    "PoleError",
    "ratfunc_arith",
    "ratfunc_subst_reciprocal",
    "ratfunc_eval",
    "ratfunc_constant_value",
]


def rat_make(num: int, den: int = 1) -> Fraction:
    """Reduced rational ``num/den`` with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _to_integers(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale a coefficient vector to integers over a common denominator."""
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class Series:
    """Power series ``sum_m coeffs[m] v^m`` truncated after ``v^order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("order required for an empty coefficient list")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Series":
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((1,), order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "Series":
        """``coeff * v**power`` (zero if ``power > order``)."""
        cs = [Fraction(0)] * (order + 1)
        if power <= order:
            cs[power] = _frac(coeff)
        return cls._raw(tuple(cs))

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, m: int) -> Fraction:
        return self._coeffs[m]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*v^{m}" for m, c in enumerate(self._coeffs) if c]
        return f"Series({' + '.join(terms) or '0'}, order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}")

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return Series._raw(tuple(a + b for a, b in zip(self._coeffs, other._coeffs)))
        c = _frac(other)
        return Series._raw((self._coeffs[0] + c,) + self._coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._raw(tuple(-a for a in self._coeffs))

    def __sub__(self, other) -> "Series":
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        c = _frac(other)
        return Series._raw(tuple(a * c for a in self._coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_div(self, other)
        c = _frac(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return Series._raw(tuple(a / c for a in self._coeffs))

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return Series.one(self.order) / self ** (-n)
        result, base = Series.one(self.order), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exp(self) -> "Series":
        return series_exp(self)

    def sqrt(self) -> "Series":
        return series_sqrt(self)

    def compose(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def revert(self) -> "Series":
        return series_revert(self)

    def truncate(self, order: int) -> "Series":
        """Re-truncate at ``order``; raising the order pads with zeros."""
        return Series(self._coeffs, order)

    def shift(self, k: int) -> "Series":
        """Multiply by ``v**k`` (``k >= 0``), dropping what falls past the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        n = len(self._coeffs)
        return Series._raw((Fraction(0),) * min(k, n) + self._coeffs[: max(n - k, 0)])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_even(self) -> bool:
        return not any(self._coeffs[1::2])

    def is_odd(self) -> bool:
        return not any(self._coeffs[0::2])

    def even_part_in_square(self) -> "Series":
        """For an even series ``f(v)`` return ``g`` with ``g(v**2) = f(v)``."""
        if not self.is_even():
            raise ValueError("series is not even")
        return Series._raw(self._coeffs[0::2])

    def substitute_square(self, order: int | None = None) -> "Series":
        """Return ``f(v**2)``, truncated at ``order`` (default ``2*self.order``)."""
        if order is None:
            order = 2 * self.order
        cs = [Fraction(0)] * (order + 1)
        for m, c in enumerate(self._coeffs):
            if 2 * m > order:
                break
            cs[2 * m] = c
        return Series._raw(tuple(cs))


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order + 1
    ia, da = _to_integers(a.coeffs)
    ib, db = _to_integers(b.coeffs)
    nz_b = [(j, y) for j, y in enumerate(ib) if y]
    acc = [0] * n
    for i, x in enumerate(ia):
        if not x:
            continue
        for j, y in nz_b:
            if i + j >= n:
                break
            acc[i + j] += x * y
    den = da * db
    return Series._raw(tuple(Fraction(c, den) for c in acc))


def series_div(a: Series, b: Series) -> Series:
    """Quotient ``q`` with ``q * b == a`` up to truncation."""
    a._check(b)
    b0 = b[0]
    if b0 == 0:
        raise ZeroDivisionError("series divisor has zero constant term")
    bs = b.coeffs
    q: list[Fraction] = []
    for m, am in enumerate(a.coeffs):
        s = am
        for k in range(1, m + 1):
            if bs[k]:
                s -= bs[k] * q[m - k]
        q.append(s / b0)
    return Series._raw(tuple(q))


def series_exp(a: Series) -> Series:
    """``exp(a)`` from ``m e_m = sum_k k a_k e_{m-k}``."""
    if a[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    cs = a.coeffs
    e = [Fraction(1)]
    for m in range(1, a.order + 1):
        s = sum((k * cs[k] * e[m - k] for k in range(1, m + 1) if cs[k]), Fraction(0))
        e.append(s / m)
    return Series._raw(tuple(e))


def series_sqrt(a: Series) -> Series:
    """Square root with constant term 1."""
    if a[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    cs = a.coeffs
    s = [Fraction(1)]
    for m in range(1, a.order + 1):
        acc = cs[m] - sum((s[k] * s[m - k] for k in range(1, m)), Fraction(0))
        s.append(acc / 2)
    return Series._raw(tuple(s))


def series_compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(v))`` by Horner evaluation."""
    outer._check(inner)
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    result = Series.monomial(0, outer.order, outer[outer.order])
    for k in range(outer.order - 1, -1, -1):
        result = result * inner + outer[k]
    return result


def series_revert(a: Series) -> Series:
    """Compositional inverse by Lagrange inversion.

    With ``a = v / h(v)``, ``[v^n] a^{-1} = [v^{n-1}] h^n / n``.
    """
    if a[0] != 0 or a.order < 1 or a[1] == 0:
        raise ValueError("series_revert needs a[0] == 0 and a[1] != 0")
    n_max = a.order
    # a/v is only known through v^(order-1), which is all the inversion reads
    g = Series._raw(a.coeffs[1:] + (Fraction(0),))
    h = Series.one(n_max) / g
    out = [Fraction(0)]
    power = h
    for n in range(1, n_max + 1):
        out.append(power[n - 1] / n)
        if n < n_max:
            power = power * h
    return Series._raw(tuple(out))


# ---------------------------------------------------------------------------
# polynomials and rational functions in x
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense polynomial in ``x``; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Polynomial":
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self._coeffs) if c]
        return f"Polynomial({' + '.join(terms) or '0'})"

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial((other,))
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _frac(other)
            if c == 0:
                return Polynomial._raw(())
            return Polynomial._raw(tuple(a * c for a in self._coeffs))
        if not self._coeffs or not other._coeffs:
            return Polynomial._raw(())
        ia, da = _to_integers(self._coeffs)
        ib, db = _to_integers(other._coeffs)
        acc = [0] * (len(ia) + len(ib) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    acc[i + j] += x * y
        den = da * db
        return Polynomial._raw(tuple(Fraction(c, den) for c in acc))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial((1,))
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = other.degree
        lead = other.lead
        oc = other._coeffs
        if len(rem) <= dd:
            return Polynomial._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lead
            quot[k - dd] = q
            base = k - dd
            for j in range(dd):
                if oc[j]:
                    rem[base + j] -= q * oc[j]
            rem[k] = Fraction(0)
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if not self._coeffs:
            return self
        lead = self.lead
        if lead == 1:
            return self
        return Polynomial._raw(tuple(c / lead for c in self._coeffs))

    def primitive(self) -> "Polynomial":
        """Integer-coefficient, content-free multiple with positive lead."""
        if not self._coeffs:
            return self
        ints, _ = _to_integers(self._coeffs)
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Polynomial._raw(tuple(Fraction(c // g) for c in ints))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd over the rationals (zero only when both inputs are zero)."""
        a, b = self.primitive(), other.primitive()
        if a.degree < b.degree:
            a, b = b, a
        while b:
            a, b = b, (a % b).primitive()
        return a.monic()

    def __call__(self, x0) -> Fraction:
        x0 = _frac(x0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def reversed(self, n: int | None = None) -> "Polynomial":
        """``x**n * p(1/x)`` with ``n`` defaulting to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal length below degree")
        cs = self._coeffs + (Fraction(0),) * (n + 1 - len(self._coeffs))
        return Polynomial(reversed(cs))

    def shift_up(self, k: int) -> "Polynomial":
        """Multiply by ``x**k``."""
        if not self._coeffs:
            return self
        return Polynomial._raw((Fraction(0),) * k + self._coeffs)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a pole."""


_ONE = Polynomial((1,))


class RatFunc:
    """Reduced quotient ``num/den`` of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,))
        if den is None:
            den = _ONE
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = num, _ONE
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lead = den.lead
            if lead != 1:
                num = num * (1 / lead)
                den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: Polynomial, den: Polynomial) -> "RatFunc":
        """Wrap a pair already known to be coprime; only fixes the lead."""
        obj = object.__new__(cls)
        if num.is_zero():
            den = _ONE
        elif den.lead != 1:
            num = num * (1 / den.lead)
            den = den.monic()
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def x(cls) -> "RatFunc":
        return cls._reduced(Polynomial.x(), _ONE)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r} / {self.den!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFunc(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_reduced(self) -> bool:
        return self.den.lead == 1 and self.num.gcd(self.den).degree == 0

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Polynomial):
            return RatFunc._reduced(other, _ONE)
        return RatFunc._reduced(Polynomial((_frac(other),)), _ONE)

    def __add__(self, other) -> "RatFunc":
        other = self._coerce(other)
        # reduced inputs: common factors of the sum and denominator divide gcd(den, den')
        g = self.den.gcd(other.den)
        if g.degree == 0:
            num = self.num * other.den + other.num * self.den
            return RatFunc._reduced(num, self.den * other.den)
        da = self.den.exact_div(g)
        db = other.den.exact_div(g)
        num = self.num * db + other.num * da
        den = da * other.den
        if num.is_zero():
            return RatFunc._reduced(num, _ONE)
        g2 = num.gcd(g)
        if g2.degree > 0:
            num = num.exact_div(g2)
            den = den.exact_div(g2)
        return RatFunc._reduced(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._reduced(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RatFunc._reduced(Polynomial(), _ONE)
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = self.num, other.den
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = other.num, self.den
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RatFunc._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc._reduced(other.den, other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) / self

    def __call__(self, x0) -> Fraction:
        return ratfunc_eval(self, x0)


def ratfunc_arith(op: str, a: RatFunc, b: RatFunc) -> RatFunc:
    """Apply ``op`` in ``{"add", "sub", "mul", "div"}``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational-function operation {op!r}")


def ratfunc_subst_reciprocal(f: RatFunc) -> RatFunc:
    """``f(1/x)`` with polynomial numerator and denominator."""
    n, m = f.num.degree, f.den.degree
    if f.is_zero():
        return f
    num = f.num.reversed()
    den = f.den.reversed()
    if m >= n:
        num = num.shift_up(m - n)
    else:
        den = den.shift_up(n - m)
    return RatFunc(num, den)


def ratfunc_eval(f: RatFunc, x0) -> Fraction:
    """Exact value ``f(x0)``; :class:`PoleError` at a pole."""
    d = f.den(x0)
    if d == 0:
        raise PoleError("evaluation at pole")
    return f.num(x0) / d


def ratfunc_constant_value(f: RatFunc) -> Fraction | None:
    """The constant value of ``f``, or ``None`` when ``f`` is not constant."""
    if f.den.degree == 0 and f.num.degree <= 0:
        return f.num(0) / f.den.lead
    return None
