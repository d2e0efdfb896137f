"""Equivariant-localization cross-checks in the weight ratio ``x = lambda'/lambda``.

Every fixed-locus contribution is homogeneous of degree 0 in the two torus
weights, so setting ``lambda = 1`` leaves rational functions of ``x``.  The
contributions at fixed points 1, 2 are :func:`quintic_term`; those at 3, 4
are the same functions at ``1/x``.  Summed over all ``(p, r)`` with
``p + 2r = d`` the total must be independent of ``x``.

:func:`c_p` is the bare intersection-disk factor.  The degree sums use
:func:`quintic_term`, which already absorbs that factor together with the
pairing against the mirror-transformed correlator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod

from .arith import Polynomial, RatFunc, ratfunc_eval, ratfunc_subst_reciprocal
from .hypergeom import double_factorial
from .mirror import PipelineError

__all__ = [
    "WeightDependenceError",
    "c_p",
    "quintic_term",
    "quintic_degree_sum",
    "x_limit_check",
    "binomial_identity_residual",
    "central_degree_identity_residual",
    "local_term",
    "local_disk_invariant",
    "disk_constant",
]


class WeightDependenceError(PipelineError):
    pass


def _sign(p: int) -> int:
    return -1 if (p - 1) // 2 % 2 else 1


def _check_odd(n: int, name: str = "p") -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"{name} must be odd and positive, got {n}")


def disk_constant(d: int) -> Fraction:
    """``2 (5d)!! / (d!!)^5``."""
    return Fraction(2 * double_factorial(5 * d), double_factorial(d) ** 5)


def _pole_pair(a: int, b: int) -> Polynomial:
    """``(a - b x)(a + b x) = a^2 - b^2 x^2``."""
    return Polynomial((a * a, 0, -b * b))


def c_p(p: int) -> RatFunc:
    """Intersection-disk rational function at ``lambda = 1, lambda' = x``.

    Each factor ``(1 - 2i/p) -/+ x`` is cleared of its ``1/p`` to
    ``(p - 2i -/+ p x)/p``; the ``p^(p+1)`` collected this way moves up.
    """
    _check_odd(p)
    coeff = (Fraction(_sign(p), p) * Fraction(2, p)
             * Fraction(double_factorial(5 * p), factorial(p) * double_factorial(p))
             * Fraction(1, 2 * p) ** p * p ** (p + 1))
    den = prod((_pole_pair(p - 2 * i, p) for i in range((p - 1) // 2 + 1)), start=Polynomial((1,)))
    return RatFunc(Polynomial((coeff,)), den)


def quintic_term(p: int, r: int) -> RatFunc:
    """Fixed-point summand of central degree ``p`` and complementary degree ``r``."""
    _check_odd(p)
    if r < 0:
        raise ValueError("r must be non-negative")
    d = p + 2 * r
    coeff = (Fraction(_sign(p), factorial(r) * factorial(p + r) * p)
             * Fraction(double_factorial(5 * d), 2 ** d * double_factorial(d)))
    den = prod((_pole_pair(i, p) for i in range(1, d + 1, 2)), start=Polynomial((1,)))
    return RatFunc(Polynomial((coeff,)), den)


def _decompositions(d: int):
    return [(d - 2 * r, r) for r in range((d - 1) // 2 + 1)]


def quintic_degree_sum(d: int) -> tuple[RatFunc, Fraction]:
    """Total degree-``d`` contribution ``4 sum [term(x) + term(1/x)]`` and its value."""
    _check_odd(d, "d")
    total = RatFunc(0)
    for p, r in _decompositions(d):
        term = quintic_term(p, r)
        total = total + term + ratfunc_subst_reciprocal(term)
    total = total * 4
    if total.den.degree != 0 or total.num.degree > 0:
        raise WeightDependenceError(f"weight dependence detected in degree {d}")
    return total, ratfunc_eval(total, 0)


def x_limit_check(d: int) -> Fraction:
    """Value of the degree-``d`` sum from the ``x -> 0`` limit of fixed points 1, 2.

    Checks that the reciprocal summands vanish at ``x = 0`` and that the limit
    agrees with the weight-independent constant.
    """
    _check_odd(d, "d")
    value = Fraction(0)
    for p, r in _decompositions(d):
        term = quintic_term(p, r)
        if ratfunc_eval(ratfunc_subst_reciprocal(term), 0) != 0:
            raise PipelineError(f"reciprocal summand ({p}, {r}) survives x -> 0")
        value += ratfunc_eval(term, 0)
    value *= 4
    _, constant = quintic_degree_sum(d)
    if value != constant:
        raise PipelineError(f"x -> 0 limit {value} differs from constant {constant}")
    return value


def binomial_identity_residual(d: int) -> Fraction:
    """``sum_k C(d,k)(-1)^k d/(d-2k)`` minus its closed form; zero for odd ``d``."""
    _check_odd(d, "d")
    lhs = sum((Fraction(comb(d, k) * (-1) ** k * d, d - 2 * k) for k in range(d + 1)), Fraction(0))
    rhs = Fraction(_sign(d) * 2 ** (2 * d - 1), comb(d - 1, (d - 1) // 2))
    return lhs - rhs


def central_degree_identity_residual(d: int) -> Fraction:
    """Alternating sum over central degrees ``p`` minus ``2^(d-1)/(d!!)^2``."""
    _check_odd(d, "d")
    lhs = Fraction(0)
    for p, r in _decompositions(d):
        lhs += Fraction(_sign(p), factorial(r) * factorial(r + p) * p)
    return lhs - Fraction(2 ** (d - 1), double_factorial(d) ** 2)


def local_term(p: int, r: int) -> Fraction:
    """Summand of the local O(-1)+O(-1) disk potential (without the overall 2)."""
    _check_odd(p)
    d = p + 2 * r
    value = Fraction(1, 2 ** (d - 1)) / (d * d) * Fraction(_sign(p), p)
    value *= Fraction(double_factorial(p) ** 2, factorial(p) * factorial(r))
    value *= Fraction(prod((p + 2 * i) ** 2 for i in range(1, r + 1)),
                      prod(p + i for i in range(1, r + 1)))
    return value


def local_disk_invariant(d: int) -> Fraction:
    """Local disk invariant of degree ``d``; must equal ``2/d^2``."""
    _check_odd(d, "d")
    value = 2 * sum((local_term(p, r) for p, r in _decompositions(d)), Fraction(0))
    if value != Fraction(2, d * d):
        raise PipelineError(f"local disk invariant {value} != 2/{d * d}")
    return value
