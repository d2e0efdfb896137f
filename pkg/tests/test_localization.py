from fractions import Fraction

import pytest

from qme.arith import Polynomial, RatFunc, ratfunc_eval, ratfunc_subst_reciprocal
from qme.hypergeom import double_factorial
from qme.localization import (
    binomial_identity_residual,
    c_p,
    central_degree_identity_residual,
    disk_constant,
    local_disk_invariant,
    local_term,
    quintic_degree_sum,
    quintic_term,
    x_limit_check,
)


def pairs(*factors):
    """prod (a^2 - b^2 x^2) over (a, b)."""
    out = Polynomial((1,))
    for a, b in factors:
        out = out * Polynomial((a * a, 0, -b * b))
    return out


def test_c_p_degree_one():
    assert c_p(1) == RatFunc(15) / RatFunc(pairs((1, 1)))


def test_c_p_sign_and_poles():
    for p in (1, 3, 5, 7, 9):
        f = c_p(p)
        assert f.num.degree == 0
        assert f.den.degree == p + 1
        sign = 1 if (p - 1) // 2 % 2 == 0 else -1
        assert (ratfunc_eval(f, 0) > 0) == (sign > 0)
    with pytest.raises(ValueError):
        c_p(2)


def test_quintic_term_anchors():
    assert quintic_term(1, 0) == RatFunc(Fraction(15, 2)) / RatFunc(pairs((1, 1)))
    assert quintic_term(3, 0) == RatFunc(Fraction(-2027025, 3888)) / RatFunc(
        Polynomial((1, 0, -9)) * Polynomial((1, 0, -1)))
    assert quintic_term(1, 1) == RatFunc(Fraction(2027025, 48)) / RatFunc(
        Polynomial((1, 0, -1)) * Polynomial((9, 0, -1)))


def test_quintic_term_poles():
    for p, r in [(1, 2), (3, 1), (5, 0)]:
        f = quintic_term(p, r)
        d = p + 2 * r
        for i in range(1, d + 1, 2):
            assert f.den(Fraction(i, p)) == 0
            assert f.den(Fraction(-i, p)) == 0
        assert f.den.degree == 2 * ((d + 1) // 2)


def test_disk_constant_values():
    assert disk_constant(1) == 30
    assert disk_constant(3) == Fraction(4054050, 243)
    assert disk_constant(5) == Fraction(2 * double_factorial(25), 15 ** 5)


@pytest.mark.parametrize("d,expected", [(1, 30), (3, Fraction(4054050, 243))])
def test_degree_sum_anchors(d, expected):
    total, value = quintic_degree_sum(d)
    assert total == RatFunc(expected)
    assert value == expected


def test_degree_one_cancellation_by_hand():
    t = quintic_term(1, 0)
    assert ratfunc_subst_reciprocal(t) == RatFunc(Fraction(15, 2)) * RatFunc.x() * RatFunc.x() / (
        RatFunc.x() * RatFunc.x() - 1)
    assert 4 * (t + ratfunc_subst_reciprocal(t)) == RatFunc(30)


@pytest.mark.parametrize("d", range(1, 16, 2))
def test_weight_independence(d):
    total, value = quintic_degree_sum(d)
    assert total.num.degree == 0 and total.den.degree == 0
    assert value == disk_constant(d)
    assert x_limit_check(d) == value


def test_single_fixed_point_pair_is_weight_dependent():
    # the i = 1, 2 part alone is not constant, only the full sum is
    part = sum((quintic_term(3 - 2 * r, r) for r in range(2)), RatFunc(0))
    assert part.den.degree > 0


def test_x_limit_anchors():
    assert x_limit_check(1) == 30
    assert x_limit_check(3) == Fraction(4054050, 243)
    assert ratfunc_eval(ratfunc_subst_reciprocal(quintic_term(1, 0)), 0) == 0


@pytest.mark.parametrize("d,lhs,rhs", [(1, 2, 2), (3, -16, Fraction(-32, 2))])
def test_binomial_identity_by_hand(d, lhs, rhs):
    assert lhs == rhs
    assert binomial_identity_residual(d) == 0


def test_identities_through_99():
    for d in range(1, 100, 2):
        assert binomial_identity_residual(d) == 0
        assert central_degree_identity_residual(d) == 0


@pytest.mark.parametrize("p,r,expected", [(1, 0, 1), (3, 0, Fraction(-1, 72)), (1, 1, Fraction(1, 8))])
def test_local_term(p, r, expected):
    assert local_term(p, r) == expected


@pytest.mark.parametrize("d,expected", [(1, 2), (3, Fraction(2, 9)), (5, Fraction(2, 25))])
def test_local_disk_invariant(d, expected):
    assert local_disk_invariant(d) == expected


def test_local_disk_invariants_through_25():
    for d in range(1, 26, 2):
        assert local_disk_invariant(d) == Fraction(2, d * d)
