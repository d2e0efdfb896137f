from fractions import Fraction
from math import factorial

import pytest

from qme.arith import Series
from qme.hypergeom import (
    LogSeries,
    big_I,
    double_factorial,
    harmonic,
    hyper_F,
    hyper_G,
    pf_apply,
    pf_residual,
    series_J,
)


@pytest.mark.parametrize("n,expected", [(5, 15), (0, 1), (-1, 1), (9, 9 * 7 * 5 * 3 * 1), (8, 384)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


def test_double_factorial_rejects_below_minus_one():
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_hyper_F_coefficients():
    F = hyper_F(6)
    assert F[0] == 1
    assert F[2] == 120
    assert F[4] == Fraction(factorial(10), 2 ** 5) == 113400
    assert F.is_even()


def test_hyper_G_coefficients():
    assert hyper_G(1, 4)[0] == 0
    assert hyper_G(1, 4)[2] == 120
    assert hyper_G(5, 4)[2] == 120 * Fraction(137, 60) == 274
    assert hyper_G(5, 6).is_even()
    with pytest.raises(ValueError):
        hyper_G(0, 4)


def test_big_I_structure():
    order = 12
    i0, i1, i2, i3 = big_I(order)
    assert i0.t_degree == 0 and i0.parts[0] == hyper_F(order)
    assert [i.t_degree for i in (i1, i2, i3)] == [1, 2, 3]
    # d = 0 term is e^(Ht), i.e. t^i/i! at v^0
    for i, I in enumerate((i0, i1, i2, i3)):
        assert I.part(i)[0] == Fraction(1, factorial(i))
        for j in range(i):
            assert I.part(j)[0] == 0
        assert all(p.is_even() for p in I.parts)


def test_I1_is_t_I0_plus_mirror_correction():
    order = 16
    i0, i1, _, _ = big_I(order)
    F = hyper_F(order)
    assert i1.parts[1] == F
    assert i1.parts[0] == 5 * (hyper_G(5, order) - hyper_G(1, order))


def test_harmonic_numbers():
    assert harmonic(0) == 0
    assert harmonic(5) == Fraction(137, 60)


def test_J_methods():
    closed = series_J(9, "closed_form")
    half = series_J(9, "h_half")
    assert closed[1] == 30 == half[1]
    assert closed.is_odd() and half.is_odd()
    assert closed == half
    assert closed[3] == Fraction(2 * double_factorial(15), 3 ** 5)
    with pytest.raises(ValueError):
        series_J(5, "bogus")


def test_pf_on_constant():
    res = pf_apply(Series.one(6))
    assert res.t_degree == 0
    assert res.parts[0][2] == -120
    assert res.parts[0] == Series.monomial(2, 6, -120)


def test_pf_on_t():
    # prod_k (5D + k) t = P(0) t + P'(0) with P(0) = 24, P'(0) = 24*5*(1 + 1/2 + 1/3 + 1/4) = 250
    res = pf_apply(LogSeries.t_power(1, 6))
    assert res.part(1) == Series.monomial(2, 6, -5 * 24)
    assert res.part(0) == Series.monomial(2, 6, -5 * 250)
    d4 = LogSeries.t_power(1, 6).d_dt().d_dt().d_dt().d_dt()
    assert d4.is_zero()


def test_d_dt_leibniz():
    # d/dt (t v^2) = v^2 + t v^2
    f = LogSeries([Series.zero(4), Series.monomial(2, 4)])
    df = f.d_dt()
    assert df.part(0) == Series.monomial(2, 4)
    assert df.part(1) == Series.monomial(2, 4)


@pytest.mark.parametrize("target", ["I0", "I1", "I2", "I3"])
def test_homogeneous_residuals_vanish(target):
    res = pf_residual(target, 20)
    assert res.order == 18
    assert res.is_zero()


def test_inhomogeneous_residual_vanishes():
    assert pf_residual("J", 21).is_zero()
    # without the inhomogeneous correction the residual is exactly (15/8) v
    raw = pf_apply(series_J(21))
    assert raw.parts[0] == Series.monomial(1, 21, Fraction(15, 8))


def test_pf_residual_rejects_unknown_target():
    with pytest.raises(ValueError):
        pf_residual("I4", 10)


def test_broken_series_is_detected():
    i0 = big_I(12)[0]
    tampered = i0 + Series.monomial(6, 12, 1)
    assert not pf_apply(tampered).truncate(10).is_zero()
