from fractions import Fraction

import pytest
import sympy as sp

from qme.arith import Series
from qme.hypergeom import big_I
from qme.mirror import (
    InvariantTable,
    closed_instanton_series,
    closed_invariants,
    disk_invariants,
    disk_potential,
    half_qT,
    mirror_map_delta,
)


def test_mirror_map_delta():
    delta = mirror_map_delta(10)
    assert delta[0] == 0
    assert delta[2] == 770
    assert delta.is_even()


def test_mirror_map_matches_period_ratio():
    order = 20
    i0, i1, _, _ = big_I(order)
    ratio = i1 / i0.parts[0]
    assert ratio.parts[1] == Series.one(order)
    assert ratio.parts[0] == mirror_map_delta(order)


def test_half_qT():
    u = half_qT(11)
    assert u[0] == 0 and u[1] == 1
    assert u[3] == 385
    assert u * u == mirror_map_delta(11).exp().shift(2)


@pytest.mark.parametrize("d,expected", [(1, 30), (3, Fraction(4600, 3)), (5, Fraction(5441256, 5))])
def test_disk_invariants_low_degree(d, expected):
    assert disk_invariants(5)[d] == expected


def test_disk_invariants_rejects_even_degree():
    with pytest.raises(ValueError):
        disk_invariants(4)
    with pytest.raises(ValueError):
        disk_invariants(9, order=7)


def test_disk_potential_is_odd():
    assert disk_potential(31).is_odd()


def test_disk_refinement_stability():
    small = disk_invariants(11)
    for order in (11, 13, 20, 31):
        assert disk_invariants(11, order=order) == small
    assert disk_invariants(29).restrict(11) == small


def test_closed_potential_t_parts_and_constant():
    series = closed_instanton_series(6)
    assert series[0] == 0
    assert series[1] == 2875


def test_closed_refinement_stability():
    longer = closed_instanton_series(12)
    assert closed_invariants(8) == InvariantTable("closed_N", 8, {d: longer[d] for d in range(1, 9)})
    assert closed_invariants(10).restrict(5) == closed_invariants(5)


def test_N1_desk_expansion():
    # independent expansion of the closed prediction through first order in q = e^t
    H, t, q = sp.symbols("H t q")
    r1 = sp.prod([5 * H + r for r in range(1, 6)]) / (H + 1) ** 5
    # e^((H+d)t) = e^(Ht) q^d, kept to d <= 1; t and q are independent symbols
    gen = sp.exp(H * t) * (1 + q * r1)
    coeffs = sp.Poly(sp.series(gen, H, 0, 4).removeO(), H).all_coeffs()[::-1]
    I = [sp.expand(c) for c in coeffs]
    T = I[1] / I[0]
    potential = sp.Rational(5, 2) * (I[1] * I[2] / I[0] ** 2 - I[3] / I[0])
    instanton = sp.series(potential - sp.Rational(5, 6) * T ** 3, q, 0, 2).removeO()
    instanton = sp.simplify(sp.expand(instanton))
    # e^T = q (1 + O(q)), so N_1 is the q coefficient
    assert sp.expand(instanton).coeff(q, 0) == 0
    assert sp.simplify(sp.expand(instanton).coeff(q, 1)) == 2875
    assert closed_invariants(1)[1] == 2875


def test_invariant_table_validation():
    with pytest.raises(ValueError):
        InvariantTable("disk_N", 3, {2: 1})
    with pytest.raises(ValueError):
        InvariantTable("closed_N", 3, {0: 1})
    with pytest.raises(ValueError):
        InvariantTable("weird", 3, {})
    t = InvariantTable("closed_N", 2, {2: 5, 1: Fraction(1, 2)})
    assert t.degrees() == [1, 2]
