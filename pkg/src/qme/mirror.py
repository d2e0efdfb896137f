"""Mirror map, change of variables, and the disk and closed potentials.

The disk potential is obtained from ``F^disk(T(t)) = J(t)/I_0(t)``: the ratio
is rewritten in ``u = exp(T/2)`` by reverting ``u(v)``.  The closed
potential comes from the (5/2)(I_1 I_2 - I_0 I_3)/I_0^2 prediction with
its cubic part ``(5/6) T^3`` removed, rewritten in ``w = exp(T)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .arith import Series
from .hypergeom import big_I, hyper_F, hyper_G, series_J

__all__ = [
    "TABLE_KINDS",
    "ODD_KINDS",
    "InvariantTable",
    "PipelineError",
    "mirror_map_delta",
    "half_qT",
    "disk_potential",
    "disk_invariants",
    "disk_invariants_from_ratio",
    "closed_instanton_series",
    "closed_invariants",
    "DISK_HEADROOM",
]

TABLE_KINDS = ("closed_N", "closed_n", "disk_N", "disk_n", "real_n", "local_L")
ODD_KINDS = frozenset({"disk_N", "disk_n", "real_n", "local_L"})

#: extra half-degrees carried beyond the highest requested coefficient
DISK_HEADROOM = 2


class PipelineError(ArithmeticError):
    """An internal consistency check of a pipeline failed."""


@dataclass(frozen=True)
class InvariantTable:
    kind: str
    max_degree: int
    entries: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in TABLE_KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        entries = {int(d): Fraction(v) for d, v in sorted(self.entries.items())}
        for d in entries:
            if d < 1:
                raise ValueError(f"degree {d} < 1")
            if self.kind in ODD_KINDS and d % 2 == 0:
                raise ValueError(f"{self.kind} tables carry odd degrees only, got {d}")
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, d: int) -> Fraction:
        return self.entries[d]

    def __contains__(self, d: int) -> bool:
        return d in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def degrees(self) -> list[int]:
        return sorted(self.entries)

    def restrict(self, max_degree: int) -> "InvariantTable":
        return InvariantTable(
            self.kind, max_degree, {d: v for d, v in self.entries.items() if d <= max_degree})


@lru_cache(maxsize=16)
def mirror_map_delta(order: int) -> Series:
    """Even series ``T - t = 5 (G_5 - G_1) / F``."""
    return 5 * (hyper_G(5, order) - hyper_G(1, order)) / hyper_F(order)


@lru_cache(maxsize=16)
def half_qT(order: int) -> Series:
    """``exp(T/2) = v * sqrt(exp(T - t))``, leading coefficient 1."""
    return mirror_map_delta(order).exp().sqrt().shift(1)


def _disk_order(max_degree: int, order: int | None) -> int:
    if max_degree < 1 or max_degree % 2 == 0:
        raise ValueError(f"max_degree must be odd and positive, got {max_degree}")
    if order is None:
        return max_degree + DISK_HEADROOM
    if order < max_degree:
        raise ValueError(f"order {order} cannot resolve degree {max_degree}")
    return order


@lru_cache(maxsize=16)
def disk_potential(order: int) -> Series:
    """The disk potential as a series in ``u = exp(T/2)``."""
    i0 = big_I(order)[0]
    if i0.t_degree:
        raise PipelineError("I_0 unexpectedly carries t-dependence")
    ratio = series_J(order) / i0.parts[0]
    v_of_u = half_qT(order).revert()
    fdisk = ratio.compose(v_of_u)
    if not fdisk.is_odd():
        raise PipelineError("disk potential has a non-zero even coefficient")
    if fdisk[1] <= 0:
        raise PipelineError("degree-1 disk invariant is not positive")
    return fdisk


def disk_invariants(max_degree: int, order: int | None = None) -> InvariantTable:
    """Disk invariants ``N_d^disk`` for odd ``d <= max_degree``."""
    order = _disk_order(max_degree, order)
    fdisk = disk_potential(order)
    return InvariantTable(
        "disk_N", max_degree, {d: fdisk[d] for d in range(1, max_degree + 1, 2)})


def disk_invariants_from_ratio(ratio: Series, max_degree: int) -> InvariantTable:
    """Push a given ``J/I_0``-type odd series through the change of variables."""
    order = ratio.order
    if order < max_degree:
        raise ValueError("series too short for requested degree")
    fdisk = ratio.compose(half_qT(order).revert())
    return InvariantTable(
        "disk_N", max_degree, {d: fdisk[d] for d in range(1, max_degree + 1, 2)})


@lru_cache(maxsize=16)
def closed_instanton_series(order: int) -> Series:
    """``sum_d N_d w^d`` with ``w = exp(T)``, truncated at ``w^order``.

    Internally the periods are built to ``v^(2*order)``.
    """
    vorder = 2 * order
    i0, i1, i2, i3 = big_I(vorder)
    f0 = i0.parts[0]
    mirror = i1 / f0
    phi = Fraction(5, 2) * (i1 * i2 - i0 * i3) / (f0 * f0) - Fraction(5, 6) * (mirror * mirror * mirror)
    for j in range(1, phi.t_degree + 1):
        if not phi.parts[j].is_zero():
            raise PipelineError(f"closed potential keeps a t^{j} part")
    inst = phi.parts[0]
    if inst[0] != 0:
        raise PipelineError("closed instanton sum has a constant term")
    inst_z = inst.even_part_in_square()
    delta_z = mirror_map_delta(vorder).even_part_in_square()
    w_of_z = delta_z.exp().shift(1)
    return inst_z.compose(w_of_z.revert())


def closed_invariants(max_degree: int) -> InvariantTable:
    """Closed genus-0 invariants ``N_d`` for ``1 <= d <= max_degree``."""
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    series = closed_instanton_series(max_degree + 1)
    return InvariantTable(
        "closed_N", max_degree, {d: series[d] for d in range(1, max_degree + 1)})
