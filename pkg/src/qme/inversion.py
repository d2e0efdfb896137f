"""Multiple-cover resummation and its Moebius inversion.

Two rules are used: closed curves contribute ``k^-3`` over all divisors
(Aspinwall-Morrison), disks contribute ``k^-2`` over odd divisors
(Ooguri-Vafa).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mirror import InvariantTable

__all__ = [
    "CoverRule",
    "ASPINWALL_MORRISON",
    "OOGURI_VAFA",
    "IncompleteTableError",
    "moebius",
    "divisors",
    "cover_forward",
    "cover_invert",
    "real_counts",
    "integrality_report",
]


@dataclass(frozen=True)
class CoverRule:
    exponent: int
    divisor_parity: str

    def __post_init__(self):
        if (self.exponent, self.divisor_parity) not in ((3, "all"), (2, "odd_only")):
            raise ValueError(f"unsupported cover rule {self.exponent}/{self.divisor_parity}")

    def admits(self, k: int) -> bool:
        return self.divisor_parity == "all" or k % 2 == 1


ASPINWALL_MORRISON = CoverRule(3, "all")
OOGURI_VAFA = CoverRule(2, "odd_only")

_TO_N = {"closed_n": "closed_N", "disk_n": "disk_N"}
_TO_n = {v: k for k, v in _TO_N.items()}


class IncompleteTableError(KeyError):
    pass


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def _check_support(table: InvariantTable, rule: CoverRule) -> None:
    if rule.divisor_parity == "odd_only":
        even = [d for d in table.entries if d % 2 == 0]
        if even:
            raise ValueError(f"odd-divisor rule applied to even degrees {even}")


def _lookup(table: InvariantTable, d: int) -> Fraction:
    try:
        return table.entries[d]
    except KeyError:
        raise IncompleteTableError(f"incomplete table: degree {d} missing") from None


def cover_forward(n_table: InvariantTable, rule: CoverRule) -> InvariantTable:
    """``N_d = sum_{k | d admissible} n_{d/k} k^-exponent``."""
    _check_support(n_table, rule)
    out = {}
    for d in n_table.degrees():
        out[d] = sum(
            (_lookup(n_table, d // k) / Fraction(k) ** rule.exponent
             for k in divisors(d) if rule.admits(k)),
            Fraction(0))
    return InvariantTable(_TO_N.get(n_table.kind, n_table.kind), n_table.max_degree, out)


def cover_invert(N_table: InvariantTable, rule: CoverRule) -> InvariantTable:
    """``n_d = sum_{k | d admissible} mu(k) k^-exponent N_{d/k}``."""
    _check_support(N_table, rule)
    out = {}
    for d in N_table.degrees():
        total = Fraction(0)
        for k in divisors(d):
            if not rule.admits(k):
                continue
            mu = moebius(k)
            if mu:
                total += mu * _lookup(N_table, d // k) / Fraction(k) ** rule.exponent
        out[d] = total
    return InvariantTable(_TO_n.get(N_table.kind, N_table.kind), N_table.max_degree, out)


def real_counts(disk_n: InvariantTable) -> InvariantTable:
    """Real-curve counts: half of each virtual disk count."""
    if disk_n.kind != "disk_n":
        raise ValueError(f"expected a disk_n table, got {disk_n.kind}")
    return InvariantTable(
        "real_n", disk_n.max_degree, {d: v / 2 for d, v in disk_n.entries.items()})


def integrality_report(table: InvariantTable) -> list[tuple[int, Fraction, bool]]:
    """``(degree, value, is_integer)`` rows in degree order."""
    return [(d, v, v.denominator == 1) for d, v in sorted(table.entries.items())]
