"""Exact mirror-symmetry and localization computations for disk and closed
invariants of the quintic threefold."""

from .arith import Fraction, Polynomial, RatFunc, Series, rat_make
from .hypergeom import LogSeries, big_I, double_factorial, hyper_F, hyper_G, pf_apply, pf_residual, series_J
from .inversion import ASPINWALL_MORRISON, OOGURI_VAFA, CoverRule, cover_forward, cover_invert, real_counts
from .mirror import InvariantTable, closed_invariants, disk_invariants

__all__ = [
    "Fraction", "Polynomial", "RatFunc", "Series", "rat_make",
    "LogSeries", "big_I", "double_factorial", "hyper_F", "hyper_G", "pf_apply", "pf_residual", "series_J",
    "ASPINWALL_MORRISON", "OOGURI_VAFA", "CoverRule", "cover_forward", "cover_invert", "real_counts",
    "InvariantTable", "closed_invariants", "disk_invariants",
]

__version__ = "0.1.0"
