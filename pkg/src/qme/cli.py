"""Command-line front end: ``qme tables ...`` and ``qme verify ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import hypergeom, inversion, localization, mirror
from .arith import Series
from .mirror import InvariantTable, PipelineError
from .reference import DISK_N, DISK_n, LINES
from .serialize import (
    FORMATS,
    CacheCorruptError,
    cache_series,
    encode_table,
    format_rational,
    load_series,
)

log = logging.getLogger(__name__)

TABLE_SUBJECTS = ("disk", "closed", "real", "local-p1")
VERIFY_SUBJECTS = ("pf", "disk", "closed", "localization", "local-p1", "identity", "all")
ODD_ONLY = {
    "tables": {"disk", "real", "local-p1"},
    "verify": {"disk", "localization", "local-p1", "identity", "all"},
}
DEFAULT_MAX_DEGREE = {
    ("tables", "closed"): 10,
    ("verify", "closed"): 10,
    ("verify", "identity"): 99,
    ("verify", "pf"): 40,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    subject: str
    max_degree: int
    format: str = "json"
    output_path: str | None = None
    cache_dir: str | None = None
    order: int | None = None
    virtual: bool = False

    def __post_init__(self):
        if self.max_degree < 1:
            raise UsageError("--max-degree must be at least 1")
        if self.subject in ODD_ONLY[self.command] and self.max_degree % 2 == 0:
            raise UsageError(f"{self.command} {self.subject} needs an odd --max-degree")
        if self.order is not None and self.order < self.max_degree:
            raise UsageError("--order must be at least --max-degree")


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def _cached(cfg: RunConfig, key: str, compute: Callable[[], Series]) -> Series:
    if not cfg.cache_dir:
        return compute()
    try:
        series = load_series(key, cfg.cache_dir)
    except CacheCorruptError as exc:
        log.warning("%s; recomputing", exc)
        series = None
    if series is None:
        series = compute()
        cache_series(key, series, cfg.cache_dir)
    return series


def build_table(cfg: RunConfig) -> InvariantTable:
    d = cfg.max_degree
    if cfg.subject in ("disk", "real"):
        order = cfg.order if cfg.order is not None else d + mirror.DISK_HEADROOM
        pot = _cached(cfg, f"disk_potential_o{order}", lambda: mirror.disk_potential(order))
        table = InvariantTable("disk_N", d, {k: pot[k] for k in range(1, d + 1, 2)})
        if cfg.subject == "real":
            return inversion.real_counts(inversion.cover_invert(table, inversion.OOGURI_VAFA))
        if cfg.virtual:
            return inversion.cover_invert(table, inversion.OOGURI_VAFA)
        return table
    if cfg.subject == "closed":
        order = cfg.order if cfg.order is not None else d + 1
        pot = _cached(cfg, f"closed_instanton_o{order}",
                      lambda: mirror.closed_instanton_series(order))
        table = InvariantTable("closed_N", d, {k: pot[k] for k in range(1, d + 1)})
        if cfg.virtual:
            return inversion.cover_invert(table, inversion.ASPINWALL_MORRISON)
        return table
    if cfg.subject == "local-p1":
        return InvariantTable(
            "local_L", d, {k: localization.local_disk_invariant(k) for k in range(1, d + 1, 2)})
    raise UsageError(f"unknown table subject {cfg.subject!r}")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    subject: str
    max_degree: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))


def _mismatch(pairs) -> str | None:
    """First ``(key, expected, actual)`` disagreement, formatted, or ``None``."""
    for key, expected, actual in pairs:
        if expected != actual:
            return f"first mismatch at {key}: expected {format_rational(expected)}, got {format_rational(actual)}"
    return None


def _guard(report: Report, name: str, fn: Callable[[], str | None], ok_detail: str = "") -> None:
    try:
        problem = fn()
    except PipelineError as exc:
        report.add(name, False, str(exc))
        return
    report.add(name, problem is None, problem or ok_detail)


def _odd(n: int) -> range:
    return range(1, n + 1, 2)


def verify_pf(report: Report, cfg: RunConfig) -> None:
    window = cfg.order if cfg.order is not None else cfg.max_degree
    for target in ("I0", "I1", "I2", "I3", "J"):
        def check(target=target):
            res = hypergeom.pf_residual(target, window + 2)
            for j, part in enumerate(res.parts):
                for m, c in enumerate(part.coeffs):
                    if c:
                        return f"first mismatch at t^{j} v^{m}: expected 0, got {format_rational(c)}"
            return None
        _guard(report, f"picard-fuchs {target}", check, f"zero residual on v^0..v^{window}")

    def j_methods():
        a = hypergeom.series_J(window, "closed_form")
        b = hypergeom.series_J(window, "h_half")
        return _mismatch((f"v^{m}", x, y) for m, (x, y) in enumerate(zip(a.coeffs, b.coeffs)))
    _guard(report, "J closed form = H=1/2 evaluation", j_methods, f"odd d <= {window}")


def verify_disk(report: Report, cfg: RunConfig) -> None:
    d = cfg.max_degree
    N = mirror.disk_invariants(d, cfg.order)
    top = min(d, max(DISK_N))
    _guard(report, "disk invariants vs reference",
           lambda: _mismatch((f"d={k}", DISK_N[k], N[k]) for k in _odd(top)), f"odd d <= {top}")
    n = inversion.cover_invert(N, inversion.OOGURI_VAFA)
    _guard(report, "virtual disk counts vs reference",
           lambda: _mismatch((f"d={k}", Fraction(DISK_n[k]), n[k]) for k in _odd(top)),
           f"odd d <= {top}")
    bad = [k for k, _, ok in inversion.integrality_report(n) if not ok]
    report.add("virtual disk counts integral", not bad,
               f"non-integral at d={bad[0]}" if bad else f"odd d <= {d}")
    back = inversion.cover_forward(n, inversion.OOGURI_VAFA)
    _guard(report, "Ooguri-Vafa round trip",
           lambda: _mismatch((f"d={k}", N[k], back[k]) for k in N.degrees()))

    def parity():
        pot = mirror.disk_potential(cfg.order if cfg.order is not None else d + mirror.DISK_HEADROOM)
        for m in range(0, pot.order + 1, 2):
            if pot[m]:
                return f"even coefficient u^{m} = {format_rational(pot[m])}"
        return None
    _guard(report, "disk potential vanishes in even degree", parity)


def verify_closed(report: Report, cfg: RunConfig) -> None:
    d = cfg.max_degree
    try:
        N = mirror.closed_invariants(d)
    except PipelineError as exc:
        report.add("closed potential t-parts cancel", False, str(exc))
        return
    report.add("closed potential t-parts cancel", True)
    n = inversion.cover_invert(N, inversion.ASPINWALL_MORRISON)
    report.add("lines on the quintic", n[1] == LINES == N[1], f"n_1 = {format_rational(n[1])}")
    bad = [k for k, _, ok in inversion.integrality_report(n) if not ok]
    report.add("closed counts integral", not bad,
               f"non-integral at d={bad[0]}" if bad else f"d <= {d}")
    back = inversion.cover_forward(n, inversion.ASPINWALL_MORRISON)
    _guard(report, "Aspinwall-Morrison round trip",
           lambda: _mismatch((f"d={k}", N[k], back[k]) for k in N.degrees()))


def verify_localization(report: Report, cfg: RunConfig) -> None:
    d = cfg.max_degree
    constants: dict[int, Fraction] = {}

    def weight_independence():
        for k in _odd(d):
            _, c = localization.quintic_degree_sum(k)
            constants[k] = c
            if c != localization.disk_constant(k):
                return f"first mismatch at d={k}: expected {format_rational(localization.disk_constant(k))}, got {format_rational(c)}"
        return None
    _guard(report, "localization weight independence", weight_independence, f"odd d <= {d}")

    def x_limit():
        for k in _odd(d):
            localization.x_limit_check(k)
        return None
    _guard(report, "x -> 0 limit", x_limit, f"odd d <= {d}")

    def agreement():
        if len(constants) != len(_odd(d)):
            return "weight-independent constants unavailable"
        # every operation is exact through its truncation order, so no headroom
        loc = Series([constants.get(m, 0) for m in range(d + 1)], d)
        ratio = loc / hypergeom.hyper_F(d)
        a = mirror.disk_invariants_from_ratio(ratio, d)
        b = mirror.disk_invariants(d)
        return _mismatch((f"d={k}", b[k], a[k]) for k in _odd(d))
    _guard(report, "localization = mirror disk invariants", agreement, f"odd d <= {d}")


def verify_local_p1(report: Report, cfg: RunConfig) -> None:
    def check():
        for k in _odd(cfg.max_degree):
            localization.local_disk_invariant(k)
        return None
    _guard(report, "local P1 multiple cover 2/d^2", check, f"odd d <= {cfg.max_degree}")


def verify_identity(report: Report, cfg: RunConfig) -> None:
    d = cfg.max_degree
    _guard(report, "binomial identity",
           lambda: _mismatch((f"d={k}", Fraction(0), localization.binomial_identity_residual(k))
                             for k in _odd(d)), f"odd d <= {d}")
    _guard(report, "central-degree identity",
           lambda: _mismatch((f"d={k}", Fraction(0), localization.central_degree_identity_residual(k))
                             for k in _odd(d)), f"odd d <= {d}")


def verify_roundtrips(report: Report, cfg: RunConfig) -> None:
    rng = random.Random(cfg.max_degree)
    top = max(cfg.max_degree, 45)
    for rule, kind, step in ((inversion.OOGURI_VAFA, "disk_n", 2),
                             (inversion.ASPINWALL_MORRISON, "closed_n", 1)):
        values = {k: Fraction(rng.randint(-10 ** 6, 10 ** 6), rng.randint(1, 1000))
                  for k in range(1, top + 1, step)}
        t = InvariantTable(kind, top, values)
        there = inversion.cover_forward(t, rule)
        back = inversion.cover_invert(there, rule)
        name = "Ooguri-Vafa" if step == 2 else "Aspinwall-Morrison"
        report.add(f"{name} randomized round trip", back == t, f"d <= {top}")


VERIFIERS = {
    "pf": verify_pf,
    "disk": verify_disk,
    "closed": verify_closed,
    "localization": verify_localization,
    "local-p1": verify_local_p1,
    "identity": verify_identity,
}


def run_verify(cfg: RunConfig) -> Report:
    report = Report(cfg.subject, cfg.max_degree)
    if cfg.subject == "all":
        closed_cfg = RunConfig("verify", "closed", min(cfg.max_degree, 10), cfg.format)
        steps = [(verify_pf, cfg), (verify_disk, cfg), (verify_closed, closed_cfg),
                 (verify_localization, cfg), (verify_local_p1, cfg), (verify_identity, cfg),
                 (verify_roundtrips, cfg)]
    else:
        steps = [(VERIFIERS[cfg.subject], cfg)]
    for step, step_cfg in steps:
        try:
            step(report, step_cfg)
        except PipelineError as exc:
            report.add(step.__name__.removeprefix("verify_"), False, str(exc))
    return report


def encode_report(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        doc = {"subject": report.subject, "max_degree": report.max_degree,
               "passed": report.passed,
               "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                          for c in report.checks]}
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        lines = ["check,passed,detail"]
        lines += [f'"{c.name}",{str(c.passed).lower()},"{c.detail}"' for c in report.checks]
        return ("\n".join(lines) + "\n").encode()
    lines = ["| check | result | detail |", "|---|---|---|"]
    lines += [f"| {c.name} | {'PASS' if c.passed else 'FAIL'} | {c.detail} |" for c in report.checks]
    return ("\n".join(lines) + "\n").encode()


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qme", description="Disk and closed invariants of the quintic threefold.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--order", type=int, default=None,
                       help="internal truncation order (half-degrees), overrides the default headroom")
        p.add_argument("--format", choices=FORMATS, default="json")
        p.add_argument("--output", default=None, help="output file (default: standard output)")
        p.add_argument("--cache-dir", default=None,
                       help="directory for cached series (default: $QME_CACHE_DIR)")

    tables = sub.add_parser("tables", help="compute an invariant table")
    tables.add_argument("subject", choices=TABLE_SUBJECTS)
    tables.add_argument("--virtual", action="store_true",
                        help="emit multiple-cover-inverted counts instead of invariants")
    common(tables)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("subject", choices=VERIFY_SUBJECTS)
    common(verify)
    return parser


def parse_config(argv: list[str]) -> RunConfig:
    args = make_parser().parse_args(argv)
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = DEFAULT_MAX_DEGREE.get((args.command, args.subject),
                                            29 if args.command == "tables" else 15)
    return RunConfig(
        command=args.command,
        subject=args.subject,
        max_degree=max_degree,
        format=args.format,
        output_path=args.output,
        cache_dir=args.cache_dir or os.environ.get("QME_CACHE_DIR") or None,
        order=args.order,
        virtual=getattr(args, "virtual", False),
    )


def _emit(data: bytes, path: str | None) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def run(argv: list[str] | None = None) -> int:
    """Run the CLI; returns 0 on success, 1 on verification failure, 2 on usage error."""
    if argv is None:
        argv = sys.argv[1:]
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    if cfg.command == "tables":
        _emit(encode_table(build_table(cfg), cfg.format), cfg.output_path)
        return 0
    report = run_verify(cfg)
    _emit(encode_report(report, cfg.format), cfg.output_path)
    if not report.passed:
        first = next(c for c in report.checks if not c.passed)
        print(f"verification failed: {first.name}: {first.detail}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())
