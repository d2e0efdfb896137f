"""Table encodings (JSON, CSV, markdown) and the on-disk series cache."""

from __future__ import annotations

import csv
import io
import json
import os
import re
import tempfile
from fractions import Fraction
from pathlib import Path

from .arith import Series
from .mirror import InvariantTable

__all__ = [
    "FORMATS",
    "CacheCorruptError",
    "format_rational",
    "parse_rational",
    "encode_table",
    "decode_table",
    "cache_series",
    "load_series",
]

FORMATS = ("json", "csv", "md")

_RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?")
_KEY_RE = re.compile(r"[A-Za-z0-9_.-]+")


class CacheCorruptError(ValueError):
    """A cache file exists but cannot be decoded."""


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"not an exact rational: {s!r}")
    return Fraction(s)


def encode_table(table: InvariantTable, fmt: str = "json") -> bytes:
    rows = [(d, format_rational(v)) for d, v in sorted(table.entries.items())]
    if fmt == "json":
        doc = {"kind": table.kind, "max_degree": table.max_degree,
               "values": {str(d): v for d, v in rows}}
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "value"])
        writer.writerows(rows)
        return buf.getvalue().encode()
    if fmt == "md":
        lines = ["| degree | value |", "|---:|---:|"]
        lines += [f"| {d} | {v} |" for d, v in rows]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def decode_table(data: bytes | str, fmt: str = "json", kind: str | None = None,
                 max_degree: int | None = None) -> InvariantTable:
    """Inverse of :func:`encode_table`.

    CSV and markdown carry no metadata, so ``kind`` is required for them and
    ``max_degree`` defaults to the largest degree present.
    """
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        doc = json.loads(text)
        values = {int(d): parse_rational(v) for d, v in doc["values"].items()}
        return InvariantTable(doc["kind"], int(doc["max_degree"]), values)
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["degree", "value"]:
            raise ValueError(f"bad CSV header {header!r}")
        values = {int(d): parse_rational(v) for d, v in reader}
    elif fmt == "md":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) < 2:
            raise ValueError("markdown table needs a header and a rule line")
        values = {}
        for ln in lines[2:]:
            cells = [c.strip() for c in ln.strip().strip("|").split("|")]
            values[int(cells[0])] = parse_rational(cells[1])
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if kind is None:
        raise ValueError(f"kind is required to decode {fmt}")
    if max_degree is None:
        max_degree = max(values, default=0)
    return InvariantTable(kind, max_degree, values)


def _cache_path(key: str, directory: str | os.PathLike) -> Path:
    if not _KEY_RE.fullmatch(key):
        raise ValueError(f"invalid cache key {key!r}")
    return Path(directory) / f"{key}.json"


def cache_series(key: str, series: Series, directory: str | os.PathLike) -> Path:
    """Store ``series`` atomically under ``key``."""
    path = _cache_path(key, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"order": series.order, "coeffs": [format_rational(c) for c in series.coeffs]}
    fd, tmp = tempfile.mkstemp(prefix=f".{key}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_series(key: str, directory: str | os.PathLike) -> Series | None:
    """Cached series for ``key``, or ``None`` if absent.

    Raises :class:`CacheCorruptError` when the file cannot be decoded.
    """
    path = _cache_path(key, directory)
    try:
        text = path.read_text()
    except FileNotFoundError:
        return None
    try:
        doc = json.loads(text)
        order = int(doc["order"])
        coeffs = [parse_rational(c) for c in doc["coeffs"]]
        if len(coeffs) != order + 1:
            raise ValueError("coefficient count does not match order")
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorruptError(f"cache corrupt: {path}: {exc}") from exc
    return Series(coeffs, order)
