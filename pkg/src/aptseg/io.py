"""Reading series from CSV/TSV/UCR files and writing line-oriented run reports.

Report schema (one ``key=value`` per line, ``#`` starts a comment)::

    algo=apts|bu|ggs
    source=<input descriptor>
    n_x=<int>
    T=<int>
    breakpoints=<comma-separated ints, empty if none>
    epsilons=<comma-separated floats, APTS only, empty otherwise>
    seconds=<float>                  # solve time of the (last) run
    seconds_min=<float>              # only with --bench
    seconds_median=<float>           # only with --bench
    repeat=<int>                     # only with --bench
    config.<name>=<value>            # everything needed to rerun
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core import MultiSeries, SegmentationError, validate_series

FORMATS = ("csv", "tsv", "ucr")


class ParseError(SegmentationError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class FormatMismatch(SegmentationError):
    pass


def _is_number(tok: str) -> bool:
    try:
        float(tok)
    except ValueError:
        return False
    return True


def _read_rows(path: Path, delimiter: str | None):
    text = path.read_text()
    if not text.strip():
        raise ParseError("file is empty", 1)
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if delimiter is None:
            delim = "\t" if "\t" in line else ("," if "," in line else None)
            toks = line.split(delim) if delim else line.split()
        else:
            toks = next(csv.reader([line], delimiter=delimiter))
        rows.append((lineno, [t.strip() for t in toks]))
    if not rows:
        raise ParseError("no data rows", 1)
    return rows


def load_series(path, format: str = "csv", rows=None) -> MultiSeries:
    """Load a :class:`MultiSeries` from ``path``.

    csv/tsv: one column per channel, one row per index, optional header row.
    ucr: one series per row, first column is the class label (dropped);
    ``rows`` selects which rows become channels (default: all of them).
    """
    path = Path(path)
    if format not in FORMATS:
        raise FormatMismatch(f"unknown format {format!r}")
    if format == "ucr":
        return _load_ucr(path, rows)
    delimiter = "," if format == "csv" else "\t"
    data = _read_rows(path, delimiter)
    header = None
    if not all(_is_number(t) for t in data[0][1]):
        header = data[0][1]
        data = data[1:]
        if not data:
            raise ParseError("header without data", 1)
    width = len(data[0][1])
    if header is not None and len(header) != width:
        raise ParseError(f"header has {len(header)} columns, data has {width}", data[0][0])
    values = np.empty((len(data), width))
    for r, (lineno, toks) in enumerate(data):
        if len(toks) != width:
            if len(toks) == 1 and width > 1:
                raise FormatMismatch(f"line {lineno}: single column; is this a {'tsv' if format == 'csv' else 'csv'} file?")
            raise ParseError(f"expected {width} columns, got {len(toks)}", lineno)
        try:
            values[r] = [float(t) for t in toks]
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    meta = {"source": str(path), "format": format}
    if header is not None:
        meta["columns"] = header
    return validate_series(values.T, meta)


def _load_ucr(path: Path, rows) -> MultiSeries:
    data = _read_rows(path, None)
    series = []
    for lineno, toks in data:
        if len(toks) < 3:
            raise ParseError("UCR row needs a label and at least two values", lineno)
        try:
            series.append((lineno, [float(t) for t in toks[1:]]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if rows is not None:
        rows = [rows] if isinstance(rows, int) else list(rows)
        try:
            series = [series[r] for r in rows]
        except IndexError:
            raise FormatMismatch(f"row selection {rows} out of range ({len(series)} rows)") from None
    lengths = {len(v) for _, v in series}
    if len(lengths) != 1:
        raise ParseError(f"rows differ in length {sorted(lengths)}", series[0][0])
    return validate_series([v for _, v in series], {"source": str(path), "format": "ucr"})


def save_series(series: MultiSeries, path, format: str = "csv") -> None:
    delim = "," if format == "csv" else "\t"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=delim)
        w.writerow([f"x{i + 1}" for i in range(series.n_x)])
        for row in series.values.T:
            w.writerow([repr(float(v)) for v in row])


@dataclass
class RunReport:
    algo: str
    source: str
    n_x: int
    T: int
    breakpoints: tuple
    epsilons: tuple = ()
    seconds: float = 0.0
    config: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"algo={self.algo}",
            f"source={self.source}",
            f"n_x={self.n_x}",
            f"T={self.T}",
            "breakpoints=" + ",".join(str(b) for b in self.breakpoints),
            "epsilons=" + ",".join(repr(float(e)) for e in self.epsilons),
            f"seconds={self.seconds!r}",
        ]
        lines += [f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}" for k, v in self.timings.items()]
        lines += [f"config.{k}={_fmt(v)}" for k, v in self.config.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunReport":
        kv = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ParseError(f"expected key=value, got {line!r}")
            k, v = line.split("=", 1)
            kv[k] = v
        try:
            rep = cls(
                algo=kv.pop("algo"),
                source=kv.pop("source"),
                n_x=int(kv.pop("n_x")),
                T=int(kv.pop("T")),
                breakpoints=tuple(int(b) for b in kv.pop("breakpoints").split(",") if b),
                epsilons=tuple(float(e) for e in kv.pop("epsilons", "").split(",") if e),
                seconds=float(kv.pop("seconds")),
            )
        except KeyError as exc:
            raise ParseError(f"missing key {exc}") from None
        for k, v in kv.items():
            if k.startswith("config."):
                rep.config[k[len("config."):]] = _parse(v)
            else:
                rep.timings[k] = _parse(v)
        return rep


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def _parse(v: str):
    if v == "none":
        return None
    if v in ("true", "false"):
        return v == "true"
    if "," in v:
        return [_parse(x) for x in v.split(",")]
    for conv in (int, float):
        try:
            out = conv(v)
        except ValueError:
            continue
        if conv is float and not math.isfinite(out):
            return v
        return out
    return v
