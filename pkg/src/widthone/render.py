"""Text renderings of sum matrices and their parsers.

Entries can have hundreds of digits, so JSON carries them as decimal
strings.  Approximate (floating) output exists only here.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from widthone.formulas import SumMatrix

FORMATS = ("pretty", "csv", "json")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "pretty"
    precision: int = 4
    destination: str | None = None  # None means stdout
    approx: bool = False

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")

    def emit(self, text: str) -> None:
        if self.destination in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(self.destination, "w") as fh:
                fh.write(text)


def sci(x: int | Fraction, precision: int = 4) -> str:
    """Scientific rendering with ``precision`` significant digits, any magnitude."""
    if x == 0:
        return "0"
    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
        x = int(x)
        sign = "-" if x < 0 else ""
        digits = str(abs(x))
        if len(digits) <= precision:
            return sign + digits
        # round to `precision` digits using exact integer arithmetic
        scale = 10 ** (len(digits) - precision)
        head = (abs(x) + scale // 2) // scale
        exp = len(digits) - 1
        if head >= 10**precision:
            head //= 10
            exp += 1
        h = str(head)
        mant = h[0] + ("." + h[1:] if len(h) > 1 else "")
        return f"{sign}{mant}e+{exp}"
    return f"{float(x):.{precision}g}"


def _cell(x: int, spec: OutputSpec) -> str:
    return sci(x, spec.precision) if spec.approx else str(x)


def render_matrix(S: SumMatrix, spec: OutputSpec) -> str:
    if spec.format == "json":
        return to_json(S) + "\n"
    cells = [[_cell(x, spec) for x in row] for row in S.entries]
    if spec.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue()
    widths = [max(len(cells[r][c]) for r in range(S.rows)) for c in range(S.cols)]
    shape = f"{S.rows}" if S.rows == S.cols else f"{S.rows}x{S.cols}"
    lines = [f"S({S.d},{shape}) =  [{S.method}]"]
    for row in cells:
        lines.append("  " + "  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def to_json(S: SumMatrix) -> str:
    payload = {
        "d": S.d,
        "rows": S.rows,
        "cols": S.cols,
        "method": S.method,
        "entries": [[str(x) for x in row] for row in S.entries],
    }
    return json.dumps(payload)


def from_json(text: str) -> SumMatrix:
    obj = json.loads(text)
    entries = tuple(tuple(int(x) for x in row) for row in obj["entries"])
    if len(entries) != obj["rows"] or any(len(r) != obj["cols"] for r in entries):
        raise ValueError("entries do not match the declared shape")
    return SumMatrix(obj["d"], entries, obj.get("method", ""))


def parse_csv(text: str) -> list[list[int]]:
    return [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]


def parse_pretty(text: str) -> list[list[int]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    return [[int(x) for x in ln.split()] for ln in lines[1:]]


def plot_rows(S: SumMatrix, precision: int = 4) -> list[tuple[int, int, int, str]]:
    return [
        (i, j, S[i, j], f"{math.log10(S[i, j]):.{precision}g}")
        for i in range(1, S.rows + 1)
        for j in range(1, S.cols + 1)
    ]


def render_plot_data(S: SumMatrix, kind: str = "matrix", precision: int = 4) -> str:
    """(i, j, value, log10) triples for an external plotter.

    ``kind`` only changes the leading comment line.
    """
    if kind not in ("matrix", "contour"):
        raise ValueError(f"unknown plot kind {kind!r}")
    buf = io.StringIO()
    buf.write(f"# kind={kind} d={S.d} rows={S.rows} cols={S.cols}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", "value", "log10"])
    w.writerows(plot_rows(S, precision))
    return buf.getvalue()


def parse_plot_data(text: str) -> list[tuple[int, int, int, float]]:
    body = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    rows = list(csv.reader(body))[1:]
    return [(int(i), int(j), int(v), float(lg)) for i, j, v, lg in rows]


def render_fraction(x: Fraction) -> str:
    return f"{x.numerator}" if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
