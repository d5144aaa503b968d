"""Wall-clock comparison of the two entry formulas.

One of d, n is held fixed while the other sweeps; every point times a full
matrix assembly and keeps the median over repetitions.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field

from widthone.formulas import sum_matrix


@dataclass(frozen=True)
class BenchPlan:
    fixed: str  # "d" or "n"
    fixed_value: int
    sweep: tuple[int, ...]
    methods: tuple[str, ...] = ("rsk", "stanley")
    repetitions: int = 3
    workers: int = 1

    def __post_init__(self) -> None:
        if self.fixed not in ("d", "n"):
            raise ValueError("fixed parameter must be 'd' or 'n'")
        if not self.sweep:
            raise ValueError("sweep range is empty")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        bad = set(self.methods) - {"rsk", "stanley"}
        if bad or not self.methods:
            raise ValueError(f"can only time rsk and stanley, got {self.methods}")

    def point(self, value: int) -> tuple[int, int]:
        """(d, n) for one sweep value."""
        return (self.fixed_value, value) if self.fixed == "d" else (value, self.fixed_value)


@dataclass(frozen=True)
class BenchRow:
    sweep_value: int
    method: str
    seconds: float
    samples: tuple[float, ...] = field(default=(), compare=False)


def time_once(d: int, n: int, method: str, workers: int = 1) -> float:
    start = time.perf_counter()
    sum_matrix(d, n, n, method, workers=workers)
    return time.perf_counter() - start


def run_bench(plan: BenchPlan) -> list[BenchRow]:
    rows = []
    for value in plan.sweep:
        d, n = plan.point(value)
        for method in plan.methods:
            samples = tuple(
                time_once(d, n, method, plan.workers) for _ in range(plan.repetitions)
            )
            rows.append(BenchRow(value, method, statistics.median(samples), samples))
    return rows


def monotone_violations(rows: list[BenchRow]) -> list[tuple[str, int, int]]:
    """(method, smaller, larger) sweep pairs where the larger point ran faster."""
    out = []
    for method in sorted({r.method for r in rows}):
        series = sorted((r.sweep_value, r.seconds) for r in rows if r.method == method)
        for (v0, s0), (v1, s1) in zip(series, series[1:]):
            if s1 < s0:
                out.append((method, v0, v1))
    return out


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["sweep_value", "method", "seconds"])
    for r in rows:
        w.writerow([r.sweep_value, r.method, f"{r.seconds:.6f}"])
    return buf.getvalue()
