"""Cross-checks between the formulas, the oracles and the shelling code.

Each suite walks its instances smallest first and stops at the first
mismatch, so a failure report names a minimal failing instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from widthone.formulas import (
    convolution_check,
    entry_rsk,
    entry_rsk_4f3,
    entry_stanley,
    sum_matrix,
)
from widthone.order_complex import (
    corners,
    enumerate_facets_lex,
    grid_order_complex,
    h_poly_closed,
    h_poly_shelling,
    verify_shelling,
)
from widthone.reference_values import KNOWN_S_N5
from widthone.transport import nw_corner, enumerate_compositions
from widthone.width_one import (
    biword_to_matrix,
    count_width_one,
    enumerate_biwords,
    matrix_to_biword,
    sum_all_oracle,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first mismatch: {self.failure}"
        return f"[{status}] {self.name} ({self.checked} checks){tail}"


def _run(name: str, checks: Iterator[tuple[str, bool]]) -> SuiteResult:
    count = 0
    for label, ok in checks:
        count += 1
        if not ok:
            return SuiteResult(name, count, label)
    return SuiteResult(name, count)


def _sizes(d_max: int, n_max: int) -> list[tuple[int, int]]:
    # ordered by total size so the first failure is a small one
    return sorted(
        ((d, n) for d in range(1, d_max + 1) for n in range(1, n_max + 1)),
        key=lambda p: (p[0] + p[1], p),
    )


def formula_checks(d_max: int, n_max: int) -> Iterator[tuple[str, bool]]:
    for d, n1 in _sizes(d_max, n_max):
        for n2 in range(1, n_max + 1):
            for i in range(1, n1 + 1):
                for j in range(1, n2 + 1):
                    ref = entry_rsk(d, n1, n2, i, j)
                    others = (
                        entry_rsk_4f3(d, n1, n2, i, j),
                        entry_stanley(d, n1, n2, i, j),
                        convolution_check(d, n1, n2, i, j),
                    )
                    yield f"d={d} {n1}x{n2} ({i},{j}): {ref} vs {others}", all(
                        v == ref for v in others
                    )


def golden_checks(d_max: int) -> Iterator[tuple[str, bool]]:
    for d in range(1, min(d_max, max(KNOWN_S_N5)) + 1):
        for method in ("rsk", "stanley"):
            S = sum_matrix(d, 5, 5, method)
            yield f"S({d},5) via {method}", S.entries == KNOWN_S_N5[d]


def oracle_checks(d_max: int, n_max: int) -> Iterator[tuple[str, bool]]:
    for d, n in _sizes(d_max, n_max):
        oracle = sum_all_oracle(d, n, n)
        for method in ("rsk", "stanley"):
            S = sum_matrix(d, n, n, method)
            yield f"d={d} n={n} oracle vs {method}", [list(r) for r in S.entries] == oracle


def bijection_checks(d_max: int, n_max: int, pair_limit: int = 10**5) -> Iterator[tuple[str, bool]]:
    for d, n in _sizes(d_max, n_max):
        mats = []
        for B in enumerate_biwords(d, n, n):
            T = biword_to_matrix(B, n, n)
            mats.append(T.entries)
            if matrix_to_biword(T) != B:
                yield f"d={d} n={n} round trip of {B}", False
        yield f"d={d} n={n} count {len(mats)}", len(mats) == count_width_one(d, n, n)
        if len(mats) <= pair_limit:
            comps = [c.parts for c in enumerate_compositions(d, n)]
            plans = sorted(nw_corner(a, b).entries for a in comps for b in comps)
            yield f"d={d} n={n} NW images", plans == sorted(mats)


def shelling_checks(n_max: int) -> Iterator[tuple[str, bool]]:
    for i in range(1, n_max + 1):
        for j in range(1, n_max + 1):
            yield f"h_{i},{j} shelling vs closed", h_poly_shelling(i, j) == h_poly_closed(i, j)
    small = min(n_max, 4)
    for i in range(1, small + 1):
        for j in range(1, small + 1):
            paths = list(enumerate_facets_lex(i, j))
            res = verify_shelling(grid_order_complex(i, j), [p.vertices for p in paths])
            want = [corners(p) for p in paths]
            yield f"grid {i}x{j} generic shelling", res.ok and list(res.restrictions) == want


def run_verify(d_max: int, n_max: int, *, oracle: bool = True) -> list[SuiteResult]:
    suites: list[tuple[str, Callable[[], Iterator[tuple[str, bool]]]]] = [
        ("formula equivalence", lambda: formula_checks(d_max, n_max)),
        ("h-polynomials and shelling", lambda: shelling_checks(n_max)),
    ]
    if n_max >= 5:
        suites.append(("known S(d,5) values", lambda: golden_checks(d_max)))
    if oracle:
        suites.append(("oracle equivalence", lambda: oracle_checks(d_max, n_max)))
        suites.append(("biword and NW-corner bijection", lambda: bijection_checks(d_max, n_max)))
    return [_run(name, make()) for name, make in suites]
