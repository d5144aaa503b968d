"""Closed forms for the entrywise sum S(d, n1 x n2) of all width-one matrices.

Two independent routes give each entry:

* ``rsk``: count biwords with (i, j) as their k-th column,
  S_ij = sum_{k<d} C(i+k-1, k) C(j+k-1, k) C(n1-i+d-k-1, n1-i) C(n2-j+d-k-1, n2-j),
  which is also a prefactor times a terminating 4F3 at unit argument.
* ``stanley``: sum over corner counts k of paths through (i, j),
  S_ij = sum_{k<min(d,n1,n2)} C(n1+n2+d-k-2, n1+n2-1) * #paths(i, j, k).

The first costs O(d) per entry, the second O(min(d, n)^2), so rsk wins for
small d and stanley wins for small n.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from widthone.exact_arith import BinomialTable, binomial, f43_unit
from widthone.order_complex import corner_count_convolution
from widthone.width_one import count_width_one, sum_all_oracle

METHODS = ("rsk", "stanley", "oracle", "auto")


def _check_entry_args(d: int, n1: int, n2: int, i: int, j: int) -> None:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not (1 <= i <= n1 and 1 <= j <= n2):
        raise ValueError(f"entry ({i}, {j}) is outside a {n1}x{n2} matrix")


def entry_rsk(d: int, n1: int, n2: int, i: int, j: int, binom=binomial) -> int:
    _check_entry_args(d, n1, n2, i, j)
    total = 0
    for k in range(d):
        total += (
            binom(i + k - 1, k)
            * binom(j + k - 1, k)
            * binom(n1 - i + d - k - 1, n1 - i)
            * binom(n2 - j + d - k - 1, n2 - j)
        )
    return total


def entry_rsk_4f3(d: int, n1: int, n2: int, i: int, j: int) -> int:
    """Same entry as :func:`entry_rsk`, via the 4F3 statement form."""
    _check_entry_args(d, n1, n2, i, j)
    pref = binomial(i + d - 2, d - 1) * binomial(j + d - 2, d - 1)
    series = f43_unit(n1 - i + 1, n2 - j + 1, 1 - d, 1 - d, 1, 2 - d - i, 2 - d - j)
    value = pref * series
    if value.denominator != 1:
        raise ArithmeticError(
            f"4F3 route gave non-integral {value} at d={d}, ({i}, {j}) of {n1}x{n2}"
        )
    return value.numerator


def stanley_weights(d: int, n1: int, n2: int, binom=binomial) -> list[int]:
    """C(n1+n2+d-k-2, n1+n2-1) for k = 0 .. min(d, n1, n2) - 1."""
    return [binom(n1 + n2 + d - k - 2, n1 + n2 - 1) for k in range(min(d, n1, n2))]


def entry_stanley(
    d: int,
    n1: int,
    n2: int,
    i: int,
    j: int,
    weights: Sequence[int] | None = None,
    binom=binomial,
) -> int:
    _check_entry_args(d, n1, n2, i, j)
    if weights is None:
        weights = stanley_weights(d, n1, n2)
    return sum(
        w * corner_count_convolution(n1, n2, i, j, k, binom) for k, w in enumerate(weights)
    )


def convolution_check(d: int, n1: int, n2: int, i: int, j: int) -> int:
    """Coefficient of z^(d-1) in 2F1(i, j; 1; z) * 2F1(n1-i+1, n2-j+1; 1; z)."""
    _check_entry_args(d, n1, n2, i, j)
    a = [binomial(i + k - 1, k) * binomial(j + k - 1, k) for k in range(d)]
    b = [binomial(n1 - i + k, k) * binomial(n2 - j + k, k) for k in range(d)]
    prod = [0] * d
    for p, x in enumerate(a):
        for q in range(d - p):
            prod[p + q] += x * b[q]
    return prod[d - 1]


@dataclass(frozen=True)
class SumMatrix:
    d: int
    entries: tuple[tuple[int, ...], ...]
    method: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        e = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", e)
        if not e or any(len(r) != len(e[0]) for r in e):
            raise ValueError("sum matrix must be a nonempty rectangle")
        self.check()

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """1-based access: S[i, j]."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def total(self) -> int:
        return sum(map(sum, self.entries))

    def min(self) -> int:
        return min(min(r) for r in self.entries)

    def max(self) -> int:
        return max(max(r) for r in self.entries)

    def check(self) -> None:
        """Raise ``AssertionError`` if a structural identity fails."""
        n1, n2, e = self.rows, self.cols, self.entries
        for a in range(n1):
            for b in range(n2):
                if e[a][b] != e[n1 - 1 - a][n2 - 1 - b]:
                    raise AssertionError(f"rotation symmetry fails at ({a + 1}, {b + 1})")
                if n1 == n2 and e[a][b] != e[b][a]:
                    raise AssertionError(f"transpose symmetry fails at ({a + 1}, {b + 1})")
        expected = self.d * count_width_one(self.d, n1, n2)
        if self.total() != expected:
            raise AssertionError(f"entry total {self.total()} != d * |T| = {expected}")


def fundamental_domain(n1: int, n2: int) -> list[tuple[int, int]]:
    """Cells that determine the whole matrix under its symmetries.

    Square: i <= j <= n+1-i (transpose plus anti-transpose).
    Rectangular: one cell from each pair related by the 180 degree rotation.
    """
    if n1 == n2:
        n = n1
        return [(i, j) for i in range(1, n + 1) for j in range(i, n + 2 - i)]
    cells = []
    for i in range(1, n1 + 1):
        for j in range(1, n2 + 1):
            if (i, j) <= (n1 + 1 - i, n2 + 1 - j):
                cells.append((i, j))
    return cells


def representative(n1: int, n2: int, i: int, j: int) -> tuple[int, int]:
    """Map a cell to the fundamental-domain cell with the same value."""
    if n1 == n2:
        n = n1
        if i > j:
            i, j = j, i
        if j > n + 1 - i:
            i, j = n + 1 - j, n + 1 - i
        return i, j
    rot = (n1 + 1 - i, n2 + 1 - j)
    return min((i, j), rot)


def choose_method(d: int, n1: int, n2: int) -> str:
    """Default heuristic for ``auto``: rsk while d <= 2n, stanley beyond."""
    return "rsk" if d <= 2 * min(n1, n2) else "stanley"


def _entry_function(method: str, d: int, n1: int, n2: int) -> Callable[[int, int], int]:
    if method == "rsk":
        # every lower index in the rsk sum folds to at most max(n1, n2) - 1
        table = BinomialTable(d + max(n1, n2) - 1, max(n1, n2) - 1)
        return lambda i, j: entry_rsk(d, n1, n2, i, j, table)
    if method == "stanley":
        weights = stanley_weights(d, n1, n2)
        table = BinomialTable(max(n1, n2))
        return lambda i, j: entry_stanley(d, n1, n2, i, j, weights, table)
    if method == "rsk-4f3":
        return lambda i, j: entry_rsk_4f3(d, n1, n2, i, j)
    if method == "convolution":
        return lambda i, j: convolution_check(d, n1, n2, i, j)
    raise ValueError(f"unknown method {method!r}")


_worker_entry: Callable[[int, int], int] | None = None


def _init_worker(method: str, d: int, n1: int, n2: int) -> None:
    global _worker_entry
    _worker_entry = _entry_function(method, d, n1, n2)


def _entry_job(cell: tuple[int, int]) -> int:
    assert _worker_entry is not None
    return _worker_entry(*cell)


def sum_matrix(
    d: int,
    n1: int,
    n2: int | None = None,
    method: str = "auto",
    *,
    use_symmetry: bool = True,
    workers: int = 1,
    oracle_limit: int | None = None,
    force: bool = False,
) -> SumMatrix:
    """Assemble S(d, n1 x n2) with the chosen entry formula.

    ``method`` is one of ``rsk``, ``stanley``, ``oracle`` or ``auto``
    (plus the cross-check routes ``rsk-4f3`` and ``convolution``).  With
    ``use_symmetry`` only the fundamental domain is evaluated and then
    reflected.  ``workers > 1`` spreads entries over a process pool.
    """
    if n2 is None:
        n2 = n1
    if d < 1 or n1 < 1 or n2 < 1:
        raise ValueError("need d, n1, n2 >= 1")
    if method == "auto":
        method = choose_method(d, n1, n2)
    if method == "oracle":
        acc = sum_all_oracle(d, n1, n2, limit=oracle_limit, force=force)
        return SumMatrix(d, tuple(map(tuple, acc)), "oracle")

    if use_symmetry:
        cells = fundamental_domain(n1, n2)
    else:
        cells = [(i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)]

    if workers > 1:
        chunk = max(1, len(cells) // (4 * workers))
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(method, d, n1, n2)
        ) as pool:
            values = list(pool.map(_entry_job, cells, chunksize=chunk))
    else:
        f = _entry_function(method, d, n1, n2)
        values = [f(i, j) for i, j in cells]
    known = dict(zip(cells, values))

    if use_symmetry:
        grid = [
            [known[representative(n1, n2, i, j)] for j in range(1, n2 + 1)]
            for i in range(1, n1 + 1)
        ]
    else:
        grid = [[known[(i, j)] for j in range(1, n2 + 1)] for i in range(1, n1 + 1)]
    return SumMatrix(d, tuple(map(tuple, grid)), method)


def trace_product(C: Iterable[Iterable], S: SumMatrix) -> Fraction | int:
    """tr(C^T S) = sum_ij C_ij S_ij."""
    total = 0
    for crow, srow in zip(C, S.entries):
        for c, s in zip(crow, srow):
            total += c * s
    return total


def log10_int(x: int) -> float:
    """log10 of a positive integer of any size."""
    if x <= 0:
        raise ValueError("log10 of a nonpositive integer")
    return math.log10(x)
