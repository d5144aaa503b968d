"""Width-one matrices, their biword encoding, and brute-force enumeration.

A nonnegative integer matrix is width-one when its support is a chain in
the product order on coordinates, i.e. its nonzero entries sit on one
south/east staircase.  Writing each support coordinate (i, j) as a column
repeated T[i][j] times gives a biword: two weakly increasing rows.  That
map is a bijection, so enumerating pairs of weakly increasing sequences
enumerates width-one matrices without repeats.

Coordinates are 1-based throughout, matching the usual matrix convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from widthone.exact_arith import binomial

#: default cap on the number of biwords the brute-force oracle will visit
ORACLE_LIMIT = 10**7

Matrix = tuple[tuple[int, ...], ...]


class FeasibilityError(RuntimeError):
    """An enumeration was refused because it exceeds the size guard."""


def _as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if not m or not m[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def support(M: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Nonzero coordinates of M in row-major order, 1-based."""
    return [
        (i + 1, j + 1) for i, row in enumerate(M) for j, x in enumerate(row) if x != 0
    ]


def comparable(p: tuple[int, int], q: tuple[int, int]) -> bool:
    return (p[0] <= q[0] and p[1] <= q[1]) or (q[0] <= p[0] and q[1] <= p[1])


def is_width_one(M: Sequence[Sequence[int]]) -> bool:
    """True iff every pair of support coordinates is comparable."""
    supp = support(M)
    # Row-major order already sorts a chain, so checking neighbours suffices,
    # but the quadratic check is cheap at these sizes and obviously right.
    return all(comparable(p, q) for p, q in itertools.combinations(supp, 2))


@dataclass(frozen=True)
class WidthOneMatrix:
    entries: Matrix

    def __post_init__(self) -> None:
        m = _as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        if any(x < 0 for r in m for x in r):
            raise ValueError("width-one matrix entries must be nonnegative")
        if not is_width_one(m):
            raise ValueError("support is not a chain")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def d(self) -> int:
        return sum(map(sum, self.entries))


@dataclass(frozen=True)
class Biword:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("biword rows must have equal length")
        for name, row in (("top", self.top), ("bottom", self.bottom)):
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"biword {name} row is not weakly increasing")

    @property
    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def __len__(self) -> int:
        return len(self.top)


def matrix_to_biword(T: WidthOneMatrix | Sequence[Sequence[int]]) -> Biword:
    if not isinstance(T, WidthOneMatrix):
        T = WidthOneMatrix(T)
    top: list[int] = []
    bottom: list[int] = []
    # row-major order of a chain's support is its chain order
    for i, j in support(T.entries):
        mult = T.entries[i - 1][j - 1]
        top.extend([i] * mult)
        bottom.extend([j] * mult)
    return Biword(tuple(top), tuple(bottom))


def biword_to_matrix(B: Biword, rows: int, cols: int) -> WidthOneMatrix:
    if not isinstance(B, Biword):
        raise TypeError("expected a Biword")
    out = [[0] * cols for _ in range(rows)]
    for i, j in B.columns:
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ValueError(f"biword column ({i}, {j}) outside a {rows}x{cols} matrix")
        out[i - 1][j - 1] += 1
    return WidthOneMatrix(out)


def count_width_one(d: int, n1: int, n2: int | None = None) -> int:
    """|T(d, n1 x n2)| = C(d+n1-1, d) * C(d+n2-1, d)."""
    if n2 is None:
        n2 = n1
    return binomial(d + n1 - 1, d) * binomial(d + n2 - 1, d)


def enumerate_biwords(d: int, n1: int, n2: int | None = None) -> Iterator[Biword]:
    """All biwords of length d over {1..n1} x {1..n2}, lexicographically."""
    if n2 is None:
        n2 = n1
    if d < 1 or n1 < 1 or n2 < 1:
        raise ValueError("need d, n1, n2 >= 1")
    tops = itertools.combinations_with_replacement(range(1, n1 + 1), d)
    for top in tops:
        for bottom in itertools.combinations_with_replacement(range(1, n2 + 1), d):
            yield Biword(top, bottom)


def enumerate_width_one(d: int, n1: int, n2: int | None = None) -> Iterator[WidthOneMatrix]:
    if n2 is None:
        n2 = n1
    for B in enumerate_biwords(d, n1, n2):
        yield biword_to_matrix(B, n1, n2)


def _check_guard(d: int, n1: int, n2: int, limit: int | None, force: bool) -> None:
    size = count_width_one(d, n1, n2)
    cap = ORACLE_LIMIT if limit is None else limit
    if size > cap and not force:
        raise FeasibilityError(
            f"enumerating {size} width-one matrices exceeds the limit {cap}"
        )


def sum_all_oracle(
    d: int,
    n1: int,
    n2: int | None = None,
    *,
    limit: int | None = None,
    force: bool = False,
) -> list[list[int]]:
    """Entrywise sum of every width-one n1 x n2 matrix with entry sum d.

    Works straight off the biword stream: each biword column (i, j) adds one
    to entry (i, j).  Memory stays at one accumulator matrix.
    """
    if n2 is None:
        n2 = n1
    _check_guard(d, n1, n2, limit, force)
    acc = [[0] * n2 for _ in range(n1)]
    top_seqs = list(itertools.combinations_with_replacement(range(1, n1 + 1), d))
    bottom_seqs = list(itertools.combinations_with_replacement(range(1, n2 + 1), d))
    for top in top_seqs:
        for bottom in bottom_seqs:
            for i, j in zip(top, bottom):
                acc[i - 1][j - 1] += 1
    return acc


def enumerate_compositions_into(d: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of d into ``parts`` parts, largest first part first."""
    if parts == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in enumerate_compositions_into(d - first, parts - 1):
            yield (first,) + rest


def enumerate_width_one_by_filter(
    d: int, n1: int, n2: int | None = None
) -> Iterator[Matrix]:
    """Second, independent enumeration: every nonnegative n1 x n2 matrix
    with entry sum d, kept when :func:`is_width_one` accepts it.

    Exponentially slower than the biword route; only for testing the
    bijection at tiny sizes.
    """
    if n2 is None:
        n2 = n1
    for flat in enumerate_compositions_into(d, n1 * n2):
        M = tuple(tuple(flat[r * n2 : (r + 1) * n2]) for r in range(n1))
        if is_width_one(M):
            yield M


def sum_all_by_filter(d: int, n1: int, n2: int | None = None) -> list[list[int]]:
    if n2 is None:
        n2 = n1
    acc = [[0] * n2 for _ in range(n1)]
    for M in enumerate_width_one_by_filter(d, n1, n2):
        for i in range(n1):
            for j in range(n2):
                acc[i][j] += M[i][j]
    return acc
