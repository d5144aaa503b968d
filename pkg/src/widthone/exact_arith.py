"""Exact integer and rational primitives.

Everything here works on Python ``int`` and :class:`fractions.Fraction`,
so results are exact at any magnitude.  No floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def binomial(a: int, b: int) -> int:
    """C(a, b), zero-extended to ``b < 0`` and ``b > a``."""
    if a < 0:
        raise ValueError(f"binomial upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def pochhammer(a: int, k: int) -> int:
    """Rising factorial a(a+1)...(a+k-1); 1 for k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer length must be >= 0, got {k}")
    out = 1
    for t in range(k):
        out *= a + t
        if out == 0:
            break
    return out


class BinomialTable:
    """Pascal-rule table of C(a, b) for 0 <= a <= a_max, 0 <= b <= min(a, b_max).

    Lookups with b above ``b_max`` are folded through C(a, b) = C(a, a - b)
    when that lands inside the table, and otherwise fall back to
    :func:`binomial`.  The table is filled once in ``__init__`` and only read
    afterwards, so sharing one instance between threads is safe.
    """

    def __init__(self, a_max: int, b_max: int | None = None) -> None:
        if a_max < 0:
            raise ValueError("a_max must be >= 0")
        if b_max is None:
            b_max = a_max
        self.a_max = a_max
        self.b_max = max(0, min(b_max, a_max))
        rows: list[tuple[int, ...]] = [(1,)]
        for a in range(1, a_max + 1):
            prev = rows[-1]
            width = min(a, self.b_max) + 1
            row = [1] * width
            for b in range(1, width):
                # prev[b] is absent when b == a (it would be C(a-1, a) = 0)
                row[b] = prev[b - 1] + (prev[b] if b < len(prev) else 0)
            rows.append(tuple(row))
        self._rows = rows

    def __call__(self, a: int, b: int) -> int:
        if a < 0:
            raise ValueError(f"binomial upper index must be >= 0, got {a}")
        if b < 0 or b > a:
            return 0
        if a <= self.a_max:
            if b > self.b_max:
                b = a - b
            if b <= self.b_max:
                return self._rows[a][b]
        return math.comb(a, b)

    def row(self, a: int) -> tuple[int, ...]:
        """Stored prefix C(a, 0..min(a, b_max))."""
        return self._rows[a]


def hypergeometric_unit(upper: Sequence[int], lower: Sequence[int]) -> Fraction:
    """Terminating pFq at z = 1 with integer parameters, evaluated exactly.

    Terms are generated by the ratio
    t_{k+1} / t_k = prod(a + k) / (prod(b + k) * (k + 1)).
    The sum stops as soon as an upper factor vanishes.  Reaching a zero
    lower factor first is an error, because the series is undefined there.
    """
    upper = [int(a) for a in upper]
    lower = [int(b) for b in lower]
    if not any(a <= 0 for a in upper):
        raise ValueError(f"series with upper parameters {upper} does not terminate")
    total = Fraction(1)
    term = Fraction(1)
    k = 0
    while True:
        num = 1
        for a in upper:
            num *= a + k
        if num == 0:
            return total
        den = k + 1
        for b in lower:
            den *= b + k
        if den == 0:
            raise ZeroDivisionError(
                f"lower parameters {lower} hit zero at index {k} before termination"
            )
        term = term * num / den
        total += term
        k += 1


def f43_unit(
    a1: int, a2: int, a3: int, a4: int, b1: int, b2: int, b3: int
) -> Fraction:
    """4F3(a1, a2, a3, a4; b1, b2, b3; 1) for a terminating parameter set."""
    return hypergeometric_unit((a1, a2, a3, a4), (b1, b2, b3))
