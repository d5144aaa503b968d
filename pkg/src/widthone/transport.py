"""Discrete transport between compositions with a Monge cost.

When the cost matrix is Monge, the northwest corner plan is optimal, so the
EMD between two histograms is the cost of that plan.  Because the plan map
(lambda, mu) -> T is a bijection onto the width-one matrices, the mean EMD
over all histogram pairs is tr(C^T S(d, n)) / C(d+n-1, d)^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence

from widthone.exact_arith import binomial
from widthone.formulas import sum_matrix, trace_product
from widthone.width_one import (
    FeasibilityError,
    WidthOneMatrix,
    enumerate_compositions_into,
)

#: cap on the number of (lambda, mu) pairs the brute-force mean will visit
MEAN_ORACLE_LIMIT = 10**6


class NotMongeError(ValueError):
    def __init__(self, i: int, j: int, block: tuple[tuple[Fraction, Fraction], ...]):
        self.i, self.j, self.block = i, j, block
        (a, b), (c, e) = block
        super().__init__(
            f"cost is not Monge: rows {i},{i + 1} / cols {j},{j + 1} give "
            f"{a} + {e} > {b} + {c}"
        )


class CostParseError(ValueError):
    pass


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if any(p < 0 for p in self.parts):
            raise ValueError("composition parts must be nonnegative")

    @property
    def d(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def enumerate_compositions(d: int, n: int) -> Iterator[Composition]:
    """All C(d+n-1, d) weak compositions of d into n parts, first part descending."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    for parts in enumerate_compositions_into(d, n):
        yield Composition(parts)


@dataclass(frozen=True)
class CostMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    monge_verified: bool = False

    def __post_init__(self) -> None:
        e = tuple(tuple(Fraction(x) for x in r) for r in self.entries)
        if not e or not e[0] or any(len(r) != len(e[0]) for r in e):
            raise ValueError("cost matrix must be a nonempty rectangle")
        if any(x < 0 for r in e for x in r):
            raise ValueError("costs must be nonnegative")
        object.__setattr__(self, "entries", e)
        if self.monge_verified:
            bad = monge_violation(e)
            if bad is not None:
                raise NotMongeError(*bad)

    @classmethod
    def verified(cls, entries) -> "CostMatrix":
        """Build and check the Monge property, raising :class:`NotMongeError`."""
        raw = cls(entries)
        bad = monge_violation(raw.entries)
        if bad is not None:
            raise NotMongeError(*bad)
        return cls(raw.entries, monge_verified=True)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])


def l1_cost(n: int) -> CostMatrix:
    """C_ij = |i - j|, the line-bin cost."""
    return CostMatrix(
        tuple(tuple(Fraction(abs(i - j)) for j in range(n)) for i in range(n)),
        monge_verified=True,
    )


def _entries(C) -> tuple[tuple, ...]:
    return C.entries if isinstance(C, CostMatrix) else tuple(tuple(r) for r in C)


def monge_violation(C) -> tuple[int, int, tuple] | None:
    """First adjacent 2x2 block breaking C_ij + C_{i+1,j+1} <= C_{i+1,j} + C_{i,j+1}.

    Returns ``(i, j, block)`` with 1-based (i, j) the block's top-left, or
    ``None``.  Summing adjacent inequalities over a rectangle gives the
    inequality for any i < I, j < J, so the local test is complete.
    """
    e = _entries(C)
    for a in range(len(e) - 1):
        for b in range(len(e[0]) - 1):
            if e[a][b] + e[a + 1][b + 1] > e[a + 1][b] + e[a][b + 1]:
                block = ((e[a][b], e[a][b + 1]), (e[a + 1][b], e[a + 1][b + 1]))
                return a + 1, b + 1, block
    return None


def is_monge(C) -> bool:
    return monge_violation(C) is None


def is_monge_full(C) -> bool:
    """The quantified form over all i < I, j < J; slow, for checking is_monge."""
    e = _entries(C)
    n1, n2 = len(e), len(e[0])
    for i, I in itertools.combinations(range(n1), 2):
        for j, J in itertools.combinations(range(n2), 2):
            if e[i][j] + e[I][J] > e[I][j] + e[i][J]:
                return False
    return True


def nw_corner(lam: Sequence[int], mu: Sequence[int]) -> WidthOneMatrix:
    """Northwest corner plan with row sums ``lam`` and column sums ``mu``.

    When a row and a column run out together the walk moves south; the
    exhausted column then only receives zeros, so the plan is unaffected.
    """
    lam = list(lam)
    mu = list(mu)
    if any(x < 0 for x in lam + mu):
        raise ValueError("margins must be nonnegative")
    if sum(lam) != sum(mu):
        raise ValueError(f"margin totals differ: {sum(lam)} vs {sum(mu)}")
    n1, n2 = len(lam), len(mu)
    T = [[0] * n2 for _ in range(n1)]
    i = j = 0
    while i < n1 and j < n2:
        t = min(lam[i], mu[j])
        T[i][j] = t
        lam[i] -= t
        mu[j] -= t
        if lam[i] == 0:
            i += 1
        else:
            j += 1
    return WidthOneMatrix(T)


def plan_cost(T, C) -> Fraction:
    e = _entries(C)
    rows = T.entries if isinstance(T, WidthOneMatrix) else T
    return Fraction(sum(c * t for cr, tr in zip(e, rows) for c, t in zip(cr, tr)))


def emd(lam, mu, C, *, allow_non_monge: bool = False) -> Fraction:
    """Earth mover's distance, i.e. the cost of the northwest corner plan.

    With ``allow_non_monge`` the Monge check is skipped and the result is
    just the NW-plan cost, which need not be optimal.
    """
    if not allow_non_monge:
        _require_monge(C)
    T = nw_corner(lam, mu)
    e = _entries(C)
    if (len(e), len(e[0])) != (T.rows, T.cols):
        raise ValueError("cost matrix shape does not match the margins")
    return plan_cost(T, C)


def _require_monge(C) -> None:
    if isinstance(C, CostMatrix) and C.monge_verified:
        return
    bad = monge_violation(C)
    if bad is not None:
        raise NotMongeError(*bad)


def mean_emd(d: int, n: int, C, *, allow_non_monge: bool = False, **kw) -> Fraction:
    """Mean EMD over all pairs of compositions of d into n parts, via the trace."""
    if not allow_non_monge:
        _require_monge(C)
    e = _entries(C)
    if (len(e), len(e[0])) != (n, n):
        raise ValueError(f"mean EMD needs an {n}x{n} cost matrix")
    S = sum_matrix(d, n, n, kw.pop("method", "auto"), **kw)
    return Fraction(trace_product(e, S)) / binomial(d + n - 1, d) ** 2


def mean_emd_oracle(
    d: int, n: int, C, *, allow_non_monge: bool = False, limit: int = MEAN_ORACLE_LIMIT
) -> Fraction:
    """Mean EMD by running the northwest corner rule on every pair."""
    count = binomial(d + n - 1, d)
    if count**2 > limit:
        raise FeasibilityError(f"{count ** 2} composition pairs exceeds the limit {limit}")
    if not allow_non_monge:
        _require_monge(C)
    comps = [c.parts for c in enumerate_compositions(d, n)]
    total = Fraction(0)
    for lam in comps:
        for mu in comps:
            total += emd(lam, mu, C, allow_non_monge=True)
    return total / count**2


def enumerate_margin_tables(lam: Sequence[int], mu: Sequence[int]) -> Iterator[list[list[int]]]:
    """Every nonnegative integer matrix with row sums lam and column sums mu."""
    n1, n2 = len(lam), len(mu)

    def rows_from(r: int, remaining: list[int]) -> Iterator[list[list[int]]]:
        if r == n1 - 1:
            if sum(remaining) == lam[r]:
                yield [list(remaining)]
            return
        for row in _bounded_compositions(lam[r], remaining):
            rest = [m - x for m, x in zip(remaining, row)]
            for tail in rows_from(r + 1, rest):
                yield [list(row)] + tail

    if sum(lam) != sum(mu):
        return
    if n1 == 0:
        return
    yield from rows_from(0, list(mu))


def _bounded_compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for x in range(min(total, caps[0]), -1, -1):
        for rest in _bounded_compositions(total - x, caps[1:]):
            yield (x,) + rest


def brute_force_transport_min(lam, mu, C) -> Fraction:
    """Minimum plan cost over all integer plans with the given margins."""
    return min(plan_cost(T, C) for T in enumerate_margin_tables(lam, mu))


def parse_cost_text(text: str) -> CostMatrix:
    """Parse whitespace-separated decimals or p/q fractions, one row per line.

    Blank lines and lines starting with ``#`` are skipped.  Every error names
    its 1-based row and column.
    """
    rows: list[list[Fraction]] = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        r = len(rows) + 1
        row = []
        for c, tok in enumerate(stripped.split(), start=1):
            try:
                v = Fraction(tok)
            except (ValueError, ZeroDivisionError):
                raise CostParseError(f"row {r}, column {c}: cannot parse {tok!r}") from None
            if v < 0:
                raise CostParseError(f"row {r}, column {c}: negative cost {tok}")
            row.append(v)
        if rows and len(row) != len(rows[0]):
            raise CostParseError(
                f"row {r}: expected {len(rows[0])} columns, found {len(row)}"
            )
        rows.append(row)
    if not rows:
        raise CostParseError("empty cost matrix")
    if len(rows) != len(rows[0]):
        raise CostParseError(f"cost matrix is {len(rows)}x{len(rows[0])}, not square")
    return CostMatrix(tuple(map(tuple, rows)))


def read_cost_file(path: str | Path) -> CostMatrix:
    return parse_cost_text(Path(path).read_text())


def random_monge(n: int, rng, max_entry: int = 20) -> CostMatrix:
    """Random nonnegative integer Monge matrix.

    A random first row and column are extended by integrating nonpositive
    adjacent second differences, then the whole matrix is shifted to be
    nonnegative (a constant shift keeps the Monge property).
    """
    # second differences D[a][b] = C[a][b] + C[a+1][b+1] - C[a+1][b] - C[a][b+1] <= 0
    D = [[-rng.randint(0, 3) for _ in range(n - 1)] for _ in range(n - 1)]
    row0 = [rng.randint(0, max_entry) for _ in range(n)]
    col0 = [rng.randint(0, max_entry) for _ in range(n)]
    col0[0] = row0[0]
    C = [[0] * n for _ in range(n)]
    C[0] = row0[:]
    for a in range(n):
        C[a][0] = col0[a]
    for a in range(1, n):
        for b in range(1, n):
            C[a][b] = D[a - 1][b - 1] + C[a][b - 1] + C[a - 1][b] - C[a - 1][b - 1]
    low = min(min(r) for r in C)
    if low < 0:
        C = [[x - low for x in r] for r in C]
    return CostMatrix.verified(C)
