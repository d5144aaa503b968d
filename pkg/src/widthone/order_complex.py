"""Order complex of the grid poset [i] x [j] and generic shelling tools.

Facets of the grid's order complex are monotone lattice paths from (1, 1)
to (i, j).  A path is stored as its step word, ``1`` for east (column + 1)
and ``2`` for south (row + 1).  Ordering words lexicographically is a
shelling, and the restriction of a facet in that shelling is its set of
corners: vertices where a south step is followed by an east step.

The second half of the module handles arbitrary pure simplicial complexes
by brute force (f-vectors, the f/h transform, checking a facet order is a
shelling).  It is used to check the corner shortcut on small grids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from widthone.exact_arith import binomial

EAST = 1
SOUTH = 2

#: refuse to materialise more faces than this in the generic routines
FACE_LIMIT = 2**20

Coord = tuple[int, int]


@dataclass(frozen=True)
class GridPoset:
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            raise ValueError("grid extents must be >= 1")

    def __contains__(self, p: Coord) -> bool:
        return 1 <= p[0] <= self.i and 1 <= p[1] <= self.j

    def elements(self) -> list[Coord]:
        return [(x, y) for x in range(1, self.i + 1) for y in range(1, self.j + 1)]

    @staticmethod
    def leq(p: Coord, q: Coord) -> bool:
        return p[0] <= q[0] and p[1] <= q[1]

    def chains(self) -> Iterator[frozenset[Coord]]:
        """Every chain, including the empty one.  Exponential; small grids only."""
        elems = self.elements()

        def extend(chain: tuple[Coord, ...], start: int) -> Iterator[tuple[Coord, ...]]:
            yield chain
            for idx in range(start, len(elems)):
                p = elems[idx]
                if not chain or self.leq(chain[-1], p):
                    yield from extend(chain + (p,), idx + 1)

        for c in extend((), 0):
            yield frozenset(c)


@dataclass(frozen=True)
class LatticePath:
    i: int
    j: int
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if self.word.count(EAST) != self.j - 1 or self.word.count(SOUTH) != self.i - 1:
            raise ValueError(
                f"a path in a {self.i}x{self.j} grid needs {self.j - 1} east and "
                f"{self.i - 1} south steps"
            )
        if len(self.word) != self.i + self.j - 2:
            raise ValueError("path word contains steps other than east/south")

    @property
    def vertices(self) -> tuple[Coord, ...]:
        x, y = 1, 1
        out = [(x, y)]
        for step in self.word:
            if step == EAST:
                y += 1
            else:
                x += 1
            out.append((x, y))
        return tuple(out)


def enumerate_facets_lex(i: int, j: int) -> Iterator[LatticePath]:
    """All C(i+j-2, i-1) lattice paths of the i x j grid in lex order of words.

    Choosing the east positions in increasing lexicographic order of
    position tuples yields the words in increasing lexicographic order.
    """
    if i < 1 or j < 1:
        raise ValueError("grid extents must be >= 1")
    length = i + j - 2
    for east_positions in itertools.combinations(range(length), j - 1):
        word = [SOUTH] * length
        for p in east_positions:
            word[p] = EAST
        yield LatticePath(i, j, tuple(word))


def corners(path: LatticePath) -> frozenset[Coord]:
    """Vertices where a south step ends and an east step begins."""
    verts = path.vertices
    w = path.word
    return frozenset(
        verts[t + 1] for t in range(len(w) - 1) if w[t] == SOUTH and w[t + 1] == EAST
    )


@dataclass(frozen=True)
class HPolynomial:
    """Integer polynomial h_0 + h_1 t + ... stored without trailing zeros."""

    coeffs: tuple[int, ...] = field(default=(1,))

    def __post_init__(self) -> None:
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __mul__(self, other: "HPolynomial") -> "HPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for a, x in enumerate(self.coeffs):
            for b, y in enumerate(other.coeffs):
                out[a + b] += x * y
        return HPolynomial(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


def h_poly_shelling(i: int, j: int) -> HPolynomial:
    """Corner-count generating polynomial over all lattice paths of the grid."""
    counts: dict[int, int] = {}
    for path in enumerate_facets_lex(i, j):
        r = len(corners(path))
        counts[r] = counts.get(r, 0) + 1
    top = max(counts)
    return HPolynomial(tuple(counts.get(k, 0) for k in range(top + 1)))


def h_poly_closed(i: int, j: int) -> HPolynomial:
    """sum_l C(i-1, l) C(j-1, l) t^l."""
    if i < 1 or j < 1:
        raise ValueError("grid extents must be >= 1")
    m = min(i - 1, j - 1)
    return HPolynomial(tuple(binomial(i - 1, l) * binomial(j - 1, l) for l in range(m + 1)))


def corner_count_convolution(
    n1: int, n2: int, i: int, j: int, k: int, binom=binomial
) -> int:
    """Number of full paths of the n1 x n2 grid passing through (i, j) with
    exactly k corners other than (i, j).

    Equals the t^k coefficient of h_{i,j}(t) * h_{n1+1-i, n2+1-j}(t).
    """
    if not (1 <= i <= n1 and 1 <= j <= n2):
        raise ValueError(f"({i}, {j}) is outside a {n1}x{n2} grid")
    if k < 0:
        return 0
    total = 0
    for l in range(min(k, i - 1, j - 1) + 1):
        total += (
            binom(i - 1, l) * binom(j - 1, l) * binom(n1 - i, k - l) * binom(n2 - j, k - l)
        )
    return total


# ---------------------------------------------------------------------------
# generic pure simplicial complexes
# ---------------------------------------------------------------------------

Face = frozenset


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        fs = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", fs)
        if not fs:
            raise ValueError("complex needs at least one facet")
        if len({len(f) for f in fs}) != 1:
            raise ValueError("complex is not pure")
        if len(set(fs)) != len(fs):
            raise ValueError("duplicate facet")
        # equal sizes plus distinctness already rule out containment

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        return cls(tuple(frozenset(f) for f in facets))

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1

    def faces(self) -> set[frozenset]:
        """All faces including the empty one."""
        bound = len(self.facets) * 2 ** len(self.facets[0])
        if bound > FACE_LIMIT:
            raise ValueError(f"up to {bound} faces exceeds the limit {FACE_LIMIT}")
        out: set[frozenset] = set()
        for f in self.facets:
            out.update(_powerset(f))
        return out


def _powerset(s: frozenset) -> Iterator[frozenset]:
    items = sorted(s, key=repr)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def grid_order_complex(i: int, j: int) -> SimplicialComplex:
    """The grid's order complex with facets listed in lexicographic shelling order."""
    return SimplicialComplex(tuple(frozenset(p.vertices) for p in enumerate_facets_lex(i, j)))


def f_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    """(f_0, ..., f_{m-1}); the implicit f_{-1} = 1 is not included."""
    m = complex_.dim + 1
    counts = [0] * (m + 1)
    for face in complex_.faces():
        counts[len(face)] += 1
    return tuple(counts[1:])


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for a, x in enumerate(p):
        for b, y in enumerate(q):
            out[a + b] += x * y
    return out


def h_from_f(f: Sequence[int], m: int | None = None) -> HPolynomial:
    """h(t) = sum_{i=0}^{m} f_{i-1} t^i (1-t)^{m-i} with f_{-1} = 1."""
    if m is None:
        m = len(f)
    if len(f) != m:
        raise ValueError(f"f-vector of a dimension-{m - 1} complex has {m} entries")
    fs = [1, *f]
    h = [0] * (m + 1)
    for i, fi in enumerate(fs):
        # coefficients of (1 - t)^(m - i)
        for e in range(m - i + 1):
            h[i + e] += fi * binomial(m - i, e) * (-1) ** e
    return HPolynomial(tuple(h))


def f_from_h(h: HPolynomial | Sequence[int], m: int) -> tuple[int, ...]:
    """Inverse of :func:`h_from_f`: f_{i-1} = sum_l h_l C(m-l, i-l)."""
    coeffs = h.coeffs if isinstance(h, HPolynomial) else tuple(h)
    if len(coeffs) > m + 1:
        raise ValueError("h-polynomial degree exceeds m")
    fs = []
    for i in range(m + 1):
        fs.append(sum(c * binomial(m - l, i - l) for l, c in enumerate(coeffs)))
    if fs[0] != 1:
        raise ValueError("h-vector does not start with h_0 = 1")
    return tuple(fs[1:])


@dataclass(frozen=True)
class ShellingResult:
    ok: bool
    restrictions: tuple[frozenset, ...]
    failed_at: int | None = None  # 0-based index into the facet order
    minimal_new_faces: tuple[frozenset, ...] = ()

    def h_polynomial(self) -> HPolynomial:
        if not self.ok:
            raise ValueError("not a shelling")
        top = max(len(r) for r in self.restrictions)
        counts = [0] * (top + 1)
        for r in self.restrictions:
            counts[len(r)] += 1
        return HPolynomial(tuple(counts))


def verify_shelling(
    complex_: SimplicialComplex, facet_order: Sequence[Iterable[Hashable]]
) -> ShellingResult:
    """Check that ``facet_order`` is a shelling and collect the restrictions.

    For each facet, the faces not already present in the subcomplex spanned
    by its predecessors are found, and their inclusion-minimal members are
    collected.  A shelling needs exactly one minimal new face per facet.
    """
    order = [frozenset(f) for f in facet_order]
    if sorted(order, key=sorted_repr) != sorted(complex_.facets, key=sorted_repr):
        raise ValueError("facet order is not a permutation of the facets")
    seen: set[frozenset] = set()
    restrictions: list[frozenset] = []
    for idx, facet in enumerate(order):
        new = [s for s in _powerset(facet) if s not in seen]
        minimal = [s for s in new if not any(t < s for t in new)]
        if len(minimal) != 1:
            return ShellingResult(
                False, tuple(restrictions), idx, tuple(sorted(minimal, key=sorted_repr))
            )
        restrictions.append(minimal[0])
        seen.update(new)
    return ShellingResult(True, tuple(restrictions))


def sorted_repr(face: frozenset) -> tuple:
    return (len(face), sorted(map(repr, face)))


def octahedron() -> tuple[SimplicialComplex, list[frozenset]]:
    """Boundary of the octahedron on vertices A..F, with a known shelling order.

    A/C, B/D and E/F are the antipodal pairs; every other pair is an edge.
    """
    order = [
        frozenset(s)
        for s in ("ADE", "ADF", "CDE", "ABE", "ABF", "BCE", "CDF", "BCF")
    ]
    return SimplicialComplex(tuple(order)), order
