"""Backtracking enumeration of the three tableau families used downstream:
semistandard Young tableaux, flagged strictly-increasing skew tableaux, and
set-valued semistandard tableaux.

All enumerators are restartable generators that fill cells in row-major order
and try labels in increasing order, so the output sequence is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import ExponentVector, Partition


@dataclass(frozen=True)
class Tableau:
    """A filling of the skew diagram outer/inner by nonempty label sets.

    entries[r] lists the cells of row r (0-based) left to right, covering
    absolute columns inner.part(r+1) .. outer.part(r+1)-1; each cell is a
    sorted tuple of positive integers (singletons for ordinary tableaux).
    """

    outer: Partition
    inner: Partition
    entries: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError("inner shape must fit inside outer shape")
        if len(self.entries) != len(self.outer):
            raise ValueError("one entry row per outer row required")
        for r, row in enumerate(self.entries):
            expected = self.outer.part(r + 1) - self.inner.part(r + 1)
            if len(row) != expected:
                raise ValueError(f"row {r + 1} must have {expected} cells")
            for labels in row:
                if not labels or any(x < 1 for x in labels):
                    raise ValueError("cells must hold nonempty sets of positive ints")
                if any(labels[i] >= labels[i + 1] for i in range(len(labels) - 1)):
                    raise ValueError("cell labels must be strictly increasing tuples")

    def cell(self, r: int, c: int) -> tuple[int, ...]:
        """Labels at 0-based row r, absolute 0-based column c."""
        offset = c - self.inner.part(r + 1)
        return self.entries[r][offset]

    def has_cell(self, r: int, c: int) -> bool:
        return 0 <= r < len(self.outer) and self.inner.part(r + 1) <= c < self.outer.part(r + 1)

    def cells(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        """Yield (row, column, labels) in row-major order, 0-based coordinates."""
        for r, row in enumerate(self.entries):
            start = self.inner.part(r + 1)
            for offset, labels in enumerate(row):
                yield r, start + offset, labels

    def label_count(self) -> int:
        """Total number of labels over all cells (counting set sizes)."""
        return sum(len(labels) for _, _, labels in self.cells())

    def is_empty(self) -> bool:
        return all(not row for row in self.entries)


def content(t: Tableau, n: int) -> ExponentVector:
    """Multiplicity vector of labels 1..n over all cells of t."""
    counts = [0] * n
    for _, _, labels in t.cells():
        for x in labels:
            if x > n:
                raise ValueError(f"label {x} exceeds ambient {n}")
            counts[x - 1] += 1
    return tuple(counts)


def _straight_tableau(lam: Partition, grid: list[list[int]]) -> Tableau:
    entries = tuple(tuple((v,) for v in row) for row in grid)
    return Tableau(outer=lam, inner=Partition(), entries=entries)


def enumerate_ssyt(lam: Partition, n: int) -> Iterator[Tableau]:
    """All semistandard Young tableaux of shape lam with entries in 1..n.

    Rows weakly increase, columns strictly increase. Shapes with more rows
    than n admit no filling and yield nothing.
    """
    cells = [(r, c) for r in range(len(lam)) for c in range(lam.part(r + 1))]
    grid = [[0] * lam.part(r + 1) for r in range(len(lam))]

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield _straight_tableau(lam, grid)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, n + 1):
            grid[r][c] = v
            yield from fill(idx + 1)

    yield from fill(0)


def enumerate_lenart_tableaux(lam: Partition, mu: Partition, n: int) -> Iterator[Tableau]:
    """All fillings of the skew shape mu/lam that are strictly increasing along
    rows and down columns, with every entry of row r at most r-1 (and in 1..n).

    The row-r cap makes row 1 unfillable, so any mu with mu_1 > lam_1 yields
    nothing at all.
    """
    if not mu.contains(lam):
        raise ValueError("not a skew shape")
    cells = [
        (r, c)
        for r in range(len(mu))
        for c in range(lam.part(r + 1), mu.part(r + 1))
    ]
    grid = {cell: 0 for cell in cells}

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            entries = tuple(
                tuple((grid[(r, c)],) for c in range(lam.part(r + 1), mu.part(r + 1)))
                for r in range(len(mu))
            )
            yield Tableau(outer=mu, inner=lam, entries=entries)
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in grid:
            lo = max(lo, grid[(r, c - 1)] + 1)
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        hi = min(n, r)  # 1-based row r+1 caps entries at (r+1)-1 = r
        for v in range(lo, hi + 1):
            grid[(r, c)] = v
            yield from fill(idx + 1)

    yield from fill(0)


@lru_cache(maxsize=None)
def _label_sets(lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    """Nonempty subsets of {lo..hi} as sorted tuples, lexicographically ordered."""

    def rec(start: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for v in range(start, hi + 1):
            grown = prefix + (v,)
            yield grown
            yield from rec(v + 1, grown)

    return tuple(rec(lo, ()))


def enumerate_set_valued(lam: Partition, n: int) -> Iterator[Tableau]:
    """All set-valued semistandard fillings of lam with labels in 1..n.

    Rows weakly increase and columns strictly increase on set extremes:
    max(cell) <= min(right neighbour) and max(cell) < min(cell below).
    """
    cells = [(r, c) for r in range(len(lam)) for c in range(lam.part(r + 1))]
    grid: dict[tuple[int, int], tuple[int, ...]] = {}

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            entries = tuple(
                tuple(grid[(r, c)] for c in range(lam.part(r + 1)))
                for r in range(len(lam))
            )
            yield Tableau(outer=lam, inner=Partition(), entries=entries)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)][-1])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)][-1] + 1)
        for labels in _label_sets(lo, n) if lo <= n else ():
            grid[(r, c)] = labels
            yield from fill(idx + 1)

    yield from fill(0)


# -- post-hoc validity predicates -------------------------------------------


def is_valid_ssyt(t: Tableau, n: int) -> bool:
    """Straight shape, singleton cells in 1..n, rows weak, columns strict."""
    if len(t.inner) != 0:
        return False
    for r, c, labels in t.cells():
        if len(labels) != 1 or not 1 <= labels[0] <= n:
            return False
        if c > 0 and t.cell(r, c - 1)[0] > labels[0]:
            return False
        if r > 0 and t.has_cell(r - 1, c) and t.cell(r - 1, c)[0] >= labels[0]:
            return False
    return True


def is_valid_lenart(t: Tableau, lam: Partition, mu: Partition, n: int) -> bool:
    """Skew shape mu/lam, strict rows and columns, row r capped at r-1."""
    if t.outer != mu or t.inner != lam:
        return False
    for r, c, labels in t.cells():
        if len(labels) != 1:
            return False
        v = labels[0]
        if not 1 <= v <= min(n, r):  # r is 0-based, so the cap is (r+1)-1 = r
            return False
        if t.has_cell(r, c - 1) and c - 1 >= lam.part(r + 1) and t.cell(r, c - 1)[0] >= v:
            return False
        if r > 0 and t.has_cell(r - 1, c) and t.cell(r - 1, c)[0] >= v:
            return False
    return True


def is_valid_set_valued(t: Tableau, n: int) -> bool:
    """Straight shape, nonempty cells in 1..n, weak rows / strict columns on extremes."""
    if len(t.inner) != 0:
        return False
    for r, c, labels in t.cells():
        if not labels or labels[-1] > n:
            return False
        if c > 0 and t.cell(r, c - 1)[-1] > labels[0]:
            return False
        if r > 0 and t.has_cell(r - 1, c) and t.cell(r - 1, c)[-1] >= labels[0]:
            return False
    return True
