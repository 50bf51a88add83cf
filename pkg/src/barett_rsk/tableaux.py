"""Partitions, columns and tableaux living inside an N x N square.

Conventions used throughout the package:

* partitions are stored weakly decreasing, ``(4, 2, 2)``;
* tableaux are stored as a tuple of rows, bottom (longest) row first;
* a column is read bottom-up, so its entries are strictly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_increasing(cls, parts: Sequence[int]) -> Partition:
        """Build from the weakly increasing notation, e.g. ``(2, 2, 4)``."""
        return cls(tuple(reversed(tuple(parts))))

    def increasing(self) -> tuple[int, ...]:
        return tuple(reversed(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """``parts[i]`` padded with zeros."""
        return self.parts[i] if i < len(self.parts) else 0

    def fits_square(self, n: int) -> bool:
        return len(self.parts) <= n and (not self.parts or self.parts[0] <= n)


def as_partition(p: Partition | Iterable[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def conjugate(p: Partition | Iterable[int]) -> Partition:
    p = as_partition(p)
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p if part > i) for i in range(p.parts[0])))


def complement(p: Partition | Iterable[int], n: int) -> Partition:
    """Complementary partition within the ``n x n`` square.

    The boxes of the square outside the diagram of ``p`` form (read from the
    top) a diagram of shape ``nu`` with ``nu_i = n - p_{n+1-i}``; the result
    is the conjugate of ``nu``.
    """
    p = as_partition(p)
    if not p.fits_square(n):
        raise ValueError(f"partition {p.parts} does not fit in the {n}x{n} square")
    nu = tuple(n - p.part(n - 1 - i) for i in range(n))
    return conjugate(q for q in nu if q > 0)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Ordered by number of parts, then lexicographically.
    """

    def rec(length: int, bound: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for first in range(1, bound + 1):
            for rest in rec(length - 1, first):
                yield (first,) + rest

    for length in range(rows + 1):
        for parts in rec(length, cols):
            yield Partition(parts)


@dataclass(frozen=True)
class Column:
    entries: tuple[int, ...]
    ambient_n: int

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"column entries must be strictly increasing: {entries}")
        if entries and (entries[0] < 1 or entries[-1] > self.ambient_n):
            raise ValueError(f"column entries must lie in [1, {self.ambient_n}]: {entries}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)


def column_complement(c: Column) -> Column:
    present = set(c.entries)
    return Column(tuple(i for i in range(1, c.ambient_n + 1) if i not in present), c.ambient_n)


def column_leq(a: Column, b: Column) -> bool:
    """True iff ``b`` glued to the right of ``a`` gives a Young tableau."""
    if a.ambient_n != b.ambient_n:
        raise ValueError("columns live in different alphabets")
    return len(b) <= len(a) and all(x <= y for x, y in zip(a.entries, b.entries))


def all_columns(n: int) -> Iterator[Column]:
    for k in range(n + 1):
        for entries in combinations(range(1, n + 1), k):
            yield Column(entries, n)


@dataclass(frozen=True)
class Tabloid:
    """A filling of a Ferrers diagram by positive integers, rows bottom-up."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if any(not row for row in rows):
            raise ValueError("tableau rows must be non-empty")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise ValueError("row lengths must be weakly decreasing from the bottom")
        if any(x < 1 for row in rows for x in row):
            raise ValueError("tableau entries must be positive")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]):
        """Build from columns listed left to right, each read bottom-up.

        Empty columns are allowed only at the right end and are dropped.
        """
        columns = [tuple(c) for c in columns]
        while columns and not columns[-1]:
            columns.pop()
        if any(len(a) < len(b) for a, b in zip(columns, columns[1:])):
            raise ValueError("column lengths must be weakly decreasing")
        height = len(columns[0]) if columns else 0
        rows = tuple(tuple(col[r] for col in columns if len(col) > r) for r in range(height))
        return cls(rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(row[c] for row in self.rows if len(row) > c) for c in range(width))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def content(self, n: int) -> tuple[int, ...]:
        """Multiplicity of each letter ``1..n``: the exponent vector of X^T."""
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def is_young_tableau(t: Tabloid) -> bool:
    rows = t.rows
    if any(a > b for row in rows for a, b in zip(row, row[1:])):
        return False
    return all(below[c] < above[c] for below, above in zip(rows, rows[1:]) for c in range(len(above)))


class YoungTableau(Tabloid):
    """A semistandard tableau: rows weakly increase, columns strictly increase."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_young_tableau(self):
            raise ValueError(f"not a Young tableau: {self.rows}")


EMPTY = YoungTableau(())


def complement_tableau(t: Tabloid, n: int) -> YoungTableau:
    """Column-wise complement of ``t`` inside the ``n x n`` square.

    Column ``i`` of the result holds the letters of ``{1..n}`` missing from
    column ``n - i + 1`` of ``t`` (absent columns count as empty).  The
    result has shape ``complement(shape(t)', n)`` in terms of ``t``'s
    conjugate shape, and is always a Young tableau when ``t`` is one.
    """
    cols = list(t.columns)
    if len(cols) > n:
        raise ValueError(f"tableau has {len(cols)} columns, more than n={n}")
    if t.max_entry() > n:
        raise ValueError(f"tableau entries exceed n={n}")
    cols += [()] * (n - len(cols))
    full = range(1, n + 1)
    out = [tuple(x for x in full if x not in set(cols[n - 1 - i])) for i in range(n)]
    return YoungTableau.from_columns(out)
