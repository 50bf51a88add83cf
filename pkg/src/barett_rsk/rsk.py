"""Column bumping, Knuth's {0,1}-matrix correspondence and the square bijection Phi.

Boxes are addressed ``(row, column)``, both 1-based, rows counted from the
bottom of the tableau.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .tableaux import EMPTY, YoungTableau, complement, complement_tableau, conjugate

Box = tuple[int, int]


@dataclass(frozen=True)
class ZeroOneMatrix:
    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        bits = tuple(tuple(int(b) for b in row) for row in self.bits)
        n = len(bits)
        if any(len(row) != n for row in bits):
            raise ValueError("matrix must be square")
        if any(b not in (0, 1) for row in bits for b in row):
            raise ValueError("matrix entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zeros(cls, n: int) -> ZeroOneMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def ones(cls, n: int) -> ZeroOneMatrix:
        return cls(tuple((1,) * n for _ in range(n)))

    @classmethod
    def from_index(cls, n: int, index: int) -> ZeroOneMatrix:
        """Matrix whose row-major bits are the binary digits of ``index`` (MSB first)."""
        flat = [(index >> (n * n - 1 - k)) & 1 for k in range(n * n)]
        return cls(tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n)))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """1-based access ``m[i, j]``."""
        i, j = ij
        return self.bits[i - 1][j - 1]

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.bits]


def all_matrices(n: int) -> Iterator[ZeroOneMatrix]:
    for flat in product((0, 1), repeat=n * n):
        yield ZeroOneMatrix(tuple(flat[r * n : (r + 1) * n] for r in range(n)))


@dataclass(frozen=True)
class TwoRowArray:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple((int(u), int(v)) for u, v in self.pairs)
        if any(a >= b for a, b in zip(pairs, pairs[1:])):
            raise ValueError("pairs must be strictly increasing in lexicographic order")
        object.__setattr__(self, "pairs", pairs)

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.pairs)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.pairs)


@dataclass(frozen=True)
class InsertionTrace:
    boxes: tuple[Box, ...]


def _columns(t: YoungTableau) -> list[list[int]]:
    return [list(c) for c in t.columns]


def column_insert(t: YoungTableau, x: int) -> tuple[YoungTableau, Box]:
    """Column-insert ``x``: it bumps the smallest entry >= x into the next column."""
    if x < 1:
        raise ValueError("letters must be positive")
    cols = _columns(t)
    c = 0
    while True:
        if c == len(cols):
            cols.append([x])
            box = (1, c + 1)
            break
        col = cols[c]
        k = bisect_left(col, x)
        if k == len(col):
            col.append(x)
            box = (len(col), c + 1)
            break
        col[k], x = x, col[k]
        c += 1
    return YoungTableau.from_columns(cols), box


def _is_corner(cols: list[list[int]], box: Box) -> bool:
    r, c = box
    if not 1 <= c <= len(cols) or len(cols[c - 1]) != r:
        return False
    return c == len(cols) or len(cols[c]) < r


def column_insert_reverse(t: YoungTableau, box: Box) -> tuple[YoungTableau, int]:
    """Undo the insertion that created ``box``; returns the tableau and the inserted letter."""
    cols = _columns(t)
    if not _is_corner(cols, box):
        raise ValueError(f"{box} is not a corner of the tableau")
    c = box[1] - 1
    y = cols[c].pop()
    for c in range(c - 1, -1, -1):
        col = cols[c]
        k = bisect_right(col, y) - 1
        if k < 0:
            raise ValueError("reverse bumping failed: no entry <= bumped letter")
        col[k], y = y, col[k]
    return YoungTableau.from_columns(cols), y


def insert_word(word: Iterable[int], t: YoungTableau = EMPTY) -> tuple[YoungTableau, InsertionTrace]:
    boxes = []
    for x in word:
        t, box = column_insert(t, x)
        boxes.append(box)
    return t, InsertionTrace(tuple(boxes))


def lex_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def matrix_to_word(m: ZeroOneMatrix) -> TwoRowArray:
    return TwoRowArray(tuple((i, j) for i, j in lex_pairs(m.n) if m[i, j]))


def knuth_forward(m: ZeroOneMatrix) -> tuple[YoungTableau, YoungTableau]:
    """Pair ``(T1, T2)`` of conjugate shapes.

    ``T1`` column-inserts the bottom row of the word; the i-th box created at
    ``(r, c)`` puts ``u_i`` into ``T2`` at the conjugate position ``(c, r)``.
    """
    word = matrix_to_word(m)
    t1, trace = insert_word(word.bottom)
    rows: list[list[int]] = []
    for u, (r, c) in zip(word.top, trace.boxes):
        if c > len(rows):
            rows.append([])
        rows[c - 1].append(u)
        assert len(rows[c - 1]) == r
    return t1, YoungTableau(tuple(tuple(row) for row in rows))


def knuth_inverse(t1: YoungTableau, t2: YoungTableau, n: int) -> ZeroOneMatrix:
    if conjugate(t1.shape) != t2.shape:
        raise ValueError("tableaux must have conjugate shapes")
    if max(t1.max_entry(), t2.max_entry()) > n:
        raise ValueError(f"entries exceed n={n}")
    q_rows = [list(row) for row in t2.rows]
    pairs = []
    while q_rows:
        # Largest label, rightmost among equal labels: the last box created.
        u, col, row = max((x, c, r) for r, row in enumerate(q_rows) for c, x in enumerate(row))
        if col != len(q_rows[row]) - 1 or (row + 1 < len(q_rows) and len(q_rows[row + 1]) > col):
            raise ValueError("tableau pair is not in the image of the correspondence")
        q_rows[row].pop()
        if not q_rows[row]:
            q_rows.pop()
        t1, v = column_insert_reverse(t1, (col + 1, row + 1))
        pairs.append((u, v))
    pairs.reverse()
    try:
        word = TwoRowArray(tuple(pairs))
    except ValueError as exc:
        raise ValueError("tableau pair is not in the image of the correspondence") from exc
    bits = [[0] * n for _ in range(n)]
    for u, v in word.pairs:
        bits[u - 1][v - 1] = 1
    return ZeroOneMatrix(tuple(tuple(row) for row in bits))


@dataclass(frozen=True)
class SquareFilling:
    """An N x N square split into a delta-filled and a chi-filled Young tableau."""

    n: int
    delta_tableau: YoungTableau
    chi_tableau: YoungTableau

    def __post_init__(self) -> None:
        if complement(self.delta_tableau.shape, self.n) != self.chi_tableau.shape:
            raise ValueError("delta and chi tableaux do not have complementary shapes")
        if max(self.delta_tableau.max_entry(), self.chi_tableau.max_entry()) > self.n:
            raise ValueError(f"entries exceed n={self.n}")

    def satisfies_s1(self) -> bool:
        """The delta tableau has a full first row."""
        rows = self.delta_tableau.rows
        return bool(rows) and len(rows[0]) == self.n

    def monomial(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Exponent vectors ``(delta, chi)`` of the product of all letters."""
        return self.delta_tableau.content(self.n), self.chi_tableau.content(self.n)

    def grid(self) -> list[list[str]]:
        """Square picture, top row first, cells ``"d<i>"`` or ``"c<i>"``.

        The delta tableau sits in the usual place.  Column ``k`` of the chi
        tableau fills the free cells of the ``k``-th row from the top, read
        right to left; so chi rows run top-down along the columns, which
        are taken right to left.
        """
        n = self.n
        grid = [[""] * n for _ in range(n)]
        for r, row in enumerate(self.delta_tableau.rows):
            for c, x in enumerate(row):
                grid[n - 1 - r][c] = f"d{x}"
        for k, col in enumerate(self.chi_tableau.columns):
            for r, x in enumerate(col):
                grid[k][n - 1 - r] = f"c{x}"
        return grid


def phi(m: ZeroOneMatrix) -> SquareFilling:
    t1, t2 = knuth_forward(m)
    return SquareFilling(m.n, t1, complement_tableau(t2, m.n))


def phi_inverse(s: SquareFilling) -> ZeroOneMatrix:
    # The column complement is an involution, so it also undoes itself.
    t2 = complement_tableau(s.chi_tableau, s.n)
    return knuth_inverse(s.delta_tableau, t2, s.n)


def words_w1_w2(m: ZeroOneMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``w1``: second letters of the 1-cells in lexicographic order;
    ``w2``: first letters of the 0-cells ordered by second letter, then first."""
    n = m.n
    w1 = tuple(j for i, j in lex_pairs(n) if m[i, j])
    w2 = tuple(i for j in range(1, n + 1) for i in range(1, n + 1) if not m[i, j])
    return w1, w2


def alternate_phi(m: ZeroOneMatrix) -> tuple[YoungTableau, YoungTableau]:
    w1, w2 = words_w1_w2(m)
    return insert_word(w1)[0], insert_word(w2)[0]
