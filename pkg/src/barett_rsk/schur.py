"""Schur functions by tableau enumeration and the numerator polynomial F(chi, delta).

``F`` is the numerator of P(U < V) over ``prod_{i,j} (chi_i + delta_j)``:

    F = sum over lambda in the (N-1) x N box of s_{(N, lambda)}(delta) * s_{complement}(chi)

It is only built symbolically for small ``N`` (``SYMBOLIC_MAX_N``); beyond
that, evaluate the probability pointwise instead.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .probability import VarianceProfile, barett_direct
from .qseries import alpha
from .rsk import all_matrices, phi
from .tableaux import Partition, YoungTableau, as_partition, complement, partitions_in_box

SYMBOLIC_MAX_N = 3
EXHAUSTIVE_MAX_N = 3


def enumerate_tableaux(shape: Partition | Sequence[int], max_entry: int) -> Iterator[YoungTableau]:
    """Every semistandard tableau of ``shape`` with entries in ``1..max_entry``.

    Rows are filled bottom-up; each entry is >= its left neighbour and
    > the entry below it.
    """
    shape = as_partition(shape)
    if len(shape) > max_entry:
        return

    def fill_row(length: int, below: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        def rec(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            c = len(prefix)
            if c == length:
                yield prefix
                return
            lo = max(prefix[-1] if prefix else 1, below[c] + 1 if below else 1)
            for x in range(lo, max_entry + 1):
                yield from rec(prefix + (x,))

        return rec(())

    def rec_rows(i: int, rows: tuple[tuple[int, ...], ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(shape):
            yield rows
            return
        below = rows[-1] if rows else ()
        for row in fill_row(shape[i], below):
            yield from rec_rows(i + 1, rows + (row,))

    for rows in rec_rows(0, ()):
        yield YoungTableau(rows)


def schur_eval(shape: Partition | Sequence[int], values: Sequence):
    """Sum over tableaux T of the product of ``values[entry - 1]`` over T's entries."""
    total = 0
    for t in enumerate_tableaux(shape, len(values)):
        term = 1
        for row in t.rows:
            for x in row:
                term = term * values[x - 1]
        total = total + term
    return total


@lru_cache(maxsize=None)
def schur_content(shape: tuple[int, ...], n: int) -> Counter:
    """Symbolic s_shape(x_1..x_n): exponent vector -> coefficient."""
    return Counter(t.content(n) for t in enumerate_tableaux(shape, n))


class ExponentMonomial(NamedTuple):
    delta: tuple[int, ...]
    chi: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.delta) + sum(self.chi)


def _power_product(values: Sequence, exponents: Sequence[int]):
    out = 1
    for v, e in zip(values, exponents):
        if e:
            out = out * v**e
    return out


@dataclass
class MultiPolynomial:
    """Sparse polynomial in the delta and chi variables."""

    n: int
    terms: dict[ExponentMonomial, int] = field(default_factory=dict)

    def add(self, mono: ExponentMonomial, coeff: int) -> None:
        c = self.terms.get(mono, 0) + coeff
        if c:
            self.terms[mono] = c
        else:
            self.terms.pop(mono, None)

    def __call__(self, chi: Sequence, delta: Sequence):
        total = 0
        for mono, coeff in self.terms.items():
            total = total + coeff * _power_product(delta, mono.delta) * _power_product(chi, mono.chi)
        return total

    @property
    def multiset_size(self) -> int:
        """Number of monomials counted with multiplicity (sum of coefficients)."""
        return sum(self.terms.values())

    @property
    def distinct_size(self) -> int:
        return len(self.terms)

    def as_counter(self) -> Counter:
        return Counter(self.terms)

    def sorted_terms(self) -> list[tuple[ExponentMonomial, int]]:
        return sorted(self.terms.items())


def F_schur(n: int, *, max_n: int = SYMBOLIC_MAX_N) -> MultiPolynomial:
    if not 1 <= n <= max_n:
        raise ValueError(f"symbolic F is limited to 1 <= n <= {max_n}, got {n}")
    f = MultiPolynomial(n)
    for lam in partitions_in_box(n - 1, n):
        top = Partition((n,) + lam.parts)
        low = complement(top, n)
        delta_part = schur_content(top.parts, n)
        chi_part = schur_content(low.parts, n)
        for de, a in delta_part.items():
            for ch, b in chi_part.items():
                f.add(ExponentMonomial(de, ch), a * b)
    return f


def F_from_barett(chi: Sequence, delta: Sequence):
    """Closed form times ``prod_{i,j} (chi_i + delta_j)``; exact when the inputs are."""
    p = VarianceProfile(tuple(chi), tuple(delta))
    denom = 1
    for c in p.chi:
        for d in p.delta:
            denom = denom * (c + d)
    return barett_direct(p) * denom


def square_fillings(n: int):
    """Images of every n x n {0,1}-matrix under Phi."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to 1 <= n <= {EXHAUSTIVE_MAX_N}")
    return (phi(m) for m in all_matrices(n))


def count_square_fillings(n: int) -> int:
    """Fillings whose delta tableau has a full first row, counted through Phi."""
    return sum(1 for s in square_fillings(n) if s.satisfies_s1())


def t_substitution_count(n: int, t) -> Fraction:
    """``P(t) = (1/2) prod_{i,j} (t^i + t^j)``: F with chi_i = delta_i = t^i."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    out = Fraction(1, 2)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out *= t**i + t**j
    return out


def specialize_two_values(n: int) -> list[int]:
    """Coefficients ``c[k]`` of ``delta^k chi^(n^2 - k)`` in F with all delta_i = delta, chi_i = chi."""
    f = F_schur(n)
    coeffs = [0] * (n * n + 1)
    for mono, c in f.terms.items():
        coeffs[sum(mono.delta)] += c
    return coeffs


def two_value_symmetrization(n: int) -> tuple[list[int], list[int]]:
    """``F(delta, chi) + F(chi, delta)`` after the two-value substitution, next to ``(delta + chi)^(n^2)``."""
    c = specialize_two_values(n)
    return [a + b for a, b in zip(c, reversed(c))], [comb(n * n, k) for k in range(n * n + 1)]


def alpha_census(n: int) -> dict[str, int | bool]:
    """alpha_N from the closed formula and from enumeration through Phi."""
    enumerated = count_square_fillings(n)
    formula = alpha(n)
    return {"formula": formula, "enumerated": enumerated, "match": formula == enumerated}
