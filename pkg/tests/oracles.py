"""Brute-force references, deliberately independent of the code they check."""

from __future__ import annotations

from itertools import combinations, product

from barett_rsk.poly import Poly
from barett_rsk.tableaux import Tabloid, is_young_tableau


def brute_force_tableaux(shape, n):
    """All fillings of ``shape`` by 1..n that pass the row/column rules."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []
    for values in product(range(1, n + 1), repeat=len(cells)):
        rows = [[] for _ in shape]
        for (r, _), v in zip(cells, values):
            rows[r].append(v)
        t = Tabloid(tuple(tuple(row) for row in rows))
        if is_young_tableau(t):
            out.append(t)
    return out


def subset_gaussian_binomial(n, m):
    """[n choose m]_q = sum over m-subsets S of {1..n} of q^(sum(S) - m(m+1)/2)."""
    coeffs = [0] * (m * (n - m) + 1)
    for s in combinations(range(1, n + 1), m):
        coeffs[sum(s) - m * (m + 1) // 2] += 1
    return Poly(coeffs)


def brute_force_schur(shape, values):
    total = 0
    for t in brute_force_tableaux(shape, len(values)):
        term = 1
        for row in t.rows:
            for x in row:
                term *= values[x - 1]
        total += term
    return total
