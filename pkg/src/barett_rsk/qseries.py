"""Exact q-series: q-integers, Gaussian binomials and the identities behind alpha_N.

Everything here is integer or rational arithmetic; polynomials in ``q`` are
:class:`~barett_rsk.poly.Poly` objects with ``int`` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, exact_div, prod

Q = Poly([0, 1])


def _one_minus_q_pow(k: int) -> Poly:
    return Poly.const(1) - Poly.monomial(1, k)


def q_integer(n: int) -> Poly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n <= 0:
        raise ValueError("q-integers are defined for n >= 1")
    return Poly([1] * n)


def q_factorial(n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return prod(q_integer(k) for k in range(1, n + 1))


def gaussian_binomial(n: int, m: int) -> Poly:
    """``[n choose m]_q`` as the exact quotient of q-factorials."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    return exact_div(q_factorial(n), q_factorial(m) * q_factorial(n - m))


def q_newton_check(n: int) -> tuple[Poly, Poly]:
    """Both sides of the q-Newton formula at ``z = q``.

    lhs = sum_j [n choose j]_q (-1)^j q^(j(j+1)/2), rhs = prod_{k=1..n} (1 - q^k).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = sum(
        (gaussian_binomial(n, j) * Poly.monomial((-1) ** j, j * (j + 1) // 2) for j in range(n + 1)),
        Poly(),
    )
    rhs = prod(_one_minus_q_pow(k) for k in range(1, n + 1))
    return lhs, rhs


def lemma_lid_eval(n: int, t) -> Fraction:
    """sum_k prod_{j!=k} 1/(1 - t^(j-k)) * prod_j 1/(1 + t^(j-k)), in exact rationals.

    Equals 1/2 for every admissible ``t``.
    """
    t = Fraction(t)
    if n < 1:
        raise ValueError("n must be >= 1")
    if t <= 0:
        raise ValueError("t must be positive")
    if t == 1:
        raise ValueError("t = 1 is a pole of every term")
    total = Fraction(0)
    for k in range(1, n + 1):
        term = Fraction(1)
        for j in range(1, n + 1):
            if j != k:
                term /= 1 - t ** (j - k)
            term /= 1 + t ** (j - k)
        total += term
    return total


@dataclass(frozen=True)
class ClearedIdentity:
    """``numerator / denominator = 1`` after clearing denominators."""

    numerator: Poly
    denominator: Poly

    @property
    def holds(self) -> bool:
        return self.numerator == self.denominator


def euler_sum_check(n: int) -> ClearedIdentity:
    """Clear the denominators of

        sum_{k=1..n} (-1)^(k-1) q^(k(k-1)/2) / (prod_{j<k} (1-q^j) prod_{j<=n-k} (1-q^j)) = 1

    by multiplying through with prod_{j=1..n-1} (1-q^j) = [(n-1)!]_q (1-q)^(n-1).
    Each cleared term is obtained by exact polynomial division, not from
    Gaussian binomials, so the check stays independent of :func:`q_newton_check`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    factors = [_one_minus_q_pow(j) for j in range(1, n)]
    den = prod(factors)
    num = Poly()
    for k in range(1, n + 1):
        term_den = prod(factors[: k - 1]) * prod(factors[: n - k])
        num = num + Poly.monomial((-1) ** (k - 1), k * (k - 1) // 2) * exact_div(den, term_den)
    return ClearedIdentity(num, den)


def alpha(n: int) -> int:
    """Number of S1/S2 square fillings, ``2^(n^2 - 1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** (n * n - 1)
