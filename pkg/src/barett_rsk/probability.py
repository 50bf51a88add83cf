"""P(U < V) for U = sum |u_j|^2, V = sum |v_j|^2 with independent complex Gaussians.

:func:`barett_direct` sums the closed-form partial fractions, which have
poles wherever two ``delta`` values coincide.  :func:`prob_stable` takes the
Bezout route instead: with ``X(z) = prod(1 - chi_i z)`` and
``D(z) = prod(1 + delta_i z)`` it solves ``pi X + mu D = 1`` by the extended
Euclidean algorithm and returns ``pi(0)``.  :func:`monte_carlo` is the seeded
sampling oracle used to cross-check both.

Exact results come back as :class:`fractions.Fraction` when the profile holds
exact scalars, and as ``float`` otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .poly import Poly, from_roots_form, poly_divmod

BACKENDS = ("exact", "float")

# Float-backend tolerances.
FLOAT_COLLISION_RTOL = 1e-9
EUCLID_DROP_TOL = 1e-12

MC_GENERATOR = "PCG64"
MC_CHUNK = 1 << 16


class DuplicateDelta(ValueError):
    """Two delta variances coincide: the closed form has a pole there."""


class NotCoprime(ArithmeticError):
    pass


def to_scalar(value, backend: str):
    """Parse an int, float, or ``"p/q"`` string into the backend's scalar type."""
    if isinstance(value, bool):
        raise TypeError("booleans are not variances")
    if backend == "exact":
        return Fraction(value)
    if backend == "float":
        return float(Fraction(value)) if isinstance(value, str) else float(value)
    raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")


@dataclass(frozen=True)
class VarianceProfile:
    chi: tuple
    delta: tuple

    def __post_init__(self) -> None:
        # Plain ints are promoted so that division stays exact.
        lift = lambda xs: tuple(Fraction(x) if isinstance(x, int) else x for x in xs)
        object.__setattr__(self, "chi", lift(self.chi))
        object.__setattr__(self, "delta", lift(self.delta))
        if len(self.chi) != len(self.delta):
            raise ValueError("chi and delta must have the same length")
        if not self.chi:
            raise ValueError("profile must have N >= 1")
        if any(not x > 0 for x in self.chi + self.delta):
            raise ValueError("all variances must be strictly positive")

    @classmethod
    def parse(cls, chi: Sequence, delta: Sequence, backend: str = "exact") -> VarianceProfile:
        return cls(tuple(to_scalar(x, backend) for x in chi), tuple(to_scalar(x, backend) for x in delta))

    @property
    def n(self) -> int:
        return len(self.chi)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in self.chi + self.delta)

    def as_backend(self, backend: str) -> VarianceProfile:
        return VarianceProfile.parse(self.chi, self.delta, backend)

    def swapped(self) -> VarianceProfile:
        return VarianceProfile(self.delta, self.chi)


def _check_distinct(delta: tuple, rtol: float) -> None:
    for i in range(len(delta)):
        for j in range(i + 1, len(delta)):
            a, b = delta[i], delta[j]
            if a == b or abs(a - b) < rtol * max(abs(a), abs(b)):
                raise DuplicateDelta(f"delta[{i}] and delta[{j}] coincide ({a}, {b}); use prob_stable")


def barett_direct(p: VarianceProfile, *, rtol: float | None = None):
    """Closed-form sum over k of prod_{j!=k} 1/(1 - d_j/d_k) * prod_j 1/(1 + c_j/d_k).

    ``rtol`` is the relative collision gap below which float inputs are
    refused; it defaults to 0 for exact profiles and ``FLOAT_COLLISION_RTOL``
    otherwise.  Pass ``rtol=0`` to evaluate the raw formula near a pole.
    """
    if rtol is None:
        rtol = 0 if p.is_exact else FLOAT_COLLISION_RTOL
    _check_distinct(p.delta, rtol)
    one = Fraction(1) if p.is_exact else 1.0
    total = 0
    for k, dk in enumerate(p.delta):
        term = one
        for j, dj in enumerate(p.delta):
            if j != k:
                term = term / (one - dj / dk)
        for cj in p.chi:
            term = term / (one + cj / dk)
        total = total + term
    return total


def build_x_delta(p: VarianceProfile) -> tuple[Poly, Poly]:
    return from_roots_form(p.chi, -1), from_roots_form(p.delta, +1)


def _is_exact(*polys: Poly) -> bool:
    return all(isinstance(c, (int, Fraction)) for p in polys for c in p.coeffs)


def _sylvester(x: Poly, d: Poly) -> np.ndarray:
    """Matrix of ``(pi, mu) -> pi*x + mu*d`` on coefficient vectors."""
    nd, nx = d.degree, x.degree
    s = np.zeros((nx + nd, nx + nd))
    for i in range(nd):
        s[i : i + nx + 1, i] = x.coeffs
    for i in range(nx):
        s[i : i + nd + 1, nd + i] = d.coeffs
    return s


def _refine(pi: Poly, mu: Poly, x: Poly, d: Poly) -> tuple[Poly, Poly]:
    # One step of iterative refinement: residual in exact arithmetic on the
    # float coefficients, correction from the Sylvester system.
    nd, nx = d.degree, x.degree
    exact = lambda p: p.map(Fraction)
    e = exact(pi) * exact(x) + exact(mu) * exact(d) - 1
    rhs = -np.array([float(e[k]) for k in range(nx + nd)])
    step = np.linalg.solve(_sylvester(x, d), rhs)
    pi = Poly(pi[k] + step[k] for k in range(nd))
    mu = Poly(mu[k] + step[nd + k] for k in range(nx))
    return pi, mu


def bezout_pi(x: Poly, d: Poly, *, drop_tol: float = EUCLID_DROP_TOL, refine: int = 1) -> tuple[Poly, Poly]:
    """Return ``(pi, mu)`` with ``pi*x + mu*d = 1``, ``deg pi < deg d``, ``deg mu < deg x``.

    Extended Euclid on ``(x, d)``.  With float coefficients every remainder
    drops coefficients at most ``drop_tol`` times the dividend's largest one,
    and the cofactors then get ``refine`` rounds of iterative refinement.
    """
    exact = _is_exact(x, d)
    r0, r1 = x, d
    s0, s1 = Poly.const(1), Poly()
    t0, t1 = Poly(), Poly.const(1)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1, drop_below=0.0 if exact else drop_tol)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        raise NotCoprime(f"common factor of degree {r0.degree} between X and D")
    g = Fraction(r0[0]) if exact else r0[0]
    pi, mu = s0.map(lambda c: c / g), t0.map(lambda c: c / g)
    if not exact:
        for _ in range(refine):
            pi, mu = _refine(pi, mu, x, d)
    return pi, mu


def bezout_residual(pi: Poly, mu: Poly, x: Poly, d: Poly):
    """Max-norm of ``pi*x + mu*d - 1``."""
    return (pi * x + mu * d - 1).max_abs()


@dataclass(frozen=True)
class BezoutSolution:
    """Cofactors of the (rescaled) Bezout problem.

    ``x`` and ``d`` are built from the variances divided by ``scale``; the
    substitution ``z -> z/scale`` leaves ``pi(0)`` unchanged.
    """

    pi: Poly
    mu: Poly
    x: Poly
    d: Poly
    scale: object

    @property
    def value(self):
        return self.pi[0]

    @property
    def residual(self):
        return bezout_residual(self.pi, self.mu, self.x, self.d)


def solve_bezout(p: VarianceProfile) -> BezoutSolution:
    """Bezout cofactors for ``p``; float profiles are first scaled by their largest variance."""
    scale = 1 if p.is_exact else max(p.chi + p.delta)
    q = p if scale == 1 else VarianceProfile(tuple(c / scale for c in p.chi), tuple(c / scale for c in p.delta))
    x, d = build_x_delta(q)
    pi, mu = bezout_pi(x, d)
    return BezoutSolution(pi, mu, x, d, scale)


def prob_stable(p: VarianceProfile):
    """``pi(0)`` from the Bezout identity; defined even when delta values coincide."""
    return solve_bezout(p).value


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    samples: int
    std_error: float
    seed: int
    generator: str = MC_GENERATOR


def _chunk_hits(chi: np.ndarray, delta: np.ndarray, size: int, seed: int, index: int) -> int:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
    # |CN(0, s)|^2 ~ Exp(mean s); inverse CDF -s*log(1-u).
    u = -np.log1p(-rng.random((size, chi.size))) @ chi
    v = -np.log1p(-rng.random((size, delta.size))) @ delta
    return int(np.count_nonzero(u < v))


def monte_carlo(p: VarianceProfile, samples: int, seed: int = 0) -> MonteCarloResult:
    """Estimate P(U < V) from ``samples`` draws.

    Draws are produced in fixed chunks of ``MC_CHUNK`` samples, chunk ``i``
    using a PCG64 stream seeded from ``(seed, i)``, so the result depends
    only on ``(profile, samples, seed)``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    chi = np.array([float(c) for c in p.chi])
    delta = np.array([float(d) for d in p.delta])
    hits = 0
    for index, start in enumerate(range(0, samples, MC_CHUNK)):
        hits += _chunk_hits(chi, delta, min(MC_CHUNK, samples - start), seed, index)
    est = hits / samples
    return MonteCarloResult(est, samples, math.sqrt(est * (1 - est) / samples), seed)
