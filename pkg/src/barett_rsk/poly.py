"""Dense univariate polynomials over an exact or floating scalar field.

Coefficients are stored in ascending powers.  The scalar type is whatever
the caller puts in: ``int`` and ``Fraction`` give exact arithmetic, ``float``
gives the fast path.  Division of integer polynomials stays in ``int`` as
long as the divisor is monic (or the quotient is integral).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class DivisionByZeroPoly(ZeroDivisionError):
    pass


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _div(a, b):
    # Keep integers exact: int / int -> Fraction, collapsed back to int when whole.
    if isinstance(a, int) and isinstance(b, int):
        q = Fraction(a, b)
        return q.numerator if q.denominator == 1 else q
    return a / b


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> Poly:
        other = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divmod(self, other)[1]

    def map(self, f) -> Poly:
        return Poly(f(c) for c in self.coeffs)

    def max_abs(self):
        return max((abs(c) for c in self.coeffs), default=0)


def poly_divmod(a: Poly, b: Poly, *, drop_below: float = 0.0) -> tuple[Poly, Poly]:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``.

    ``drop_below`` (float use only) zeroes remainder coefficients whose
    magnitude is at most that fraction of ``max|a|``.
    """
    if b.is_zero():
        raise DivisionByZeroPoly("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.lead()
    if len(rem) - 1 < db:
        return Poly(), Poly(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = _div(rem[k + db], lead)
        quot[k] = c
        if c == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            rem[k + j] -= c * bj
    rem = rem[:db]
    if drop_below:
        cut = drop_below * a.max_abs()
        rem = [0 if abs(c) <= cut else c for c in rem]
    return Poly(quot), Poly(rem)


def exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{b!r} does not divide {a!r}")
    return q


def prod(polys: Iterable[Poly]) -> Poly:
    out = Poly.const(1)
    for p in polys:
        out = out * p
    return out


def from_roots_form(values: Sequence, sign: int) -> Poly:
    """``prod_i (1 + sign * v_i * z)``."""
    return prod(Poly([1, sign * v]) for v in values)
