"""Gaussian binomial Poincare polynomials and exact divisibility.

Polynomials are dense integer-coefficient vectors in one variable t,
low degree first.  The Poincare series of the Grassmannian of d-planes in
n-space is the Gaussian polynomial C(n, d)(t); projective (n-1)-space is the
d = 1 case 1 + t + ... + t^{n-1}.
"""

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DivisibilityError, ExactnessError


class IntPolynomial:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            [self.coefficient(k) - other.coefficient(k) for k in range(n)]
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else str(c)
                parts.append(f"{head}t" if k == 1 else f"{head}t^{k}")
        return " + ".join(parts).replace("+ -", "- ")


ONE = IntPolynomial([1])


def monomial(k: int, c: int = 1) -> IntPolynomial:
    return IntPolynomial([0] * k + [c])


def divides(p: IntPolynomial, q: IntPolynomial) -> Optional[IntPolynomial]:
    """Exact quotient q / p over the integers, or None when p does not
    divide q.  Division runs over the rationals and the quotient is kept
    only when the remainder vanishes and every coefficient is integral."""
    if p.is_zero:
        raise ValueError("cannot divide by the zero polynomial")
    if q.is_zero:
        return IntPolynomial()
    if q.degree < p.degree:
        return None
    rem = [Fraction(c) for c in q.coeffs]
    div = [Fraction(c) for c in p.coeffs]
    quot = [Fraction(0)] * (len(rem) - len(div) + 1)
    for k in range(len(quot) - 1, -1, -1):
        factor = rem[k + len(div) - 1] / div[-1]
        quot[k] = factor
        if factor:
            for i, dcoef in enumerate(div):
                rem[k + i] -= factor * dcoef
    if any(rem) or any(f.denominator != 1 for f in quot):
        return None
    return IntPolynomial([f.numerator for f in quot])


def _exact_poly_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    quotient = divides(den, num)
    if quotient is None:
        raise ExactnessError(f"{den} does not divide {num}")
    return quotient


def gaussian_binomial(n: int, d: int) -> IntPolynomial:
    """The Gaussian polynomial C(n, d)(t) =
    (1 - t^n)...(1 - t^{n-d+1}) / ((1 - t)...(1 - t^d)),
    built by iterated exact division so that every intermediate is itself a
    Gaussian polynomial."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    result = ONE
    for i in range(1, d + 1):
        numerator = result * (ONE - monomial(n - d + i))
        result = _exact_poly_div(numerator, ONE - monomial(i))
    return result


def projective_poincare(n: int) -> IntPolynomial:
    """1 + t + ... + t^{n-1}, the Poincare polynomial of projective
    (n-1)-space."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return IntPolynomial([1] * n)


def modn_multiplicities(n: int, d: int) -> list[int]:
    """Coefficients of P(Gr_d(n), t) / P(P^{n-1}, t); the multiplicity of the
    i-th twist in the mod-n motivic decomposition is the i-th entry."""
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}, n={n}")
    if math.gcd(n, d) != 1:
        raise DivisibilityError(
            f"quotient undefined: gcd({n}, {d}) = {math.gcd(n, d)} > 1"
        )
    quotient = divides(projective_poincare(n), gaussian_binomial(n, d))
    if quotient is None:
        raise ExactnessError(
            f"expected exact division for coprime n={n}, d={d}"
        )
    return list(quotient.coeffs)
