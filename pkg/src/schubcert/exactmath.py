"""Exact big-integer building blocks: binomials, fraction-free determinants,
Vandermonde products and extended gcd.

Everything here is plain Python ``int`` arithmetic, so all results are exact
for arbitrarily large operands.  A matrix is a sequence of equal-length rows.
"""

import math
from fractions import Fraction
from typing import Sequence

from .errors import ExactnessError

IntMatrix = Sequence[Sequence[int]]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that out-of-range arguments give 0.

    Binomial determinants rely on C(n, k) = 0 for k < 0, k > n or n < 0,
    so this never raises.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Intermediate entries stay integral and grow polynomially instead of
    exponentially, which keeps large Schubert-coefficient determinants cheap.
    """
    size = len(m)
    rows = [list(row) for row in m]
    for row in rows:
        if len(row) != size:
            raise ValueError(f"determinant needs a square matrix, got {size}x{len(row)}")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, size):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[size - 1][size - 1]


def binomial_determinant(row_indices: Sequence[int], col_indices: Sequence[int]) -> int:
    """det |C(row_i, col_j)| for two index lists of equal length."""
    if len(row_indices) != len(col_indices):
        raise ValueError(
            f"index lists differ in length: {len(row_indices)} vs {len(col_indices)}"
        )
    return determinant([[binomial(a, b) for b in col_indices] for a in row_indices])


def vandermonde(a: Sequence[int]) -> int:
    """prod_{i<j} (a_j - a_i); 1 for empty or singleton input."""
    result = 1
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            result *= a[j] - a[i]
    return result


def factorial_product(a: Sequence[int]) -> int:
    result = 1
    for x in a:
        result *= math.factorial(x)
    return result


def superfactorial(d: int) -> int:
    """0! 1! ... (d-1)!, the denominator of jump-sequence determinant formulas."""
    return factorial_product(range(d))


def exact_div(num: int, den: int) -> int:
    """Integer division that must be exact."""
    q, rem = divmod(num, den)
    if rem:
        raise ExactnessError(f"{num} is not divisible by {den}")
    return q


def degree_coefficient(m: int, a: Sequence[int]) -> int:
    """Degree of the Schubert cycle with jump sequence ``a``:
    m! / (a_0! ... a_{d-1}!) * prod_{i>j} (a_i - a_j).

    Requires ``a`` strictly increasing and nonnegative with
    sum(a_i - i) = m.  Integrality is asserted, not assumed.
    """
    a = tuple(a)
    if any(x < 0 for x in a):
        raise ValueError(f"jump sequence must be nonnegative: {a}")
    if any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"jump sequence must be strictly increasing: {a}")
    if sum(x - i for i, x in enumerate(a)) != m:
        raise ValueError(f"jump sequence {a} does not encode weight {m}")
    value = Fraction(math.factorial(m) * vandermonde(a), factorial_product(a))
    if value.denominator != 1:
        raise ExactnessError(f"degree({a}) at weight {m} is not integral: {value}")
    return value.numerator


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def extended_gcd_list(a: Sequence[int]) -> tuple[int, list[int]]:
    """gcd g >= 1 of a nonempty list plus Bezout coefficients x with
    sum(a_i * x_i) = g.

    Deterministic: a left fold of two-term extended Euclid, so repeated runs
    produce identical certificates.
    """
    values = list(a)
    if not values:
        raise ValueError("extended_gcd_list needs a nonempty list")
    if all(v == 0 for v in values):
        raise ValueError("extended_gcd_list needs at least one nonzero entry")
    g = values[0]
    coeffs = [1]
    for v in values[1:]:
        g, u, w = extended_gcd(g, v)
        coeffs = [c * u for c in coeffs]
        coeffs.append(w)
    if g < 0:
        g = -g
        coeffs = [-c for c in coeffs]
    return g, coeffs


def gcd_list(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g


def is_prime(n: int) -> bool:
    """Trial division; inputs here are small (algebra degrees)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
