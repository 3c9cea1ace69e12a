"""Young tableau counting: closed forms, brute-force enumerators and the
counting identity sum_{|xi|=m} d_xi(d) * f^xi = d^m.

Closed forms run through jump sequences l (l_{d-i} = xi_i + d - i):

* semistandard count  d_xi(d) = det|C(l_i, j)| = D_l / (0! 1! ... (d-1)!)
* standard count      f^xi    = m! * D_l / (l_0! ... l_{d-1}!)

with D_l the Vandermonde product.  Both routes are computed and compared on
every call; the enumerators exist to validate the closed forms on small
shapes and as independent oracles in the verification suites.
"""

import os
from dataclasses import dataclass

from .errors import EnumerationBudgetError, ExactnessError
from .exactmath import (
    binomial_determinant,
    exact_div,
    factorial_product,
    is_prime,
    superfactorial,
    vandermonde,
)
from .partitions import Box, Partition, as_partition, enumerate_partitions, jump_sequence, weight

import math

DEFAULT_ENUMERATION_BUDGET = 10
BUDGET_ENV_VAR = "SCHUBCERT_ENUM_BUDGET"

Tableau = tuple[tuple[int, ...], ...]


def enumeration_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUMERATION_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be nonnegative, got {value}")
    return value


def _check_budget(xi: Partition, budget: int | None) -> None:
    limit = enumeration_budget() if budget is None else budget
    if weight(xi) > limit:
        raise EnumerationBudgetError(
            f"shape {xi} has weight {weight(xi)}, enumeration budget is {limit}"
        )


def count_ssyt(xi: Partition, d: int) -> int:
    """Number of semistandard tableaux of shape xi with entries in 1..d."""
    xi = as_partition(xi)
    if d < 0:
        raise ValueError("alphabet size must be nonnegative")
    if len(xi) > d:
        raise ValueError(f"{xi} has more than {d} parts")
    if d == 0:
        return 1
    l = jump_sequence(xi, d)
    by_determinant = binomial_determinant(l, range(d))
    by_vandermonde = exact_div(vandermonde(l), superfactorial(d))
    if by_determinant != by_vandermonde:
        raise ExactnessError(
            f"ssyt count mismatch for {xi}, d={d}: {by_determinant} vs {by_vandermonde}"
        )
    return by_determinant


def count_syt(xi: Partition) -> int:
    """Number of standard tableaux of shape xi (m! * D_l / prod l_i!)."""
    xi = as_partition(xi)
    if not xi:
        return 1
    l = jump_sequence(xi, len(xi))
    return exact_div(math.factorial(weight(xi)) * vandermonde(l), factorial_product(l))


def _fill_ssyt(xi: Partition, d: int) -> list[Tableau]:
    rows = len(xi)
    grid = [[0] * xi[i] for i in range(rows)]
    out: list[Tableau] = []

    def fill(i: int, j: int) -> None:
        if i == rows:
            out.append(tuple(tuple(row) for row in grid))
            return
        ni, nj = (i, j + 1) if j + 1 < xi[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0 and j < xi[i - 1]:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, d + 1):
            grid[i][j] = v
            fill(ni, nj)
        grid[i][j] = 0

    fill(0, 0)
    return out


def enumerate_ssyt(xi: Partition, d: int, budget: int | None = None) -> list[Tableau]:
    """All semistandard tableaux of shape xi, entries 1..d, in lexicographic
    order of the row-major reading word."""
    xi = as_partition(xi)
    _check_budget(xi, budget)
    if not xi:
        return [()]
    if d < 1:
        return []
    return _fill_ssyt(xi, d)


def enumerate_syt(xi: Partition, budget: int | None = None) -> list[Tableau]:
    """All standard tableaux of shape xi, same ordering convention."""
    xi = as_partition(xi)
    _check_budget(xi, budget)
    if not xi:
        return [()]
    m = weight(xi)
    filled = [0] * len(xi)
    grid = [[0] * xi[i] for i in range(len(xi))]
    out: list[Tableau] = []

    def place(value: int) -> None:
        if value > m:
            out.append(tuple(tuple(row) for row in grid))
            return
        for i in range(len(xi)):
            j = filled[i]
            if j >= xi[i]:
                continue
            if i > 0 and filled[i - 1] <= j:
                continue
            grid[i][j] = value
            filled[i] += 1
            place(value + 1)
            filled[i] -= 1
            grid[i][j] = 0

    place(1)
    return sorted(out)


@dataclass(frozen=True)
class TableauCountReport:
    shape: Partition
    alphabet_size: int
    ssyt_count: int
    syt_count: int
    method: str  # "closed_form" or "enumeration"


def count_report(xi: Partition, d: int, method: str = "closed_form") -> TableauCountReport:
    xi = as_partition(xi)
    if method == "closed_form":
        return TableauCountReport(xi, d, count_ssyt(xi, d), count_syt(xi), method)
    if method == "enumeration":
        return TableauCountReport(
            xi, d, len(enumerate_ssyt(xi, d)), len(enumerate_syt(xi)), method
        )
    raise ValueError(f"unknown counting method {method!r}")


def shapes_of_weight(m: int, max_parts: int) -> list[Partition]:
    """Partitions of m with at most max_parts parts (width unbounded)."""
    if m == 0:
        return [()]
    return enumerate_partitions(m, Box(max_parts, m))


def rs_identity(d: int, m: int) -> tuple[int, bool]:
    """Evaluate sum d_xi(d) * f^xi over |xi| = m with at most d parts.

    Returns the sum and whether it equals d^m (it always should; the boolean
    keeps the check explicit in reports).
    """
    if d < 1:
        raise ValueError("alphabet size must be at least 1")
    if m < 0:
        raise ValueError("weight must be nonnegative")
    total = sum(count_ssyt(xi, d) * count_syt(xi) for xi in shapes_of_weight(m, d))
    return total, total == d**m


def boxed_rs_sum(n: int, d: int, m: int) -> int:
    """The part of the counting identity coming from shapes whose jump
    sequence stays below n, i.e. shapes inside the d x (n-d) box."""
    total = 0
    for xi in shapes_of_weight(m, d):
        l = jump_sequence(xi, d)
        if l[-1] <= n - 1:
            total += count_ssyt(xi, d) * count_syt(xi)
    return total


def overflow_terms_divisible(n: int, d: int, m: int) -> bool:
    """Check the overflow layer of the counting identity for a prime n.

    For every shape of weight m with at most d parts whose top jump l_{d-1}
    reaches n, three facts must hold: only the top jump exceeds n - 1, it
    stays below 2n, and n divides d_xi(d) * f^xi.  Vacuously true when no
    shape overflows.
    """
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    if not 2 <= d <= n // 2:
        raise ValueError(f"need 2 <= d <= n//2, got d={d}, n={n}")
    if not 0 <= m <= n - 1:
        raise ValueError(f"need 0 <= m <= n-1, got m={m}")
    for xi in shapes_of_weight(m, d):
        l = jump_sequence(xi, d)
        if l[-1] <= n - 1:
            continue
        if d >= 2 and l[-2] > n - 1:
            return False
        if l[-1] >= 2 * n:
            return False
        if (count_ssyt(xi, d) * count_syt(xi)) % n != 0:
            return False
    return True
