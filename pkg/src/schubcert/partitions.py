"""Partitions, box duality and jump sequences.

A partition is a tuple of weakly decreasing positive integers; the canonical
form carries no trailing zeros, so tuple equality is partition equality.
Part indices are 1-based (lambda_1 is the longest row) while jump sequences
are 0-based, matching the degree formula deg(a_0, ..., a_{d-1}).
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

Partition = tuple[int, ...]

EMPTY: Partition = ()


@dataclass(frozen=True)
class Box:
    """A d x w rectangle: ``rows`` parts each at most ``width``.

    For the Grassmannian of d-planes in n-space this is d x (n - d).
    """

    rows: int
    width: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.width < 1:
            raise ValueError(f"box must have positive sides, got {self.rows}x{self.width}")

    @property
    def area(self) -> int:
        return self.rows * self.width


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize: validate weak decrease and nonnegativity, strip zeros."""
    t = tuple(parts)
    for i, p in enumerate(t):
        if p < 0:
            raise ValueError(f"negative part in {t}")
        if i > 0 and p > t[i - 1]:
            raise ValueError(f"parts must be weakly decreasing: {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    lam = as_partition(lam)
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def fits(lam: Partition, box: Box) -> bool:
    lam = as_partition(lam)
    return len(lam) <= box.rows and (not lam or lam[0] <= box.width)


def dual_in_box(mu: Partition, box: Box) -> Partition:
    """Box complement (w - mu_d, ..., w - mu_1); the Poincare-dual index."""
    mu = as_partition(mu)
    if not fits(mu, box):
        raise ValueError(f"{mu} does not fit in {box.rows}x{box.width} box")
    padded = mu + (0,) * (box.rows - len(mu))
    return as_partition(tuple(box.width - p for p in reversed(padded)))


def jump_sequence(lam: Partition, rows: int) -> tuple[int, ...]:
    """Strictly increasing a_i = lam_{rows-i} + i for i = 0..rows-1.

    The partition is zero-padded to ``rows`` parts; no width bound is
    imposed, so this also serves tableau shapes wider than any box.
    """
    lam = as_partition(lam)
    if len(lam) > rows:
        raise ValueError(f"{lam} has more than {rows} parts")
    padded = lam + (0,) * (rows - len(lam))
    return tuple(padded[rows - 1 - i] + i for i in range(rows))


def jumps(lam: Partition, box: Box) -> tuple[int, ...]:
    """Jump sequence within a box; every entry is at most rows - 1 + width."""
    lam = as_partition(lam)
    if not fits(lam, box):
        raise ValueError(f"{lam} does not fit in {box.rows}x{box.width} box")
    return jump_sequence(lam, box.rows)


def partition_from_jumps(a: Iterable[int]) -> Partition:
    """Inverse of ``jump_sequence``: recover the partition from its jumps."""
    a = tuple(a)
    parts = tuple(a[len(a) - 1 - k] - (len(a) - 1 - k) for k in range(len(a)))
    return as_partition(parts)


def _bounded_partitions(m: int, max_part: int, max_parts: int) -> Iterator[Partition]:
    if m == 0:
        yield EMPTY
        return
    if max_parts == 0 or max_part == 0:
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in _bounded_partitions(m - first, first, max_parts - 1):
            yield (first,) + rest


def enumerate_partitions(m: int, box: Box) -> list[Partition]:
    """All partitions of weight m inside the box, lexicographically sorted."""
    if m < 0:
        raise ValueError("weight must be nonnegative")
    return sorted(_bounded_partitions(m, box.width, box.rows))


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment: mu_i <= lam_i for all i."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))
