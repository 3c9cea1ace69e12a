"""Chow rings of projective space and Grassmannians in the Schubert basis.

Basis monomials are H^i on projective (n-1)-space, omega_mu on the
Grassmannian of d-planes in n-space (mu inside the d x (n-d) box), and pairs
of those on a product.  A cycle class is a finitely supported integer
combination of basis monomials in a single codimension.

Sign conventions: c_1 of the tautological line bundle is -H, so its r-th
tensor power contributes (-r H)^k, and c_1 of the top exterior power of the
tautological d-plane bundle is -omega_1.  Chern classes of the quotient
bundle are the special Schubert classes, and the Schur determinant in them
is omega_mu itself, which is how twisted Schur classes land in the Schubert
basis.

Only the product shapes needed here are implemented: products of hyperplane
powers, duality pairing in complementary codimension, and multiplication by
an integer multiple of a power of omega_1 (iterated one-box Pieri).  Anything
else raises instead of risking a silently wrong coefficient.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Union

from .errors import ExactnessError, UnsupportedProductError
from .exactmath import binomial, determinant
from .partitions import (
    Box,
    Partition,
    as_partition,
    conjugate,
    contains,
    dual_in_box,
    enumerate_partitions,
    fits,
    weight,
)


@dataclass(frozen=True)
class Projective:
    """Projective (n-1)-space; basis H^0, ..., H^{n-1}."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"projective space needs n >= 2, got {self.n}")

    @property
    def dim(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class Grassmannian:
    """d-planes in n-space; basis omega_mu, mu in the d x (n-d) box."""

    d: int
    n: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n - 1:
            raise ValueError(f"need 1 <= d <= n-1, got d={self.d}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.d * (self.n - self.d)

    @property
    def box(self) -> Box:
        return Box(self.d, self.n - self.d)


@dataclass(frozen=True)
class ProductSpace:
    left: "Space"
    right: "Space"

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim


Space = Union[Projective, Grassmannian, ProductSpace]

# A monomial is an int (H-exponent), a partition tuple, or a pair of those.
Monomial = Union[int, Partition, tuple]


def monomial_codim(space: Space, mon: Monomial) -> int:
    if isinstance(space, Projective):
        return mon
    if isinstance(space, Grassmannian):
        return sum(mon)
    return monomial_codim(space.left, mon[0]) + monomial_codim(space.right, mon[1])


def validate_monomial(space: Space, mon: Monomial) -> None:
    if isinstance(space, Projective):
        if not isinstance(mon, int) or not 0 <= mon <= space.dim:
            raise ValueError(f"H^{mon} is not a basis monomial of P^{space.dim}")
    elif isinstance(space, Grassmannian):
        if as_partition(mon) != mon or not fits(mon, space.box):
            raise ValueError(f"omega_{mon} is not a basis monomial for {space}")
    else:
        if not isinstance(mon, tuple) or len(mon) != 2:
            raise ValueError(f"product monomial must be a pair, got {mon!r}")
        validate_monomial(space.left, mon[0])
        validate_monomial(space.right, mon[1])


def top_monomial(space: Space) -> Monomial:
    if isinstance(space, Projective):
        return space.dim
    if isinstance(space, Grassmannian):
        return (space.n - space.d,) * space.d
    return (top_monomial(space.left), top_monomial(space.right))


def dual_monomial(space: Space, mon: Monomial) -> Monomial:
    """The unique basis monomial pairing to 1 with ``mon`` under the degree
    map (H^i vs H^{dim-i}, omega_mu vs its box complement)."""
    if isinstance(space, Projective):
        return space.dim - mon
    if isinstance(space, Grassmannian):
        return dual_in_box(mon, space.box)
    raise UnsupportedProductError("duality pairing on product spaces is not needed")


def monomial_sort_key(space: Space, mon: Monomial):
    if isinstance(space, Projective):
        return (mon,)
    if isinstance(space, Grassmannian):
        return mon
    return (monomial_sort_key(space.left, mon[0]), monomial_sort_key(space.right, mon[1]))


@dataclass(frozen=True)
class CycleClass:
    """Pure-codimension cycle: mapping basis monomial -> integer coefficient.

    Instances are values; never mutate ``terms``.  The zero class may carry
    any declared codimension.
    """

    space: Space
    codim: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Monomial) -> int:
        return self.terms.get(mon, 0)

    def scale(self, c: int) -> "CycleClass":
        if c == 0:
            return CycleClass(self.space, self.codim, {})
        return CycleClass(self.space, self.codim, {m: c * v for m, v in self.terms.items()})

    def __add__(self, other: "CycleClass") -> "CycleClass":
        if self.space != other.space:
            raise ValueError("cannot add classes on different spaces")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.codim != other.codim:
            raise ValueError(f"codimension mismatch: {self.codim} vs {other.codim}")
        merged = dict(self.terms)
        for mon, v in other.terms.items():
            merged[mon] = merged.get(mon, 0) + v
        return cycle_class(self.space, self.codim, merged)

    def __neg__(self) -> "CycleClass":
        return self.scale(-1)

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + (-other)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(
            self.terms.items(), key=lambda kv: monomial_sort_key(self.space, kv[0])
        )


def cycle_class(
    space: Space, codim: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]]
) -> CycleClass:
    """Canonical constructor: validates monomials, enforces pure grading,
    drops zero coefficients."""
    items = terms.items() if isinstance(terms, Mapping) else terms
    clean: dict[Monomial, int] = {}
    for mon, coeff in items:
        if coeff == 0:
            continue
        validate_monomial(space, mon)
        if monomial_codim(space, mon) != codim:
            raise ValueError(
                f"monomial {mon} has codim {monomial_codim(space, mon)}, expected {codim}"
            )
        clean[mon] = clean.get(mon, 0) + coeff
    clean = {m: v for m, v in clean.items() if v != 0}
    return CycleClass(space, codim, clean)


def zero_cycle(space: Space, codim: int) -> CycleClass:
    return CycleClass(space, codim, {})


# ---------------------------------------------------------------------------
# Pieri machinery


def _add_one_box(mu: Partition, box: Box) -> list[Partition]:
    padded = mu + (0,) * (box.rows - len(mu))
    out = []
    for i in range(box.rows):
        bound = box.width if i == 0 else padded[i - 1]
        if padded[i] < bound:
            grown = padded[:i] + (padded[i] + 1,) + padded[i + 1 :]
            out.append(as_partition(grown))
    return out


def pieri_omega1(mu: Partition, d: int, n: int) -> CycleClass:
    """omega_1 * omega_mu = sum of omega_nu over one-box growths inside the
    box; the empty sum (saturated box) is the zero class."""
    space = Grassmannian(d, n)
    mu = as_partition(mu)
    if not fits(mu, space.box):
        raise ValueError(f"{mu} does not fit in the {d}x{n - d} box")
    return cycle_class(space, weight(mu) + 1, {nu: 1 for nu in _add_one_box(mu, space.box)})


def _pieri_step(terms: Mapping[Partition, int], box: Box) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for mu, c in terms.items():
        for nu in _add_one_box(mu, box):
            out[nu] = out.get(nu, 0) + c
    return out


@cache
def omega1_power(m: int, d: int, n: int) -> CycleClass:
    """omega_1^m in the Schubert basis, by iterated one-box Pieri steps."""
    space = Grassmannian(d, n)
    if not 0 <= m <= space.dim:
        raise ValueError(f"need 0 <= m <= {space.dim}, got {m}")
    if m == 0:
        return cycle_class(space, 0, {(): 1})
    previous = omega1_power(m - 1, d, n)
    return cycle_class(space, m, _pieri_step(previous.terms, space.box))


def degree(c: CycleClass) -> int:
    """Coefficient of the point class; 0 unless the codimension is top."""
    if c.codim != c.space.dim:
        return 0
    return c.coefficient(top_monomial(c.space))


def _as_omega1_multiple(c: CycleClass) -> Fraction | None:
    """If c equals t * omega_1^codim as a class, return t, else None."""
    space = c.space
    power = omega1_power(c.codim, space.d, space.n)
    if set(c.terms) != set(power.terms):
        return None
    ratio: Fraction | None = None
    for mon, v in power.terms.items():
        t = Fraction(c.terms[mon], v)
        if ratio is None:
            ratio = t
        elif t != ratio:
            return None
    return ratio


def multiply(a: CycleClass, b: CycleClass) -> CycleClass:
    """Exact product on the supported shapes; raises UnsupportedProductError
    for anything else rather than returning a wrong class."""
    if a.space != b.space:
        raise ValueError("cannot multiply classes on different spaces")
    space = a.space
    out_codim = a.codim + b.codim
    if isinstance(space, ProductSpace):
        raise UnsupportedProductError("multiplication on product spaces is not implemented")
    if a.is_zero or b.is_zero:
        return zero_cycle(space, out_codim)
    if isinstance(space, Projective):
        terms: dict[int, int] = {}
        for i, ca in a.terms.items():
            for j, cb in b.terms.items():
                if i + j <= space.dim:
                    terms[i + j] = terms.get(i + j, 0) + ca * cb
        return cycle_class(space, out_codim, terms)

    top = space.dim
    if a.codim == 0:
        return b.scale(a.coefficient(()))
    if b.codim == 0:
        return a.scale(b.coefficient(()))
    if out_codim > top:
        return zero_cycle(space, out_codim)
    if out_codim == top:
        paired = sum(
            ca * b.coefficient(dual_monomial(space, mu)) for mu, ca in a.terms.items()
        )
        return cycle_class(space, top, {top_monomial(space): paired})
    for x, y in ((a, b), (b, a)):
        t = _as_omega1_multiple(x)
        if t is not None:
            terms = dict(y.terms)
            for _ in range(x.codim):
                terms = _pieri_step(terms, space.box)
            scaled: dict[Partition, int] = {}
            for mon, v in terms.items():
                value = t * v
                if value.denominator != 1:
                    raise ExactnessError(f"non-integral product coefficient at {mon}")
                scaled[mon] = value.numerator
            return cycle_class(space, out_codim, scaled)
    raise UnsupportedProductError(
        f"product of codim {a.codim} and {b.codim} classes on {space} is outside "
        "the supported shapes (hyperplane powers, complementary pairing, "
        "omega_1-power factors)"
    )


# ---------------------------------------------------------------------------
# Twisted Schur classes on P^{n-1} x Gr_d(n)


def product_space(d: int, n: int) -> ProductSpace:
    return ProductSpace(Projective(n), Grassmannian(d, n))


def _padded_conjugate(lam: Partition, length: int) -> tuple[int, ...]:
    conj = conjugate(lam)
    return conj + (0,) * (length - len(conj))


def schur_expansion_coefficient(lam: Partition, mu: Partition, d: int, n: int) -> int:
    """Binomial determinant |C(conj(lam)_i + n-d-i, conj(mu)_j + n-d-j)| over
    1 <= i, j <= n-d, the expansion coefficient of a line-twisted Schur class."""
    w = n - d
    lam_c = _padded_conjugate(lam, w)
    mu_c = _padded_conjugate(mu, w)
    rows = [lam_c[i] + w - (i + 1) for i in range(w)]
    cols = [mu_c[j] + w - (j + 1) for j in range(w)]
    return determinant([[binomial(a, b) for b in cols] for a in rows])


def twisted_schur(lam: Partition, r: int, d: int, n: int) -> CycleClass:
    """The Schur class of the quotient bundle twisted by the r-th power of
    the tautological line bundle, expanded over H^j x omega_mu.

    Terms are sum_{mu inside lam} (-r)^{|lam|-|mu|} times the binomial
    determinant coefficient; hyperplane exponents above n-1 vanish on
    P^{n-1} and are dropped here.
    """
    space = product_space(d, n)
    gr = space.right
    lam = as_partition(lam)
    if not fits(lam, gr.box):
        raise ValueError(f"{lam} does not fit in the {d}x{n - d} box")
    k = weight(lam)
    terms: dict[Monomial, int] = {}
    for i in range(max(0, k - (n - 1)), k + 1):
        h = k - i
        for mu in enumerate_partitions(i, gr.box):
            if not contains(lam, mu):
                continue
            det = schur_expansion_coefficient(lam, mu, d, n)
            if det:
                terms[(h, mu)] = (-r) ** h * det
    return cycle_class(space, k, terms)


def g_cycle(d: int, n: int, r: int) -> CycleClass:
    """Twisted Schur class of the full-box partition: the codimension-N
    rational generator with leading terms 1 x omega_N - r d H x omega_{N-1}."""
    full = (n - d,) * d
    return twisted_schur(full, r, d, n)


SIGN_CASES = ("plus_one", "minus_one")


def f_cycle(d: int, n: int, sign: str) -> CycleClass:
    """Top Chern class of a twisted rank-(n-1) bundle:
    sum_m s^m H^{n-1-m} x omega_1^m with s = -1 for the rd = +1 case
    ("plus_one") and s = +1 for the rd = -1 case ("minus_one")."""
    if sign not in SIGN_CASES:
        raise ValueError(f"sign must be one of {SIGN_CASES}, got {sign!r}")
    s = -1 if sign == "plus_one" else 1
    space = product_space(d, n)
    terms: dict[Monomial, int] = {}
    for m in range(n):
        power = omega1_power(m, d, n)
        for rho, c in power.terms.items():
            terms[(n - 1 - m, rho)] = s**m * c
    return cycle_class(space, n - 1, terms)
