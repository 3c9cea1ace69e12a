"""Correspondences, decomposition certificates, and the congruence engine.

A correspondence from X to Y is a cycle class on X x Y.  Composition follows
the degree-pairing rule: a pure tensor f x g composed with f' x g' picks up
the factor deg(g . f') on the middle space, which for Schubert bases is 1
exactly on dual pairs and 0 otherwise.

The certificate pipeline builds the rank-(n-1) Chern cycle f and the
full-box twisted Schur cycle g on P^{n-1} x Gr_d(n), normalizes f so every
codimension layer has coefficient gcd 1, lifts the transposed g so each layer
pairs to exactly 1, and then checks over the integers that the composition
is the diagonal and that the opposite composition is idempotent.  All checks
are exact; a certificate is never "approximately" verified.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iter_product
from math import factorial, gcd

from .chow import (
    CycleClass,
    Grassmannian,
    Monomial,
    ProductSpace,
    Projective,
    Space,
    cycle_class,
    dual_monomial,
    g_cycle,
    f_cycle,
    omega1_power,
    product_space,
    twisted_schur,
)
from .errors import (
    CriterionFailureSignal,
    ExactnessError,
    NormalizationError,
    UnsupportedOperationError,
)
from .exactmath import (
    exact_div,
    extended_gcd_list,
    factorial_product,
    gcd_list,
    is_prime,
    superfactorial,
    vandermonde,
)
from .partitions import Box, Partition, dual_in_box, enumerate_partitions, weight
from .tableaux import count_ssyt


@dataclass(frozen=True)
class Correspondence:
    """A cycle on source x target, acting as a morphism of motives
    (possibly twisted: the codimension need not equal dim(source))."""

    source: Space
    target: Space
    cycle: CycleClass

    def __post_init__(self):
        expected = ProductSpace(self.source, self.target)
        if self.cycle.space != expected:
            raise ValueError("cycle does not live on source x target")

    @property
    def codim(self) -> int:
        return self.cycle.codim


def correspondence(source: Space, target: Space, codim: int, terms) -> Correspondence:
    return Correspondence(source, target, cycle_class(ProductSpace(source, target), codim, terms))


def transpose(c: Correspondence) -> Correspondence:
    """Swap the factors of every monomial; duality of correspondences."""
    swapped = {(y, x): v for (x, y), v in c.cycle.terms.items()}
    return correspondence(c.target, c.source, c.codim, swapped)


def compose(beta: Correspondence, alpha: Correspondence) -> Correspondence:
    """beta after alpha.  Middle factors contract through the degree map:
    deg(g_alpha . f_beta) is 1 on dual basis pairs and 0 otherwise; the
    grading drops by the middle dimension."""
    if alpha.target != beta.source:
        raise ValueError(
            f"cannot compose: middle spaces differ ({alpha.target} vs {beta.source})"
        )
    middle = alpha.target
    if isinstance(middle, ProductSpace):
        raise UnsupportedOperationError("composition through a product middle space")
    out_codim = alpha.codim + beta.codim - middle.dim
    by_left: dict[Monomial, list[tuple[Monomial, int]]] = defaultdict(list)
    for (y, z), c2 in beta.cycle.terms.items():
        by_left[y].append((z, c2))
    acc: dict[tuple, int] = defaultdict(int)
    for (x, y), c1 in alpha.cycle.terms.items():
        partner = dual_monomial(middle, y)
        for z, c2 in by_left.get(partner, ()):
            acc[(x, z)] += c1 * c2
    return correspondence(alpha.source, beta.target, out_codim, acc)


def diagonal_projective(n: int) -> Correspondence:
    """The diagonal of P^{n-1}: sum_m H^{n-1-m} x H^m, the identity
    correspondence."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    terms = {(n - 1 - m, m): 1 for m in range(n)}
    return correspondence(Projective(n), Projective(n), n - 1, terms)


# ---------------------------------------------------------------------------
# Rational generator sets modulo n


@dataclass(frozen=True)
class ModNGeneratorSet:
    """Generators of the rational cycles modulo n in one codimension on
    P^{n-1} x Gr_d(n).  ``tail_contributors`` flags which generators touch
    the monomials 1 x omega_N or H x omega_{N-1}."""

    n: int
    d: int
    r: int
    codim: int
    generators: tuple[CycleClass, ...]
    tail_contributors: tuple[int, ...]


def _tail_indices(generators, d: int, n: int) -> tuple[int, ...]:
    full = (n - d,) * d
    near = (n - d,) * (d - 1) + (n - d - 1,) if d > 1 else (n - d - 1,)
    flagged = []
    for idx, gen in enumerate(generators):
        if gen.coefficient((0, full)) or gen.coefficient((1, near)):
            flagged.append(idx)
    return tuple(flagged)


def rational_generators(n: int, d: int, r: int, k: int) -> ModNGeneratorSet:
    """Twisted Schur classes of all weight-k box partitions: for prime n
    these generate the rational cycles of codimension k modulo n."""
    if not is_prime(n):
        raise UnsupportedOperationError(
            f"n = {n} is not prime; use composite_generators_d2 for odd n, d = 2"
        )
    gr = Grassmannian(d, n)
    if not 0 <= k <= gr.dim:
        raise ValueError(f"codimension {k} out of range for {gr}")
    gens = tuple(twisted_schur(lam, r, d, n) for lam in enumerate_partitions(k, gr.box))
    return ModNGeneratorSet(n, d, r, k, gens, _tail_indices(gens, d, n))


def composite_generators_d2(n: int, r: int) -> ModNGeneratorSet:
    """Top-codimension generator set for odd n and d = 2:
    (n / gcd(n, N - |lam|)) H^{N-|lam|} x 1 . Delta_lam over
    N - (n-1) <= |lam| <= N, with the |lam| = N - 1 layer dropped because its
    scale factor is divisible by n.  Only the full-box generator reaches the
    last two monomials."""
    if n % 2 == 0 or n < 5:
        raise UnsupportedOperationError(f"supported for odd n >= 5 only, got n = {n}")
    d = 2
    gr = Grassmannian(d, n)
    N = gr.dim
    space = product_space(d, n)
    gens: list[CycleClass] = []
    for k in range(N, N - n, -1):
        if k == N - 1:
            continue
        shift = N - k
        scale = n // gcd(n, shift)
        for lam in enumerate_partitions(k, gr.box):
            base = twisted_schur(lam, r, d, n)
            shifted = {}
            for (h, mu), v in base.terms.items():
                if h + shift <= n - 1:
                    shifted[(h + shift, mu)] = scale * v
            gens.append(cycle_class(space, N, shifted))
    generators = tuple(gens)
    return ModNGeneratorSet(n, d, r, N, generators, _tail_indices(generators, d, n))


# ---------------------------------------------------------------------------
# The decomposition criterion


def criterion(n: int, d: int, r: int) -> bool:
    """d * r = +-1 mod n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}")
    return (d * r) % n in (1 % n, (-1) % n)


def obstruction_scan(n: int, d: int, r: int) -> bool:
    """Literal scan of the forward obstruction: some multiple c of the
    top-codimension generator must have coefficients +-1 in front of both
    omega_N x 1 and omega_{N-1} x H, whose generator coefficients are 1 and
    -rd.  Equivalent to the criterion; kept as an independent check."""
    if not (is_prime(n) or (n % 2 == 1 and d == 2)):
        raise UnsupportedOperationError(
            f"scan is justified only for prime n or odd n with d = 2, got n={n}, d={d}"
        )
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}")
    lead, tail = 1, (-r * d) % n
    for c in range(n):
        for s0, s1 in iter_product((1, -1), repeat=2):
            if (c * lead - s0) % n == 0 and (c * tail - s1) % n == 0:
                return True
    return False


# ---------------------------------------------------------------------------
# Normalization and lifting


def normalize_alpha(f: Correspondence, n: int) -> Correspondence:
    """Adjust f modulo n so that each codimension layer of Grassmannian
    factors has coefficient gcd 1.

    Layers 0 and 1 are single generators with unit coefficient and stay
    untouched.  Deterministic rule: add t*n (smallest t >= 0) to the
    lexicographically first coefficient of an offending layer.
    """
    if not isinstance(f.source, Projective) or not isinstance(f.target, Grassmannian):
        raise ValueError("normalize_alpha expects a correspondence P^{n-1} -> Gr_d(n)")
    terms = dict(f.cycle.terms)
    layers: dict[int, list[Monomial]] = defaultdict(list)
    for mon in terms:
        layers[sum(mon[1])].append(mon)
    for m in sorted(layers):
        if m <= 1:
            continue
        mons = sorted(layers[m])
        coeffs = [terms[mon] for mon in mons]
        if gcd_list(coeffs) == 1:
            continue
        first = coeffs[0]
        rest = gcd_list(coeffs[1:])
        t = None
        if rest == 0:
            for target in (1, -1):
                delta = target - first
                if delta % n == 0 and delta // n >= 0:
                    step = delta // n
                    t = step if t is None else min(t, step)
        else:
            for step in range(rest + 1):
                if gcd(first + step * n, rest) == 1:
                    t = step
                    break
        if t is None:
            raise NormalizationError(
                f"layer {m} cannot be normalized modulo {n}: coefficients {coeffs}"
            )
        terms[mons[0]] = first + t * n
    return correspondence(f.source, f.target, f.codim, terms)


def lift_beta(gt: Correspondence, alpha: Correspondence, n: int) -> Correspondence:
    """Lift the transposed generator so each layer pairs with alpha to
    exactly 1.

    Per layer m, with a = alpha's coefficients (gcd 1) and b = gt's
    coefficients on the dual monomials, the pairing S = sum a_i b_i must be
    1 mod n; writing S = 1 + k n and Bezout coefficients sum a_i x_i = 1,
    the lift is b_i' = b_i - k n x_i.
    """
    if not isinstance(alpha.source, Projective) or not isinstance(alpha.target, Grassmannian):
        raise ValueError("lift_beta expects alpha: P^{n-1} -> Gr_d(n)")
    if gt.source != alpha.target or gt.target != alpha.source:
        raise ValueError("lift_beta expects gt: Gr_d(n) -> P^{n-1} matching alpha")
    proj = alpha.source
    gr = alpha.target
    box = gr.box
    new_terms: dict[Monomial, int] = {}
    for m in range(proj.n):
        h = proj.n - 1 - m
        rhos = enumerate_partitions(m, box)
        a = [alpha.cycle.coefficient((h, rho)) for rho in rhos]
        duals = [dual_in_box(rho, box) for rho in rhos]
        b = [gt.cycle.coefficient((mu, m)) for mu in duals]
        if all(v == 0 for v in a):
            raise CriterionFailureSignal(f"layer {m}: alpha has no support")
        s = sum(ai * bi for ai, bi in zip(a, b))
        if (s - 1) % n != 0:
            raise CriterionFailureSignal(
                f"layer {m}: pairing {s} is not 1 modulo {n}"
            )
        k = (s - 1) // n
        if k == 0:
            lifted = b
        else:
            g, x = extended_gcd_list(a)
            if g != 1:
                raise CriterionFailureSignal(f"layer {m}: coefficient gcd {g} != 1")
            lifted = [bi - k * n * xi for bi, xi in zip(b, x)]
        for mu, v in zip(duals, lifted):
            if v:
                new_terms[(mu, m)] = v
    return correspondence(gr, proj, gt.codim, new_terms)


# ---------------------------------------------------------------------------
# Certificates


VERIFIED = "verified"
CRITERION_FAILED = "criterion_failed"


@dataclass(frozen=True)
class DecompositionCertificate:
    n: int
    d: int
    r: int
    verdict: str
    sign_case: str | None = None
    alpha: Correspondence | None = None
    beta: Correspondence | None = None
    composition: CycleClass | None = None
    projector: Correspondence | None = None
    obstruction_witness: bool | None = None


def sb_iso_criterion(n: int, r: int) -> bool:
    """Whether the twist class r gives isomorphic projective-space motives:
    r = +-1 mod n.  Also confirms the single codimension-(n-1) generator has
    coefficients (-r)^i on H^i x H^{n-1-i}."""
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    gen = twisted_schur((n - 1,), r, 1, n)
    for i in range(n):
        if gen.coefficient((i, _one_row(n - 1 - i))) != (-r) ** i:
            raise ExactnessError(f"generator coefficient at H^{i} is off")
    return r % n in (1 % n, (-1) % n)


def _one_row(j: int) -> Partition:
    return (j,) if j else ()


def sb_indecomposable(n: int) -> bool:
    """Exhaustive scan showing the motive of a degree-n Severi-Brauer
    variety of a division algebra admits no nontrivial projector.

    Candidate projectors are signed sums of H^i x H^{n-1-i}; survivors must
    be congruent modulo n to a multiple of the single rational generator
    (coefficients (1-n)^i), and the scan reports True when only 0 and the
    signed diagonals survive.
    """
    if not is_prime(n) or n < 3:
        raise ValueError(f"n must be an odd prime >= 3, got {n}")
    base = [pow(1 - n, i, n) for i in range(n)]
    for coeffs in iter_product((0, 1, -1), repeat=n):
        survives = any(
            all((e - c * b) % n == 0 for e, b in zip(coeffs, base)) for c in range(n)
        )
        if not survives:
            continue
        trivial = (
            all(e == 0 for e in coeffs)
            or all(e == 1 for e in coeffs)
            or all(e == -1 for e in coeffs)
        )
        if not trivial:
            return False
    return True


def _sign_case(n: int, d: int, r: int) -> str:
    return "plus_one" if (d * r) % n == 1 % n else "minus_one"


def build_decomposition(n: int, d: int, r: int) -> DecompositionCertificate:
    """Build and verify a decomposition certificate for (n, d, r).

    Supported: prime n (any 1 <= d <= n-1) and odd composite n with d = 2.
    When the criterion dr = +-1 mod n fails, the certificate carries the
    negative obstruction-scan witness instead of cycles.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"need 1 <= d <= n-1, got d={d}")
    prime = is_prime(n)
    if not prime and not (n % 2 == 1 and d == 2):
        raise UnsupportedOperationError(
            f"composite n = {n} is supported only for d = 2 (odd n)"
        )
    if not criterion(n, d, r):
        witness = obstruction_scan(n, d, r)
        if witness:
            raise ExactnessError("obstruction scan disagrees with the criterion")
        return DecompositionCertificate(n, d, r, CRITERION_FAILED, obstruction_witness=witness)

    if prime and d in (1, n - 1):
        # Degenerate Grassmannians: the criterion reduces to r = +-1 mod n,
        # which the isomorphism scan must confirm before we build cycles.
        if not sb_iso_criterion(n, r):
            raise ExactnessError("isomorphism criterion disagrees at d in {1, n-1}")

    sign = _sign_case(n, d, r)
    proj = Projective(n)
    gr = Grassmannian(d, n)
    f = Correspondence(proj, gr, f_cycle(d, n, sign))
    g = Correspondence(proj, gr, g_cycle(d, n, r))
    gt = transpose(g)
    try:
        alpha = normalize_alpha(f, n)
        beta = lift_beta(gt, alpha, n)
    except (NormalizationError, CriterionFailureSignal) as exc:
        if prime and d > n // 2 and d not in (1, n - 1):
            raise UnsupportedOperationError(
                f"construction for d > n/2 fell outside the certified range: {exc}"
            ) from exc
        raise
    composition = compose(beta, alpha)
    if composition != diagonal_projective(n):
        raise ExactnessError("composition is not the diagonal; pipeline invariant broken")
    projector = compose(alpha, beta)
    if compose(projector, projector) != projector:
        raise ExactnessError("projector is not idempotent; pipeline invariant broken")
    return DecompositionCertificate(
        n,
        d,
        r,
        VERIFIED,
        sign_case=sign,
        alpha=alpha,
        beta=beta,
        composition=composition.cycle,
        projector=projector,
    )


# ---------------------------------------------------------------------------
# The layer congruence and its elementary case


def verify_congruence(n: int, d: int, m: int) -> tuple[int, bool]:
    """Evaluate m!/(0! ... (d-1)!) * sum_a D_a^2 / (a_0! ... a_{d-1}!) over
    strictly increasing a in [0, n-1] with sum a_i = m + d(d-1)/2, and test
    the congruence to d^m mod n.

    The sum is computed twice: directly from jump sequences, and as
    sum c * d over box partitions with c from iterated Pieri and d from the
    tableau-count determinant.  The two routes must agree exactly.
    """
    if not is_prime(n):
        raise ValueError(f"n must be prime, got {n}")
    if not 2 <= d <= n // 2:
        raise ValueError(f"need 2 <= d <= n//2, got d={d}, n={n}")
    if not 0 <= m <= n - 1:
        raise ValueError(f"need 0 <= m <= n-1, got m={m}")
    target_sum = m + d * (d - 1) // 2
    direct = 0
    for a in combinations(range(n), d):
        if sum(a) != target_sum:
            continue
        d_a = vandermonde(a)
        c_part = exact_div(factorial(m) * d_a, factorial_product(a))
        d_part = exact_div(d_a, superfactorial(d))
        direct += c_part * d_part
    power = omega1_power(m, d, n)
    box = Box(d, n - d)
    via_chow = sum(
        power.coefficient(rho) * count_ssyt(rho, d)
        for rho in enumerate_partitions(m, box)
    )
    if direct != via_chow:
        raise ExactnessError(
            f"congruence routes disagree for (n={n}, d={d}, m={m}): {direct} vs {via_chow}"
        )
    return direct, direct % n == pow(d, m, n)


def cong2_exact(m: int) -> int:
    """m!/2 * sum_{x1+x2=m+1} (x1-x2)^2 / (x1! x2!), evaluated exactly.

    Always a power of two (2^m); integrality is asserted and the value
    returned so suites can state the equality explicitly.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    total = Fraction(0)
    for x1 in range(m + 2):
        x2 = m + 1 - x1
        total += Fraction((x1 - x2) ** 2, factorial(x1) * factorial(x2))
    value = Fraction(factorial(m), 2) * total
    if value.denominator != 1:
        raise ExactnessError(f"cong2 sum is not integral at m={m}: {value}")
    return value.numerator
