"""Shared service layer: everything the HTTP endpoints and the CLI expose.

Each verification suite produces a Report whose serialized form depends only
on the requested parameters, never on timing or completion order, so stored
reports are byte-identical across runs.  Wall time is tracked on the side
and deliberately excluded from the canonical bytes.
"""

import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import motives, poincare, tableaux
from .chow import g_cycle, omega1_power
from .exactmath import degree_coefficient, exact_div, superfactorial, vandermonde
from .motives import build_decomposition, compose
from .partitions import Box, dual_in_box, enumerate_partitions, jumps
from .serialize import (
    SCHEMA_VERSION,
    certificate_to_dict,
    correspondence_from_dict,
    correspondence_to_dict,
)

SUITES = ("rs", "cong", "cong2", "pieri", "poincare", "sb", "all")

DEFAULT_BOUNDS: dict[str, dict[str, Any]] = {
    "rs": {"max_d": 4, "max_m": 12, "enumerate_oracle": False},
    "cong": {"primes": (5, 7, 11, 13)},
    "cong2": {"max_m": 30},
    "pieri": {"max_n": 9},
    "poincare": {"max_n": 20},
    "sb": {"primes": (3, 5, 7), "iso_primes": (5, 7, 11)},
}


@dataclass
class CheckRecord:
    name: str
    parameters: dict[str, Any]
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    checks: list[CheckRecord] = field(default_factory=list)
    wall_time_ms: float | None = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        passed = sum(1 for c in self.checks if c.passed)
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "checks": [c.to_dict() for c in self.checks],
            "summary": {
                "total": len(self.checks),
                "passed": passed,
                "failed": len(self.checks) - passed,
            },
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            params = " ".join(f"{k}={v}" for k, v in c.parameters.items())
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name} {params}".rstrip()
            if not c.passed:
                line += f" expected={c.expected} actual={c.actual}"
            lines.append(line)
        passed = sum(1 for c in self.checks if c.passed)
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def _record(name: str, params: dict, expected, actual) -> CheckRecord:
    e, a = str(expected), str(actual)
    return CheckRecord(name, params, e, a, e == a)


# ---------------------------------------------------------------------------
# Suites


def suite_rs(max_d: int = 4, max_m: int = 12, enumerate_oracle: bool = False) -> list[CheckRecord]:
    checks = []
    for d in range(1, max_d + 1):
        for m in range(max_m + 1):
            lhs, _ = tableaux.rs_identity(d, m)
            checks.append(_record("rs-identity", {"d": d, "m": m}, d**m, lhs))
    if enumerate_oracle:
        for d in range(1, max_d + 1):
            for m in range(max_m + 1):
                total = sum(
                    len(tableaux.enumerate_ssyt(xi, d)) * len(tableaux.enumerate_syt(xi))
                    for xi in tableaux.shapes_of_weight(m, d)
                )
                checks.append(_record("rs-enumerated", {"d": d, "m": m}, d**m, total))
    return checks


def suite_cong(primes=(5, 7, 11, 13)) -> list[CheckRecord]:
    checks = []
    for n in primes:
        for d in range(2, n // 2 + 1):
            for m in range(n):
                lhs, _ = motives.verify_congruence(n, d, m)
                checks.append(
                    _record(
                        "layer-congruence",
                        {"n": n, "d": d, "m": m},
                        pow(d, m, n),
                        lhs % n,
                    )
                )
        for m in range(n):
            lhs, _ = motives.verify_congruence(n, 2, m)
            expected = 2**m if m < n - 1 else 2 ** (n - 1) - n
            checks.append(_record("layer-exact-d2", {"n": n, "m": m}, expected, lhs))
    return checks


def suite_cong2(max_m: int = 30) -> list[CheckRecord]:
    return [
        _record("power-sum", {"m": m}, 2**m, motives.cong2_exact(m))
        for m in range(max_m + 1)
    ]


def suite_pieri(max_n: int = 9) -> list[CheckRecord]:
    checks = []
    for n in range(3, max_n + 1):
        for d in range(1, n):
            box = Box(d, n - d)
            for m in range(n):
                if m > d * (n - d):
                    continue
                power = omega1_power(m, d, n)
                bad = []
                for rho in enumerate_partitions(m, box):
                    got = power.coefficient(rho)
                    via_degree = degree_coefficient(m, jumps(rho, box))
                    via_syt = tableaux.count_syt(rho)
                    if not got == via_degree == via_syt:
                        bad.append(f"{rho}:{got}/{via_degree}/{via_syt}")
                checks.append(
                    _record(
                        "omega1-power-coefficients",
                        {"n": n, "d": d, "m": m},
                        "all-equal",
                        "all-equal" if not bad else "mismatch " + ",".join(bad),
                    )
                )
        for d in range(1, n):
            box = Box(d, n - d)
            full = (n - d,) * d
            g = g_cycle(d, n, 1)
            bad = []
            for (h, mu), v in sorted(g.terms.items()):
                closed = exact_div(
                    vandermonde(jumps(dual_in_box(mu, box), box)), superfactorial(d)
                )
                if v != (-1) ** h * closed:
                    bad.append(f"{(h, mu)}")
            checks.append(
                _record(
                    "twisted-schur-fullbox",
                    {"n": n, "d": d},
                    "all-equal",
                    "all-equal" if not bad else "mismatch " + ",".join(bad),
                )
            )
    return checks


def suite_poincare(max_n: int = 20) -> list[CheckRecord]:
    checks = []
    for n in range(2, max_n + 1):
        for d in range(1, n):
            quotient = poincare.divides(
                poincare.projective_poincare(n), poincare.gaussian_binomial(n, d)
            )
            checks.append(
                _record(
                    "divides-iff-coprime",
                    {"n": n, "d": d},
                    math.gcd(n, d) == 1,
                    quotient is not None,
                )
            )
            if quotient is not None:
                product = quotient * poincare.projective_poincare(n)
                checks.append(
                    _record(
                        "quotient-reconstructs",
                        {"n": n, "d": d},
                        list(poincare.gaussian_binomial(n, d).coeffs),
                        list(product.coeffs),
                    )
                )
    return checks


def suite_sb(primes=(3, 5, 7), iso_primes=(5, 7, 11)) -> list[CheckRecord]:
    checks = []
    for n in primes:
        checks.append(
            _record("indecomposable", {"n": n}, True, motives.sb_indecomposable(n))
        )
    for n in iso_primes:
        for r in range(n):
            checks.append(
                _record(
                    "iso-criterion",
                    {"n": n, "r": r},
                    r % n in (1 % n, (-1) % n),
                    motives.sb_iso_criterion(n, r),
                )
            )
    return checks


_SUITE_RUNNERS: dict[str, Callable[..., list[CheckRecord]]] = {
    "rs": suite_rs,
    "cong": suite_cong,
    "cong2": suite_cong2,
    "pieri": suite_pieri,
    "poincare": suite_poincare,
    "sb": suite_sb,
}


def run_suite(suite: str, **bounds: Any) -> Report:
    """Run a named verification suite with explicit or default bounds."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    checks: list[CheckRecord] = []
    used: dict[str, Any] = {"suite": suite, "bounds": {}}
    start = time.monotonic()
    for name in names:
        defaults = dict(DEFAULT_BOUNDS[name])
        for key in list(defaults):
            if bounds.get(key) is not None:
                defaults[key] = bounds[key]
        used["bounds"][name] = {
            k: list(v) if isinstance(v, tuple) else v for k, v in defaults.items()
        }
        checks.extend(_SUITE_RUNNERS[name](**defaults))
    report = Report("verify", used, checks)
    report.wall_time_ms = (time.monotonic() - start) * 1000.0
    return report


# ---------------------------------------------------------------------------
# Certificates, composition, Poincare summaries


def decompose_payload(n: int, d: int, r: int) -> dict[str, Any]:
    """Build a certificate and serialize it; raises on unsupported input."""
    return certificate_to_dict(build_decomposition(n, d, r))


def compose_payload(left: dict, right: dict) -> dict[str, Any]:
    """Compose two serialized correspondences (left after right)."""
    outer = correspondence_from_dict(left)
    inner = correspondence_from_dict(right)
    composed = compose(outer, inner)
    return {"schema": SCHEMA_VERSION, "composition": correspondence_to_dict(composed)}


def poincare_payload(n: int, d: int) -> dict[str, Any]:
    """Gaussian and projective Poincare polynomials plus divisibility data.

    Polynomials print dense, low degree first.
    """
    gauss = poincare.gaussian_binomial(n, d)
    proj = poincare.projective_poincare(n)
    payload: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "n": n,
        "d": d,
        "gaussian": list(gauss.coeffs),
        "projective": list(proj.coeffs),
        "coprime": math.gcd(n, d) == 1,
    }
    quotient = poincare.divides(proj, gauss)
    payload["quotient"] = list(quotient.coeffs) if quotient is not None else None
    return payload
