"""Mechanical verification of the identities tying cyclotomic polynomials,
the totient, and Ramanujan sums together.

Each ``check_*`` function evaluates both sides of a family of identities at
concrete parameters and returns :class:`CheckReport` objects.  Failures are
data, not exceptions: a failed report carries a witness rendering of the two
unequal sides, so parameter sweeps always run to completion.  The ``sweep_*``
helpers iterate the checks over the standard parameter ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from . import arith, cyclo, intpoly

IDENTITY_LABELS = frozenset(
    {
        "fundamental_product",
        "power_substitution_product",
        "dual_inversion",
        "noncoprime_counterexample",
        "totient_divisor_sum",
        "totient_scaled_divisor_sum",
        "totient_multiplicative",
        "ramanujan_divisor_sum",
        "ramanujan_inversion",
        "ramanujan_method_agreement",
        "ramanujan_degree_reduction",
        "linear_coefficient",
        "subleading_coefficient",
        "palindrome_symmetry",
        "first_power_sum",
    }
)

_WITNESS_TERMS = 40


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check at one parameter point."""

    identity_name: str
    params: tuple
    passed: bool
    witness: str | None = None

    def __post_init__(self) -> None:
        if self.identity_name not in IDENTITY_LABELS:
            raise ValueError("unknown identity label %r" % self.identity_name)
        if not self.passed and self.witness is None:
            raise ValueError("a failed report requires a witness")


def _render(value) -> str:
    if isinstance(value, list):
        return intpoly.poly_str(value, max_terms=_WITNESS_TERMS)
    return str(value)


def _equal(name: str, params: tuple, lhs, rhs) -> CheckReport:
    if lhs == rhs:
        return CheckReport(name, params, True)
    witness = "left = %s; right = %s" % (_render(lhs), _render(rhs))
    return CheckReport(name, params, False, witness)


def _distinct(name: str, params: tuple, lhs, rhs) -> CheckReport:
    if lhs != rhs:
        return CheckReport(name, params, True)
    witness = "sides coincide: %s" % _render(lhs)
    return CheckReport(name, params, False, witness)


# ---------------------------------------------------------------------------
# polynomial identities

def check_polynomial_identities(n: int, m: int) -> list:
    """Check the product identities for Phi at the pair (n, m).

    Always checks the fundamental identity at n.  For coprime pairs it
    additionally checks the power-substitution product and the dual Mobius
    inversion; for non-coprime pairs it confirms that the two sides of the
    power-substitution identity differ (the counterexample behaviour).
    """
    arith._check_index(n)
    arith._check_index(m, "m")
    params = (("n", n), ("m", m))
    reports = []

    product = cyclo._cyclotomic_product(arith.divisors(n))
    reports.append(
        _equal("fundamental_product", params, product, cyclo._x_pow_minus_1(n))
    )

    phi_n = cyclo.cyclotomic_poly(n)
    substituted = intpoly.substitute_power(phi_n, m)
    if gcd(n, m) == 1:
        reports.append(
            _equal(
                "power_substitution_product",
                params,
                substituted,
                cyclo.cyclotomic_of_power(n, m),
            )
        )
        num = []
        den = []
        for d in arith.divisors(m):
            mu = arith.mobius(m // d)
            if mu == 1:
                num.append(intpoly.substitute_power(phi_n, d))
            elif mu == -1:
                den.append(intpoly.substitute_power(phi_n, d))
        try:
            quotient = intpoly.poly_exact_div(
                intpoly.poly_prod(num), intpoly.poly_prod(den)
            )
            reports.append(
                _equal("dual_inversion", params, quotient, cyclo.cyclotomic_poly(n * m))
            )
        except intpoly.NotDivisibleError:
            reports.append(
                CheckReport(
                    "dual_inversion",
                    params,
                    False,
                    "numerator product is not divisible by denominator product",
                )
            )
    else:
        rhs = cyclo._cyclotomic_product([d * n for d in arith.divisors(m)])
        reports.append(
            _distinct("noncoprime_counterexample", params, substituted, rhs)
        )
    return reports


# ---------------------------------------------------------------------------
# totient identities

def check_totient_identities(n: int, m: int) -> list:
    """Check the divisor-sum and multiplicativity identities for the totient."""
    arith._check_index(n)
    arith._check_index(m, "m")
    params = (("n", n), ("m", m))
    reports = [
        _equal(
            "totient_divisor_sum",
            params,
            sum(arith.totient(d) for d in arith.divisors(n)),
            n,
        )
    ]
    if gcd(n, m) == 1:
        reports.append(
            _equal(
                "totient_scaled_divisor_sum",
                params,
                sum(arith.totient(d * n) for d in arith.divisors(m)),
                m * arith.totient(n),
            )
        )
        reports.append(
            _equal(
                "totient_multiplicative",
                params,
                arith.totient(m * n),
                arith.totient(m) * arith.totient(n),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Ramanujan-sum identities

def check_ramanujan_identities(n: int, m: int, q: int) -> list:
    """Check the divisor-sum, inversion, and cross-formula identities for c_n(q).

    Requires gcd(n, m) = 1; q >= 0 with the conventions c_n(0) = phi(n) and
    gcd(m, 0) = m.
    """
    arith._check_index(n)
    arith._check_index(m, "m")
    if q < 0:
        raise ValueError("q must be >= 0, got %r" % (q,))
    if gcd(n, m) != 1:
        raise ValueError("n and m must be coprime, got n=%d, m=%d" % (n, m))
    params = (("n", n), ("m", m), ("q", q))
    reports = []

    lhs = sum(arith.ramanujan_sum(d * n, q) for d in arith.divisors(m))
    rhs = m * arith.ramanujan_sum(n, q // m) if q % m == 0 else 0
    reports.append(_equal("ramanujan_divisor_sum", params, lhs, rhs))

    inv = sum(
        d * arith.ramanujan_sum(n, q // d) * arith.mobius(m // d)
        for d in arith.divisors(gcd(m, q))
    )
    reports.append(
        _equal("ramanujan_inversion", params, arith.ramanujan_sum(m * n, q), inv)
    )

    kluyver = arith.ramanujan_sum(m * n, q, "kluyver")
    hoelder = arith.ramanujan_sum(m * n, q, "hoelder")
    try:
        definition = arith.ramanujan_sum(m * n, q, "definition")
    except arith.DefinitionResidualError as exc:
        reports.append(
            CheckReport("ramanujan_method_agreement", params, False, str(exc))
        )
    else:
        if kluyver == hoelder == definition:
            reports.append(CheckReport("ramanujan_method_agreement", params, True))
        else:
            reports.append(
                CheckReport(
                    "ramanujan_method_agreement",
                    params,
                    False,
                    "kluyver = %d; hoelder = %d; definition = %d"
                    % (kluyver, hoelder, definition),
                )
            )

    reports.append(
        _equal(
            "ramanujan_degree_reduction",
            params,
            sum(arith.ramanujan_sum(d * n, 0) for d in arith.divisors(m)),
            m * arith.totient(n),
        )
    )
    return reports


# ---------------------------------------------------------------------------
# coefficient facts

def check_coefficient_facts(n: int) -> list:
    """Check the coefficient facts for Phi_n: a_1 = a_{phi(n)-1} = -mu(n),
    the palindrome symmetry, and the first power sum.  Requires n >= 2."""
    arith._check_index(n)
    if n < 2:
        raise ValueError("coefficient facts hold for n >= 2 only")
    params = (("n", n),)
    poly = cyclo.cyclotomic_poly(n)
    degree = len(poly) - 1
    minus_mu = -arith.mobius(n)
    reports = [
        _equal("linear_coefficient", params, poly[1], minus_mu),
        _equal("subleading_coefficient", params, poly[degree - 1], minus_mu),
        _equal("palindrome_symmetry", params, poly, poly[::-1]),
    ]
    s1 = intpoly.power_sums(poly, 1)[1]
    mu = arith.mobius(n)
    c1 = arith.ramanujan_sum(n, 1)
    if s1 == mu == c1:
        reports.append(CheckReport("first_power_sum", params, True))
    else:
        reports.append(
            CheckReport(
                "first_power_sum",
                params,
                False,
                "S_1 = %d; mu(n) = %d; c_n(1) = %d" % (s1, mu, c1),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# sweeps

@dataclass
class SweepResult:
    """Aggregate of a parameter sweep: total checks run and the failures."""

    suite: str
    checks: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures


def _pairs(bound: int) -> Iterator:
    for n in range(1, bound + 1):
        for m in range(1, bound // n + 1):
            yield n, m


def _collect(result: SweepResult, reports: list) -> None:
    result.checks += len(reports)
    result.failures.extend(r for r in reports if not r.passed)


def sweep_polynomial(max_n: int) -> SweepResult:
    """Run :func:`check_polynomial_identities` over every pair with n*m <= max_n."""
    result = SweepResult("poly", 0, [])
    for n, m in _pairs(max_n):
        _collect(result, check_polynomial_identities(n, m))
    return result


def sweep_totient(max_n: int) -> SweepResult:
    """Run :func:`check_totient_identities` over coprime pairs with n*m <= max_n."""
    result = SweepResult("totient", 0, [])
    for n, m in _pairs(max_n):
        if gcd(n, m) == 1:
            _collect(result, check_totient_identities(n, m))
    return result


def sweep_ramanujan(max_n: int, max_q: int) -> SweepResult:
    """Run :func:`check_ramanujan_identities` over coprime n*m <= max_n, q <= max_q."""
    result = SweepResult("ramanujan", 0, [])
    for n, m in _pairs(max_n):
        if gcd(n, m) == 1:
            for q in range(max_q + 1):
                _collect(result, check_ramanujan_identities(n, m, q))
    return result


def sweep_coefficients(max_n: int) -> SweepResult:
    """Run :func:`check_coefficient_facts` for every 2 <= n <= max_n."""
    result = SweepResult("coeff", 0, [])
    for n in range(2, max_n + 1):
        _collect(result, check_coefficient_facts(n))
    return result
