"""Cyclotomic polynomials by five independent algorithms.

Phi_n is the monic integer polynomial whose roots are the primitive n-th
roots of unity; its degree is phi(n).  Every algorithm here works purely
with exact integer polynomial arithmetic:

* ``recursive``        -- divide X**n - 1 by the product of Phi_d over the
  proper divisors d of n;
* ``mobius_product``   -- multiplicative Mobius inversion of the fundamental
  identity: product of (X**d - 1)**mu(n/d) over d | n, evaluated as one
  numerator product, one denominator product, and a single exact division;
* ``radical``          -- prime-power reduction Phi_n(X) = Phi_r(X**e) with
  r = rad(n) and e = n/r, plus a recursion at the squarefree radical;
* ``dual_form``        -- build the radical one prime p at a time through
  Phi_{kp}(X) = Phi_k(X**p) / Phi_k(X), then lift by the radical reduction;
* ``newton_ramanujan`` -- coefficients from the Ramanujan sums c_n(q) via
  Newton's identities, entirely division-free on the polynomial level.

All five return identical polynomials; the test suite verifies the
agreement exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import arith, intpoly

#: Valid ``algorithm`` arguments for :func:`cyclotomic`.
ALGORITHMS = (
    "recursive",
    "mobius_product",
    "radical",
    "dual_form",
    "newton_ramanujan",
)


class NotCoprimeError(ValueError):
    """The identity requested requires coprime arguments."""


class InternalIdentityError(ArithmeticError):
    """An identity that is a theorem failed inside an algorithm (a bug)."""


def _x_pow_minus_1(n: int) -> list:
    out = [0] * (n + 1)
    out[0] = -1
    out[n] = 1
    return out


def _recursive(n: int) -> list:
    # Per-call memo over the divisors of n; discarded on return.
    memo = {1: [-1, 1]}
    for d in arith.divisors(n)[1:]:
        proper = intpoly.poly_prod([memo[e] for e in arith.divisors(d)[:-1]])
        memo[d] = intpoly.poly_exact_div(_x_pow_minus_1(d), proper)
    return memo[n]


def _mobius_product(n: int) -> list:
    num = []
    den = []
    for d in arith.divisors(n):
        mu = arith.mobius(n // d)
        if mu == 1:
            num.append(_x_pow_minus_1(d))
        elif mu == -1:
            den.append(_x_pow_minus_1(d))
    return intpoly.poly_exact_div(intpoly.poly_prod(num), intpoly.poly_prod(den))


def radical_reduce(n: int) -> tuple:
    """Return ``(r, e)`` with ``r = rad(n)``, ``e = n // r``; then Phi_n(X) = Phi_r(X**e)."""
    arith._check_index(n)
    r = 1
    for p, _ in arith.factorize(n):
        r *= p
    return r, n // r


def _radical(n: int) -> list:
    r, e = radical_reduce(n)
    return intpoly.substitute_power(_recursive(r), e)


def _dual_form(n: int) -> list:
    r, e = radical_reduce(n)
    poly = [-1, 1]
    for p, _ in arith.factorize(r):
        poly = intpoly.poly_exact_div(intpoly.substitute_power(poly, p), poly)
    return intpoly.substitute_power(poly, e)


def _newton_ramanujan(n: int) -> list:
    degree = arith.totient(n)
    sums = [degree] + [arith.ramanujan_sum(n, q, "kluyver") for q in range(1, degree + 1)]
    poly = intpoly.coeffs_from_power_sums(sums, degree)
    if poly[0] != 1:
        raise InternalIdentityError(
            "constant term of Phi_%d came out %d, expected 1" % (n, poly[0])
        )
    return poly


_DISPATCH = {
    "recursive": _recursive,
    "mobius_product": _mobius_product,
    "radical": _radical,
    "dual_form": _dual_form,
    "newton_ramanujan": _newton_ramanujan,
}


@dataclass(frozen=True)
class CyclotomicResult:
    """A computed cyclotomic polynomial together with its provenance.

    Invariants are checked on construction: the polynomial is monic of
    degree phi(n), with constant term 1 for n > 1 (Phi_1 is X - 1).
    """

    n: int
    poly: list
    algorithm: str

    def __post_init__(self) -> None:
        if self.poly[-1] != 1:
            raise InternalIdentityError("Phi_%d is not monic" % self.n)
        if len(self.poly) - 1 != arith.totient(self.n):
            raise InternalIdentityError(
                "deg Phi_%d is %d, expected phi(%d) = %d"
                % (self.n, len(self.poly) - 1, self.n, arith.totient(self.n))
            )
        expected = -1 if self.n == 1 else 1
        if self.poly[0] != expected:
            raise InternalIdentityError(
                "Phi_%d(0) is %d, expected %d" % (self.n, self.poly[0], expected)
            )


def cyclotomic(n: int, algorithm: str = "recursive") -> CyclotomicResult:
    """Compute Phi_n by the chosen algorithm (see :data:`ALGORITHMS`)."""
    arith._check_index(n)
    if algorithm not in _DISPATCH:
        raise ValueError(
            "unknown algorithm %r; expected one of %s" % (algorithm, ", ".join(ALGORITHMS))
        )
    if n == 1:
        poly = [-1, 1]
    elif n == 2:
        poly = [1, 1]
    else:
        try:
            poly = _DISPATCH[algorithm](n)
        except (intpoly.NotDivisibleError, intpoly.InexactDivisionError) as exc:
            raise InternalIdentityError(
                "exact arithmetic failed while computing Phi_%d by %s: %s"
                % (n, algorithm, exc)
            ) from exc
    return CyclotomicResult(n=n, poly=poly, algorithm=algorithm)


@lru_cache(maxsize=None)
def _cyclotomic_cached(n: int) -> tuple:
    if n == 1:
        return (-1, 1)
    if n == 2:
        return (1, 1)
    return tuple(_dual_form(n))


def _cyclotomic_product(indices: list) -> list:
    """Product of Phi_k over a list of indices ``k``."""
    if len(indices) == 1:
        return list(_cyclotomic_cached(indices[0]))
    return intpoly.poly_prod([_cyclotomic_cached(k) for k in indices])


def cyclotomic_poly(n: int) -> list:
    """Coefficients of Phi_n (process-wide cache behind a pure interface)."""
    arith._check_index(n)
    return list(_cyclotomic_cached(n))


def cyclotomic_of_power(n: int, m: int) -> list:
    """Phi_n(X**m) computed as the product of Phi_{d*n} over the divisors d of m.

    The equality with ``substitute_power(Phi_n, m)`` holds exactly when
    gcd(n, m) = 1, which is required here; see the ``verify`` module for the
    check of both that identity and its failure on non-coprime pairs.
    """
    arith._check_index(n)
    arith._check_index(m, "m")
    arith._check_index(n * m, "n*m")  # the product runs over indices up to n*m
    if not arith.is_coprime(n, m):
        raise NotCoprimeError("n and m must be coprime, got n=%d, m=%d" % (n, m))
    return _cyclotomic_product([d * n for d in arith.divisors(m)])
