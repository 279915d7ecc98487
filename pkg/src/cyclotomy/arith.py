"""Elementary multiplicative number theory.

Factorization (trial division, then Brent's cycle variant of Pollard rho
with a deterministic Miller-Rabin primality test), divisors, the Mobius
and Euler totient functions, and Ramanujan sums by several closed forms.

All functions are pure and deterministic; the internal memo tables only
cache results of pure computations, so concurrent use is safe.
"""

from __future__ import annotations

from functools import lru_cache
from math import cos, fsum, gcd, isqrt, tau

from . import intpoly

#: Library-wide bound on every index argument.
MAX_INDEX = 2**63 - 1

#: Valid ``method`` arguments for :func:`ramanujan_sum`.
RAMANUJAN_METHODS = ("kluyver", "hoelder", "newton", "definition")

_TRIAL_LIMIT = 10**6


class DefinitionResidualError(ArithmeticError):
    """The floating-point cosine sum landed farther than the tolerance from an integer."""


def _check_index(n: int, name: str = "n") -> None:
    if not 1 <= n <= MAX_INDEX:
        raise ValueError("%s must be in [1, 2**63 - 1], got %r" % (name, n))


# ---------------------------------------------------------------------------
# primality and factorization

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # This witness set decides primality for every n < 2**64.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_primes: list = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
_sieve_limit = 32


def _extend_primes(limit: int) -> list:
    """Grow the shared prime table to cover ``limit`` (capped at the trial bound)."""
    global _primes, _sieve_limit
    limit = min(limit, _TRIAL_LIMIT)
    if limit <= _sieve_limit:
        return _primes
    new_limit = max(limit, 2 * _sieve_limit)
    sieve = bytearray([1]) * (new_limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(new_limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, new_limit + 1, p)))
    fresh = [i for i in range(2, new_limit + 1) if sieve[i]]
    # Swap in a complete new list so concurrent readers always see a
    # consistent table.
    _primes = fresh
    _sieve_limit = new_limit
    return _primes


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite ``n`` (Brent's variant, deterministic)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError("factor search failed for %d" % n)  # pragma: no cover


@lru_cache(maxsize=None)
def _factorize(n: int) -> tuple:
    if n == 1:
        return ()
    factors = {}
    rem = n
    idx = 0
    primes = _extend_primes(isqrt(rem) + 1)
    while idx < len(primes):
        p = primes[idx]
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors[p] = e
            primes = _extend_primes(isqrt(rem) + 1)
        idx += 1
    if rem > 1:
        if p * p > rem or is_prime(rem):
            factors[rem] = factors.get(rem, 0) + 1
        else:
            # Beyond the trial bound: split with Pollard rho.
            stack = [rem]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    factors[m] = factors.get(m, 0) + 1
                    continue
                d = _pollard_rho(m)
                stack.append(d)
                stack.append(m // d)
    return tuple(sorted(factors.items()))


def factorize(n: int) -> list:
    """Prime-power decomposition of ``n`` as ``[(p, e), ...]`` with primes increasing.

    ``factorize(1)`` is the empty list.
    """
    _check_index(n)
    return list(_factorize(n))


def divisors(n: int) -> list:
    """All divisors of ``n`` in increasing order."""
    _check_index(n)
    divs = [1]
    for p, e in _factorize(n):
        pk = 1
        powers = []
        for _ in range(e):
            pk *= p
            powers.append(pk)
        divs += [d * q for q in powers for d in divs]
    divs.sort()
    return divs


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Mobius function: 1 at 1, (-1)**k on squarefree n with k prime factors, else 0."""
    _check_index(n)
    result = 1
    for _, e in _factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's totient, via the factorization product formula."""
    _check_index(n)
    result = n
    for p, _ in _factorize(n):
        result -= result // p
    return result


def is_coprime(a: int, b: int) -> bool:
    """True when gcd(a, b) == 1."""
    return gcd(a, b) == 1


# ---------------------------------------------------------------------------
# Ramanujan sums

_COS_TABLE_MAX = 4096


@lru_cache(maxsize=1024)
def _coprime_residues(n: int) -> tuple:
    return tuple(k for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=512)
def _cos_table(n: int) -> tuple:
    step = tau / n
    return tuple(cos(step * r) for r in range(n))


def _cosine_sum(n: int, q: int) -> float:
    """Sum of cos(2*pi*k*q/n) over 1 <= k <= n coprime to n, in floating point."""
    ks = _coprime_residues(n)
    if n <= _COS_TABLE_MAX:
        table = _cos_table(n)
        return fsum(table[k * q % n] for k in ks)
    return fsum(cos(tau * (k * q % n) / n) for k in ks)


def _kluyver(n: int, q: int) -> int:
    g = gcd(n, q)  # gcd(n, 0) == n, so q = 0 yields the totient
    return sum(d * mobius(n // d) for d in divisors(g))


def _hoelder(n: int, q: int) -> int:
    g = gcd(n, q)
    reduced = n // g
    mu = mobius(reduced)
    if mu == 0:
        return 0
    quot, rem = divmod(totient(n), totient(reduced))
    assert rem == 0, "totient quotient must be exact"
    return mu * quot


def _definition(n: int, q: int) -> int:
    value = _cosine_sum(n, q)
    nearest = round(value)
    if abs(value - nearest) > 1e-6:
        raise DefinitionResidualError(
            "cosine sum for c_%d(%d) is %.3e away from the nearest integer"
            % (n, q, abs(value - nearest))
        )
    return int(nearest)


def ramanujan_sum(n: int, q: int, method: str = "kluyver") -> int:
    """Ramanujan sum c_n(q): sum of q-th powers of the primitive n-th roots of unity.

    Closed forms:

    * ``kluyver``    -- sum of d * mu(n/d) over the divisors d of gcd(n, q);
    * ``hoelder``    -- mu(n/g) * phi(n) / phi(n/g) with g = gcd(n, q);
    * ``newton``     -- the q-th power sum of the roots of the n-th cyclotomic
      polynomial, via Newton's identities;
    * ``definition`` -- floating-point cosine sum rounded to the nearest
      integer, raising :class:`DefinitionResidualError` when the residual
      exceeds 1e-6.  Exists purely as an independent numeric oracle.

    All methods agree; ``q = 0`` is allowed and gives phi(n).
    """
    _check_index(n)
    if q < 0:
        raise ValueError("q must be >= 0, got %r" % (q,))
    if method == "kluyver":
        return _kluyver(n, q)
    if method == "hoelder":
        return _hoelder(n, q)
    if method == "definition":
        return _definition(n, q)
    if method == "newton":
        from . import cyclo  # deferred: cyclo imports this module

        return intpoly.power_sums(cyclo.cyclotomic_poly(n), q)[q]
    raise ValueError("unknown method %r; expected one of %s" % (method, ", ".join(RAMANUJAN_METHODS)))
