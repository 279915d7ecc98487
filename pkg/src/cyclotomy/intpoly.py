"""Dense univariate polynomial arithmetic over arbitrary-precision integers.

A polynomial is a plain ``list[int]`` of coefficients in ascending order:
index ``j`` holds the coefficient of ``X**j``.  Canonical form has no
trailing zeros; the zero polynomial is the empty list.  All arithmetic is
exact.

Multiplication and exact division switch to a Kronecker-substitution kernel
for large operands: coefficients are packed into fixed-width slots of one
big integer so the actual multiply runs inside CPython's long arithmetic.
The packed path is exact by construction (slot widths are sized from
coefficient bounds) and is cross-checked against the schoolbook path in the
test suite.
"""

from __future__ import annotations

import struct
from operator import mul
from typing import Iterable, Sequence


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division was requested but the remainder is nonzero."""


class NotMonicError(ValueError):
    """A monic polynomial of degree >= 1 was required."""


class InexactDivisionError(ArithmeticError):
    """A coefficient recursion produced a non-integer value."""


IntPoly = list  # list[int], ascending coefficients, canonical form

# Below this size product, schoolbook loops beat the packing overhead.
_SCHOOLBOOK_CUTOFF = 4096


def trim(p: Sequence[int]) -> IntPoly:
    """Return ``p`` as a canonical list (no trailing zero coefficients)."""
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def poly_degree(p: Sequence[int]) -> int:
    """Degree of ``p``; raises ``ValueError`` for the zero polynomial."""
    q = trim(p)
    if not q:
        raise ValueError("the zero polynomial has no degree")
    return len(q) - 1


def poly_height(p: Sequence[int]) -> int:
    """Maximum absolute coefficient (0 for the zero polynomial)."""
    return max(map(abs, p), default=0)


def poly_add(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """Coefficient-wise sum, canonical."""
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def poly_sub(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """Coefficient-wise difference, canonical."""
    out = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] -= c
    return trim(out)


# ---------------------------------------------------------------------------
# multiplication

def _mul_school(p: Sequence[int], q: Sequence[int]) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


_STRUCT_FMT = {16: "H", 32: "I", 64: "Q"}


def _pack(p: Sequence[int], width: int) -> int:
    """Evaluate ``p`` at ``2**width``; requires ``|coeff| < 2**(width-1)``."""
    off = 1 << (width - 1)
    code = _STRUCT_FMT.get(width)
    if code is not None:
        buf = struct.pack("<%d%s" % (len(p), code), *[c + off for c in p])
    else:
        size = width // 8
        buf = b"".join((c + off).to_bytes(size, "little") for c in p)
    val = int.from_bytes(buf, "little")
    ones = ((1 << (width * len(p))) - 1) // ((1 << width) - 1)
    return val - off * ones


def _unpack(val: int, width: int, count: int) -> list:
    """Recover ``count`` signed slot values from a packed integer."""
    off = 1 << (width - 1)
    ones = ((1 << (width * count)) - 1) // ((1 << width) - 1)
    # Offsetting every slot by 2**(width-1) makes all base-2**width digits
    # nonnegative, so no borrow handling is needed.
    u = val + off * ones
    size = width // 8
    buf = u.to_bytes(count * size, "little")
    code = _STRUCT_FMT.get(width)
    if code is not None:
        return [v - off for v in struct.unpack("<%d%s" % (count, code), buf)]
    return [
        int.from_bytes(buf[i * size : (i + 1) * size], "little") - off
        for i in range(count)
    ]


def _slot_width(bound_bits: int) -> int:
    # Prefer widths with a bulk struct codec; otherwise round up to bytes.
    for w in (16, 32, 64):
        if bound_bits <= w:
            return w
    return (bound_bits + 7) // 8 * 8


def _mul_packed(p: Sequence[int], q: Sequence[int]) -> list:
    bound = poly_height(p) * poly_height(q) * min(len(p), len(q))
    width = _slot_width(bound.bit_length() + 2)
    return _unpack(_pack(p, width) * _pack(q, width), width, len(p) + len(q) - 1)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """Exact product of two polynomials."""
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    if len(p) * len(q) <= _SCHOOLBOOK_CUTOFF:
        return _mul_school(p, q)
    return _mul_packed(p, q)


def poly_prod(factors: Iterable[Sequence[int]]) -> IntPoly:
    """Exact product of a sequence of polynomials (empty product is 1).

    Factors are combined smallest-first in a balanced tree, which keeps
    intermediate degrees and coefficient heights (and therefore packed slot
    widths) as small as possible.
    """
    polys = [trim(f) for f in factors]
    if not polys:
        return [1]
    if any(not f for f in polys):
        return []
    polys.sort(key=len)
    while len(polys) > 1:
        merged = [
            poly_mul(polys[i], polys[i + 1]) for i in range(0, len(polys) - 1, 2)
        ]
        if len(polys) % 2:
            merged.append(polys[-1])
        merged.sort(key=len)
        polys = merged
    return list(polys[0])


# ---------------------------------------------------------------------------
# exact division

def _div_school(p: list, q: list) -> IntPoly:
    rem = list(p)
    qlead = q[-1]
    qlen = len(q)
    out = [0] * (len(p) - qlen + 1)
    for shift in range(len(out) - 1, -1, -1):
        top = rem[shift + qlen - 1]
        if top == 0:
            continue
        coeff, res = divmod(top, qlead)
        if res:
            raise NotDivisibleError("leading coefficient division is not exact")
        out[shift] = coeff
        for j in range(qlen):
            rem[shift + j] -= coeff * q[j]
    if any(rem):
        raise NotDivisibleError("nonzero remainder")
    return trim(out)


def _mul_trunc(p: list, q: list, k: int) -> list:
    """First ``k`` coefficients of ``p*q`` (no canonical trimming)."""
    p = p[:k]
    q = q[:k]
    if not p or not q:
        return [0] * k
    if len(p) * len(q) <= _SCHOOLBOOK_CUTOFF:
        out = _mul_school(p, q)
    else:
        out = _mul_packed(p, q)
    out = out[:k]
    return out + [0] * (k - len(out))


def _series_inverse(b: list, k: int) -> list:
    """Inverse of ``b`` modulo ``X**k`` over the integers; needs ``b[0] in {1,-1}``."""
    inv = [b[0]]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        t = _mul_trunc(b[:prec], inv, prec)
        t[0] = 2 - t[0]
        for i in range(1, prec):
            t[i] = -t[i]
        inv = _mul_trunc(inv, t, prec)
    return inv


def _div_series(p: list, q: list) -> IntPoly:
    # Reverse both operands and multiply by the inverse power series of the
    # divisor; exact over the integers because the divisor is monic up to sign.
    qlen = len(p) - len(q) + 1
    pr = p[::-1][:qlen]
    qr = q[::-1][:qlen]
    inv = _series_inverse(qr, qlen)
    cand = _mul_trunc(pr + [0] * (qlen - len(pr)), inv, qlen)[::-1]
    if poly_mul(q, cand) != p:
        raise NotDivisibleError("nonzero remainder")
    return trim(cand)


def poly_exact_div(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """Quotient ``r`` with ``p == q*r`` exactly.

    Raises ``ZeroDivisionError`` if ``q`` is zero and ``NotDivisibleError``
    if ``q`` does not divide ``p`` over the integers.
    """
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return []
    if len(p) < len(q):
        raise NotDivisibleError("divisor degree exceeds dividend degree")
    if len(q) == 1:
        c = q[0]
        out = []
        for a in p:
            coeff, res = divmod(a, c)
            if res:
                raise NotDivisibleError("constant divisor does not divide all coefficients")
            out.append(coeff)
        return out
    qlen = len(p) - len(q) + 1
    if q[-1] in (1, -1) and qlen * len(q) > _SCHOOLBOOK_CUTOFF:
        return _div_series(p, q)
    return _div_school(p, q)


# ---------------------------------------------------------------------------
# composition and evaluation

def substitute_power(p: Sequence[int], m: int) -> IntPoly:
    """Return ``p(X**m)``."""
    if m < 1:
        raise ValueError("exponent must be >= 1")
    p = trim(p)
    if not p or m == 1:
        return list(p)
    out = [0] * ((len(p) - 1) * m + 1)
    for j, c in enumerate(p):
        out[j * m] = c
    return out


def poly_eval(p: Sequence[int], x: int) -> int:
    """Value of ``p`` at the integer ``x`` (Horner)."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Newton's identities: coefficients <-> power sums of roots

def power_sums(p: Sequence[int], q_max: int) -> list:
    """Power sums ``S_0 .. S_q_max`` of the roots of a monic polynomial.

    ``S_q`` is the sum of q-th powers of the roots of ``p`` counted with
    multiplicity, computed purely from the coefficients by Newton's
    identities; every value is an integer.  ``S_0`` equals the degree.
    """
    p = trim(p)
    if len(p) < 2 or p[-1] != 1:
        raise NotMonicError("power sums require a monic polynomial of degree >= 1")
    if q_max < 0:
        raise ValueError("q_max must be >= 0")
    n = len(p) - 1
    s = [n]
    for q in range(1, q_max + 1):
        j = min(q - 1, n)
        # sum of a[n-j]*s[q-j] for j = 1..jmax, slices aligned in reverse
        acc = sum(map(mul, p[n - j : n], s[q - j : q]))
        if q <= n:
            acc += q * p[n - q]
        s.append(-acc)
    return s


def coeffs_from_power_sums(s: Sequence[int], n_degree: int) -> IntPoly:
    """Monic polynomial of degree ``n_degree`` with root power sums ``s[1..n_degree]``.

    ``s[q]`` must hold ``S_q`` for ``1 <= q <= n_degree``; ``s[0]`` is ignored.
    Inverts Newton's identities, asserting that every division by the step
    index is exact; raises ``InexactDivisionError`` otherwise (the input was
    not the power-sum sequence of a monic integer polynomial).
    """
    if n_degree < 1:
        raise ValueError("degree must be >= 1")
    if len(s) < n_degree + 1:
        raise ValueError("need power sums S_1 .. S_%d" % n_degree)
    n = n_degree
    a = [0] * (n + 1)
    a[n] = 1
    for step in range(1, n + 1):
        acc = sum(map(mul, a[n - step + 1 : n + 1], s[1 : step + 1]))
        coeff, res = divmod(-acc, step)
        if res:
            raise InexactDivisionError(
                "power sums do not come from a monic integer polynomial"
            )
        a[n - step] = coeff
    return a


# ---------------------------------------------------------------------------
# rendering

def poly_str(p: Sequence[int], var: str = "X", max_terms: int | None = None) -> str:
    """Human-readable rendering, highest degree first.

    With ``max_terms`` set, long polynomials are elided in the middle.
    """
    p = trim(p)
    if not p:
        return "0"
    terms = []
    for j in range(len(p) - 1, -1, -1):
        c = p[j]
        if c == 0:
            continue
        if j == 0:
            body = str(abs(c))
        else:
            mono = var if j == 1 else "%s^%d" % (var, j)
            body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
        terms.append(("-" if c < 0 else "+", body))
    if max_terms is not None and len(terms) > max_terms:
        keep = max_terms // 2
        elided = len(terms) - 2 * keep
        terms = terms[:keep] + [("+", "... (%d terms elided)" % elided)] + terms[-keep:]
    sign, body = terms[0]
    out = [body if sign == "+" else "-" + body]
    for sign, body in terms[1:]:
        out.append(" %s %s" % (sign, body))
    return "".join(out)
