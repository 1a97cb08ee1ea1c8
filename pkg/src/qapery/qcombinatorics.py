"""q-integers, q-factorials, q-binomials, q-Pochhammer and q-harmonic sums.

The Gaussian binomial is available through three independent routes that
must agree (and are tested to): the factorial quotient definition, the
Pascal-type recurrence, and the square-free product of cyclotomic
polynomials Phi_d over d with floor(n/d) - floor(k/d) - floor((n-k)/d) = 1.
The cyclotomic product is the cached fast path used throughout the package.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

from .cyclotomic import Modulus, cyclotomic, reduce_mod
from .laurent import LaurentPoly, RationalFunctionQ, exact_div, q_power
from .reports import CongruenceReport, PreconditionError, finish_report

Q_BINOMIAL_METHODS = ("factorial", "pascal", "cyclotomic")


def binom(n: int, k: int) -> int:
    """Ordinary binomial with zero-extension outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def q_integer(n: int) -> LaurentPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_integer requires n >= 0")
    return LaurentPoly({e: 1 for e in range(n)})


_QFACT = [LaurentPoly.one()]


def q_factorial(n: int) -> LaurentPoly:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q; [0]_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    while len(_QFACT) <= n:
        m = len(_QFACT)
        _QFACT.append(_QFACT[m - 1] * q_integer(m))
    return _QFACT[n]


def qbin_cyclotomic_support(n: int, k: int) -> set:
    """The d in [2, n] whose Phi_d divides the Gaussian binomial (n, k)."""
    if not (0 <= k <= n):
        raise ValueError("qbin_cyclotomic_support requires 0 <= k <= n")
    return {
        d for d in range(2, n + 1)
        if n // d - k // d - (n - k) // d == 1
    }


_QBIN_CACHE = {}
_PASCAL_CACHE = {}


def _qbin_cyclotomic(n: int, k: int) -> LaurentPoly:
    key = (n, k)
    cached = _QBIN_CACHE.get(key)
    if cached is None:
        cached = LaurentPoly.one()
        for d in sorted(qbin_cyclotomic_support(n, k)):
            cached = cached * cyclotomic(d)
        _QBIN_CACHE[key] = cached
    return cached


def _qbin_pascal(n: int, k: int) -> LaurentPoly:
    if k == 0 or k == n:
        return LaurentPoly.one()
    key = (n, k)
    cached = _PASCAL_CACHE.get(key)
    if cached is None:
        cached = _qbin_pascal(n - 1, k - 1) + q_power(k) * _qbin_pascal(n - 1, k)
        _PASCAL_CACHE[key] = cached
    return cached


def q_binomial(n: int, k: int, method: str = "cyclotomic") -> LaurentPoly:
    """The Gaussian binomial coefficient; 0 outside 0 <= k <= n.

    A self-reciprocal polynomial of degree k(n-k) with integer
    coefficients.  All methods return identical polynomials; "cyclotomic"
    is memoized and is the default.
    """
    if n < 0:
        raise ValueError("q_binomial requires n >= 0")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    if method == "cyclotomic":
        return _qbin_cyclotomic(n, k)
    if method == "pascal":
        return _qbin_pascal(n, k)
    if method == "factorial":
        return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))
    raise ValueError("unknown q-binomial method %r" % (method,))


def qbin(n: int, k: int) -> LaurentPoly:
    """Cached Gaussian binomial (the cyclotomic-product fast path)."""
    if k < 0 or k > n or n < 0:
        return LaurentPoly.zero()
    return _qbin_cyclotomic(n, k)


_QBIN_POW_CACHE = {}


def qbin_pow(n: int, k: int, e: int) -> LaurentPoly:
    """Cached e-th power of the Gaussian binomial (n, k)."""
    if e == 0:
        return LaurentPoly.one()
    if k < 0 or k > n or n < 0:
        return LaurentPoly.zero()
    key = (n, k, e)
    cached = _QBIN_POW_CACHE.get(key)
    if cached is None:
        cached = qbin(n, k) ** e
        _QBIN_POW_CACHE[key] = cached
    return cached


def q_pochhammer(a_exponent: int, n: int, inverted_base: bool = False) -> LaurentPoly:
    """(q^a; q)_n, or (q^a; q^-1)_n when inverted_base is set.

    The product (1 - q^a)(1 - q^(a+s)) ... (1 - q^(a+(n-1)s)) with step
    s = 1 (s = -1 inverted); the empty product for n = 0 is 1.
    """
    if n < 0:
        raise ValueError("q_pochhammer requires n >= 0")
    step = -1 if inverted_base else 1
    out = LaurentPoly.one()
    for i in range(n):
        out = out * (1 - q_power(a_exponent + step * i))
    return out


def q_harmonic(n: int, inverted_base: bool = False) -> RationalFunctionQ:
    """H_q(n) = sum over 1 <= k <= n of 1/[k]_q, as a rational function.

    With inverted_base, H_{1/q}(n): since [k]_{1/q} = q^(1-k) [k]_q, each
    summand becomes q^(k-1)/[k]_q.
    """
    if n < 0:
        raise ValueError("q_harmonic requires n >= 0")
    total = RationalFunctionQ.zero()
    for k in range(1, n + 1):
        num = q_power(k - 1) if inverted_base else LaurentPoly.one()
        total = total + RationalFunctionQ(num, q_integer(k))
    return total


def check_q_lucas(n: int, a: int, b: int, r: int, s: int) -> CongruenceReport:
    """Lucas-type congruence for Gaussian binomials modulo Phi_n(q):

        C(a*n + b, r*n + s)_q == C(a, r) * C(b, s)_q   (mod Phi_n)

    for nonnegative a, b, r, s with b, s < n.
    """
    started = time.perf_counter()
    params = {"n": n, "a": a, "b": b, "r": r, "s": s}
    if n < 1:
        raise PreconditionError("q-Lucas requires n >= 1")
    if min(a, b, r, s) < 0 or b >= n or s >= n:
        raise PreconditionError("q-Lucas requires 0 <= b, s < n and a, r >= 0")
    mod = Modulus(n, 1)
    lhs = qbin(a * n + b, r * n + s)
    rhs = binom(a, r) * qbin(b, s)
    residue = reduce_mod(lhs - rhs, mod)
    holds = residue.is_zero()
    return finish_report(
        "lucas", params, str(mod), holds, started,
        residue_at_one=residue(1),
        first_residue_coeff=None if holds else Fraction(residue.coefficient(residue.min_degree())),
    )


def _compositions(total: int, parts: int, cap: int):
    """All tuples of `parts` entries in [0, cap] summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = max(0, total - cap * (parts - 1))
    hi = min(cap, total)
    for c in range(lo, hi + 1):
        for rest in _compositions(total - c, parts - 1, cap):
            yield (c,) + rest


def check_q_chu_vandermonde(a: int, b: int, n: int) -> CongruenceReport:
    """Convolution expansion of C(a*n, b*n)_q as an exact identity:

        C(a*n, b*n)_q == sum over c_1 + ... + c_a = b*n of
            q^(n * sum (i-1) c_i - sum_{i<j} c_i c_j) * prod C(n, c_i)_q
    """
    started = time.perf_counter()
    params = {"a": a, "b": b, "n": n}
    if a < 2 or b < 0 or n < 1:
        raise PreconditionError("convolution check requires a >= 2, b >= 0, n >= 1")
    if b * n > a * n:
        raise PreconditionError("convolution check requires b*n <= a*n")
    total = LaurentPoly.zero()
    for comp in _compositions(b * n, a, n):
        e = n * sum(i * c for i, c in enumerate(comp))
        e -= sum(comp[i] * comp[j] for i in range(a) for j in range(i + 1, a))
        term = q_power(e)
        for c in comp:
            term = term * qbin(n, c)
        total = total + term
    diff = qbin(a * n, b * n) - total
    holds = diff.is_zero()
    return finish_report(
        "chu-vandermonde", params, "identity", holds, started,
        residue_at_one=diff(1),
        first_residue_coeff=None if holds else Fraction(diff.coefficient(diff.min_degree())),
    )
