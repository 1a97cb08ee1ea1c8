"""Named checkers for every congruence and identity handled by the package.

Each checker recomputes both sides of one parameterized statement from the
arithmetic primitives (never reusing another checker's intermediates),
reduces the difference modulo the stated power of a cyclotomic polynomial
(or tests exact vanishing, for identities), and returns a CongruenceReport.
Statements involving 1/[j]_q are verified twice: a multiplied-through
polynomial form is the primary route and a modular-inverse form is the
cross-check, since invertibility of [j]_q modulo Phi_m is itself part of
the claim.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .cyclotomic import Modulus, inverse_mod, reduce_mod
from .laurent import LaurentPoly, RationalFunctionQ, q_power
from .qcombinatorics import (
    binom,
    check_q_chu_vandermonde,
    check_q_lucas,
    q_harmonic,
    q_integer,
    qbin,
    qbin_pow,
)
from .reports import CongruenceReport, PreconditionError, finish_report
from .sequences import (
    almkvist_zudilin,
    apery,
    apery_lambda_mu,
    apery_q_krz_binform,
    apery_q_lambda_mu,
    apery_q_multivariate,
    correction_R_lambda_mu,
    correction_R_multivariate,
    get_alpha,
)


def _finish_poly(name, params, residues, mod, started):
    """Report builder for a conjunction of polynomial congruences."""
    bad = next((r for r in residues if not r.is_zero()), None)
    holds = bad is None
    return finish_report(
        name, params, str(mod), holds, started,
        residue_at_one=Fraction(0) if holds else bad(1),
        first_residue_coeff=None if holds else Fraction(bad.coefficient(bad.min_degree())),
    )


def check_ljunggren_q(n: int, a: int, b: int) -> CongruenceReport:
    """Cube-modulus binomial congruence

        C(a*n, b*n)_q == C(a, b)_{q^(n^2)}
                         - (a-b) b C(a,b) (n^2-1)/24 (q^n - 1)^2   (mod Phi_n^3).
    """
    started = time.perf_counter()
    params = {"n": n, "a": a, "b": b}
    if n < 1 or a < 0 or b < 0:
        raise PreconditionError("requires n >= 1 and a, b >= 0")
    mod = Modulus(n, 3)
    lhs = qbin(a * n, b * n)
    rhs = qbin(a, b).substitute_power(n * n)
    coeff = Fraction((a - b) * b * binom(a, b) * (n * n - 1), 24)
    if coeff:
        rhs = rhs - coeff * (q_power(n) - 1) ** 2
    return _finish_poly("ljunggren", params, [reduce_mod(lhs - rhs, mod)], mod, started)


def check_wolstenholme_q(n: int) -> CongruenceReport:
    """Central binomial congruence modulo Phi_n^3, in both stated forms:

        C(2n, n)_q == [2]_{q^(n^2)} - (n^2-1)/12 (q^n - 1)^2
        C(2n, n)_q == 2 + n (q^n - 1) + (n-1)(5n-1)/12 (q^n - 1)^2

    together with the equivalence of the two right-hand sides.
    """
    started = time.perf_counter()
    params = {"n": n}
    if n < 1:
        raise PreconditionError("requires n >= 1")
    mod = Modulus(n, 3)
    lhs = qbin(2 * n, n)
    qn1sq = (q_power(n) - 1) ** 2
    rhs_x = q_integer(2).substitute_power(n * n) - Fraction(n * n - 1, 12) * qn1sq
    rhs_x2 = (
        LaurentPoly.constant(2)
        + n * (q_power(n) - 1)
        + Fraction((n - 1) * (5 * n - 1), 12) * qn1sq
    )
    residues = [
        reduce_mod(lhs - rhs_x, mod),
        reduce_mod(lhs - rhs_x2, mod),
        reduce_mod(rhs_x - rhs_x2, mod),
    ]
    return _finish_poly("wolstenholme-q", params, residues, mod, started)


def _q_integer_cofactors(n):
    """[i]_q for 0 < i < n, their product D, and the cofactors D/[i]_q."""
    ints = [q_integer(i) for i in range(1, n)]
    count = len(ints)
    prefix = [LaurentPoly.one()]
    for p in ints:
        prefix.append(prefix[-1] * p)
    suffix = [LaurentPoly.one()] * (count + 1)
    for i in range(count - 1, -1, -1):
        suffix[i] = ints[i] * suffix[i + 1]
    cofactors = [prefix[i] * suffix[i + 1] for i in range(count)]
    return ints, prefix[-1], cofactors


def check_harmonic_sp(n: int, which: str) -> CongruenceReport:
    """Harmonic-sum congruences over 0 < i < n (and 0 < i < j < n):

        sp1:  sum 1/[i]_q   == -(n-1)/2 (q-1) + (n^2-1)/24 (q-1)^2 [n]_q  (mod Phi_n^2)
        sp2:  sum 1/[i]_q^2 == -(n-1)(n-5)/12 (q-1)^2                     (mod Phi_n)
        sp3:  sum_{i<j} 1/([i]_q [j]_q) == (n-1)(n-2)/6 (q-1)^2           (mod Phi_n)

    Verified in multiplied-through form and, as a cross-check, with
    explicit modular inverses of the [i]_q.
    """
    started = time.perf_counter()
    params = {"n": n, "which": which}
    if which not in ("sp1", "sp2", "sp3"):
        raise PreconditionError("which must be one of sp1, sp2, sp3")
    if n < 2:
        raise PreconditionError("requires n >= 2")
    qm1 = q_power(1) - 1
    if which == "sp1":
        mod = Modulus(n, 2)
        rhs = -Fraction(n - 1, 2) * qm1 + Fraction(n * n - 1, 24) * qm1 ** 2 * q_integer(n)
    elif which == "sp2":
        mod = Modulus(n, 1)
        rhs = -Fraction((n - 1) * (n - 5), 12) * qm1 ** 2
    else:
        mod = Modulus(n, 1)
        rhs = Fraction((n - 1) * (n - 2), 6) * qm1 ** 2

    ints, product, cofactors = _q_integer_cofactors(n)
    if which == "sp1":
        primary = reduce_mod(sum(cofactors, LaurentPoly.zero()) - rhs * product, mod)
    elif which == "sp2":
        lhs = sum((c * c for c in cofactors), LaurentPoly.zero())
        primary = reduce_mod(lhs - rhs * product ** 2, mod)
    else:
        p1 = sum(cofactors, LaurentPoly.zero())
        p2 = sum((c * c for c in cofactors), LaurentPoly.zero())
        lhs = Fraction(1, 2) * (p1 * p1 - p2)
        primary = reduce_mod(lhs - rhs * product ** 2, mod)

    inverses = [inverse_mod(p, mod) for p in ints]
    if which == "sp1":
        cross = reduce_mod(sum(inverses, LaurentPoly.zero()) - rhs, mod)
    elif which == "sp2":
        cross = reduce_mod(sum((h * h for h in inverses), LaurentPoly.zero()) - rhs, mod)
    else:
        h1 = sum(inverses, LaurentPoly.zero())
        h2 = sum((h * h for h in inverses), LaurentPoly.zero())
        cross = reduce_mod(Fraction(1, 2) * (h1 * h1 - h2) - rhs, mod)
    return _finish_poly("harmonic-sp", params, [primary, cross], mod, started)


def check_qbin_prop(m: int, n: int, k: int, j: int) -> CongruenceReport:
    """Residue-class binomial congruence modulo Phi_m^2 (0 < j < m):

        C(m*n, m*k + j)_q == (-1)^(j-1) q^((j-1)(2m-j)/2) [mn]_q / [j]_q * C(n-1, k).

    Primary form clears the denominator; the cross-check uses the modular
    inverse of [j]_q, which exists since j < m.
    """
    started = time.perf_counter()
    params = {"m": m, "n": n, "k": k, "j": j}
    if not (0 < j < m):
        raise PreconditionError("requires 0 < j < m")
    if n < 0 or k < 0:
        raise PreconditionError("requires n, k >= 0")
    exponent2 = (j - 1) * (2 * m - j)
    assert exponent2 % 2 == 0
    mod = Modulus(m, 2)
    sign = -1 if (j - 1) % 2 else 1
    base = sign * q_power(exponent2 // 2) * q_integer(m * n) * binom(n - 1, k)
    lhs = qbin(m * n, m * k + j)
    primary = reduce_mod(q_integer(j) * lhs - base, mod)
    cross = reduce_mod(lhs - base * inverse_mod(q_integer(j), mod), mod)
    return _finish_poly("qbin-prop", params, [primary, cross], mod, started)


def check_main_theorem(m: int, n, alpha="ksq") -> CongruenceReport:
    """Four-index supercongruence modulo Phi_m^3:

        A_q(m*n) == A_{q^(m^2)}(n) - (m^2-1)/12 (q^m - 1)^2 R(n)

    with A_q the alpha-weighted q-sum and R(n) = (n1 n2 + n3 n4)/2 * A(n).
    """
    started = time.perf_counter()
    n = tuple(n)
    alpha = get_alpha(alpha)
    params = {"m": m, "n1": n[0], "n2": n[1], "n3": n[2], "n4": n[3], "alpha": alpha.name}
    if m < 1 or any(ni < 0 for ni in n):
        raise PreconditionError("requires m >= 1 and nonnegative indices")
    mod = Modulus(m, 3)
    lhs = apery_q_multivariate(tuple(m * ni for ni in n), alpha)
    rhs = apery_q_multivariate(n, alpha).substitute_power(m * m)
    coeff = Fraction(m * m - 1, 12) * correction_R_multivariate(n)
    if coeff:
        rhs = rhs - coeff * (q_power(m) - 1) ** 2
    return _finish_poly("main", params, [reduce_mod(lhs - rhs, mod)], mod, started)


def check_corollary(m: int, n: int) -> CongruenceReport:
    """Single-index specialization of the main congruence, modulo Phi_m^3:

        A_q(m*n) == A_{q^(m^2)}(n) - (m^2-1)/12 (q^m - 1)^2 n^2 A(n)

    with A_q(n) the binomial-form q-analog.
    """
    started = time.perf_counter()
    params = {"m": m, "n": n}
    if m < 1 or n < 0:
        raise PreconditionError("requires m >= 1 and n >= 0")
    mod = Modulus(m, 3)
    lhs = apery_q_krz_binform(m * n)
    rhs = apery_q_krz_binform(n).substitute_power(m * m)
    coeff = Fraction(m * m - 1, 12) * n * n * apery(n)
    if coeff:
        rhs = rhs - coeff * (q_power(m) - 1) ** 2
    return _finish_poly("corollary", params, [reduce_mod(lhs - rhs, mod)], mod, started)


def check_generalized_theorem(m: int, n: int, lam: int, mu: int, alpha="ksq") -> CongruenceReport:
    """(lambda, mu)-family supercongruence modulo Phi_m^3:

        A_q(m*n) == A_{q^(m^2)}(n) - (m^2-1)/12 (q^m - 1)^2 R^(lambda,mu)(n).
    """
    started = time.perf_counter()
    alpha = get_alpha(alpha)
    params = {"m": m, "n": n, "lambda": lam, "mu": mu, "alpha": alpha.name}
    if m < 1 or n < 0:
        raise PreconditionError("requires m >= 1 and n >= 0")
    if lam < 2 or mu < 0:
        raise PreconditionError("requires lambda >= 2 and mu >= 0")
    mod = Modulus(m, 3)
    lhs = apery_q_lambda_mu(m * n, lam, mu, alpha)
    rhs = apery_q_lambda_mu(n, lam, mu, alpha).substitute_power(m * m)
    coeff = Fraction(m * m - 1, 12) * correction_R_lambda_mu(n, lam, mu)
    if coeff:
        rhs = rhs - coeff * (q_power(m) - 1) ** 2
    return _finish_poly("generalized", params, [reduce_mod(lhs - rhs, mod)], mod, started)


def _weighted_summand(nt, k, alpha):
    term = (
        qbin(nt[0], k) * qbin(nt[2], k)
        * qbin(nt[0] + nt[1] - k, nt[0]) * qbin(nt[2] + nt[3] - k, nt[2])
    )
    if term.is_zero():
        return term
    return q_power(alpha(nt, k)) * term


def check_s1_s2_decomposition(m: int, n, alpha="ksq") -> CongruenceReport:
    """Proof-level decomposition of the four-index congruence.

    Splits A_q(m*n) into the k == 0 (mod m) part S1 and the rest S2 and
    verifies: the split is exact; S1 matches the substituted sum with
    correction sum_k ((n1 n2 + n3 n4)/2 - k^2) C(n; k); and S2 collapses to
    -(m^2-1)/12 (q^m - 1)^2 sum_k k^2 C(n; k); all modulo Phi_m^3.
    """
    started = time.perf_counter()
    n = tuple(n)
    alpha = get_alpha(alpha)
    params = {"m": m, "n1": n[0], "n2": n[1], "n3": n[2], "n4": n[3], "alpha": alpha.name}
    if m < 1 or any(ni < 0 for ni in n):
        raise PreconditionError("requires m >= 1 and nonnegative indices")
    mod = Modulus(m, 3)
    mn = tuple(m * ni for ni in n)
    kmax = min(mn[0], mn[2])
    s1 = LaurentPoly.zero()
    s2 = LaurentPoly.zero()
    for k in range(kmax + 1):
        term = _weighted_summand(mn, k, alpha)
        if k % m == 0:
            s1 = s1 + term
        else:
            s2 = s2 + term

    split_residue = apery_q_multivariate(n=mn, alpha=alpha) - (s1 + s2)

    c_weights = [
        binom(n[0], k) * binom(n[2], k)
        * binom(n[0] + n[1] - k, n[0]) * binom(n[2] + n[3] - k, n[2])
        for k in range(min(n[0], n[2]) + 1)
    ]
    half = Fraction(n[0] * n[1] + n[2] * n[3], 2)
    r1 = sum((half - k * k) * c for k, c in enumerate(c_weights))
    k2sum = sum(k * k * c for k, c in enumerate(c_weights))

    qm1sq = (q_power(m) - 1) ** 2
    factor = Fraction(m * m - 1, 12)
    rhs1 = apery_q_multivariate(n, alpha).substitute_power(m * m)
    if factor * r1:
        rhs1 = rhs1 - factor * r1 * qm1sq
    rhs2 = LaurentPoly.zero()
    if factor * k2sum:
        rhs2 = rhs2 - factor * k2sum * qm1sq

    residues = [
        split_residue,
        reduce_mod(s1 - rhs1, mod),
        reduce_mod(s2 - rhs2, mod),
    ]
    return _finish_poly("s1s2", params, residues, mod, started)


def check_harmonic_identity_classical(n: int) -> CongruenceReport:
    """Exact rational identity

        sum_{k=1}^n C(n,k)^2 C(n+k,k)^2 (1 + 2k H_{n+k} + 2k H_{n-k} - 4k H_k) = 0.
    """
    started = time.perf_counter()
    params = {"n": n}
    if n < 1:
        raise PreconditionError("requires n >= 1")
    harmonic = [Fraction(0)]
    for i in range(1, 2 * n + 1):
        harmonic.append(harmonic[-1] + Fraction(1, i))
    total = Fraction(0)
    for k in range(1, n + 1):
        weight = 1 + 2 * k * harmonic[n + k] + 2 * k * harmonic[n - k] - 4 * k * harmonic[k]
        total += binom(n, k) ** 2 * binom(n + k, k) ** 2 * weight
    holds = total == 0
    return finish_report(
        "harmonic-classical", params, "identity", holds, started,
        residue_at_one=total,
        first_residue_coeff=None if holds else total,
    )


def check_zheng_identity(n: int) -> CongruenceReport:
    """Exact vanishing of the q-harmonic combination

        sum_k q^(k(k-2n)) C(n,k)_q^2 C(n+k,k)_q^2
              (2 H_q(k) - H_q(n+k) - q H_{1/q}(n-k)) = 0

    as a rational function of q.
    """
    started = time.perf_counter()
    params = {"n": n}
    if n < 1:
        raise PreconditionError("requires n >= 1")
    total = RationalFunctionQ.zero()
    for k in range(n + 1):
        poly = q_power(k * (k - 2 * n)) * qbin_pow(n, k, 2) * qbin_pow(n + k, k, 2)
        bracket = (
            2 * q_harmonic(k)
            - q_harmonic(n + k)
            - q_power(1) * q_harmonic(n - k, inverted_base=True)
        )
        total = total + RationalFunctionQ(poly) * bracket
    holds = total.is_zero()
    residue = Fraction(0)
    if not holds:
        try:
            residue = Fraction(total.numerator(1)) / Fraction(total.denominator(1))
        except ZeroDivisionError:
            residue = total.numerator(1)
    return finish_report(
        "zheng-identity", params, "identity", holds, started,
        residue_at_one=residue,
        first_residue_coeff=None if holds else Fraction(
            total.numerator.coefficient(total.numerator.min_degree())),
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_classical_supercongruences(p: int, n: int, family: str,
                                     lam: int = None, mu: int = None) -> CongruenceReport:
    """Integer supercongruences F(p*n) == F(n) (mod p^3) for the families

        apery (p >= 5), lambda-mu (p >= 5, given lambda >= 2 and mu >= 0),
        and almkvist-zudilin (p >= 3).
    """
    started = time.perf_counter()
    params = {"p": p, "n": n, "family": family}
    if family not in ("apery", "lambda-mu", "almkvist-zudilin"):
        raise PreconditionError("unknown family %r" % (family,))
    if not _is_prime(p):
        raise PreconditionError("p must be prime")
    if n < 1:
        raise PreconditionError("requires n >= 1")
    if family == "apery":
        if p < 5:
            raise PreconditionError("apery family requires p >= 5")
        big, small = apery(p * n), apery(n)
    elif family == "lambda-mu":
        if lam is None or mu is None:
            raise PreconditionError("lambda-mu family requires lambda and mu")
        if lam < 2 or mu < 0:
            raise PreconditionError("requires lambda >= 2 and mu >= 0")
        if p < 5:
            raise PreconditionError("lambda-mu family requires p >= 5")
        params.update({"lambda": lam, "mu": mu})
        big, small = apery_lambda_mu(p * n, lam, mu), apery_lambda_mu(n, lam, mu)
    else:
        if p < 3:
            raise PreconditionError("almkvist-zudilin family requires p >= 3")
        big, small = almkvist_zudilin(p * n), almkvist_zudilin(n)
    residue = (big - small) % p ** 3
    holds = residue == 0
    return finish_report(
        "classical-sc", params, "%d^3" % p, holds, started,
        residue_at_one=Fraction(residue),
        first_residue_coeff=None if holds else Fraction(residue),
    )


# ---------------------------------------------------------------------------
# registry for the CLI and sweeps
# ---------------------------------------------------------------------------

class CheckSpec:
    """CLI-facing description of one checker: flat integer/choice params."""

    __slots__ = ("name", "fn", "int_params", "choice_params", "optional_int_params",
                 "alpha_arity", "summary")

    def __init__(self, name, fn, int_params, choice_params=None,
                 optional_int_params=(), alpha_arity=None, summary=""):
        self.name = name
        self.fn = fn
        self.int_params = tuple(int_params)
        self.choice_params = dict(choice_params or {})
        self.optional_int_params = tuple(optional_int_params)
        self.alpha_arity = alpha_arity
        self.summary = summary


def _main_adapter(m, n1, n2, n3, n4, alpha="ksq"):
    return check_main_theorem(m, (n1, n2, n3, n4), alpha)


def _s1s2_adapter(m, n1, n2, n3, n4, alpha="ksq"):
    return check_s1_s2_decomposition(m, (n1, n2, n3, n4), alpha)


def _generalized_adapter(m, n, alpha="ksq", **kw):
    return check_generalized_theorem(m, n, kw["lambda"], kw["mu"], alpha)


def _classical_adapter(p, n, family, **kw):
    return check_classical_supercongruences(p, n, family, kw.get("lambda"), kw.get("mu"))


def _alpha_names():
    from .sequences import list_alphas
    return [a.name for a in list_alphas()]


CHECKS = {}


def _register(spec: CheckSpec):
    CHECKS[spec.name] = spec
    return spec


_register(CheckSpec(
    "ljunggren", check_ljunggren_q, ("n", "a", "b"),
    summary="C(an,bn)_q vs C(a,b)_{q^(n^2)} with quadratic correction, mod Phi(n)^3"))
_register(CheckSpec(
    "wolstenholme-q", check_wolstenholme_q, ("n",),
    summary="central binomial C(2n,n)_q congruence, both forms, mod Phi(n)^3"))
_register(CheckSpec(
    "harmonic-sp", check_harmonic_sp, ("n",),
    choice_params={"which": ["sp1", "sp2", "sp3"]},
    summary="q-harmonic sum congruences mod Phi(n)^2 / Phi(n)"))
_register(CheckSpec(
    "lucas", check_q_lucas, ("n", "a", "b", "r", "s"),
    summary="C(an+b, rn+s)_q vs C(a,r) C(b,s)_q mod Phi(n)"))
_register(CheckSpec(
    "chu-vandermonde", check_q_chu_vandermonde, ("a", "b", "n"),
    summary="convolution expansion of C(an,bn)_q as an exact identity"))
_register(CheckSpec(
    "qbin-prop", check_qbin_prop, ("m", "n", "k", "j"),
    summary="C(mn, mk+j)_q residue-class congruence mod Phi(m)^2"))
_register(CheckSpec(
    "main", _main_adapter, ("m", "n1", "n2", "n3", "n4"),
    choice_params={"alpha": None}, alpha_arity=4,
    summary="four-index weighted q-sum supercongruence mod Phi(m)^3"))
_register(CheckSpec(
    "corollary", check_corollary, ("m", "n"),
    summary="single-index q-Apery supercongruence mod Phi(m)^3"))
_register(CheckSpec(
    "generalized", _generalized_adapter, ("m", "n", "lambda", "mu"),
    choice_params={"alpha": None}, alpha_arity=1,
    summary="(lambda,mu)-family supercongruence mod Phi(m)^3"))
_register(CheckSpec(
    "s1s2", _s1s2_adapter, ("m", "n1", "n2", "n3", "n4"),
    choice_params={"alpha": None}, alpha_arity=4,
    summary="proof decomposition: exact split plus S1/S2 congruences"))
_register(CheckSpec(
    "harmonic-classical", check_harmonic_identity_classical, ("n",),
    summary="classical harmonic-sum identity summing to exactly zero"))
_register(CheckSpec(
    "zheng-identity", check_zheng_identity, ("n",),
    summary="q-harmonic identity vanishing as a rational function"))
_register(CheckSpec(
    "classical-sc", _classical_adapter, ("p", "n"),
    choice_params={"family": ["apery", "lambda-mu", "almkvist-zudilin"]},
    optional_int_params=("lambda", "mu"),
    summary="integer supercongruences F(pn) == F(n) mod p^3"))


def run_named_check(name: str, params: dict) -> CongruenceReport:
    """Run one registered check on a flat parameter dict."""
    spec = CHECKS.get(name)
    if spec is None:
        raise KeyError("unknown check %r (known: %s)" % (name, ", ".join(sorted(CHECKS))))
    return spec.fn(**params)
