"""Telescoping certificates and their verification.

A certificate F for a summand t(k) satisfies t(k) = F(k+1) - F(k), so
sum_{k=1}^n t(k) = F(n+1) - F(1).  Certificates are stored as data (a list
of terms c * p(k) * q(x) * a_{k-i} * b_{k-j}) so that a single coefficient
can be inspected or altered.

Bindings a_k, b_k may depend on the upper limit n through a sign
(-1)^(n-k).  Indices below a binding's domain (D_{-1}, s_0) are never read
while checking k >= 1; they only occur in F(1) with a vanishing factor,
and F(1) is evaluated twice with those values substituted by 0 and by 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from time import perf_counter
from typing import Callable

from ..polynomials import ONE_PLUS_2X, X2_PLUS_X, IntPoly
from .claims import D, s, s_poly, sign, theorem_1_3_sum
from .report import FAIL, PASS, VerificationReport
from .sweep import mismatch

K = IntPoly((0, 1))  # polynomial in the summation index k
ONE = IntPoly((1,))


class OutOfDomain(LookupError):
    pass


@dataclass(frozen=True)
class Binding:
    """A sequence a_k used by a certificate."""

    name: str
    value: Callable[[int, int], object]  # (n, k) -> int | IntPoly
    min_index: int
    alternating: bool = False  # carries the sign (-1)^(n-k)

    def __call__(self, n, k, probe=None):
        if k < self.min_index:
            if probe is None:
                raise OutOfDomain(f"{self.name} at k = {k}")
            return probe
        return self.value(n, k)


@dataclass(frozen=True)
class Term:
    """coeff * k_poly(k) * x_poly(x) * a_{k - a_shift} * b_{k - b_shift}"""

    coeff: Fraction
    k_poly: IntPoly
    a_shift: int = 0
    b_shift: int = 0
    x_poly: IntPoly = ONE


@dataclass(frozen=True)
class CertificateSpec:
    id: str
    claim_id: str
    a: Binding
    b: Binding
    summand: Term
    terms: tuple[Term, ...]
    scale: int  # multiplying every coefficient by this makes them integers
    polynomial: bool = False
    boundary_identity: Callable | None = None
    closed_forms: Callable | None = field(default=None, compare=False)

    def with_coefficient(self, index: int, coeff) -> "CertificateSpec":
        """Copy with term ``index`` given a new rational coefficient."""
        terms = list(self.terms)
        terms[index] = replace(terms[index], coeff=Fraction(coeff))
        return replace(self, terms=tuple(terms))


def _eval_term(spec, term, n, k, factor, probe=None):
    c = term.coeff * factor
    kp = term.k_poly(k)
    a = spec.a(n, k - term.a_shift, probe)
    b = spec.b(n, k - term.b_shift, probe)
    v = c * kp * a * b
    if term.x_poly != ONE:
        v = term.x_poly * v
    return v


def _as_exact(v, integral):
    if integral and isinstance(v, Fraction):
        if v.denominator != 1:
            raise ArithmeticError("scaled certificate produced a fraction")
        return v.numerator
    if integral and not isinstance(v, (int, IntPoly)):
        return v.to_int()
    return v


def certificate_value(spec: CertificateSpec, n: int, k: int, scaled=False, probe=None):
    """F(k) for the bindings at upper limit ``n``.

    ``scaled=True`` multiplies F by ``spec.scale`` and keeps the arithmetic
    in Z or Z[x].
    """
    factor = spec.scale if scaled else 1
    total = 0
    for t in spec.terms:
        total = total + _eval_term(spec, t, n, k, factor, probe)
    return _as_exact(total, scaled)


def summand_value(spec: CertificateSpec, n: int, k: int, scaled=False):
    factor = spec.scale if scaled else 1
    return _as_exact(_eval_term(spec, spec.summand, n, k, factor) + 0, scaled)


def _eq(u, v):
    return (u - v) == 0


def certificate_instance(spec: CertificateSpec, n: int, k: int, scaled=False, cache=None):
    """None if t(k) = F(k+1) - F(k), else a mismatch dict."""

    def F(i):
        if cache is not None and i in cache:
            return cache[i]
        v = certificate_value(spec, n, i, scaled)
        if cache is not None:
            cache[i] = v
        return v

    lhs = summand_value(spec, n, k, scaled)
    rhs = F(k + 1) - F(k) if k > 1 else F(2) - boundary_value(spec, n, scaled)
    return None if _eq(lhs, rhs) else mismatch("TelescopeMismatch", lhs, rhs)


def boundary_value(spec, n, scaled=False):
    """F(1), which must not depend on out-of-domain sequence values.

    Raises ``ArithmeticError`` when the probes 0 and 1 disagree.
    """
    v0 = certificate_value(spec, n, 1, scaled, probe=0)
    v1 = certificate_value(spec, n, 1, scaled, probe=1)
    if not _eq(v0, v1):
        raise ArithmeticError(f"{spec.id}: F(1) depends on out-of-domain values")
    return v0


def boundary_instance(spec, n, scaled=False):
    try:
        v = boundary_value(spec, n, scaled)
    except ArithmeticError as e:
        return mismatch("NonzeroF1", str(e), 0)
    if not _eq(v, 0):
        return mismatch("NonzeroF1", v, 0)
    if spec.boundary_identity is not None:
        w = spec.boundary_identity(lambda i: spec.a(n, i), lambda i: spec.b(n, i))
        if not _eq(w, 0):
            return mismatch("NonzeroF1", w, 0, note="boundary factor")
    return None


def _closed_form_failure(spec, n):
    if spec.closed_forms is None:
        return None
    for label, lhs, rhs in spec.closed_forms(n):
        if not _eq(lhs, rhs):
            return mismatch(f"closed form: {label}", lhs, rhs)
    return None


def _step(spec, n, k, scaled, cache):
    """Telescoping at (n, k); k = 1 also checks the boundary F(1) = 0."""
    if k == 1:
        bad = boundary_instance(spec, n, scaled)
        if bad is not None:
            return bad
    return certificate_instance(spec, n, k, scaled, cache)


def _check_upper_limit(spec, n, scaled, checked):
    """Every k in 1..n at upper limit n, then the closed forms at n."""
    cache = {}
    for k in range(1, n + 1):
        params = {"n": n, "k": k}
        checked.append(params)
        bad = _step(spec, n, k, scaled, cache)
        if bad is not None:
            return {"params": params, **bad}
    params = {"n": n, "k": None}
    checked.append(params)
    bad = _closed_form_failure(spec, n)
    return None if bad is None else {"params": params, **bad}


def _report(spec, range_desc, failure, checked, t0):
    status = PASS if failure is None else FAIL
    return VerificationReport(
        spec.claim_id, range_desc, status, len(checked), failure, perf_counter() - t0, checked=checked
    )


def check_certificate(spec: CertificateSpec, n: int, scaled: bool = False) -> VerificationReport:
    """Telescoping for 1 <= k <= n, F(1) = 0, and the closed forms at n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t0 = perf_counter()
    checked = []
    bad = _check_upper_limit(spec, n, scaled, checked)
    return _report(spec, f"1 <= k <= {n}", bad, checked, t0)


def sweep_certificate(spec: CertificateSpec, n_max: int, scaled: bool = False) -> VerificationReport:
    """check_certificate for every upper limit 1 <= n <= n_max.

    Bindings without the (-1)^(n-k) sign do not depend on n, so telescoping
    at k only has to be checked once; it is done at n = k, just before the
    closed forms at n, which keeps the walk ascending and the first failure
    minimal.
    """
    t0 = perf_counter()
    checked = []
    bad = None
    if not _depends_on_n(spec):
        cache = {}
        for n in range(1, n_max + 1):
            params = {"n": n, "k": n}
            checked.append(params)
            bad = _step(spec, n, n, scaled, cache)
            if bad is None:
                params = {"n": n, "k": None}
                checked.append(params)
                bad = _closed_form_failure(spec, n)
            if bad is not None:
                bad = {"params": params, **bad}
                break
        return _report(spec, f"1 <= k <= {n_max}", bad, checked, t0)
    for n in range(1, n_max + 1):
        bad = _check_upper_limit(spec, n, scaled, checked)
        if bad is not None:
            break
    return _report(spec, f"1 <= k <= n <= {n_max}", bad, checked, t0)


def _depends_on_n(spec):
    return spec.a.alternating or spec.b.alternating


# -- bindings -----------------------------------------------------------------

SIGNED_D = Binding("(-1)^(n-k) D_k", lambda n, k: sign(n - k) * D(k)[k], 0, True)
D_PREV = Binding("D_{k-1}", lambda n, k: D(k)[k - 1], 1)
SIGNED_S = Binding("(-1)^(n-k) s_k", lambda n, k: sign(n - k) * s(k)[k], 1, True)
S_POLY = Binding("s_k(x)", lambda n, k: s_poly(k)[k], 1)
S_POLY_NEXT = Binding("s_{k+1}(x)", lambda n, k: s_poly(k + 1)[k + 1], 0)


# -- closed forms ---------------------------------------------------------------


def _f2_closed_forms(n):
    a = lambda i: sign(n - i) * D(i)[i]
    b = lambda i: D(i)[i - 1]
    partial = sum(k * k * a(k) * b(k) for k in range(1, n + 1))
    form = (
        Fraction(1, 72) * n * a(n) * b(n)
        - Fraction(1, 12) * n * (n + 1) * a(n + 1) * b(n)
        + Fraction(1, 24) * (2 * n * n + 2 * n + 1) * a(n) * b(n + 1)
        + Fraction(1, 72) * (n + 1) * a(n + 1) * b(n + 1)
    )
    d = D(n + 1)
    num = 3 * (n + 1) * d[n] ** 2 + (8 + 18 * n) * d[n + 1] * d[n] - 3 * (n + 1) * d[n + 1] ** 2
    q, r = divmod((n + 1) * num, 36)
    yield "sum k^2 a_k b_k = F(n+1)", partial, form
    yield "(n+1)(...) divisible by 36", r, 0
    yield "sum (-1)^(n-k) k^2 D_k D_{k-1} = (n+1)(...)/36", partial, q
    yield "D_{n+1} - 3D_n = n(6D_n - D_{n+1} - D_{n-1})", d[n + 1] - 3 * d[n], n * (6 * d[n] - d[n + 1] - d[n - 1])


def _g2_closed_forms(n):
    a = lambda i: D(i)[i - 1]
    b = lambda i: sign(n - i) * s(i)[i]
    partial = sum((4 * k * k + 2 * k - 1) * a(k) * b(k) for k in range(1, n + 1))
    form = Fraction(n * ((n + 1) * a(n + 1) * b(n) - (n + 2) * a(n) * b(n + 1)), 3)
    d, sv = D(n + 1), s(n + 1)
    yield "sum (4k^2+2k-1) a_k b_k = G(n+1)", partial, form
    yield "B_n = ((n+1)D_n s_n + (n+2)D_{n-1}s_{n+1})/3", Fraction(partial, n), Fraction(
        (n + 1) * d[n] * sv[n] + (n + 2) * d[n - 1] * sv[n + 1], 3
    )


def _f4_closed_forms(n):
    sp = s_poly(n + 2)
    s0, s1, s2 = sp[n], sp[n + 1], sp[n + 2]
    u = ONE_PLUS_2X
    total = X2_PLUS_X * theorem_1_3_sum(n)  # the labels below call this S
    half = Fraction(-1, 2)
    lhs2 = Fraction(4, (n + 1) * (n + 2)) * total
    tail = n * s0 * ((5 + n) * s1 - (n + 3) * (u * s2))
    yield "4S/((n+1)(n+2)), expanded", lhs2, half * (
        s1 * ((n * n + 7 * n + 12) * s2 - (n * n + 9 * n + 12) * (u * s1)) + tail
    )
    yield "4S/((n+1)(n+2)), regrouped", lhs2, half * (
        s1 * (n * (n + 7) * s2 - n * (n + 9) * (u * s1) + 12 * (s2 - u * s1)) + tail
    )
    yield "12(s_{n+2} - (1+2x)s_{n+1}) = n(8(1+2x)s_{n+1} - 4s_{n+2} - 4s_n)", 12 * (s2 - u * s1), n * (
        8 * (u * s1) - 4 * s2 - 4 * s0
    )
    lhs3 = Fraction(4, n * (n + 1) * (n + 2)) * total
    yield "4S/(n(n+1)(n+2)), expanded", lhs3, half * (
        s1 * ((n + 3) * s2 - (n + 1) * (u * s1) - 4 * s0) + s0 * ((5 + n) * s1 - (n + 3) * (u * s2))
    )
    yield "4S/(n(n+1)(n+2)), paired differences", lhs3, half * (
        (n + 3) * s2 * (s1 - u * s0) + (n + 1) * s1 * (s0 - u * s1)
    )
    yield "4S/(n(n+1)(n+2)), after substitution", lhs3, half * (
        ((3 + 2 * n) * (u * s1) - n * s0) * (s1 - u * s0) + (n + 1) * s1 * (s0 - u * s1)
    )
    yield "4S/(n(n+1)(n+2)), final form", lhs3, half * (
        (2 + n) * (u * s1 * s1)
        + s0 * s1
        - (3 + 2 * n) * (u * u * s0 * s1)
        + n * (u * s0 * s0)
    )


# -- the three shipped certificates -------------------------------------------

F2 = CertificateSpec(
    id="F2",
    claim_id="cert-f2",
    a=SIGNED_D,
    b=D_PREV,
    summand=Term(Fraction(1), K * K),
    terms=(
        Term(Fraction(1, 72), K - 1, 1, 1),
        Term(Fraction(1, 12), K * (1 - K), 0, 1),
        Term(Fraction(1, 24), 2 * K * K - 2 * K + 1, 1, 0),
        Term(Fraction(1, 72), K, 0, 0),
    ),
    scale=72,
    boundary_identity=lambda a, b: 3 * a(0) + a(1),
    closed_forms=_f2_closed_forms,
)

G2 = CertificateSpec(
    id="G2",
    claim_id="cert-g2",
    a=D_PREV,
    b=SIGNED_S,
    summand=Term(Fraction(1), 4 * K * K + 2 * K - 1),
    terms=(
        Term(Fraction(1, 3), (K - 1) * K, 0, 1),
        Term(Fraction(-1, 3), (K - 1) * (K + 1), 1, 0),
    ),
    scale=3,
    closed_forms=_g2_closed_forms,
)

_KK1 = K * (K + 1)
F4 = CertificateSpec(
    id="F4",
    claim_id="cert-f4",
    a=S_POLY,
    b=S_POLY_NEXT,
    summand=Term(Fraction(-4), K * (K + 1) * (K + 2), x_poly=X2_PLUS_X),
    terms=(
        Term(Fraction(1, 2), _KK1 * (K + 4) * (K - 1), 1, 1),
        Term(Fraction(-1, 2), _KK1 * (K * K + 7 * K + 4), 0, 1, ONE_PLUS_2X),
        Term(Fraction(-1, 2), _KK1 * (K + 2) * (K - 1), 1, 0, ONE_PLUS_2X),
        Term(Fraction(1, 2), _KK1 * (K + 2) * (K + 3), 0, 0),
    ),
    scale=2,
    polynomial=True,
    closed_forms=_f4_closed_forms,
)

CERTIFICATES = {"cert-f2": F2, "cert-g2": G2, "cert-f4": F4}
