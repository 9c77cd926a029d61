"""Claim identifiers, their default ranges, and dispatch by id."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import certificates as cert
from . import claims as c
from .report import VerificationReport
from .sweep import guarded


@dataclass(frozen=True)
class Ranges:
    """Sweep bounds; ``None`` means the claim's own default."""

    n_max: int | None = None
    p_min: int | None = None
    p_max: int | None = None
    j_max: int | None = None

    def validate(self):
        for name in ("n_max", "p_min", "p_max", "j_max"):
            v = getattr(self, name)
            if v is not None and v < 1 and not (name == "j_max" and v == 0):
                raise ValueError(f"{name} must be positive, got {v}")
        if self.p_min is not None and self.p_max is not None and self.p_min > self.p_max:
            raise ValueError("p_min must not exceed p_max")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    run: Callable[[Ranges], VerificationReport]
    instance: Callable[..., dict | None]
    kind: str  # "n", "p", "jn", "j", "cert", "rec"


def _n(r: Ranges, default: int) -> int:
    return r.n_max if r.n_max is not None else default


def _p(r: Ranges, default_min: int, default_max: int = 1000) -> tuple[int, int]:
    return (r.p_min if r.p_min is not None else default_min, r.p_max if r.p_max is not None else default_max)


def _cert_instance(claim_id):
    def inst(n, k=None):
        spec = cert.CERTIFICATES[claim_id]
        if k is None:
            return cert._closed_form_failure(spec, n)
        return cert._step(spec, n, k, False, None)

    return inst


def _cert_run(claim_id, default):
    return lambda r: cert.sweep_certificate(cert.CERTIFICATES[claim_id], _n(r, default))


def _rec_instance(which):
    inst = c.RECURRENCES[which][0]

    def one(n, k):
        lhs, rhs = inst(n, k)
        return None if lhs == rhs else c.mismatch(f"recurrence {which}", lhs, rhs)

    return one


def _build():
    out = [
        Claim("thm1.1", lambda r: c.check_theorem_1_1(_n(r, 400)), c._inst_thm1_1, "n"),
        Claim("thm1.2", lambda r: c.sweep_theorem_1_2(*_p(r, 5)), c._inst_thm1_2, "p"),
        Claim("thm1.3", lambda r: c.sweep_theorem_1_3(_n(r, 200)), c._inst_thm1_3, "n"),
        Claim("lem2.1", lambda r: c.check_lemma_2_1(_n(r, 400)), c._inst_lem2_1, "n"),
        Claim("lem2.2", lambda r: c.check_lemma_2_2(_n(r, 400)), c._inst_lem2_2, "n"),
        Claim("lem2.3", lambda r: c.sweep_prime_values(*_p(r, 3)), c._inst_prime_values, "p"),
        Claim("lem3.1", lambda r: c.check_lemma_3_1(_n(r, 400)), c._inst_lem3_1, "n"),
        Claim(
            "lem3.2",
            lambda r: c.check_lemma_3_2(r.j_max if r.j_max is not None else 60, _n(r, 60)),
            c._inst_lem3_2,
            "jn",
        ),
        Claim("lem3.3", lambda r: c.check_lemma_3_3(_n(r, 400)), c._inst_lem3_3, "n"),
        Claim(
            "lem3.4",
            lambda r: c.check_lemma_3_4(r.j_max if r.j_max is not None else 60, _n(r, 60)),
            c._inst_lem3_4,
            "jn",
        ),
        Claim("lem3.5", lambda r: c.check_lemma_3_5(r.j_max if r.j_max is not None else 400), c._inst_lem3_5, "j"),
        Claim("lem3.6", lambda r: c.sweep_lemma_3_6(*_p(r, 5)), c._inst_lem3_6, "p"),
        Claim("lem4.1", lambda r: c.check_lemma_4_1(_n(r, 200)), c._inst_lem4_1, "n"),
        Claim("lem4.2", lambda r: c.sweep_lemma_4_2(_n(r, 200)), c._inst_lem4_2, "n"),
        Claim("cert-f2", _cert_run("cert-f2", 100), _cert_instance("cert-f2"), "cert"),
        Claim("cert-g2", _cert_run("cert-g2", 100), _cert_instance("cert-g2"), "cert"),
        Claim("cert-f4", _cert_run("cert-f4", 60), _cert_instance("cert-f4"), "cert"),
    ]
    for which in c.RECURRENCES:
        default = 200 if which == "s_poly" else 400
        out.append(
            Claim(
                f"rec-{which}",
                lambda r, w=which, d=default: c.check_recurrences(max(_n(r, d), 3), w),
                _rec_instance(which),
                "rec",
            )
        )
    out += [
        Claim("id-delannoy", lambda r: c.check_delannoy_routes(_n(r, 500)), c._inst_delannoy_routes, "n"),
        Claim("id-schroder", lambda r: c.check_schroder_relation(_n(r, 500)), c._inst_schroder, "n"),
        Claim("id-poly", lambda r: c.check_polynomial_identities(_n(r, 100)), c._inst_poly_identities, "n"),
        Claim("id-s2n", lambda r: c.check_s_even_divisible(_n(r, 100)), c._inst_s_even, "n"),
    ]
    return {cl.claim_id: cl for cl in out}


CLAIMS: dict[str, Claim] = _build()
CLAIM_IDS = tuple(CLAIMS)
CERTIFICATE_IDS = ("cert-f2", "cert-g2", "cert-f4")


def run_claim(claim_id: str, ranges: Ranges = Ranges()) -> VerificationReport:
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim {claim_id!r}") from None
    ranges.validate()
    return claim.run(ranges)


def _run_one(args):
    return run_claim(*args)


def run_claims(claim_ids, ranges: Ranges = Ranges(), workers: int = 1) -> list[VerificationReport]:
    """Run several claims; results come back in the order of ``claim_ids``."""
    ids = list(claim_ids)
    unknown = [i for i in ids if i not in CLAIMS]
    if unknown:
        raise ValueError(f"unknown claim(s): {', '.join(unknown)}")
    ranges.validate()
    if workers <= 1 or len(ids) <= 1:
        return [run_claim(i, ranges) for i in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, [(i, ranges) for i in ids]))


def recheck(report: VerificationReport) -> dict | None:
    """Re-evaluate a failing report's counterexample parameters.

    Returns the fresh counterexample dict (equal to ``report.counterexample``
    when the failure is reproducible), or None if the instance now passes.
    """
    if report.counterexample is None:
        raise ValueError("report has no counterexample")
    params = dict(report.counterexample["params"])
    bad = guarded(CLAIMS[report.claim_id].instance, params)
    return None if bad is None else {"params": params, **bad}
