"""One check per theorem, lemma, closed form and telescoping certificate."""

from .certificates import (
    CERTIFICATES,
    F2,
    F4,
    G2,
    CertificateSpec,
    Term,
    check_certificate,
    sweep_certificate,
)
from .claims import (
    compute_A,
    compute_B,
    check_delannoy_routes,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_3_1,
    check_lemma_3_2,
    check_lemma_3_3,
    check_lemma_3_4,
    check_lemma_3_5,
    check_lemma_3_6,
    check_lemma_4_1,
    check_lemma_4_2,
    check_polynomial_identities,
    check_prime_values,
    check_recurrences,
    check_s_even_divisible,
    check_schroder_relation,
    check_theorem_1_1,
    check_theorem_1_2,
    check_theorem_1_3,
    sweep_lemma_3_6,
    sweep_lemma_4_2,
    sweep_prime_values,
    sweep_theorem_1_2,
    sweep_theorem_1_3,
)
from .registry import CLAIM_IDS, CLAIMS, Ranges, recheck, run_claim, run_claims
from .report import FAIL, PASS, REPORT_SCHEMA, RUN_SCHEMA, VerificationReport
from .sweep import HypothesisError, MethodMismatch, NotAPrime, OddN, PrimeTooSmall
