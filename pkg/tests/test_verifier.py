import json
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delannoy.modular import primes_in, rational_residue
from delannoy.polynomials import ONE_PLUS_2X, X2_PLUS_X, IntPoly
from delannoy.sequences import catalan, delannoy_direct, little_schroder_direct
from delannoy.verifier import claims as c
from delannoy.verifier import (
    CLAIM_IDS,
    FAIL,
    PASS,
    REPORT_SCHEMA,
    MethodMismatch,
    NotAPrime,
    OddN,
    PrimeTooSmall,
    Ranges,
    VerificationReport,
    recheck,
    run_claim,
    run_claims,
)
from delannoy.verifier.sweep import run_sweep


def P(*coeffs):
    return IntPoly(coeffs)


# -- Theorem 1.1 -----------------------------------------------------------------


@pytest.mark.parametrize("method", c.A_METHODS)
def test_compute_A_anchors(method):
    assert c.compute_A(1, method) == 1
    assert c.compute_A(2, method) == 17


@pytest.mark.parametrize("method", c.B_METHODS)
def test_compute_B_anchors(method):
    assert c.compute_B(1, method) == 5
    assert c.compute_B(2, method) == 83


def test_compute_A_hand_expansions():
    # normalized sum at n = 2 is (1/9)(-1*3 + 4*13*3)
    assert Fraction(-1 * 3 + 4 * 13 * 3, 9) == 17
    # closed form with D_1, D_2, D_3 = 3, 13, 63
    assert (13 * (63 - 39) + 3 * (13 + 3 * 63)) // 54 == 17


def test_compute_B_single_sum_matches_at_three():
    assert c.compute_B(3, "single_sum") == c.compute_B(3, "normalized_sum")


def test_compute_rejects_unknown_method():
    with pytest.raises(ValueError):
        c.compute_A(3, "guess")


@settings(max_examples=60)
@given(st.integers(1, 400))
def test_all_routes_agree_and_are_odd(n):
    a = {m: c.compute_A(n, m) for m in c.A_METHODS}
    b = {m: c.compute_B(n, m) for m in c.B_METHODS}
    assert len(set(a.values())) == 1 and len(set(b.values())) == 1
    for v in (*a.values(), *b.values()):
        assert v > 0 and v % 2 == 1


def test_route_disagreement_is_reported(monkeypatch):
    monkeypatch.setitem(c._A_ROUTES, "single_sum", lambda n: 0)
    with pytest.raises(MethodMismatch):
        c.compute_A(4)
    report = c.check_theorem_1_1(3)
    assert report.status == FAIL
    assert report.counterexample["params"] == {"n": 1}
    assert report.counterexample["check"] == "MethodMismatch"


def test_theorem_1_1_small_ranges():
    r = c.check_theorem_1_1(1)
    assert r.passed and r.instances_checked == 1
    assert c.check_theorem_1_1(2).passed


# -- Theorem 1.2 and the mod-p lemmas ---------------------------------------------


def test_theorem_1_2_sums_at_five():
    first, second = c.theorem_1_2_sums(5)
    assert first == 316350 and first % 25 == 0
    assert second == -6697245 and second % 25 == 5
    assert rational_residue(Fraction(-5, 6), 25) * 5 == 0
    assert -20 % 25 == 5


def test_theorem_1_2_sums_by_brute_force():
    p = 7
    d = [delannoy_direct(k) for k in range(p + 1)]
    s = [None] + [little_schroder_direct(k) for k in range(1, p + 1)]
    first = sum((-1) ** k * k * k * d[k] * d[k - 1] for k in range(1, p))
    second = sum((-1) ** k * (4 * k * k + 2 * k - 1) * d[k - 1] * s[k] for k in range(1, p + 1))
    assert c.theorem_1_2_sums(p) == (first, second)


def test_theorem_1_2_hypotheses():
    assert c.check_theorem_1_2(5).passed
    with pytest.raises(PrimeTooSmall):
        c.check_theorem_1_2(3)
    with pytest.raises(NotAPrime):
        c.check_theorem_1_2(9)


def test_theorem_1_2_sweep_lists_primes():
    r = c.sweep_theorem_1_2(p_max=7)
    assert r.passed and r.details["primes"] == [5, 7]


def test_theorem_1_2_fails_for_composites():
    # the congruence is special to primes; 25 and 35 are not
    assert c._inst_thm1_2(25) is not None or c._inst_thm1_2(35) is not None


def test_lemma_3_6_at_five():
    assert c.lemma_3_6_sums(5) == (-139, -245, -436)
    assert -139 % 5 == 1 and -245 % 5 == 0 and -436 % 5 == 4
    assert c.check_lemma_3_6(5).passed


@given(st.sampled_from(primes_in(5, 400)))
def test_lemma_3_6_sums_match_direct_binomials(p):
    from math import comb

    one = sum(comb(2 * j, j) * (-2) ** j for j in range(p - 1))
    two = sum(comb(2 * j + 1, j + 1) * (-2) ** j for j in range(p - 1))
    three = sum(comb(2 * j, j) * j * (-2) ** j for j in range(p - 1))
    assert c.lemma_3_6_sums(p) == (one, two, three)


def test_prime_values_examples():
    assert c.prime_value_residues(5) == {"s_p": 2, "s_p+1": 3, "D_p-1": 1, "D_p": 3}
    assert c.check_prime_values(7).passed


def test_prime_values_at_three_is_not_asserted():
    r = c.check_prime_values(3)
    assert r.passed
    assert set(r.details["unasserted"]) == {"D_p-1", "D_p", "holds"}


# -- integer lemmas -------------------------------------------------------------


def test_lemma_2_1_quotients():
    d = [delannoy_direct(k) for k in range(4)]
    q = lambda n: (d[n] * (d[n + 1] - 3 * d[n]) + d[n - 1] * (d[n] + 3 * d[n + 1])) // 54
    assert q(1) == 1 and q(2) == 17
    assert c.check_lemma_2_1(300).passed


def test_lemma_2_2_examples():
    assert 2 * 3 * 1 + 3 * 1 * 3 == 15
    assert c._inst_lem2_2(1) is None and c._inst_lem2_2(2) is None
    assert c.check_lemma_2_2(300).passed


def test_recurrence_examples():
    lhs, rhs = c.RECURRENCES["b_sec2"][0](0, 1)
    assert (lhs, rhs) == (26, 26)
    lhs, rhs = c.RECURRENCES["s_poly"][0](0, 1)
    assert lhs == rhs == P(4, 20, 20) == 5 * ONE_PLUS_2X * ONE_PLUS_2X - 1
    # a_k = (-1)^(4-k) D_k: 3 a_3 = -15 a_2 - 2 a_1
    lhs, rhs = c.RECURRENCES["a_sec2"][0](4, 1)
    assert lhs == 3 * -63 and rhs == -15 * 13 - 2 * -3


@pytest.mark.parametrize("which", list(c.RECURRENCES))
@pytest.mark.parametrize("n_max", [9, 10])
def test_recurrences_hold_for_both_parities(which, n_max):
    r = c.check_recurrences(n_max, which)
    assert r.passed
    if c.RECURRENCES[which][2]:
        assert {p["n"] % 2 for p in r.checked} == {0, 1}


def test_lemma_3_1_examples():
    assert c._inst_lem3_1(1) is None
    assert 2 * 13 * 3 == 78 == 3 * (2 + 1 * 3 * 4 * 2)
    assert c.check_lemma_3_1(200).passed


@pytest.mark.parametrize("j,n,want", [(0, 1, 1), (1, 3, 30), (1, 2, 6)])
def test_lemma_3_2_examples(j, n, want):
    assert c.lemma_3_2_sides(j, n) == (want, want)


def test_lemma_3_3_examples():
    assert c.lemma_3_3_rhs(1) == 1
    assert c.lemma_3_3_rhs(2) == 9
    assert c.check_lemma_3_3(200).passed


@pytest.mark.parametrize("j,n,want", [(0, 2, 14), (0, 1, 5)])
def test_lemma_3_4_examples(j, n, want):
    assert c.lemma_3_4_sides(j, n) == (want, want)


def test_lemma_3_4_right_side_can_be_fractional():
    lhs, rhs = c.lemma_3_4_sides(2, 3)
    assert lhs == rhs == Fraction(615, 2)


def test_lemma_3_4_one_two():
    lhs, rhs = c.lemma_3_4_sides(1, 2)
    assert lhs == rhs


def test_lemma_3_5_examples():
    for j, lhs in ((0, 3), (1, 7)):
        assert (4 * j + 3) * catalan(j) == lhs
        assert c._inst_lem3_5(j) is None
    assert c._inst_lem3_5(4) is None


# -- polynomial lemmas ----------------------------------------------------------


def test_lemma_4_1_examples():
    first, second = c.lemma_4_1_quotients(1)
    assert first == 0 and second == -4
    assert c.lemma_4_1_quotients(2)[0] == 1
    assert c.check_lemma_4_1(120).passed


def test_lemma_4_2_examples():
    r = c.check_lemma_4_2(2)
    assert r.passed and r.quotient == P(5, 25, 25)
    assert c.check_lemma_4_2(4).passed
    with pytest.raises(OddN):
        c.check_lemma_4_2(3)


def test_theorem_1_3_examples():
    r = c.check_theorem_1_3(2)
    assert r.passed and r.quotient == P(5)
    assert c.theorem_1_3_sum(2) == 30 * ONE_PLUS_2X**3
    assert c.check_theorem_1_3(4).passed
    with pytest.raises(OddN):
        c.check_theorem_1_3(3)


def test_theorem_1_3_needs_even_n():
    # at odd n the quotient is generally not integral, which is why the hypothesis exists
    from delannoy.polynomials import PolyDivisionError

    with pytest.raises(PolyDivisionError):
        c.theorem_1_3_quotient(1)


def test_s_even_divisible_and_odd_not():
    assert c.check_s_even_divisible(100).passed
    from delannoy.polynomials import NotDivisible, exact_div

    with pytest.raises(NotDivisible):
        exact_div(c.s_poly(3)[3], ONE_PLUS_2X)


def test_lemma_4_1_quotient_definition():
    sp = c.s_poly(6)
    for n in range(1, 5):
        first, second = c.lemma_4_1_quotients(n)
        assert first * X2_PLUS_X == sp[n + 1] - ONE_PLUS_2X * sp[n]
        assert second * X2_PLUS_X == sp[n] - ONE_PLUS_2X * sp[n + 1]


# -- sweeps, reports, registry ------------------------------------------------------


def test_sweep_stops_at_first_failure():
    seen = []

    def inst(n):
        seen.append(n)
        return {"check": "toy", "lhs": n, "rhs": 0} if n >= 4 else None

    r = run_sweep("toy", "1..10", ({"n": n} for n in range(1, 11)), inst)
    assert r.status == FAIL
    assert r.counterexample["params"] == {"n": 4}
    assert r.instances_checked == 4 and seen == [1, 2, 3, 4]


def test_failing_report_requires_counterexample():
    with pytest.raises(ValueError):
        VerificationReport("x", "r", FAIL, 1)


def test_report_serialization():
    r = c.check_theorem_1_3(2)
    d = json.loads(r.to_json(deterministic_timing=True))
    jsonschema.validate(d, REPORT_SCHEMA)
    assert d["elapsed_ms"] == 0 and d["details"]["quotient"] == "5"
    assert "thm1.3" in r.summary() and "PASS" in r.summary()


def test_ranges_validation():
    with pytest.raises(ValueError):
        Ranges(n_max=0).validate()
    with pytest.raises(ValueError):
        Ranges(p_min=11, p_max=7).validate()
    with pytest.raises(ValueError):
        run_claim("thm9.9")


def test_run_claims_small_ranges_all_pass():
    ranges = Ranges(n_max=12, p_max=50, j_max=8)
    reports = run_claims(CLAIM_IDS, ranges)
    assert [r.claim_id for r in reports] == list(CLAIM_IDS)
    for r in reports:
        assert r.status == PASS, r.summary()
        jsonschema.validate(r.to_dict(), REPORT_SCHEMA)


def test_run_claims_with_workers_matches_serial():
    ids = ["thm1.1", "lem2.1", "cert-g2"]
    ranges = Ranges(n_max=10)
    serial = [r.to_dict(True) for r in run_claims(ids, ranges)]
    parallel = [r.to_dict(True) for r in run_claims(ids, ranges, workers=2)]
    assert serial == parallel


def test_recheck_reproduces_failure(monkeypatch):
    monkeypatch.setitem(c._B_ROUTES, "closed_form_Ds", lambda n: 99 if n == 3 else c._B_closed(n))
    r = run_claim("thm1.1", Ranges(n_max=6))
    assert r.status == FAIL and r.counterexample["params"] == {"n": 3}
    assert recheck(r) == r.counterexample


def test_recheck_needs_a_counterexample():
    with pytest.raises(ValueError):
        recheck(run_claim("lem3.5", Ranges(j_max=3)))
