"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line; the lines
are collected again in the pytest terminal summary.  All comparisons are
exact, so the tolerance is zero throughout.  Run directly with
``python3 tests/test_acceptance.py`` to print only the summary lines.
"""

import io
import json
from fractions import Fraction
from time import perf_counter

import jsonschema

from delannoy.cli import main
from delannoy.polynomials import IntPoly
from delannoy.verifier import RUN_SCHEMA, Ranges, run_claim
from delannoy.verifier import certificates as cert
from delannoy.verifier import claims as c

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []


def record(number, title, checks, elapsed):
    """Print and remember the verdict, then fail the test if any check failed."""
    failed = [name for name, ok in checks if not ok]
    verdict = "PASS" if not failed else "FAIL"
    line = f"criterion {number}: {verdict}  {title}  ({elapsed:.1f} s, tolerance 0: exact)"
    if failed:
        line += "  failed: " + "; ".join(failed)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failed, line


def report_check(report):
    return (report.summary(), report.passed)


def test_criterion_1_sum_parity_sweep():
    t0 = perf_counter()
    r = c.check_theorem_1_1(400)
    elapsed = perf_counter() - t0
    record(
        1,
        "A_n, B_n positive odd with three agreeing routes, 1 <= n <= 400",
        [
            report_check(r),
            ("instances == 400", r.instances_checked == 400),
            ("A(1) = 1", c.compute_A(1) == 1),
            ("A(2) = 17", c.compute_A(2) == 17),
            ("B(2) = 83", c.compute_B(2) == 83),
            ("runtime < 30 s", elapsed < 30),
        ],
        elapsed,
    )


def test_criterion_2_prime_square_congruences():
    t0 = perf_counter()
    r = c.sweep_theorem_1_2(5, 1000)
    elapsed = perf_counter() - t0
    first, second = c.theorem_1_2_sums(5)
    record(
        2,
        "both sums congruent mod p^2 for every prime 3 < p <= 1000",
        [
            report_check(r),
            ("166 primes in (3, 1000]", len(r.details["primes"]) == 166),
            ("p=5 first sum 316350 = 0 mod 25", first == 316350 and first % 25 == 0),
            ("p=5 second sum = 5 mod 25", second % 25 == 5),
            ("runtime < 120 s", elapsed < 120),
        ],
        elapsed,
    )


def test_criterion_3_polynomial_sum_integrality():
    t0 = perf_counter()
    r = c.sweep_theorem_1_3(200)
    elapsed = perf_counter() - t0
    q2 = c.check_theorem_1_3(2).quotient
    record(
        3,
        "normalized polynomial sum in Z[x] for even 2 <= n <= 200",
        [
            report_check(r),
            ("100 even n", r.instances_checked == 100),
            ("n=2 quotient is 5", q2 == IntPoly((5,))),
            ("runtime < 120 s", elapsed < 120),
        ],
        elapsed,
    )


def test_criterion_4_certificates():
    t0 = perf_counter()
    reports = [
        cert.sweep_certificate(cert.F2, 100),
        cert.sweep_certificate(cert.G2, 100),
        cert.sweep_certificate(cert.F4, 60),
    ]
    parities = {
        spec.id: {p["n"] % 2 for p in r.checked}
        for spec, r in zip((cert.F2, cert.G2), reports)
    }
    f1_zero = all(
        cert.boundary_instance(spec, n) is None
        for spec in cert.CERTIFICATES.values()
        for n in range(1, 101 if not spec.polynomial else 61)
    )
    elapsed = perf_counter() - t0
    record(
        4,
        "telescoping exact for 1 <= k <= n, n <= 100 (F2, G2) and n <= 60 (F4); F(1) = 0",
        [*(report_check(r) for r in reports),
         ("both parities of n for signed bindings", all(v == {0, 1} for v in parities.values())),
         ("F(1) = 0 at every n", f1_zero)],
        elapsed,
    )


def test_criterion_5_lemma_suite():
    t0 = perf_counter()
    reports = [
        c.check_lemma_2_1(300),
        c.check_lemma_2_2(300),
        c.check_lemma_3_1(200),
        c.check_lemma_3_3(200),
        c.check_lemma_3_2(60, 60),
        c.check_lemma_3_4(60, 60),
        c.check_lemma_3_5(200),
        c.sweep_lemma_3_6(5, 1000),
        c.sweep_prime_values(5, 1000),
        c.check_lemma_4_1(120),
        c.sweep_lemma_4_2(120),
    ]
    elapsed = perf_counter() - t0
    record(5, "lemma suite at the stated ranges", [report_check(r) for r in reports], elapsed)


def test_criterion_6_cross_definition_oracles():
    t0 = perf_counter()
    reports = [
        c.check_delannoy_routes(500),
        c.check_schroder_relation(500),
        c.check_polynomial_identities(100),
        c.check_s_even_divisible(100),
    ]
    elapsed = perf_counter() - t0
    record(6, "Delannoy routes and S_n = 2 s_n to 500, polynomial identities to 100", [report_check(r) for r in reports], elapsed)


def _cli_json(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, json.loads(out.getvalue())


def test_criterion_7_cli_contract(monkeypatch):
    t0 = perf_counter()
    code, doc = _cli_json("sweep-all", "--format", "json")
    schema_ok = True
    try:
        jsonschema.validate(doc, RUN_SCHEMA)
    except jsonschema.ValidationError:
        schema_ok = False

    bad = cert.F2.with_coefficient(2, cert.F2.terms[2].coeff + Fraction(1, 24))
    monkeypatch.setitem(cert.CERTIFICATES, "cert-f2", bad)
    bad_code, bad_doc = _cli_json("verify", "--claim", "cert-f2", "--format", "json")
    failing = bad_doc["reports"][0]
    cx = failing["counterexample"] or {}
    # minimality: the walk is ascending, and nothing before the reported instance failed
    replay = run_claim("cert-f2", Ranges())
    earlier_pass = all(cert.certificate_instance(bad, p["n"], p["k"]) is None
                       for p in replay.checked[:-1] if p["k"] not in (None, 1))
    elapsed = perf_counter() - t0
    record(
        7,
        "sweep-all exits 0 with schema-valid JSON; corrupted cert-f2 exits 1 with minimal counterexample",
        [
            ("sweep-all exit 0", code == 0),
            ("all reports pass", doc["status"] == "pass"),
            ("JSON validates", schema_ok),
            ("corrupted exit 1", bad_code == 1),
            ("corrupted claim fails", failing["status"] == "fail"),
            ("counterexample at n=1, k=1", cx.get("params") == {"n": 1, "k": 1}),
            ("no earlier failing instance", earlier_pass and len(replay.checked) == failing["instances_checked"]),
        ],
        elapsed,
    )


if __name__ == "__main__":
    import pytest

    raise SystemExit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
