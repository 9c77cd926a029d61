"""Command-line front end.

    delannoy gen KIND --nmax N
    delannoy verify --claim thm1.2 --pmax 7
    delannoy cert [--claim cert-f2] [--nmax N | --n N] [--scaled]
    delannoy sweep-all

Exit status is 0 when every selected check passes, 1 when any fails (the
report is still written), and 2 for usage errors, including parameters that
violate a statement's hypotheses (odd n for thm1.3, p <= 3 for thm1.2).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .polynomials import (
    delannoy_poly,
    format_poly,
    large_schroder_poly,
    little_schroder_poly_table,
)
from .sequences import CACHE_ENV, KINDS, cached_table
from .verifier import certificates as cert
from .verifier import claims as c
from .verifier.registry import CERTIFICATE_IDS, CLAIM_IDS, Ranges, run_claims
from .verifier.report import FAIL, PASS, VerificationReport
from .verifier.sweep import HypothesisError

POLY_KINDS = ("delannoy_poly", "large_schroder_poly", "little_schroder_poly")
FORMATS = ("json", "csv", "text")

# claims that also accept a single parameter via --n / --p
_SINGLE_N = {
    "thm1.3": c.check_theorem_1_3,
    "lem4.2": c.check_lemma_4_2,
}
_SINGLE_P = {
    "thm1.2": c.check_theorem_1_2,
    "lem3.6": c.check_lemma_3_6,
    "lem2.3": c.check_prime_values,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    claims: list[str] = field(default_factory=list)
    kind: str | None = None
    ranges: Ranges = field(default_factory=Ranges)
    n: int | None = None
    p: int | None = None
    format: str = "text"
    out: str | None = None
    cache_dir: str | None = None
    deterministic_timing: bool = False
    scaled: bool = False
    workers: int = 1

    def validate(self):
        try:
            self.ranges.validate()
        except ValueError as e:
            raise UsageError(str(e)) from None
        unknown = [x for x in self.claims if x not in CLAIM_IDS]
        if unknown:
            raise UsageError(f"unknown claim selector(s): {', '.join(unknown)}")
        if self.command == "cert":
            bad = [x for x in self.claims if x not in CERTIFICATE_IDS]
            if bad:
                raise UsageError(f"not a certificate: {', '.join(bad)}")
        for name in ("n", "p"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name} must be positive")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")


# -- sequence generation --------------------------------------------------------


def generate(kind: str, n_max: int, cache_dir=None) -> list[tuple[int, object]]:
    """(index, value) rows for an integer or polynomial family."""
    if kind in KINDS:
        return list(cached_table(kind, n_max, cache_dir).indexed())
    if kind == "delannoy_poly":
        return [(i, delannoy_poly(i)) for i in range(n_max + 1)]
    if kind == "large_schroder_poly":
        return [(i, large_schroder_poly(i)) for i in range(n_max + 1)]
    if kind == "little_schroder_poly":
        return list(enumerate(little_schroder_poly_table(n_max), start=1))
    raise UsageError(f"unknown kind {kind!r}")


def _value_str(v):
    return v if isinstance(v, int) else format_poly(v)


def render_table(kind, n_max, rows, fmt) -> str:
    if fmt == "json":
        doc = {
            "kind": kind,
            "n_max": n_max,
            "values": [{"index": i, "value": _value_str(v)} for i, v in rows],
        }
        return json.dumps(doc, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "value"])
        for i, v in rows:
            w.writerow([i, _value_str(v)])
        return buf.getvalue()
    return "".join(f"{i}\t{_value_str(v)}\n" for i, v in rows)


# -- reports --------------------------------------------------------------------


def _param_str(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def render_reports(reports: list[VerificationReport], fmt: str, deterministic_timing=False) -> str:
    status = PASS if all(r.passed for r in reports) else FAIL
    if fmt == "json":
        doc = {"status": status, "reports": [r.to_dict(deterministic_timing) for r in reports]}
        return json.dumps(doc, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim_id", "param", "status"])
        for r in reports:
            fail_at = r.counterexample["params"] if r.counterexample else None
            rows = r.checked or ([fail_at] if fail_at else [])
            for params in rows:
                w.writerow([r.claim_id, _param_str(params), FAIL if params == fail_at else PASS])
        return buf.getvalue()
    lines = [r.summary() for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} claims passed")
    return "\n".join(lines) + "\n"


def _order(ids):
    rank = {cid: i for i, cid in enumerate(CLAIM_IDS)}
    return sorted(dict.fromkeys(ids), key=rank.__getitem__)


def collect_reports(config: RunConfig) -> list[VerificationReport]:
    if config.command == "sweep-all":
        ids = list(CLAIM_IDS)
    elif config.command == "cert":
        ids = config.claims or list(CERTIFICATE_IDS)
    else:
        ids = config.claims
        if not ids:
            raise UsageError("verify needs at least one --claim")
    ids = _order(ids)

    if config.command == "cert" and (config.n is not None or config.scaled):
        out = []
        for cid in ids:
            spec = cert.CERTIFICATES[cid]
            if config.n is not None:
                out.append(cert.check_certificate(spec, config.n, scaled=config.scaled))
            else:
                n_max = config.ranges.n_max or (60 if spec.polynomial else 100)
                out.append(cert.sweep_certificate(spec, n_max, scaled=config.scaled))
        return out

    if config.n is not None or config.p is not None:
        out = []
        for cid in ids:
            try:
                if config.n is not None and cid in _SINGLE_N:
                    out.append(_SINGLE_N[cid](config.n))
                elif config.p is not None and cid in _SINGLE_P:
                    out.append(_SINGLE_P[cid](config.p))
                else:
                    raise UsageError(f"{cid} does not take a single --n/--p; use --nmax/--pmin/--pmax")
            except HypothesisError as e:
                raise UsageError(str(e)) from None
        return out

    try:
        return run_claims(ids, config.ranges, workers=config.workers)
    except HypothesisError as e:
        raise UsageError(str(e)) from None


def run(config: RunConfig, stdout=None) -> int:
    """Execute ``config``; returns the process exit status."""
    stdout = stdout or sys.stdout
    config.validate()
    if config.command == "gen":
        if config.kind not in KINDS + POLY_KINDS:
            raise UsageError(f"unknown kind {config.kind!r}")
        n_max = config.ranges.n_max or 10
        cache_dir = config.cache_dir or os.environ.get(CACHE_ENV)
        rows = generate(config.kind, n_max, cache_dir)
        _emit(render_table(config.kind, n_max, rows, config.format), config.out, stdout)
        return 0
    reports = collect_reports(config)
    _emit(render_reports(reports, config.format, config.deterministic_timing), config.out, stdout)
    return 0 if all(r.passed for r in reports) else 1


def _emit(text, out, stdout):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int, help="upper bound for n")
    common.add_argument("--pmin", type=int, help="smallest prime swept")
    common.add_argument("--pmax", type=int, help="largest prime swept")
    common.add_argument("--jmax", type=int, help="upper bound for j")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--cache-dir", help=f"sequence cache directory (default: ${CACHE_ENV})")
    common.add_argument(
        "--deterministic-timing", action="store_true", help="write elapsed_ms as 0 so output is reproducible"
    )
    common.add_argument("--workers", type=int, default=1, help="worker processes for independent claims")

    parser = argparse.ArgumentParser(
        prog="delannoy", description="Delannoy/Schröder sequences and checks of their identities"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="emit a sequence or polynomial table")
    g.add_argument("kind", choices=KINDS + POLY_KINDS)

    v = sub.add_parser("verify", parents=[common], help="run named claims")
    v.add_argument("--claim", action="append", default=[], help=f"claim id, repeatable or comma separated: {', '.join(CLAIM_IDS)}")
    v.add_argument("--n", type=int, help="single n for thm1.3 / lem4.2")
    v.add_argument("--p", type=int, help="single prime for thm1.2 / lem3.6 / lem2.3")

    ce = sub.add_parser("cert", parents=[common], help="run telescoping certificate checks")
    ce.add_argument("--claim", action="append", default=[], help="cert-f2, cert-g2, cert-f4")
    ce.add_argument("--n", type=int, help="single upper limit n")
    ce.add_argument("--scaled", action="store_true", help="integer-scaled certificates instead of rationals")

    sub.add_parser("sweep-all", parents=[common], help="run every claim at its default range")
    return parser


def config_from_args(args) -> RunConfig:
    claims = []
    for item in getattr(args, "claim", []) or []:
        claims.extend(x.strip() for x in item.split(",") if x.strip())
    return RunConfig(
        command=args.command,
        claims=claims,
        kind=getattr(args, "kind", None),
        ranges=Ranges(args.nmax, args.pmin, args.pmax, args.jmax),
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
        format=args.format,
        out=args.out,
        cache_dir=args.cache_dir,
        deterministic_timing=args.deterministic_timing,
        scaled=getattr(args, "scaled", False),
        workers=args.workers,
    )


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(config_from_args(args), stdout)
    except UsageError as e:
        print(f"delannoy: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
