from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..modular import Residue
from ..polynomials import IntPoly, RatPoly, format_poly

PASS = "pass"
FAIL = "fail"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["claim_id", "range", "status", "counterexample", "instances_checked", "elapsed_ms"],
    "properties": {
        "claim_id": {"type": "string", "minLength": 1},
        "range": {"type": "string"},
        "status": {"enum": [PASS, FAIL]},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["params", "check", "lhs", "rhs"],
                    "properties": {"params": {"type": "object"}, "check": {"type": "string"}},
                },
            ]
        },
        "instances_checked": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "details": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"status": {"const": FAIL}}},
            "then": {"properties": {"counterexample": {"type": "object"}}},
        }
    ],
}

RUN_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "reports"],
    "properties": {
        "status": {"enum": [PASS, FAIL]},
        "reports": {"type": "array", "items": REPORT_SCHEMA},
    },
}


def jsonable(value: Any) -> Any:
    """Convert exact values to JSON-safe ones.

    Integers stay integers, fractions become ``"a/b"`` strings, and
    polynomials use the comma-separated coefficient form.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (str, int, float)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (IntPoly, RatPoly)):
        return format_poly(value)
    if isinstance(value, Residue):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class VerificationReport:
    """Outcome of checking one claim over a range of parameters.

    A failing report carries ``counterexample`` with keys ``params`` (the
    first failing parameters), ``check`` (which sub-check failed), ``lhs``
    and ``rhs``.
    """

    claim_id: str
    range: str
    status: str
    instances_checked: int
    counterexample: dict | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)
    quotient: IntPoly | None = None
    # parameters visited, in order; not serialized to JSON
    checked: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.passed

    def to_dict(self, deterministic_timing: bool = False) -> dict:
        d = {
            "claim_id": self.claim_id,
            "range": self.range,
            "status": self.status,
            "counterexample": jsonable(self.counterexample),
            "instances_checked": self.instances_checked,
            "elapsed_ms": 0 if deterministic_timing else round(self.elapsed * 1000, 3),
        }
        details = dict(self.details)
        if self.quotient is not None:
            details["quotient"] = self.quotient
        if details:
            d["details"] = jsonable(details)
        return d

    def to_json(self, deterministic_timing: bool = False) -> str:
        return json.dumps(self.to_dict(deterministic_timing), sort_keys=True)

    def summary(self) -> str:
        line = f"{self.claim_id:<14} {self.status.upper():<4}  {self.range}  ({self.instances_checked} checked"
        line += f", {self.elapsed * 1000:.0f} ms)"
        if self.counterexample is not None:
            cx = self.counterexample
            params = ", ".join(f"{k}={v}" for k, v in cx["params"].items())
            line += f"  first failure at {params}: {cx['check']}"
        return line
