"""Driver shared by every claim: walk parameters in ascending order, stop at
the first failing instance, and package the result."""

from __future__ import annotations

from time import perf_counter
from typing import Callable, Iterable

from ..polynomials import PolyDivisionError
from ..sequences import InexactDivision
from .report import FAIL, PASS, VerificationReport


class MethodMismatch(ArithmeticError):
    """Two computation routes for the same quantity disagree."""

    def __init__(self, quantity, n, values):
        super().__init__(f"{quantity}({n}) routes disagree: {values}")
        self.quantity = quantity
        self.n = n
        self.values = values


class HypothesisError(ValueError):
    """Parameters fall outside the statement's hypotheses."""


class NotAPrime(HypothesisError):
    pass


class PrimeTooSmall(HypothesisError):
    pass


class OddN(HypothesisError):
    pass


def mismatch(check: str, lhs, rhs, **extra) -> dict:
    return {"check": check, "lhs": lhs, "rhs": rhs, **extra}


def guarded(instance: Callable[..., dict | None], params: dict) -> dict | None:
    """Run one instance, turning arithmetic inconsistencies into failures."""
    try:
        return instance(**params)
    except MethodMismatch as e:
        return mismatch("MethodMismatch", e.values, None, quantity=e.quantity)
    except InexactDivision as e:
        return mismatch("InexactDivision", str(e), None)
    except PolyDivisionError as e:
        return mismatch(type(e).__name__, str(e), None)


def run_sweep(
    claim_id: str,
    range_desc: str,
    params: Iterable[dict],
    instance: Callable[..., dict | None],
) -> VerificationReport:
    t0 = perf_counter()
    checked = []
    for p in params:
        checked.append(dict(p))
        bad = guarded(instance, p)
        if bad is not None:
            return VerificationReport(
                claim_id,
                range_desc,
                FAIL,
                len(checked),
                {"params": dict(p), **bad},
                perf_counter() - t0,
                checked=checked,
            )
    return VerificationReport(claim_id, range_desc, PASS, len(checked), None, perf_counter() - t0, checked=checked)
