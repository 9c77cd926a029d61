"""Exact arithmetic for central Delannoy and Schröder numbers, their
polynomial analogues, and mechanical checks of congruences and telescoping
identities among them."""

from .modular import Residue, is_prime, mod_inverse, primes_in, residue
from .polynomials import (
    IntPoly,
    NotDivisible,
    NotIntegral,
    RatPoly,
    delannoy_poly,
    exact_div,
    large_schroder_poly,
    little_schroder_poly,
    little_schroder_poly_table,
    poly_arith,
)
from .sequences import (
    InexactDivision,
    SequenceTable,
    binomial,
    catalan,
    delannoy_direct,
    delannoy_table,
    large_schroder,
    little_schroder_direct,
    little_schroder_table,
    narayana,
    trinomial_T,
    weight_w,
)

__version__ = "0.1.0"
