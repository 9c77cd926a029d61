"""Residues modulo m (used with m = p and m = p^2) and deterministic
primality testing for prime sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "BadModulus",
    "NotInvertible",
    "ModulusMismatch",
    "Residue",
    "residue",
    "mod_inverse",
    "rational_residue",
    "is_prime",
    "primes_in",
]


class BadModulus(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


class ModulusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Residue:
    """``value`` reduced into ``[0, modulus)``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 1:
            raise BadModulus(f"modulus must be > 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"{self.modulus} != {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return rational_residue(other, self.modulus).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return mod_inverse(self) ** (-e)
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self._other(other) % self.modulus
            except NotInvertible:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus})"


def residue(value: int, modulus: int) -> Residue:
    return Residue(value, modulus)


def mod_inverse(a: Residue) -> Residue:
    if gcd(a.value, a.modulus) != 1:
        raise NotInvertible(f"{a.value} has no inverse modulo {a.modulus}")
    return Residue(pow(a.value, -1, a.modulus), a.modulus)


def rational_residue(q, modulus: int) -> Residue:
    """Image of the rational ``q`` modulo ``modulus``: numerator times the
    inverse of the denominator.  ``-5/6`` modulo 25 is ``-5 * 6^-1``."""
    q = Fraction(q)
    return Residue(q.numerator, modulus) * mod_inverse(Residue(q.denominator, modulus))


# -- primality ----------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3 * 10**24.

    Above that bound the thirteen fixed bases are no longer a proof, so the
    function falls back to trial division (slow, but never wrong).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n >= 3317044064679887385961981:
        return _trial_division(n)
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    limit = isqrt(n)
    while f <= limit:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in ``[lo, hi]``, ascending."""
    if lo > hi:
        raise ValueError("lo must be <= hi")
    lo = max(lo, 2)
    if hi < lo:
        return []
    if hi <= 10**7:
        sieve = bytearray([1]) * (hi + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(hi) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytes(len(range(p * p, hi + 1, p)))
        return [p for p in range(lo, hi + 1) if sieve[p]]
    return [n for n in range(lo, hi + 1) if is_prime(n)]
