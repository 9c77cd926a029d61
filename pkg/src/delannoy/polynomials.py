"""Dense univariate polynomials over Z and Q, and the Delannoy/Schröder
polynomial families.

A polynomial is a tuple of coefficients in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple.  ``IntPoly`` holds ``int``
coefficients, ``RatPoly`` holds ``fractions.Fraction``.  Mixing the two (or
multiplying an ``IntPoly`` by a ``Fraction``) promotes to ``RatPoly``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from threading import Lock

from .sequences import InexactDivision, binomial, catalan, exact_quotient, narayana

__all__ = [
    "IntPoly",
    "RatPoly",
    "X",
    "ONE_PLUS_2X",
    "X2_PLUS_X",
    "NotDivisible",
    "NotIntegral",
    "exact_div",
    "poly_arith",
    "parse_poly",
    "delannoy_poly",
    "large_schroder_poly",
    "little_schroder_poly",
    "little_schroder_poly_alt",
    "little_schroder_poly_table",
]


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _mul_coeffs(a, b):
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a, j):
                out[i] += ai * bj
    return out


class _Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, _Poly):
            coeffs = coeffs.coeffs
        self.coeffs = _strip(tuple(self._coerce(c) for c in coeffs))

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = _strip(coeffs)
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)

    # arithmetic ---------------------------------------------------------

    def _promote(self, other):
        """Common result class and coefficient tuple of ``other``."""
        if isinstance(other, _Poly):
            cls = RatPoly if RatPoly in (type(self), type(other)) else IntPoly
            return cls, other.coeffs
        if isinstance(other, int):
            return type(self), (other,)
        if isinstance(other, Fraction):
            return RatPoly, (other,)
        return None, None

    def __add__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        out = list(self.coeffs) + [0] * max(0, len(oc) - len(self.coeffs))
        for i, c in enumerate(oc):
            out[i] -= c
        return cls._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        if len(oc) == 1:
            c = oc[0]
            return cls._raw(tuple(a * c for a in self.coeffs))
        return cls._raw(_mul_coeffs(self.coeffs, oc))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a non-negative int")
        result = type(self).constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c):
        return self * c


class IntPoly(_Poly):
    """Polynomial with integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, int):
            return int(c)
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        raise TypeError(f"IntPoly coefficient must be an integer, got {c!r}")

    def to_rat(self) -> "RatPoly":
        return RatPoly._raw(tuple(Fraction(c) for c in self.coeffs))

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g


class RatPoly(_Poly):
    """Polynomial with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, (int, Fraction)):
            return Fraction(c)
        raise TypeError(f"RatPoly coefficient must be rational, got {c!r}")

    @classmethod
    def _raw(cls, coeffs):
        return super()._raw(tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> IntPoly:
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise NotIntegral(f"coefficient of x^{i} is {c}", self, i)
        return IntPoly._raw(tuple(c.numerator for c in self.coeffs))


X = IntPoly((0, 1))
ONE_PLUS_2X = IntPoly((1, 2))
X2_PLUS_X = IntPoly((0, 1, 1))


def poly_arith(a, b, op: str):
    """Dispatch ``add``, ``sub``, ``mul``, ``scale`` (``b`` a scalar) or
    ``pow`` (``b`` a non-negative int)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        if isinstance(b, _Poly):
            raise TypeError("scale takes a scalar factor")
        return a.scale(b)
    if op == "pow":
        return a**b
    raise ValueError(f"unknown polynomial operation {op!r}")


# -- exact division -----------------------------------------------------------


class PolyDivisionError(ArithmeticError):
    pass


class NotDivisible(PolyDivisionError):
    """Long division over Q leaves a nonzero remainder."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder


class NotIntegral(PolyDivisionError):
    """The quotient exists over Q but has a non-integer coefficient."""

    def __init__(self, message, quotient, index):
        super().__init__(message)
        self.quotient = quotient
        self.index = index


def divmod_rat(num, den) -> tuple[RatPoly, RatPoly]:
    """Classical long division in Q[x]."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in num.coeffs]
    d = den.coeffs
    dl = Fraction(d[-1])
    m = len(d) - 1
    if len(r) <= m:
        return RatPoly(), RatPoly._raw(tuple(r))
    q = [Fraction(0)] * (len(r) - m)
    for i in range(len(r) - 1, m - 1, -1):
        c = r[i]
        if not c:
            continue
        c = c / dl
        q[i - m] = c
        for j in range(m + 1):
            r[i - m + j] -= c * d[j]
    return RatPoly._raw(q), RatPoly._raw(r[:m])


def exact_div(num, den) -> IntPoly:
    """Quotient ``q`` in Z[x] with ``num == q * den``.

    Raises ``NotDivisible`` when the remainder over Q is nonzero and
    ``NotIntegral`` when the rational quotient is not in Z[x].
    """
    q, r = divmod_rat(num, den)
    if r:
        raise NotDivisible(f"remainder {format_poly(r)}", r)
    return q.to_int()


# -- serialization ------------------------------------------------------------


def format_poly(p) -> str:
    """Ascending coefficients, comma separated: ``"1,5,5"`` is 1+5x+5x^2.

    The zero polynomial is ``"0"``.
    """
    if not p.coeffs:
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def parse_poly(text: str):
    parts = [t.strip() for t in text.split(",")]
    coeffs = [Fraction(t) for t in parts]
    if all(c.denominator == 1 for c in coeffs):
        return IntPoly(c.numerator for c in coeffs)
    return RatPoly(coeffs)


# -- polynomial families ------------------------------------------------------


def delannoy_poly(n: int) -> IntPoly:
    """D_n(x) = sum_k C(n,k) C(n+k,k) x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return IntPoly(binomial(n, k) * binomial(n + k, k) for k in range(n + 1))


def large_schroder_poly(n: int) -> IntPoly:
    """S_n(x) = sum_k C(n,k) C(n+k,k) x^k / (k+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return IntPoly(
        exact_quotient(binomial(n, k) * binomial(n + k, k), k + 1, f"S_{n}(x) coefficient {k}")
        for k in range(n + 1)
    )


def little_schroder_poly(n: int) -> IntPoly:
    """s_n(x) = sum_{k=1}^n N(n,k) x^(k-1) (x+1)^(n-k); ``n = 0`` gives 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return IntPoly((1,))
    # x^(k-1) (x+1)^(n-k) has coefficient C(n-k, i-k+1) at x^i
    out = [0] * n
    for k in range(1, n + 1):
        c = narayana(n, k)
        for i in range(k - 1, n):
            out[i] += c * binomial(n - k, i - k + 1)
    return IntPoly(out)


def little_schroder_poly_alt(n: int) -> IntPoly:
    """s_n(x) from the central-trinomial style form

        s_{m+1}(x) = sum_k C(m, 2k) C_k (2x+1)^(m-2k) (x^2+x)^k,   m = n-1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n - 1
    total = IntPoly()
    for k in range(m // 2 + 1):
        total = total + binomial(m, 2 * k) * catalan(k) * ONE_PLUS_2X ** (m - 2 * k) * X2_PLUS_X**k
    return total


_poly_lock = Lock()


@lru_cache(maxsize=None)
def _s_poly_values(size: int) -> tuple[IntPoly, ...]:
    # (k+3) s_{k+2}(x) = (2k+3)(1+2x) s_{k+1}(x) - k s_k(x); index 0 is the s_0 = 1 convention
    vals = [IntPoly((1,)), IntPoly((1,)), IntPoly((1, 2))]
    for k in range(1, size - 1):
        num = (2 * k + 3) * (ONE_PLUS_2X * vals[k + 1]) - k * vals[k]
        try:
            nxt = IntPoly._raw(tuple(exact_quotient(c, k + 3, "") for c in num.coeffs))
        except InexactDivision:
            raise InexactDivision(f"s_k(x) recurrence at k={k} not divisible by {k + 3}") from None
        vals.append(nxt)
    return tuple(vals[: size + 1])


def little_schroder_poly_table(n_max: int) -> list[IntPoly]:
    """[s_1(x), ..., s_{n_max}(x)] by the three-term recurrence."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return list(_s_poly_prefix(n_max)[1:])


def _s_poly_prefix(n_max: int) -> tuple[IntPoly, ...]:
    """(s_0(x), ..., s_{n_max}(x)), shared across callers."""
    size = max(64, 1 << (max(n_max, 1) - 1).bit_length())
    with _poly_lock:
        vals = _s_poly_values(size)
    return vals[: n_max + 1]
