"""Integer sequences: binomials, Catalan and Narayana numbers, central
Delannoy numbers, large and little Schröder numbers.

Every sequence has a direct-sum evaluator (used as an oracle, never cached)
and, where a three-term recurrence is available, a table generator that is
the fast path for sweeps.

Conventions
-----------
* ``binomial(n, k)`` is 0 when ``k < 0``, ``k > n`` or ``n < 0``.
* ``s_0 = 1``.  The defining Narayana sum is empty at ``n = 0``; the value 1
  is a library convention and no certificate depends on it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from threading import Lock

__all__ = [
    "InexactDivision",
    "SequenceTable",
    "KINDS",
    "binomial",
    "catalan",
    "narayana",
    "trinomial_T",
    "delannoy_direct",
    "delannoy_direct_alt",
    "delannoy_table",
    "little_schroder_direct",
    "little_schroder_table",
    "large_schroder",
    "large_schroder_table",
    "weight_w",
    "sequence_table",
    "write_cache",
    "read_cache",
    "cached_table",
]

KINDS = ("delannoy", "little_schroder", "large_schroder")


class InexactDivision(ArithmeticError):
    """A quantity that is an integer by construction left a remainder."""


def exact_quotient(num: int, den: int, what: str = "") -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{what}: {num} / {den} leaves remainder {r}")
    return q


def binomial(n: int, k: int) -> int:
    """C(n, k), with the value 0 whenever ``k < 0``, ``k > n`` or ``n < 0``.

    The generalized binomial for negative ``n`` is deliberately not
    returned here; none of the sums in this package need it.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(j: int) -> int:
    if j < 0:
        raise ValueError("catalan index must be >= 0")
    return exact_quotient(math.comb(2 * j, j), j + 1, f"catalan({j})")


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n, zero outside ``1 <= k <= n``."""
    if n < 1:
        raise ValueError("narayana requires n >= 1")
    if k <= 0 or k > n:
        return 0
    return exact_quotient(binomial(n, k) * binomial(n, k - 1), n, f"narayana({n}, {k})")


def trinomial_T(n: int, b: int, c: int) -> int:
    """Generalized central trinomial coefficient T_n(b, c)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(
        binomial(n, 2 * k) * binomial(2 * k, k) * b ** (n - 2 * k) * c**k
        for k in range(n // 2 + 1)
    )


def delannoy_direct(n: int) -> int:
    """Central Delannoy number from sum_k C(n,k) C(n+k,k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(binomial(n, k) * binomial(n + k, k) for k in range(n + 1))


def delannoy_direct_alt(n: int) -> int:
    """Second summation form, sum_k C(n+k, 2k) C(2k, k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(binomial(n + k, 2 * k) * binomial(2 * k, k) for k in range(n + 1))


def little_schroder_direct(n: int) -> int:
    """s_n = sum_{k=1}^n N(n, k) 2^(n-k).  ``n = 0`` returns the convention 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    return sum(narayana(n, k) << (n - k) for k in range(1, n + 1))


def large_schroder(n: int) -> int:
    """S_n = sum_k C(n,k) C(n+k,k) / (k+1); each term is an integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(
        exact_quotient(binomial(n, k) * binomial(n + k, k), k + 1, f"S_{n} term {k}")
        for k in range(n + 1)
    )


def weight_w(n: int, k: int) -> int:
    """w(n, k) = C(n-1, k-1) C(n+k, k-1) / k."""
    if n < 1 or k < 1:
        raise ValueError("weight_w requires n >= 1 and k >= 1")
    return exact_quotient(
        binomial(n - 1, k - 1) * binomial(n + k, k - 1), k, f"w({n}, {k})"
    )


@dataclass(frozen=True)
class SequenceTable:
    """Values of one sequence for indices ``start .. max_index``.

    ``table[i]`` looks up by sequence index; ``table.values`` is the raw
    tuple starting at ``start``.
    """

    kind: str
    values: tuple[int, ...]
    max_index: int
    start: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if len(self.values) != self.max_index - self.start + 1:
            raise ValueError("values length does not match index range")

    def __getitem__(self, i: int) -> int:
        if not self.start <= i <= self.max_index:
            raise IndexError(f"{self.kind} index {i} outside [{self.start}, {self.max_index}]")
        return self.values[i - self.start]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def indexed(self):
        return enumerate(self.values, start=self.start)


def _delannoy_values(n_max: int) -> tuple[int, ...]:
    # (k+1) D_{k+1} = 3(2k+1) D_k - k D_{k-1}
    vals = [1, 3]
    for k in range(1, n_max):
        num = 3 * (2 * k + 1) * vals[k] - k * vals[k - 1]
        vals.append(exact_quotient(num, k + 1, f"Delannoy recurrence at k={k}"))
    return tuple(vals[: n_max + 1])


def _little_schroder_values(n_max: int) -> tuple[int, ...]:
    # index 0 holds the s_0 = 1 convention; s_1 = 1, s_2 = 3 are the seeds.
    # (k+3) s_{k+2} = 3(2k+3) s_{k+1} - k s_k
    vals = [1, 1, 3]
    for k in range(1, n_max - 1):
        num = 3 * (2 * k + 3) * vals[k + 1] - k * vals[k]
        vals.append(exact_quotient(num, k + 3, f"Schröder recurrence at k={k}"))
    return tuple(vals[: n_max + 1])


_lock = Lock()


@lru_cache(maxsize=None)
def _grown(kind: str, n_max: int) -> tuple[int, ...]:
    if kind == "delannoy":
        return _delannoy_values(n_max)
    if kind == "little_schroder":
        return _little_schroder_values(n_max)
    s = _little_schroder_values(n_max)
    return (1,) + tuple(2 * v for v in s[1:])


def _values(kind: str, n_max: int) -> tuple[int, ...]:
    # round n_max up so successive sweeps share one cached computation
    size = max(64, 1 << (max(n_max, 1) - 1).bit_length())
    with _lock:
        vals = _grown(kind, size)
    return vals[: n_max + 1]


def delannoy_table(n_max: int) -> SequenceTable:
    """D_0 .. D_{n_max} by the three-term recurrence."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return SequenceTable("delannoy", _values("delannoy", n_max), n_max)


def little_schroder_table(n_max: int) -> SequenceTable:
    """s_1 .. s_{n_max} by the three-term recurrence (``start == 1``)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return SequenceTable("little_schroder", _values("little_schroder", n_max)[1:], n_max, start=1)


def large_schroder_table(n_max: int) -> SequenceTable:
    """S_0 .. S_{n_max}, using S_n = 2 s_n for n >= 1."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return SequenceTable("large_schroder", _values("large_schroder", n_max), n_max)


def sequence_table(kind: str, n_max: int) -> SequenceTable:
    try:
        maker = {
            "delannoy": delannoy_table,
            "little_schroder": little_schroder_table,
            "large_schroder": large_schroder_table,
        }[kind]
    except KeyError:
        raise ValueError(f"unknown sequence kind {kind!r}") from None
    return maker(n_max)


# -- cache files ------------------------------------------------------------
#
# Header line "kind n_max", then one decimal integer per line; line i after
# the header is the value at index i.  For little_schroder line 0 holds the
# s_0 = 1 convention so the layout is the same for every kind.

def write_cache(table: SequenceTable, path) -> None:
    values = list(table.values)
    if table.start == 1:
        values.insert(0, 1)
    text = f"{table.kind} {table.max_index}\n" + "".join(f"{v}\n" for v in values)
    Path(path).write_bytes(text.encode("ascii"))


def read_cache(path) -> SequenceTable:
    lines = Path(path).read_text(encoding="ascii").splitlines()
    if not lines:
        raise ValueError(f"{path}: empty cache file")
    kind, n_max_s = lines[0].split()
    n_max = int(n_max_s)
    values = tuple(int(v) for v in lines[1:])
    if len(values) != n_max + 1:
        raise ValueError(f"{path}: expected {n_max + 1} values, found {len(values)}")
    if kind == "little_schroder":
        return SequenceTable(kind, values[1:], n_max, start=1)
    return SequenceTable(kind, values, n_max)


CACHE_ENV = "DELANNOY_CACHE_DIR"


def cached_table(kind: str, n_max: int, cache_dir=None) -> SequenceTable:
    """Table for ``kind`` up to ``n_max``, reusing ``<cache_dir>/<kind>.txt``.

    ``cache_dir`` defaults to ``$DELANNOY_CACHE_DIR``; with neither set the
    table is computed and nothing is written.  A cached file is trusted only
    after its low indices are compared against the direct sums.
    """
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir:
        return sequence_table(kind, n_max)
    path = Path(cache_dir) / f"{kind}.txt"
    if path.exists():
        table = read_cache(path)
        if table.kind == kind and table.max_index >= n_max and _spot_check(table):
            return _truncate(table, n_max)
    table = sequence_table(kind, n_max)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_cache(table, path)
    return table


def _spot_check(table: SequenceTable) -> bool:
    direct = {
        "delannoy": delannoy_direct,
        "little_schroder": little_schroder_direct,
        "large_schroder": large_schroder,
    }[table.kind]
    hi = min(table.max_index, 12)
    return all(table[i] == direct(i) for i in range(table.start, hi + 1))


def _truncate(table: SequenceTable, n_max: int) -> SequenceTable:
    keep = n_max - table.start + 1
    return SequenceTable(table.kind, table.values[:keep], n_max, table.start)
