"""
Congruences modulo p and p^2
============================

Exact sums reduced modulo primes, with rational targets such as -5p/6
interpreted through modular inverses.
"""

# %%
from fractions import Fraction

from delannoy import primes_in, residue
from delannoy.modular import rational_residue
from delannoy.verifier import claims

# %%
first, second = claims.theorem_1_2_sums(5)
print(first, second)
print(residue(first, 25), rational_residue(Fraction(-5, 6), 25) * 5)
print(residue(second, 25), residue(-20, 25))

# %% [markdown]
# A sweep walks primes in ascending order and stops at the first failure.

# %%
report = claims.sweep_theorem_1_2(5, 200)
print(report.summary())
print(report.details["primes"][:10], "...")

# %% [markdown]
# The prime-value congruences for s_p, s_{p+1}, D_{p-1} and D_p.

# %%
for p in primes_in(3, 23):
    print(p, claims.prime_value_residues(p))
