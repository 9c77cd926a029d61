"""
Delannoy and Schröder numbers
=============================

Three ways to get the central Delannoy numbers, and the little/large
Schröder pair.
"""

# %%
from delannoy import (
    delannoy_direct,
    delannoy_table,
    large_schroder,
    little_schroder_direct,
    little_schroder_table,
    trinomial_T,
)

# %% [markdown]
# The recurrence table is the fast path. The direct binomial sum and the
# generalized trinomial coefficient T_n(3, 2) are slower, independent
# routes to the same numbers.

# %%
table = delannoy_table(10)
print(list(table.values))
assert all(table[n] == delannoy_direct(n) == trinomial_T(n, 3, 2) for n in range(11))

# %% [markdown]
# Little Schröder tables start at index 1; the large numbers are twice the
# little ones from n = 1 on.

# %%
s = little_schroder_table(8)
print(s.start, list(s.values))
print([large_schroder(n) for n in range(9)])
assert all(large_schroder(n) == 2 * little_schroder_direct(n) for n in range(1, 9))

# %% [markdown]
# Values are Python ints, so nothing overflows.

# %%
print(len(str(delannoy_table(1000)[1000])), "digits in D_1000")
