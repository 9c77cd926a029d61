"""
Polynomial analogues and exact division
=======================================

Integer polynomials are tuples of coefficients in ascending degree.
"""

# %%
from delannoy import NotDivisible, exact_div, little_schroder_poly_table
from delannoy.polynomials import ONE_PLUS_2X, X2_PLUS_X, format_poly

# %%
table = little_schroder_poly_table(6)
for n, p in enumerate(table, start=1):
    print(f"s_{n}(x) = {format_poly(p):<28} s_{n}(1) = {p(1)}")

# %% [markdown]
# ``exact_div`` divides over Q, then insists the quotient has integer
# coefficients. Even-indexed s_n(x) are multiples of 1+2x; odd ones are not.

# %%
print(format_poly(exact_div(table[3], ONE_PLUS_2X)))
try:
    exact_div(table[2], ONE_PLUS_2X)
except NotDivisible as err:
    print("s_3(x) / (1+2x):", err)

# %% [markdown]
# s_{n+1}(x) - (1+2x) s_n(x) is always a multiple of x^2 + x.

# %%
for n in range(1, 6):
    q = exact_div(table[n] - ONE_PLUS_2X * table[n - 1], X2_PLUS_X)
    print(n, format_poly(q))
