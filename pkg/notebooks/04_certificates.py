"""
Telescoping certificates
========================

A certificate F satisfies t(k) = F(k+1) - F(k), so a sum of t collapses to
F(n+1) - F(1). The certificates here are stored as data and checked in
exact arithmetic.
"""

# %%
from fractions import Fraction

from delannoy.verifier import certificates as cert

# %%
for spec in cert.CERTIFICATES.values():
    print(spec.id, "scale", spec.scale, "terms", len(spec.terms))
    print("  ", cert.sweep_certificate(spec, 20).summary())

# %% [markdown]
# F(1) reads sequence values below their domain (D_{-1}, s_0). They only
# appear with a zero factor, which is confirmed by evaluating F(1) with
# those values set to 0 and then to 1.

# %%
print(cert.certificate_value(cert.F2, 4, 1, probe=0), cert.certificate_value(cert.F2, 4, 1, probe=1))

# %% [markdown]
# Change one coefficient and the sweep fails at the smallest instance.

# %%
broken = cert.F2.with_coefficient(0, Fraction(1, 71))
report = cert.sweep_certificate(broken, 20)
print(report.summary())
print(report.counterexample)
