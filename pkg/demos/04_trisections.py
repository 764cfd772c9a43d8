"""
Trisection diagrams
===================

Three cut systems alpha, beta, gamma on one surface form a trisection
diagram when each pair presents a connected sum of copies of S1 x S2.  The
numbers of copies are (k1, k2, k3).
"""

from trisectkit import Budget, catalog, connected_sum, stabilize, validate_trisection

# %%
# The genus-1 diagrams.

for name in ("trisection-000", "trisection-111", "trisection-100", "trisection-010", "trisection-001"):
    rep = validate_trisection(catalog(name))
    print(name, rep.signature(), "chi =", rep.euler_characteristic, "balanced" if rep.balanced else "")

# %%
# Stabilization adds a genus-1 piece and raises one k_i.

T = catalog("trisection-000")
for sector in (1, 2, 3):
    T = stabilize(T, sector)
    print(validate_trisection(T).signature())

# %%
# Connected sums concatenate the factor lists of each pair.

T = connected_sum(catalog("trisection-111"), catalog("trisection-100"))
rep = validate_trisection(T)
print(rep.signature(), [v.factors for v in rep.verdicts])

# %%
# With a budget each pair is also searched for a standard position.

rep = validate_trisection(catalog("trisection-010"), budget=Budget(depth=2))
print(rep.search_status)
