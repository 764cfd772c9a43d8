"""
First homology of Heegaard diagrams
===================================

Two cut systems on one surface present a closed 3-manifold.  Its first
homology comes from the algebraic intersection matrix, reduced to Smith
normal form.
"""

from trisectkit import (
    HeegaardDiagram,
    algebraic_intersection,
    catalog,
    h1_invariants,
    is_pseudo_standard,
    smith_normal_form,
)

# %%
# The standard diagram presents the 3-sphere: the matrix is minus the identity.

D = catalog("standard-s3(3)")
print(algebraic_intersection(D.beta, D.alpha))
print(h1_invariants(D).label())

# %%
# Replacing beta_i by a copy of alpha_i adds an S1 x S2 summand.

for k in range(4):
    v = h1_invariants(catalog(f"s1s2(3,{k})"))
    print(k, v.factors, v.label(), is_pseudo_standard(catalog(f"s1s2(3,{k})")))

# %%
# Lens spaces give torsion.

for p, q in [(2, 1), (5, 2), (7, 3)]:
    print(f"L({p},{q})", h1_invariants(catalog(f"lens({p},{q})")).label())

# %%
# The Smith normal form is exposed directly too.

print(smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))

# %%
# Connected sums stack the factor lists.

S = catalog("sum(lens(3,1),s1s2(1,1))")
print(type(S).__name__, S.genus, h1_invariants(S).factors)
print(isinstance(S, HeegaardDiagram))
