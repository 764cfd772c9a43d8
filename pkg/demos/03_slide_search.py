"""
Searching for primitive position
================================

A framed link L given as a cut system on a Heegaard surface is dsp when
handle slides put it in primitive position with respect to both handlebodies.
Then surgery on L gives the 3-sphere.  The search returns a certificate that
can be replayed independently.
"""

from trisectkit import Budget, catalog, check_dsp, check_dspp, replay_certificate, surgery_split
from trisectkit.fileformat import emit_certificates

# %%
# The unlink instance is primitive on both sides already.

U = catalog("unlink-L")
v = check_dsp(U.alpha, U.beta, U.L)
print(v.status, [c.depth for c in v.certificates])

# %%
# The Hopf instance needs one slide on each side.

H = catalog("hopf-L")
v = check_dsp(H.alpha, H.beta, H.L, Budget(depth=4))
print(v.status, [c.depth for c in v.certificates])
print(emit_certificates(v.certificates[:1]))

# %%
# Replay redoes every slide and checks the final matching.

for cert in v.certificates:
    print(cert.side, replay_certificate(cert).ok)
print(surgery_split(H.alpha, H.beta, H.L).verdict.label())

# %%
# Torsion rules a link out without searching.

X = catalog("lens-L(3)")
v = check_dsp(X.alpha, X.beta, X.L)
print(v.status, [o.label() for o in v.obstruction])

# %%
# Pseudo-primitive position also allows curves isotopic to the cut system.
# Surgery on the beta curves themselves gives S1 x S2 # S1 x S2.

S = catalog("standard-s3(2)")
v = check_dspp(S.alpha, S.beta, S.beta)
print(v.status, "k1 =", v.k1, "k2 =", v.k2, surgery_split(S.alpha, S.beta, S.beta).verdict.label())

# %%
# A budget that is too small is reported as exhausted, not refuted.

print(check_dsp(H.alpha, H.beta, H.L, Budget(depth=0)).status)
