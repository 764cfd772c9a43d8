"""
Curves on a polygon surface
===========================

A genus-g surface is stored as a 4g-gon with glued sides, and a multicurve
as a set of non-crossing chords.  This script builds a few curves, counts
intersections and checks cut systems.
"""

import random

import numpy as np

from trisectkit import (
    algebraic_intersection,
    band_slide,
    complement_regions,
    enumerate_slide_arcs,
    geometric_intersection,
    is_cut_system,
    slope_curve,
    standard_alpha,
    standard_beta,
    union,
)

# %%
# The standard alpha curves of genus 2 run between opposite sides of each
# handle.  Their chords are pairs of boundary points ``(side, slot)``.

alpha = standard_alpha(2)
beta = standard_beta(2)
print(alpha.chords)
print("components:", alpha.n_components)

# %%
# alpha_i and beta_i meet once; curves on different handles miss each other.

print(geometric_intersection(alpha, beta))

# %%
# On the torus a (p, q) curve meets a (r, s) curve |ps - qr| times.

a, b = slope_curve(2, 3), slope_curve(1, 4)
print("geometric", geometric_intersection(a, b)[0, 0], "algebraic", algebraic_intersection(a, b)[0, 0])

# %%
# A cut system has g curves and a connected complement.  Two copies of one
# curve fail: the annulus between them splits off.

print("alpha:", is_cut_system(alpha))
twice = union(alpha.component(0), alpha.component(0))
print("alpha_1 twice:", is_cut_system(twice))
for r in complement_regions(twice):
    print("  region chi", r.euler_characteristic, "genus", r.genus, "boundary", r.n_boundary)

# %%
# Band slides keep cut systems.  Slide repeatedly and watch the chord count.

rng = random.Random(0)
M = alpha
for step in range(6):
    i, j = rng.sample(range(2), 2)
    arcs = enumerate_slide_arcs(M, i, j, 1)
    if not arcs:
        continue
    M = band_slide(M, i, j, rng.choice(arcs))
    classes = np.array([M.homology_class(c) for c in range(2)])
    print(step, len(M.chords), "chords, cut system:", is_cut_system(M), "classes", classes.tolist())
