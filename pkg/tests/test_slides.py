import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from trisectkit import (
    SlideArc,
    band_slide,
    canonical_encoding,
    enumerate_slide_arcs,
    is_cut_system,
    standard_alpha,
    union,
)
from trisectkit.slides import Attachment, SlideError, validate_arc

from .generators import random_cut_system, random_slide


def slid_standard():
    A = standard_alpha(2)
    (arc,) = enumerate_slide_arcs(A, 0, 1, 0)
    return A, arc, band_slide(A, 0, 1, arc)


def test_short_arc_is_unique_for_standard_alpha():
    # the two alpha chords share only the middle face of the polygon
    (arc,) = enumerate_slide_arcs(standard_alpha(2), 0, 1, 0)
    assert arc.n_crossings == 0
    assert arc.encode() == "0@0.0-2.0+||1@4.0-6.0+"
    assert SlideArc.decode(arc.encode()) == arc


def test_band_sum_homology_is_sum_of_classes():
    A, _, B = slid_standard()
    a0, a1 = A.homology_class(0), A.homology_class(1)
    classes = {tuple(B.homology_class(i)) for i in range(B.n_components)}
    assert tuple(a1) in classes or tuple(-a1) in classes
    assert classes & {tuple(s * (a0 + t * a1)) for s in (1, -1) for t in (1, -1)}


def test_band_sum_keeps_cut_system():
    _, _, B = slid_standard()
    assert is_cut_system(B)
    assert canonical_encoding(B) != canonical_encoding(standard_alpha(2))


def slide_back(M, target, m=2):
    key = canonical_encoding(target)
    for i in range(M.n_components):
        for j in range(M.n_components):
            for arc in enumerate_slide_arcs(M, i, j, m):
                if canonical_encoding(band_slide(M, i, j, arc)) == key:
                    return arc
    return None


def test_slide_then_slide_back():
    A, _, B = slid_standard()
    assert slide_back(B, A) is not None


def test_components_in_separated_faces_have_no_short_arcs():
    a = standard_alpha(2)
    M = union(a.component(0), a.component(0), a.component(0), a.component(1))
    # the outer parallel copies are separated by the middle one inside the polygon
    assert enumerate_slide_arcs(M, 0, 2, 0) == []
    assert len(enumerate_slide_arcs(M, 0, 2, 1)) >= 1


def test_bad_arcs_rejected():
    A = standard_alpha(2)
    (arc,) = enumerate_slide_arcs(A, 0, 1, 0)
    with pytest.raises(SlideError):
        band_slide(A, 0, 0, arc)
    same = SlideArc(arc.source, Attachment(0, arc.source.chord, -arc.source.side))
    with pytest.raises(SlideError):
        validate_arc(A, same)
    wrong_side = SlideArc(arc.source, Attachment(1, arc.target.chord, -arc.target.side))
    with pytest.raises(SlideError):
        band_slide(A, 0, 1, wrong_side)
    stray = SlideArc(arc.source, Attachment(1, ((1, 0), (3, 0)), 1))
    with pytest.raises(SlideError):
        validate_arc(A, stray)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_arc_lists_grow_with_bound(seed, g):
    M = random_cut_system(g, random.Random(seed))
    i, j = random.Random(seed + 1).sample(range(g), 2)
    sizes = [len(enumerate_slide_arcs(M, i, j, m)) for m in range(3)]
    assert sizes == sorted(sizes)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_random_slides_preserve_cut_systems_and_homology_span(seed, g):
    rng = random.Random(seed)
    M = random_cut_system(g, rng)
    N, step = random_slide(M, rng, m=2)
    assert is_cut_system(N)
    # the classes still span the same lattice: compare gcd of maximal minors
    before = np.array([M.homology_class(i) for i in range(g)])
    after = np.array([N.homology_class(i) for i in range(g)])
    assert np.linalg.matrix_rank(np.vstack([before, after])) == np.linalg.matrix_rank(before)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_random_slides_are_reversible(seed):
    rng = random.Random(seed)
    M = random_cut_system(2, rng, n_slides=2)
    N, step = random_slide(M, rng, m=1)
    if step is None:
        return
    assert slide_back(N, M) is not None
