import dataclasses

import pytest

from trisectkit import (
    Budget,
    band_slide,
    catalog,
    check_dsp,
    check_dspp,
    enumerate_slide_arcs,
    is_primitive_wrt,
    is_pseudo_primitive_wrt,
    replay_certificate,
    slide_search,
    slope_curve,
    standard_alpha,
    standard_beta,
    union,
)
from trisectkit.fileformat import emit_certificates
from trisectkit.slides import Attachment

from .generators import BETA_BIGON

A2, B2 = standard_alpha(2), standard_beta(2)


def beta_slid_once():
    (arc,) = enumerate_slide_arcs(B2, 0, 1, 0)
    return band_slide(B2, 0, 1, arc)


# --- predicates --------------------------------------------------------------


def test_primitive_predicate():
    assert is_primitive_wrt(B2, A2)
    assert not is_primitive_wrt(A2, A2)
    # the extra bigon is removed before counting
    assert is_primitive_wrt(BETA_BIGON, standard_alpha(1))


def test_pseudo_primitive_predicate():
    mixed = union(B2.component(0), A2.component(1))
    assert is_pseudo_primitive_wrt(mixed, A2) == (True, 1)
    assert is_pseudo_primitive_wrt(B2, A2) == (True, 0)
    assert is_pseudo_primitive_wrt(A2, A2) == (True, 2)
    assert is_pseudo_primitive_wrt(slope_curve(4, 1), standard_alpha(1)) == (False, 0)


# --- search ------------------------------------------------------------------


def test_search_undoes_one_slide():
    L = beta_slid_once()
    assert not is_primitive_wrt(L, A2)
    v = slide_search(L, A2, "primitive", Budget(depth=3))
    assert v.certified
    assert v.certificates[0].depth == 1
    assert replay_certificate(v.certificates[0], L, A2).ok


def test_search_refutes_torsion():
    v = slide_search(slope_curve(2, 1), standard_alpha(1), "primitive")
    assert v.refuted
    assert v.obstruction[0].torsion == (2,)


def test_zero_budget_is_exhausted():
    L = beta_slid_once()
    assert slide_search(L, A2, "primitive", Budget(depth=0)).exhausted
    assert slide_search(L, A2, "primitive", Budget(states=0)).exhausted


def test_certification_is_monotone_in_depth():
    L = beta_slid_once()
    results = [slide_search(L, A2, "primitive", Budget(depth=d)).status for d in range(4)]
    first = results.index("certified")
    assert all(r == "certified" for r in results[first:])


def test_search_independent_of_worker_count():
    L = beta_slid_once()
    texts = {
        emit_certificates(slide_search(L, A2, "primitive", Budget(depth=2), workers=w).certificates)
        for w in (1, 2)
    }
    assert len(texts) == 1


# --- dsp / dspp --------------------------------------------------------------


def test_hopf_instance_is_dsp():
    S = catalog("hopf-L")
    v = check_dsp(S.alpha, S.beta, S.L, Budget(depth=4))
    assert v.certified and len(v.certificates) == 2
    assert all(c.depth <= 4 and replay_certificate(c).ok for c in v.certificates)


def test_unlink_instance_is_dsp_at_depth_zero():
    S = catalog("unlink-L")
    v = check_dsp(S.alpha, S.beta, S.L, Budget(depth=0))
    assert v.certified
    assert [c.depth for c in v.certificates] == [0, 0]


def test_beta_is_not_dsp():
    v = check_dsp(A2, B2, B2)
    assert v.refuted
    assert any(o.k == 2 for o in v.obstruction)


def test_dspp_of_beta():
    v = check_dspp(A2, B2, B2)
    assert v.certified and (v.k1, v.k2, v.k) == (0, 2, 2)


def test_dspp_one_parallel_component():
    L = union(A2.component(0), slope_curve(1, 1, 2, 1))
    v = check_dspp(A2, B2, L)
    assert v.certified and v.k == 1
    assert (v.k1, v.k2) == (1, 0)


def test_dspp_torsion_refuted():
    S = catalog("lens-L(3)")
    assert check_dspp(S.alpha, S.beta, S.L).refuted


# --- replay ------------------------------------------------------------------


def test_replay_detects_tampering():
    L = beta_slid_once()
    cert = slide_search(L, A2, "primitive", Budget(depth=2)).certificates[0]
    assert replay_certificate(cert).ok

    step = cert.steps[0]
    src = step.arc.source
    moved = dataclasses.replace(
        step.arc, source=Attachment(1 - src.component, src.chord, src.side)
    )
    bad = dataclasses.replace(cert, steps=(dataclasses.replace(step, arc=moved),))
    assert not replay_certificate(bad).ok

    report = replay_certificate(cert, L=B2, Delta=A2)
    assert not report.ok and "initial L" in report.message


def test_replay_rejects_wrong_goal_record():
    L = beta_slid_once()
    cert = slide_search(L, A2, "primitive", Budget(depth=2)).certificates[0]
    assert not replay_certificate(dataclasses.replace(cert, k=1)).ok
    assert not replay_certificate(dataclasses.replace(cert, steps=())).ok


def test_mode_validation():
    with pytest.raises(ValueError):
        slide_search(B2, A2, "bogus")
