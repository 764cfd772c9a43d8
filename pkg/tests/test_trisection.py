import itertools

import pytest

from trisectkit import (
    Budget,
    HeegaardDiagram,
    Multicurve,
    SurgeryInstance,
    TrisectionDiagram,
    band_slide,
    catalog,
    check_dsp,
    connected_sum,
    enumerate_slide_arcs,
    h1_invariants,
    is_standard,
    slope_curve,
    stabilize,
    standard_alpha,
    validate_trisection,
)
from trisectkit.catalog import HOPF_L_CHORDS, NAMES

from .oracles import invariant_factors

GENUS_ONE = {
    "trisection-111": "(1;1,1,1)",
    "trisection-000": "(1;0,0,0)",
    "trisection-100": "(1;1,0,0)",
    "trisection-010": "(1;0,1,0)",
    "trisection-001": "(1;0,0,1)",
}


@pytest.mark.parametrize("name,signature", GENUS_ONE.items())
def test_genus_one_signatures(name, signature):
    rep = validate_trisection(catalog(name))
    assert rep.signature() == signature
    assert rep.balanced == (signature in ("(1;1,1,1)", "(1;0,0,0)"))
    assert not rep.warnings


def test_all_parallel_verdicts():
    rep = validate_trisection(catalog("trisection-111"))
    assert all(v.factors == (0,) for v in rep.verdicts)
    assert rep.euler_characteristic == 0


def test_searches_certify_genus_one_pairs():
    rep = validate_trisection(catalog("trisection-100"), Budget(depth=1))
    assert set(rep.search_status.values()) == {"certified"}
    assert len(rep.certificates) == 3


def test_sum_of_dual_diagrams():
    T = connected_sum(catalog("trisection-000"), catalog("trisection-000"))
    assert validate_trisection(T).signature() == "(2;0,0,0)"


def test_sum_with_parallel_diagram_adds_one():
    T = catalog("sum(trisection-100,trisection-111)")
    assert validate_trisection(T).signature() == "(2;2,1,1)"


def test_sum_needs_positive_genus():
    empty = Multicurve(0)
    with pytest.raises(ValueError):
        TrisectionDiagram(empty, empty, empty)


def test_stabilize_examples():
    T = catalog("trisection-000")
    assert validate_trisection(stabilize(T, 1)).signature() == "(2;1,0,0)"
    T3 = stabilize(stabilize(stabilize(T, 1), 2), 3)
    rep = validate_trisection(T3)
    assert rep.signature() == "(4;1,1,1)" and rep.balanced
    with pytest.raises(ValueError):
        stabilize(T, 4)


def test_stabilization_commutes_with_sum():
    T1, T2 = catalog("trisection-000"), catalog("trisection-111")
    a = validate_trisection(stabilize(connected_sum(T1, T2), 2))
    b = validate_trisection(connected_sum(stabilize(T1, 2), T2))
    assert a.signature() == b.signature()
    assert [v.factors for v in a.verdicts] == [v.factors for v in b.verdicts]


@pytest.mark.parametrize("name", list(GENUS_ONE) + ["sum(trisection-000,trisection-010)"])
@pytest.mark.parametrize("sector", [1, 2, 3])
def test_stabilize_moves_one_sector(name, sector):
    T = catalog(name)
    before = validate_trisection(T)
    after = validate_trisection(stabilize(T, sector))
    assert after.genus == before.genus + 1
    expected = list(before.k)
    expected[sector - 1] += 1
    assert list(after.k) == expected


@pytest.mark.parametrize("n1,n2", list(itertools.combinations(GENUS_ONE, 2)))
def test_sum_concatenates_factor_lists(n1, n2):
    r1, r2 = validate_trisection(catalog(n1)), validate_trisection(catalog(n2))
    rs = validate_trisection(connected_sum(catalog(n1), catalog(n2)))
    for v1, v2, v in zip(r1.verdicts, r2.verdicts, rs.verdicts):
        diag = v1.factors + v2.factors
        oracle = invariant_factors([[x if i == j else 0 for j in range(len(diag))] for i, x in enumerate(diag)])
        assert v.factors == oracle


@pytest.mark.parametrize("name", list(GENUS_ONE) + ["sum(trisection-100,trisection-001)"])
def test_cyclic_rotation_permutes_k(name):
    T = catalog(name)
    k = validate_trisection(T).k
    assert validate_trisection(T.rotated()).k == k[1:] + k[:1]


def test_torsion_warns_and_leaves_k_undefined():
    a = standard_alpha(1)
    rep = validate_trisection(TrisectionDiagram(a, slope_curve(2, 1), slope_curve(1, 1)))
    assert rep.k is None and rep.warnings and not rep.balanced


# --- catalog -----------------------------------------------------------------


def test_catalog_heegaard_examples():
    assert is_standard(catalog("standard-s3(2)"))
    assert h1_invariants(catalog("s1s2(3,2)")).factors == (1, 0, 0)
    assert h1_invariants(catalog("lens(5,2)")).torsion == (5,)


def test_catalog_surgery_examples():
    for name in ("hopf-L", "unlink-L", "unlink-L(3)", "lens-L(2)"):
        S = catalog(name)
        assert isinstance(S, SurgeryInstance)
    H = catalog("hopf-L")
    assert check_dsp(H.alpha, H.beta, H.L).certified


def test_hopf_chords_are_a_band_sum_of_the_unlink():
    U = catalog("unlink-L").L
    arc = enumerate_slide_arcs(U, 0, 1, 0)[0]  # first in (crossings, encoding) order
    assert band_slide(U, 0, 1, arc) == Multicurve(2, HOPF_L_CHORDS)


def test_catalog_sums_and_errors():
    D = catalog("sum(standard-s3(1),s1s2(2,1))")
    assert isinstance(D, HeegaardDiagram) and D.genus == 3
    assert h1_invariants(D).k == 1
    for bad in ("nope", "s1s2(2)", "standard-s3(x)", "sum(hopf-L,trisection-000)", "sum(hopf-L"):
        with pytest.raises((KeyError, ValueError)):
            catalog(bad)
    assert "hopf-L" in NAMES
