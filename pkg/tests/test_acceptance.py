"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; the
conftest hook repeats them in the terminal summary.  ``python3 -m
tests.test_acceptance`` runs the suite without pytest.
"""

from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

from trisectkit import (
    Budget,
    HeegaardDiagram,
    catalog,
    check_dsp,
    check_dspp,
    complement_regions,
    connected_sum,
    h1_invariants,
    is_cut_system,
    make_diagram,
    replay_certificate,
    slope_curve,
    smith_normal_form,
    stabilize,
    standard_alpha,
    standard_beta,
    surgery_split,
    union,
    validate_trisection,
)
from trisectkit.catalog import NAMES
from trisectkit.cli import main
from trisectkit.fileformat import emit_certificates

from .generators import (
    SEPARATING_G2,
    pseudo_standard_instance,
    random_cut_system,
    random_slide,
    random_slides,
)
from .oracles import h1_oracle, invariant_factors

RESULTS: list[str] = []


@contextmanager
def criterion(n: int, title: str):
    start = time.perf_counter()
    detail = {}
    try:
        yield detail
    except BaseException:
        line = f"[FAIL] criterion {n}: {title}"
        RESULTS.append(line)
        print("\n" + line)
        raise
    extra = ", ".join(f"{k}={v}" for k, v in detail.items())
    line = f"[PASS] criterion {n}: {title} ({extra}{', ' if extra else ''}{time.perf_counter() - start:.1f}s)"
    RESULTS.append(line)
    print("\n" + line)


def diag(factors) -> list:
    return [[x if i == j else 0 for j in range(len(factors))] for i, x in enumerate(factors)]


# --- 1 -----------------------------------------------------------------------


def test_criterion_1_euler():
    with criterion(1, "Euler characteristic of 200 random diagrams per genus 1..3") as d:
        count = 0
        for g in (1, 2, 3):
            rng = random.Random(100 + g)
            for _ in range(200):
                A, B = random_cut_system(g, rng), random_cut_system(g, rng)
                D = make_diagram(g, {"a": A, "b": B})
                assert D.V - D.E + D.F == 2 - 2 * g
                # each crossing is a 4-valent vertex of the curve graph
                assert sum(r.euler_characteristic for r in D.map.regions) - D.n_crossings == 2 - 2 * g
                for M in (A, B):
                    assert sum(r.euler_characteristic for r in complement_regions(M)) == 2 - 2 * g
                count += 1
        d["diagrams"] = count


# --- 2 -----------------------------------------------------------------------


def test_criterion_2_cut_systems():
    with criterion(2, "cut systems and their preservation under band slides") as d:
        for g in (1, 2, 3, 4):
            assert is_cut_system(standard_alpha(g))
        a1 = standard_alpha(2).component(0)
        assert not is_cut_system(union(a1, a1))
        assert not is_cut_system(union(a1, SEPARATING_G2))
        slides = 0
        for g in (2, 3, 4):
            rng = random.Random(200 + g)
            M = standard_alpha(g)
            done = attempts = 0
            while done < 100:
                attempts += 1
                assert attempts < 1000
                N, step = random_slide(M, rng, m=1)
                if step is None or len(N.chords) > 60:
                    M = random_cut_system(g, rng, n_slides=0)
                    continue
                assert is_cut_system(N)
                M, done = N, done + 1
            slides += done
        d["slides"] = slides


# --- 3 -----------------------------------------------------------------------


def test_criterion_3_snf_oracle():
    with criterion(3, "Smith normal form against determinantal divisors") as d:
        rng = random.Random(3)
        for _ in range(500):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
            assert smith_normal_form(M) == invariant_factors(M)
        d["matrices"] = 500


# --- 4 -----------------------------------------------------------------------


def test_criterion_4_hopf_and_unlink():
    with criterion(4, "hopf-L and unlink-L are dsp with replayable certificates") as d:
        depths = {}
        for name in ("hopf-L", "unlink-L"):
            S = catalog(name)
            assert S.genus == 2
            v = check_dsp(S.alpha, S.beta, S.L)
            assert v.certified
            assert all(c.depth <= 4 and replay_certificate(c).ok for c in v.certificates)
            assert surgery_split(S.alpha, S.beta, S.L).verdict.is_s3
            depths[name] = max(c.depth for c in v.certificates)
        d["max depth"] = depths


# --- 5 -----------------------------------------------------------------------


def test_criterion_5_pseudo_standard_arithmetic():
    with criterion(5, "k1 + k2 = k on 50 slid pseudo-standard instances") as d:
        for s in range(50):
            rng = random.Random(s)
            g = rng.choice([2, 3])
            alpha, beta, L, k1, k2 = pseudo_standard_instance(g, rng)
            L = random_slides(L, rng.choice([1, 2]), rng, m=1)
            v = check_dspp(alpha, beta, L, Budget(depth=3))
            assert v.certified, s
            assert all(replay_certificate(c).ok for c in v.certificates)
            split = surgery_split(alpha, beta, L)
            assert (v.k1, v.k2) == (k1, k2)
            assert v.k1 + v.k2 == v.k == split.verdict.k
            assert (split.first_verdict.k, split.second_verdict.k) == (v.k1, v.k2)
        d["instances"] = 50


# --- 6 -----------------------------------------------------------------------


def test_criterion_6_slide_invariance():
    with criterion(6, "surgery verdict unchanged under 50 slides of L on 20 seeds") as d:
        total = 0
        for s in range(20):
            rng = random.Random(1000 + s)
            g = rng.choice([2, 3])
            alpha, beta, L = (random_cut_system(g, rng, 2) for _ in range(3))
            expected = surgery_split(alpha, beta, L).verdict.factors
            done = attempts = 0
            while done < 50:
                attempts += 1
                assert attempts < 500
                N, step = random_slide(L, rng, m=2)
                if step is None:
                    N, step = random_slide(L, rng, m=0)
                if step is None or len(N.chords) > 60:
                    continue
                L, done = N, done + 1
                assert surgery_split(alpha, beta, L).verdict.factors == expected
            total += done
        d["slides"] = total


# --- 7 -----------------------------------------------------------------------

GENUS_ONE = {
    "trisection-111": "(1;1,1,1)",
    "trisection-000": "(1;0,0,0)",
    "trisection-100": "(1;1,0,0)",
    "trisection-010": "(1;0,1,0)",
    "trisection-001": "(1;0,0,1)",
}


def test_criterion_7_trisections():
    with criterion(7, "trisection signatures, stabilization and sums") as d:
        for name, sig in GENUS_ONE.items():
            assert validate_trisection(catalog(name)).signature() == sig
        names = [n for n in NAMES if n.startswith("trisection-")]
        names += [f"sum({a},{b})" for a, b in itertools.combinations(GENUS_ONE, 2)]
        checks = 0
        for name in names:
            T = catalog(name)
            before = validate_trisection(T)
            for sector in (1, 2, 3):
                after = validate_trisection(stabilize(T, sector))
                expected = list(before.k)
                expected[sector - 1] += 1
                assert after.genus == before.genus + 1 and list(after.k) == expected
                checks += 1
        for a, b in itertools.product(GENUS_ONE, repeat=2):
            ra, rb = validate_trisection(catalog(a)), validate_trisection(catalog(b))
            rs = validate_trisection(connected_sum(catalog(a), catalog(b)))
            for va, vb, v in zip(ra.verdicts, rb.verdicts, rs.verdicts):
                assert v.factors == invariant_factors(diag(va.factors + vb.factors))
        d["stabilizations"] = checks


# --- 8 -----------------------------------------------------------------------


def determinism_instances():
    S = catalog("hopf-L")
    yield "dsp hopf-L", check_dsp, (S.alpha, S.beta, S.L), Budget(depth=4)
    for s, fn in ((4, check_dspp), (18, check_dspp), (44, check_dsp)):
        rng = random.Random(s)
        g = rng.choice([2, 3])
        alpha, beta, L, _, _ = pseudo_standard_instance(g, rng)
        L = random_slides(L, rng.choice([1, 2]), rng, m=1)
        yield f"{fn.__name__} seed {s}", fn, (alpha, beta, L), Budget(depth=3)


def test_criterion_8_determinism(tmp_path):
    with criterion(8, "certificates byte-identical across runs and worker counts") as d:
        runs = 0
        for label, fn, args, budget in determinism_instances():
            texts = set()
            for workers in (1, 1, 1, 2, 8):
                v = fn(*args, budget, workers=workers)
                assert v.certified, label
                texts.add(emit_certificates(v.certificates))
                runs += 1
            assert len(texts) == 1, label
        blobs = set()
        for n, workers in enumerate((1, 1, 1, 2, 8)):
            path = tmp_path / f"hopf{n}.cert"
            argv = ["search-dsp", "example:hopf-L", "--workers", str(workers), "--cert", str(path)]
            assert main(argv) == 0
            blobs.add(path.read_bytes())
            runs += 1
        assert len(blobs) == 1
        d["runs"] = runs


# --- 9 -----------------------------------------------------------------------


def negative_controls():
    for p in (2, 3, 4, 5):
        S = catalog(f"lens-L({p})")
        yield f"lens-L({p}) dsp", "primitive", check_dsp, S.alpha, S.beta, S.L
        yield f"lens-L({p}) dspp", "pseudo", check_dspp, S.alpha, S.beta, S.L
    for g in (2, 3):
        a, b = standard_alpha(g), standard_beta(g)
        yield f"beta g={g} dsp", "primitive", check_dsp, a, b, b
        yield f"alpha g={g} dsp", "primitive", check_dsp, a, b, a
    rng = random.Random(9)
    for p in (2, 3, 5):
        for _ in range(3):
            g = rng.choice([2, 3])
            parts = [slope_curve(p, 1, g, 0)] + [slope_curve(1, 1, g, h) for h in range(1, g)]
            L = random_slides(union(*parts), 2, rng, m=1)
            yield f"torsion p={p} g={g}", "pseudo", check_dspp, standard_alpha(g), standard_beta(g), L


def test_criterion_9_refutation_soundness():
    with criterion(9, "every refuted negative control confirmed by recomputed H_1") as d:
        refuted = 0
        for label, mode, fn, alpha, beta, L in negative_controls():
            v = fn(alpha, beta, L)
            assert v.refuted, label
            refuted += 1
            pieces = []
            for Delta in (alpha, beta):
                hv = h1_invariants(HeegaardDiagram(Delta, L))
                assert hv.factors == h1_oracle(Delta, L), label
                pieces.append(hv)
            bad = [hv for hv in pieces if (not hv.is_s3 if mode == "primitive" else bool(hv.torsion))]
            assert bad, label
            assert {o.factors for o in v.obstruction} == {hv.factors for hv in bad}, label
        d["refuted"] = refuted


if __name__ == "__main__":
    import pathlib
    import tempfile

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                    with tempfile.TemporaryDirectory() as tmp:
                        fn(pathlib.Path(tmp))
                else:
                    fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
