"""Acceptance gate: the pinned desk-scale checks, one line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines
as they complete.  The exhaustive searches (criteria 7-12) dominate the
runtime; every budget below is asserted, not aspirational.
"""

from __future__ import annotations

import time

import pytest

from srlab import (
    GF2,
    QQ,
    Complex,
    SearchSpace,
    alexander_dual,
    complex_info,
    cone,
    hochster_betti,
    homological_invariants,
    is_buchsbaum,
    is_cycle_graph,
    min_cm_t,
    minimal_nonfaces,
    reduced_homology,
    reisner_cm,
    satisfies_serre,
    skeleton_graph,
    verify_theorem,
)
from srlab.fixtures import fixture_complex, fixture_graph

from conftest import all_pure_complexes, gamma_complex


def _report(num: int, elapsed: float, budget: float, detail: str) -> None:
    print(f"ACCEPTANCE {num}: PASS in {elapsed:.2f}s (budget {budget:.0f}s) - {detail}")
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget"


def _verify_ok(theorem_id: str, **kw):
    result = verify_theorem(theorem_id, **kw)
    assert result.ok(), (
        f"{theorem_id}: {len(result.counterexamples)} counterexample(s), "
        f"first: {result.counterexamples[:1]}"
    )
    return result


def test_criterion_01_murai_terai_fixture():
    t0 = time.perf_counter()
    mt6 = fixture_complex("MT6")
    for field in (GF2, QQ):
        assert satisfies_serre(mt6, 3, field) is True
        assert reisner_cm(mt6, field) is False
        assert is_buchsbaum(mt6, field) is True
    _report(1, time.perf_counter() - t0, 1.0,
            "MT6 satisfies S_3, is Buchsbaum, is not CM over GF(2) and QQ")


def test_criterion_02_coned_murai_terai():
    t0 = time.perf_counter()
    c = cone(fixture_complex("MT6"), 7)
    assert min_cm_t(c) == 2
    assert is_buchsbaum(c) is False
    _report(2, time.perf_counter() - t0, 5.0, "cone(MT6) is CM_2 but not Buchsbaum")


def test_criterion_03_pentagon_dual():
    t0 = time.perf_counter()
    c = fixture_complex("DUALC5")
    inv = homological_invariants(hochster_betti(c, GF2, "ring"))
    assert inv.depth == 2 == inv.dim_ring - 1
    assert inv.cm is False
    assert is_buchsbaum(c) is True
    assert is_cycle_graph(skeleton_graph(alexander_dual(c))) is True
    assert skeleton_graph(alexander_dual(c)) == fixture_graph("C5.graph")
    _report(3, time.perf_counter() - t0, 1.0,
            "DUALC5: depth 2 = d-1, Buchsbaum, not CM, dual skeleton is the 5-cycle")


def test_criterion_04_pendant_cycle_dual():
    t0 = time.perf_counter()
    r6 = fixture_complex("R6")
    d6 = alexander_dual(r6)
    assert d6 == fixture_complex("D6")
    reading_direct = min_cm_t(r6)     # the listed 1-dimensional complex
    reading_dual = min_cm_t(d6)       # its Alexander dual
    assert reading_dual == 2          # the dual realizes "CM_2 but not CM_1"
    assert reading_direct == 0        # the listed complex is already CM
    inv = homological_invariants(hochster_betti(d6, GF2, "ring"))
    assert inv.projdim_ring == 3
    _report(4, time.perf_counter() - t0, 1.0,
            f"D6: min CM_t = 2, projdim K[D6] = 3; ambiguity readings logged "
            f"(direct complex: {reading_direct}, dual: {reading_dual})")


def test_criterion_05_gamma_h_vector():
    t0 = time.perf_counter()
    for r in (4, 5, 6):
        g = gamma_complex(r)
        info = complex_info(g)
        assert info.h_vector[r - 2] == -1
        assert reisner_cm(g) is False
    _report(5, time.perf_counter() - t0, 1.0,
            "cycle-complement complexes for r=4,5,6 have h_(r-2) = -1 and are not CM")


def test_criterion_06_square_betti_oracle():
    t0 = time.perf_counter()
    c4 = fixture_complex("C4")
    t = hochster_betti(c4, GF2, "ideal")
    assert t.entries == {(0, 2): 2, (1, 4): 1}
    inv = homological_invariants(hochster_betti(c4, GF2, "ring"))
    assert inv.depth == 2 == inv.dim_ring
    _report(6, time.perf_counter() - t0, 1.0,
            "C4 ideal table is exactly beta(0,2)=2, beta(1,4)=1; depth = dim = 2")


@pytest.mark.slow
@pytest.mark.parametrize("theorem_id", [
    "thm-er", "thm-main", "cor-yan", "yanagawa-bridge",
    "remark-serre", "subadd", "ext-profile",
])
def test_criterion_07_ring_theorems_exhaustive(theorem_id):
    t0 = time.perf_counter()
    result = _verify_ok(theorem_id)
    elapsed = time.perf_counter() - t0
    _report(7, elapsed, 600.0,
            f"{theorem_id}: {result.instances_checked} pure complexes (n<=5), "
            f"0 counterexamples")


@pytest.mark.slow
def test_criterion_08_codim2_theorems_exhaustive():
    t0 = time.perf_counter()
    r1 = _verify_ok("thm-topin")
    r2 = _verify_ok("prop-chardepth")
    elapsed = time.perf_counter() - t0
    _report(8, elapsed, 1800.0,
            f"thm-topin ({r1.instances_checked}) and prop-chardepth "
            f"({r2.instances_checked}) exhaustive over codim-2, n<=7, 0 counterexamples")


@pytest.mark.slow
def test_criterion_09_graph_theorems():
    t0 = time.perf_counter()
    rs = [_verify_ok(tid) for tid in ("thm-main2", "cor-linear", "froberg")]
    elapsed = time.perf_counter() - t0
    counts = ", ".join(f"{r.theorem_id}={r.instances_checked}" for r in rs)
    _report(9, elapsed, 900.0,
            f"graph equivalences on <=6 vertices exhaustive plus 500 sampled "
            f"7-vertex graphs: {counts}, 0 counterexamples")


@pytest.mark.slow
def test_criterion_10_buchsbaum_homology_bound():
    t0 = time.perf_counter()
    r = _verify_ok("cor-bk")
    mt6 = fixture_complex("MT6")
    hv = reduced_homology(mt6, GF2)
    witnesses = [i for i in hv.nonzero_degrees() if i >= 1]
    assert witnesses and all(6 >= 2 * 4 - i for i in witnesses)
    elapsed = time.perf_counter() - t0
    _report(10, elapsed, 600.0,
            f"cor-bk: {r.instances_checked} instances (n<=6, incl. MT6 with "
            f"H_{witnesses} nonzero), 0 counterexamples")


@pytest.mark.slow
def test_criterion_11_subdivision_invariance():
    t0 = time.perf_counter()
    r = _verify_ok("sd-invariance")
    assert r.instances_checked == 20
    elapsed = time.perf_counter() - t0
    _report(11, elapsed, 600.0,
            "min CM_t / max Serre / singularity bound agree with the barycentric "
            "subdivision on 20 seeded complexes")


@pytest.mark.slow
def test_criterion_12_cross_oracle_suite():
    t0 = time.perf_counter()
    checked = 0
    for n in range(1, 6):
        for d in range(1, n + 1):
            for c in all_pure_complexes(n, d):
                checked += 1
                dual = alexander_dual(c)
                assert alexander_dual(dual) == c
                nf_counts: dict[int, int] = {}
                for nf in minimal_nonfaces(c):
                    nf_counts[len(nf)] = nf_counts.get(len(nf), 0) + 1
                for field in (GF2, QQ):
                    hv = reduced_homology(c, field)
                    hom_euler = sum((-1) ** i * v for i, v in hv.as_dict().items())
                    face_euler = sum((-1) ** (i - 1) * f
                                     for i, f in enumerate(c.f_vector()))
                    assert hom_euler == face_euler
                    ring = hochster_betti(c, field, "ring")
                    inv = homological_invariants(ring)
                    assert inv.cm == reisner_cm(c, field)
                    gens = {j: v for (i, j), v in ring.entries.items() if i == 1}
                    assert gens == nf_counts
    elapsed = time.perf_counter() - t0
    _report(12, elapsed, 600.0,
            f"CM-vs-depth, generator-vs-nonface, dual involution and Euler "
            f"identities over {checked} complexes, GF(2) and QQ")


@pytest.mark.slow
def test_criterion_13_determinism():
    t0 = time.perf_counter()
    pairs = [
        dict(theorem_id="sd-invariance"),
        dict(theorem_id="thm-er", max_n=4),
        dict(theorem_id="thm-main2", max_n=5, sample=40, seed=77),
    ]
    for kw in pairs:
        a = verify_theorem(**kw)
        b = verify_theorem(**kw)
        assert a.to_json() == b.to_json()
    elapsed = time.perf_counter() - t0
    _report(13, elapsed, 600.0,
            "repeated verify runs serialize to byte-identical JSON")
