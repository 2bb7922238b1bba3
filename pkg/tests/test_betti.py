"""Hochster Betti tables, derived invariants, shape predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from srlab import (
    FULL_LINEARITY,
    GF2,
    QQ,
    BettiTable,
    Complex,
    alexander_dual,
    check_er_shape,
    check_ndp,
    check_subadditivity,
    hochster_betti,
    homological_invariants,
    minimal_nonfaces,
    render_betti,
)
from srlab.betti import betti_json, ring_table

from conftest import all_pure_complexes
from test_complexes import small_complexes


class TestHochsterIndexing:
    def test_square_complete_intersection(self, c4):
        # two degree-2 generators, one syzygy in degree 4: the Koszul shape
        t = hochster_betti(c4, GF2, "ideal")
        assert t.entries == {(0, 2): 2, (1, 4): 1}
        inv = homological_invariants(hochster_betti(c4, GF2, "ring"))
        assert (inv.projdim_ring, inv.depth, inv.dim_ring, inv.cm) == (2, 2, 2, True)
        assert inv.regularity_ideal == 3

    def test_full_simplex_empty_table(self):
        t = hochster_betti(Complex.simplex(3), GF2, "ideal")
        assert t.entries == {}
        inv = homological_invariants(hochster_betti(Complex.simplex(3), GF2, "ring"))
        assert (inv.projdim_ring, inv.depth, inv.cm) == (0, 3, True)
        assert inv.regularity_ideal is None

    def test_ring_shift(self, c4):
        ideal = hochster_betti(c4, GF2, "ideal")
        ring = hochster_betti(c4, GF2, "ring")
        assert ring.entries[(0, 0)] == 1
        for (i, j), v in ideal.entries.items():
            assert ring.entries[(i + 1, j)] == v
        assert ring_table(ideal).entries == ring.entries

    def test_irrelevant_complex_koszul(self):
        # maximal ideal of 3 variables: binomial Betti numbers
        t = hochster_betti(Complex.irrelevant(3), GF2, "ideal")
        assert t.entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}

    def test_generator_degrees_match_nonfaces(self, mt6, r6, dualc5):
        for c in (mt6, r6, dualc5):
            t = hochster_betti(c, GF2, "ideal")
            by_size: dict[int, int] = {}
            for nf in minimal_nonfaces(c):
                by_size[len(nf)] = by_size.get(len(nf), 0) + 1
            gens = {j: v for (i, j), v in t.entries.items() if i == 0}
            assert gens == by_size

    @settings(max_examples=30, deadline=None)
    @given(small_complexes(max_n=5))
    def test_generator_row_equals_nonface_counts(self, c):
        if c.is_void:
            return
        for k in (GF2, QQ):
            t = hochster_betti(c, k, "ideal")
            by_size: dict[int, int] = {}
            for nf in minimal_nonfaces(c):
                by_size[len(nf)] = by_size.get(len(nf), 0) + 1
            assert {j: v for (i, j), v in t.entries.items() if i == 0} == by_size

    def test_facet_order_invariance(self, mt6):
        flipped = Complex.from_facets(list(reversed(mt6.facets())), n=6)
        assert hochster_betti(flipped, GF2, "ideal").entries == \
            hochster_betti(mt6, GF2, "ideal").entries

    def test_size_bound(self):
        with pytest.raises(ValueError):
            hochster_betti(Complex.simplex(9), GF2, size_bound=8)

    def test_void_refused(self):
        with pytest.raises(ValueError):
            hochster_betti(Complex.void(3), GF2)


class TestInvariants:
    def test_dualc5_depth(self, dualc5):
        inv = homological_invariants(hochster_betti(dualc5, GF2, "ring"))
        assert (inv.projdim_ring, inv.depth, inv.dim_ring, inv.cm) == (3, 2, 3, False)

    def test_d6_projdim_three(self, d6):
        inv = homological_invariants(hochster_betti(d6, GF2, "ring"))
        assert inv.projdim_ring == 3
        assert inv.depth == 3
        assert inv.dim_ring == 4

    def test_requires_ring_table(self, c4):
        with pytest.raises(ValueError):
            homological_invariants(hochster_betti(c4, GF2, "ideal"))


class TestNdp:
    def test_square(self, c4):
        t = hochster_betti(c4, GF2, "ideal")
        assert check_ndp(t, 2, 1) is True
        assert check_ndp(t, 2, 2) is False
        assert check_ndp(t, 2, 0) is True
        assert check_ndp(t, 2, -3) is True

    def test_dual_mt6_three_linear_steps(self, mt6):
        t = hochster_betti(alexander_dual(mt6), GF2, "ideal")
        assert all(j == 2 for (i, j) in t.entries if i == 0)
        assert check_ndp(t, 2, 3) is True

    def test_full_linearity_sentinel(self, c4, mt6):
        t = hochster_betti(c4, GF2, "ideal")
        assert check_ndp(t, 2, FULL_LINEARITY) is False
        t = hochster_betti(alexander_dual(mt6), GF2, "ideal")
        assert check_ndp(t, 2, FULL_LINEARITY) is False  # linear only three steps

    def test_wrong_generator_degree(self, r6):
        t = hochster_betti(r6, GF2, "ideal")
        assert check_ndp(t, 3, 1) is False  # generated in degree 2, not 3


class TestErShape:
    def test_pendant_cycle_table(self, r6):
        t = hochster_betti(r6, GF2, "ideal")
        assert check_er_shape(t, 6, 4, 2) is True
        assert check_er_shape(t, 6, 4, 1) is False

    def test_square_shape_tracks_dual_cmness(self, c4):
        # dual of the square is two disjoint edges: Buchsbaum, not CM
        t = hochster_betti(c4, GF2, "ideal")
        assert check_er_shape(t, 4, 2, 1) is True
        assert check_er_shape(t, 4, 2, 0) is False

    def test_empty_table_vacuous(self):
        t = hochster_betti(Complex.simplex(3), GF2, "ideal")
        assert check_er_shape(t, 3, 0, 0) is True


class TestSubadditivity:
    def test_square(self, c4):
        assert check_subadditivity(hochster_betti(c4, GF2, "ideal")) == []

    def test_mt6_and_dual(self, mt6):
        assert check_subadditivity(hochster_betti(mt6, GF2, "ideal")) == []
        assert check_subadditivity(hochster_betti(alexander_dual(mt6), GF2, "ideal")) == []

    def test_hand_built_violation(self):
        t = BettiTable("ideal", 8, 3, GF2, {(0, 2): 1, (1, 7): 1})
        v = check_subadditivity(t)
        hs = [x for x in v if x[0] == "HS"]
        assert hs == [("HS", 0, 2)]

    def test_window_violation(self):
        # e = 2 and row 0 empty on the window 3..4 below the (1,5) entry
        t = BettiTable("ideal", 8, 3, GF2, {(0, 2): 1, (1, 5): 1})
        assert ("TV", 0, 3) in check_subadditivity(t)

    @settings(max_examples=25, deadline=None)
    @given(small_complexes(max_n=5))
    def test_hochster_tables_always_clean(self, c):
        if c.is_void:
            return
        assert check_subadditivity(hochster_betti(c, GF2, "ideal")) == []


class TestPresentation:
    def test_render_square(self, c4):
        out = render_betti(hochster_betti(c4, GF2, "ideal"))
        lines = out.splitlines()
        assert lines[1].strip().startswith("2:")
        assert "total" in lines[-1]

    def test_json_payload(self, c4):
        obj = betti_json(hochster_betti(c4, GF2, "ideal"))
        assert obj["schema"] == "sr-lab/1"
        assert [0, 2, 2] in obj["entries"] and [1, 4, 1] in obj["entries"]


class TestCrossOracleSmall:
    def test_exhaustive_n4_both_fields(self):
        from srlab import reisner_cm
        for c in all_pure_complexes(4, 2):
            for k in (GF2, QQ):
                inv = homological_invariants(hochster_betti(c, k, "ring"))
                assert inv.cm == reisner_cm(c, k)

    def test_eagon_reiner_classical_case(self):
        # I_Delta has a linear resolution iff the dual is Cohen-Macaulay
        from srlab import reisner_cm
        for n in (3, 4, 5):
            for d in range(1, n + 1):
                for c in all_pure_complexes(n, d):
                    t = hochster_betti(c, GF2, "ideal")
                    e = t.gen_degree_max
                    if e is None:
                        continue  # full simplex: zero ideal
                    dual = alexander_dual(c)
                    lin = check_ndp(t, e, FULL_LINEARITY)
                    assert lin == reisner_cm(dual, GF2)
