import random

import pytest

from oracles import (
    all_orientations,
    atlas_graphs,
    random_graph,
    random_orientation,
    random_tree,
    random_unicyclic,
    sympy_charpoly,
)
from skewenergy.charpoly import (
    InvariantViolation,
    SkewCoeffs,
    berkowitz,
    coeffs_combinatorial,
    coeffs_exact,
    coeffs_unicyclic,
    family_coeffs,
    verify_pendant_recurrence,
)
from skewenergy.extremal import enumerate_unicyclic
from skewenergy.graph import cycle_graph, girth, make_family, matching_counts, path_graph
from skewenergy.orient import MINUS, PLUS, OrientedGraph, orient_by_index, orient_unicyclic, skew_matrix


def canon(kind, n, length, sign):
    return orient_unicyclic(make_family(kind, n, length), sign)


def assert_structural(c, og):
    assert c[0] == 1
    if og.n >= 2:
        assert c[1] == og.base.m
    assert all(x >= 0 for x in c)


class TestSkewCoeffs:
    def test_accessors(self):
        c = SkewCoeffs((1, 4, 4), 4)
        assert c.b(2) == 4 and c.b(3) == 0 and c.b(6) == 0
        assert c.polynomial() == [1, 0, 4, 0, 4]

    def test_invariants(self):
        with pytest.raises(InvariantViolation):
            SkewCoeffs((1, -1), 2)
        with pytest.raises(InvariantViolation):
            SkewCoeffs((2, 1), 2)
        with pytest.raises(ValueError):
            SkewCoeffs((1, 1, 1), 2)


class TestBerkowitz:
    def test_against_sympy(self):
        rng = random.Random(2)
        for _ in range(150):
            n = rng.randrange(0, 9)
            M = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
            assert berkowitz(M) == sympy_charpoly(M)

    def test_skew_against_sympy(self):
        rng = random.Random(4)
        for _ in range(50):
            og = random_orientation(rng, random_graph(rng, rng.randrange(1, 11), 0.4))
            assert berkowitz(skew_matrix(og).tolist()) == sympy_charpoly(skew_matrix(og).tolist())


class TestCoeffsExact:
    def test_k2(self):
        assert coeffs_exact(OrientedGraph.from_arcs(2, [(0, 1)])).coeffs == (1, 1)

    def test_c4_minus(self):
        assert coeffs_exact(canon("cycle", 4, None, MINUS)).coeffs == (1, 4, 0)

    def test_p4_any_orientation(self):
        for og in all_orientations(path_graph(4)):
            assert coeffs_exact(og).coeffs == (1, 3, 1)

    def test_trees_are_matching_counts(self):
        rng = random.Random(12)
        for _ in range(100):
            T = random_tree(rng, rng.randrange(1, 13))
            assert coeffs_exact(random_orientation(rng, T)).coeffs == matching_counts(T)


class TestCoeffsCombinatorial:
    def test_c4(self):
        assert coeffs_combinatorial(canon("cycle", 4, None, MINUS)).coeffs == (1, 4, 0)
        assert coeffs_combinatorial(canon("cycle", 4, None, PLUS)).coeffs == (1, 4, 4)

    def test_s53_any_orientation(self):
        for og in all_orientations(make_family("snl", 5, 3)):
            assert coeffs_combinatorial(og).coeffs == (1, 5, 2)

    def test_random_graphs_agree_with_exact(self):
        rng = random.Random(13)
        for _ in range(1000):
            n = rng.randrange(1, 11)
            og = random_orientation(rng, random_graph(rng, n, rng.choice((0.2, 0.3, 0.4))))
            c = coeffs_exact(og)
            assert coeffs_combinatorial(og) == c
            assert_structural(c, og)

    @pytest.mark.slow
    def test_exhaustive_agreement_small_graphs(self):
        # every orientation of every graph on at most 6 vertices, up to isomorphism of the base
        total = 0
        for G in atlas_graphs(6):
            for og in all_orientations(G):
                c = coeffs_exact(og)
                assert coeffs_combinatorial(og) == c
                assert_structural(c, og)
                total += 1
        assert total == 145_252


class TestCoeffsUnicyclic:
    def test_s64_plus(self):
        assert coeffs_unicyclic(canon("snl", 6, 4, PLUS)).coeffs == (1, 6, 8, 0)

    def test_s54_minus(self):
        assert coeffs_unicyclic(canon("snl", 5, 4, MINUS)).coeffs == (1, 5, 2)

    def test_p64_plus(self):
        # m(P_6^4) by brute force is (1, 6, 8, 2); G - C is a single edge
        assert matching_counts(make_family("pnl", 6, 4)) == (1, 6, 8, 2)
        assert coeffs_unicyclic(canon("pnl", 6, 4, PLUS)).coeffs == (1, 6, 10, 4)

    def test_rejects_non_unicyclic(self):
        with pytest.raises(ValueError):
            coeffs_unicyclic(orient_by_index(path_graph(4)))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_matches_exact_on_all_classes(self, n):
        for G in enumerate_unicyclic(n):
            for sign in (PLUS, MINUS):
                og = orient_unicyclic(G, sign)
                assert coeffs_unicyclic(og) == coeffs_exact(og)

    def test_random_orientations(self):
        rng = random.Random(14)
        for _ in range(200):
            og = random_orientation(rng, random_unicyclic(rng, rng.randrange(3, 11)))
            assert coeffs_unicyclic(og) == coeffs_exact(og)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_plus_dominates_minus(self, n):
        for G in enumerate_unicyclic(n):
            plus = coeffs_exact(orient_unicyclic(G, PLUS))
            minus = coeffs_exact(orient_unicyclic(G, MINUS))
            assert all(a >= b for a, b in zip(plus, minus))
            if girth(G) % 2:
                assert plus == minus


class TestPendantRecurrence:
    def test_tree_edges(self):
        rng = random.Random(15)
        for _ in range(30):
            T = random_tree(rng, rng.randrange(2, 10))
            og = random_orientation(rng, T)
            assert all(verify_pendant_recurrence(og, e) for e in T.edges)

    def test_s64_pendant(self):
        og = canon("snl", 6, 4, PLUS)
        assert verify_pendant_recurrence(og, (0, 4))
        assert verify_pendant_recurrence(og, (0, 5))

    def test_odd_cycle_edges_allowed(self):
        og = canon("pnl", 7, 5, MINUS)
        assert all(verify_pendant_recurrence(og, e) for e in og.base.edges)

    def test_even_cycle_edge_rejected(self):
        with pytest.raises(ValueError):
            verify_pendant_recurrence(canon("cycle", 4, None, MINUS), (0, 1))

    def test_missing_edge_rejected(self):
        with pytest.raises(ValueError):
            verify_pendant_recurrence(canon("cycle", 5, None, MINUS), (0, 2))

    def test_detects_broken_identity(self):
        # on an even cycle edge the identity genuinely fails: C_4 minus gives
        # (1,4,0) but P_4 + K_2 terms give (1,4,1)
        og = canon("cycle", 4, None, MINUS)
        lhs = coeffs_exact(og).coeffs
        rhs0 = coeffs_exact(og.remove_edge(0, 1)).coeffs
        rhs1 = coeffs_exact(og.delete_vertices((0, 1))).coeffs
        assert lhs[2] != rhs0[2] + rhs1[1]


class TestFamilyCoeffs:
    def test_s64_plus(self):
        assert family_coeffs("snl", 6, 4, PLUS).b(4) == 8

    def test_s66(self):
        for sign in (PLUS, MINUS):
            assert family_coeffs("snl", 6, 6, sign).b(4) == 9 == 4 * 6 - 15

    def test_s53(self):
        assert family_coeffs("sn3", 5, 3).b(4) == 2

    @pytest.mark.parametrize("args", [("snl", 3, 4, PLUS), ("snl", 6, 7, PLUS), ("sn3", 6, 4, PLUS), ("cycle", 5, 4, PLUS), ("wheel", 6, 3, PLUS), ("snl", 6, 4, "either")])
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            family_coeffs(*args)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_matches_unicyclic_engine(self, n):
        for length in range(3, n + 1):
            for sign in (PLUS, MINUS):
                expect = coeffs_unicyclic(canon("snl", n, length, sign))
                assert family_coeffs("snl", n, length, sign) == expect
                if length == 3:
                    assert family_coeffs("sn3", n, 3, sign) == expect
        for sign in (PLUS, MINUS):
            assert family_coeffs("cycle", n, n, sign) == coeffs_exact(orient_unicyclic(cycle_graph(n), sign))

    def test_b4_closed_form_small_values(self):
        # (2nl - l^2 + l - 4n)/2 at l = 5, 6, 7
        for n in range(5, 13):
            assert family_coeffs("snl", n, 5, PLUS).b(4) == 3 * n - 10
            if n >= 6:
                assert family_coeffs("snl", n, 6, PLUS).b(4) == 4 * n - 15
            if n >= 7:
                assert family_coeffs("snl", n, 7, PLUS).b(4) == 5 * n - 21
