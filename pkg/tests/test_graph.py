import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import atlas_graphs, brute_linear_subgraphs, brute_matchings, random_tree
from skewenergy.graph import (
    Graph,
    LinearSubgraph,
    cycle_graph,
    enumerate_evenly_linear,
    girth,
    is_unicyclic,
    make_family,
    matching_counts,
    path_graph,
    unique_cycle,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


class TestGraphType:
    def test_normalizes_edges(self):
        G = Graph(3, ((2, 0), (1, 0)))
        assert G.edges == ((0, 1), (0, 2))
        assert G == Graph(3, ((0, 2), (0, 1)))

    @pytest.mark.parametrize(
        "edges",
        [((0, 0),), ((0, 1), (1, 0)), ((0, 3),), ((-1, 1),)],
    )
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)

    def test_delete_vertices_relabels(self):
        G = make_family("snl", 6, 4)
        H = G.delete_vertices([0, 1])
        assert H.n == 4
        assert H.m == 1


class TestMakeFamily:
    def test_cycle(self):
        G = make_family("cycle", 4)
        assert (G.n, G.m, girth(G)) == (4, 4, 4)

    def test_snl_degrees(self):
        assert sorted(make_family("snl", 6, 4).degrees(), reverse=True) == [4, 2, 2, 2, 1, 1]

    def test_pnl_degrees(self):
        assert sorted(make_family("pnl", 6, 4).degrees(), reverse=True) == [3, 2, 2, 2, 2, 1]

    def test_labelling(self):
        G = make_family("pnl", 7, 4)
        assert unique_cycle(G) == [0, 1, 2, 3]
        assert G.has_edge(0, 4) and G.has_edge(4, 5) and G.has_edge(5, 6)

    @pytest.mark.parametrize(
        "kind,n,girth_",
        [("snl", 5, 2), ("snl", 5, 6), ("pnl", 4, None), ("cycle", 2, None), ("path", 0, None), ("path", 4, 3), ("star", 4, 3)],
    )
    def test_rejects(self, kind, n, girth_):
        with pytest.raises(ValueError):
            make_family(kind, n, girth_)

    @pytest.mark.parametrize("n", range(3, 11))
    def test_families_unicyclic_with_girth(self, n):
        for length in range(3, n + 1):
            for kind in ("snl", "pnl"):
                G = make_family(kind, n, length)
                assert is_unicyclic(G)
                assert girth(G) == length


class TestMatchingCounts:
    def test_path5(self):
        assert matching_counts(path_graph(5)) == tuple(brute_matchings(path_graph(5))) == (1, 4, 3)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_paths_binomial(self, n):
        assert matching_counts(path_graph(n)) == tuple(comb(n - k, k) for k in range(n // 2 + 1))

    def test_c4(self):
        assert matching_counts(cycle_graph(4)) == (1, 4, 2)

    def test_s53(self):
        assert matching_counts(make_family("snl", 5, 3)) == (1, 5, 2)

    def test_empty(self):
        assert matching_counts(Graph(0)) == (1,)
        assert matching_counts(Graph(5)) == (1, 0, 0)

    @given(graphs())
    @settings(max_examples=150, deadline=None)
    def test_against_brute_force(self, G):
        counts = matching_counts(G)
        assert list(counts) == brute_matchings(G)
        assert counts[0] == 1
        if G.n >= 2:
            assert counts[1] == G.m

    def test_edge_recurrence_exhaustive(self):
        # every graph up to isomorphism on at most 7 vertices, every edge
        checked = 0
        for G in atlas_graphs(7):
            m = matching_counts(G)
            for u, v in G.edges:
                without = matching_counts(G.remove_edge(u, v))
                removed = matching_counts(G.delete_vertices([u, v]))
                for k in range(len(m)):
                    assert m[k] == without[k] + (removed[k - 1] if 1 <= k <= len(removed) else 0)
                checked += 1
        assert checked > 10_000

    def test_forest_bound(self):
        forests = [G for G in atlas_graphs(7) if G.is_forest()]
        rng = random.Random(7)
        forests += [random_tree(rng, rng.randrange(2, 13)) for _ in range(300)]
        for F in forests:
            best = matching_counts(path_graph(F.n))
            assert all(a <= b for a, b in zip(matching_counts(F), best))

    @given(graphs(), st.data())
    @settings(max_examples=100, deadline=None)
    def test_subgraph_monotone(self, G, data):
        keep = data.draw(st.lists(st.sampled_from(G.edges), unique=True)) if G.edges else []
        H = Graph(G.n, tuple(keep))
        assert all(a <= b for a, b in zip(matching_counts(H), matching_counts(G)))

    @pytest.mark.parametrize("length", range(4, 10))
    def test_strict_instances(self, length):
        # P_{l-1} inside C_l, and inside every T = P_{l-1} plus one pendant vertex
        path = matching_counts(path_graph(length - 1))
        cycle = matching_counts(cycle_graph(length))
        P = path_graph(length - 1)
        for hub in range(length - 1):
            T = Graph(length, P.edges + ((hub, length - 1),))
            tm = matching_counts(T)
            assert all(a <= b for a, b in zip(path, tm))
            assert any(a < b for a, b in zip(path, tm))
        assert all(a <= b for a, b in zip(path, cycle))
        assert any(a < b for a, b in zip(path, cycle))


class TestGirth:
    def test_examples(self):
        assert girth(cycle_graph(7)) == 7
        assert girth(path_graph(6)) is None
        assert girth(make_family("pnl", 7, 5)) == 5

    def test_against_atlas_cycles(self):
        import networkx as nx

        for G in atlas_graphs(6):
            H = nx.Graph(list(G.edges))
            basis = nx.minimum_cycle_basis(H) if G.m else []
            expect = min((len(c) for c in basis), default=None)
            assert girth(G) == expect


class TestUnicyclic:
    def test_examples(self):
        assert is_unicyclic(make_family("snl", 6, 4))
        assert not is_unicyclic(path_graph(6))
        two_triangles = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        assert not is_unicyclic(two_triangles)

    def test_unique_cycle_reference_direction(self):
        G = Graph(5, ((3, 1), (1, 4), (4, 3), (4, 0), (0, 2)))
        assert unique_cycle(G) == [1, 3, 4]


class TestEvenlyLinear:
    def test_c4(self):
        subs = enumerate_evenly_linear(cycle_graph(4), 4)
        assert len(subs) == 3
        assert sorted(len(L.cycles) for L in subs) == [0, 0, 1]

    def test_c5(self):
        subs = enumerate_evenly_linear(cycle_graph(5), 4)
        assert len(subs) == 5
        assert all(not L.cycles for L in subs)

    def test_odd_size_empty(self):
        assert enumerate_evenly_linear(make_family("snl", 6, 4), 3) == []

    def test_range(self):
        with pytest.raises(ValueError):
            enumerate_evenly_linear(cycle_graph(4), 5)

    def test_linear_subgraph_disjoint(self):
        with pytest.raises(ValueError):
            LinearSubgraph(((0, 1),), ((1, 2, 3, 4),))
        assert LinearSubgraph(((0, 1),), ((2, 3, 4, 5),)).vertex_count == 6

    @given(graphs(max_n=6))
    @settings(max_examples=120, deadline=None)
    def test_against_brute_force(self, G):
        brute = brute_linear_subgraphs(G)
        for i in range(0, G.n + 1):
            subs = enumerate_evenly_linear(G, i)
            expect = [b for b in brute if b[0] == i and all(len(c) % 2 == 0 for c in b[2])]
            assert len(subs) == len(expect)
            assert all(L.vertex_count == i for L in subs)
            got = sorted((len(L.matching_edges), sorted(len(c) for c in L.cycles)) for L in subs)
            assert got == sorted((s, sorted(len(c) for c in cyc)) for _, s, cyc in expect)

    @given(graphs())
    @settings(max_examples=100, deadline=None)
    def test_cycle_free_count_is_matching_count(self, G):
        m = matching_counts(G)
        for k in range(G.n // 2 + 1):
            assert sum(1 for L in enumerate_evenly_linear(G, 2 * k) if not L.cycles) == m[k]
