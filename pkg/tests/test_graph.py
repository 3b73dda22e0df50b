import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindingfactor.graph import (
    CapacityError,
    FamilySpec,
    Graph,
    Graph6Error,
    VertexSet,
    all_bipartite_graphs,
    all_split_graphs,
    bipartition,
    components,
    count_edges_between,
    generate,
    is_clique,
    is_independent,
    lambda_k,
    parse_family,
    parse_graph6,
    read_graph6_lines,
    remove_edges,
    split_partition,
    write_graph6,
)

import oracles

K4 = generate("complete(4)")
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = generate("cycle(5)")
STAR = generate("star(3)")


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


class TestVertexSet:
    def test_set_algebra(self):
        a, b = VertexSet([0, 2, 5]), VertexSet([2, 3])
        assert list(a | b) == [0, 2, 3, 5]
        assert (a & b) == {2}
        assert (a - b).to_list() == [0, 5]
        assert len(a ^ b) == 3
        assert VertexSet([2]) <= a and not b <= a
        assert a.min() == 0 and 5 in a and 4 not in a

    def test_negative_vertex_rejected(self):
        with pytest.raises(ValueError):
            VertexSet([-1])


class TestGraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(2, (2, 0))  # asymmetric

    def test_basic_queries(self):
        assert K4.num_edges() == 6 and K4.is_complete()
        assert STAR.degrees() == [3, 1, 1, 1]
        assert C5.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert not generate("disjoint_union(complete(3),complete(3))").is_connected()

    def test_induced_relabels(self):
        h, labels = C5.induced([0, 1, 2])
        assert labels == [0, 1, 2] and h.edges() == [(0, 1), (1, 2)]


class TestGraph6:
    def test_k4_golden(self):
        assert write_graph6(K4) == "C~"
        g = parse_graph6("C~")
        assert g.n == 4 and g.num_edges() == 6

    def test_single_vertex(self):
        assert write_graph6(Graph.empty(1)) == "@"
        assert parse_graph6("@") == Graph.empty(1)

    def test_d_golden_round_trip(self):
        assert write_graph6(parse_graph6("D?{")) == "D?{"
        assert parse_graph6("D?{").n == 5

    def test_c4_round_trip(self):
        assert parse_graph6(write_graph6(C4)) == C4

    def test_header_is_accepted(self):
        assert parse_graph6(">>graph6<<C~") == K4

    def test_petersen_golden(self):
        # 10 vertices, 15 edges; the string is fixed by the generator labelling
        g = parse_graph6(write_graph6(generate("petersen")))
        assert g.n == 10 and g.num_edges() == 15 and set(g.degrees()) == {3}

    def test_long_form(self):
        g = generate("path(70)")
        text = write_graph6(g, long_form=True)
        assert text.startswith("~")
        assert parse_graph6(text, long_form=True) == g

    def test_too_large_without_long_form(self):
        with pytest.raises(ValueError):
            write_graph6(generate("path(63)"))

    @pytest.mark.parametrize(
        "text, offset",
        [("C~~", 2), ("C\x7f", 1), ("C", 1), ("", 0), ("Ao", 1)],
    )
    def test_malformed_reports_offset(self, text, offset):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6(text)
        assert exc.value.offset == offset

    def test_stream_line_numbers(self):
        with pytest.raises(Graph6Error) as exc:
            list(read_graph6_lines(["C~", "", "C~~"]))
        assert "line 3" in str(exc.value)

    @given(graphs())
    def test_round_trip_property(self, g):
        assert parse_graph6(write_graph6(g)) == g


class TestPrimitives:
    def test_lambda_examples(self):
        assert lambda_k(C5, {0, 1}, 2) == set()
        assert lambda_k(K4, {0, 1}, 2) == {2, 3}
        assert lambda_k(K4, {0, 1, 2}, 2) == {0, 1, 2, 3}

    def test_lambda_rejects_bad_k(self):
        with pytest.raises(ValueError):
            lambda_k(K4, {0}, 0)

    def test_components_examples(self):
        assert [len(c) for c in components(K4, K4.vertices())] == [4]
        two = generate("disjoint_union(complete(3),complete(3))")
        assert [c.to_list() for c in components(two, two.vertices())] == [[0, 1, 2], [3, 4, 5]]
        assert [c.to_list() for c in components(STAR, {1, 2, 3})] == [[1], [2], [3]]

    def test_count_edges_between_examples(self):
        assert count_edges_between(K4, {0, 1}, {2, 3}) == 4
        assert count_edges_between(K4, {0, 1, 2}, {0, 1, 2}) == 3
        assert count_edges_between(C4, {0}, {1, 3}) == 2

    def test_remove_edges_examples(self):
        h = remove_edges(K4, [(0, 1), (2, 3)])
        assert h.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
        assert remove_edges(C4, []) == C4
        assert remove_edges(K4, K4.edges()) == Graph.empty(4)
        with pytest.raises(ValueError):
            remove_edges(C4, [(0, 2)])

    def test_bipartition(self):
        x, y = bipartition(C4)
        assert x == {0, 2} and y == {1, 3}
        assert bipartition(C5) is None

    def test_independent_and_clique(self):
        assert is_independent(C4, {0, 2}) and not is_independent(C4, {0, 1})
        assert is_clique(K4, {0, 1, 3}) and not is_clique(C4, {0, 1, 2})

    @given(graphs(max_n=7))
    @settings(max_examples=60)
    def test_lambda_matches_oracle(self, g):
        for s in oracles.subsets(range(g.n)):
            assert lambda_k(g, s, 2) == oracles.lam(g, s, 2)
            break


class TestSplit:
    def test_split_tight_partition(self):
        g = generate("split_tight(8,2)")
        x, y = split_partition(g)
        # one independent vertex sees the whole clique, so it joins it
        assert x == {1, 2, 3, 4} and y == {0, 5, 6, 7}

    def test_not_split(self):
        assert split_partition(C4) is None
        assert split_partition(C5) is None

    def test_clique_side_maximised(self):
        # K4 is split with the whole vertex set as clique side
        x, y = split_partition(K4)
        assert len(y) == 4 and len(x) == 0

    @given(graphs(max_n=7))
    @settings(max_examples=80)
    def test_detector_matches_brute_force(self, g):
        best = None
        for s in oracles.subsets(range(g.n)):
            y = set(s)
            x = set(range(g.n)) - y
            if is_clique(g, y) and is_independent(g, x):
                best = y if best is None or len(y) > len(best) else best
        got = split_partition(g)
        assert (got is None) == (best is None)
        if got is not None:
            assert len(got[1]) == len(best)

    def test_large_graph_path(self):
        g = generate("split_tight(14,3)")
        x, y = split_partition(g)
        assert is_independent(g, x) and is_clique(g, y) and len(y) == 7


class TestFamilies:
    def test_split_tight_figure(self):
        g = generate("split_tight(8,2)")
        assert all(g.has_edge(u, v) for u in range(5) for v in range(5, 8))
        assert is_independent(g, range(5)) and is_clique(g, range(5, 8))
        assert min(g.degrees()) == 3 and max(g.degrees()) == 7

    def test_split_tight_constraints(self):
        with pytest.raises(ValueError, match="even"):
            generate("split_tight(9,2)")
        with pytest.raises(ValueError, match="2k"):
            generate("split_tight(4,2)")

    def test_andersen(self):
        g = generate("andersen(1)")
        assert g.n == 10
        assert g.degree(9) == 9 and g.num_edges() == 9 + 9

    def test_complete_and_petersen(self):
        assert generate(FamilySpec("complete", (4,))) == K4
        p = generate("petersen")
        assert oracles.independence_number(p) == 4

    def test_spec_syntax(self):
        assert parse_family("split_tight:8,2") == parse_family("split_tight(8,2)")
        assert generate("join(complete(2),empty(3))").num_edges() == 1 + 6
        with pytest.raises(ValueError):
            parse_family("nonsense(3)")
        with pytest.raises(ValueError):
            parse_family("cycle(3,4)")

    def test_katerinis_woodall_valid(self):
        g = generate("katerinis_woodall(1,2)")
        assert g.n > 0 and g.is_connected()


class TestEnumerations:
    def test_bipartite_covers_every_labelled_graph(self):
        # every labelled bipartite graph with fixed sides is a Y-relabelling
        # of one enumerated graph
        a, b = 2, 3
        got = set()
        for g in all_bipartite_graphs(a, b):
            got.add(tuple(sorted(g.adj[a:])))
        every = set()
        for choice in itertools.product(range(1 << a), repeat=b):
            every.add(tuple(sorted(choice)))
        assert got == every

    def test_split_graphs_are_split(self):
        for g in all_split_graphs(6):
            assert split_partition(g) is not None

    def test_internal_cap(self):
        from bindingfactor.harness import GraphSource

        with pytest.raises(CapacityError):
            GraphSource.internal(8)
