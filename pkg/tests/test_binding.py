from fractions import Fraction

import pytest
from hypothesis import given, settings

from bindingfactor.binding import (
    Outcome,
    beta_k,
    beta_k_bipartite,
    beta_k_many,
    beta_k_reference,
    bind_bipartite,
    bind_classical,
)
from bindingfactor.graph import Graph, generate, lambda_k

import oracles
from test_graph import graphs

K4 = generate("complete(4)")
C4 = generate("cycle(4)")
C5 = generate("cycle(5)")
C6 = generate("cycle(6)")
STAR = generate("star(3)")


class TestBeta:
    def test_k4(self):
        b = beta_k(K4, 2)
        assert b.value == 1 and b.witness == {0, 1}

    def test_c4_is_zero(self):
        assert beta_k(C4, 2).value == 0

    def test_split_tight_value(self):
        # frozen from the brute-force oracle
        g = generate("split_tight(8,2)")
        assert oracles.beta(g, 2) == Fraction(1, 2)
        assert beta_k(g, 2).value == Fraction(1, 2)

    def test_defined_zero(self):
        b = beta_k(generate("complete(3)"), 5)
        assert b.outcome is Outcome.DEFINED_ZERO and b.numeric == 0 and b.value is None

    def test_witness_realises_value(self):
        g = generate("petersen")
        b = beta_k(g, 2)
        w = b.witness
        assert Fraction(len(lambda_k(g, w, 2)), len(w)) == b.value
        assert len(lambda_k(g, w, 2)) < g.n

    def test_feasible_count(self):
        # in K4 with k=2 only the six 2-sets are feasible
        assert beta_k(K4, 2).feasible_count == 6

    def test_bad_k(self):
        with pytest.raises(ValueError):
            beta_k(K4, 0)

    @given(graphs(max_n=7))
    @settings(max_examples=150)
    def test_matches_oracle(self, g):
        for k in (1, 2, 3):
            expect = oracles.beta(g, k)
            got = beta_k(g, k)
            assert got.numeric == expect if expect is not None else got.outcome is Outcome.NO_FEASIBLE_SET
            assert beta_k_reference(g, k) == got

    def test_batch_form_matches_single(self):
        from bindingfactor._kernels import masks_from_codes

        masks = masks_from_codes(5, 0, 1024)
        out = beta_k_many(masks, 5, 2)
        for row in range(0, 1024, 37):
            g = Graph(5, tuple(int(a) for a in masks[row]))
            num, den = out[row]
            assert Fraction(int(num), int(den)) == beta_k(g, 2).numeric


class TestBetaBipartite:
    def test_examples(self):
        k22 = generate("complete_bipartite(2,2)")
        assert beta_k_bipartite(k22, {0, 1}, 2).value == 1
        assert beta_k_bipartite(STAR, {1, 2, 3}, 2).value == Fraction(1, 3)
        k33 = generate("complete_bipartite(3,3)")
        assert beta_k_bipartite(k33, {0, 1, 2}, 3).value == 1

    def test_x_must_be_independent(self):
        with pytest.raises(ValueError):
            beta_k_bipartite(C5, {0, 1}, 2)

    def test_small_x_is_defined_zero(self):
        assert beta_k_bipartite(STAR, {1}, 2).outcome is Outcome.DEFINED_ZERO

    def test_matches_oracle(self):
        g = generate("complete_bipartite(3,4)")
        g = Graph.from_edges(7, [e for e in g.edges() if e != (0, 3)])
        for k in (1, 2, 3):
            assert beta_k_bipartite(g, {0, 1, 2}, k).numeric == oracles.beta_bip(g, {0, 1, 2}, k)


class TestBind:
    def test_c5_oracle(self):
        # frozen from the brute-force oracle: S = {0, 1, 3} has N(S) = {0, 1, 2, 4}
        assert oracles.bind(C5) == Fraction(4, 3)
        assert bind_classical(C5).value == Fraction(4, 3)

    def test_k33(self):
        assert bind_classical(generate("complete_bipartite(3,3)")).value == 1

    def test_single_vertex(self):
        # the only set {v} has empty neighbourhood, which differs from V
        b = bind_classical(Graph.empty(1))
        assert b.outcome is Outcome.VALUE and b.value == 0 and b.witness == {0}

    def test_empty_graph_has_no_feasible_set(self):
        assert bind_classical(Graph.empty(0)).outcome is Outcome.NO_FEASIBLE_SET

    @given(graphs(max_n=7))
    @settings(max_examples=100)
    def test_matches_oracle(self, g):
        expect = oracles.bind(g)
        got = bind_classical(g)
        if expect is None:
            assert got.outcome is Outcome.NO_FEASIBLE_SET
        else:
            assert got.value == expect


class TestBindBipartite:
    def test_complete_bipartite(self):
        g = generate("complete_bipartite(2,3)")
        assert bind_bipartite(g, {0, 1}, {2, 3, 4}).value == 2

    def test_c4_special_case(self):
        assert bind_bipartite(C4, {0, 2}, {1, 3}).value == 2

    def test_c6_oracle(self):
        x, y = {0, 2, 4}, {1, 3, 5}
        assert oracles.bind_bip(C6, x, y) == 2
        assert bind_bipartite(C6, x, y).value == 2

    def test_not_a_bipartition(self):
        with pytest.raises(ValueError):
            bind_bipartite(C5, {0, 2}, {1, 3, 4})

    def test_matches_oracle_on_small_bipartite(self):
        from bindingfactor.graph import all_bipartite_graphs

        for a, b in ((2, 3), (3, 3)):
            for g in all_bipartite_graphs(a, b):
                x, y = set(range(a)), set(range(a, a + b))
                expect = oracles.bind_bip(g, x, y)
                got = bind_bipartite(g, x, y)
                if g.num_edges() == a * b:
                    assert got.value == min(a, b)
                elif expect is None:
                    assert got.outcome is Outcome.NO_FEASIBLE_SET
                else:
                    assert got.value == expect
