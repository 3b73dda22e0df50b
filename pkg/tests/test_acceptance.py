"""Acceptance criteria 1-13.  All comparisons are exact.

Each test carries a ``criterion`` marker; conftest prints one PASS/FAIL
line per criterion at the end of the run.
"""

import random
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from bindingfactor.binding import beta_k, beta_k_many, beta_k_reference
from bindingfactor.factors import (
    OrderedPartition,
    check_barrier_properties,
    delta,
    find_k_factor,
    find_maxmin_barrier,
)
from bindingfactor.graph import (
    Graph,
    VertexSet,
    all_bipartite_graphs,
    all_split_graphs,
    generate,
    parse_graph6,
    write_graph6,
)
from bindingfactor.harness import ClaimId, GraphSource, enumerate_graphs, tight_family_values, verify_claim
from bindingfactor.matching import MatchingFamily, disjoint_x_covering_matchings, lebensold_violator

import oracles

criterion = pytest.mark.criterion


def _clean(report):
    assert report.verified, report.counterexamples[:5]
    assert report.counterexamples == []


# 1 -----------------------------------------------------------------------


@criterion(1, "binding oracle equivalence, n = 6, k in {2,3,4}")
@pytest.mark.parametrize("k", [2, 3, 4])
def test_binding_oracle_equivalence(k):
    graphs = list(enumerate_graphs(GraphSource.internal(6)))
    assert len(graphs) == 32768
    batch = beta_k_many(np.array([g.adj for g in graphs], dtype=np.int64), 6, k)
    for g, (num, den) in zip(graphs, batch):
        fast = beta_k(g, k)
        assert fast == beta_k_reference(g, k)
        assert Fraction(int(num), int(den)) == fast.numeric


# 2 -----------------------------------------------------------------------


@criterion(2, "tight family: beta is the least case value, below 1, no k-factor, even barrier <= -2")
@pytest.mark.parametrize("n, k", [(8, 2), (10, 2), (10, 3)])
def test_tight_family(n, k):
    g = generate(f"split_tight({n},{k})")
    brute = oracles.beta(g, k)
    assert brute == min(tight_family_values(n, k))
    assert beta_k(g, k).value == brute
    assert brute < 1
    assert find_k_factor(g, k) is None
    b = find_maxmin_barrier(g, k)
    assert b is not None and b.deficiency % 2 == 0 and b.deficiency <= -2


def test_tight_family_values_frozen():
    # (n-2)/(n+2k) is the minimum at these sizes
    assert [min(tight_family_values(n, k)) for n, k in [(8, 2), (10, 2), (10, 3)]] == [
        Fraction(1, 2), Fraction(4, 7), Fraction(1, 2),
    ]


# 3 -----------------------------------------------------------------------


@criterion(3, "k-factor theorem over all labelled graphs n <= 7, k in {2,3}")
def test_k_factor_theorem():
    hits = 0
    for n in range(1, 8):
        r = verify_claim(ClaimId.THM_K_FACTOR, GraphSource.internal(n), [2, 3])
        _clean(r)
        hits += r.hypothesis_hits
    assert hits > 0


# 4 and 11 ----------------------------------------------------------------


@criterion(4, "Tutte equivalence: no k-factor iff a barrier exists, n <= 6, k in {2,3}")
@criterion(11, "maxmin barrier items (i)-(iv) on every no-factor graph of criterion 4")
def test_tutte_equivalence_and_maxmin_properties():
    without_factor = 0
    for n in range(1, 7):
        for g in enumerate_graphs(GraphSource.internal(n)):
            for k in (2, 3):
                if (n * k) % 2:
                    continue
                factor = find_k_factor(g, k)
                barrier = find_maxmin_barrier(g, k)
                assert (factor is None) == (barrier is not None), write_graph6(g)
                if barrier is not None:
                    without_factor += 1
                    _maxmin_checks(g, barrier)
    assert without_factor > 0


def _maxmin_checks(g, barrier):
    report = check_barrier_properties(g, barrier)
    assert report.applicable and report.all_hold, (write_graph6(g), report)
    assert barrier.deficiency <= -2 and barrier.deficiency % 2 == 0


# 5 -----------------------------------------------------------------------


@criterion(5, "disjoint (near-)perfect matchings pipeline, n <= 7, k in {2,3}")
def test_disjoint_matchings_pipeline():
    hits = 0
    for n in range(1, 8):
        r = verify_claim(ClaimId.THM_DISJOINT_PM, GraphSource.internal(n), [2, 3])
        _clean(r)
        hits += r.hypothesis_hits
    assert hits > 0


# 6 -----------------------------------------------------------------------


@criterion(6, "flow vs Lebensold vs brute force on bipartite graphs with sides <= 5, k in {1,2,3}")
def test_bipartite_three_way_agreement():
    checked = positive = 0
    for a in range(1, 6):
        for b in range(1, 6):
            x = VertexSet(range(a))
            for g in all_bipartite_graphs(a, b):
                for k in (1, 2, 3):
                    flow = isinstance(disjoint_x_covering_matchings(g, x, k), MatchingFamily)
                    lebensold = lebensold_violator(g, x, k) is None
                    brute = oracles.has_x_k_subgraph(g, x, k)
                    assert flow == lebensold == brute, (write_graph6(g), k)
                    checked += 1
                    positive += flow
    assert checked > 0 and 0 < positive < checked


# 7 -----------------------------------------------------------------------


@criterion(7, "f-dominating lemma, n <= 6 with beta^3 >= 1, every F with max degree <= 1")
def test_f_dominating_lemma():
    hits = 0
    for n in range(1, 7):
        r = verify_claim(ClaimId.LEM_FDOM, GraphSource.internal(n), [3])
        _clean(r)
        hits += r.hypothesis_hits
    assert hits > 0


# 8 -----------------------------------------------------------------------


@criterion(8, "hypomatchable by blossom agrees with the q-condition, n in {3,5,7}")
@pytest.mark.parametrize("n", [3, 5, 7])
def test_hypomatchability_equivalence(n):
    r = verify_claim(ClaimId.COR_HYPO_IFF, GraphSource.internal(n))
    _clean(r)
    assert r.hypothesis_hits == 2 ** (n * (n - 1) // 2)


# 9 -----------------------------------------------------------------------


@criterion(9, "degree, independence, toughness and connectivity bounds, n <= 7, k in {2,3}")
@pytest.mark.parametrize(
    "claim", [ClaimId.LEM_MINDEG, ClaimId.PROP_INDEP, ClaimId.PROP_TOUGH, ClaimId.PROP_CONN]
)
def test_bound_suite(claim):
    hits = 0
    for n in range(1, 8):
        r = verify_claim(claim, GraphSource.internal(n), [2, 3])
        _clean(r)
        hits += r.hypothesis_hits
    assert hits > 0


# 10 ----------------------------------------------------------------------


@criterion(10, "parity lemma on 1000 random (graph, partition, k) triples with nk even")
def test_parity_lemma():
    rng = random.Random(20240601)
    done = 0
    while done < 1000:
        n = rng.randint(1, 12)
        k = rng.randint(1, 4)
        if (n * k) % 2:
            continue
        p = rng.random()
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        labels = [rng.randrange(3) for _ in range(n)]
        s = {v for v in range(n) if labels[v] == 0}
        t = {v for v in range(n) if labels[v] == 1}
        d = delta(g, OrderedPartition.of(n, s, t), k)
        assert d % 2 == 0, (write_graph6(g), s, t, k)
        assert d == oracles.deficiency(g, s, t, k)
        done += 1


# 12 ----------------------------------------------------------------------


@criterion(12, "graph6 round trip on all labelled graphs n <= 6 and golden fixtures")
def test_graph6_round_trip():
    for n in range(0, 7):
        for g in enumerate_graphs(GraphSource.internal(n)):
            text = write_graph6(g)
            assert parse_graph6(text) == g
            if n <= 5:
                h = nx.Graph()
                h.add_nodes_from(range(n))
                h.add_edges_from(g.edges())
                assert nx.to_graph6_bytes(h, header=False).decode().strip() == text


@criterion(12, "graph6 round trip on all labelled graphs n <= 6 and golden fixtures")
@pytest.mark.parametrize(
    "text, n, m",
    [("C~", 4, 6), ("@", 1, 0), ("?", 0, 0), ("D?{", 5, 4), ("A_", 2, 1), ("Bw", 3, 3)],
)
def test_graph6_golden(text, n, m):
    g = parse_graph6(text)
    assert (g.n, g.num_edges()) == (n, m)
    assert write_graph6(g) == text
    assert parse_graph6("C~") == generate("complete(4)")


# 13 ----------------------------------------------------------------------


@criterion(13, "split (k+1)-factor theorem on even split graphs n <= 8, k = 2")
def test_split_theorem(tmp_path):
    path = tmp_path / "split.g6"
    with open(path, "w") as fh:
        for n in (2, 4, 6, 8):
            for g in all_split_graphs(n):
                fh.write(write_graph6(g) + "\n")
    r = verify_claim(ClaimId.THM_SPLIT_K1, GraphSource.stream(path), [2])
    _clean(r)
    assert r.hypothesis_hits > 0
