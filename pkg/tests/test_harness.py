import dataclasses

import pytest

from bindingfactor import harness
from bindingfactor.binding import beta_k
from bindingfactor.factors import find_k_factor
from bindingfactor.graph import CapacityError, Graph6Error, generate, write_graph6
from bindingfactor.harness import (
    ClaimId,
    GraphSource,
    ProbeId,
    enumerate_graphs,
    probe_conjecture,
    verify_claim,
)


class TestSources:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (3, 8), (4, 64)])
    def test_internal_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(GraphSource.internal(n))) == count

    def test_internal_order_is_ascending_edge_bitmask(self):
        gs = list(enumerate_graphs(GraphSource.internal(3)))
        # bit 0 = pair (0,1), bit 1 = (0,2), bit 2 = (1,2)
        assert gs[0].num_edges() == 0
        assert gs[1].edges() == [(0, 1)]
        assert gs[2].edges() == [(0, 2)]
        assert gs[4].edges() == [(1, 2)]
        assert gs[7].is_complete()

    def test_internal_cap(self):
        with pytest.raises(CapacityError):
            GraphSource.internal(8)

    def test_stream_file_order(self, tmp_path):
        path = tmp_path / "two.g6"
        path.write_text("C~\n@\n")
        gs = list(enumerate_graphs(GraphSource.stream(path)))
        assert [g.n for g in gs] == [4, 1]

    def test_stream_parse_error_has_line(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("C~\nC~~\n")
        with pytest.raises(Graph6Error, match="line 2"):
            list(enumerate_graphs(GraphSource.stream(path)))

    def test_family_source(self):
        gs = list(enumerate_graphs(GraphSource.family(["petersen", "cycle:5"])))
        assert [g.n for g in gs] == [10, 5]


class TestVerify:
    def test_k_factor_internal_6(self):
        r = verify_claim(ClaimId.THM_K_FACTOR, GraphSource.internal(6), [2])
        assert r.verified and r.counterexamples == [] and r.graphs_scanned == 32768
        assert r.hypothesis_hits > 0

    def test_monotone_internal_5(self):
        r = verify_claim(ClaimId.OBS_MONOTONE, GraphSource.internal(5), [2, 3])
        assert r.verified and r.graphs_scanned == 1024

    def test_family_tightness(self):
        src = GraphSource.family(["split_tight(8,2)", "split_tight(10,2)", "split_tight(10,3)"])
        r = verify_claim(ClaimId.FAMILY_TIGHTNESS, src, [2, 3])
        # the graph does not depend on k, so both k values are tested on each
        assert r.verified and r.hypothesis_hits == 6

    @pytest.mark.parametrize("claim", list(ClaimId))
    def test_every_claim_runs_clean_on_5_vertices(self, claim):
        r = verify_claim(claim, GraphSource.internal(5), [2, 3])
        assert r.verified, r.counterexamples[:3]

    def test_split_claims_on_split_graphs(self, tmp_path):
        from bindingfactor.graph import all_split_graphs

        path = tmp_path / "split.g6"
        path.write_text("\n".join(write_graph6(g) for n in (6, 8) for g in all_split_graphs(n)))
        for claim in (ClaimId.THM_SPLIT_K1, ClaimId.OBS_SPLIT_Y):
            r = verify_claim(claim, GraphSource.stream(path), [2])
            assert r.verified and r.hypothesis_hits > 0

    def test_report_is_deterministic(self):
        a = verify_claim(ClaimId.PROP_TOUGH, GraphSource.internal(5), [2]).to_dict(False)
        b = verify_claim(ClaimId.PROP_TOUGH, GraphSource.internal(5), [2]).to_dict(False)
        assert a == b

    def test_parallel_matches_serial(self):
        src = GraphSource.internal(6)
        a = verify_claim(ClaimId.LEM_MINDEG, src, [2, 3], batch_size=4096)
        b = verify_claim(ClaimId.LEM_MINDEG, src, [2, 3], jobs=2, batch_size=4096)
        assert a.to_dict(False) == b.to_dict(False)

    def test_counterexamples_in_stream_order(self, monkeypatch):
        # a deliberately false claim: "every graph with beta^2 > 0 is complete"
        fake = dataclasses.replace(
            harness.CLAIMS[ClaimId.COR_CONNECTED],
            check=lambda c: None if c.g.is_complete() else {"reason": "not complete"},
        )
        monkeypatch.setitem(harness.CLAIMS, ClaimId.COR_CONNECTED, fake)
        r = verify_claim(ClaimId.COR_CONNECTED, GraphSource.internal(5), [2], max_counterexamples=3,
                         batch_size=100)
        assert not r.verified
        assert len(r.counterexamples) == 3 and r.counterexample_count > 3
        idx = [c.index for c in r.counterexamples]
        assert idx == sorted(idx)
        first = list(enumerate_graphs(GraphSource.internal(5)))[idx[0]]
        assert write_graph6(first) == r.counterexamples[0].graph6
        assert beta_k(first, 2).numeric > 0 and not first.is_complete()


class TestProbes:
    def test_bipartite_cover_x_k2(self):
        r = probe_conjecture(ProbeId.BIP_KFACTOR_COVER_X, GraphSource.internal(6), {"k": 2})
        assert r.verified and r.hypothesis_hits > 0

    def test_spectrum_on_internal_6(self):
        r = probe_conjecture(ProbeId.FACTOR_SPECTRUM, GraphSource.internal(6), {"k": 2, "t": 3})
        assert r.hypothesis_hits == 316 and r.verified

    def test_clique_plus_pendant_has_no_2k_factor(self):
        # K_{n-1} plus a vertex of degree 2k-1: beta^k >= 1, but no 2k-factor
        k = 2
        for n in (6, 7, 8, 9, 10):
            g = generate(f"near_clique({n},{2 * k - 1})")
            assert beta_k(g, k).numeric >= 1
            assert find_k_factor(g, 2 * k) is None
        r = probe_conjecture(ProbeId.FACTOR_SPECTRUM,
                             GraphSource.family([f"near_clique({n},3)" for n in (6, 8, 10)]),
                             {"k": 2, "t": 3})
        assert r.verified and r.hypothesis_hits == 3

    def test_spectrum_internal_7_runs(self):
        # exploratory: with n = 7 and t = 5 every hit has nt odd, so the
        # probe is vacuous; the report records that
        r = probe_conjecture(ProbeId.FACTOR_SPECTRUM, GraphSource.internal(7), {"k": 3, "t": 5})
        assert r.graphs_scanned == 2 ** 21 and r.hypothesis_hits == 0

    def test_t_range(self):
        with pytest.raises(ValueError):
            probe_conjecture(ProbeId.FACTOR_SPECTRUM, GraphSource.internal(4), {"k": 2, "t": 4})
        with pytest.raises(ValueError):
            probe_conjecture(ProbeId.FACTOR_SPECTRUM, GraphSource.internal(4), {"k": 2})
