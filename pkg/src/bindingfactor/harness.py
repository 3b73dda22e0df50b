"""Exhaustive verification of the binding-number theorems on small graphs.

A claim is a hypothesis filter plus a conclusion test.  Sources are
scanned in batches: the binding numbers needed by the hypothesis are
computed for a whole batch at once, and only graphs that pass the
hypothesis are materialised and handed to the conclusion test.  Graphs
failing a hypothesis are vacuous passes; ``hypothesis_hits`` counts the
(graph, k) pairs that were actually tested.
"""

from __future__ import annotations

import enum
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .binding import beta_k, beta_k_bipartite, beta_k_many
from .factors import (
    all_deficiencies_even,
    check_barrier_properties,
    find_k_factor,
    find_maxmin_barrier,
)
from .graph import (
    CapacityError,
    FamilySpec,
    Graph,
    VertexSet,
    bipartition,
    components,
    generate,
    parse_family,
    read_graph6_lines,
    remove_edges,
    split_partition,
    write_graph6,
)
from .matching import (
    Matching,
    MatchingFamily,
    MatchingPipelineError,
    disjoint_near_perfect_matchings,
    disjoint_x_covering_matchings,
    hypo_tutte_many,
    hypo_tutte_violator,
    hypomatchable,
    hypomatchable_many,
    perfect_matching,
)
from .properties import independence_number, toughness, vertex_connectivity

__all__ = [
    "ClaimId",
    "Counterexample",
    "GraphSource",
    "ProbeId",
    "VerificationReport",
    "enumerate_graphs",
    "probe_conjecture",
    "verify_claim",
]

INTERNAL_CAP = 7
BATCH_SIZE = 1 << 15
SCHEMA = "bindingfactor/1"


class ClaimId(str, enum.Enum):
    THM_K_FACTOR = "THM_K_FACTOR"
    THM_SPLIT_K1 = "THM_SPLIT_K1"
    THM_DISJOINT_PM = "THM_DISJOINT_PM"
    THM_BIP_MATCHINGS = "THM_BIP_MATCHINGS"
    OBS_NONBIP_UB = "OBS_NONBIP_UB"
    OBS_MONOTONE = "OBS_MONOTONE"
    OBS_CONNECTED_K2 = "OBS_CONNECTED_K2"
    COR_CONNECTED = "COR_CONNECTED"
    LEM_MINDEG = "LEM_MINDEG"
    COR_COMPLETE_2K = "COR_COMPLETE_2K"
    PROP_INDEP = "PROP_INDEP"
    PROP_TOUGH = "PROP_TOUGH"
    PROP_CONN = "PROP_CONN"
    LEM_PM_EXISTS = "LEM_PM_EXISTS"
    COR_HYPO_IFF = "COR_HYPO_IFF"
    LEM_HYPO = "LEM_HYPO"
    LEM_FDOM = "LEM_FDOM"
    OBS_SPLIT_Y = "OBS_SPLIT_Y"
    LEM_DELTA_PARITY = "LEM_DELTA_PARITY"
    LEM_MAXMIN_PROPS = "LEM_MAXMIN_PROPS"
    FAMILY_TIGHTNESS = "FAMILY_TIGHTNESS"


class ProbeId(str, enum.Enum):
    BIP_KFACTOR_COVER_X = "BIP_KFACTOR_COVER_X"
    FACTOR_SPECTRUM = "FACTOR_SPECTRUM"


# --------------------------------------------------------------------------
# sources


@dataclass(frozen=True)
class GraphSource:
    """Where graphs come from.

    ``internal(n)``: every labelled graph on n <= 7 vertices, ascending by
    edge bitmask (bit b = b-th vertex pair in graph6 order).
    ``stream(path)``: graph6 lines from a file.
    ``family(specs)``: the listed generated graphs, in order.
    """

    kind: str
    n: int | None = None
    path: str | None = None
    specs: tuple[FamilySpec, ...] = ()

    @classmethod
    def internal(cls, n: int) -> "GraphSource":
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n > INTERNAL_CAP:
            raise CapacityError(
                f"internal enumeration is capped at n <= {INTERNAL_CAP}; "
                "stream an external canonical list instead"
            )
        return cls("internal", n=n)

    @classmethod
    def stream(cls, path: str | Path) -> "GraphSource":
        return cls("stream", path=str(path))

    @classmethod
    def family(cls, specs: Iterable[FamilySpec | str]) -> "GraphSource":
        return cls("family", specs=tuple(parse_family(s) if isinstance(s, str) else s for s in specs))

    def describe(self) -> dict[str, Any]:
        if self.kind == "internal":
            return {"internal": self.n}
        if self.kind == "stream":
            return {"stream": self.path}
        return {"family": [str(s) for s in self.specs]}


def _stream_graphs(source: GraphSource) -> Iterator[Graph]:
    if source.kind == "stream":
        with open(source.path) as fh:
            yield from read_graph6_lines(fh)
    else:
        for spec in source.specs:
            yield generate(spec)


def enumerate_graphs(source: GraphSource) -> Iterator[Graph]:
    if source.kind == "internal":
        n = source.n
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, BATCH_SIZE):
            masks = _kernels.masks_from_codes(n, start, min(BATCH_SIZE, total - start))
            for row in masks:
                yield Graph._trusted(n, tuple(int(a) for a in row))
    else:
        yield from _stream_graphs(source)


# batch descriptors are plain tuples so they pickle cheaply for workers
def _batch_descriptors(source: GraphSource, batch_size: int) -> Iterator[tuple]:
    if source.kind == "internal":
        n = source.n
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, batch_size):
            yield ("codes", n, start, min(batch_size, total - start))
        return
    pending: list[Graph] = []
    offset = 0
    for g in _stream_graphs(source):
        if pending and (g.n != pending[0].n or len(pending) >= batch_size):
            yield ("graphs", pending[0].n, offset, tuple(p.adj for p in pending))
            offset += len(pending)
            pending = []
        pending.append(g)
    if pending:
        yield ("graphs", pending[0].n, offset, tuple(p.adj for p in pending))


class _Batch:
    def __init__(self, desc: tuple):
        kind, n, start, payload = desc
        self.n = n
        self.offset = start
        if kind == "codes":
            self.masks = _kernels.masks_from_codes(n, start, payload)
        else:
            self.masks = np.array(payload, dtype=np.int64).reshape(len(payload), n)
        self._beta: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return self.masks.shape[0]

    def beta(self, k: int) -> np.ndarray:
        if k not in self._beta:
            self._beta[k] = beta_k_many(self.masks, self.n, k)
        return self._beta[k]

    def beta_ge1(self, k: int) -> np.ndarray:
        b = self.beta(k)
        return (b[:, 1] > 0) & (b[:, 0] >= b[:, 1])

    def beta_pos(self, k: int) -> np.ndarray:
        b = self.beta(k)
        return (b[:, 1] > 0) & (b[:, 0] > 0)

    def everything(self) -> np.ndarray:
        return np.ones(len(self), dtype=bool)

    def nothing(self) -> np.ndarray:
        return np.zeros(len(self), dtype=bool)


class _Case:
    """One (graph, k) pair that passed the batch-level filter."""

    def __init__(self, batch: _Batch, row: int, k: int | None):
        self.batch = batch
        self.row = row
        self.k = k
        self.n = batch.n
        self._g: Graph | None = None

    @property
    def g(self) -> Graph:
        if self._g is None:
            self._g = Graph._trusted(self.n, tuple(int(a) for a in self.batch.masks[self.row]))
        return self._g

    def beta(self, k: int | None = None) -> Fraction:
        """beta^k of this graph (DEFINED_ZERO read as 0)."""
        num, den = self.batch.beta(self.k if k is None else k)[self.row]
        return Fraction(int(num), int(den)) if den else Fraction(0)


VACUOUS = "vacuous"
Outcome = None | str | dict | list


@dataclass(frozen=True)
class _Claim:
    prefilter: Callable[[_Batch, int | None], np.ndarray]
    check: Callable[[_Case], Outcome]
    min_k: int = 2
    fixed_k: tuple | None = None
    # optional batch screen: rows it clears pass without a per-graph check
    screen: Callable[[_Batch, int | None], np.ndarray] | None = None


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parity(n: int, k: int) -> bool:
    return (n * k) % 2 == 0


# --------------------------------------------------------------------------
# conclusion tests


def _check_k_factor(c: _Case) -> Outcome:
    if find_k_factor(c.g, c.k) is None:
        return {"reason": "no k-factor", "beta": _fmt(c.beta())}
    return None


def _check_split_k1(c: _Case) -> Outcome:
    split = split_partition(c.g)
    if split is None:
        return VACUOUS
    if find_k_factor(c.g, c.k + 1) is None:
        x, y = split
        return {"reason": "no (k+1)-factor", "beta": _fmt(c.beta()), "x": x.to_list(), "y": y.to_list()}
    return None


def _check_disjoint_pm(c: _Case) -> Outcome:
    try:
        disjoint_near_perfect_matchings(c.g, c.k - 1)
    except MatchingPipelineError as exc:
        return {"reason": "pipeline failed", "failed_step": exc.step, "residual": write_graph6(exc.residual)}
    return None


def _candidate_sides(g: Graph, cap: int = 16) -> list[VertexSet]:
    """Every X that is one side of some bipartition of g (component sides
    chosen independently), ascending by bitmask."""
    bp = bipartition(g)
    if bp is None:
        return []
    x, _ = bp
    comps = components(g, g.full_mask)
    if len(comps) > cap:
        raise CapacityError(f"too many components ({len(comps)}) to enumerate bipartitions")
    options = [((x & c).mask, (c - x).mask) for c in comps]
    sides = sorted(sum(choice) for choice in itertools.product(*options))
    return [VertexSet.from_mask(m) for m in sides]


def _check_bip_matchings(c: _Case) -> Outcome:
    tested = False
    for x in _candidate_sides(c.g):
        b = beta_k_bipartite(c.g, x, c.k).numeric
        if b < 1:
            continue
        tested = True
        result = disjoint_x_covering_matchings(c.g, x, c.k)
        if not isinstance(result, MatchingFamily):
            return {"reason": "no k disjoint X-covering matchings", "x": x.to_list(),
                    "violator": result.to_list(), "beta": _fmt(b)}
    return None if tested else VACUOUS


def _check_nonbip_ub(c: _Case) -> Outcome:
    b, n, k = c.beta(), c.n, c.k
    bad = []
    if b > 0 and bipartition(c.g) is not None:
        bad.append("positive beta on a bipartite graph")
    if b > Fraction(n - k, k):
        bad.append("beta exceeds (n-k)/k")
    if b >= 1 and n < 2 * k:
        bad.append("beta >= 1 with n < 2k")
    return {"reason": "; ".join(bad), "beta": _fmt(b)} if bad else None


def _check_monotone(c: _Case) -> Outcome:
    b = c.beta()
    for i in range(1, c.k):
        if c.beta(i) < b:
            return {"reason": f"beta^{i} < beta^{c.k}", "beta_i": _fmt(c.beta(i)), "beta": _fmt(b)}
    return None


def _check_connected(c: _Case) -> Outcome:
    return None if c.g.is_connected() else {"reason": "disconnected", "beta": _fmt(c.beta())}


def _check_mindeg(c: _Case) -> Outcome:
    b, n, k = c.beta(), c.n, c.k
    mindeg = min(c.g.degrees())
    if mindeg < (b + 1) * k - 1:
        return {"reason": "min degree below (beta+1)k-1", "min_degree": mindeg, "beta": _fmt(b)}
    if b >= 1 and mindeg < n - Fraction(n - 1) / b:
        return {"reason": "min degree below n-(n-1)/beta", "min_degree": mindeg, "beta": _fmt(b)}
    return None


def _check_complete_2k(c: _Case) -> Outcome:
    return None if c.g.is_complete() else {"reason": "not complete", "beta": _fmt(c.beta())}


def _check_indep(c: _Case) -> Outcome:
    b, n, k = c.beta(), c.n, c.k
    alpha = independence_number(c.g)
    if alpha > n / (b + 1):
        return {"reason": "alpha > n/(beta+1)", "alpha": alpha, "beta": _fmt(b)}
    if b >= 1 and alpha > (n - b * (k - 1)) / (b + 1):
        return {"reason": "alpha > (n-beta(k-1))/(beta+1)", "alpha": alpha, "beta": _fmt(b)}
    return None


def _check_tough(c: _Case) -> Outcome:
    b = c.beta()
    tau = toughness(c.g)
    if tau < b:
        return {"reason": "toughness below beta", "toughness": _fmt(tau), "beta": _fmt(b)}
    return None


def _check_conn(c: _Case) -> Outcome:
    b = c.beta()
    kappa = vertex_connectivity(c.g)
    if kappa < (b - 1) / (b + 1) * c.n:
        return {"reason": "kappa below (beta-1)n/(beta+1)", "kappa": kappa, "beta": _fmt(b)}
    return None


def _check_pm_exists(c: _Case) -> Outcome:
    if isinstance(perfect_matching(c.g), Matching):
        return None
    return {"reason": "no perfect matching", "beta": _fmt(c.beta())}


def _check_hypo_iff(c: _Case) -> Outcome:
    by_matching = bool(hypomatchable(c.g))
    by_tutte = hypo_tutte_violator(c.g) is None
    if by_matching != by_tutte:
        return {"reason": "blossom and Tutte condition disagree",
                "blossom": by_matching, "tutte_condition": by_tutte}
    return None


def _screen_hypo_iff(batch: _Batch, k) -> np.ndarray:
    """Rows where the batch blossom and Tutte answers disagree."""
    by_matching = hypomatchable_many(batch.masks, batch.n) < 0
    by_tutte = hypo_tutte_many(batch.masks, batch.n) < 0
    return by_matching != by_tutte


def _check_hypo(c: _Case) -> Outcome:
    h = hypomatchable(c.g)
    return None if h else {"reason": "not hypomatchable", "vertex": h.vertex, "beta": _fmt(c.beta())}


def bounded_degree_edge_sets(g: Graph, cap: int) -> Iterator[list[tuple[int, int]]]:
    """Every edge subset F with maximum degree at most ``cap``."""
    edges = g.edges()
    deg = [0] * g.n
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(edges):
            yield list(chosen)
            return
        yield from rec(i + 1)
        u, v = edges[i]
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    return rec(0)


def _check_fdom(c: _Case) -> Outcome:
    for f in bounded_degree_edge_sets(c.g, c.k - 2):
        b2 = beta_k(remove_edges(c.g, f), 2).numeric
        if b2 < 1:
            return {"reason": "beta^2(G-E(F)) < 1", "f": [list(e) for e in f], "beta2": _fmt(b2)}
    return None


def _check_split_y(c: _Case) -> Outcome:
    split = split_partition(c.g)
    if split is None:
        return VACUOUS
    x, y = split
    if len(y) < max(c.k, len(x) + c.k - 1):
        return {"reason": "|Y| < max(k, |X|+k-1)", "x": x.to_list(), "y": y.to_list()}
    return None


def _check_parity(c: _Case) -> Outcome:
    return None if all_deficiencies_even(c.g, c.k) else {"reason": "odd deficiency found"}


def _check_maxmin(c: _Case) -> Outcome:
    b = find_maxmin_barrier(c.g, c.k)
    if b is None:
        return VACUOUS
    report = check_barrier_properties(c.g, b)
    failed = [name for name in ("i", "ii", "iii", "iv") if not getattr(report, name)]
    if b.deficiency > -2:
        failed.append("deficiency > -2")
    if failed:
        return {"reason": "maxmin barrier property fails", "failed": failed,
                "s": b.partition.s.to_list(), "t": b.partition.t.to_list()}
    return None


def tight_family_values(n: int, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three candidate ratios for split_tight(n, k)."""
    return Fraction(n - 2, n + 2 * k), Fraction(n - 2 * k, 2 * k), Fraction(n - k, k)


def _tight_masks(n: int, k: int) -> np.ndarray | None:
    if n % 2 or n < 2 * k + 2:
        return None
    return np.array(generate(FamilySpec("split_tight", (n, k))).adj, dtype=np.int64)


def _prefilter_tight(batch: _Batch, k: int) -> np.ndarray:
    target = _tight_masks(batch.n, k)
    if target is None:
        return batch.nothing()
    return np.all(batch.masks == target, axis=1)


def _check_tight(c: _Case) -> Outcome:
    b = c.beta()
    expected = min(tight_family_values(c.n, c.k))
    bad = []
    if b != expected:
        bad.append(f"beta {_fmt(b)} != {_fmt(expected)}")
    if b >= 1:
        bad.append("beta >= 1")
    if find_k_factor(c.g, c.k) is not None:
        bad.append("k-factor exists")
    barrier = find_maxmin_barrier(c.g, c.k)
    if barrier is None or barrier.deficiency % 2 or barrier.deficiency > -2:
        bad.append("no barrier with even deficiency <= -2")
    return {"reason": "; ".join(bad)} if bad else None


def _odd(batch: _Batch) -> bool:
    return batch.n % 2 == 1


def _when(cond: bool, mask: Callable[[], np.ndarray], batch: _Batch) -> np.ndarray:
    return mask() if cond else batch.nothing()


CLAIMS: dict[ClaimId, _Claim] = {
    ClaimId.THM_K_FACTOR: _Claim(
        lambda b, k: _when(_parity(b.n, k), lambda: b.beta_ge1(k), b), _check_k_factor),
    ClaimId.THM_SPLIT_K1: _Claim(
        lambda b, k: _when(b.n % 2 == 0, lambda: b.beta_ge1(k), b), _check_split_k1),
    ClaimId.THM_DISJOINT_PM: _Claim(lambda b, k: b.beta_ge1(k), _check_disjoint_pm, min_k=1),
    ClaimId.THM_BIP_MATCHINGS: _Claim(
        lambda b, k: _kernels.bipartite_many(b.masks, b.n), _check_bip_matchings, min_k=1),
    ClaimId.OBS_NONBIP_UB: _Claim(lambda b, k: _when(b.n >= k, b.everything, b), _check_nonbip_ub),
    ClaimId.OBS_MONOTONE: _Claim(lambda b, k: b.beta_pos(k), _check_monotone),
    ClaimId.OBS_CONNECTED_K2: _Claim(lambda b, k: b.beta_pos(k), _check_connected, fixed_k=(2,)),
    ClaimId.COR_CONNECTED: _Claim(lambda b, k: b.beta_pos(k), _check_connected),
    ClaimId.LEM_MINDEG: _Claim(lambda b, k: b.beta_pos(k), _check_mindeg),
    ClaimId.COR_COMPLETE_2K: _Claim(
        lambda b, k: _when(b.n == 2 * k, lambda: b.beta_ge1(k), b), _check_complete_2k),
    ClaimId.PROP_INDEP: _Claim(lambda b, k: b.beta_pos(k), _check_indep),
    ClaimId.PROP_TOUGH: _Claim(lambda b, k: b.beta_pos(k), _check_tough),
    ClaimId.PROP_CONN: _Claim(lambda b, k: b.beta_ge1(k), _check_conn),
    ClaimId.LEM_PM_EXISTS: _Claim(
        lambda b, k: _when(b.n % 2 == 0, lambda: b.beta_ge1(k), b), _check_pm_exists),
    ClaimId.COR_HYPO_IFF: _Claim(lambda b, k: _when(_odd(b), b.everything, b), _check_hypo_iff,
                                 fixed_k=(None,), screen=_screen_hypo_iff),
    ClaimId.LEM_HYPO: _Claim(lambda b, k: _when(_odd(b), lambda: b.beta_ge1(k), b), _check_hypo),
    ClaimId.LEM_FDOM: _Claim(lambda b, k: b.beta_ge1(k), _check_fdom),
    ClaimId.OBS_SPLIT_Y: _Claim(lambda b, k: b.beta_ge1(k), _check_split_y),
    ClaimId.LEM_DELTA_PARITY: _Claim(
        lambda b, k: _when(_parity(b.n, k), b.everything, b), _check_parity),
    ClaimId.LEM_MAXMIN_PROPS: _Claim(
        lambda b, k: _when(_parity(b.n, k), b.everything, b), _check_maxmin),
    ClaimId.FAMILY_TIGHTNESS: _Claim(_prefilter_tight, _check_tight),
}


# --------------------------------------------------------------------------
# probes


def _probe_cover_x(c: _Case) -> Outcome:
    """Both readings of 'a k-factor covering X': (a) a k-regular subgraph
    whose vertex set contains X; (b) a spanning subgraph with degree k on X
    and at most k elsewhere."""
    tested = False
    found = []
    for x in _candidate_sides(c.g):
        b = beta_k_bipartite(c.g, x, c.k).numeric
        if b < 1:
            continue
        tested = True
        y = c.g.vertices() - x
        if not any(
            find_k_factor(c.g.induced(x | VertexSet(ys))[0], c.k) is not None
            for ys in itertools.combinations(y, len(x))
        ):
            found.append({"interpretation": "a", "x": x.to_list(), "beta": _fmt(b)})
        if not isinstance(disjoint_x_covering_matchings(c.g, x, c.k), MatchingFamily):
            found.append({"interpretation": "b", "x": x.to_list(), "beta": _fmt(b)})
    if not tested:
        return VACUOUS
    return found or None


def _probe_spectrum(t: int) -> Callable[[_Case], Outcome]:
    def check(c: _Case) -> Outcome:
        if (c.n * t) % 2:
            return VACUOUS
        if find_k_factor(c.g, t) is None:
            return {"reason": f"no {t}-factor", "t": t, "beta": _fmt(c.beta())}
        return None

    return check


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    k: int | None
    details: dict[str, Any]
    index: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "k": self.k, "details": self.details, "index": self.index}


@dataclass
class VerificationReport:
    claim: str
    source: dict[str, Any]
    k_values: list
    graphs_scanned: int = 0
    hypothesis_hits: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    counterexample_count: int = 0
    elapsed: float = 0.0
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.counterexample_count == 0

    def to_dict(self, include_elapsed: bool = True) -> dict[str, Any]:
        d = {
            "schema": SCHEMA,
            "claim": self.claim,
            "source": self.source,
            "k_values": self.k_values,
            "params": self.params,
            "graphs_scanned": self.graphs_scanned,
            "hypothesis_hits": self.hypothesis_hits,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "verified": self.verified,
        }
        if include_elapsed:
            d["elapsed"] = round(self.elapsed, 6)
        return d


def _claim_for(claim: ClaimId | ProbeId, params: dict) -> _Claim:
    if isinstance(claim, ClaimId):
        return CLAIMS[claim]
    if claim is ProbeId.BIP_KFACTOR_COVER_X:
        return _Claim(lambda b, k: _kernels.bipartite_many(b.masks, b.n), _probe_cover_x, min_k=1)
    t = params["t"]
    return _Claim(lambda b, k: b.beta_ge1(k), _probe_spectrum(t), min_k=2)


def _run_batch(claim_key: tuple, desc: tuple, k_values: tuple) -> tuple[int, int, list]:
    claim = _claim_for(_parse_id(claim_key[0]), dict(claim_key[1]))
    batch = _Batch(desc)
    masks_by_k = []
    for k in k_values:
        if k is not None and k < claim.min_k:
            masks_by_k.append(batch.nothing())
        else:
            masks_by_k.append(np.asarray(claim.prefilter(batch, k), dtype=bool))
    any_hit = np.zeros(len(batch), dtype=bool)
    for m in masks_by_k:
        any_hit |= m
    hits = 0
    found = []
    if claim.screen is not None:
        screened = []
        for k, m in zip(k_values, masks_by_k):
            if m.any():
                hits += int(m.sum())
                m = m & claim.screen(batch, k)
            screened.append(m)
        masks_by_k = screened
        any_hit = np.zeros(len(batch), dtype=bool)
        for m in masks_by_k:
            any_hit |= m
    for row in np.flatnonzero(any_hit):
        for k, m in zip(k_values, masks_by_k):
            if not m[row]:
                continue
            case = _Case(batch, int(row), k)
            outcome = claim.check(case)
            if outcome == VACUOUS:
                if claim.screen is not None:
                    hits -= 1
                continue
            if claim.screen is None:
                hits += 1
            if outcome is None:
                continue
            for details in outcome if isinstance(outcome, list) else [outcome]:
                found.append((batch.offset + int(row), k, write_graph6(case.g), details))
    return len(batch), hits, found


def _parse_id(name: str) -> ClaimId | ProbeId:
    if name in ClaimId.__members__:
        return ClaimId(name)
    if name in ProbeId.__members__:
        return ProbeId(name)
    raise ValueError(f"unknown claim {name!r}")


def _run(
    claim: ClaimId | ProbeId,
    source: GraphSource,
    k_values: Sequence[int | None],
    params: dict,
    jobs: int,
    max_counterexamples: int | None,
    batch_size: int,
) -> VerificationReport:
    started = time.perf_counter()
    key = (claim.value, tuple(sorted(params.items())))
    report = VerificationReport(claim.value, source.describe(), list(k_values), params=dict(params))
    descs = _batch_descriptors(source, batch_size)
    ks = tuple(k_values)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_run_batch, itertools.repeat(key), descs, itertools.repeat(ks))
            _merge(report, results, max_counterexamples)
    else:
        _merge(report, (_run_batch(key, d, ks) for d in descs), max_counterexamples)
    report.elapsed = time.perf_counter() - started
    return report


def _merge(report: VerificationReport, results, limit: int | None) -> None:
    for scanned, hits, found in results:
        report.graphs_scanned += scanned
        report.hypothesis_hits += hits
        for index, k, g6, details in found:
            report.counterexample_count += 1
            if limit is None or len(report.counterexamples) < limit:
                report.counterexamples.append(Counterexample(g6, k, details, index))


def verify_claim(
    claim: ClaimId | str,
    source: GraphSource,
    k_values: Sequence[int] = (2,),
    *,
    jobs: int = 1,
    max_counterexamples: int | None = None,
    batch_size: int = BATCH_SIZE,
) -> VerificationReport:
    """Scan ``source`` for counterexamples to ``claim``; counterexamples are
    listed in stream order (then k order)."""
    claim = ClaimId(claim)
    spec = CLAIMS[claim]
    ks: Sequence[int | None] = spec.fixed_k if spec.fixed_k is not None else list(k_values)
    return _run(claim, source, ks, {}, jobs, max_counterexamples, batch_size)


def probe_conjecture(
    which: ProbeId | str,
    source: GraphSource,
    params: dict[str, Any],
    *,
    jobs: int = 1,
    max_counterexamples: int | None = None,
    batch_size: int = BATCH_SIZE,
) -> VerificationReport:
    """Search for candidate counterexamples to an open problem.

    BIP_KFACTOR_COVER_X (params ``k``: int or list): bipartite graphs and
    every side X with beta^k(G, X) >= 1; each failure names the reading
    of "k-factor covering X" it violates.
    FACTOR_SPECTRUM (params ``k``, ``t`` with k+1 <= t <= 2k-1): graphs with
    beta^k >= 1 and nt even that have no t-factor.
    """
    which = ProbeId(which)
    ks = params.get("k", 2)
    ks = list(ks) if isinstance(ks, (list, tuple)) else [ks]
    clean = {"k": ks}
    if which is ProbeId.FACTOR_SPECTRUM:
        t = params.get("t")
        if t is None:
            raise ValueError("FACTOR_SPECTRUM needs a factor degree t")
        for k in ks:
            if not k + 1 <= t <= 2 * k - 1:
                raise ValueError(f"t={t} outside k+1..2k-1 for k={k}")
        clean["t"] = t
    key_params = {k: v for k, v in clean.items() if k != "k"}
    report = _run(which, source, ks, key_params, jobs, max_counterexamples, batch_size)
    report.params = clean
    return report
