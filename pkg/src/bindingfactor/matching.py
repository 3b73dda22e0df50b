"""Matchings in general and bipartite graphs.

General graphs use Edmonds' blossom algorithm (compiled, deterministic:
vertices and neighbour lists are scanned in ascending order).  Bipartite
graphs get Hall and Lebensold checks plus a constructive route to k
disjoint X-covering matchings: integral max-flow followed by a proper
k-edge-colouring of the flow subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .flow import FlowNetwork
from .graph import (
    CapacityError,
    Graph,
    VertexSet,
    as_mask,
    bipartition,
    is_independent,
    remove_edges,
)

__all__ = [
    "Matching",
    "MatchingFamily",
    "MatchingPipelineError",
    "TutteWitness",
    "HypomatchResult",
    "bipartite_edge_color",
    "disjoint_near_perfect_matchings",
    "disjoint_x_covering_matchings",
    "hall_violator",
    "hypo_tutte_violator",
    "hypomatchable",
    "hypomatchable_many",
    "hypo_tutte_many",
    "lebensold_value",
    "lebensold_violator",
    "max_matching",
    "matching_from_adjacency",
    "perfect_matching",
    "tutte_q",
    "tutte_witness",
]

TUTTE_WITNESS_CAP = 24
SUBSET_SCAN_CAP = 20


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(_edge(u, v) for u, v in self.edges))
        seen = 0
        for u, v in edges:
            bits = (1 << u) | (1 << v)
            if seen & bits or u == v:
                raise ValueError("matching edges must not share endpoints")
            seen |= bits
        object.__setattr__(self, "edges", edges)

    @property
    def covered(self) -> VertexSet:
        return VertexSet(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)

    def is_perfect(self, n: int) -> bool:
        return 2 * len(self.edges) == n

    def is_near_perfect(self, n: int) -> bool:
        return n % 2 == 1 and 2 * len(self.edges) == n - 1


@dataclass(frozen=True)
class MatchingFamily:
    matchings: tuple[Matching, ...]
    pairwise_disjoint: bool = field(default=True, init=False)

    def __post_init__(self):
        object.__setattr__(self, "matchings", tuple(self.matchings))
        seen: set[tuple[int, int]] = set()
        for m in self.matchings:
            for e in m.edges:
                if e in seen:
                    raise ValueError(f"edge {e} appears in two matchings")
                seen.add(e)

    def __len__(self) -> int:
        return len(self.matchings)

    def __iter__(self):
        return iter(self.matchings)

    def union_edges(self) -> list[tuple[int, int]]:
        return sorted(e for m in self.matchings for e in m.edges)


@dataclass(frozen=True)
class TutteWitness:
    """A set U with q_G(U) > |U|; ``u`` is None when the graph was too
    large for the exhaustive witness search."""

    u: VertexSet | None
    odd_count: int | None


@dataclass(frozen=True)
class HypomatchResult:
    hypomatchable: bool
    matchings: tuple[Matching, ...] = ()
    vertex: int | None = None

    def __bool__(self) -> bool:
        return self.hypomatchable


class MatchingPipelineError(RuntimeError):
    """Raised when step ``step`` (1-based) finds no (near-)perfect matching
    in the residual graph."""

    def __init__(self, step: int, residual: Graph, found: MatchingFamily):
        super().__init__(f"no perfect or near-perfect matching at step {step}")
        self.step = step
        self.residual = residual
        self.found = found


# --------------------------------------------------------------------------
# general graphs


def matching_from_adjacency(neighbours: Sequence[Iterable[int]]) -> np.ndarray:
    """Mate array of a maximum matching for adjacency lists (any size)."""
    n = len(neighbours)
    indptr = np.zeros(n + 1, np.int64)
    flat: list[int] = []
    for v, nb in enumerate(neighbours):
        flat.extend(sorted(nb))
        indptr[v + 1] = len(flat)
    indices = np.array(flat, dtype=np.int64) if flat else np.zeros(0, np.int64)
    return _kernels.blossom_matching(indptr, indices, n)


def max_matching(g: Graph) -> Matching:
    mate = matching_from_adjacency([list(g.neighbors(v)) for v in range(g.n)])
    return Matching(tuple((v, int(u)) for v, u in enumerate(mate) if u > v))


def tutte_q(g: Graph, u) -> int:
    """Number of odd-order components of G - U."""
    um = as_mask(u)
    if um & ~g.full_mask:
        raise ValueError("U is not a subset of V(G)")
    rest = g.full_mask & ~um
    if g.n == 0:
        return 0
    _, odd = _kernels.count_components(np.array(g.adj, dtype=np.int64), np.int64(rest))
    return int(odd)


def _scan(g: Graph, slack: int, skip_empty: bool) -> TutteWitness | None:
    if g.n > TUTTE_WITNESS_CAP:
        raise CapacityError(f"Tutte witness search is capped at {TUTTE_WITNESS_CAP} vertices")
    if g.n == 0:
        return None
    u = int(_kernels.tutte_scan(np.array(g.adj, dtype=np.int64), g.n, slack, skip_empty))
    if u < 0:
        return None
    return TutteWitness(VertexSet.from_mask(u), tutte_q(g, u))


def tutte_witness(g: Graph) -> TutteWitness | None:
    """Smallest-bitmask U with q(U) > |U|, or None (Tutte: then a perfect
    matching exists)."""
    return _scan(g, 0, False)


def hypo_tutte_violator(g: Graph) -> TutteWitness | None:
    """Smallest nonempty U with q(U) > |U| - 1, or None.  For odd n, None
    means hypomatchable (computed from components alone, no matchings)."""
    return _scan(g, 1, True)


def perfect_matching(g: Graph) -> Matching | TutteWitness:
    """A perfect matching, or a Tutte witness proving none exists."""
    m = max_matching(g)
    if m.is_perfect(g.n):
        return m
    if g.n > TUTTE_WITNESS_CAP:
        return TutteWitness(None, None)
    w = tutte_witness(g)
    if w is None:  # pragma: no cover - would contradict Tutte's theorem
        raise RuntimeError("maximum matching is not perfect but no Tutte witness exists")
    return w


def hypomatchable(g: Graph) -> HypomatchResult:
    """Whether G - v has a perfect matching for every v (one blossom run
    per vertex).  Certificate: the per-vertex matchings, or the first
    vertex whose deletion leaves no perfect matching."""
    if g.n % 2 == 0:
        return HypomatchResult(g.n == 0, (), 0 if g.n else None)
    found = []
    for v in range(g.n):
        m = max_matching(g.without_vertex_edges(v))
        if 2 * len(m) != g.n - 1:
            return HypomatchResult(False, (), v)
        found.append(m)
    return HypomatchResult(True, tuple(found))


def hypomatchable_many(masks: np.ndarray, n: int) -> np.ndarray:
    """Batch form of ``hypomatchable`` for rows of adjacency masks (odd n):
    per row the first vertex whose deletion leaves no perfect matching,
    or -1."""
    if n % 2 == 0:
        raise ValueError("hypomatchability is only possible for odd n")
    return _kernels.hypomatchable_many(np.ascontiguousarray(masks, dtype=np.int64), n)


def hypo_tutte_many(masks: np.ndarray, n: int) -> np.ndarray:
    """Batch form of ``hypo_tutte_violator``: smallest violating mask per
    row, or -1."""
    masks = np.ascontiguousarray(masks, dtype=np.int64)
    if n == 0:
        return np.full(masks.shape[0], -1, np.int64)
    return _kernels.tutte_many(masks, n, 1, True)


def disjoint_near_perfect_matchings(g: Graph, t: int) -> MatchingFamily:
    """``t`` pairwise edge-disjoint perfect (n even) or near-perfect (n
    odd) matchings, found one at a time on the residual graph."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    target = g.n // 2
    found: list[Matching] = []
    residual = g
    for step in range(1, t + 1):
        m = max_matching(residual)
        if len(m) != target:
            raise MatchingPipelineError(step, residual, MatchingFamily(tuple(found)))
        found.append(m)
        residual = remove_edges(residual, m.edges)
    return MatchingFamily(tuple(found))


# --------------------------------------------------------------------------
# bipartite graphs


def _check_side(g: Graph, x) -> int:
    xm = as_mask(x)
    if xm & ~g.full_mask:
        raise ValueError("X is not a subset of V(G)")
    if not is_independent(g, xm):
        raise ValueError("X is not an independent set")
    return xm


def _submasks(xm: int):
    bits = list(VertexSet.from_mask(xm))
    for i in range(1 << len(bits)):
        s = 0
        for j, b in enumerate(bits):
            if (i >> j) & 1:
                s |= 1 << b
        yield s


def _ascending_submasks(xm: int) -> list[int]:
    return sorted(_submasks(xm))


def hall_violator(g: Graph, x) -> VertexSet | None:
    """Smallest-bitmask S within X with |N(S)| < |S|, or None."""
    xm = _check_side(g, x)
    if xm.bit_count() > SUBSET_SCAN_CAP:
        raise CapacityError(f"Hall scan is capped at |X| <= {SUBSET_SCAN_CAP}")
    for s in _ascending_submasks(xm):
        nb = 0
        for v in VertexSet.from_mask(s):
            nb |= g.adj[v]
        if nb.bit_count() < s.bit_count():
            return VertexSet.from_mask(s)
    return None


def lebensold_value(g: Graph, x, s, k: int) -> int:
    """L^k(S) = sum over y outside X of min(k, |N(y) & S|)."""
    xm = _check_side(g, x)
    sm = as_mask(s)
    if sm & ~xm:
        raise ValueError("S is not a subset of X")
    y = g.full_mask & ~xm
    return sum(min(k, (g.adj[v] & sm).bit_count()) for v in VertexSet.from_mask(y))


def lebensold_violator(g: Graph, x, k: int) -> VertexSet | None:
    """Smallest-bitmask S within X with L^k(S) < k|S|, or None."""
    xm = _check_side(g, x)
    if xm.bit_count() > SUBSET_SCAN_CAP:
        raise CapacityError(f"Lebensold scan is capped at |X| <= {SUBSET_SCAN_CAP}")
    ys = [g.adj[v] for v in VertexSet.from_mask(g.full_mask & ~xm)]
    for s in _ascending_submasks(xm):
        if sum(min(k, (a & s).bit_count()) for a in ys) < k * s.bit_count():
            return VertexSet.from_mask(s)
    return None


def disjoint_x_covering_matchings(g: Graph, x, k: int) -> MatchingFamily | VertexSet:
    """``k`` edge-disjoint matchings each covering X, or a set S within X
    with L^k(S) < k|S|.

    Flow network: source -> x (capacity k), x -> y (1), y -> sink (k).  A
    flow of value k|X| selects a subgraph with degree k on X and at most k
    elsewhere; a proper k-edge-colouring splits it into the matchings.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    xm = _check_side(g, x)
    xs = list(VertexSet.from_mask(xm))
    src, sink = g.n, g.n + 1
    net = FlowNetwork(g.n + 2)
    arcs = []
    for v in xs:
        net.add_edge(src, v, k)
        for y in g.neighbors(v):
            arcs.append((v, y, net.add_edge(v, y, 1)))
    for y in VertexSet.from_mask(g.full_mask & ~xm):
        if g.adj[y] & xm:
            net.add_edge(y, sink, k)
    value = net.max_flow(src, sink)
    if value < k * len(xs):
        if len(xs) <= SUBSET_SCAN_CAP:
            return lebensold_violator(g, xm, k)
        side = net.reachable(src)
        return VertexSet(v for v in xs if v in side)
    chosen = [(v, y) for v, y, idx in arcs if net.flow_on(idx)]
    sub = Graph.from_edges(g.n, chosen)
    colours = bipartite_edge_color(sub, k)
    classes: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for e, c in colours.items():
        classes[c].append(e)
    return MatchingFamily(tuple(Matching(tuple(c)) for c in classes))


def bipartite_edge_color(g: Graph, k: int) -> dict[tuple[int, int], int]:
    """Proper edge colouring with colours ``0..k-1`` (Konig), built edge by
    edge; a conflict is resolved by swapping colours on one alternating
    path, which in a bipartite graph never returns to the new edge."""
    if bipartition(g) is None:
        raise ValueError("edge colouring needs a bipartite graph")
    if g.n and k < max(g.degrees()):
        raise ValueError("k must be at least the maximum degree")
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    for u, v in g.edges():
        a = next(c for c in range(k) if c not in at[u])
        b = next(c for c in range(k) if c not in at[v])
        if a in at[v]:
            path = []
            w, c = v, a
            while c in at[w]:
                z = at[w][c]
                path.append((w, z, c))
                w, c = z, (b if c == a else a)
            for p, q, c in path:
                del at[p][c]
                del at[q][c]
            for p, q, c in path:
                c2 = b if c == a else a
                at[p][c2] = q
                at[q][c2] = p
        at[u][a] = v
        at[v][a] = u
    return {_edge(u, w): c for u in range(g.n) for c, w in at[u].items() if u < w}
