"""Classical parameters bounded by the k-th binding number: toughness,
independence number, vertex connectivity and degree extremes."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import _kernels
from .flow import FlowNetwork
from .graph import CapacityError, Graph, VertexSet

__all__ = [
    "INFINITE",
    "degree_extremes",
    "independence_number",
    "maximum_independent_set",
    "minimum_separator",
    "toughness",
    "toughness_certificate",
    "toughness_many",
    "vertex_connectivity",
]

INFINITE = math.inf
TOUGHNESS_CAP = 16
INDEPENDENCE_CAP = 30


def toughness_certificate(g: Graph) -> tuple[Fraction | float, VertexSet | None]:
    """Toughness and a minimising separator S (None for complete graphs,
    whose toughness is INFINITE)."""
    if g.n > TOUGHNESS_CAP:
        raise CapacityError(f"toughness enumerates all subsets; capped at n <= {TOUGHNESS_CAP}")
    if g.is_complete():
        return INFINITE, None
    p, q, w = _kernels.toughness_scan(np.array(g.adj, dtype=np.int64), g.n)
    return Fraction(int(p), int(q)), VertexSet.from_mask(int(w))


def toughness(g: Graph) -> Fraction | float:
    """min |S| / c(G-S) over S with c(G-S) > 1; INFINITE for K_n."""
    return toughness_certificate(g)[0]


def toughness_many(masks: np.ndarray, n: int) -> np.ndarray:
    """(num, den) toughness per row; den == 0 means INFINITE."""
    return _kernels.toughness_many(np.ascontiguousarray(masks, dtype=np.int64), n)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_size(adj, cand: int) -> int:
    # greedy cover of cand by cliques; bounds the independence number of G[cand]
    count = 0
    while cand:
        low = cand & -cand
        cand ^= low
        rest = cand & adj[low.bit_length() - 1]
        while rest:
            w = rest & -rest
            cand ^= w
            rest &= adj[w.bit_length() - 1]
        count += 1
    return count


def maximum_independent_set(g: Graph) -> VertexSet:
    """A maximum independent set by branch and bound."""
    if g.n > INDEPENDENCE_CAP:
        raise CapacityError(f"independence number capped at n <= {INDEPENDENCE_CAP}")
    adj = g.adj
    best = [0, 0]  # size, mask

    def expand(cur: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, cur
            return
        if size + _clique_cover_size(adj, cand) <= best[0]:
            return
        v = max(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        bit = 1 << v
        expand(cur | bit, size + 1, cand & ~adj[v] & ~bit)
        if adj[v] & cand:
            expand(cur, size, cand & ~bit)

    expand(0, 0, g.full_mask)
    return VertexSet.from_mask(best[1])


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


def _local_cut(g: Graph, s: int, t: int, limit: int | None) -> tuple[int, FlowNetwork]:
    # v_in = 2v, v_out = 2v+1; unit capacity through every vertex but s and t
    big = g.n
    net = FlowNetwork(2 * g.n)
    for v in range(g.n):
        net.add_edge(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        net.add_edge(2 * u + 1, 2 * v, big)
        net.add_edge(2 * v + 1, 2 * u, big)
    return net.max_flow(2 * s + 1, 2 * t, limit), net


def minimum_separator(g: Graph) -> VertexSet:
    """A smallest vertex set whose removal disconnects G or leaves a single
    vertex."""
    if g.n == 0:
        return VertexSet()
    if g.is_complete():
        return VertexSet(range(1, g.n))
    if not g.is_connected():
        return VertexSet()
    best_size = None
    best = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            value, net = _local_cut(g, s, t, best_size)
            if best is None or value < best_size:
                side = net.reachable(2 * s + 1)
                best_size = value
                best = VertexSet(v for v in range(g.n) if 2 * v in side and 2 * v + 1 not in side)
    return best


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): K_n gives n-1, disconnected graphs 0; otherwise the minimum
    over non-adjacent pairs of the number of internally disjoint paths."""
    return len(minimum_separator(g))


def degree_extremes(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree)."""
    if g.n == 0:
        raise ValueError("degree extremes of the empty graph are undefined")
    deg = g.degrees()
    return min(deg), max(deg)
