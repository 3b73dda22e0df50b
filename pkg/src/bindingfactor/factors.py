"""k-factors, Tutte deficiencies and barriers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import (
    CapacityError,
    Graph,
    VertexSet,
    as_mask,
    as_vertex_set,
    components,
    count_edges_between,
)
from .matching import matching_from_adjacency

__all__ = [
    "BarrierCertificate",
    "BarrierReport",
    "FactorSubgraph",
    "OrderedPartition",
    "all_deficiencies_even",
    "check_barrier_properties",
    "delta",
    "find_k_factor",
    "find_maxmin_barrier",
    "odd_components",
]

BARRIER_CAP = 15


@dataclass(frozen=True)
class OrderedPartition:
    s: VertexSet
    t: VertexSet
    u: VertexSet

    @classmethod
    def of(cls, n: int, s, t) -> "OrderedPartition":
        """Partition of ``0..n-1`` with U = everything outside S and T."""
        sm, tm = as_mask(s), as_mask(t)
        return cls(VertexSet.from_mask(sm), VertexSet.from_mask(tm),
                   VertexSet.from_mask(((1 << n) - 1) & ~(sm | tm)))

    def validate(self, g: Graph) -> None:
        s, t, u = self.s.mask, self.t.mask, self.u.mask
        if s & t or s & u or t & u or (s | t | u) != g.full_mask:
            raise ValueError("(S, T, U) is not an ordered partition of V(G)")


@dataclass(frozen=True)
class FactorSubgraph:
    edges: tuple[tuple[int, int], ...]
    k: int


@dataclass(frozen=True)
class BarrierCertificate:
    partition: OrderedPartition
    k: int
    deficiency: int
    odd_components: tuple[VertexSet, ...]
    maxmin: bool


@dataclass(frozen=True)
class BarrierReport:
    """Outcome of the four maxmin-barrier checks; all None when there is
    no barrier to check."""

    applicable: bool
    i: bool | None = None
    ii: bool | None = None
    iii: bool | None = None
    iv: bool | None = None

    @property
    def all_hold(self) -> bool:
        return self.applicable and bool(self.i and self.ii and self.iii and self.iv)


def _component_is_odd(g: Graph, comp: VertexSet, t: VertexSet, k: int) -> bool:
    return (k * len(comp) + count_edges_between(g, comp, t)) % 2 == 1


def odd_components(g: Graph, p: OrderedPartition, k: int) -> list[VertexSet]:
    """Components C of G[U] with k|C| + e(C, T) odd."""
    return [c for c in components(g, p.u) if _component_is_odd(g, c, p.t, k)]


def delta(g: Graph, p: OrderedPartition, k: int) -> int:
    """k|S| - k|T| + sum over T of d_{G-S}(v) - q(S, T, U)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    p.validate(g)
    not_s = g.full_mask & ~p.s.mask
    degree_sum = sum((g.adj[v] & not_s).bit_count() for v in p.t)
    return k * len(p.s) - k * len(p.t) + degree_sum - len(odd_components(g, p, k))


def find_k_factor(g: Graph, k: int) -> FactorSubgraph | None:
    """A k-factor, or None.

    Tutte's gadget: vertex v becomes d(v) port nodes (one per incident
    edge) plus d(v) - k core nodes joined to all of v's ports; the two
    ports of each edge are joined.  Perfect matchings of the gadget are
    k-factors: port-port pairs are the chosen edges.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    deg = g.degrees()
    if (g.n * k) % 2 or any(d < k for d in deg):
        return None
    port: dict[tuple[int, int], int] = {}
    nbrs: list[list[int]] = []
    for v in range(g.n):
        for u in g.neighbors(v):
            port[v, u] = len(nbrs)
            nbrs.append([])
    for v in range(g.n):
        ports = [port[v, u] for u in g.neighbors(v)]
        for u in g.neighbors(v):
            if v < u:
                a, b = port[v, u], port[u, v]
                nbrs[a].append(b)
                nbrs[b].append(a)
        for _ in range(deg[v] - k):
            core = len(nbrs)
            nbrs.append(list(ports))
            for p in ports:
                nbrs[p].append(core)
    mate = matching_from_adjacency(nbrs)
    if (mate < 0).any():
        return None
    owner = {idx: key for key, idx in port.items()}
    edges = set()
    for (v, u), idx in port.items():
        m = int(mate[idx])
        if m in owner:
            edges.add((min(v, u), max(v, u)))
    factor = FactorSubgraph(tuple(sorted(edges)), k)
    _check_factor(g, factor)
    return factor


def _check_factor(g: Graph, f: FactorSubgraph) -> None:
    count = [0] * g.n
    for u, v in f.edges:
        if not g.has_edge(u, v):
            raise RuntimeError(f"gadget produced non-edge ({u}, {v})")
        count[u] += 1
        count[v] += 1
    if any(c != f.k for c in count):
        raise RuntimeError("gadget produced a subgraph that is not k-regular")


def _certificate(g: Graph, s: int, t: int, k: int, maxmin: bool) -> BarrierCertificate:
    p = OrderedPartition.of(g.n, s, t)
    return BarrierCertificate(p, k, delta(g, p, k), tuple(odd_components(g, p, k)), maxmin)


def find_maxmin_barrier(g: Graph, k: int, cap: int = BARRIER_CAP) -> BarrierCertificate | None:
    """The maxmin barrier (largest |S|, then smallest |T|, then smallest
    (S, T) bitmasks) over all 3^n ordered partitions, or None when every
    partition has nonnegative deficiency."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n > cap:
        raise CapacityError(f"barrier search enumerates 3^n partitions; capped at n <= {cap}")
    if g.n == 0:
        return None
    found, s, t, d, _ = _kernels.barrier_scan(np.array(g.adj, dtype=np.int64), g.n, k)
    if not found:
        return None
    cert = _certificate(g, int(s), int(t), k, True)
    if cert.deficiency != int(d):  # pragma: no cover - kernel/reference disagreement
        raise RuntimeError("compiled deficiency disagrees with the reference formula")
    return cert


def all_deficiencies_even(g: Graph, k: int) -> bool:
    """Whether every ordered partition has even deficiency."""
    if g.n > BARRIER_CAP:
        raise CapacityError(f"partition enumeration capped at n <= {BARRIER_CAP}")
    if g.n == 0:
        return True
    return bool(_kernels.all_deficiencies_even(np.array(g.adj, dtype=np.int64), g.n, k))


def check_barrier_properties(g: Graph, b: BarrierCertificate | None) -> BarrierReport:
    """Count, directly on the partition, the four structural properties a
    maxmin barrier must have:

    (i)   e(w, T) <= k-1 for w in U, and <= k-2 inside even components;
    (ii)  Delta(G[T]) <= k-2;
    (iii) e(w, T) + e(w, C) <= k-1 for w in T and every odd component C;
    (iv)  e(w, T) + sum over even components C of e(w, C) <= k-2, w in T.
    """
    if b is None:
        return BarrierReport(False)
    p, k = b.partition, b.k
    p.validate(g)
    if delta(g, p, k) != b.deficiency:
        raise ValueError("certificate deficiency does not match the graph")
    comps = components(g, p.u)
    odd = [c for c in comps if _component_is_odd(g, c, p.t, k)]
    even = [c for c in comps if not _component_is_odd(g, c, p.t, k)]
    even_mask = 0
    for c in even:
        even_mask |= c.mask
    tm = p.t.mask

    def e(w: int, mask: int) -> int:
        return (g.adj[w] & mask).bit_count()

    item_i = all(e(w, tm) <= k - 1 for w in p.u) and all(
        e(w, tm) <= k - 2 for w in as_vertex_set(even_mask)
    )
    item_ii = all(e(w, tm) <= k - 2 for w in p.t)
    item_iii = all(e(w, tm) + e(w, c.mask) <= k - 1 for w in p.t for c in odd)
    item_iv = all(e(w, tm) + e(w, even_mask) <= k - 2 for w in p.t)
    return BarrierReport(True, item_i, item_ii, item_iii, item_iv)
