"""Exact k-th binding numbers and their relatives.

All values are :class:`fractions.Fraction`; nothing here touches floating
point.  ``beta_k(g, 1)`` and :func:`bind_classical` minimise over the same
domain, so the first binding number is Woodall's binding number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .graph import Graph, VertexSet, as_mask, is_independent

__all__ = [
    "BindingValue",
    "Outcome",
    "beta_k",
    "beta_k_bipartite",
    "beta_k_many",
    "beta_k_reference",
    "bind_bipartite",
    "bind_classical",
]

MAX_ENUMERATION_N = 62


class Outcome(enum.Enum):
    VALUE = "value"
    DEFINED_ZERO = "defined_zero"
    NO_FEASIBLE_SET = "no_feasible_set"


@dataclass(frozen=True)
class BindingValue:
    outcome: Outcome
    value: Fraction | None = None
    witness: VertexSet | None = None
    feasible_count: int = 0

    @property
    def numeric(self) -> Fraction | None:
        """The value as a rational; DEFINED_ZERO counts as 0 and
        NO_FEASIBLE_SET as None."""
        if self.outcome is Outcome.DEFINED_ZERO:
            return Fraction(0)
        return self.value

    @property
    def is_defined_zero(self) -> bool:
        return self.outcome is Outcome.DEFINED_ZERO


def _adj_array(g: Graph) -> np.ndarray:
    if g.n > MAX_ENUMERATION_N:
        raise ValueError(f"subset enumeration supports at most {MAX_ENUMERATION_N} vertices")
    return np.array(g.adj, dtype=np.int64) if g.n else np.zeros(1, np.int64)


def _min_ratio(g: Graph, k: int, universe: int, min_size: int, excluded_count: int) -> BindingValue:
    status, p, q, w, feasible = _kernels.min_ratio(
        _adj_array(g), g.n, k, np.int64(universe), min_size, excluded_count
    )
    if status == _kernels.EMPTY:
        return BindingValue(Outcome.NO_FEASIBLE_SET, feasible_count=int(feasible))
    return BindingValue(Outcome.VALUE, Fraction(int(p), int(q)), VertexSet.from_mask(int(w)), int(feasible))


def beta_k(g: Graph, k: int) -> BindingValue:
    """k-th binding number: min |Lambda^k(S)|/|S| over |S| >= k with
    Lambda^k(S) != V.  The witness is the minimiser with the smallest
    bitmask.  Graphs with fewer than k vertices get DEFINED_ZERO."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n < k:
        return BindingValue(Outcome.DEFINED_ZERO)
    return _min_ratio(g, k, g.full_mask, k, g.n)


def beta_k_reference(g: Graph, k: int) -> BindingValue:
    """Straight two-loop evaluation of the definition (oracle for beta_k)."""
    if g.n < k:
        return BindingValue(Outcome.DEFINED_ZERO)
    best = best_s = None
    feasible = 0
    for s in range(1 << g.n):
        size = s.bit_count()
        if size < k:
            continue
        lam = sum(1 for v in range(g.n) if (g.adj[v] & s).bit_count() >= k)
        if lam == g.n:
            continue
        feasible += 1
        r = Fraction(lam, size)
        if best is None or r < best:
            best, best_s = r, s
    return BindingValue(Outcome.VALUE, best, VertexSet.from_mask(best_s), feasible)


def beta_k_many(masks: np.ndarray, n: int, k: int) -> np.ndarray:
    """Vectorised ``beta_k`` over rows of adjacency masks.

    Returns an ``(rows, 2)`` int64 array of (numerator, denominator), not
    reduced; a zero denominator encodes DEFINED_ZERO.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    return _kernels.beta_many(np.ascontiguousarray(masks, dtype=np.int64), n, k)


def beta_k_bipartite(g: Graph, x, k: int) -> BindingValue:
    """Weak bipartite k-th binding number beta^k(G, X): min over S within X
    with |S| >= k, no restriction on Lambda^k(S)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    xm = as_mask(x)
    if xm & ~g.full_mask:
        raise ValueError("X is not a subset of V(G)")
    if not is_independent(g, xm):
        raise ValueError("X is not an independent set")
    if xm.bit_count() < k:
        return BindingValue(Outcome.DEFINED_ZERO)
    return _min_ratio(g, k, xm, k, -1)


def bind_classical(g: Graph) -> BindingValue:
    """Woodall's binding number (min over nonempty S with N(S) != V)."""
    if g.n == 0:
        return BindingValue(Outcome.NO_FEASIBLE_SET)
    return _min_ratio(g, 1, g.full_mask, 1, g.n)


def bind_bipartite(g: Graph, x, y) -> BindingValue:
    """bind'(G) for the bipartition (X, Y); min(|X|, |Y|) when G is
    complete bipartite (no witness in that case)."""
    xm, ym = as_mask(x), as_mask(y)
    if xm & ym or xm | ym != g.full_mask:
        raise ValueError("X and Y must partition V(G)")
    if not xm or not ym:
        raise ValueError("both sides of the bipartition must be nonempty")
    if not (is_independent(g, xm) and is_independent(g, ym)):
        raise ValueError("(X, Y) is not a bipartition of the graph")
    nx_, ny = xm.bit_count(), ym.bit_count()
    if g.num_edges() == nx_ * ny:
        return BindingValue(Outcome.VALUE, Fraction(min(nx_, ny)))
    left = _min_ratio(g, 1, xm, 1, ny)
    right = _min_ratio(g, 1, ym, 1, nx_)
    feasible = left.feasible_count + right.feasible_count
    options = [b for b in (left, right) if b.outcome is Outcome.VALUE]
    if not options:
        return BindingValue(Outcome.NO_FEASIBLE_SET, feasible_count=feasible)
    best = min(options, key=lambda b: (b.value, b.witness.mask))
    return BindingValue(Outcome.VALUE, best.value, best.witness, feasible)
