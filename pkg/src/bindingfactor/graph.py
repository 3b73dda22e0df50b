"""Immutable simple graphs over vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
queries and set algebra are word-parallel.  This module also holds the
graph6 reader/writer and the generators for the named graph families.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CapacityError",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "VertexSet",
    "all_bipartite_graphs",
    "all_split_graphs",
    "bipartition",
    "components",
    "count_edges_between",
    "generate",
    "lambda_k",
    "parse_family",
    "parse_graph6",
    "read_graph6_lines",
    "remove_edges",
    "split_partition",
    "write_graph6",
]


class CapacityError(ValueError):
    """An exhaustive routine was asked to go beyond its documented cap."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.reason = message
        self.offset = offset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A set of vertex labels backed by a bitmask.

    Iteration is always in ascending label order.  Ordinary iterables of
    ints are accepted wherever a VertexSet is expected.
    """

    __slots__ = ("mask",)

    def __init__(self, members: Iterable[int] = ()):
        mask = 0
        for v in members:
            if v < 0:
                raise ValueError(f"negative vertex label {v}")
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise ValueError("mask must be nonnegative")
        vs = cls.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and (self.mask >> v) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return self.mask == VertexSet(other).mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.mask))

    def __and__(self, other) -> "VertexSet":
        return VertexSet.from_mask(self.mask & as_mask(other))

    def __or__(self, other) -> "VertexSet":
        return VertexSet.from_mask(self.mask | as_mask(other))

    def __sub__(self, other) -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~as_mask(other))

    def __xor__(self, other) -> "VertexSet":
        return VertexSet.from_mask(self.mask ^ as_mask(other))

    def __le__(self, other) -> bool:
        return self.mask & ~as_mask(other) == 0

    def __ge__(self, other) -> bool:
        return as_mask(other) & ~self.mask == 0

    def issubset(self, other) -> bool:
        return self <= other

    def to_list(self) -> list[int]:
        return list(self)

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min() of empty VertexSet")
        return (self.mask & -self.mask).bit_length() - 1

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


def as_mask(s) -> int:
    """Bitmask of a VertexSet, int mask or iterable of labels."""
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return VertexSet(s).mask


def as_vertex_set(s) -> VertexSet:
    return s if isinstance(s, VertexSet) else VertexSet.from_mask(as_mask(s))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if not isinstance(self.adj, tuple):
            object.__setattr__(self, "adj", tuple(self.adj))
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if (a >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(a):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; only for masks produced by the enumerators
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.full_mask)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(a | (1 << v) == full for v, a in enumerate(self.adj))

    def is_connected(self) -> bool:
        return len(components(self, self.full_mask)) <= 1

    def edge_mask_in(self, vs) -> int:
        """Number of edges of the induced subgraph on ``vs``."""
        m = as_mask(vs)
        return sum((self.adj[v] & m).bit_count() for v in _bits(m)) // 2

    def without_vertex_edges(self, v: int) -> "Graph":
        """Same vertex set with every edge at ``v`` deleted (v isolated)."""
        bit = 1 << v
        adj = [a & ~bit for a in self.adj]
        adj[v] = 0
        return Graph(self.n, tuple(adj))

    def induced(self, vs) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled ``0..|vs|-1`` plus the old labels."""
        labels = list(_bits(as_mask(vs)))
        index = {old: new for new, old in enumerate(labels)}
        adj = []
        for old in labels:
            a = 0
            for u in _bits(self.adj[old]):
                if u in index:
                    a |= 1 << index[u]
            adj.append(a)
        return Graph(len(labels), tuple(adj)), labels


# --------------------------------------------------------------------------
# neighbourhood primitives


def lambda_k(g: Graph, s, k: int) -> VertexSet:
    """Vertices with at least ``k`` neighbours in ``s``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    m = as_mask(s)
    if m & ~g.full_mask:
        raise ValueError("vertex set is not a subset of V(G)")
    out = 0
    for v, a in enumerate(g.adj):
        if (a & m).bit_count() >= k:
            out |= 1 << v
    return VertexSet.from_mask(out)


def components(g: Graph, u) -> list[VertexSet]:
    """Connected components of ``G[u]``, sorted by smallest member."""
    remaining = as_mask(u)
    if remaining & ~g.full_mask:
        raise ValueError("vertex set is not a subset of V(G)")
    adj = g.adj
    out = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        out.append(VertexSet.from_mask(comp))
    return out


def count_edges_between(g: Graph, s, t) -> int:
    """e_G(s, t), counting each edge once even when s and t overlap."""
    sm, tm = as_mask(s), as_mask(t)
    ordered = sum((g.adj[a] & tm).bit_count() for a in _bits(sm))
    return ordered - g.edge_mask_in(sm & tm)


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not (adj[u] >> v) & 1:
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A 2-colouring ``(X, Y)`` with the smallest vertex of every component
    in X, or None if the graph has an odd cycle."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    x = VertexSet(v for v in range(g.n) if side[v] == 0)
    return x, g.vertices() - x


def is_independent(g: Graph, s) -> bool:
    m = as_mask(s)
    return all(g.adj[v] & m == 0 for v in _bits(m))


def is_clique(g: Graph, s) -> bool:
    m = as_mask(s)
    return all((g.adj[v] | (1 << v)) & m == m for v in _bits(m))


def split_partition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Split partition ``(X, Y)``, X independent and Y a clique, with |Y|
    as large as possible; None if ``g`` is not a split graph.

    Up to 10 vertices every clique candidate is tried (ties go to the
    smallest Y bitmask); above that the degree-sequence test is used and
    the resulting clique is extended by the one X vertex, if any, that
    sees all of Y.
    """
    n = g.n
    deg = g.degrees()
    if n <= 10:
        best = None
        for ymask in range(1 << n):
            size = ymask.bit_count()
            if best is not None and size < best.bit_count():
                continue
            if any(deg[v] < size - 1 for v in _bits(ymask)):
                continue
            xmask = g.full_mask & ~ymask
            if any(deg[v] > size for v in _bits(xmask)):
                continue
            if not is_clique(g, ymask) or not is_independent(g, xmask):
                continue
            if best is None or size > best.bit_count() or ymask < best:
                best = ymask
        if best is None:
            return None
        return VertexSet.from_mask(g.full_mask & ~best), VertexSet.from_mask(best)
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    m = max((i for i in range(1, n + 1) if deg[order[i - 1]] >= i - 1), default=0)
    y = VertexSet(order[:m])
    x = g.vertices() - y
    if not (is_clique(g, y) and is_independent(g, x)):
        return None
    for v in x:
        if g.adj[v] & y.mask == y.mask:
            x, y = x - {v}, y | {v}
            break
    return x, y


# --------------------------------------------------------------------------
# graph6


def _encode_n(n: int, long_form: bool) -> str:
    if n <= 62:
        return chr(n + 63)
    if not long_form:
        raise CapacityError(f"graph6 short form holds at most 62 vertices, got {n}")
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise CapacityError(f"graph6 cannot encode {n} vertices")


def write_graph6(g: Graph, long_form: bool = False) -> str:
    """Canonical graph6 text (no header, no newline)."""
    out = [_encode_n(g.n, long_form)]
    acc = nbits = 0
    for j in range(1, g.n):
        aj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((aj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, long_form: bool = False) -> Graph:
    data = text.rstrip("\r\n")
    base = 0
    if data.startswith(">>graph6<<"):
        base = 10
    for i in range(base, len(data)):
        if not 63 <= ord(data[i]) <= 126:
            raise Graph6Error(f"byte {data[i]!r} outside the graph6 range 63..126", i)
    if len(data) == base:
        raise Graph6Error("missing vertex-count header", base)
    pos = base
    if data[pos] != "~":
        n = ord(data[pos]) - 63
        pos += 1
    else:
        if not long_form:
            raise Graph6Error("long-form header (n >= 63) not enabled", pos)
        if len(data) > pos + 1 and data[pos + 1] == "~":
            raise Graph6Error("8-byte header (n > 258047) is not supported", pos)
        if len(data) < pos + 4:
            raise Graph6Error("truncated long-form header", len(data))
        n = 0
        for c in data[pos + 1 : pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        if n < 63:
            raise Graph6Error(f"long-form header used for n={n} < 63", pos)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} edge bytes, found {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after edge data", pos + need)
    pad = need * 6 - nbits
    if need and pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[b // 6]) - 63
            if (byte >> (5 - b % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str], long_form: bool = False) -> Iterator[Graph]:
    """Parse a graph6 stream; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line, long_form)
        except Graph6Error as exc:
            err = Graph6Error(f"line {lineno}: {exc.reason}", exc.offset)
            err.line = lineno
            raise err from None


# --------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with integer parameters (or two sub-specs for
    ``join`` and ``disjoint_union``)."""

    tag: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()

    def __str__(self) -> str:
        args = [str(p) for p in self.parts] + [str(p) for p in self.params]
        return f"{self.tag}({','.join(args)})" if args else self.tag


_ARITY = {
    "complete": 1,
    "empty": 1,
    "complete_bipartite": 2,
    "cycle": 1,
    "path": 1,
    "star": 1,
    "petersen": 0,
    "split_tight": 2,
    "andersen": 1,
    "katerinis_woodall": 2,
    "near_clique": 2,
}
_BINARY = ("join", "disjoint_union")


def parse_family(text: str) -> FamilySpec:
    """Parse ``name(args)`` or the shorthand ``name:p1,p2``.

    >>> parse_family("join(complete(3),empty(2))")
    FamilySpec(tag='join', params=(), parts=(FamilySpec(tag='complete', params=(3,), parts=()), FamilySpec(tag='empty', params=(2,), parts=())))
    """
    text = text.strip()
    m = re.fullmatch(r"([a-z_]+):([0-9,\s]*)", text)
    if m:
        params = tuple(int(p) for p in m.group(2).split(",") if p.strip())
        return _checked_spec(m.group(1), params, ())
    spec, rest = _parse_spec(text, 0)
    if rest != len(text):
        raise ValueError(f"unexpected text after family spec: {text[rest:]!r}")
    return spec


def _parse_spec(text: str, pos: int) -> tuple[FamilySpec, int]:
    m = re.compile(r"\s*([a-z_]+)\s*").match(text, pos)
    if not m:
        raise ValueError(f"expected a family name at position {pos} in {text!r}")
    tag, pos = m.group(1), m.end()
    if pos >= len(text) or text[pos] != "(":
        return _checked_spec(tag, (), ()), pos
    pos += 1
    params: list[int] = []
    parts: list[FamilySpec] = []
    while True:
        num = re.compile(r"\s*(-?\d+)\s*").match(text, pos)
        if num:
            params.append(int(num.group(1)))
            pos = num.end()
        elif text[pos : pos + 1] != ")":
            sub, pos = _parse_spec(text, pos)
            parts.append(sub)
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == ")":
            return _checked_spec(tag, tuple(params), tuple(parts)), pos + 1
        raise ValueError(f"malformed family spec {text!r}")


def _checked_spec(tag: str, params: tuple[int, ...], parts: tuple[FamilySpec, ...]) -> FamilySpec:
    if tag in _BINARY:
        if len(parts) != 2 or params:
            raise ValueError(f"{tag} takes exactly two family specs")
    elif tag in _ARITY:
        if parts or len(params) != _ARITY[tag]:
            raise ValueError(f"{tag} takes {_ARITY[tag]} integer parameter(s)")
    else:
        raise ValueError(f"unknown graph family {tag!r}")
    return FamilySpec(tag, params, parts)


def _join(a: Graph, b: Graph, connect: bool) -> Graph:
    n = a.n + b.n
    amask = (1 << a.n) - 1
    bmask = ((1 << b.n) - 1) << a.n
    adj = [x | (bmask if connect else 0) for x in a.adj]
    adj += [(x << a.n) | (amask if connect else 0) for x in b.adj]
    return Graph(n, tuple(adj))


def _complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def generate(spec: FamilySpec | str) -> Graph:
    """Build the graph named by ``spec``.

    Labelings (stable, so certificates are reproducible):

    * ``complete_bipartite(a,b)``: side A is ``0..a-1``, side B follows.
    * ``star(m)`` = ``complete_bipartite(1,m)``; the centre is 0.
    * ``cycle(n)``/``path(n)``: consecutive labels are adjacent.
    * ``petersen``: outer cycle 0..4, spokes ``i``-``i+5``, inner pentagram.
    * ``split_tight(n,k)``: independent side ``0..n/2``, clique
      ``n/2+1..n-1``, complete to each other.
    * ``andersen(r)``: the ``r+2`` triangles on ``0..3r+5``, then ``r``
      mutually non-adjacent vertices joined to every triangle vertex.
    * ``katerinis_woodall(r,k)``: clique ``K_{2l-2r}`` first, then ``l``
      disjoint edges, ``l = rk-1``, everything joined to the clique.
    * ``near_clique(n,d)``: ``K_{n-1}`` on ``0..n-2`` plus vertex ``n-1``
      adjacent to ``0..d-1``.
    * ``join``/``disjoint_union``: left operand first, right shifted.
    """
    if isinstance(spec, str):
        spec = parse_family(spec)
    tag, p = spec.tag, spec.params
    if tag in _BINARY:
        a, b = (generate(s) for s in spec.parts)
        return _join(a, b, tag == "join")
    _checked_spec(tag, p, spec.parts)
    if tag == "complete":
        _require(p[0] >= 0, "complete(n) needs n >= 0")
        return _complete(p[0])
    if tag == "empty":
        _require(p[0] >= 0, "empty(n) needs n >= 0")
        return Graph.empty(p[0])
    if tag == "complete_bipartite":
        _require(p[0] >= 0 and p[1] >= 0, "complete_bipartite(a,b) needs a, b >= 0")
        return _join(Graph.empty(p[0]), Graph.empty(p[1]), True)
    if tag == "star":
        _require(p[0] >= 0, "star(m) needs m >= 0")
        return _join(Graph.empty(1), Graph.empty(p[0]), True)
    if tag == "cycle":
        _require(p[0] >= 3, "cycle(n) needs n >= 3")
        return Graph.from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if tag == "path":
        _require(p[0] >= 0, "path(n) needs n >= 0")
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if tag == "petersen":
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, edges)
    if tag == "split_tight":
        n, k = p
        _require(k >= 1, "split_tight(n,k) needs k >= 1")
        _require(n % 2 == 0, "split_tight(n,k) needs n even")
        _require(n >= 2 * k + 2, "split_tight(n,k) needs n >= 2k+2")
        return _join(Graph.empty(n // 2 + 1), _complete(n // 2 - 1), True)
    if tag == "andersen":
        (r,) = p
        _require(r >= 1, "andersen(r) needs r >= 1")
        triangles = Graph.empty(0)
        for _ in range(r + 2):
            triangles = _join(triangles, _complete(3), False)
        return _join(triangles, Graph.empty(r), True)
    if tag == "katerinis_woodall":
        r, k = p
        _require(r >= 1 and k >= 2, "katerinis_woodall(r,k) needs r >= 1 and k >= 2")
        l = r * k - 1
        matching = Graph.empty(0)
        for _ in range(l):
            matching = _join(matching, _complete(2), False)
        return _join(_complete(2 * l - 2 * r), matching, True)
    if tag == "near_clique":
        n, d = p
        _require(n >= 2 and 0 <= d <= n - 1, "near_clique(n,d) needs n >= 2 and 0 <= d <= n-1")
        edges = list(itertools.combinations(range(n - 1), 2))
        edges += [(i, n - 1) for i in range(d)]
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown graph family {tag!r}")  # pragma: no cover


# --------------------------------------------------------------------------
# structured enumerations (complete up to relabelling inside one side)


def _multisets(values: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations_with_replacement(values, size)


def all_bipartite_graphs(a: int, b: int) -> Iterator[Graph]:
    """Every bipartite graph with sides ``X = 0..a-1``, ``Y = a..a+b-1``, up
    to permuting Y: the Y-neighbourhoods form a non-decreasing sequence of
    subsets of X."""
    for nbhds in _multisets(range(1 << a), b):
        adj = [0] * (a + b)
        for j, m in enumerate(nbhds):
            y = a + j
            adj[y] = m
            for x in _bits(m):
                adj[x] |= 1 << y
        yield Graph(a + b, tuple(adj))


def all_split_graphs(n: int) -> Iterator[Graph]:
    """Every split graph on ``n`` vertices up to isomorphism (with
    repetitions): clique on ``0..c-1``, independent vertices ``c..n-1`` whose
    clique-neighbourhoods form a non-decreasing sequence."""
    for c in range(n + 1):
        clique = (1 << c) - 1
        for nbhds in _multisets(range(1 << c), n - c):
            adj = [clique & ~(1 << v) for v in range(c)] + [0] * (n - c)
            for j, m in enumerate(nbhds):
                x = c + j
                adj[x] = m
                for y in _bits(m):
                    adj[y] |= 1 << x
            yield Graph(n, tuple(adj))
