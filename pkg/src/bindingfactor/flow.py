"""Integral maximum flow (Dinic) on small networks."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, size: int):
        self.size = size
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v; returns its index (the reverse arc is index ^ 1)."""
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.head[u].append(idx)
        self.head[v].append(idx + 1)
        return idx

    def flow_on(self, idx: int) -> int:
        return self.cap[idx ^ 1]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in self.head[v]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[v] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        """Push flow from s to t, stopping early once ``limit`` is reached."""
        total = 0
        while limit is None or total < limit:
            level = self._levels(s, t)
            if level is None:
                break
            it = [0] * self.size
            while limit is None or total < limit:
                pushed = self._augment(s, t, level, it, limit - total if limit is not None else None)
                if not pushed:
                    break
                total += pushed
        return total

    def _augment(self, s, t, level, it, want):
        # iterative DFS along the level graph
        path: list[int] = []
        v = s
        while True:
            if v == t:
                amount = min(self.cap[e] for e in path)
                if want is not None:
                    amount = min(amount, want)
                for e in path:
                    self.cap[e] -= amount
                    self.cap[e ^ 1] += amount
                return amount
            edges = self.head[v]
            while it[v] < len(edges):
                e = edges[it[v]]
                w = self.to[e]
                if self.cap[e] > 0 and level[w] == level[v] + 1:
                    break
                it[v] += 1
            if it[v] == len(edges):
                if not path:
                    return 0
                level[v] = -1
                e = path.pop()
                v = self.to[e ^ 1]
                it[v] += 1
                continue
            e = edges[it[v]]
            path.append(e)
            v = self.to[e]

    def reachable(self, s: int) -> set[int]:
        """Nodes reachable from s in the residual network."""
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for e in self.head[v]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    stack.append(self.to[e])
        return seen
