"""Dinic maximum flow on integer capacities."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network with residual arcs stored in paired slots ``e``, ``e ^ 1``."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        e = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.head[u].append(e)
        self.to.append(u)
        self.cap.append(rev_cap)
        self.head[v].append(e + 1)
        return e

    def _levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        to, cap, head = self.to, self.cap, self.head
        while q:
            u = q.popleft()
            for e in head[u]:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level

    def _augment(self, s: int, t: int, level: list[int], it: list[int], bound: int | None) -> int:
        to, cap, head = self.to, self.cap, self.head
        stack = [s]
        path: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                f = min(cap[e] for e in path)
                if bound is not None:
                    f = min(f, bound)
                for e in path:
                    cap[e] -= f
                    cap[e ^ 1] += f
                return f
            arcs = head[u]
            while it[u] < len(arcs):
                e = arcs[it[u]]
                v = to[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    stack.append(v)
                    path.append(e)
                    break
                it[u] += 1
            else:
                level[u] = -1
                stack.pop()
                if path:
                    path.pop()
                    it[stack[-1]] += 1
        return 0

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        """Push flow from ``s`` to ``t``; stop early once ``limit`` is reached."""
        flow = 0
        while limit is None or flow < limit:
            level = self._levels(s, t)
            if level[t] < 0:
                break
            it = [0] * self.n
            while limit is None or flow < limit:
                pushed = self._augment(s, t, level, it, None if limit is None else limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow

    def reachable(self, s: int) -> set[int]:
        """Nodes reachable from ``s`` in the residual network (minimal source side)."""
        seen = {s}
        stack = [s]
        to, cap, head = self.to, self.cap, self.head
        while stack:
            u = stack.pop()
            for e in head[u]:
                v = to[e]
                if cap[e] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    def reaching(self, t: int) -> set[int]:
        """Nodes that can still reach ``t`` in the residual network."""
        seen = {t}
        stack = [t]
        to, cap, head = self.to, self.cap, self.head
        while stack:
            u = stack.pop()
            for e in head[u]:
                # arc e goes u -> to[e]; its partner e ^ 1 goes to[e] -> u
                v = to[e]
                if cap[e ^ 1] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen
