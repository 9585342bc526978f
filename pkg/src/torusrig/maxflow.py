"""Small dense-core extraction via max-flow (project selection).

The selection problem: choose a vertex set S (containing ``force_in``,
avoiding ``force_out``) maximising  |E(G[S])| - 3|S \\ force_in|.  Each edge is
a unit-profit project requiring both endpoints; each optional vertex costs 3.
Solved by a min cut on the standard bipartite network; the minimal and maximal
optimal S are read off the residual graph.
"""

from __future__ import annotations

from collections import deque

INF = 1 << 30


class _Dinic:
    def __init__(self, n):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add(self, u, v, c):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s, t):
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for i in self.head[u]:
                    v = self.to[i]
                    if self.cap[i] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        q.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u, pushed):
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    i = self.head[u][it[u]]
                    v = self.to[i]
                    if self.cap[i] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[i]))
                        if got:
                            self.cap[i] -= got
                            self.cap[i ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, INF)
                if not pushed:
                    break
                flow += pushed

    def reachable_from(self, s):
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for i in self.head[u]:
                v = self.to[i]
                if self.cap[i] > 0 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return seen

    def coreachable_to(self, t):
        # nodes with a residual path to t
        seen = [False] * self.n
        seen[t] = True
        stack = [t]
        while stack:
            u = stack.pop()
            for i in self.head[u]:
                # reverse arc u<-v has capacity cap[i^1]
                v = self.to[i]
                if self.cap[i ^ 1] > 0 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return seen


def densest_extension(graph, force_in, force_out=()):
    """Maximise |E(G[S])| - 3|S| over force_in <= S, S disjoint from force_out.

    Returns (best value, minimal optimal S, maximal optimal S).  The optimal
    sets form a lattice, so the minimal and maximal optimisers are unique.
    """
    force_in = frozenset(force_in)
    force_out = frozenset(force_out)
    if force_in & force_out:
        raise ValueError("force_in and force_out overlap")
    cand_edges = [e for e in graph.sorted_edges()
                  if not (e[0] in force_out or e[1] in force_out)]
    verts = sorted(graph.vertices - force_out)
    vid = {v: i for i, v in enumerate(verts)}
    n = 2 + len(cand_edges) + len(verts)
    s, t = 0, 1
    net = _Dinic(n)
    e_node = lambda i: 2 + i
    v_node = lambda v: 2 + len(cand_edges) + vid[v]
    for i, (u, v) in enumerate(cand_edges):
        net.add(s, e_node(i), 1)
        net.add(e_node(i), v_node(u), INF)
        net.add(e_node(i), v_node(v), INF)
    for v in verts:
        net.add(v_node(v), t, 0 if v in force_in else 3)
    flow = net.maxflow(s, t)
    value = (len(cand_edges) - flow) - 3 * len(force_in)
    reach = net.reachable_from(s)
    coreach = net.coreachable_to(t)
    s_min = frozenset(v for v in verts if reach[v_node(v)]) | force_in
    s_max = frozenset(v for v in verts if not coreach[v_node(v)]) | force_in
    return value, s_min, s_max
