"""Plain simple graphs and the freedom number.

Everything downstream (sparsity checks, rigidity ranks, certificates) works
on these immutable vertex/edge-set graphs; surface structure lives in
:mod:`torusrig.complexes` and projects down via ``.graph``.
"""

from __future__ import annotations

from . import errors


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalised unordered edge (u, v) with u < v."""
    if u == v:
        raise errors.LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """An immutable simple graph on integer vertex ids.

    Vertices need not be consecutive; isolated vertices are allowed (they
    matter for freedom-number bookkeeping).
    """

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices, edges):
        edges = frozenset(edge_key(u, v) for u, v in edges)
        vertices = frozenset(vertices)
        for u, v in edges:
            if u not in vertices or v not in vertices:
                raise errors.NonSimple(f"edge ({u},{v}) leaves the vertex set")
        self.vertices = vertices
        self.edges = edges
        adj: dict[int, set[int]] = {v: set() for v in vertices}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    # -- basic queries ------------------------------------------------

    def __contains__(self, edge) -> bool:
        return edge_key(*edge) in self.edges

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertex_set) -> "Graph":
        s = frozenset(vertex_set)
        return Graph(s, (e for e in self.edges if e[0] in s and e[1] in s))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = set()
        stack = [next(iter(self.vertices))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(self._adj[v] - seen)
        return len(seen) == len(self.vertices)

    # -- moves on abstract graphs --------------------------------------

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Merge v into u (simple-graph contraction, parallel edges coalesce)."""
        if edge_key(u, v) not in self.edges:
            raise errors.NotAnEdge(f"({u},{v})")
        vertices = self.vertices - {v}
        edges = set()
        for a, b in self.edges:
            a = u if a == v else a
            b = u if b == v else b
            if a != b:
                edges.add(edge_key(a, b))
        return Graph(vertices, edges)

    def split_vertex(self, v1: int, v2: int, v3: int, moved_edges,
                     new_vertex: int | None = None) -> tuple["Graph", int]:
        """Vertex split at v1 with anchor neighbours v2, v3.

        A new vertex v0 is joined to v1, v2, v3, and each edge v1--t in
        ``moved_edges`` is replaced by v0--t.  Returns (graph, v0).
        """
        if v2 not in self._adj[v1] or v3 not in self._adj[v1] or v2 == v3:
            raise errors.InvalidAnchors(f"{v2}, {v3} must be distinct neighbours of {v1}")
        moved = set()
        for e in moved_edges:
            e = edge_key(*e)
            if e not in self.edges or v1 not in e:
                raise errors.NotAnEdge(f"{e} is not an edge at {v1}")
            t = e[0] if e[1] == v1 else e[1]
            if t in (v2, v3):
                raise errors.InvalidAnchors("anchor edges cannot be moved")
            moved.add(t)
        v0 = new_vertex if new_vertex is not None else max(self.vertices) + 1
        if v0 in self.vertices:
            raise errors.NonSimple(f"vertex id {v0} already in use")
        edges = set(self.edges)
        for t in moved:
            edges.remove(edge_key(v1, t))
            edges.add(edge_key(v0, t))
        edges.update({edge_key(v0, v1), edge_key(v0, v2), edge_key(v0, v3)})
        return Graph(self.vertices | {v0}, edges), v0


def freedom(obj) -> int:
    """Freedom number 3|V| - |E| of a graph-like object."""
    g = as_graph(obj)
    return 3 * len(g.vertices) - len(g.edges)


def as_graph(obj) -> Graph:
    """Coerce a Graph, surface complex, or torus-with-hole to a Graph."""
    if isinstance(obj, Graph):
        return obj
    g = getattr(obj, "graph", None)
    if isinstance(g, Graph):
        return g
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def complete_graph(n: int) -> Graph:
    vs = range(n)
    return Graph(vs, [(i, j) for i in vs for j in vs if i < j])


def double_banana() -> Graph:
    """Two copies of K5 minus an edge glued at the missing-edge pair.

    The standard 8-vertex graph that meets the Maxwell count yet is flexible;
    vertices 3 and 4 form the hinge.
    """
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
             (0, 4), (1, 4), (2, 4),
             (5, 6), (5, 7), (6, 7), (3, 5), (3, 6), (3, 7),
             (4, 5), (4, 6), (4, 7)]
    return Graph(range(8), edges)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test, meant for small graphs (|V| <= ~12)."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    d1 = sorted(g1.degree(v) for v in g1.vertices)
    d2 = sorted(g2.degree(v) for v in g2.vertices)
    if d1 != d2:
        return False
    # order g1's vertices to keep the search tree connected where possible
    vs1 = sorted(g1.vertices, key=lambda v: -g1.degree(v))
    vs2 = sorted(g2.vertices)

    def extend(mapping, used):
        if len(mapping) == len(vs1):
            return True
        v = vs1[len(mapping)]
        for w in vs2:
            if w in used or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for pv, pw in mapping.items():
                if (pv in g1.neighbors(v)) != (pw in g2.neighbors(w)):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(mapping, used):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend({}, set())
