"""First-homology bookkeeping for walks and crossover edges on a grid torus.

The two identification seams of a rectangular torus define an integer
cochain: an edge picks up (1,0) when it crosses the vertical seam in the
positive direction and (0,1) across the horizontal seam.  Summing along a
closed walk gives its class in H_1 = Z^2; face boundaries sum to zero.
Crossover edges (FF edges with both endpoints on the hole boundary) are
classed by the cycles they form with boundary-graph paths, recorded up to
sign.
"""

from __future__ import annotations

from . import errors
from .complexes import ClosedWalk, TorusComplex, TorusWithHole
from .graphs import edge_key


class EdgeCochain:
    """Seam-crossing vector of each directed edge of a rectangular torus."""

    def __init__(self, torus: TorusComplex):
        if torus.provenance is None:
            raise errors.NoProvenance(
                "homology cochain needs rectangular-grid provenance")
        self.torus = torus
        self.r = torus.provenance.r
        self.s = torus.provenance.s

    def value(self, tail: int, head: int) -> tuple[int, int]:
        """Class contribution of traversing the edge tail -> head."""
        r, s = self.r, self.s
        i1, j1 = divmod(tail, s)
        i2, j2 = divmod(head, s)
        di = (i2 - i1) % r
        dj = (j2 - j1) % s
        # grid steps move one unit in each coordinate at most (r, s >= 3
        # makes the direction unambiguous)
        if di == r - 1:
            a = -1 if i2 == r - 1 else 0
        elif di == 1:
            a = 1 if i1 == r - 1 else 0
        elif di == 0:
            a = 0
        else:
            raise errors.UnknownEdge(f"({tail},{head}) is not a grid edge")
        if dj == s - 1:
            b = -1 if j2 == s - 1 else 0
        elif dj == 1:
            b = 1 if j1 == s - 1 else 0
        elif dj == 0:
            b = 0
        else:
            raise errors.UnknownEdge(f"({tail},{head}) is not a grid edge")
        if di == 0 and dj == 0:
            raise errors.UnknownEdge("degenerate edge")
        return (a, b)

    def face_sum(self, face) -> tuple[int, int]:
        a, b, c = face
        vals = [self.value(a, b), self.value(b, c), self.value(c, a)]
        return (sum(v[0] for v in vals), sum(v[1] for v in vals))


def standard_cochain(torus: TorusComplex) -> EdgeCochain:
    """The seam cochain of a rectangular torus; closed on every face."""
    return EdgeCochain(torus)


def walk_class(cochain: EdgeCochain, walk: ClosedWalk) -> tuple[int, int]:
    """Sum of cochain values along the walk's traversal directions."""
    a = b = 0
    for tail, head in walk.directed_edges():
        da, db = cochain.value(tail, head)
        a += da
        b += db
    return (a, b)


def canonical_class(vec: tuple[int, int]) -> tuple[int, int]:
    """Representative of the unordered pair {v, -v}: first nonzero positive."""
    a, b = vec
    if a < 0 or (a == 0 and b < 0):
        return (-a, -b)
    return (a, b)


def _boundary_paths(hole: TorusWithHole, start: int, goal: int):
    """Simple paths from start to goal in the boundary graph."""
    adj: dict[int, set[int]] = {}
    for u, v in hole.boundary_edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if start not in adj or goal not in adj:
        return
    path = [start]
    seen = {start}

    def walk_on():
        here = path[-1]
        if here == goal and len(path) > 1:
            yield list(path)
            return
        if here == goal:
            yield list(path)
        for nxt in sorted(adj[here]):
            if nxt in seen:
                continue
            seen.add(nxt)
            path.append(nxt)
            yield from walk_on()
            path.pop()
            seen.remove(nxt)

    yield from walk_on()


def crossover_class(hole: TorusWithHole, e) -> frozenset:
    """Canonical classes of all cycles through a crossover edge.

    A crossover edge is an FF edge with both endpoints on the boundary graph;
    its cycles close up through simple boundary paths between the endpoints.
    The trivial class cannot occur on tight inputs: it would exhibit a hole
    boundary shorter than nine.
    """
    cochain = standard_cochain(hole.torus)
    u, v = edge_key(*e)
    if not hole.is_ff_edge((u, v)):
        raise errors.NotACrossover(f"({u},{v}) is not an FF edge")
    on_boundary = {w for be in hole.boundary_edges for w in be}
    if u not in on_boundary or v not in on_boundary:
        raise errors.NotACrossover(f"({u},{v}) endpoints are not on the boundary graph")
    classes = set()
    base = cochain.value(u, v)
    for path in _boundary_paths(hole, v, u):
        a, b = base
        for x, y in zip(path, path[1:]):
            da, db = cochain.value(x, y)
            a += da
            b += db
        classes.add(canonical_class((a, b)))
    if (0, 0) in classes:
        raise errors.TrivialClassFound(
            f"crossover edge ({u},{v}) has a null-homologous cycle")
    return frozenset(classes)
