"""(3,6)-sparsity and tightness decisions with violation certificates.

A graph is (3,6)-sparse when every subgraph on at least three vertices has
freedom number >= 6, and (3,6)-tight when additionally f(G) = 6.  The fast
path runs one min-cut per edge: over vertex sets S containing that edge's
endpoints it maximises |E(G[S])| - 3|S|, and any set of three or more vertices
pushing the maximum above -6 is a violation witness.  A subset-enumeration
oracle cross-validates the flow path on small graphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import errors
from .graphs import Graph, as_graph, freedom
from .maxflow import densest_extension

BRUTE_FORCE_CAP = 16


class Status(enum.Enum):
    TIGHT = "Tight"
    SPARSE_NOT_TIGHT = "SparseNotTight"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class SparsityVerdict:
    status: Status
    witness: frozenset | None = None

    @property
    def is_tight(self) -> bool:
        return self.status is Status.TIGHT

    @property
    def is_sparse(self) -> bool:
        return self.status is not Status.VIOLATION

    def to_json(self) -> dict:
        return {"status": self.status.value,
                "witness": sorted(self.witness) if self.witness else None}


def _sparse_verdict(g: Graph) -> SparsityVerdict:
    status = Status.TIGHT if freedom(g) == 6 else Status.SPARSE_NOT_TIGHT
    return SparsityVerdict(status)


def _violation_through(g: Graph, u: int, v: int) -> frozenset | None:
    """A violating vertex set containing edge uv, or None.

    The trivial optimum S = {u, v} scores -5, so a score of -4 or better
    proves a violation outright; at exactly -5 the maximal optimiser decides
    whether a three-or-more-vertex optimiser exists.
    """
    value, s_min, s_max = densest_extension(g, (u, v))
    if value >= -4:
        return s_min
    if value == -5:
        if len(s_min) >= 3:
            return s_min
        if len(s_max) >= 3:
            return s_max
    return None


def check_3_6(graph, through_vertex: int | None = None) -> SparsityVerdict:
    """Decide (3,6)-sparsity/tightness, with a violating-set certificate.

    ``through_vertex`` restricts the search to violations containing that
    vertex; this is exact after an edge contraction, since any new violating
    set must contain the merged vertex (all other induced subgraphs are
    unchanged).
    """
    g = as_graph(graph)
    if len(g.vertices) < 3:
        raise errors.TooFewVertices("(3,6)-sparsity needs at least 3 vertices")
    if through_vertex is None:
        edge_iter = g.sorted_edges()
    else:
        edge_iter = sorted(e for e in g.edges if through_vertex in e)
    for u, v in edge_iter:
        witness = _violation_through(g, u, v)
        if witness is not None:
            return SparsityVerdict(Status.VIOLATION, witness)
    return _sparse_verdict(g)


def brute_force_3_6(graph) -> SparsityVerdict:
    """Exhaustive reference oracle over all vertex subsets of size >= 3."""
    g = as_graph(graph)
    n = len(g.vertices)
    if n < 3:
        raise errors.TooFewVertices("(3,6)-sparsity needs at least 3 vertices")
    if n > BRUTE_FORCE_CAP:
        raise errors.TooLarge(f"{n} vertices exceeds the cap of {BRUTE_FORCE_CAP}")
    verts = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    masks = [0] * n
    for u, v in g.edges:
        masks[pos[u]] |= 1 << pos[v]
        masks[pos[v]] |= 1 << pos[u]
    best: tuple[int, frozenset] | None = None
    for subset in range(1, 1 << n):
        size = subset.bit_count()
        if size < 3:
            continue
        m = 0
        rest = subset
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            m += (masks[i] & subset).bit_count()
            rest ^= low
        m //= 2
        excess = m - (3 * size - 6)
        if excess > 0 and (best is None or excess > best[0]):
            best = (excess, frozenset(verts[i] for i in range(n) if subset >> i & 1))
    if best is not None:
        return SparsityVerdict(Status.VIOLATION, best[1])
    return _sparse_verdict(g)


def maximal_tight_subgraph(graph, core, exclude=()) -> frozenset | None:
    """The unique maximal S with f(G[S]) = 6 containing ``core``, avoiding
    ``exclude``; None when every such extension is denser than tight allows
    or the core cannot reach freedom 6.

    Only meaningful on sparse graphs, where tight vertex sets through a common
    tight core are closed under union.
    """
    g = as_graph(graph)
    value, _s_min, s_max = densest_extension(g, core, exclude)
    if value != -6:
        return None
    return s_max


def is_in_T(hole) -> bool:
    """Membership in the class of (3,6)-tight single-hole torus graphs."""
    if len(hole.discs) != 1:
        return False
    return check_3_6(hole.graph).is_tight
