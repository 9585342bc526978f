"""The move calculus on tight single-hole torus graphs.

Contraction of a contractible FF edge either stays tight or the edge lies on
a critical separating cycle (the boundary of an enlargement of the hole disc
whose complementary graph is tight).  A critical cycle supports a fission
move substituting the matching catalog graph for the complement.  Greedy
contraction always terminates at one of the two uncontractible graphs, and
reversing the contraction sequence yields a vertex-splitting construction
certificate rooted at K3.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from . import catalog, errors
from .complexes import (ClosedWalk, DiscMap, TorusComplex, TorusWithHole,
                        _face_edges, _fully_glued_chi, retriangulate_holes)
from .graphs import Graph, complete_graph, edge_key, freedom, is_isomorphic
from .maxflow import densest_extension
from .rigidity import generic_rank
from .sparsity import check_3_6, maximal_tight_subgraph


class EdgeClass(enum.Enum):
    BOUNDARY_INCIDENT_FACE = "BoundaryIncidentFace"
    FF_CONTRACTIBLE = "FFContractible"
    FF_BLOCKED = "FFBlocked"


def _apexes(hole: TorusWithHole, e) -> tuple[int, int]:
    """Third corners of the two retained faces containing an FF edge."""
    u, v = e
    fs = hole.edge_retained_faces[e]
    out = []
    for i in fs:
        out.append(next(x for x in hole.torus.faces[i] if x not in (u, v)))
    return tuple(out)


def classify_edge(hole: TorusWithHole, e) -> EdgeClass:
    """FF iff the edge lies in two retained faces; blocked iff additionally
    some common neighbour closes a nonfacial 3-cycle."""
    e = edge_key(*e)
    if e not in hole.graph.edges:
        raise errors.UnknownEdge(f"{e} is not an edge of the graph")
    fs = hole.edge_retained_faces[e]
    if len(fs) < 2:
        return EdgeClass.BOUNDARY_INCIDENT_FACE
    u, v = e
    common = hole.graph.neighbors(u) & hole.graph.neighbors(v)
    if common - set(_apexes(hole, e)):
        return EdgeClass.FF_BLOCKED
    return EdgeClass.FF_CONTRACTIBLE


def contractible_edges(hole: TorusWithHole) -> list[tuple[int, int]]:
    return [e for e in hole.graph.sorted_edges()
            if classify_edge(hole, e) is EdgeClass.FF_CONTRACTIBLE]


def is_uncontractible(hole: TorusWithHole) -> bool:
    """True iff every FF edge lies on a nonfacial 3-cycle."""
    return not contractible_edges(hole)


def contract(hole: TorusWithHole, e) -> TorusWithHole:
    """Contract a contractible FF edge; the higher id merges into the lower.

    The two faces at the edge collapse and the torus is contracted alongside.
    When the old torus degenerates (a nonfacial torus 3-cycle through deleted
    edges turns into a parallel edge) the hole discs are replaced by fresh
    triangulations over the same boundary walks, which leaves the graph and
    its facial structure untouched.
    """
    e = edge_key(*e)
    if classify_edge(hole, e) is not EdgeClass.FF_CONTRACTIBLE:
        raise errors.NotContractible(f"{e} is not a contractible FF edge")
    keep, gone = e
    torus = hole.torus
    collapsed = set(hole.edge_retained_faces[e])

    def rename(x):
        return keep if x == gone else x

    new_faces = [tuple(rename(x) for x in f)
                 for i, f in enumerate(torus.faces) if i not in collapsed]
    try:
        torus2 = TorusComplex(new_faces)
        discs2 = []
        for d in hole.discs:
            faces2 = [torus2.face_index(tuple(rename(x) for x in torus.faces[i]))
                      for i in d.faces]
            keep2 = [edge_key(rename(a), rename(b)) for a, b in d.keep_edges]
            discs2.append(DiscMap(torus2, faces2, keep_edges=keep2))
        return TorusWithHole(torus2, discs2)
    except errors.TorusRigError:
        pass
    retained2 = [tuple(rename(x) for x in torus.faces[i])
                 for i in hole.face_indices if i not in collapsed]
    walks2 = []
    for d in hole.discs:
        walks2.append(ClosedWalk(tuple(rename(x) for x in d.boundary_walk.vertices)))
    try:
        return retriangulate_holes(retained2, walks2)
    except errors.TorusRigError as exc:
        raise errors.NotContractible(
            f"contracting {e} breaks the hole structure: {exc}") from exc


def vertex_split(g, v1: int, v2: int, v3: int, moved_edges,
                 new_vertex: int | None = None):
    """Split v1 with anchor neighbours v2, v3, moving ``moved_edges`` to the
    new vertex.

    On a plain Graph this is the abstract move.  On a TorusWithHole the split
    is performed on the containing torus when v2, v3 cut the facial star of v1
    into arcs and the moved edges are exactly the graph edges of one open arc;
    otherwise the abstract graph of the split is returned.
    """
    if isinstance(g, Graph):
        out, _ = g.split_vertex(v1, v2, v3, moved_edges, new_vertex=new_vertex)
        return out
    if not isinstance(g, TorusWithHole):
        raise TypeError(f"cannot split a {type(g).__name__}")
    try:
        return _facial_split(g, v1, v2, v3, moved_edges, new_vertex)
    except errors.TorusRigError:
        out, _ = g.graph.split_vertex(v1, v2, v3, moved_edges, new_vertex=new_vertex)
        return out


def _link_cycle(torus: TorusComplex, z: int) -> list[int]:
    """Neighbours of z in cyclic facial order around z."""
    nbrs: dict[int, set[int]] = {}
    for f in torus.faces:
        if z in f:
            a, b = (x for x in f if x != z)
            nbrs.setdefault(a, set()).add(b)
            nbrs.setdefault(b, set()).add(a)
    start = min(nbrs)
    cyc = [start]
    prev = None
    while True:
        step = sorted(nbrs[cyc[-1]] - ({prev} if prev is not None else set()))
        if not step:
            raise errors.NotClosedSurface(f"star of {z} does not close up")
        prev = cyc[-1]
        cyc.append(step[0])
        if cyc[-1] == start:
            return cyc[:-1]
        if len(cyc) > len(nbrs) + 1:
            raise errors.NotClosedSurface(f"star of {z} does not close up")


def _facial_split(hole: TorusWithHole, v1, v2, v3, moved_edges, new_vertex):
    torus = hole.torus
    if v1 not in torus.vertices:
        raise errors.InvalidAnchors(f"{v1} is not a torus vertex")
    cyc = _link_cycle(torus, v1)
    if v2 not in cyc or v3 not in cyc or v2 == v3:
        raise errors.InvalidAnchors(f"{v2}, {v3} must be facial neighbours of {v1}")
    i, j = cyc.index(v2), cyc.index(v3)
    if i > j:
        i, j = j, i
    arcs = (set(cyc[i + 1:j]), set(cyc[j + 1:] + cyc[:i]))
    moved_targets = set()
    for m in moved_edges:
        m = edge_key(*m)
        if v1 not in m:
            raise errors.NotAnEdge(f"{m} is not an edge at {v1}")
        moved_targets.add(m[0] if m[1] == v1 else m[1])
    k = len(cyc)
    graph_arc0 = {t for t in arcs[0] if edge_key(v1, t) in hole.graph.edges}
    graph_arc1 = {t for t in arcs[1] if edge_key(v1, t) in hole.graph.edges}
    # faces correspond to consecutive link pairs; the moved arc's faces follow
    # the new vertex
    if moved_targets == graph_arc0:
        lo, hi = i, j
    elif moved_targets == graph_arc1:
        lo, hi = j, i + k
    else:
        raise errors.InvalidAnchors("moved edges are not an anchor-to-anchor arc")
    moved_pairs = {frozenset((cyc[t % k], cyc[(t + 1) % k]))
                   for t in range(lo, hi)}
    v0 = new_vertex if new_vertex is not None else max(torus.vertices) + 1
    if v0 in torus.vertices:
        raise errors.NonSimple(f"vertex id {v0} already in use")

    def rename(f):
        return tuple(v0 if x == v1 else x for x in f)

    new_faces = []
    for f in torus.faces:
        if v1 in f and frozenset(x for x in f if x != v1) in moved_pairs:
            new_faces.append(rename(f))
        else:
            new_faces.append(f)
    new_faces.append((v1, v0, cyc[i % k]))
    new_faces.append((v1, v0, cyc[j % k]))
    torus2 = TorusComplex(new_faces)
    discs2 = []
    for d in hole.discs:
        faces2 = []
        for fi in d.faces:
            f = torus.faces[fi]
            try:
                faces2.append(torus2.face_index(f))
            except KeyError:
                faces2.append(torus2.face_index(rename(f)))
        keep2 = []
        for a, b in d.keep_edges:
            if edge_key(a, b) in torus2.edges:
                keep2.append((a, b))
            else:
                keep2.append(edge_key(v0 if a == v1 else a, v0 if b == v1 else b))
        discs2.append(DiscMap(torus2, faces2, keep_edges=keep2))
    return TorusWithHole(torus2, discs2)


# -- separating cycles and division ----------------------------------------


@dataclass(frozen=True)
class SeparatingCycle:
    """Boundary of an enlargement D1 of the hole disc, as walk plus disc."""
    walk: ClosedWalk
    disc: DiscMap

    def region(self) -> frozenset:
        return frozenset(self.disc.faces)


def separating_cycle(hole: TorusWithHole, region_faces, keep_edges=None) -> SeparatingCycle:
    """Validate an enlarged-disc region into a separating cycle.

    The region must contain every hole face and its disc structure must keep
    deleting everything the hole deletes.
    """
    disc_of_hole = hole.single_disc
    region = frozenset(region_faces)
    if not set(disc_of_hole.faces) <= region:
        raise errors.InvalidCycle("region does not contain the hole disc")
    torus = hole.torus
    if keep_edges is not None:
        d1 = DiscMap(torus, region, keep_edges=keep_edges)
    else:
        d1 = _infer_enlargement(hole, region)
    if not hole.deleted_edges <= d1.interior_edges:
        raise errors.InvalidCycle("enlargement stops deleting a hole-interior edge")
    return SeparatingCycle(d1.boundary_walk, d1)


def _enlargement_keep_count(torus, region) -> int | None:
    """Number of exposed edges a length-9 boundary forces on this region."""
    shared = sum(1 for e, fs in torus.edge_faces.items()
                 if fs[0] in region and fs[1] in region)
    twok = 9 - 3 * len(region) + 2 * shared
    if twok < 0 or twok % 2 or twok // 2 > 3:
        return None
    return twok // 2


def _iter_enlargement_discs(hole: TorusWithHole, region):
    """Valid disc structures on a region, nine-edge boundaries only."""
    torus = hole.torus
    region = frozenset(region)
    k = _enlargement_keep_count(torus, region)
    if k is None:
        return
    if _fully_glued_chi(torus, set(region)) + k < 1:
        return
    if k == 0:
        candidates = [()]
    else:
        shared = sorted(e for e, fs in torus.edge_faces.items()
                        if fs[0] in region and fs[1] in region)
        allowed = [e for e in shared if e not in hole.deleted_edges]
        candidates = itertools.combinations(allowed, k)
    for keep in candidates:
        try:
            d1 = DiscMap(torus, region, keep_edges=keep)
        except errors.TorusRigError:
            continue
        if d1.boundary_length() != 9:
            continue
        if not hole.deleted_edges <= d1.interior_edges:
            continue
        yield d1


def _infer_enlargement(hole: TorusWithHole, region) -> DiscMap:
    """First disc structure on the region whose deletions cover the hole's.

    Any boundary length is allowed here; the criticality search separately
    restricts to nine-edge boundaries.
    """
    torus = hole.torus
    region = frozenset(region)
    try:
        d1 = DiscMap(torus, region)
        if hole.deleted_edges <= d1.interior_edges:
            return d1
    except errors.TorusRigError:
        pass
    chi0 = _fully_glued_chi(torus, set(region))
    shared = sorted(e for e, fs in torus.edge_faces.items()
                    if fs[0] in region and fs[1] in region)
    allowed = [e for e in shared if e not in hole.deleted_edges]
    for k in range(max(1, 1 - chi0), 4):
        for keep in itertools.combinations(allowed, k):
            try:
                d1 = DiscMap(torus, region, keep_edges=keep)
            except errors.TorusRigError:
                continue
            if hole.deleted_edges <= d1.interior_edges:
                return d1
    raise errors.InvalidCycle("region carries no enlargement disc structure")


def divide(hole: TorusWithHole, cycle: SeparatingCycle) -> tuple[TorusWithHole, Graph]:
    """Division move: the outer part (a torus with the enlarged hole) and the
    annulus of graph edges inside the region."""
    torus = hole.torus
    g1 = TorusWithHole(torus, [cycle.disc])
    region_edges = {e for f in cycle.disc.faces
                    for e in _face_edges(torus.faces[f])}
    ann_edges = (region_edges & hole.graph.edges) - hole.deleted_edges
    ann_vertices = {v for e in ann_edges for v in e}
    return g1, Graph(ann_vertices, ann_edges)


def is_critical(hole: TorusWithHole, cycle: SeparatingCycle) -> bool:
    g1, _ = divide(hole, cycle)
    return check_3_6(g1.graph).is_tight


# -- key lemma: constructive critical-cycle search --------------------------


def _blocked_faces(hole: TorusWithHole, k_set: frozenset) -> set[int]:
    """Torus faces whose 3-cycles are subgraphs of the induced graph on k_set."""
    torus = hole.torus
    g = hole.graph
    blocked = set()
    for i, f in enumerate(torus.faces):
        if all(v in k_set for v in f) and \
                all(e in g.edges for e in _face_edges(f)):
            blocked.add(i)
    return blocked


def _grow_region(torus: TorusComplex, start: int, blocked) -> frozenset:
    adj = torus.face_adjacency()
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for n in adj[f]:
            if n not in seen and n not in blocked:
                seen.add(n)
                stack.append(n)
    return frozenset(seen)


def _region_criticals(hole, region, e):
    """Critical cycles through e supported by the given region."""
    out = []
    hole_faces = set(hole.single_disc.faces)
    if not hole_faces <= set(region):
        return out
    for d1 in _iter_enlargement_discs(hole, region):
        if edge_key(*e) not in d1.boundary_walk.edge_set():
            continue
        cycle = SeparatingCycle(d1.boundary_walk, d1)
        if is_critical(hole, cycle):
            out.append(cycle)
    return out


def _grow_f7_extension(g: Graph, core: frozenset, exclude: frozenset) -> frozenset:
    """Greedy passes extending a vertex set while f stays at most 7."""
    s = set(core)
    changed = True
    while changed:
        changed = False
        for u in sorted(g.vertices - s - exclude):
            ind = g.induced(s | {u})
            if freedom(ind) <= 7:
                s.add(u)
                changed = True
    return frozenset(s)


def find_critical_cycle_through(hole: TorusWithHole, e) -> SeparatingCycle | None:
    """A critical separating cycle through a contractible edge whose
    contraction breaks tightness; None when the contraction stays tight.

    Follows the constructive route: lift a violating set of the contracted
    graph, extend it maximally, grow the complementary face region from the
    face of the edge that the violator misses, and read the cycle off the
    region's disc boundary.  When the violator misses both faces the two
    candidate regions are both tried and the lowest critical cycle wins.
    """
    e = edge_key(*e)
    if classify_edge(hole, e) is not EdgeClass.FF_CONTRACTIBLE:
        raise errors.NotContractible(f"{e} is not a contractible FF edge")
    contracted = contract(hole, e)
    z = e[0]
    verdict = check_3_6(contracted.graph, through_vertex=z)
    if verdict.is_sparse:
        return None
    lifted = frozenset(verdict.witness - {z}) | set(e)
    apex_c, apex_d = _apexes(hole, e)
    in_c, in_d = apex_c in lifted, apex_d in lifted
    if in_c and in_d:
        raise errors.NoCriticalCycle(
            "violating set contains both faces of the edge; the input graph "
            "cannot have been tight")
    torus = hole.torus
    face_c, face_d = hole.edge_retained_faces[e]
    if apex_c not in torus.faces[face_c]:
        face_c, face_d = face_d, face_c
    candidates: list[SeparatingCycle] = []
    if in_c or in_d:
        if in_d:
            # symmetric relabel: grow from the face missing from the violator
            apex_c, apex_d = apex_d, apex_c
            face_c, face_d = face_d, face_c
        k_set = maximal_tight_subgraph(hole.graph, lifted | {apex_c}, {apex_d})
        if k_set is None:
            k_set = lifted | {apex_c}
        region = _grow_region(torus, face_d, _blocked_faces(hole, k_set))
        candidates.extend(_region_criticals(hole, region, e))
    else:
        k_set = maximal_tight_subgraph(hole.graph, lifted, {apex_c, apex_d})
        if k_set is None:
            k_set = _grow_f7_extension(hole.graph, lifted,
                                       frozenset({apex_c, apex_d}))
        blocked = _blocked_faces(hole, k_set)
        region_d = _grow_region(torus, face_d, blocked | {face_c})
        region_c = _grow_region(torus, face_c, blocked | {face_d})
        for region in (region_d, region_c):
            candidates.extend(_region_criticals(hole, region, e))
    if not candidates:
        raise errors.NoCriticalCycle(
            f"no critical separating cycle through {e}; this violates the "
            "key lemma on tight inputs")
    return min(candidates, key=lambda c: c.walk.canonical())


def exhaustive_critical_cycles_through(hole: TorusWithHole, e) -> list[SeparatingCycle]:
    """All critical cycles through e, by enumerating every enlarged disc.

    Exponential in the number of non-hole faces; the slow oracle for
    validating the constructive search on small graphs.
    """
    e = edge_key(*e)
    hole_faces = tuple(hole.single_disc.faces)
    retained = [i for i in range(len(hole.torus.faces)) if i not in hole_faces]
    found = []
    seen_regions = set()
    for size in range(len(retained) + 1):
        for extra in itertools.combinations(retained, size):
            region = frozenset(hole_faces) | frozenset(extra)
            if region in seen_regions:
                continue
            seen_regions.add(region)
            found.extend(_region_criticals(hole, region, e))
    return found


# -- fission ----------------------------------------------------------------


@dataclass(frozen=True)
class Contraction:
    """Record of one edge contraction: the higher endpoint merged into the
    lower; apexes are the collapsed faces' third corners, moved the neighbours
    the merged vertex keeps from the vanished endpoint."""
    edge: tuple[int, int]
    apexes: tuple[int, int]
    moved: frozenset

    def to_json(self) -> dict:
        return {"move": "contract", "edge": list(self.edge),
                "apexes": list(self.apexes), "moved": sorted(self.moved)}


@dataclass(frozen=True)
class Fission:
    cycle_vertices: tuple
    catalog_index: int

    def to_json(self) -> dict:
        return {"move": "fission", "cycle": list(self.cycle_vertices),
                "catalog_index": self.catalog_index}


def fission(hole: TorusWithHole, cycle: SeparatingCycle
            ) -> tuple[TorusWithHole, TorusWithHole]:
    """Fission move at a critical cycle: (G1, G2) with the catalog graph
    substituted for G1; both children must come out simple and tight."""
    g1, ann = divide(hole, cycle)
    if not check_3_6(g1.graph).is_tight:
        raise errors.InvalidCycle("cycle is not critical: outer part not tight")
    cls = catalog.walk_class(g1.detachment_walk())
    idx, h_rep = catalog.catalog_graph_for_class(cls)
    g2 = _substitute(hole, cycle, h_rep)
    if not check_3_6(g2.graph).is_tight:
        raise errors.NoMatchingCatalogGraph(
            "substitution produced a non-tight graph; fission lemma violated")
    return g1, g2


def _substitute(hole: TorusWithHole, cycle: SeparatingCycle,
                h_rep: TorusWithHole) -> TorusWithHole:
    """Glue the catalog graph's retained faces onto the region of the cycle."""
    torus = hole.torus
    w_c = cycle.walk.vertices
    w_h = h_rep.detachment_walk().vertices
    n = len(w_c)
    if len(w_h) != n:
        raise errors.NoMatchingCatalogGraph("boundary walks have different lengths")
    region_faces = [torus.faces[i] for i in cycle.disc.faces]
    last_error = None
    for reverse in (False, True):
        seq = w_h[::-1] if reverse else w_h
        for rot in range(n):
            mapping: dict[int, int] = {}
            ok = True
            for k in range(n):
                hv, cv = seq[(rot + k) % n], w_c[k]
                if mapping.setdefault(hv, cv) != cv:
                    ok = False
                    break
            if not ok or len(set(mapping.values())) != len(mapping):
                continue
            h_faces = [tuple(mapping[x] for x in f) for f in h_rep.faces]
            try:
                torus2 = TorusComplex(h_faces + region_faces)
                discs2 = []
                for d in hole.discs:
                    faces2 = [torus2.face_index(torus.faces[i]) for i in d.faces]
                    discs2.append(DiscMap(torus2, faces2, keep_edges=d.keep_edges))
                return TorusWithHole(torus2, discs2)
            except errors.TorusRigError as exc:
                last_error = exc
                continue
    raise errors.NoMatchingCatalogGraph(
        f"no walk alignment glues the catalog graph onto the cycle: {last_error}")


# -- greedy reduction, trees, certificates ----------------------------------


def _contraction_record(hole: TorusWithHole, e) -> Contraction:
    e = edge_key(*e)
    keep, gone = e
    apexes = _apexes(hole, e)
    moved = frozenset(hole.graph.neighbors(gone) - {keep} - set(apexes))
    return Contraction(e, apexes, moved)


def _tight_after_contract(hole: TorusWithHole, e) -> TorusWithHole | None:
    """The contracted graph when contraction keeps tightness, else None."""
    try:
        result = contract(hole, e)
    except errors.NotContractible:
        return None
    if check_3_6(result.graph, through_vertex=e[0]).is_tight:
        return result
    return None


def reduce_greedy(hole: TorusWithHole, validate: bool = True
                  ) -> tuple[TorusWithHole, list[Contraction]]:
    """Repeatedly contract the first tightness-preserving FF edge.

    Terminates at an uncontractible graph; a contractible graph admitting no
    tight contraction contradicts the greedy-contraction lemma and raises
    StuckButContractible.
    """
    if validate and not check_3_6(hole.graph).is_tight:
        raise ValueError("reduce_greedy needs a tight single-hole graph")
    current = hole
    moves: list[Contraction] = []
    while True:
        cand = contractible_edges(current)
        if not cand:
            return current, moves
        for e in cand:
            nxt = _tight_after_contract(current, e)
            if nxt is not None:
                moves.append(_contraction_record(current, e))
                current = nxt
                break
        else:
            raise errors.StuckButContractible(
                f"no tightness-preserving contraction among {len(cand)} "
                "contractible edges")


@dataclass
class TreeNode:
    hole: TorusWithHole
    parent: int | None
    move: Contraction | Fission | None
    children: list = field(default_factory=list)


@dataclass
class ReductionTree:
    nodes: list

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def leaves(self) -> list[TreeNode]:
        return [n for n in self.nodes if not n.children]

    def fission_count(self) -> int:
        return sum(1 for n in self.nodes if isinstance(n.move, Fission))

    def to_json(self) -> dict:
        out = []
        for i, n in enumerate(self.nodes):
            out.append({
                "id": i, "parent": n.parent,
                "move": n.move.to_json() if n.move else None,
                "vertices": len(n.hole.graph.vertices),
                "edges": len(n.hole.graph.edges),
            })
        return {"nodes": out}


def _reducing_fission(hole: TorusWithHole):
    """A fission at a reducing critical cycle, iterating nested cycles.

    Only reachable when no contraction preserves tightness, which the
    greedy-contraction lemma rules out for tight inputs; kept as the
    tree-construction fallback with loud failure.
    """
    cand = contractible_edges(hole)
    cycle = None
    for e in cand:
        cycle = find_critical_cycle_through(hole, e)
        if cycle is not None:
            break
    if cycle is None:
        raise errors.NoCriticalCycle("no critical cycle through any edge")
    n_v = len(hole.graph.vertices)
    for _ in range(len(hole.torus.faces)):
        g1, ann = divide(hole, cycle)
        if len(g1.graph.vertices) < n_v and len(ann.vertices) < n_v:
            return cycle
        region = set(cycle.region())
        inner = [e for e in hole.graph.sorted_edges()
                 if len(hole.edge_retained_faces[e]) == 2
                 and set(hole.edge_retained_faces[e]) <= region
                 and e not in cycle.walk.edge_set()
                 and classify_edge(hole, e) is EdgeClass.FF_CONTRACTIBLE]
        nxt = None
        for e in inner:
            c2 = find_critical_cycle_through(hole, e)
            if c2 is not None and len(c2.region()) < len(region):
                nxt = c2
                break
        if nxt is None:
            raise errors.NoCriticalCycle("nested-cycle iteration stalled")
        cycle = nxt
    raise errors.NoCriticalCycle("nested-cycle iteration exceeded face bound")


def reduction_tree(hole: TorusWithHole, validate: bool = True) -> ReductionTree:
    """Contraction when possible, fission at a reducing critical cycle
    otherwise; leaves are uncontractible."""
    if validate and not check_3_6(hole.graph).is_tight:
        raise ValueError("reduction_tree needs a tight single-hole graph")
    nodes = [TreeNode(hole, None, None)]
    stack = [0]
    while stack:
        i = stack.pop()
        current = nodes[i].hole
        cand = contractible_edges(current)
        if not cand:
            continue
        advanced = False
        for e in cand:
            nxt = _tight_after_contract(current, e)
            if nxt is not None:
                nodes.append(TreeNode(nxt, i, _contraction_record(current, e)))
                nodes[i].children.append(len(nodes) - 1)
                stack.append(len(nodes) - 1)
                advanced = True
                break
        if advanced:
            continue
        cycle = _reducing_fission(current)
        g1, g2 = fission(current, cycle)
        move = Fission(cycle.walk.vertices,
                       catalog.catalog_graph_for_class(
                           catalog.walk_class(g1.detachment_walk()))[0])
        for child in (g1, g2):
            nodes.append(TreeNode(child, i, move))
            nodes[i].children.append(len(nodes) - 1)
            stack.append(len(nodes) - 1)
    return ReductionTree(nodes)


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class SplitMove:
    vertex: int
    anchors: tuple[int, int]
    moved: frozenset
    new_vertex: int

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "anchors": list(self.anchors),
                "moved": sorted(self.moved), "new_vertex": self.new_vertex}


@dataclass(frozen=True)
class Certificate:
    """Vertex-splitting construction from K3: replaying the splits from the
    base triangle reproduces the target graph exactly."""
    base_vertices: tuple[int, int, int]
    splits: tuple[SplitMove, ...]

    def to_json(self) -> dict:
        return {"base": list(self.base_vertices),
                "splits": [s.to_json() for s in self.splits]}

    def replay(self) -> list[Graph]:
        """All intermediate graphs, K3 first."""
        a, b, c = self.base_vertices
        g = Graph([a, b, c], [(a, b), (a, c), (b, c)])
        out = [g]
        for s in self.splits:
            g, _ = g.split_vertex(s.vertex, *s.anchors,
                                  [(s.vertex, t) for t in s.moved],
                                  new_vertex=s.new_vertex)
            out.append(g)
        return out


def _leaf_chain(leaf_graph: Graph) -> tuple[tuple[int, int, int], list[SplitMove]]:
    """Split chain from K3 to an uncontractible leaf (K4 or K5 minus edge)."""
    vs = sorted(leaf_graph.vertices)
    if is_isomorphic(leaf_graph, complete_graph(4)):
        a, b, c, d = vs
        return (a, b, c), [SplitMove(a, (b, c), frozenset(), d)]
    k5 = complete_graph(5)
    k5e = Graph(k5.vertices, k5.edges - {(0, 1)})
    if is_isomorphic(leaf_graph, k5e):
        nonadj = next((u, v) for u in vs for v in vs
                      if u < v and v not in leaf_graph.neighbors(u))
        p, q = nonadj
        x, y, z = sorted(set(vs) - {p, q})
        return (x, y, z), [SplitMove(x, (y, z), frozenset(), p),
                           SplitMove(x, (y, z), frozenset(), q)]
    raise errors.ReplayMismatch(
        "leaf is not isomorphic to K4 or K5 minus an edge")


def certify(hole: TorusWithHole, validate: bool = True) -> Certificate:
    """Construction certificate: greedy-contract to an uncontractible leaf,
    seed with the stored K3 chain for that leaf, append the reversed
    contraction sequence as splits, and replay-check the result."""
    leaf, moves = reduce_greedy(hole, validate=validate)
    base, splits = _leaf_chain(leaf.graph)
    for m in reversed(moves):
        keep, gone = m.edge
        splits.append(SplitMove(keep, m.apexes, m.moved, gone))
    cert = Certificate(base, tuple(splits))
    final = cert.replay()[-1]
    if final != hole.graph:
        raise errors.ReplayMismatch("replayed graph differs from the input")
    return cert


def verify_certificate(cert: Certificate, target: Graph,
                       check_rank: bool = True, seed: int = 0) -> bool:
    """Replay with per-step tightness (and rank-increment) checks."""
    graphs = cert.replay()
    if graphs[-1] != target and not is_isomorphic(graphs[-1], target):
        raise errors.ReplayMismatch("certificate does not reproduce the target")
    prev_rank = None
    for g in graphs:
        if not check_3_6(g).is_tight:
            raise errors.ReplayMismatch("intermediate graph is not tight")
        if check_rank:
            r = generic_rank(g, seed=seed)
            if prev_rank is not None and r != prev_rank + 3:
                raise errors.ReplayMismatch(
                    f"rank stepped {prev_rank} -> {r}, expected +3")
            prev_rank = r
    if check_rank and prev_rank != 3 * len(target.vertices) - 6:
        raise errors.ReplayMismatch("final rank is not 3|V| - 6")
    return True
