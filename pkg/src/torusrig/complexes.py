"""Surface complexes, torus complexes, and torus graphs with holes.

A surface complex is a set of triangular faces in which every edge lies in at
most two faces and the 1-skeleton is simple.  A torus complex is a closed,
connected, orientable such complex with Euler characteristic zero.  Cutting a
hole deletes the edges interior to a triangulated disc mapped into the torus;
the disc may wrap around the torus and touch itself along its boundary, which
is why the disc structure is recovered by *unfolding* the chosen face region
rather than by taking an induced subcomplex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import errors
from .graphs import Graph, edge_key, freedom  # noqa: F401  (freedom re-exported)


def _face_edges(face):
    a, b, c = face
    return (edge_key(a, b), edge_key(b, c), edge_key(c, a))


def _directed_edges(face):
    a, b, c = face
    return ((a, b), (b, c), (c, a))


def canon_face(face):
    """Rotate a corner triple so the smallest corner comes first.

    Cyclic order (orientation) is preserved; only the starting point changes.
    """
    a, b, c = face
    m = min(face)
    while face[0] != m:
        face = (face[1], face[2], face[0])
    return face


class SurfaceComplex:
    """A finite simplicial surface complex given by its triangular faces."""

    def __init__(self, faces):
        faces = tuple(canon_face(tuple(f)) for f in faces)
        seen_corner_sets = set()
        for f in faces:
            if len(set(f)) != 3:
                raise errors.LoopEdge(f"face {f} repeats a corner")
            cs = frozenset(f)
            if cs in seen_corner_sets:
                raise errors.DuplicateFace(f"face {f} occurs twice")
            seen_corner_sets.add(cs)
        edge_faces: dict[tuple[int, int], list[int]] = {}
        for idx, f in enumerate(faces):
            for e in _face_edges(f):
                edge_faces.setdefault(e, []).append(idx)
        for e, fs in edge_faces.items():
            if len(fs) > 2:
                raise errors.EdgeInThreeFaces(f"edge {e} lies in {len(fs)} faces")
        self.faces = faces
        self.edge_faces = {e: tuple(fs) for e, fs in edge_faces.items()}
        self.edges = frozenset(edge_faces)
        self.vertices = frozenset(v for f in faces for v in f)
        self.graph = Graph(self.vertices, self.edges)

    def __repr__(self):
        return (f"{type(self).__name__}(|V|={len(self.vertices)}, "
                f"|E|={len(self.edges)}, |F|={len(self.faces)})")

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def boundary_edges(self) -> frozenset:
        """Edges lying in fewer than two faces."""
        return frozenset(e for e, fs in self.edge_faces.items() if len(fs) < 2)

    def face_adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.faces))}
        for fs in self.edge_faces.values():
            if len(fs) == 2:
                adj[fs[0]].add(fs[1])
                adj[fs[1]].add(fs[0])
        return adj


def build_complex(faces) -> SurfaceComplex:
    """Validate a list of corner triples into a SurfaceComplex."""
    return SurfaceComplex(faces)


def _orient_coherently(faces, edge_faces):
    """Flip faces so adjacent faces traverse shared edges oppositely.

    Returns the reoriented face list; raises NotClosedSurface if the complex
    is not orientable.  Assumes every edge lies in exactly two faces.
    """
    faces = list(faces)
    oriented = [False] * len(faces)
    for seed in range(len(faces)):
        if oriented[seed]:
            continue
        oriented[seed] = True
        stack = [seed]
        while stack:
            i = stack.pop()
            dirs_i = set(_directed_edges(faces[i]))
            for e in _face_edges(faces[i]):
                f1, f2 = edge_faces[e]
                j = f2 if f1 == i else f1
                u, v = e
                # i traverses e one way; j must traverse it the other way
                need = (v, u) if (u, v) in dirs_i else (u, v)
                j_dirs = _directed_edges(faces[j])
                if not oriented[j]:
                    if need not in j_dirs:
                        a, b, c = faces[j]
                        faces[j] = (a, c, b)
                    oriented[j] = True
                    stack.append(j)
                elif need not in j_dirs:
                    raise errors.NotClosedSurface("complex is not orientable")
    return [canon_face(f) for f in faces]


@dataclass(frozen=True)
class GridProvenance:
    """Construction record of a rectangular torus: vertex (i, j) has id i*s + j."""
    r: int
    s: int


class TorusComplex(SurfaceComplex):
    """A closed, connected, orientable surface complex of genus one.

    Faces are stored coherently oriented, so each edge is traversed once in
    each direction by its two incident faces.
    """

    def __init__(self, faces, provenance: GridProvenance | None = None):
        super().__init__(faces)
        for e, fs in self.edge_faces.items():
            if len(fs) != 2:
                raise errors.NotClosedSurface(f"edge {e} lies in {len(fs)} faces")
        if not self.graph.is_connected():
            raise errors.NotClosedSurface("complex is not connected")
        if self.euler_characteristic() != 0:
            raise errors.NotClosedSurface(
                f"Euler characteristic {self.euler_characteristic()} != 0")
        reoriented = _orient_coherently(self.faces, self.edge_faces)
        self.faces = tuple(reoriented)
        if freedom(self) != 0:
            raise errors.NotClosedSurface("torus complex must have freedom number 0")
        self.provenance = provenance

    def face_index(self, face) -> int:
        """Index of a face given by any corner ordering."""
        target = frozenset(face)
        for i, f in enumerate(self.faces):
            if frozenset(f) == target:
                return i
        raise KeyError(face)


def rectangular_torus(r: int, s: int) -> TorusComplex:
    """The r x s grid torus: one diagonal per cell, opposite sides identified.

    Vertex (i, j) gets id i*s + j.  Needs r, s >= 3; smaller grids produce
    loops or parallel edges under the identification.
    """
    if r < 3 or s < 3:
        raise errors.TooSmall(f"grid {r}x{s}: both dimensions must be >= 3")
    def vid(i, j):
        return (i % r) * s + (j % s)
    faces = []
    for i in range(r):
        for j in range(s):
            faces.append((vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)))
            faces.append((vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)))
    return TorusComplex(faces, provenance=GridProvenance(r, s))


def identify_face_graph(disc: SurfaceComplex, boundary_matching) -> TorusComplex:
    """Quotient a planar face graph into a torus by identifying boundary vertices.

    ``boundary_matching`` maps merged vertex ids to their targets (dict or
    pair list); chains are resolved.  Covers both the rectangular form
    (side paths identified order-reversingly) and the annular form (inner and
    outer boundary cycles identified); the caller supplies the bijections.
    """
    mapping = dict(boundary_matching)
    def resolve(v):
        seen = set()
        while v in mapping:
            if v in seen:
                raise errors.NonSimpleQuotient(f"cyclic identification at {v}")
            seen.add(v)
            v = mapping[v]
        return v
    try:
        faces = [tuple(resolve(v) for v in f) for f in disc.faces]
        return TorusComplex(faces)
    except (errors.LoopEdge, errors.DuplicateFace, errors.EdgeInThreeFaces) as exc:
        raise errors.NonSimpleQuotient(str(exc)) from exc


class ClosedWalk:
    """A closed walk given by its cyclic vertex sequence.

    ``vertices[i] -- vertices[i+1 mod n]`` are the traversed edges; the walk
    has as many edges as vertex entries.
    """

    def __init__(self, vertices):
        vertices = tuple(vertices)
        n = len(vertices)
        for i in range(n):
            if vertices[i] == vertices[(i + 1) % n]:
                raise errors.LoopEdge("consecutive walk entries coincide")
        self.vertices = vertices

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, ClosedWalk) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"ClosedWalk{self.vertices}"

    def edges(self) -> list[tuple[int, int]]:
        n = len(self.vertices)
        return [edge_key(self.vertices[i], self.vertices[(i + 1) % n])
                for i in range(n)]

    def directed_edges(self) -> list[tuple[int, int]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def canonical(self) -> tuple:
        """Least vertex tuple over all rotations and the reversal."""
        n = len(self.vertices)
        best = None
        for seq in (self.vertices, self.vertices[::-1]):
            for k in range(n):
                cand = seq[k:] + seq[:k]
                if best is None or cand < best:
                    best = cand
        return best


class DiscMap:
    """A triangulated disc mapped into a torus, injectively on faces.

    The disc is recovered by unfolding the face region: faces sharing an edge
    are glued along it unless the edge is listed in ``keep_edges`` (such edges
    stay in the graph and are covered twice by the boundary walk).  Validation
    checks that the unfolded complex is a single disc.
    """

    def __init__(self, torus: TorusComplex, face_indices, keep_edges=()):
        self.torus = torus
        self.faces = tuple(sorted(set(face_indices)))
        if not self.faces:
            raise errors.NotADisc("empty face set")
        for i in self.faces:
            if not 0 <= i < len(torus.faces):
                raise errors.NotADisc(f"face index {i} out of range")
        self.keep_edges = frozenset(edge_key(*e) for e in keep_edges)
        self._unfold()

    def _unfold(self):
        torus = self.torus
        region = set(self.faces)
        shared = set()
        for e, fs in torus.edge_faces.items():
            if fs[0] in region and fs[1] in region:
                shared.add(e)
        bad = self.keep_edges - shared
        if bad:
            raise errors.NotADisc(f"keep edges {sorted(bad)} are not interior to the region")
        glued = shared - self.keep_edges

        # Connectivity of the region in the torus (over any shared edge).
        adj_all = {f: set() for f in region}
        for e in shared:
            f1, f2 = torus.edge_faces[e]
            adj_all[f1].add(f2)
            adj_all[f2].add(f1)
        if not _connected(region, adj_all):
            raise errors.NotFaceConnected("hole face set is not adjacency-connected")

        # Connectivity under the gluings actually used by the disc structure.
        adj_glued = {f: set() for f in region}
        for e in glued:
            f1, f2 = torus.edge_faces[e]
            adj_glued[f1].add(f2)
            adj_glued[f2].add(f1)
        if not _connected(region, adj_glued):
            raise errors.NotADisc("unfolded complex is disconnected")

        # Union-find on corners (face, vertex) generated by the gluings.
        parent: dict = {}
        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != x:
                parent[x], x = root, parent[x]
            return root
        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        for e in glued:
            f1, f2 = torus.edge_faces[e]
            for v in e:
                union((f1, v), (f2, v))

        corners = [(f, v) for f in self.faces for v in torus.faces[f]]
        vclasses = {find(c) for c in corners}
        n_faces = len(region)
        n_abstract_edges = 3 * n_faces - len(glued)
        chi = len(vclasses) - n_abstract_edges + n_faces
        if chi != 1:
            raise errors.NotADisc(f"unfolded Euler characteristic {chi} != 1")

        # Abstract boundary edges: (face, edge) incidences not matched by a gluing.
        boundary_slots = []
        for f in self.faces:
            for e in _face_edges(torus.faces[f]):
                if e not in glued:
                    boundary_slots.append((f, e))
        # each boundary abstract vertex meets exactly two boundary slots
        slot_at: dict = {}
        for f, e in boundary_slots:
            for v in e:
                slot_at.setdefault(find((f, v)), []).append((f, e))
        for cls, slots in slot_at.items():
            if len(slots) != 2:
                raise errors.NotADisc("boundary is not a single cycle")

        self.interior_edges = frozenset(glued)
        self.interior_vertices = frozenset(
            v for v in torus.vertices
            if all(e in self.interior_edges
                   for e in torus.edges if v in e))
        self._find = find
        self._boundary_slots = boundary_slots
        self.boundary_walk = self._trace_boundary(find, boundary_slots, slot_at)

    def _trace_boundary(self, find, boundary_slots, slot_at) -> ClosedWalk:
        torus = self.torus
        if not boundary_slots:
            raise errors.NotADisc("disc has no boundary")
        # abstract boundary vertices, labelled by (image vertex, class repr)
        def image(cls):
            return cls[1]  # class representative is a (face, vertex) corner
        start = min(slot_at, key=lambda cls: (image(cls), cls))
        first = min(slot_at[start], key=lambda fe: fe[1])
        walk = []
        cls, slot = start, first
        visited = set()
        while True:
            walk.append(image(cls))
            visited.add((cls, slot))
            f, e = slot
            u, v = e
            # classes never merge corners over distinct torus vertices, so the
            # two endpoint classes of a slot are always distinct
            other = find((f, u)) if find((f, v)) == cls else find((f, v))
            nxt_slots = [s for s in slot_at[other] if s != slot]
            nxt = nxt_slots[0] if nxt_slots else slot
            cls, slot = other, nxt
            if (cls, slot) == (start, first):
                break
            if len(walk) > len(boundary_slots):
                raise errors.NotADisc("boundary traversal does not close up")
        if len(walk) != len(boundary_slots):
            raise errors.NotADisc("boundary is not a single cycle")
        return ClosedWalk(walk)

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return (f"DiscMap(faces={len(self.faces)}, "
                f"boundary={len(self.boundary_walk)}, keep={sorted(self.keep_edges)})")

    def boundary_length(self) -> int:
        return len(self.boundary_walk)


def _fully_glued_chi(torus: TorusComplex, region: set) -> int:
    """Euler characteristic of the fully glued unfolding of a face region."""
    glued = [e for e, fs in torus.edge_faces.items()
             if fs[0] in region and fs[1] in region]
    parent: dict = {}
    def find(x):
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root
    for e in glued:
        f1, f2 = torus.edge_faces[e]
        for v in e:
            a, b = find((f1, v)), find((f2, v))
            if a != b:
                parent[max(a, b)] = min(a, b)
    corners = {find((f, v)) for f in region for v in torus.faces[f]}
    return len(corners) - (3 * len(region) - len(glued)) + len(region)


def infer_disc(torus: TorusComplex, face_indices, max_keep: int = 3) -> DiscMap:
    """Find a disc structure on a face region, trying exposed-edge sets.

    Fully glued regions are tried first; if the unfolded characteristic falls
    short, progressively larger sets of interior edges are kept unglued (the
    wrap-around forms need one to three exposed edges).  Each ungluing raises
    the characteristic by at most one, which bounds the search depth from
    below.  Deterministic: the lexicographically first valid keep set wins.
    """
    region = set(face_indices)
    chi0 = _fully_glued_chi(torus, region)
    if chi0 == 1:
        try:
            return DiscMap(torus, face_indices)
        except errors.NotADisc:
            pass
    k_min = max(1, 1 - chi0)
    if k_min > max_keep:
        raise errors.NotADisc(
            f"unfolded characteristic {chi0} is beyond {max_keep} exposed edges")
    shared = sorted(e for e, fs in torus.edge_faces.items()
                    if fs[0] in region and fs[1] in region)
    for k in range(k_min, max_keep + 1):
        for keep in itertools.combinations(shared, k):
            try:
                return DiscMap(torus, face_indices, keep_edges=keep)
            except errors.NotADisc:
                continue
    raise errors.NotADisc(
        f"face set of size {len(region)} carries no disc structure "
        f"(up to {max_keep} exposed edges)")


def _connected(nodes, adj) -> bool:
    nodes = set(nodes)
    if not nodes:
        return True
    seen = set()
    stack = [next(iter(sorted(nodes)))]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        stack.extend(adj[x] - seen)
    return seen == nodes


def retriangulate_holes(retained_faces, walks) -> "TorusWithHole":
    """Close a retained facial complex into a torus by fresh hole discs.

    Each boundary walk is filled with a collar of fresh vertices plus a coned
    centre, so every interior edge of the new disc has a fresh endpoint and
    cannot collide with a retained edge.  Used when an edge contraction is
    sound on the graph but the old containing torus degenerates (a nonfacial
    torus 3-cycle through deleted edges).
    """
    faces = [tuple(f) for f in retained_faces]
    next_id = max(v for f in faces for v in f) + 1
    for w in walks:
        next_id = max(next_id, max(w.vertices) + 1)
    regions = []
    for w in walks:
        b = w.vertices
        n = len(b)
        ring = list(range(next_id, next_id + n))
        centre = next_id + n
        next_id += n + 1
        region = []
        for t in range(n):
            region.append((b[t], b[(t + 1) % n], ring[t]))
            region.append((b[(t + 1) % n], ring[t], ring[(t + 1) % n]))
            region.append((ring[t], ring[(t + 1) % n], centre))
        faces.extend(region)
        regions.append((region, w))
    torus = TorusComplex(faces)
    discs = []
    for region, w in regions:
        idxs = [torus.face_index(f) for f in region]
        cover: dict = {}
        for e in w.edges():
            cover[e] = cover.get(e, 0) + 1
        keeps = [e for e, k in cover.items() if k >= 2]
        discs.append(DiscMap(torus, idxs, keep_edges=keeps))
    return TorusWithHole(torus, discs)


class TorusWithHole:
    """A torus graph with one or more holes: the triple (T, D, i) per hole.

    The graph keeps every torus vertex that retains an edge; vertices interior
    to a hole disc lose all their edges and are dropped with them, so the
    freedom-number identity f(G) = |bd D| - 3 holds for every single cut.
    Vertex ids are never renumbered.
    """

    def __init__(self, torus: TorusComplex, discs):
        self.torus = torus
        self.discs = tuple(discs)
        if not self.discs:
            raise errors.NotADisc("a torus with hole needs at least one disc")
        used_faces: set[int] = set()
        region_edges: set = set()
        for d in self.discs:
            if d.torus is not torus:
                raise errors.HoleInteraction("disc belongs to a different torus")
            fset = set(d.faces)
            if used_faces & fset:
                raise errors.HoleInteraction("hole regions share a face")
            this_edges = {e for f in fset for e in _face_edges(torus.faces[f])}
            if region_edges & this_edges:
                raise errors.HoleInteraction("hole regions share an edge")
            used_faces |= fset
            region_edges |= this_edges
        self.hole_faces = frozenset(used_faces)
        self.deleted_edges = frozenset(e for d in self.discs for e in d.interior_edges)
        self.deleted_vertices = frozenset(v for d in self.discs for v in d.interior_vertices)
        self.face_indices = tuple(i for i in range(len(torus.faces))
                                  if i not in self.hole_faces)
        self.faces = tuple(torus.faces[i] for i in self.face_indices)
        self.graph = Graph(torus.vertices - self.deleted_vertices,
                           torus.edges - self.deleted_edges)
        edge_retained: dict = {e: [] for e in self.graph.edges}
        for i in self.face_indices:
            for e in _face_edges(torus.faces[i]):
                edge_retained[e].append(i)
        self.edge_retained_faces = {e: tuple(fs) for e, fs in edge_retained.items()}
        self.boundary_edges = frozenset(
            e for e, fs in self.edge_retained_faces.items() if len(fs) < 2)
        walk_edges = frozenset(e for d in self.discs for e in d.boundary_walk.edge_set())
        assert walk_edges == self.boundary_edges, "boundary graph != detachment image"

    def __repr__(self):
        return (f"TorusWithHole(|V|={len(self.graph.vertices)}, "
                f"|E|={len(self.graph.edges)}, holes={len(self.discs)})")

    @property
    def single_disc(self) -> DiscMap:
        if len(self.discs) != 1:
            raise errors.SingleHoleRequired(
                f"graph has {len(self.discs)} holes")
        return self.discs[0]

    def detachment_walk(self) -> ClosedWalk:
        """The closed walk i(bd D) around the (single) hole."""
        return self.single_disc.boundary_walk

    def retained_face_cycles(self) -> tuple:
        return self.faces

    def freedom(self) -> int:
        return freedom(self.graph)

    def is_ff_edge(self, e) -> bool:
        e = edge_key(*e)
        fs = self.edge_retained_faces.get(e)
        if fs is None:
            raise errors.UnknownEdge(f"{e} is not an edge of the graph")
        return len(fs) == 2


def cut_hole(torus: TorusComplex, disc_faces, keep_edges=None) -> TorusWithHole:
    """Cut a single hole given by a face-connected disc region.

    With ``keep_edges=None`` the disc structure is inferred (exposed edges
    are searched for when the fully glued region is not a disc); passing an
    explicit iterable pins the exposed edges.
    """
    if keep_edges is None:
        disc = infer_disc(torus, disc_faces)
    else:
        disc = DiscMap(torus, disc_faces, keep_edges=keep_edges)
    return TorusWithHole(torus, [disc])


def cut_holes(torus: TorusComplex, hole_specs) -> TorusWithHole:
    """Cut several pairwise non-adjacent holes.

    Each spec is either a face-index iterable or a (faces, keep_edges) pair.
    """
    discs = []
    for spec in hole_specs:
        if isinstance(spec, DiscMap):
            discs.append(spec)
            continue
        if isinstance(spec, tuple) and len(spec) == 2 and not isinstance(spec[0], int):
            faces, keep = spec
            discs.append(DiscMap(torus, faces, keep_edges=keep))
        else:
            discs.append(infer_disc(torus, spec))
    return TorusWithHole(torus, discs)


def boundary_graph(hole: TorusWithHole) -> frozenset:
    """Edges lying in fewer than two retained facial 3-cycles."""
    return hole.boundary_edges


def detachment_walk(hole: TorusWithHole) -> ClosedWalk:
    return hole.detachment_walk()
