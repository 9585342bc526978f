"""JSON graph files and DOT export.

Record schema::

    {"vertices": N, "faces": [[a,b,c], ...], "holes": [HOLE, ...]}

where HOLE is either a list of face indices (disc structure inferred) or
``{"faces": [...], "keep": [[u,v], ...]}`` pinning the exposed edges of a
wrap-around disc.  Grid provenance is not stored: on load the face list is
compared against the rectangular builders and recognised automatically.
"""

from __future__ import annotations

import json

from . import errors
from .complexes import (DiscMap, GridProvenance, TorusComplex, TorusWithHole,
                        canon_face, infer_disc, rectangular_torus)


def hole_to_record(hole: TorusWithHole) -> dict:
    holes = []
    for d in hole.discs:
        if d.keep_edges:
            holes.append({"faces": list(d.faces),
                          "keep": sorted([list(e) for e in d.keep_edges])})
        else:
            holes.append(list(d.faces))
    return {
        "vertices": len(hole.torus.vertices),
        "faces": [list(f) for f in hole.torus.faces],
        "holes": holes,
    }


def _detect_grid(n_vertices: int, faces) -> GridProvenance | None:
    face_sets = {frozenset(f) for f in faces}
    for r in range(3, n_vertices // 3 + 1):
        if n_vertices % r:
            continue
        s = n_vertices // r
        if s < 3:
            continue
        grid = rectangular_torus(r, s)
        if {frozenset(f) for f in grid.faces} == face_sets:
            return GridProvenance(r, s)
    return None


def record_to_torus(record: dict) -> TorusComplex:
    faces = [tuple(f) for f in record["faces"]]
    torus = TorusComplex(faces)
    if len(torus.vertices) != record["vertices"]:
        raise errors.NotClosedSurface(
            f"face list spans {len(torus.vertices)} vertices, "
            f"record says {record['vertices']}")
    torus.provenance = _detect_grid(record["vertices"], faces)
    return torus


def record_to_hole(record: dict) -> TorusWithHole:
    torus = record_to_torus(record)
    # face indices in the record refer to the record's face order, which may
    # differ from the validated torus order after reorientation; map by corner set
    index_map = {}
    for rec_idx, f in enumerate(record["faces"]):
        index_map[rec_idx] = torus.face_index(tuple(f))
    discs = []
    for h in record.get("holes", []):
        if isinstance(h, dict):
            faces = [index_map[i] for i in h["faces"]]
            keep = [tuple(e) for e in h.get("keep", [])]
            discs.append(DiscMap(torus, faces, keep_edges=keep))
        else:
            discs.append(infer_disc(torus, [index_map[i] for i in h]))
    return TorusWithHole(torus, discs)


def save_hole(hole: TorusWithHole, path) -> None:
    with open(path, "w") as fh:
        json.dump(hole_to_record(hole), fh, sort_keys=True)
        fh.write("\n")


def load_hole(path) -> TorusWithHole:
    with open(path) as fh:
        return record_to_hole(json.load(fh))


def dumps_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def to_dot(hole: TorusWithHole, name: str = "G") -> str:
    """DOT serialisation of the underlying graph, boundary edges styled bold."""
    lines = [f"graph {name} {{"]
    for v in sorted(hole.graph.vertices):
        lines.append(f"  {v};")
    for u, v in hole.graph.sorted_edges():
        style = ' [style=bold, color=red]' if (u, v) in hole.boundary_edges else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
