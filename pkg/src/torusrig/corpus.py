"""Reproducible random corpora of torus graphs with holes.

A corpus entry is a grid torus plus a randomly grown face-connected disc
region with a prescribed boundary-walk length.  Same spec, same corpus:
all randomness flows from the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import errors
from .complexes import DiscMap, TorusWithHole, cut_hole, rectangular_torus
from .fileio import hole_to_record
from .graphs import freedom
from .sparsity import check_3_6


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    count: int
    grids: tuple = ((3, 3), (3, 4), (4, 4))
    boundary_lengths: tuple = (9,)
    max_region: int = 24
    attempts_per_graph: int = 400


def _grow_hole(torus, rng, target_len: int, max_region: int) -> DiscMap | None:
    """Randomly grow a face-connected region until its disc boundary has the
    target length; fully glued discs only."""
    adj = torus.face_adjacency()
    start = rng.randrange(len(torus.faces))
    region = [start]
    region_set = {start}
    while len(region) <= max_region:
        try:
            disc = DiscMap(torus, region)
            if disc.boundary_length() == target_len:
                return disc
        except errors.NotADisc:
            pass
        frontier = sorted({n for f in region for n in adj[f]} - region_set)
        if not frontier:
            return None
        nxt = rng.choice(frontier)
        region.append(nxt)
        region_set.add(nxt)
    return None


def gen_corpus(spec: CorpusSpec) -> list[TorusWithHole]:
    """Generate ``spec.count`` single-hole graphs; deterministic in the seed."""
    rng = random.Random(spec.seed)
    out: list[TorusWithHole] = []
    while len(out) < spec.count:
        r, s = spec.grids[len(out) % len(spec.grids)]
        target = spec.boundary_lengths[len(out) % len(spec.boundary_lengths)]
        torus = rectangular_torus(r, s)
        disc = None
        for _ in range(spec.attempts_per_graph):
            disc = _grow_hole(torus, rng, target, spec.max_region)
            if disc is not None:
                break
        if disc is None:
            raise errors.NotADisc(
                f"could not grow a boundary-{target} hole on the {r}x{s} torus")
        out.append(TorusWithHole(torus, [disc]))
    return out


def corpus_records(spec: CorpusSpec) -> list[dict]:
    """JSON records with per-graph metadata, ready for JSON-lines output."""
    records = []
    for idx, hole in enumerate(gen_corpus(spec)):
        rec = hole_to_record(hole)
        verdict = check_3_6(hole.graph)
        rec["meta"] = {
            "index": idx,
            "freedom": freedom(hole.graph),
            "boundary_length": len(hole.detachment_walk()),
            "status": verdict.status.value,
        }
        records.append(rec)
    return records
