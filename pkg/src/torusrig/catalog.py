"""The 17 detachment forms: cyclic-word grammar and hole classification.

A detachment map of a tight single-hole torus graph traverses a closed
9-walk.  Its combinatorial type is the equality pattern of the 9 vertex
slots, taken up to rotation and reversal; since the graphs are simple, two
walk edges coincide exactly when their endpoint pairs do, so the vertex
pattern determines the edge pattern.  Words use v/w/x for repeated vertices,
e/f/g for repeated edges, and numerals for runs of fresh edges; the numeral
values plus the edge-letter occurrences always sum to 9.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import errors
from .complexes import ClosedWalk, TorusComplex, TorusWithHole, DiscMap

VERTEX_LETTERS = "vwx"
EDGE_LETTERS = "efg"

WALK_LENGTH = 9

#: table order: word i belongs to the representative graph H_i (1-based)
THE_17_WORDS = (
    "v9",
    "v3v6",
    "v4v5",
    "e3e4",
    "v1w2v2w4",
    "v1w2v3w3",
    "v1w2v4w2",
    "v1w3v2w3",
    "v2w3v2w2",
    "v1w2x1v2w1x2",
    "v1w1x1v2w2x2",
    "v3e2v1e1",
    "v3e1v2e1",
    "v2e2v2e1",
    "v1e1w2v1e1w1",
    "e1f2e1f1",
    "ef1ge1fg1",
)


@dataclass(frozen=True)
class DetachmentWord:
    """A validated token sequence, e.g. ('e', 3, 'e', 4)."""
    tokens: tuple

    def __str__(self):
        return "".join(str(t) for t in self.tokens)

    def walk_length(self) -> int:
        return sum(t for t in self.tokens if isinstance(t, int)) + \
            sum(1 for t in self.tokens if isinstance(t, str) and t in EDGE_LETTERS)


def parse_word(text: str) -> DetachmentWord:
    """Parse a short-form cyclic word and enforce the length-9 sum rule."""
    tokens: list = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in VERTEX_LETTERS or ch in EDGE_LETTERS:
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
        else:
            raise errors.BadToken(f"unexpected character {ch!r} in {text!r}")
    if not tokens:
        raise errors.BadToken("empty word")
    for letter in EDGE_LETTERS:
        if tokens.count(letter) not in (0, 2):
            raise errors.BadToken(f"edge letter {letter!r} must occur exactly twice")
    word = DetachmentWord(tuple(tokens))
    if word.walk_length() != WALK_LENGTH:
        raise errors.SumNot9(
            f"{text!r}: numerals plus edge letters sum to {word.walk_length()}, not 9")
    return word


def expand_word(word: DetachmentWord) -> tuple:
    """Expand a word into its length-9 slot-identification pattern.

    Slots 0..8 are the walk vertices.  A vertex letter pins the current slot;
    a numeral advances that many fresh edges; an edge letter traverses the
    named edge, the second occurrence in the reverse direction (the two sides
    of an exposed edge are traversed oppositely on an orientable surface).
    """
    n = word.walk_length()
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    pos = 0
    vertex_slot: dict = {}
    edge_slot: dict = {}
    for t in word.tokens:
        if isinstance(t, int):
            pos += t
        elif t in VERTEX_LETTERS:
            slot = pos % n
            if t in vertex_slot:
                union(vertex_slot[t], slot)
            else:
                vertex_slot[t] = slot
        else:  # edge letter: traverse one copy of the edge
            here, there = pos % n, (pos + 1) % n
            if t in edge_slot:
                a, b = edge_slot[t]
                union(here, b)
                union(there, a)
            else:
                edge_slot[t] = (here, there)
            pos += 1
    if pos != n:
        raise errors.BadToken(f"word {word} does not advance exactly {n} edges")
    seq = [find(i) for i in range(n)]
    return canonical_pattern(seq)


def canonical_pattern(seq) -> tuple:
    """Canonical form of a cyclic vertex sequence under rotation/reversal.

    The pattern records which slots are equal: each slot is relabelled by the
    first occurrence of its vertex, and the least relabelling over all 2n
    symmetries is returned.
    """
    seq = list(seq)
    n = len(seq)

    def relabel(s):
        ids: dict = {}
        out = []
        for x in s:
            if x not in ids:
                ids[x] = len(ids)
            out.append(ids[x])
        return tuple(out)

    best = None
    for base in (seq, seq[::-1]):
        for k in range(n):
            cand = relabel(base[k:] + base[:k])
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class CanonicalWalkClass:
    pattern: tuple

    @property
    def num_vertices(self) -> int:
        return len(set(self.pattern))

    @property
    def num_edges(self) -> int:
        n = len(self.pattern)
        return len({frozenset((self.pattern[i], self.pattern[(i + 1) % n]))
                    for i in range(n)})

    def __len__(self):
        return len(self.pattern)


def walk_class(walk: ClosedWalk) -> CanonicalWalkClass:
    return CanonicalWalkClass(canonical_pattern(walk.vertices))


def the_17() -> list[tuple[str, CanonicalWalkClass]]:
    """The 17 cyclic words with their expanded canonical classes."""
    out = []
    for text in THE_17_WORDS:
        word = parse_word(text)
        out.append((text, CanonicalWalkClass(expand_word(word))))
    return out


_CLASS_TO_WORD = None


def _class_table() -> dict:
    global _CLASS_TO_WORD
    if _CLASS_TO_WORD is None:
        _CLASS_TO_WORD = {cls.pattern: text for text, cls in the_17()}
    return _CLASS_TO_WORD


def _nonalternating_pinch(pattern) -> bool:
    """Repeated labels whose occurrences do not interleave around the cycle.

    Cyclic words containing disjoint pinches of the same pair (for example
    v3v2w3w1) describe holes that trap a fully triangulated sphere and can
    never be tight.
    """
    n = len(pattern)
    slots: dict = {}
    for i, x in enumerate(pattern):
        slots.setdefault(x, []).append(i)
    repeated = [s for s in slots.values() if len(s) == 2]
    for i in range(len(repeated)):
        for j in range(i + 1, len(repeated)):
            a1, a2 = repeated[i]
            b1, b2 = repeated[j]
            # interleaved iff exactly one of b1, b2 lies in the arc (a1, a2)
            inside = sum(1 for b in (b1, b2) if a1 < b < a2)
            if inside != 1:
                return True
    return False


@dataclass(frozen=True)
class Classification:
    walk_class: CanonicalWalkClass
    word: str | None
    excluded_family: str | None = None

    @property
    def excluded(self) -> bool:
        return self.word is None

    def to_json(self) -> dict:
        return {"word": self.word, "excluded": self.excluded,
                "excluded_family": self.excluded_family,
                "pattern": list(self.walk_class.pattern)}


def classify(hole: TorusWithHole) -> Classification:
    """Classify the hole boundary into one of the 17 forms, or Excluded."""
    walk = hole.detachment_walk()
    if len(walk) != WALK_LENGTH:
        raise errors.WalkNot9(f"detachment walk has length {len(walk)}, not 9")
    cls = walk_class(walk)
    word = _class_table().get(cls.pattern)
    if word is not None:
        return Classification(cls, word)
    family = "nonalternating-pinch" if _nonalternating_pinch(cls.pattern) else None
    return Classification(cls, None, excluded_family=family)


# -- stored representatives -------------------------------------------------


def _load_graph_record(name: str) -> dict:
    with resources.files("torusrig.data").joinpath(name).open() as fh:
        return json.load(fh)


def build_H(i: int) -> TorusWithHole:
    """The stored vertex-minimal representative H_i, 1 <= i <= 17.

    Representatives are data files (rectangular or annular torus face lists
    plus a hole region); the test suite revalidates tightness, the boundary
    word, and V(H_i) = V(boundary) rather than trusting the data.
    """
    if not 1 <= i <= 17:
        raise errors.NoMatchingCatalogGraph(f"index {i} out of range 1..17")
    record = _load_graph_record(f"h{i:02d}.json")
    from .fileio import record_to_hole
    return record_to_hole(record)


def catalog_graph_for_class(cls: CanonicalWalkClass) -> tuple[int, TorusWithHole]:
    """Find (index, H_i) whose stored word matches the given class."""
    for idx, (text, stored_cls) in enumerate(the_17(), start=1):
        if stored_cls.pattern == cls.pattern:
            return idx, build_H(idx)
    raise errors.NoMatchingCatalogGraph(f"no catalog word matches {cls.pattern}")
