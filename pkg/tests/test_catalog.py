import pytest
from hypothesis import given, settings, strategies as st

from torusrig import errors
from torusrig.catalog import (THE_17_WORDS, CanonicalWalkClass, build_H,
                              canonical_pattern, classify, expand_word,
                              parse_word, the_17, walk_class)
from torusrig.complexes import ClosedWalk
from torusrig.fileio import record_to_hole
from torusrig.sparsity import check_3_6
from importlib import resources
import json


def test_parse_word_examples():
    assert parse_word("v9").tokens == ("v", 9)
    assert parse_word("ef1ge1fg1").tokens == ("e", "f", 1, "g", "e", 1, "f", "g", 1)
    with pytest.raises(errors.SumNot9):
        parse_word("v3v5")
    with pytest.raises(errors.BadToken):
        parse_word("q9")
    with pytest.raises(errors.BadToken):
        parse_word("e9")  # edge letter must occur twice


def test_parse_round_trip():
    for text in THE_17_WORDS:
        assert str(parse_word(text)) == text


def test_the_17_count_and_sum_rule():
    table = the_17()
    assert len(table) == 17
    for text, _ in table:
        assert parse_word(text).walk_length() == 9


def test_the_17_pairwise_distinct():
    patterns = [cls.pattern for _, cls in the_17()]
    assert len(set(patterns)) == 17


# vertex and edge counts of each form, straight off the walk structure
FORM_COUNTS = {
    "v9": (9, 9), "v3v6": (8, 9), "v4v5": (8, 9), "e3e4": (7, 8),
    "v1w2v2w4": (7, 9), "v1w2v3w3": (7, 9), "v1w2v4w2": (7, 9),
    "v1w3v2w3": (7, 9), "v2w3v2w2": (7, 9),
    "v1w2x1v2w1x2": (6, 9), "v1w1x1v2w2x2": (6, 9),
    "v3e2v1e1": (6, 8), "v3e1v2e1": (6, 8), "v2e2v2e1": (6, 8),
    "v1e1w2v1e1w1": (5, 8), "e1f2e1f1": (5, 7), "ef1ge1fg1": (4, 6),
}


def test_expansion_counts_match_forms():
    for text, cls in the_17():
        assert (cls.num_vertices, cls.num_edges) == FORM_COUNTS[text], text


@given(st.lists(st.integers(min_value=0, max_value=4), min_size=3, max_size=12),
       st.integers(min_value=0, max_value=11), st.booleans())
@settings(max_examples=80, deadline=None)
def test_canonical_pattern_invariance(seq, rot, flip):
    rot %= len(seq)
    other = seq[rot:] + seq[:rot]
    if flip:
        other = other[::-1]
    assert canonical_pattern(seq) == canonical_pattern(other)


def test_classify_all_representatives():
    for i, text in enumerate(THE_17_WORDS, start=1):
        result = classify(build_H(i))
        assert result.word == text
        assert not result.excluded


def test_classify_requires_length_9():
    from torusrig.complexes import cut_hole, rectangular_torus
    hole = cut_hole(rectangular_torus(3, 3), [0])
    with pytest.raises(errors.WalkNot9):
        classify(hole)


def test_excluded_control_graph():
    with resources.files("torusrig.data").joinpath(
            "excluded_v3v2w3w1.json").open() as fh:
        hole = record_to_hole(json.load(fh))
    result = classify(hole)
    assert result.excluded
    assert result.excluded_family == "nonalternating-pinch"
    # Maxwell count holds yet the graph is not (3,6)-tight
    from torusrig.graphs import freedom
    assert freedom(hole.graph) == 6
    assert not check_3_6(hole.graph).is_sparse


def test_representatives_all_vertices_on_boundary():
    for i in range(1, 18):
        h = build_H(i)
        assert set(h.graph.vertices) == set(h.detachment_walk().vertices)


def test_walk_class_of_manual_walk():
    w = ClosedWalk((0, 1, 2, 0, 3, 4, 5, 6, 7))
    cls = walk_class(w)
    table = dict((c.pattern, t) for t, c in the_17())
    assert table[cls.pattern] == "v3v6"
