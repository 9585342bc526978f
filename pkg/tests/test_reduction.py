import pytest

from torusrig import errors
from torusrig.catalog import build_H, classify
from torusrig.complexes import cut_hole, rectangular_torus
from torusrig.graphs import Graph, complete_graph, freedom, is_isomorphic
from torusrig.reduction import (Certificate, EdgeClass, certify, classify_edge,
                                contract, contractible_edges, divide,
                                exhaustive_critical_cycles_through,
                                find_critical_cycle_through, fission,
                                is_critical, is_uncontractible, reduce_greedy,
                                reduction_tree, separating_cycle,
                                verify_certificate, vertex_split)
from torusrig.rigidity import generic_rank
from torusrig.sparsity import check_3_6


K5_MINUS_EDGE = Graph(range(5), complete_graph(5).edges - {(0, 1)})


def _is_h16_or_h17(g: Graph) -> bool:
    return is_isomorphic(g, complete_graph(4)) or is_isomorphic(g, K5_MINUS_EDGE)


def test_classify_edge_kinds():
    h1 = build_H(1)
    boundary = next(iter(h1.boundary_edges))
    assert classify_edge(h1, boundary) is EdgeClass.BOUNDARY_INCIDENT_FACE
    assert contractible_edges(h1)  # interior panel edges exist
    h16 = build_H(16)
    for e in h16.graph.sorted_edges():
        assert classify_edge(h16, e) is not EdgeClass.FF_CONTRACTIBLE
    with pytest.raises(errors.UnknownEdge):
        classify_edge(h1, (0, 99))


def test_uncontractible_exactly_h16_h17():
    assert is_uncontractible(build_H(16))
    assert is_uncontractible(build_H(17))
    for i in range(1, 16):
        assert not is_uncontractible(build_H(i)), i


def test_trivially_cut_torus_contractibility():
    # on the 3x3 grid every row, column and diagonal wraps around in a
    # nonfacial 3-cycle, so every FF edge is blocked; from 4x4 up the wrap
    # cycles are longer and contractible edges appear
    hole33 = cut_hole(rectangular_torus(3, 3), [0])
    assert is_uncontractible(hole33)
    hole44 = cut_hole(rectangular_torus(4, 4), [0])
    assert not is_uncontractible(hole44)


def test_contract_counts_and_freedom():
    h1 = build_H(1)
    e = contractible_edges(h1)[0]
    g2 = contract(h1, e)
    assert len(g2.graph.vertices) == len(h1.graph.vertices) - 1
    assert len(g2.graph.edges) == len(h1.graph.edges) - 3
    assert len(g2.faces) == len(h1.faces) - 2
    assert freedom(g2.graph) == freedom(h1.graph)
    assert check_3_6(g2.graph).is_tight


def test_contract_blocked_edge_raises():
    h16 = build_H(16)
    ff_blocked = [e for e in h16.graph.sorted_edges()
                  if classify_edge(h16, e) is EdgeClass.FF_BLOCKED]
    assert ff_blocked
    with pytest.raises(errors.NotContractible):
        contract(h16, ff_blocked[0])


def test_vertex_split_abstract():
    g = vertex_split(complete_graph(3), 0, 1, 2, [])
    assert is_isomorphic(g, complete_graph(4))
    g = vertex_split(complete_graph(4), 0, 1, 2, [(0, 3)])
    assert is_isomorphic(g, K5_MINUS_EDGE)


def test_vertex_split_facial():
    hole = cut_hole(rectangular_torus(3, 3), [0])
    torus = hole.torus
    star = sorted(v for f in torus.faces for v in f if 0 in f and v != 0)
    # anchors: two facial neighbours of 0; move the graph edges of one arc
    from torusrig.reduction import _link_cycle
    cyc = _link_cycle(torus, 0)
    v2, v3 = cyc[0], cyc[2]
    moved = [(0, cyc[1])]
    out = vertex_split(hole, 0, v2, v3, moved)
    assert len(out.graph.vertices) == len(hole.graph.vertices) + 1
    assert len(out.graph.edges) == len(hole.graph.edges) + 3
    assert freedom(out.graph) == freedom(hole.graph)
    assert hasattr(out, "torus")  # facial structure carried over


def test_vertex_split_falls_back_to_abstract():
    hole = cut_hole(rectangular_torus(3, 3), [0])
    from torusrig.reduction import _link_cycle
    cyc = _link_cycle(hole.torus, 0)
    # moved set that is not an arc between the anchors
    out = vertex_split(hole, 0, cyc[0], cyc[1], [(0, cyc[3])])
    assert isinstance(out, Graph)
    assert len(out.vertices) == len(hole.graph.vertices) + 1


def test_tightness_preserved_by_splits_on_corpus(tight_corpus):
    from torusrig.reduction import _link_cycle
    for hole in tight_corpus[:10]:
        torus = hole.torus
        v1 = min(hole.graph.vertices)
        cyc = _link_cycle(torus, v1)
        graph_nbrs = [t for t in cyc if (min(v1, t), max(v1, t)) in hole.graph.edges]
        if len(graph_nbrs) < 2:
            continue
        v2, v3 = graph_nbrs[0], graph_nbrs[1]
        out = vertex_split(hole.graph, v1, v2, v3, [])
        assert check_3_6(out).is_tight


def test_divide_at_detachment_walk():
    h1 = build_H(1)
    sep = separating_cycle(h1, h1.single_disc.faces)
    g1, ann = divide(h1, sep)
    assert g1.graph == h1.graph
    assert ann.edges == h1.boundary_edges
    assert is_critical(h1, sep)


def test_divide_freedom_additivity(tight_corpus):
    # inclusion-exclusion over the division at any enlargement
    checked = 0
    for hole in tight_corpus:
        region = set(hole.single_disc.faces)
        adj = hole.torus.face_adjacency()
        frontier = sorted({n for f in region for n in adj[f]} - region)
        if not frontier:
            continue
        region.add(frontier[0])
        try:
            sep = separating_cycle(hole, region)
        except errors.TorusRigError:
            continue
        g1, ann = divide(hole, sep)
        cyc_graph = Graph({v for e in sep.walk.edge_set() for v in e},
                          sep.walk.edge_set())
        assert freedom(hole.graph) == \
            freedom(g1.graph) + freedom(ann) - freedom(cyc_graph)
        checked += 1
        if checked >= 10:
            break
    assert checked >= 5


def test_critical_cycle_none_when_contraction_tight():
    h1 = build_H(1)
    for e in contractible_edges(h1):
        if check_3_6(contract(h1, e).graph, through_vertex=e[0]).is_tight:
            assert find_critical_cycle_through(h1, e) is None
            return
    pytest.skip("no tight contraction on H1")


def _breaking_edges(hole):
    for e in contractible_edges(hole):
        if not check_3_6(contract(hole, e).graph, through_vertex=e[0]).is_tight:
            yield e


def test_critical_cycle_constructive_matches_oracle():
    # catalog graphs are small enough for the exhaustive enlarged-disc oracle
    seen = 0
    for i in range(1, 18):
        hole = build_H(i)
        for e in _breaking_edges(hole):
            cycle = find_critical_cycle_through(hole, e)
            assert cycle is not None
            assert len(cycle.walk) == 9
            assert tuple(sorted(e)) in {tuple(sorted(x))
                                        for x in cycle.walk.edges()}
            assert is_critical(hole, cycle)
            oracle = exhaustive_critical_cycles_through(hole, e)
            assert oracle, (i, e)
            assert any(o.walk.canonical() == cycle.walk.canonical()
                       for o in oracle)
            seen += 1
    assert seen >= 1


def test_fission_at_detachment_walk_reproduces_catalog():
    h5 = build_H(5)
    sep = separating_cycle(h5, h5.single_disc.faces)
    g1, g2 = fission(h5, sep)
    assert g1.graph == h5.graph
    assert is_isomorphic(g2.graph, h5.graph)


def test_fission_children_tight():
    for i in range(1, 18):
        hole = build_H(i)
        for e in _breaking_edges(hole):
            cycle = find_critical_cycle_through(hole, e)
            g1, g2 = fission(hole, cycle)
            assert check_3_6(g1.graph).is_tight
            assert check_3_6(g2.graph).is_tight
            # children of a proper reducing cycle are smaller
            if len(g1.graph.vertices) < len(hole.graph.vertices):
                assert len(g2.graph.vertices) <= len(hole.graph.vertices)


def test_reduce_greedy_uncontractible_fixed_points():
    for i in (16, 17):
        leaf, moves = reduce_greedy(build_H(i))
        assert moves == []
        assert leaf.graph == build_H(i).graph


def test_reduce_greedy_h1():
    leaf, moves = reduce_greedy(build_H(1))
    assert is_uncontractible(leaf)
    assert _is_h16_or_h17(leaf.graph)
    assert len(moves) == len(build_H(1).graph.vertices) - len(leaf.graph.vertices)


def test_degree3_boundary_rule(tight_corpus):
    # a degree-3 boundary vertex incident to an FF edge: contracting that FF
    # edge stays tight
    checked = 0
    for hole in tight_corpus:
        boundary_vertices = {v for e in hole.boundary_edges for v in e}
        for v in sorted(boundary_vertices):
            if hole.graph.degree(v) != 3:
                continue
            ff = [e for e in hole.graph.sorted_edges()
                  if v in e and classify_edge(hole, e) in
                  (EdgeClass.FF_CONTRACTIBLE, EdgeClass.FF_BLOCKED)]
            if len(ff) != 1:
                continue
            e = ff[0]
            if classify_edge(hole, e) is not EdgeClass.FF_CONTRACTIBLE:
                continue
            assert check_3_6(contract(hole, e).graph,
                             through_vertex=e[0]).is_tight
            checked += 1
        if checked >= 12:
            break
    assert checked >= 3


def test_reduction_tree_h17_single_node():
    tree = reduction_tree(build_H(17))
    assert len(tree.nodes) == 1
    assert tree.root.hole.graph == build_H(17).graph


def test_reduction_tree_h1():
    tree = reduction_tree(build_H(1))
    for node in tree.nodes:
        assert freedom(node.hole.graph) == 6
        assert check_3_6(node.hole.graph).is_tight
    for leaf in tree.leaves():
        assert is_uncontractible(leaf.hole)
        assert _is_h16_or_h17(leaf.hole.graph)


def test_certify_h17_chain_length_one():
    cert = certify(build_H(17))
    assert len(cert.splits) == 1
    assert verify_certificate(cert, build_H(17).graph)


def test_certify_h16_chain_length_two():
    cert = certify(build_H(16))
    assert len(cert.splits) == 2
    assert verify_certificate(cert, build_H(16).graph)


def test_certify_chain_length_bookkeeping():
    h1 = build_H(1)
    cert = certify(h1)
    leaf, moves = reduce_greedy(h1)
    base_len = 1 if is_isomorphic(leaf.graph, complete_graph(4)) else 2
    assert len(cert.splits) == base_len + len(moves)


def test_certificate_replay_rank_steps():
    cert = certify(build_H(5))
    graphs = cert.replay()
    ranks = [generic_rank(g, trials=2, seed=3) for g in graphs]
    assert ranks[0] == 3
    assert all(b - a == 3 for a, b in zip(ranks, ranks[1:]))


def test_certificate_replay_mismatch_detected():
    cert = certify(build_H(17))
    wrong = complete_graph(5)
    with pytest.raises(errors.ReplayMismatch):
        verify_certificate(cert, wrong, check_rank=False)
