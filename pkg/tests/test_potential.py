"""The potentially-H decision engines and their agreement.

The seeded placement search is the production engine.  Two independent
oracles keep it honest: direct enumeration of labeled graphs, and a
breadth-first walk of the 2-switch graph.  For K_{p,1,1} specifically
there is also a test-local detector (an adjacent pair with p common
neighbors) that shares no code with the library's subgraph search.
"""

from itertools import combinations

import pytest

from potseq.graphs import SimpleGraph, graph_from_mask, realize
from potseq.potential import (
    TargetPattern,
    certificate_errors,
    contains_subgraph,
    is_potentially,
    is_potentially_by_enumeration,
    is_potentially_by_switching,
    make_kp11,
    realization_classes,
    realize_with_forced_edges,
    two_switch_neighbors,
)
from potseq.sequences import DegreeSequence, enumerate_graphical, parse_sequence


def has_kp11_by_common_neighbors(g, p):
    """Independent detector: some edge uv with p common neighbors."""
    masks = g.adjacency_masks()
    for u, v in g.edges:
        common = masks[u] & masks[v] & ~(1 << u) & ~(1 << v)
        if common.bit_count() >= p:
            return True
    return False


def test_make_kp11_shapes():
    t = make_kp11(3)
    assert t.graph.n == 5
    assert len(t.graph.edges) == 7
    assert sorted(t.graph.degrees(), reverse=True) == [4, 4, 2, 2, 2]
    assert t.graph.has_edge(0, 1)
    t1 = make_kp11(1)
    assert t1.graph.edges == SimpleGraph.complete(3).edges
    with pytest.raises(ValueError):
        make_kp11(0)


def test_target_pattern_rejects_isolated_vertices():
    with pytest.raises(ValueError):
        TargetPattern(SimpleGraph(3, frozenset({(0, 1)})))


def test_contains_subgraph_agrees_with_common_neighbor_rule_on_5_vertices():
    t = make_kp11(3)
    for mask in range(1 << 10):
        g = graph_from_mask(5, mask)
        found = contains_subgraph(g, t)
        assert (found is not None) == has_kp11_by_common_neighbors(g, 3), mask
        if found is not None:
            assert not certificate_errors(
                DegreeSequence(tuple(g.degrees())), t, g, found
            )


def test_contains_subgraph_respects_all_target_edges():
    # C5 contains no triangle, so no K_{1,1,1}
    assert contains_subgraph(SimpleGraph.cycle(5), make_kp11(1)) is None
    assert contains_subgraph(SimpleGraph.complete(5), make_kp11(3)) is not None


def test_paper_examples_for_k311():
    t = make_kp11(3)
    assert is_potentially(parse_sequence("5^2,3^4"), t).answer
    assert not is_potentially(parse_sequence("4^6"), t).answer
    assert not is_potentially(parse_sequence("6^1,3^6"), t).answer


def test_positive_verdicts_carry_valid_certificates():
    t = make_kp11(3)
    for text in ("5^2,3^4", "4^7", "5^1,4^5,1^1", "4^5,2^2"):
        seq = parse_sequence(text)
        v = is_potentially(seq, t)
        assert v.answer
        assert not certificate_errors(seq, t, v.certificate, v.embedding)


def test_negative_verdicts_carry_nothing():
    v = is_potentially(parse_sequence("4^6"), make_kp11(3))
    assert not v.answer
    assert v.certificate is None and v.embedding is None


def test_non_graphical_input_rejected():
    with pytest.raises(ValueError):
        is_potentially(DegreeSequence((3, 1, 1)), make_kp11(1))


def test_target_larger_than_n_is_never_potential():
    assert not is_potentially(DegreeSequence((2, 2, 2)), make_kp11(2)).answer


def test_two_high_degree_terms_are_necessary():
    # K_{p,1,1} has two vertices of degree p+1, so any sequence with
    # fewer than two such terms must fail regardless of realization
    for p in (1, 2, 3):
        t = make_kp11(p)
        for n in range(p + 2, 7):
            for s in range(0, n * (n - 1) + 1, 2):
                for seq in enumerate_graphical(n, s):
                    if sum(1 for d in seq if d >= p + 1) < 2:
                        assert not is_potentially(seq, t).answer, (p, seq)


def test_containment_is_monotone_in_p():
    # K_{3,1,1} contains K_{2,1,1} contains K_{1,1,1}
    for text in ("5^2,3^4", "4^7", "4^6", "3^4"):
        seq = parse_sequence(text)
        answers = [is_potentially(seq, make_kp11(p)).answer for p in (3, 2, 1)]
        assert answers == sorted(answers)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_three_engines_agree_on_all_graphical_sequences_up_to_6(p):
    t = make_kp11(p)
    for n in range(t.graph.n, 7):
        for s in range(0, n * (n - 1) + 1, 2):
            for seq in enumerate_graphical(n, s):
                a = is_potentially(seq, t).answer
                b = is_potentially_by_enumeration(seq, t)
                c = is_potentially_by_switching(seq, t)
                assert a == b == c, (p, seq)


def test_switching_engine_alone_on_a_7_vertex_sample():
    t = make_kp11(3)
    for text in ("6^1,3^6", "4^7", "5^2,4^2,3^2,2^1", "3^6,2^1"):
        seq = parse_sequence(text)
        assert is_potentially_by_switching(seq, t) == is_potentially(seq, t).answer


def test_two_switch_preserves_degrees_and_reaches_all_classes():
    seq = DegreeSequence((2, 2, 2, 2, 2, 2))
    for g in two_switch_neighbors(realize(seq)):
        assert sorted(g.degrees()) == [2] * 6
    # 2-regular on 6 vertices: the hexagon and the two-triangle graph
    classes = list(realization_classes(seq))
    assert len(classes) == 2


def test_realization_class_counts_on_small_sequences():
    # (1,1): one class; (2,1,1)+(0): path plus isolated vertex
    assert len(list(realization_classes(DegreeSequence((1, 1))))) == 1
    assert len(list(realization_classes(DegreeSequence((2, 1, 1, 0))))) == 1
    assert len(list(realization_classes(DegreeSequence((3, 3, 3, 3))))) == 1


def test_4_regular_on_6_vertices_is_unique_and_k311_free():
    # the one class is the octahedron, whose every edge has exactly
    # two common neighbors; this is why 4^6 is the n=6 exception
    classes = list(realization_classes(DegreeSequence((4,) * 6)))
    assert len(classes) == 1
    g = classes[0]
    masks = g.adjacency_masks()
    assert all((masks[u] & masks[v]).bit_count() == 2 for u, v in g.edges)
    assert contains_subgraph(g, make_kp11(3)) is None


def test_realize_with_forced_edges_completes_or_reports_none():
    seq = DegreeSequence((4,) * 5)
    forced = list(combinations(range(4), 2))
    g = realize_with_forced_edges(seq, forced)
    assert g is not None
    assert sorted(g.degrees()) == [4] * 5
    for u, v in forced:
        assert g.has_edge(u, v)
    # joining the two endpoints of a path leaves its middle slot stranded
    assert realize_with_forced_edges(DegreeSequence((2, 1, 1)), [(1, 2)]) is None
    assert realize_with_forced_edges(DegreeSequence((2, 1, 1)), [(0, 1)]) is not None


def test_certificate_errors_catches_each_defect():
    t = make_kp11(3)
    seq = parse_sequence("5^2,3^4")
    v = is_potentially(seq, t)
    good_graph, good_emb = v.certificate, v.embedding
    assert certificate_errors(seq, t, good_graph, good_emb) == []

    wrong_seq = parse_sequence("4^6")
    assert certificate_errors(wrong_seq, t, good_graph, good_emb)

    not_injective = dict(good_emb)
    not_injective[1] = not_injective[0]
    assert certificate_errors(seq, t, good_graph, not_injective)

    missing = dict(good_emb)
    del missing[4]
    assert certificate_errors(seq, t, good_graph, missing)

    # strip an edge the embedding needs
    u, v2 = good_emb[0], good_emb[1]
    broken = good_graph.without_edges([(u, v2)])
    assert certificate_errors(seq, t, broken, good_emb)
