import pytest
from hypothesis import given

from conftest import constraint_sets, oriented_graphs
from ol21 import (
    ALL_PATTERNS,
    NO_PATTERNS,
    P1_ONLY,
    Labeling,
    PartialLabelingError,
    PathPattern,
    build_constraints,
    build_graph,
    constraint_set_name,
    degrees,
    greedy_label,
    greedy_span_bound,
    is_valid,
    parse_constraint_set,
    projective_plane_incidence,
    span_certificate_clique,
    torus_digraph,
    underlying,
    undirected_l21_constraints,
)

P2_ONLY = frozenset({PathPattern.P2})
P3_ONLY = frozenset({PathPattern.P3})

PATH = build_graph(3, [(0, 1), (1, 2)])  # u -> b -> w


def test_parse_constraint_set():
    assert parse_constraint_set("P1,P2") == {PathPattern.P1, PathPattern.P2}
    assert parse_constraint_set("all") == ALL_PATTERNS
    assert parse_constraint_set("none") == NO_PATTERNS
    assert parse_constraint_set("p3") == P3_ONLY
    with pytest.raises(ValueError):
        parse_constraint_set("P4")
    assert constraint_set_name(NO_PATTERNS) == "none"
    assert constraint_set_name(P1_ONLY) == "P1"


def test_constraints_path_p1():
    c = build_constraints(PATH, P1_ONLY)
    assert c.gap2_pairs == {(0, 1), (1, 2)}
    assert c.gap1_pairs == {(0, 2)}


def test_constraints_path_p2_empty():
    c = build_constraints(PATH, P2_ONLY)
    assert c.gap2_pairs == {(0, 1), (1, 2)}
    assert c.gap1_pairs == frozenset()


def test_adjacency_dominates_gap1():
    # (0,2) is both an edge and P1-joined through 1; it must sit in gap2 only
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    c = build_constraints(g, P1_ONLY)
    assert (0, 2) in c.gap2_pairs
    assert (0, 2) not in c.gap1_pairs


@given(oriented_graphs())
def test_full_s_equals_underlying_distance_constraints(g):
    c = build_constraints(g, ALL_PATTERNS)
    oracle = undirected_l21_constraints(underlying(g))
    assert c.gap2_pairs == oracle.gap2_pairs
    assert c.gap1_pairs == oracle.gap1_pairs


def test_is_valid_examples():
    c = build_constraints(build_graph(2, [(0, 1)]), P1_ONLY)
    assert is_valid(c, Labeling((0, 2)))
    assert not is_valid(c, Labeling((0, 1)))
    cp = build_constraints(PATH, P1_ONLY)
    f = Labeling((2, 0, 3))
    assert is_valid(cp, f) and f.span == 3
    with pytest.raises(PartialLabelingError):
        is_valid(cp, Labeling((0, 2)))


def test_labeling_rejects_negative():
    with pytest.raises(ValueError):
        Labeling((0, -1))


def test_greedy_path_p1_identity_order():
    lab = greedy_label(PATH, P1_ONLY)
    assert lab.labels == (0, 2, 4)
    assert lab.span == 4  # exact optimum is 3: greedy is suboptimal here


def test_greedy_common_out_neighbor_p2():
    # 0 -> 1 <- 2: both endpoints are adjacent to the middle, so the third
    # vertex must clear 1's label by 2 and 0's by 1: first fit gives 4
    g = build_graph(3, [(0, 1), (2, 1)])
    lab = greedy_label(g, P2_ONLY)
    assert lab.labels == (0, 2, 4)
    assert is_valid(build_constraints(g, P2_ONLY), lab)


def test_greedy_validates_order():
    with pytest.raises(ValueError):
        greedy_label(PATH, P1_ONLY, [0, 1])
    with pytest.raises(ValueError):
        greedy_label(PATH, P1_ONLY, [0, 1, 1])


def test_greedy_deterministic():
    g = torus_digraph(5)
    a = greedy_label(g, ALL_PATTERNS)
    b = greedy_label(g, ALL_PATTERNS)
    assert a == b


@given(oriented_graphs(), constraint_sets)
def test_greedy_always_valid_and_bounded(g, s):
    lab = greedy_label(g, s)
    c = build_constraints(g, s)
    assert is_valid(c, lab)
    assert lab.span <= greedy_span_bound(s, degrees(g).max_in_out)


@given(oriented_graphs())
def test_reversal_swaps_constraint_graphs(g):
    from ol21 import reverse

    left = build_constraints(reverse(g), P2_ONLY)
    right = build_constraints(g, P3_ONLY)
    assert left.gap2_pairs == right.gap2_pairs
    assert left.gap1_pairs == right.gap1_pairs


def test_greedy_torus_bound_instance():
    g = torus_digraph(6)
    lab = greedy_label(g, P1_ONLY)
    k = degrees(g).max_in_out
    assert k == 7
    assert lab.span <= 2 * k * k + 6 * k  # 140
    assert is_valid(build_constraints(g, P1_ONLY), lab)


def test_span_bound_table():
    for k in range(0, 6):
        assert greedy_span_bound(NO_PATTERNS, k) == 6 * k
        assert greedy_span_bound(P1_ONLY, k) == 2 * k * k + 6 * k
        assert greedy_span_bound(P2_ONLY, k) == k * k + 5 * k
        assert greedy_span_bound(P3_ONLY, k) == k * k + 5 * k
        assert greedy_span_bound(frozenset({PathPattern.P2, PathPattern.P3}), k) == 2 * k * k + 4 * k
        assert greedy_span_bound(frozenset({PathPattern.P1, PathPattern.P2}), k) == 3 * k * k + 5 * k
        assert greedy_span_bound(ALL_PATTERNS, k) == 4 * k * k + 4 * k


def test_certificate_single_arc():
    c = build_constraints(build_graph(2, [(0, 1)]), NO_PATTERNS)
    assert span_certificate_clique(c) == 1  # actual lambda is 2: not tight


def test_certificate_fano_points():
    g = projective_plane_incidence(2)
    c = build_constraints(g, P2_ONLY)
    assert span_certificate_clique(c) >= 6


def test_certificate_torus_inner_clique():
    g = torus_digraph(6)
    c = build_constraints(g, P1_ONLY)
    assert span_certificate_clique(c) >= 15  # the 16 inner vertices pairwise joined


@given(oriented_graphs(max_n=6), constraint_sets)
def test_certificate_never_exceeds_greedy_span(g, s):
    c = build_constraints(g, s)
    assert span_certificate_clique(c) <= greedy_label(g, s).span
