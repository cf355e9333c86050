import itertools

from hypothesis import given, settings

from conftest import constraint_sets, oriented_graphs
from oracle_utils import brute_force_lambda
from ol21 import (
    ALL_PATTERNS,
    P1_ONLY,
    PathPattern,
    build_constraints,
    build_graph,
    chromatic_number,
    exact_lambda,
    is_valid,
    projective_plane_incidence,
    random_oriented_graph,
    random_tree_orientation,
    reverse,
    solve_constraints,
    span_certificate_clique,
    underlying,
    verify_empty_s_identity,
    verify_full_s_identity,
)

ALL_S = [frozenset(c) for r in range(4) for c in itertools.combinations(PathPattern, r)]


def test_single_arc_lambda_two_for_every_s():
    g = build_graph(2, [(0, 1)])
    for s in ALL_S:
        r = exact_lambda(g, s)
        assert r.lam == 2
        assert r.witness.labels == (0, 2)


def test_three_cycle_p1():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    r = exact_lambda(g, P1_ONLY)
    assert r.lam == 4
    assert is_valid(build_constraints(g, P1_ONLY), r.witness)


def test_directed_path_p1_lambda_three_lex_witness():
    g = build_graph(3, [(0, 1), (1, 2)])
    c = build_constraints(g, P1_ONLY)
    assert brute_force_lambda(c) == 3
    r = exact_lambda(g, P1_ONLY)
    assert r.lam == 3
    # lexicographically least optimal labeling: (0,3,1) beats e.g. (2,0,3)
    assert r.witness.labels == (0, 3, 1)


def test_empty_and_single_vertex():
    r = solve_constraints(build_constraints(build_graph(0, []), P1_ONLY))
    assert r.lam == 0 and r.witness.labels == ()
    r = solve_constraints(build_constraints(build_graph(1, []), ALL_PATTERNS))
    assert r.lam == 0 and r.witness.labels == (0,)


def test_budget_exceeded_flags_inexact():
    # path u -> b -> w: greedy gives 4, the clique certificate only 2, so the
    # solver must search; one node of budget cannot close the gap
    g = build_graph(3, [(0, 1), (1, 2)])
    r = exact_lambda(g, P1_ONLY, node_budget=1)
    assert not r.exact  # span 3 found by a greedy order but not certified
    assert r.lam == 3
    assert r.lower_bound_used == 2
    assert is_valid(build_constraints(g, P1_ONLY), r.witness)


def test_witness_deterministic():
    g = random_oriented_graph(9, 14, 42)
    a = exact_lambda(g, ALL_PATTERNS)
    b = exact_lambda(g, ALL_PATTERNS)
    assert a.lam == b.lam and a.witness == b.witness


def test_chromatic_examples():
    assert chromatic_number(underlying(build_graph(3, [(0, 1), (1, 2), (2, 0)]))) == 3
    assert chromatic_number(underlying(build_graph(2, [(0, 1)]))) == 2
    assert chromatic_number(underlying(projective_plane_incidence(2))) == 2
    assert chromatic_number(underlying(build_graph(1, []))) == 1


def test_chromatic_complete_and_cycles():
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert chromatic_number(underlying(k5)) == 5
    c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert chromatic_number(underlying(c5)) == 3


def test_empty_s_identity_reports():
    rep = verify_empty_s_identity(build_graph(2, [(0, 1)]))
    assert rep["lambda_empty"] == 2 and rep["chi"] == 2
    assert rep["matches_2chi_minus_2"] and not rep["matches_2chi_minus_1"]

    rep = verify_empty_s_identity(build_graph(3, [(0, 1), (1, 2), (2, 0)]))
    assert rep["lambda_empty"] == 4 and rep["chi"] == 3
    assert rep["matches_2chi_minus_2"]

    rep = verify_empty_s_identity(build_graph(1, []))
    assert rep["lambda_empty"] == 0 and rep["chi"] == 1
    assert rep["matches_2chi_minus_2"]


def test_full_s_identity_star_orientations():
    # every orientation of K_{1,3}: both sides must equal 4
    for states in itertools.product((0, 1), repeat=3):
        arcs = [(0, i + 1) if st else (i + 1, 0) for i, st in enumerate(states)]
        g = build_graph(4, arcs)
        rep = verify_full_s_identity(g)
        assert rep["matches"] and rep["lambda_full"] == 4


def test_full_s_identity_three_cycle_and_arc():
    assert verify_full_s_identity(build_graph(3, [(0, 1), (1, 2), (2, 0)])) == {
        "lambda_full": 4,
        "lambda_underlying": 4,
        "matches": True,
    }
    rep = verify_full_s_identity(build_graph(2, [(0, 1)]))
    assert rep["lambda_full"] == rep["lambda_underlying"] == 2


def test_random_trees_lambda_at_most_four():
    for seed in range(25):
        g = random_tree_orientation(10, seed)
        assert exact_lambda(g, P1_ONLY).lam <= 4


@given(oriented_graphs(max_n=6), constraint_sets)
@settings(max_examples=40)
def test_solver_matches_brute_force(g, s):
    c = build_constraints(g, s)
    r = solve_constraints(c)
    assert r.exact
    assert r.lam == brute_force_lambda(c)
    assert is_valid(c, r.witness) and r.witness.span == r.lam
    assert r.lam >= span_certificate_clique(c)


@given(oriented_graphs(max_n=6))
@settings(max_examples=30)
def test_monotone_and_reversal_on_small_graphs(g):
    lams = {s: exact_lambda(g, s).lam for s in ALL_S}
    for s in ALL_S:
        for sp in ALL_S:
            if s <= sp:
                assert lams[s] <= lams[sp]
    r = reverse(g)
    assert lams[frozenset({PathPattern.P2})] == exact_lambda(r, frozenset({PathPattern.P3})).lam
    assert lams[P1_ONLY] == exact_lambda(r, P1_ONLY).lam
