"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` (or `-rA`) to see the lines.
Every tolerance is zero unless stated otherwise; seeds are frozen here.
"""

import itertools
from random import Random

import pytest

from oracle_utils import all_labeled_graphs, brute_force_lambda, canonical_representatives
from ol21 import (
    ALL_PATTERNS,
    NO_PATTERNS,
    P1_ONLY,
    PathPattern,
    block_decomposition,
    block_inductive_label,
    build_constraints,
    degrees,
    exact_lambda,
    greedy_label,
    greedy_span_bound,
    is_valid,
    pair_class_audit,
    projective_plane_incidence,
    random_block_chain,
    random_degree_bounded_graph,
    random_tree_orientation,
    reverse,
    solve_constraints,
    span_certificate_clique,
    torus_digraph,
    torus_path_witness,
    triple_copy,
    triple_point_indices,
    underlying,
    undirected_l21_constraints,
    verify_inner_coverage,
)

ALL_S = [frozenset(c) for r in range(4) for c in itertools.combinations(PathPattern, r)]
P2_ONLY = frozenset({PathPattern.P2})
P3_ONLY = frozenset({PathPattern.P3})
P12 = frozenset({PathPattern.P1, PathPattern.P2})
P23 = frozenset({PathPattern.P2, PathPattern.P3})


def _report(cid: str, ok: bool, detail: str = "") -> None:
    print(f"[criterion {cid}] {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def test_criterion_1_greedy_bound_table():
    """>= 1000 seeded random graphs, max in/out <= 5, n <= 60: greedy span
    never exceeds the per-S bound table."""
    rng = Random(101)
    failures = []
    for i in range(1000):
        n = rng.randint(2, 60)
        k_cap = rng.randint(1, 5)
        g = random_degree_bounded_graph(n, k_cap, attempts=rng.randint(0, 3 * n), seed_or_rng=rng)
        k = degrees(g).max_in_out
        for s in ALL_S:
            span = greedy_label(g, s).span
            if span > greedy_span_bound(s, k):
                failures.append((i, n, k, sorted(p.value for p in s), span))
    _report("1", not failures, f"1000 graphs x {len(ALL_S)} constraint sets")
    assert not failures, failures[:5]


def test_criterion_2_torus_certificate():
    """k = 4..12: oriented, degree <= k+1, 2-connected, all inner pairs covered,
    hence certified span >= (k-2)^2 - 1 against max degree <= k+1."""
    bad = []
    for k in range(4, 13):
        g = torus_digraph(k)  # raises if opposite arcs slip through
        if any((v, u) in g.arcs for (u, v) in g.arcs):
            bad.append((k, "opposite arcs"))
        if degrees(g).max_in_out > k + 1:
            bad.append((k, f"degree {degrees(g).max_in_out}"))
        dec = block_decomposition(underlying(g))
        if len(dec.blocks) != 1 or dec.cut_vertices:
            bad.append((k, "not 2-connected"))
        rep = verify_inner_coverage(k)
        if rep.uncovered_list or rep.covered != (k - 2) ** 2 * ((k - 2) ** 2 - 1) // 2:
            bad.append((k, f"coverage {rep.covered}/{rep.inner_pairs_total}"))
    _report("2", not bad, "k=4..12 certified lambda_P1 >= (k-2)^2-1")
    assert not bad, bad


def test_criterion_3_case_analysis_fidelity():
    """Witness paths at k = 6, 8, 10 for every inner pair in both query orders:
    valid, made of real arcs, agreeing with the BFS oracle."""
    gaps = []
    for k in (6, 8, 10):
        bfs = verify_inner_coverage(k)
        if bfs.uncovered_list:
            gaps.append((k, "bfs uncovered"))
        arcs = torus_digraph(k).arcs
        inner = [(a, b) for a in range(1, k - 1) for b in range(1, k - 1)]
        kk = k
        for p, q in itertools.combinations(inner, 2):
            for src, dst in ((p, q), (q, p)):
                try:
                    w = torus_path_witness(kk, src, dst)
                except Exception as exc:  # CaseAnalysisGap is a failure
                    gaps.append((kk, src, dst, str(exc)))
                    continue
                if {w.path[0], w.path[-1]} != {p, q}:
                    gaps.append((kk, src, dst, "endpoints"))
                for x, y in zip(w.path, w.path[1:]):
                    if (x[0] * kk + x[1], y[0] * kk + y[1]) not in arcs:
                        gaps.append((kk, src, dst, f"missing arc {x}->{y}"))
    _report("3", not gaps, "k=6,8,10 witness vs BFS oracle")
    assert not gaps, gaps[:5]


def test_criterion_4_projective_plane_gadget():
    """q = 2, 3: points pairwise P2-constrained, degrees exactly q+1, certified
    span >= q^2+q; the exact solver confirms the Fano bound within 1e6 nodes."""
    bad = []
    for q in (2, 3):
        n = q * q + q + 1
        g = projective_plane_incidence(q)
        audit = pair_class_audit(g, range(n), P2_ONLY)
        if not audit["full_coverage"] or audit["certified_lower_bound"] != n - 1:
            bad.append((q, "audit"))
        per = degrees(g).per_vertex
        if not all(per[i] == (0, q + 1) for i in range(n)):
            bad.append((q, "point degrees"))
        if not all(per[n + j] == (q + 1, 0) for j in range(n)):
            bad.append((q, "line degrees"))
        if span_certificate_clique(build_constraints(g, P2_ONLY)) < n - 1:
            bad.append((q, "certificate"))
    fano = exact_lambda(projective_plane_incidence(2), P2_ONLY, node_budget=10**6)
    if not fano.exact or fano.lam < 6:
        bad.append((2, f"solver lam={fano.lam} exact={fano.exact} nodes={fano.nodes_explored}"))
    _report("4", not bad, f"Fano lambda_P2 = {fano.lam} within {fano.nodes_explored} nodes")
    assert not bad, bad


def test_criterion_5_triple_copy_gadget():
    """q = 2: the 21 point copies are pairwise constrained under S={P1,P2}
    (P2 inside a copy, P1 across non-twin copies, an arc between twins)."""
    from ol21 import triple_vertex_info, two_path_pairs

    g = triple_copy(2)
    pts = triple_point_indices(2)
    audit = pair_class_audit(g, pts, P12)
    ok = audit["full_coverage"] and audit["certified_lower_bound"] == 20
    p1 = two_path_pairs(g, PathPattern.P1)
    p2 = two_path_pairs(g, PathPattern.P2)
    for i, u in enumerate(pts):
        for w in pts[i + 1:]:
            iu, iw = triple_vertex_info(2, u), triple_vertex_info(2, w)
            if iu.base == iw.base:
                ok = ok and ((u, w) in g.arcs or (w, u) in g.arcs)
            elif iu.copy == iw.copy:
                ok = ok and (u, w) in p2
            else:
                ok = ok and (u, w) in p1
    _report("5", ok, "21 point copies pairwise constrained; bound >= 20")
    assert ok


@pytest.fixture(scope="module")
def criterion6_table():
    """Exact spans for every S on the criterion-6 instance pool: all oriented
    graphs on <= 4 vertices, one representative per isomorphism class on 5
    vertices, and 500 seeded random graphs with n <= 10."""
    instances = []
    for n in range(1, 5):
        instances.extend(all_labeled_graphs(n))
    instances.extend(canonical_representatives(5))
    rng = Random(606)
    from ol21 import random_oriented_graph

    for _ in range(500):
        n = rng.randint(1, 10)
        m = rng.randint(0, min(2 * n, n * (n - 1) // 2))
        instances.append(random_oriented_graph(n, m, rng))

    table = []
    mismatches = []
    for g in instances:
        lams = {}
        for s in ALL_S:
            c = build_constraints(g, s)
            r = solve_constraints(c)
            oracle = brute_force_lambda(c)
            if r.lam != oracle or not r.exact or not is_valid(c, r.witness):
                mismatches.append((g.n, sorted(g.arcs), sorted(p.value for p in s), r.lam, oracle))
            lams[s] = r.lam
        table.append((g, lams))
    return table, mismatches


def test_criterion_6_oracle_equivalence(criterion6_table):
    table, mismatches = criterion6_table
    n_graphs = len(table)
    _report("6", not mismatches, f"{n_graphs} instances x 8 constraint sets vs brute force")
    assert not mismatches, mismatches[:5]


def test_criterion_7_directed_tree_bound():
    """200 seeded random tree orientations, n <= 12: exact span under {P1} <= 4."""
    rng = Random(707)
    bad = []
    for i in range(200):
        n = rng.randint(2, 12)
        g = random_tree_orientation(n, rng)
        lam = exact_lambda(g, P1_ONLY).lam
        if lam > 4:
            bad.append((i, n, lam))
    _report("7", not bad, "200 tree orientations, lambda_P1 <= 4")
    assert not bad, bad


def test_criterion_8_identity_suite():
    """200 seeded instances n <= 10: S=all equals the undirected oracle; S={}
    equals 2*chi-2 on every instance, and the 2*chi-1 form is flagged as the
    off-by-one it is (documented finding, not a failure)."""
    from ol21 import chromatic_number, random_oriented_graph

    rng = Random(808)
    full_bad = []
    empty_bad = []
    m1_matches = 0
    for i in range(200):
        n = rng.randint(1, 10)
        m = rng.randint(0, min(2 * n, n * (n - 1) // 2))
        g = random_oriented_graph(n, m, rng)
        lam_full = exact_lambda(g, ALL_PATTERNS).lam
        lam_h = solve_constraints(undirected_l21_constraints(underlying(g))).lam
        if lam_full != lam_h:
            full_bad.append((i, lam_full, lam_h))
        lam_empty = exact_lambda(g, NO_PATTERNS).lam
        chi = chromatic_number(underlying(g))
        if lam_empty != 2 * chi - 2:
            empty_bad.append((i, lam_empty, chi))
        if lam_empty == 2 * chi - 1:
            m1_matches += 1
    ok = not full_bad and not empty_bad
    _report(
        "8",
        ok,
        f"full-S identity 200/200; empty-S = 2chi-2 on all, "
        f"= 2chi-1 on only {m1_matches}/200 (finding: the 2chi-1 form is off by one)",
    )
    assert ok, (full_bad[:3], empty_bad[:3])


def test_criterion_9_symmetry_and_monotonicity(criterion6_table):
    """Reversal symmetry and S-monotonicity across the criterion-6 instances."""
    table, _ = criterion6_table
    bad = []
    for g, lams in table:
        for s in ALL_S:
            for sp in ALL_S:
                if s <= sp and lams[s] > lams[sp]:
                    bad.append(("monotone", sorted(g.arcs), lams[s], lams[sp]))
        r = reverse(g)
        if exact_lambda(r, P3_ONLY).lam != lams[P2_ONLY]:
            bad.append(("p2-p3", sorted(g.arcs)))
        if exact_lambda(r, P1_ONLY).lam != lams[P1_ONLY]:
            bad.append(("p1", sorted(g.arcs)))
    _report("9", not bad, f"{len(table)} instances: reversal + monotone chains")
    assert not bad, bad[:5]


def test_criterion_10_block_inductive_labeler():
    """100 seeded block chains (per-block degree <= 3): the block-inductive
    labeling is valid with span <= 2k^2+6k for the per-block bound k."""
    rng = Random(1010)
    bad = []
    for i in range(100):
        g, k_gen = random_block_chain(rng.randint(2, 10), rng.randint(1, 3), rng)
        lab = block_inductive_label(g)
        c = build_constraints(g, P1_ONLY)
        from ol21 import block_degree_bound

        k = block_degree_bound(g)
        if k > k_gen:  # generator's bound must dominate the measured one
            bad.append((i, "k measurement", k, k_gen))
        if not is_valid(c, lab):
            bad.append((i, "invalid"))
        if lab.span > 2 * k * k + 6 * k:
            bad.append((i, "span", lab.span, k))
    _report("10", not bad, "100 block chains, span <= 2k^2+6k at per-block k")
    assert not bad, bad[:5]
