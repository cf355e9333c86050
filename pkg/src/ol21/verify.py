"""Verification sweeps: machine-checkable reports for the generated families,
the closed-form identities, and the reversal symmetry."""

from __future__ import annotations

from itertools import combinations
from random import Random

from .constructions import (
    pair_class_audit,
    projective_plane_incidence,
    torus_digraph,
    torus_path_witness,
    triple_copy,
    triple_point_indices,
    triple_vertex_info,
    verify_inner_coverage,
)
from .digraph import (
    PathPattern,
    block_decomposition,
    degrees,
    reverse,
    underlying,
)
from .exact import (
    DEFAULT_NODE_BUDGET,
    exact_lambda,
    verify_empty_s_identity,
    verify_full_s_identity,
)
from .randgraph import random_oriented_graph

P1 = frozenset({PathPattern.P1})
P2 = frozenset({PathPattern.P2})
P3 = frozenset({PathPattern.P3})
P12 = frozenset({PathPattern.P1, PathPattern.P2})


def _check(checks: list, name: str, passed: bool, **details) -> None:
    entry = {"name": name, "passed": bool(passed)}
    if details:
        entry.update(details)
    checks.append(entry)


def _suite(name: str, checks: list) -> dict:
    return {"suite": name, "checks": checks, "passed": all(c["passed"] for c in checks)}


def torus_suite(k_min: int = 4, k_max: int = 10, witness_ks=None) -> dict:
    """Degree bound, orientedness, 2-connectivity, inner coverage, and witness
    agreement with the BFS oracle for every k in range."""
    checks: list = []
    if witness_ks is None:
        witness_ks = [k for k in range(k_min, k_max + 1)]
    for k in range(k_min, k_max + 1):
        g = torus_digraph(k)  # raises ConstructionInvalid on opposite arcs
        opp = sum(1 for (u, v) in g.arcs if (v, u) in g.arcs)
        _check(checks, f"torus-k{k}-no-opposite-arcs", opp == 0)
        mx = degrees(g).max_in_out
        _check(checks, f"torus-k{k}-degree-bound", mx <= k + 1, max_in_out=mx, limit=k + 1)
        dec = block_decomposition(underlying(g))
        _check(
            checks,
            f"torus-k{k}-two-connected",
            len(dec.blocks) == 1 and not dec.cut_vertices,
            blocks=len(dec.blocks),
        )
        rep = verify_inner_coverage(k)
        _check(
            checks,
            f"torus-k{k}-inner-coverage",
            not rep.uncovered_list,
            pairs=rep.inner_pairs_total,
            covered=rep.covered,
            certified_lower_bound=(k - 2) ** 2 - 1,
        )
        if k in witness_ks:
            inner = [(a, b) for a in range(1, k - 1) for b in range(1, k - 1)]
            gaps = 0
            for p, q in combinations(inner, 2):
                try:
                    torus_path_witness(k, p, q)
                    torus_path_witness(k, q, p)
                except Exception:
                    gaps += 1
            _check(
                checks,
                f"torus-k{k}-witness-vs-bfs",
                gaps == 0 and len(rep.witness_map) == rep.inner_pairs_total,
                gaps=gaps,
            )
    return _suite("torus", checks)


def plane_suite(qs=(2, 3, 5, 7)) -> dict:
    """Incidence axioms, exact degrees, and the pairwise-P2 point certificate."""
    checks: list = []
    for q in qs:
        g = projective_plane_incidence(q)
        n = q * q + q + 1
        _check(checks, f"plane-q{q}-order", g.n == 2 * n, vertices=g.n)
        per = degrees(g).per_vertex
        pts_ok = all(per[i] == (0, q + 1) for i in range(n))
        lines_ok = all(per[n + j] == (q + 1, 0) for j in range(n))
        _check(checks, f"plane-q{q}-degrees", pts_ok and lines_ok, expected=q + 1)
        lines_of = [frozenset(g.out_adj[i]) for i in range(n)]
        two_pts = all(
            len(lines_of[i] & lines_of[j]) == 1 for i, j in combinations(range(n), 2)
        )
        _check(checks, f"plane-q{q}-two-points-one-line", two_pts)
        pts_on = [frozenset(g.in_adj[n + j]) for j in range(n)]
        two_lines = all(
            len(pts_on[i] & pts_on[j]) == 1 for i, j in combinations(range(n), 2)
        )
        _check(checks, f"plane-q{q}-two-lines-one-point", two_lines)
        audit = pair_class_audit(g, range(n), P2)
        _check(
            checks,
            f"plane-q{q}-points-pairwise-p2",
            audit["full_coverage"] and audit["certified_lower_bound"] == n - 1,
            lower_bound=audit["certified_lower_bound"],
        )
    return _suite("plane", checks)


def triple_suite(qs=(2,)) -> dict:
    """Pair-class trichotomy over the point copies and the 3k-style certificate."""
    checks: list = []
    for q in qs:
        g = triple_copy(q)
        n = q * q + q + 1
        _check(checks, f"triple-q{q}-order", g.n == 6 * n, vertices=g.n)
        pts = triple_point_indices(q)
        audit = pair_class_audit(g, pts, P12)
        _check(
            checks,
            f"triple-q{q}-full-coverage",
            audit["full_coverage"]
            and audit["certified_lower_bound"] == 3 * n - 1,
            lower_bound=audit["certified_lower_bound"],
        )
        tri_ok = _triple_trichotomy_holds(g, q, pts)
        _check(checks, f"triple-q{q}-trichotomy", tri_ok)
        mx = degrees(g).max_in_out
        _check(checks, f"triple-q{q}-max-degree", mx == q + 2, max_in_out=mx)
    return _suite("triple", checks)


def _triple_trichotomy_holds(g, q: int, pts) -> bool:
    """Same copy => P2-joined; different non-twin copies => P1-joined;
    twins => adjacent (in both cases checked against the raw arc structure)."""
    from .digraph import two_path_pairs

    p1 = two_path_pairs(g, PathPattern.P1)
    p2 = two_path_pairs(g, PathPattern.P2)
    for u, w in combinations(pts, 2):
        iu = triple_vertex_info(q, u)
        iw = triple_vertex_info(q, w)
        pair = (u, w)
        if iu.base == iw.base and iu.copy != iw.copy:  # twins
            if (u, w) not in g.arcs and (w, u) not in g.arcs:
                return False
        elif iu.copy == iw.copy:
            if pair not in p2:
                return False
        else:
            if pair not in p1:
                return False
    return True


def identities_suite(
    n_max: int = 8,
    count: int = 200,
    seed: int = 1,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict:
    """Random-instance sweep of the S=all and S={} identities.

    The S=all span must match the undirected oracle on every instance. For
    S={} the observed span is compared against both 2*chi-1 and 2*chi-2; the
    sweep passes when it always equals 2*chi-2, and the per-formula match
    counts are reported so the off-by-one in the 2*chi-1 form stays visible.
    """
    rng = Random(seed)
    full_bad = 0
    m1_matches = 0
    m2_matches = 0
    for _ in range(count):
        n = rng.randint(1, n_max)
        m = rng.randint(0, min(2 * n, n * (n - 1) // 2))
        g = random_oriented_graph(n, m, rng)
        rep = verify_full_s_identity(g, node_budget=node_budget)
        if not rep["matches"]:
            full_bad += 1
        erep = verify_empty_s_identity(g, node_budget=node_budget)
        m1_matches += erep["matches_2chi_minus_1"]
        m2_matches += erep["matches_2chi_minus_2"]
    checks: list = []
    _check(checks, "full-s-equals-underlying-l21", full_bad == 0, mismatches=full_bad)
    _check(
        checks,
        "empty-s-equals-2chi-minus-2",
        m2_matches == count,
        matches_2chi_minus_2=m2_matches,
        matches_2chi_minus_1=m1_matches,
        instances=count,
        finding="2chi-1 overshoots by one whenever the graph has an edge",
    )
    return _suite("identities", checks)


def symmetry_suite(
    n_max: int = 10,
    count: int = 100,
    seed: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> dict:
    """Arc reversal swaps P2 and P3 and fixes P1: exact spans must agree."""
    rng = Random(seed)
    p23_bad = 0
    p1_bad = 0
    for _ in range(count):
        n = rng.randint(1, n_max)
        m = rng.randint(0, min(2 * n, n * (n - 1) // 2))
        g = random_oriented_graph(n, m, rng)
        r = reverse(g)
        if exact_lambda(g, P2, node_budget=node_budget).lam != exact_lambda(
            r, P3, node_budget=node_budget
        ).lam:
            p23_bad += 1
        if exact_lambda(g, P1, node_budget=node_budget).lam != exact_lambda(
            r, P1, node_budget=node_budget
        ).lam:
            p1_bad += 1
    checks: list = []
    _check(checks, "p2-equals-p3-of-reverse", p23_bad == 0, mismatches=p23_bad)
    _check(checks, "p1-fixed-under-reverse", p1_bad == 0, mismatches=p1_bad)
    return _suite("symmetry", checks)
