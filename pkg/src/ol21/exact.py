"""Exact minimum-span computation by branch and bound, plus closed-form checks.

Desk-scale only: the search is exhaustive and certifies optimality, with a
configurable node budget. Results returned after a blown budget are flagged
inexact and carry the best bounds found.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from random import Random

from .cliques import greedy_clique, max_clique
from .digraph import OrientedGraph, UnderlyingGraph, underlying
from .labeling import (
    ALL_PATTERNS,
    ConstraintGraph,
    ConstraintSet,
    Labeling,
    build_constraints,
    first_fit,
    make_constraint_graph,
    span_certificate_clique,
)

DEFAULT_NODE_BUDGET = 10**8

EXACT_CLIQUE_LIMIT = 64


class BudgetExceededError(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class _Budget(Exception):
    pass


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact solve.

    When exact is True, lam is the minimum span, witness is the
    lexicographically least optimal labeling, and the search proved that no
    labeling of span lam-1 exists. When False (budget hit), lam is the best
    upper bound found and lower_bound_used the best lower bound.
    """

    lam: int
    witness: Labeling
    nodes_explored: int
    lower_bound_used: int
    exact: bool
    wall_ms: float

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "witness": list(self.witness.labels),
            "exact": self.exact,
            "nodes": self.nodes_explored,
            "lower_bound": self.lower_bound_used,
            "wall_ms": self.wall_ms,
        }


def _seed_orders(c: ConstraintGraph) -> list[list[int]]:
    """Eight deterministic vertex orders used to seed the upper bound."""
    n = c.n
    cdeg = [len(c.adj[v]) for v in range(n)]
    orders = [
        list(range(n)),
        list(reversed(range(n))),
        sorted(range(n), key=lambda v: (-cdeg[v], v)),
        sorted(range(n), key=lambda v: (cdeg[v], v)),
    ]
    for seed in range(4):
        order = list(range(n))
        Random(seed).shuffle(order)
        orders.append(order)
    return orders


def solve_constraints(
    c: ConstraintGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExactResult:
    """Minimum span of a constraint graph, with the lexicographically least
    optimal labeling as witness.

    Branching follows a fixed max-constraint-degree order; labels run over
    0..incumbent-1 with forward-checked domains, the clique certificate stops
    the search once matched, and mirror assignments are pruned by capping the
    first branched vertex's label at half the incumbent span (label
    complementation f -> span - f is the only label symmetry). The proven
    optimum is then re-searched in vertex order for the lex-least witness.
    """
    t0 = time.perf_counter()
    n = c.n
    if n == 0:
        return ExactResult(0, Labeling(()), 0, 0, True, _ms(t0))

    best_lab = None
    best = None
    for order in _seed_orders(c):
        lab = first_fit(c, order)
        if best is None or lab.span < best:
            best = lab.span
            best_lab = lab
    assert best is not None and best_lab is not None
    lb = span_certificate_clique(c)

    adj = c.adj
    nodes = 0
    exact = True

    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    assignment = [-1] * n
    domains = [(1 << (best + 1)) - 1] * n

    def dfs(i: int) -> None:
        nonlocal best, best_lab, nodes
        if best <= lb:
            return
        if i == n:
            span = max(assignment)
            if span < best:
                best = span
                best_lab = Labeling(tuple(assignment))
            return
        v = order[i]
        cand = domains[v]
        while cand:
            bit = cand & -cand
            l = bit.bit_length() - 1
            cand ^= bit
            if l >= best:  # only labels 0..best-1 can beat the incumbent
                return
            if i == 0 and l > (best - 1) // 2:  # mirror prune
                return
            nodes += 1
            if nodes > node_budget:
                raise _Budget()
            assignment[v] = l
            saved: list[tuple[int, int]] = []
            feasible = True
            for u, gap in adj[v]:
                if assignment[u] != -1:
                    continue
                rm = ((7 << l) >> 1) if gap == 2 else (1 << l)
                nd = domains[u] & ~rm
                if nd != domains[u]:
                    saved.append((u, domains[u]))
                    domains[u] = nd
                    if nd & ((1 << best) - 1) == 0:
                        feasible = False
                        break
            if feasible:
                dfs(i + 1)
            for u, d in saved:
                domains[u] = d
            assignment[v] = -1
            if best <= lb:
                return

    if best > lb:
        try:
            dfs(0)
        except _Budget:
            exact = False

    witness = best_lab
    if exact:
        lex, nodes, ok = _lex_least(c, best, nodes, node_budget)
        if ok:
            witness = lex
        else:
            exact = False
    return ExactResult(best, witness, nodes, lb, exact, _ms(t0))


def _lex_least(
    c: ConstraintGraph, cap: int, nodes: int, node_budget: int
) -> tuple[Labeling | None, int, bool]:
    """First valid labeling with labels <= cap in vertex order, labels ascending."""
    n = c.n
    adj = c.adj
    assignment = [-1] * n
    domains = [(1 << (cap + 1)) - 1] * n

    def go(v: int) -> bool:
        nonlocal nodes
        cand = domains[v]
        while cand:
            bit = cand & -cand
            l = bit.bit_length() - 1
            cand ^= bit
            nodes += 1
            if nodes > node_budget:
                raise _Budget()
            assignment[v] = l
            saved: list[tuple[int, int]] = []
            feasible = True
            for u, gap in adj[v]:
                if assignment[u] != -1:
                    continue
                rm = ((7 << l) >> 1) if gap == 2 else (1 << l)
                nd = domains[u] & ~rm
                if nd != domains[u]:
                    saved.append((u, domains[u]))
                    domains[u] = nd
                    if nd == 0:
                        feasible = False
                        break
            if feasible and (v + 1 == n or go(v + 1)):
                return True
            for u, d in saved:
                domains[u] = d
            assignment[v] = -1
        return False

    try:
        found = go(0) if n else True
    except _Budget:
        return None, nodes, False
    if not found:
        raise RuntimeError("lex re-search failed below a proven-feasible span")
    return Labeling(tuple(assignment)), nodes, True


def exact_lambda(
    g: OrientedGraph, s: ConstraintSet, node_budget: int = DEFAULT_NODE_BUDGET
) -> ExactResult:
    """Minimum span over all valid labelings of g under constraint set s."""
    return solve_constraints(build_constraints(g, s), node_budget=node_budget)


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


# --- chromatic number -----------------------------------------------------------

def chromatic_number(h: UnderlyingGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, then
    binary search with backtracking k-colorability."""
    n = h.n
    if n == 0:
        return 0
    if not h.edges:
        return 1
    masks = [0] * n
    for u, v in h.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    lo = greedy_clique(masks, n)
    if n <= EXACT_CLIQUE_LIMIT:
        lo = max(lo, max_clique(masks, n))
    hi = _dsatur_colors(h)
    nodes = [0]
    while lo < hi:
        mid = (lo + hi) // 2
        if _k_colorable(h, masks, mid, nodes, node_budget):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _dsatur_colors(h: UnderlyingGraph) -> int:
    n = h.n
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degs = [len(h.adj[v]) for v in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] == -1),
            key=lambda u: (len(neighbor_colors[u]), degs[u], -u),
        )
        cands = neighbor_colors[v]
        col = 0
        while col in cands:
            col += 1
        color[v] = col
        for w in h.adj[v]:
            neighbor_colors[w].add(col)
    return max(color) + 1


def _k_colorable(
    h: UnderlyingGraph, masks: list[int], k: int, nodes: list[int], budget: int
) -> bool:
    n = h.n
    order = sorted(range(n), key=lambda v: (-len(h.adj[v]), v))
    color = [-1] * n

    def go(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        seen = 0
        for w in h.adj[v]:
            if color[w] != -1:
                seen |= 1 << color[w]
        limit = min(k, used + 1)  # a fresh color's index is interchangeable
        for col in range(limit):
            if seen >> col & 1:
                continue
            nodes[0] += 1
            if nodes[0] > budget:
                raise BudgetExceededError(nodes[0])
            color[v] = col
            if go(i + 1, max(used, col + 1)):
                return True
            color[v] = -1
        return False

    return go(0, 0)


# --- identity verification oracles ----------------------------------------------

def undirected_l21_constraints(h: UnderlyingGraph) -> ConstraintGraph:
    """Classic undirected L(2,1) constraints straight from BFS distances:
    gap 2 at distance 1, gap 1 at distance exactly 2."""
    gap2 = set(h.edges)
    gap1: set[tuple[int, int]] = set()
    for src in range(h.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            if dist[v] == 2:
                continue
            for w in h.adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for v, d in dist.items():
            if d == 2 and src < v:
                gap1.add((src, v))
    return make_constraint_graph(h.n, gap2, gap1)


def verify_empty_s_identity(
    g: OrientedGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> dict:
    """Compare the exact S={} span against both 2*chi-1 and 2*chi-2.

    With no gap-1 pairs, labeling each color class with an even label gives
    span 2*(chi-1), and any valid labeling collapses to a proper coloring with
    floor(span/2)+1 colors, so 2*chi-2 is the value forced by direct analysis;
    both formulas are reported.
    """
    lam = exact_lambda(g, frozenset(), node_budget=node_budget).lam
    chi = chromatic_number(underlying(g), node_budget=node_budget)
    return {
        "lambda_empty": lam,
        "chi": chi,
        "formula_2chi_minus_1": 2 * chi - 1,
        "matches_2chi_minus_1": lam == 2 * chi - 1,
        "formula_2chi_minus_2": 2 * chi - 2,
        "matches_2chi_minus_2": lam == 2 * chi - 2,
    }


def verify_full_s_identity(
    g: OrientedGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> dict:
    """Exact span with S={P1,P2,P3} must equal the undirected L(2,1) number of
    the underlying graph, computed via the independent BFS-distance oracle."""
    lam_full = exact_lambda(g, ALL_PATTERNS, node_budget=node_budget).lam
    lam_h = solve_constraints(
        undirected_l21_constraints(underlying(g)), node_budget=node_budget
    ).lam
    return {
        "lambda_full": lam_full,
        "lambda_underlying": lam_h,
        "matches": lam_full == lam_h,
    }
