"""Constraint graphs, validity checking, greedy labeling, and the block-inductive labeler.

For a subset S of the three length-2 path patterns, a labeling must separate
adjacent vertices by at least 2 and S-joined vertex pairs by at least 1.
The span of a labeling is its maximum label; labels start at 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import greedy_clique, max_clique
from .digraph import (
    BlockDecomposition,
    OrientedGraph,
    PathPattern,
    block_decomposition,
    induced_subdigraph_arcs,
    two_path_pairs,
    underlying,
)

ConstraintSet = frozenset  # frozenset[PathPattern]

ALL_PATTERNS: ConstraintSet = frozenset(PathPattern)
NO_PATTERNS: ConstraintSet = frozenset()

EXACT_CLIQUE_LIMIT = 64


class PartialLabelingError(ValueError):
    """A labeling did not cover every vertex of the constraint graph."""


def parse_constraint_set(text: str) -> ConstraintSet:
    """Parse "P1,P2" style lists; "all" and "none" are accepted shorthands."""
    t = text.strip().lower()
    if t in ("all", "p1,p2,p3"):
        return ALL_PATTERNS
    if t in ("none", ""):
        return NO_PATTERNS
    members = set()
    for part in text.split(","):
        name = part.strip().upper()
        try:
            members.add(PathPattern[name])
        except KeyError:
            raise ValueError(f"unknown path pattern {part.strip()!r}")
    return frozenset(members)


def constraint_set_name(s: ConstraintSet) -> str:
    if not s:
        return "none"
    return ",".join(sorted(p.value for p in s))


@dataclass(frozen=True)
class ConstraintGraph:
    """Per-pair gap requirements: 2 on underlying edges, 1 on S-joined pairs.

    A pair that is both adjacent and S-joined appears only in gap2_pairs.
    adj[v] lists (neighbor, required_gap) for every constrained partner of v.
    """

    n: int
    gap2_pairs: frozenset[tuple[int, int]]
    gap1_pairs: frozenset[tuple[int, int]]
    adj: tuple[tuple[tuple[int, int], ...], ...]


def _constraint_adj(
    n: int,
    gap2: frozenset[tuple[int, int]],
    gap1: frozenset[tuple[int, int]],
) -> tuple[tuple[tuple[int, int], ...], ...]:
    lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in gap2:
        lists[u].append((v, 2))
        lists[v].append((u, 2))
    for u, v in gap1:
        lists[u].append((v, 1))
        lists[v].append((u, 1))
    return tuple(tuple(sorted(l)) for l in lists)


def make_constraint_graph(
    n: int, gap2_pairs, gap1_pairs
) -> ConstraintGraph:
    """Build a ConstraintGraph from raw pair sets, enforcing gap2 dominance."""
    gap2 = frozenset(tuple(sorted(p)) for p in gap2_pairs)
    gap1 = frozenset(tuple(sorted(p)) for p in gap1_pairs) - gap2
    return ConstraintGraph(
        n=n, gap2_pairs=gap2, gap1_pairs=gap1, adj=_constraint_adj(n, gap2, gap1)
    )


def build_constraints(g: OrientedGraph, s: ConstraintSet) -> ConstraintGraph:
    """Adjacent pairs need gap 2; pairs joined by any pattern in s need gap 1."""
    gap2 = underlying(g).edges
    gap1: set[tuple[int, int]] = set()
    for pattern in s:
        gap1.update(two_path_pairs(g, pattern))
    return make_constraint_graph(g.n, gap2, gap1)


@dataclass(frozen=True)
class Labeling:
    """Total assignment of non-negative labels, indexed by vertex."""

    labels: tuple[int, ...]

    def __post_init__(self):
        if any(l < 0 for l in self.labels):
            raise ValueError("labels must be non-negative")

    @property
    def span(self) -> int:
        return max(self.labels, default=0)


def is_valid(c: ConstraintGraph, f: Labeling) -> bool:
    """True iff every gap-2 pair differs by >= 2 and every gap-1 pair by >= 1."""
    if len(f.labels) != c.n:
        raise PartialLabelingError(
            f"labeling covers {len(f.labels)} of {c.n} vertices"
        )
    labels = f.labels
    for u, v in c.gap2_pairs:
        if abs(labels[u] - labels[v]) < 2:
            return False
    for u, v in c.gap1_pairs:
        if labels[u] == labels[v]:
            return False
    return True


def first_fit(c: ConstraintGraph, order) -> Labeling:
    """Assign each vertex, in order, the least label violating no constraint
    against already-labeled vertices."""
    labels = [-1] * c.n
    for v in order:
        forbidden = set()
        for u, gap in c.adj[v]:
            lu = labels[u]
            if lu < 0:
                continue
            if gap == 2:
                forbidden.add(lu - 1)
                forbidden.add(lu)
                forbidden.add(lu + 1)
            else:
                forbidden.add(lu)
        l = 0
        while l in forbidden:
            l += 1
        labels[v] = l
    return Labeling(tuple(labels))


def greedy_label(g: OrientedGraph, s: ConstraintSet, order=None) -> Labeling:
    """Greedy first-fit labeling over the given vertex order (default ascending)."""
    if order is None:
        order = range(g.n)
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of all vertices")
    return first_fit(build_constraints(g, s), order)


def greedy_span_bound(s: ConstraintSet, k: int) -> int:
    """Guaranteed first-fit span bound given max in/out degree k.

    Up to 2k labeled neighbors forbid 3 labels each; each S-reachable second
    neighbor forbids one more: at most 2k^2 via P1 and k(k-1) via each of P2, P3.
    """
    bound = 6 * k
    if PathPattern.P1 in s:
        bound += 2 * k * k
    if PathPattern.P2 in s:
        bound += k * (k - 1)
    if PathPattern.P3 in s:
        bound += k * (k - 1)
    return bound


def span_certificate_clique(c: ConstraintGraph) -> int:
    """Lower bound on the minimum span: pairwise-constrained vertices need
    pairwise distinct labels, so any clique of size m certifies span >= m - 1.

    Uses a greedy clique always, plus exhaustive search when n <= 64.
    """
    n = c.n
    if n == 0:
        return 0
    masks = [0] * n
    for u, v in c.gap2_pairs:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    for u, v in c.gap1_pairs:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    size = greedy_clique(masks, n)
    if n <= EXACT_CLIQUE_LIMIT:
        exact = max_clique(masks, n)
        if exact > size:
            size = exact
    return max(size - 1, 0)


# --- block-inductive labeler ---------------------------------------------------

P1_ONLY: ConstraintSet = frozenset({PathPattern.P1})


def block_inductive_label(g: OrientedGraph) -> Labeling:
    """Label g for S={P1} with span at most 2k^2+6k, where k bounds the in- and
    out-degrees inside every block of the underlying graph.

    Strategy: peel leaf blocks off the block-cut tree, label the residual graph
    first, then fan-color each peeled step. At a cut vertex v the uncolored
    neighbors split into A (arcs into v) and B (arcs out of v); they receive
    labels from a pool of 2k free labels chosen pairwise >= 2 apart, odd pool
    positions for A and even for B, one distinct label per vertex inside each
    connected component of A (resp. B). The pairwise spacing makes any two pool
    labels compatible, which also covers A-B adjacencies. A same-pool collision
    between different components joined by a directed 2-path through an interior
    vertex is detected per block and repaired by giving that block's A and B
    vertices all-distinct pool labels (the pool is large enough: v has at most
    k in- and k out-neighbors inside one block). Remaining block vertices at
    distance >= 2 from v are first-fit labeled; their constraints stay inside
    the block, so the label budget holds.
    """
    n = g.n
    c = build_constraints(g, P1_ONLY)
    h = underlying(g)
    dec = block_decomposition(h)
    k = _max_block_degree(g, dec)
    budget = 2 * k * k + 6 * k + 1  # labels 0..budget-1
    labels = [-1] * n

    comp = _components_of(h)
    blocks_by_comp: dict[int, list[int]] = {}
    for bi, blk in enumerate(dec.blocks):
        blocks_by_comp.setdefault(comp[next(iter(blk))], []).append(bi)

    for bis in blocks_by_comp.values():
        _label_component(g, c, dec, bis, k, budget, labels)

    result = Labeling(tuple(labels))
    if not is_valid(c, result) or result.span > budget - 1:
        raise RuntimeError(
            f"block-inductive labeling violated its contract "
            f"(span {result.span}, budget {budget - 1})"
        )
    return result


def _max_block_degree(g: OrientedGraph, dec: BlockDecomposition) -> int:
    best = 0
    for blk in dec.blocks:
        indeg: dict[int, int] = dict.fromkeys(blk, 0)
        outdeg: dict[int, int] = dict.fromkeys(blk, 0)
        for u, v in induced_subdigraph_arcs(g, blk):
            outdeg[u] += 1
            indeg[v] += 1
        for v in blk:
            best = max(best, indeg[v], outdeg[v])
    return best


def _components_of(h) -> list[int]:
    comp = [-1] * h.n
    cid = 0
    for s in range(h.n):
        if comp[s] != -1:
            continue
        stack = [s]
        comp[s] = cid
        while stack:
            v = stack.pop()
            for w in h.adj[v]:
                if comp[w] == -1:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    return comp


def _label_component(g, c, dec, bis, k, budget, labels):
    blocks = dec.blocks
    alive = set(bis)

    # peel leaf blocks until one block (or a lone cut vertex) remains; replay
    # the steps backwards
    steps: list[tuple[int, list[int]]] = []
    base_vertex = -1
    while len(alive) > 1:
        membership: dict[int, list[int]] = {}
        for bi in alive:
            for v in blocks[bi]:
                membership.setdefault(v, []).append(bi)
        cuts = {v for v, bs in membership.items() if len(bs) >= 2}
        candidates = []
        for v in sorted(cuts):
            nonleaf = sum(
                1
                for bi in membership[v]
                if any(u != v and u in cuts for u in blocks[bi])
            )
            if nonleaf <= 1:
                candidates.append(v)
        v = candidates[0]  # smallest index; existence follows from the tree shape
        leaf_bis = sorted(
            bi
            for bi in membership[v]
            if not any(u != v and u in cuts for u in blocks[bi])
        )
        steps.append((v, leaf_bis))
        alive.difference_update(leaf_bis)
        if not alive:
            base_vertex = v  # every block at v was a leaf; the residue is v alone
            break

    if alive:
        base = min(alive)
        for v in sorted(blocks[base]):
            labels[v] = _first_fit_one(c, labels, v)
    else:
        labels[base_vertex] = _first_fit_one(c, labels, base_vertex)

    for v, leaf_bis in reversed(steps):
        _fan_color(g, c, blocks, leaf_bis, v, k, budget, labels)


def _first_fit_one(c, labels, v) -> int:
    forbidden = set()
    for u, gap in c.adj[v]:
        lu = labels[u]
        if lu < 0:
            continue
        if gap == 2:
            forbidden.update((lu - 1, lu, lu + 1))
        else:
            forbidden.add(lu)
    l = 0
    while l in forbidden:
        l += 1
    return l


def _fan_color(g, c, blocks, leaf_bis, v, k, budget, labels):
    interiors = sorted({u for bi in leaf_bis for u in blocks[bi]} - {v})
    a_side = [u for u in interiors if (u, v) in g.arcs]
    b_side = [u for u in interiors if (v, u) in g.arcs]

    # pool of 2k free labels, pairwise >= 2 apart, clearing v and its colored
    # neighbors' labels
    blocked = {labels[v] - 1, labels[v], labels[v] + 1}
    for x in set(g.out_adj[v]) | set(g.in_adj[v]):
        if labels[x] >= 0:
            blocked.add(labels[x])
    pool: list[int] = []
    prev = -2
    for l in range(budget):
        if l in blocked or l - prev < 2:
            continue
        pool.append(l)
        prev = l
        if len(pool) == 2 * k:
            break
    if len(pool) < 2 * k:
        raise RuntimeError("free-label pool exhausted; budget arithmetic broken")
    odd_pool = pool[0::2]
    even_pool = pool[1::2]

    for comp_vs in _underlying_components(g, a_side):
        for i, u in enumerate(sorted(comp_vs)):
            labels[u] = odd_pool[i]
    for comp_vs in _underlying_components(g, b_side):
        for i, u in enumerate(sorted(comp_vs)):
            labels[u] = even_pool[i]

    # detect within-block collisions (same pool label on a 2-path) and repair
    # that block with all-distinct pool labels
    for bi in leaf_bis:
        blk = blocks[bi]
        fan = [u for u in interiors if u in blk and labels[u] >= 0]
        if _has_conflict(c, labels, fan):
            for i, u in enumerate(sorted(u for u in a_side if u in blk)):
                labels[u] = odd_pool[i]
            for i, u in enumerate(sorted(u for u in b_side if u in blk)):
                labels[u] = even_pool[i]

    fan_set = set(a_side) | set(b_side)
    for u in interiors:
        if u not in fan_set:
            labels[u] = _first_fit_one(c, labels, u)


def _underlying_components(g, vertices) -> list[list[int]]:
    vs = set(vertices)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for s in sorted(vs):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.out_adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
            for y in g.in_adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _has_conflict(c, labels, vertices) -> bool:
    vs = set(vertices)
    for u in vertices:
        for w, gap in c.adj[u]:
            if w in vs and w > u and labels[w] >= 0:
                if abs(labels[u] - labels[w]) < gap:
                    return True
    return False


# --- serialization --------------------------------------------------------------

def format_labeling(f: Labeling) -> str:
    """One "v label" line per vertex."""
    return "\n".join(f"{v} {l}" for v, l in enumerate(f.labels)) + "\n"


def labeling_report(
    c: ConstraintGraph, f: Labeling, bound: int | None = None
) -> dict:
    report = {
        "span": f.span,
        "labels": list(f.labels),
        "valid": is_valid(c, f),
    }
    if bound is not None:
        report["bound"] = bound
        report["bound_satisfied"] = f.span <= bound
    return report
