"""Oriented graph core: validation, degrees, blocks, and two-step path patterns.

An oriented graph is a directed graph whose underlying undirected graph is
simple: no self-loops, no parallel arcs, and never both (u, v) and (v, u).
Vertices are dense integer indices 0..n-1 so adjacency can be array-backed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    """Invalid graph input or malformed graph file."""


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at vertex {u}")
        self.vertex = u


class OppositeArcError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"both ({u},{v}) and ({v},{u}) present")
        self.arc = (u, v)


class DuplicateArcError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"arc ({u},{v}) listed twice")
        self.arc = (u, v)


class VertexOutOfRangeError(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} outside range 0..{n - 1}")
        self.vertex = u


class EdgeListParseError(GraphError):
    """Malformed edge-list text."""


class PathPattern(enum.Enum):
    """The three orientations of a length-2 path joining u and w via middle b."""

    P1 = "P1"  # u -> b -> w, a directed path
    P2 = "P2"  # u -> b <- w, common out-neighbor
    P3 = "P3"  # u <- b -> w, common in-neighbor


@dataclass(frozen=True)
class OrientedGraph:
    """Immutable oriented graph; construct through build_graph()."""

    n: int
    arcs: frozenset[tuple[int, int]]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class UnderlyingGraph:
    """Simple undirected graph obtained by forgetting arc directions."""

    n: int
    edges: frozenset[tuple[int, int]]  # (u, v) with u < v
    adj: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"UnderlyingGraph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected blocks (as vertex sets), cut vertices, and the block-cut tree.

    tree_edges holds (block_index, cut_vertex) incidences; isolated vertices
    appear as singleton blocks and a bridge as a 2-vertex block.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class DegreeSummary:
    per_vertex: tuple[tuple[int, int], ...]  # (in-degree, out-degree)
    max_in_out: int


def build_graph(n: int, arcs) -> OrientedGraph:
    """Validate and build an oriented graph from an iterable of ordered pairs."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in arcs:
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n)
        if u == v:
            raise SelfLoopError(u)
        if (u, v) in seen:
            raise DuplicateArcError(u, v)
        if (v, u) in seen:
            raise OppositeArcError(v, u)
        seen.add((u, v))
    out_lists: list[list[int]] = [[] for _ in range(n)]
    in_lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        out_lists[u].append(v)
        in_lists[v].append(u)
    out_adj = tuple(tuple(sorted(l)) for l in out_lists)
    in_adj = tuple(tuple(sorted(l)) for l in in_lists)
    return OrientedGraph(n=n, arcs=frozenset(seen), out_adj=out_adj, in_adj=in_adj)


def reverse(g: OrientedGraph) -> OrientedGraph:
    """Flip every arc; an involution that swaps the P2 and P3 patterns."""
    return build_graph(g.n, [(v, u) for (u, v) in g.arcs])


def degrees(g: OrientedGraph) -> DegreeSummary:
    per = tuple((len(g.in_adj[v]), len(g.out_adj[v])) for v in range(g.n))
    mx = max((max(d) for d in per), default=0)
    return DegreeSummary(per_vertex=per, max_in_out=mx)


def underlying(g: OrientedGraph) -> UnderlyingGraph:
    edges = frozenset((u, v) if u < v else (v, u) for (u, v) in g.arcs)
    adj_sets: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in edges:
        adj_sets[u].add(v)
        adj_sets[v].add(u)
    return UnderlyingGraph(
        n=g.n, edges=edges, adj=tuple(tuple(sorted(s)) for s in adj_sets)
    )


def two_path_pairs(g: OrientedGraph, pattern: PathPattern) -> frozenset[tuple[int, int]]:
    """Unordered pairs {u, w} joined by a length-2 path of the given pattern.

    The middle vertex b must differ from both endpoints (paths, not closed
    walks); pairs that are also adjacent are still reported here.
    """
    pairs: set[tuple[int, int]] = set()
    if pattern is PathPattern.P1:
        for b in range(g.n):
            for u in g.in_adj[b]:
                for w in g.out_adj[b]:
                    if u != w:
                        pairs.add((u, w) if u < w else (w, u))
    elif pattern is PathPattern.P2:
        for b in range(g.n):
            pairs.update(combinations(g.in_adj[b], 2))
    else:
        for b in range(g.n):
            pairs.update(combinations(g.out_adj[b], 2))
    return frozenset(pairs)


def block_decomposition(h: UnderlyingGraph) -> BlockDecomposition:
    """Biconnected components by iterative lowpoint DFS.

    Blocks are returned as vertex sets sorted by their sorted vertex tuples;
    a vertex is a cut vertex iff it lies in at least two blocks.
    """
    n = h.n
    adj = h.adj
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    singletons: list[int] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            disc[root] = timer
            timer += 1
            singletons.append(root)
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, object]] = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)  # type: ignore[arg-type]
            if w is None:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        blk: list[tuple[int, int]] = []
                        while edge_stack:
                            e = edge_stack.pop()
                            blk.append(e)
                            if e == (u, v):
                                break
                        raw_blocks.append(blk)
                        if u != root:
                            is_cut[u] = True
                continue
            if disc[w] == -1:
                parent[w] = v
                if v == root:
                    root_children += 1
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(adj[w])))
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if root_children >= 2:
            is_cut[root] = True

    block_sets = [frozenset(v for e in blk for v in e) for blk in raw_blocks]
    block_sets.extend(frozenset({v}) for v in singletons)
    block_sets.sort(key=lambda b: tuple(sorted(b)))
    cuts = frozenset(v for v in range(n) if is_cut[v])
    tree = frozenset(
        (bi, v) for bi, blk in enumerate(block_sets) for v in blk if v in cuts
    )
    return BlockDecomposition(
        blocks=tuple(block_sets), cut_vertices=cuts, tree_edges=tree
    )


def induced_subdigraph_arcs(g: OrientedGraph, vertices) -> frozenset[tuple[int, int]]:
    """Arcs of g with both endpoints in the given vertex set."""
    vs = set(vertices)
    return frozenset((u, v) for (u, v) in g.arcs if u in vs and v in vs)


def block_degree_bound(g: OrientedGraph, dec: BlockDecomposition | None = None) -> int:
    """Max over blocks of the max in/out degree inside the induced sub-digraph."""
    if dec is None:
        dec = block_decomposition(underlying(g))
    best = 0
    for blk in dec.blocks:
        indeg = {v: 0 for v in blk}
        outdeg = {v: 0 for v in blk}
        for u, v in induced_subdigraph_arcs(g, blk):
            outdeg[u] += 1
            indeg[v] += 1
        for v in blk:
            if indeg[v] > best:
                best = indeg[v]
            if outdeg[v] > best:
                best = outdeg[v]
    return best


# --- edge-list and DOT text formats -------------------------------------------

def format_edge_list(g: OrientedGraph) -> str:
    """Header line "n <count>" then one "u v" line per arc, sorted."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> OrientedGraph:
    n = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListParseError(
                    f"line {lineno}: expected header 'n <count>', got {line!r}"
                )
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(f"line {lineno}: bad vertex count {parts[1]!r}")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: non-integer arc {line!r}")
    if n is None:
        raise EdgeListParseError("missing header line 'n <count>'")
    return build_graph(n, arcs)


def to_dot(g: OrientedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -> {v};" for u, v in sorted(g.arcs))
    lines.append("}")
    return "\n".join(lines) + "\n"
