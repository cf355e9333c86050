"""Seeded random graph generators used by the CLI and the verification sweeps."""

from __future__ import annotations

from random import Random

from .digraph import OrientedGraph, build_graph


def random_oriented_graph(n: int, arcs: int, seed_or_rng) -> OrientedGraph:
    """Uniform rejection sampling: draw ordered pairs, rejecting self-loops,
    duplicates, and opposite arcs, until the requested arc count is reached."""
    rng = seed_or_rng if isinstance(seed_or_rng, Random) else Random(seed_or_rng)
    limit = n * (n - 1) // 2
    if arcs > limit:
        raise ValueError(f"{arcs} arcs impossible on {n} vertices (max {limit})")
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < arcs:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or (u, v) in chosen or (v, u) in chosen:
            continue
        chosen.add((u, v))
    return build_graph(n, sorted(chosen))


def random_degree_bounded_graph(
    n: int, max_in_out: int, attempts: int, seed_or_rng
) -> OrientedGraph:
    """Random oriented graph whose in- and out-degrees never exceed max_in_out;
    arc candidates violating the cap (or orientedness) are skipped."""
    rng = seed_or_rng if isinstance(seed_or_rng, Random) else Random(seed_or_rng)
    chosen: set[tuple[int, int]] = set()
    outdeg = [0] * n
    indeg = [0] * n
    for _ in range(attempts):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or (u, v) in chosen or (v, u) in chosen:
            continue
        if outdeg[u] >= max_in_out or indeg[v] >= max_in_out:
            continue
        chosen.add((u, v))
        outdeg[u] += 1
        indeg[v] += 1
    return build_graph(n, sorted(chosen))


def random_tree_orientation(n: int, seed_or_rng) -> OrientedGraph:
    """Random recursive tree with each edge oriented by a coin flip."""
    rng = seed_or_rng if isinstance(seed_or_rng, Random) else Random(seed_or_rng)
    arcs = []
    for v in range(1, n):
        u = rng.randrange(v)
        arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build_graph(n, arcs)


def random_block_chain(
    n_blocks: int, block_k: int, seed_or_rng
) -> tuple[OrientedGraph, int]:
    """Chain of 2-connected blocks glued at shared cut vertices.

    Each block is a consistently oriented cycle on 3..6 vertices plus random
    chords, keeping every in- and out-degree inside the block at most block_k.
    Returns the graph and the realized per-block degree bound.
    """
    rng = seed_or_rng if isinstance(seed_or_rng, Random) else Random(seed_or_rng)
    arcs: list[tuple[int, int]] = []
    realized = 0
    glue = 0
    next_free = 1
    for _ in range(n_blocks):
        size = rng.randint(3, 6)
        verts = [glue] + list(range(next_free, next_free + size - 1))
        next_free += size - 1
        outdeg = dict.fromkeys(verts, 0)
        indeg = dict.fromkeys(verts, 0)
        block_arcs: set[tuple[int, int]] = set()
        for i in range(size):
            u, v = verts[i], verts[(i + 1) % size]
            block_arcs.add((u, v))
            outdeg[u] += 1
            indeg[v] += 1
        chord_attempts = rng.randint(0, 2 * size)
        for _ in range(chord_attempts):
            u, v = rng.sample(verts, 2)
            if (u, v) in block_arcs or (v, u) in block_arcs:
                continue
            if outdeg[u] >= block_k or indeg[v] >= block_k:
                continue
            block_arcs.add((u, v))
            outdeg[u] += 1
            indeg[v] += 1
        arcs.extend(sorted(block_arcs))
        realized = max(realized, max(outdeg.values()), max(indeg.values()))
        glue = verts[-1]  # last vertex of this block glues the next one
    return build_graph(next_free, arcs), realized
