"""Clique heuristics and an exact bitmask search for small vertex counts."""

from __future__ import annotations


def greedy_clique(masks: list[int], n: int) -> int:
    """Size of the clique grown by repeatedly taking the best-connected candidate.

    Deterministic: ties break toward the smaller vertex index.
    """
    if n == 0:
        return 0
    cand = (1 << n) - 1
    size = 0
    while cand:
        best_v = -1
        best_deg = -1
        m = cand
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            d = (masks[v] & cand).bit_count()
            if d > best_deg:
                best_deg = d
                best_v = v
        size += 1
        cand &= masks[best_v]
    return size


def max_clique(masks: list[int], n: int) -> int:
    """Exact maximum clique size via branch and bound with pivoting."""
    best = 0

    def expand(r_size: int, p: int) -> None:
        nonlocal best
        if p == 0:
            if r_size > best:
                best = r_size
            return
        if r_size + p.bit_count() <= best:
            return
        # pivot on the candidate covering most of p
        pivot = -1
        pivot_deg = -1
        m = p
        while m:
            bit = m & -m
            v = bit.bit_length() - 1
            m ^= bit
            d = (masks[v] & p).bit_count()
            if d > pivot_deg:
                pivot_deg = d
                pivot = v
        ext = p & ~masks[pivot]
        while ext:
            bit = ext & -ext
            v = bit.bit_length() - 1
            ext ^= bit
            expand(r_size + 1, p & masks[v])
            p &= ~bit
            if r_size + p.bit_count() <= best:
                return

    expand(0, (1 << n) - 1)
    return best
