"""Lower-bound graph generators and their verification oracles.

Three families: a torus digraph on Z_k x Z_k whose inner vertices are pairwise
joined by directed paths of length <= 2, an oriented projective-plane incidence
graph whose points are pairwise joined through a common line, and a triple-copy
gadget whose point copies are pairwise constrained under S={P1,P2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .digraph import GraphError, OrientedGraph, build_graph
from .labeling import ConstraintSet, build_constraints


class KTooSmallError(ValueError):
    def __init__(self, k: int):
        super().__init__(f"torus modulus must be at least 4, got {k}")
        self.k = k


class ConstructionInvalidError(RuntimeError):
    """A generator produced an arc set violating oriented-graph invariants."""


class CaseAnalysisGapError(RuntimeError):
    """No witness case applied, or a named arc is missing from the graph."""

    def __init__(self, src, dst, detail: str):
        super().__init__(f"no length-<=2 witness for {src} vs {dst}: {detail}")
        self.src = src
        self.dst = dst


class NotPrimeError(ValueError):
    def __init__(self, q: int):
        super().__init__(f"projective plane order must be prime, got {q}")
        self.q = q


# --- torus digraph ---------------------------------------------------------------

def torus_index(k: int, a: int, b: int) -> int:
    """Row-major index of the vertex (a, b) in Z_k x Z_k."""
    return a * k + b


def torus_coords(k: int, v: int) -> tuple[int, int]:
    return divmod(v, k)


def torus_digraph(k: int) -> OrientedGraph:
    """Digraph on Z_k x Z_k, k >= 4, with arc rules (comparisons on
    representatives in 0..k-1, rule exceptions mod k):

      i.   ab -> bc        for every c > a
      ii.  ab -> (b+1)c    for every c <= a with c != a-1
      iii. ab -> a(b+1)    unless a = b+2
      iv.  ab -> (a+1)b    unless a = b+1

    Rules ii-iv are confined to applications whose "+1" does not wrap, rule ii
    is additionally silent on row a=0 and never emits into column k-1: taken
    verbatim at the wrap boundary, the rules produce opposite-arc pairs such
    as (0,b) <-> (b,k-1) and push row-0 out-degrees and column-(k-1)
    in-degrees to k+2. The carve-outs touch only boundary-incident arcs; the
    inner-pair case analysis (torus_path_witness) never uses a wrapped or
    carved-out application. Overlapping rules may emit the same arc;
    duplicates are merged. Every in- and out-degree is at most k+1 and no
    opposite arc pair occurs.
    """
    if k < 4:
        raise KTooSmallError(k)
    arcs: set[tuple[int, int]] = set()
    for a in range(k):
        for b in range(k):
            src = a * k + b
            for c in range(a + 1, k):  # rule i
                arcs.add((src, b * k + c))
            if a >= 1 and b <= k - 2:  # rule ii
                am1 = (a - 1) % k
                for c in range(min(a, k - 2) + 1):
                    if c != am1:
                        arcs.add((src, (b + 1) * k + c))
            if a != (b + 2) % k and b <= k - 2:  # rule iii
                arcs.add((src, a * k + b + 1))
            if a != (b + 1) % k and a <= k - 2:  # rule iv
                arcs.add((src, (a + 1) * k + b))
    try:
        return build_graph(k * k, sorted(arcs))
    except GraphError as exc:
        raise ConstructionInvalidError(f"torus_digraph({k}): {exc}") from exc


@lru_cache(maxsize=16)
def _torus_arc_set(k: int) -> frozenset[tuple[int, int]]:
    return torus_digraph(k).arcs


class PathWitness(NamedTuple):
    """A directed path of length <= 2 joining two inner torus vertices.

    path runs in arc direction; path[0] may be either endpoint of the queried
    pair. case names which branch of the analysis produced it.
    """

    case: str
    path: tuple[tuple[int, int], ...]


def torus_path_witness(
    k: int, src: tuple[int, int], dst: tuple[int, int]
) -> PathWitness:
    """Witness path between two distinct inner vertices (no coordinate in
    {0, k-1}), by case analysis on the coordinate comparisons.

    Raises CaseAnalysisGapError if no case matches or a named arc is absent.
    """
    if k < 4:
        raise KTooSmallError(k)
    a, b = src
    c, d = dst
    for x in (a, b, c, d):
        if x in (0, k - 1) or not 0 <= x < k:
            raise ValueError(f"coordinates must be inner (1..{k - 2}), got {src}, {dst}")
    if src == dst:
        raise ValueError("witness requires two distinct vertices")

    if a < c and b < d:
        case, path = "1", ((a, b), (b, c), (c, d))
    elif a > c and b > d:
        case, path = "2", ((c, d), (d, a), (a, b))
    elif a < c and b > d:
        if c == a + 1:
            case, path = "3.i", ((a, b), (b + 1, a), (a + 1, d))
        elif b == d + 1:
            case, path = "3.ii", ((c, d), (d + 1, a - 1), (a, d + 1))
        else:
            case, path = "3", ((c, d), (d + 1, a), (a, b))
    elif a > c and b < d:
        if a == c + 1:
            # the fan-out template (c+1)b -> (b+1)(c-1) -> cd has no second arc
            # once d >= b+2; route from dst instead, mirroring case 3.i
            case, path = "4.i", ((c, d), (d + 1, c), (c + 1, b))
        elif d == b + 1:
            case, path = "4.ii", ((a, b), (b + 1, c - 1), (c, b + 1))
        else:
            case, path = "4", ((a, b), (b + 1, c), (c, d))
    elif a == c:
        if b > d:  # normalize so the second coordinates increase
            a, b, c, d = c, d, a, b
        if d == b + 1 and a != b + 2:
            case, path = "5.i", ((a, b), (a, b + 1))
        elif d == b + 1:
            case, path = "5.ii", ((a, b + 1), (a, b))
        else:
            case, path = "5", ((a, b), (b + 1, a), (a, d))
    else:  # b == d
        if a > c:  # normalize so the first coordinates increase
            a, b, c, d = c, d, a, b
        if c == a + 1 and a != b + 1:
            case, path = "6.i", ((a, b), (a + 1, b))
        elif c == a + 1:
            case, path = "6.ii", ((a + 1, b), (a, b))
        else:
            case, path = "6", ((a, b), (b, c - 1), (c, b))

    arcs = _torus_arc_set(k)
    norm = tuple((x % k, y % k) for x, y in path)
    if {norm[0], norm[-1]} != {src, dst}:
        raise CaseAnalysisGapError(src, dst, f"case {case} endpoints {norm}")
    for p, q in zip(norm, norm[1:]):
        if (torus_index(k, *p), torus_index(k, *q)) not in arcs:
            raise CaseAnalysisGapError(src, dst, f"case {case} needs missing arc {p}->{q}")
    return PathWitness(case=case, path=norm)


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of the inner-pair sweep of a torus digraph.

    Every unordered pair of inner vertices should carry a directed path of
    length <= 2 in one direction or the other; uncovered_list collects the
    exceptions and must stay empty.
    """

    k: int
    inner_pairs_total: int
    covered: int
    uncovered_list: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    witness_map: dict

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "inner_pairs_total": self.inner_pairs_total,
            "covered": self.covered,
            "uncovered": [list(map(list, pair)) for pair in self.uncovered_list],
            "witnesses": {
                f"{p[0]},{p[1]}-{q[0]},{q[1]}": [list(v) for v in path]
                for (p, q), path in sorted(self.witness_map.items())
            },
        }


def verify_inner_coverage(k: int) -> CoverageReport:
    """Exhaustive BFS-to-depth-2 check over all unordered inner vertex pairs."""
    g = torus_digraph(k)
    out_sets = [set(g.out_adj[v]) for v in range(g.n)]
    inner = [
        (a, b) for a in range(1, k - 1) for b in range(1, k - 1)
    ]
    covered = 0
    uncovered: list[tuple[tuple[int, int], tuple[int, int]]] = []
    witness_map: dict = {}
    for i, p in enumerate(inner):
        pi = torus_index(k, *p)
        for q in inner[i + 1:]:
            qi = torus_index(k, *q)
            path = _bfs2_path(g, out_sets, pi, qi)
            if path is None:
                path = _bfs2_path(g, out_sets, qi, pi)
            if path is None:
                uncovered.append((p, q))
            else:
                covered += 1
                witness_map[(p, q)] = tuple(torus_coords(k, v) for v in path)
    total = len(inner) * (len(inner) - 1) // 2
    return CoverageReport(
        k=k,
        inner_pairs_total=total,
        covered=covered,
        uncovered_list=tuple(uncovered),
        witness_map=witness_map,
    )


def _bfs2_path(g, out_sets, src: int, dst: int):
    if dst in out_sets[src]:
        return (src, dst)
    for mid in g.out_adj[src]:
        if dst in out_sets[mid]:
            return (src, mid, dst)
    return None


# --- projective plane incidence --------------------------------------------------

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def plane_points(q: int) -> list[tuple[int, int, int]]:
    """The q^2+q+1 points of PG(2, q) as normalized homogeneous triples
    (first nonzero coordinate is 1), in a fixed deterministic order."""
    if not _is_prime(q):
        raise NotPrimeError(q)
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts.extend((0, 1, z) for z in range(q))
    pts.append((0, 0, 1))
    return pts


def projective_plane_incidence(q: int) -> OrientedGraph:
    """Bipartite incidence digraph of PG(2, q): vertices 0..N-1 are points,
    N..2N-1 are lines (N = q^2+q+1), with every arc pointing point -> line.
    A point lies on a line iff their homogeneous dot product vanishes mod q.
    """
    pts = plane_points(q)
    n = len(pts)
    arcs = [
        (i, n + j)
        for i, p in enumerate(pts)
        for j, l in enumerate(pts)
        if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0
    ]
    return build_graph(2 * n, arcs)


# --- triple-copy gadget -----------------------------------------------------------

@dataclass(frozen=True)
class TripleCopyVertex:
    copy: int  # 0, 1, 2
    is_line: bool
    base: int  # index into plane_points(q)


def triple_copy_order(q: int) -> int:
    n = q * q + q + 1
    return 6 * n


def triple_vertex_index(q: int, copy: int, is_line: bool, base: int) -> int:
    n = q * q + q + 1
    return copy * 2 * n + (n if is_line else 0) + base


def triple_vertex_info(q: int, v: int) -> TripleCopyVertex:
    n = q * q + q + 1
    copy, local = divmod(v, 2 * n)
    return TripleCopyVertex(copy=copy, is_line=local >= n, base=local % n)


def triple_point_indices(q: int) -> list[int]:
    """All 3(q^2+q+1) point-copy vertices, grouped copy by copy."""
    n = q * q + q + 1
    return [triple_vertex_index(q, t, False, i) for t in range(3) for i in range(n)]


def triple_copy(q: int) -> OrientedGraph:
    """Three copies of the oriented plane incidence graph, chained: each line
    of copy t also points at the next copy's version of its incident points,
    and the three copies p, p', p'' of a point form a directed 3-cycle
    (twin vertices). Point copies end up pairwise constrained under S={P1,P2}:
    same copy via a shared line (P2), different non-twin copies via a
    line-to-next-copy arc (P1), twins via their cycle arcs.
    """
    pts = plane_points(q)
    n = len(pts)
    incident = [
        (i, j)
        for i, p in enumerate(pts)
        for j, l in enumerate(pts)
        if (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0
    ]
    arcs: list[tuple[int, int]] = []
    for t in range(3):
        nxt = (t + 1) % 3
        for i, j in incident:
            arcs.append(
                (triple_vertex_index(q, t, False, i), triple_vertex_index(q, t, True, j))
            )
            arcs.append(
                (triple_vertex_index(q, t, True, j), triple_vertex_index(q, nxt, False, i))
            )
        for i in range(n):
            arcs.append(
                (triple_vertex_index(q, t, False, i), triple_vertex_index(q, nxt, False, i))
            )
    try:
        return build_graph(6 * n, arcs)
    except GraphError as exc:
        raise ConstructionInvalidError(f"triple_copy({q}): {exc}") from exc


# --- pairwise constraint audit ----------------------------------------------------

def pair_class_audit(g: OrientedGraph, vertex_subset, s: ConstraintSet) -> dict:
    """Classify every pair of the subset as gap-2, gap-1, or unconstrained
    under s. Full coverage certifies the subset-size-minus-one span bound."""
    subset = sorted(set(vertex_subset))
    c = build_constraints(g, s)
    gap2 = gap1 = 0
    unconstrained: list[tuple[int, int]] = []
    for i, u in enumerate(subset):
        for w in subset[i + 1:]:
            pair = (u, w)
            if pair in c.gap2_pairs:
                gap2 += 1
            elif pair in c.gap1_pairs:
                gap1 += 1
            else:
                unconstrained.append(pair)
    total = len(subset) * (len(subset) - 1) // 2
    full = not unconstrained
    return {
        "subset_size": len(subset),
        "pairs_total": total,
        "gap2_pairs": gap2,
        "gap1_pairs": gap1,
        "unconstrained_pairs": len(unconstrained),
        "unconstrained_list": unconstrained,
        "full_coverage": full,
        "certified_lower_bound": len(subset) - 1 if full and subset else None,
    }
