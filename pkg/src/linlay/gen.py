"""Seeded benchmark graph generators.

Six graph classes: complete graphs, connected uniform random graphs with
a fixed edge count, Delaunay triangulations of random points, maximal
planar bipartite graphs, and random 2- and 3-trees.  Every generator is
a pure function of (parameters, seed) using the package PRNG, so the
same call reproduces the same edge set anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Set, Tuple

from .core import Edge, Graph, MixedLayout, PageSpec, VertexOrder
from .rng import Rng, derive_seed

GenSeed = int  # 64-bit seed for the SplitMix64 stream (see rng module)


# ---------------------------------------------------------------------------
# Complete and uniform random graphs
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    """K_n: all n(n-1)/2 edges."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n))
    )


def _unrank_pair(n: int, k: int) -> Edge:
    """k-th pair (u, v), u < v, in lexicographic order."""
    # f(u) = number of pairs with first coordinate < u
    lo_u, hi_u = 0, n - 1
    while lo_u < hi_u:  # largest u with f(u) <= k
        mid = (lo_u + hi_u + 1) // 2
        f_mid = mid * (2 * n - mid - 1) // 2
        if f_mid <= k:
            lo_u = mid
        else:
            hi_u = mid - 1
    u = lo_u
    f_u = u * (2 * n - u - 1) // 2
    return (u, u + 1 + (k - f_u))


def random_gnm_connected(n: int, m: int, seed: GenSeed) -> Graph:
    """Connected graph with m edges drawn uniformly among all m-subsets.

    Whole samples are redrawn until a connected one appears, so the
    output is uniform over connected graphs with exactly m edges.
    """
    total = n * (n - 1) // 2
    if not (n - 1 <= m <= total):
        raise ValueError(f"m={m} infeasible for connected graph on n={n}")
    rng = Rng(seed)
    while True:
        idx = rng.sample_indices(total, m)
        g = Graph.from_edges(n, (_unrank_pair(n, k) for k in idx))
        if g.is_connected():
            return g


# ---------------------------------------------------------------------------
# Delaunay triangulations
# ---------------------------------------------------------------------------
# Points are sampled on a 2^20 x 2^20 integer grid (a fine quantization of
# the unit square) and triangulated by incremental insertion into a huge
# super-triangle (Bowyer-Watson).  All orientation and in-circle tests use
# exact integer arithmetic; a point exactly on a circumcircle counts as
# outside.  Exact collinear degeneracies are resolved by retrying on a
# 2^16-times finer grid with an index-derived sub-cell offset per point
# (deterministic symbolic perturbation; relative positions are preserved
# and ties are broken by point index).

GRID_BITS = 20

Point = Tuple[int, int]


@dataclass(frozen=True)
class DelaunayInstance:
    """Triangulation output: the graph plus its geometric witness."""

    graph: Graph
    points: Tuple[Point, ...]
    triangles: Tuple[Tuple[int, int, int], ...]


class _DegenerateInput(Exception):
    """Exact collinearity survived the current grid refinement."""


def _orient(a: Point, b: Point, c: Point) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _in_circumcircle(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Strictly inside the circumcircle of ccw triangle (a, b, c)."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - ady * cdx)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
    )
    return det > 0


def _triangulate(points: List[Point], span: int) -> List[Tuple[int, int, int]]:
    """Bowyer-Watson over exact integer points; raises on degeneracy.

    The super-triangle is placed ~span^3 away so that every test against
    its vertices resolves like a test against points at infinity.
    """
    n = len(points)
    big = 16 * span * span * span
    pts: List[Point] = list(points) + [(-big, -big), (3 * big, -big), (-big, 3 * big)]
    s0, s1, s2 = n, n + 1, n + 2

    # triangles stored ccw
    tris: Set[Tuple[int, int, int]] = {(s0, s1, s2)}
    for p in range(n):
        pp = pts[p]
        bad = [t for t in tris if _in_circumcircle(pts[t[0]], pts[t[1]], pts[t[2]], pp)]
        edge_count: Dict[Tuple[int, int], int] = {}
        for t in bad:
            for e in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                key = (min(e), max(e))
                edge_count[key] = edge_count.get(key, 0) + 1
            tris.remove(t)
        for t in bad:
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                if edge_count[(min(a, b), max(a, b))] != 1:
                    continue  # interior to the cavity
                side = _orient(pts[a], pts[b], pp)
                if side == 0:
                    raise _DegenerateInput(f"point {p} collinear with cavity edge")
                tris.add((a, b, p) if side > 0 else (b, a, p))
    return sorted(t for t in tris if max(t) < n)


def _sample_points(rng: Rng, n: int, seed: GenSeed, refine: int) -> List[Point]:
    shift = 1 << refine if refine else 1
    pts: List[Point] = []
    for i in range(n):
        x = rng.randrange(1 << GRID_BITS)
        y = rng.randrange(1 << GRID_BITS)
        if refine:
            jitter = derive_seed(seed, i, refine)
            x = x * shift + (jitter & (shift - 1))
            y = y * shift + ((jitter >> 32) & (shift - 1))
        pts.append((x, y))
    return pts


def delaunay_instance(n: int, seed: GenSeed) -> DelaunayInstance:
    """Delaunay triangulation of n random points in the unit square."""
    if n < 3:
        raise ValueError(f"triangulation needs n >= 3, got {n}")
    refine = 0
    while True:
        rng = Rng(derive_seed(seed, refine))
        pts = _sample_points(rng, n, seed, refine)
        if len(set(pts)) < n:
            refine += 16
            continue
        try:
            tris = _triangulate(pts, 1 << (GRID_BITS + refine))
        except _DegenerateInput:
            refine += 16
            continue
        edges = set()
        for a, b, c in tris:
            edges.update(((min(a, b), max(a, b)),
                          (min(b, c), max(b, c)),
                          (min(a, c), max(a, c))))
        return DelaunayInstance(
            graph=Graph.from_edges(n, edges),
            points=tuple(pts),
            triangles=tuple(tris),
        )


def delaunay(n: int, seed: GenSeed) -> Graph:
    return delaunay_instance(n, seed).graph


# ---------------------------------------------------------------------------
# Maximal planar bipartite graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarBipartiteInstance:
    """Generated graph plus the order and 2-stack witness it grew on."""

    graph: Graph
    order: VertexOrder
    layout: MixedLayout  # conflict-free on spec (2, 0)


def max_planar_bipartite_instance(n: int, seed: GenSeed) -> PlanarBipartiteInstance:
    """Maximal planar bipartite graph with exactly 2n - 4 edges.

    Grows over a random alternating order of the two vertex classes
    {0..n/2-1} and {n/2..n-1}: the Hamiltonian-path edges of that order
    are inserted first (they keep the graph connected and are free on any
    stack page), then random cross-class pairs are accepted whenever the
    edge fits crossing-free on one of two stack pages over the fixed
    order.  After 50n consecutive rejected samples the remaining feasible
    pairs are scanned in random order; if none fits before 2n - 4 edges
    the construction restarts with a fresh alternating order.
    """
    if n < 4 or n % 2:
        raise ValueError(f"needs even n >= 4, got {n}")
    rng = Rng(seed)
    half = n // 2
    target = 2 * n - 4

    while True:
        left = list(range(half))
        right = list(range(half, n))
        rng.shuffle(left)
        rng.shuffle(right)
        sequence: List[int] = []
        for a, b in zip(left, right):
            sequence.extend((a, b))
        order = VertexOrder.from_sequence(sequence)

        pages: Tuple[List[Edge], List[Edge]] = ([], [])
        spans: Tuple[List[Tuple[int, int]], List[Tuple[int, int]]] = ([], [])
        chosen: Set[Edge] = set()

        def fits(page_spans: List[Tuple[int, int]], lo: int, hi: int) -> bool:
            for a, b in page_spans:
                if a < lo < b < hi or lo < a < hi < b:
                    return False
            return True

        def try_insert(e: Edge) -> bool:
            lo, hi = order.edge_span(e)
            for p in (0, 1):
                if fits(spans[p], lo, hi):
                    pages[p].append(e)
                    spans[p].append((lo, hi))
                    chosen.add(e)
                    return True
            return False

        for i in range(n - 1):  # Hamiltonian path of the alternating order
            e = (min(sequence[i], sequence[i + 1]), max(sequence[i], sequence[i + 1]))
            if not try_insert(e):
                raise AssertionError("path edge rejected, unreachable")

        stalled = False
        budget = 50 * n
        misses = 0
        while len(chosen) < target and not stalled:
            u = left[rng.randrange(half)]
            v = right[rng.randrange(half)]
            e = (u, v)
            if e not in chosen and try_insert(e):
                misses = 0
                continue
            misses += 1
            if misses < budget:
                continue
            # exhaustive fallback: any remaining feasible pair, random order
            remaining = [
                (u, v)
                for u in range(half)
                for v in range(half, n)
                if (u, v) not in chosen
            ]
            rng.shuffle(remaining)
            for e in remaining:
                if try_insert(e):
                    misses = 0
                    break
            else:
                stalled = True

        if len(chosen) == target:
            graph = Graph.from_edges(n, chosen)
            page_of = {e: p for p in (0, 1) for e in pages[p]}
            layout = MixedLayout(order=order, spec=PageSpec(2, 0), page_of=page_of)
            return PlanarBipartiteInstance(graph=graph, order=order, layout=layout)


def max_planar_bipartite(n: int, seed: GenSeed) -> Graph:
    return max_planar_bipartite_instance(n, seed).graph


# ---------------------------------------------------------------------------
# Random k-trees
# ---------------------------------------------------------------------------

def k_tree(n: int, k: int, seed: GenSeed) -> Graph:
    """Random k-tree for k in {2, 3}; k = 3 builds a planar 3-tree.

    Starts from K_{k+1} and attaches each new vertex to a uniformly
    random clique from the pool.  For k = 2 the pool holds every edge;
    for k = 3 it holds only current faces (an attachment replaces the
    chosen face by the three new ones), which keeps the result planar.
    """
    if k not in (2, 3):
        raise ValueError(f"k must be 2 or 3, got {k}")
    if n < k + 1:
        raise ValueError(f"k-tree needs n >= {k + 1}, got {n}")
    rng = Rng(seed)
    edges: List[Edge] = [
        (u, v) for u in range(k + 1) for v in range(u + 1, k + 1)
    ]
    if k == 2:
        pool: List[Tuple[int, ...]] = [tuple(e) for e in edges]
    else:
        pool = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    for w in range(k + 1, n):
        i = rng.randrange(len(pool))
        clique = pool[i]
        for u in clique:
            edges.append((u, w))
        if k == 2:
            pool.append((clique[0], w))
            pool.append((clique[1], w))
        else:
            a, b, c = clique
            pool[i] = pool[-1]
            pool.pop()
            pool.extend(((a, b, w), (b, c, w), (a, c, w)))
    return Graph.from_edges(n, edges)
