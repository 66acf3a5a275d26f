"""Vertex-ordering heuristics applied before page assignment.

All four heuristics return a permutation for any connected input and are
deterministic given (graph, seed).  The published variants of rbfs,
AVSDF and conGreedy leave minor details open; the tie-breaking rules
fixed here (degree, then vertex id) are documented substitutes chosen
for reproducibility, not claims about the original implementations.
"""

from __future__ import annotations

from collections import deque
from typing import List

import numpy as np

from .core import Graph, LayoutError, VertexOrder
from .rng import Rng


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise LayoutError("ordering heuristics require a connected graph")


def random_order(g: Graph, seed: int) -> VertexOrder:
    """Uniform random permutation of the vertices."""
    seq = list(range(g.n))
    Rng(seed).shuffle(seq)
    return VertexOrder.from_sequence(seq)


def rbfs(g: Graph, seed: int) -> VertexOrder:
    """Breadth-first order from a uniformly random start vertex.

    Neighbors are enqueued by ascending degree, ties by vertex id.
    """
    _require_connected(g)
    adj = g.adjacency()
    deg = g.degrees()
    start = Rng(seed).randrange(g.n)
    seen = [False] * g.n
    seen[start] = True
    queue = deque([start])
    visit: List[int] = []
    while queue:
        u = queue.popleft()
        visit.append(u)
        for w in sorted(adj[u], key=lambda x: (deg[x], x)):
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return VertexOrder.from_sequence(visit)


def avsdf(g: Graph, seed: int) -> VertexOrder:
    """Adjacent-vertex-smallest-degree-first: stack-based DFS.

    Starts at a minimum-degree vertex (ties by id); when a vertex is
    expanded its unvisited neighbors are pushed in descending
    (degree, id) so the smallest-degree neighbor is visited next.  The
    seed is accepted for interface uniformity; the traversal itself is
    deterministic.
    """
    del seed
    _require_connected(g)
    adj = g.adjacency()
    deg = g.degrees()
    start = min(range(g.n), key=lambda v: (deg[v], v))
    seen = [False] * g.n
    stack = [start]
    visit: List[int] = []
    while stack:
        u = stack.pop()
        if seen[u]:
            continue
        seen[u] = True
        visit.append(u)
        for w in sorted(adj[u], key=lambda x: (deg[x], x), reverse=True):
            if not seen[w]:
                stack.append(w)
    return VertexOrder.from_sequence(visit)


def con_greedy(g: Graph, seed: int) -> VertexOrder:
    """Connectivity-greedy placement minimizing single-page crossings.

    Repeatedly takes the unplaced vertex with the most placed neighbors
    (ties: higher total degree, then lower id) and inserts it into the
    slot of the current partial order where its edges to placed
    neighbors cross the fewest already-realized edges, all edges treated
    as if on one stack page.  Leftmost slot wins cost ties.  The first
    vertex is a uniformly random maximum-degree vertex.
    """
    _require_connected(g)
    n = g.n
    adj = g.adjacency()
    deg = g.degrees()
    rng = Rng(seed)

    max_deg = max(deg)
    first = rng.choice([v for v in range(n) if deg[v] == max_deg])

    sequence: List[int] = [first]
    placed = [False] * n
    placed[first] = True
    placed_neighbors = [0] * n
    for w in adj[first]:
        placed_neighbors[w] += 1

    # realized edges as vertex pairs; ranks are recomputed per insertion
    realized: List[tuple] = []

    for _ in range(n - 1):
        best_v = -1
        best_key = None
        for v in range(n):
            if placed[v]:
                continue
            key = (-placed_neighbors[v], -deg[v], v)
            if best_key is None or key < best_key:
                best_key, best_v = key, v
        v = best_v

        rank = {u: i for i, u in enumerate(sequence)}
        size = len(sequence)
        if realized:
            ra = np.fromiter((rank[e[0]] for e in realized), dtype=np.int64)
            rb = np.fromiter((rank[e[1]] for e in realized), dtype=np.int64)
            lo = np.minimum(ra, rb)
            hi = np.maximum(ra, rb)
        else:
            lo = hi = np.empty(0, dtype=np.int64)

        # cost per slot g in [0, size] via interval accumulation:
        # an edge on one side of target rank r crosses iff the slot falls
        # strictly inside its span; an edge straddling r crosses iff the
        # slot falls strictly outside.
        cost = np.zeros(size + 2, dtype=np.int64)
        for u in adj[v]:
            if not placed[u]:
                continue
            r = rank[u]
            incident = (lo == r) | (hi == r)
            same_side = ~incident & ((hi < r) | (lo > r))
            straddle = ~incident & (lo < r) & (hi > r)
            np.add.at(cost, lo[same_side] + 1, 1)
            np.add.at(cost, hi[same_side] + 1, -1)
            cost[0] += int(np.count_nonzero(straddle))
            np.add.at(cost, lo[straddle] + 1, -1)
            np.add.at(cost, hi[straddle] + 1, 1)
        slot = int(np.argmin(np.cumsum(cost[: size + 1])))

        sequence.insert(slot, v)
        placed[v] = True
        for w in adj[v]:
            if placed[w]:
                realized.append((v, w))
            else:
                placed_neighbors[w] += 1

    return VertexOrder.from_sequence(sequence)
