"""Page-assignment heuristics for a fixed vertex order.

Three assigners, all O(m^2):

* ``stack_queue``: single sweep keeping every open edge in both a stack
  and a queue; on closing an edge it weighs realized conflicts against
  an estimate of future ones and picks a side.
* ``e_len`` / ``ceil_floor``: greedy insertion by decreasing linear or
  cyclic edge length, each edge to the page where it causes the fewest
  conflicts right now.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .core import (
    Edge,
    Graph,
    LayoutError,
    MixedLayout,
    PageSpec,
    VertexOrder,
    crosses,
    nests,
)


def _edge_spans(g: Graph, order: VertexOrder) -> Tuple[np.ndarray, np.ndarray]:
    """Per-edge (lo, hi) rank arrays in canonical edge order."""
    if order.n != g.n:
        raise LayoutError("order does not match the graph's vertex count")
    lo = np.empty(g.m, dtype=np.int64)
    hi = np.empty(g.m, dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        a, b = order.position[u], order.position[v]
        lo[i], hi[i] = (a, b) if a < b else (b, a)
    return lo, hi


class _PageBuffer:
    """Edges already assigned to one page, as growing span arrays."""

    __slots__ = ("lo", "hi", "count")

    def __init__(self, capacity: int):
        self.lo = np.empty(capacity, dtype=np.int64)
        self.hi = np.empty(capacity, dtype=np.int64)
        self.count = 0

    def add(self, lo: int, hi: int) -> None:
        self.lo[self.count] = lo
        self.hi[self.count] = hi
        self.count += 1

    def crossings_with(self, lo: int, hi: int) -> int:
        a, b = self.lo[: self.count], self.hi[: self.count]
        left = np.count_nonzero((a < lo) & (lo < b) & (b < hi))
        right = np.count_nonzero((lo < a) & (a < hi) & (hi < b))
        return int(left + right)

    def nestings_with(self, lo: int, hi: int) -> int:
        a, b = self.lo[: self.count], self.hi[: self.count]
        outer = np.count_nonzero((a < lo) & (hi < b))
        inner = np.count_nonzero((lo < a) & (b < hi))
        return int(outer + inner)


def _page_cost(spec: PageSpec, page: int, buf: _PageBuffer, lo: int, hi: int) -> int:
    if spec.is_stack(page):
        return buf.crossings_with(lo, hi)
    return buf.nestings_with(lo, hi)


# ---------------------------------------------------------------------------
# Sweep heuristic
# ---------------------------------------------------------------------------

@dataclass
class SweepState:
    """Open-edge structures and per-edge conflict counters.

    An edge id lives in both ``stack`` (bottom to top) and ``queue``
    (front to back) exactly between the visits of its endpoints.  The
    counters only ever grow.
    """

    stack: List[int] = field(default_factory=list)
    queue: List[int] = field(default_factory=list)
    crossing_counter: np.ndarray = field(default_factory=lambda: np.zeros(0))
    nesting_counter: np.ndarray = field(default_factory=lambda: np.zeros(0))


def stack_queue(
    g: Graph,
    order: VertexOrder,
    spec: PageSpec,
    verify_counters: bool = False,
) -> MixedLayout:
    """Sweep assignment balancing realized against estimated conflicts.

    Visits vertices left to right.  Every edge enters an auxiliary stack
    (same-vertex batches longest-first) and queue (shortest-first) at its
    left endpoint.  When its right endpoint is reached, the edge e is
    assigned to the stack side iff

        c(e) + 0.5 * s_e  <=  n(e) + 0.5 * q_e

    where c/n count conflicts with already-assigned edges of each side
    and s_e/q_e count the open edges above e in the stack (in front of e
    in the queue) that could still conflict with it.  On a stack choice
    every such open edge's crossing counter is bumped, on a queue choice
    the nesting counters.  With several pages per side the concrete page
    is the one with the fewest realized conflicts, ties to the lowest id.

    Edges closing at the same vertex are handled innermost-first and
    never see each other in s_e/q_e or the counter updates: sharing an
    endpoint they cannot conflict.

    ``verify_counters`` recomputes both counters pairwise at every
    assignment and raises on mismatch (debug aid, quadratic cost).
    """
    if spec.s < 1 or spec.q < 1:
        raise LayoutError("sweep assignment needs at least one page per kind")
    lo, hi = _edge_spans(g, order)
    m = g.m
    n = g.n

    opens: List[List[int]] = [[] for _ in range(n)]
    closes: List[List[int]] = [[] for _ in range(n)]
    for i in range(m):
        opens[int(lo[i])].append(i)
        closes[int(hi[i])].append(i)

    state = SweepState(
        crossing_counter=np.zeros(m, dtype=np.int64),
        nesting_counter=np.zeros(m, dtype=np.int64),
    )
    S, Q = state.stack, state.queue
    c, nc = state.crossing_counter, state.nesting_counter

    buffers = [_PageBuffer(m) for _ in range(spec.k)]
    page_ids: List[List[int]] = [[] for _ in range(spec.k)]
    page_index = np.full(m, -1, dtype=np.int64)

    for r in range(n):
        # close edges ending here, innermost (most recently opened) first
        for e in sorted(closes[r], key=lambda i: -int(lo[i])):
            pos_s = S.index(e)
            above = np.array(S[pos_s + 1 :], dtype=np.int64)
            above = above[hi[above] > r]
            s_e = above.size

            pos_q = Q.index(e)
            front = np.array(Q[:pos_q], dtype=np.int64)
            front = front[(lo[front] < lo[e]) & (hi[front] > r)]
            q_e = front.size

            to_stack = c[e] + 0.5 * s_e <= nc[e] + 0.5 * q_e
            if to_stack:
                c[above] += 1
                page = _best_page(spec, buffers, range(spec.s), lo[e], hi[e])
            else:
                nc[front] += 1
                page = _best_page(
                    spec, buffers, range(spec.s, spec.k), lo[e], hi[e]
                )

            S.pop(pos_s)
            Q.pop(pos_q)
            buffers[page].add(int(lo[e]), int(hi[e]))
            page_ids[page].append(e)
            page_index[e] = page

            if verify_counters:
                _check_counters(g, order, spec, e, page_ids, c, nc)

        batch = opens[r]
        S.extend(sorted(batch, key=lambda i: -int(hi[i])))
        Q.extend(sorted(batch, key=lambda i: int(hi[i])))

    page_of: Dict[Edge, int] = {
        g.edges[i]: int(page_index[i]) for i in range(m)
    }
    return MixedLayout(order=order, spec=spec, page_of=page_of)


def _best_page(
    spec: PageSpec,
    buffers: List[_PageBuffer],
    candidates,
    lo: int,
    hi: int,
) -> int:
    best, best_cost = -1, None
    for p in candidates:
        cost = _page_cost(spec, p, buffers[p], int(lo), int(hi))
        if best_cost is None or cost < best_cost:
            best, best_cost = p, cost
    return best


def _check_counters(g, order, spec, e, page_ids, c, nc):
    """Debug invariant: counters equal true pairwise conflict counts."""
    edge = g.edges[e]
    want_c = sum(
        crosses(edge, g.edges[i], order)
        for p in range(spec.s)
        for i in page_ids[p]
        if i != e
    )
    want_n = sum(
        nests(edge, g.edges[i], order)
        for p in range(spec.s, spec.k)
        for i in page_ids[p]
        if i != e
    )
    if c[e] != want_c or nc[e] != want_n:
        raise AssertionError(
            f"counter drift on edge {edge}: c={c[e]} (true {want_c}), "
            f"n={nc[e]} (true {want_n})"
        )


# ---------------------------------------------------------------------------
# Greedy assignment by edge sequence
# ---------------------------------------------------------------------------

def greedy_assign(
    g: Graph,
    order: VertexOrder,
    spec: PageSpec,
    edge_sequence: Sequence[Edge],
) -> MixedLayout:
    """Assign each edge, in the given sequence, to a cheapest page.

    The cost of a page is the number of conflicts the edge would cause
    against the edges already on it.  Ties prefer a stack page over a
    queue page; among pages of the same kind the lowest id wins.
    """
    if sorted(edge_sequence) != list(g.edges):
        raise LayoutError("edge sequence must cover the graph's edges exactly")
    lo, hi = _edge_spans(g, order)
    index_of = {e: i for i, e in enumerate(g.edges)}

    buffers = [_PageBuffer(g.m) for _ in range(spec.k)]
    page_of: Dict[Edge, int] = {}
    for e in edge_sequence:
        i = index_of[e]
        a, b = int(lo[i]), int(hi[i])
        best, best_cost = 0, None
        for p in range(spec.k):  # id order encodes stacks-first preference
            cost = _page_cost(spec, p, buffers[p], a, b)
            if best_cost is None or cost < best_cost:
                best, best_cost = p, cost
        buffers[best].add(a, b)
        page_of[e] = best
    return MixedLayout(order=order, spec=spec, page_of=page_of)


def linear_length(e: Edge, order: VertexOrder) -> int:
    a, b = order.edge_span(e)
    return b - a


def cyclic_length(e: Edge, order: VertexOrder) -> int:
    a, b = order.edge_span(e)
    return min(b - a, order.n - (b - a))


def e_len(g: Graph, order: VertexOrder, spec: PageSpec) -> MixedLayout:
    """Greedy assignment, edges by decreasing linear length.

    Ties broken lexicographically by the edges' rank spans.
    """
    seq = sorted(
        g.edges,
        key=lambda e: (-linear_length(e, order), order.edge_span(e)),
    )
    return greedy_assign(g, order, spec, seq)


def ceil_floor(g: Graph, order: VertexOrder, spec: PageSpec) -> MixedLayout:
    """Greedy assignment, edges by decreasing cyclic length.

    The cyclic length of an edge spanning d ranks on n vertices is
    min(d, n - d); ties broken lexicographically by rank span.
    """
    seq = sorted(
        g.edges,
        key=lambda e: (-cyclic_length(e, order), order.edge_span(e)),
    )
    return greedy_assign(g, order, spec, seq)
