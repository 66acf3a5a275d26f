"""Graph and layout data model, conflict predicates, counting, validators.

A linear layout places the vertices of a graph on a line and each edge on
one of several pages (halfplanes).  Two edges on a stack page conflict
when they cross; two edges on a queue page conflict when one strictly
nests the other.  Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

Edge = Tuple[int, int]


class LayoutError(ValueError):
    """Structural problem: malformed graph, order, or page assignment."""


def canonical_edge(u: int, v: int) -> Edge:
    """Store every undirected edge as (min, max)."""
    if u == v:
        raise LayoutError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are kept canonically: each as (min, max), sorted
    lexicographically, so iteration order is deterministic.
    """

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise LayoutError(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise LayoutError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise LayoutError(f"edge ({u},{v}) out of range [0,{self.n})")
            if u > v:
                raise LayoutError(f"edge ({u},{v}) not canonical (min,max)")
            if (u, v) in seen:
                raise LayoutError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise LayoutError("edges not sorted lexicographically")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Canonicalize and sort an edge iterable; rejects loops/duplicates."""
        canon = sorted(canonical_edge(u, v) for u, v in edges)
        return Graph(n=n, edges=tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n


@dataclass(frozen=True)
class VertexOrder:
    """A permutation of the vertices: position[v] is the rank of v.

    Both directions (vertex -> rank and rank -> vertex) are hot paths in
    the sweeps, so the inverse permutation is precomputed.
    """

    position: Tuple[int, ...]
    vertex_at: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.position)
        inv = [-1] * n
        for v, r in enumerate(self.position):
            if not 0 <= r < n or inv[r] != -1:
                raise LayoutError("position is not a permutation")
            inv[r] = v
        object.__setattr__(self, "vertex_at", tuple(inv))

    @staticmethod
    def from_sequence(vertices: Sequence[int]) -> "VertexOrder":
        """Build from the vertex ids listed left to right."""
        n = len(vertices)
        pos = [-1] * n
        for r, v in enumerate(vertices):
            if not 0 <= v < n or pos[v] != -1:
                raise LayoutError("vertex sequence is not a permutation")
            pos[v] = r
        return VertexOrder(position=tuple(pos))

    @staticmethod
    def identity(n: int) -> "VertexOrder":
        return VertexOrder(position=tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.position)

    def rank(self, v: int) -> int:
        return self.position[v]

    def reversed(self) -> "VertexOrder":
        n = len(self.position)
        return VertexOrder(tuple(n - 1 - r for r in self.position))

    def edge_span(self, e: Edge) -> Tuple[int, int]:
        """Rank interval (lo, hi) covered by an edge, lo < hi."""
        a, b = self.position[e[0]], self.position[e[1]]
        return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PageSpec:
    """Page counts: page ids 0..s-1 are stacks, s..s+q-1 are queues."""

    s: int
    q: int

    def __post_init__(self):
        if self.s < 0 or self.q < 0 or self.s + self.q < 1:
            raise LayoutError(f"bad page spec (s={self.s}, q={self.q})")

    @property
    def k(self) -> int:
        return self.s + self.q

    def is_stack(self, page: int) -> bool:
        if not 0 <= page < self.k:
            raise LayoutError(f"page id {page} out of range [0,{self.k})")
        return page < self.s


@dataclass(frozen=True)
class MixedLayout:
    """A vertex order plus a total assignment of edges to pages."""

    order: VertexOrder
    spec: PageSpec
    page_of: Dict[Edge, int]

    def page_edges(self, page: int) -> List[Edge]:
        return [e for e, p in self.page_of.items() if p == page]

    def pages(self) -> List[List[Edge]]:
        out: List[List[Edge]] = [[] for _ in range(self.spec.k)]
        for e, p in self.page_of.items():
            out[p].append(e)
        return out


@dataclass(frozen=True)
class ConflictReport:
    """Per-page and total conflict counts for a mixed layout."""

    crossings_per_stack_page: Tuple[int, ...]
    nestings_per_queue_page: Tuple[int, ...]
    total: int
    per_edge: float

    def __post_init__(self):
        if self.total != sum(self.crossings_per_stack_page) + sum(
            self.nestings_per_queue_page
        ):
            raise LayoutError("report total does not match per-page sums")


# ---------------------------------------------------------------------------
# Conflict predicates
# ---------------------------------------------------------------------------

def crosses(e1: Edge, e2: Edge, order: VertexOrder) -> bool:
    """True iff the two edges interleave strictly in the order.

    Edges sharing an endpoint never cross (all inequalities strict).
    """
    a1, b1 = order.edge_span(e1)
    a2, b2 = order.edge_span(e2)
    if a1 > a2:
        a1, b1, a2, b2 = a2, b2, a1, b1
    return a1 < a2 < b1 < b2


def nests(e1: Edge, e2: Edge, order: VertexOrder) -> bool:
    """True iff one edge's span strictly encloses the other's.

    Symmetric: either direction of enclosure counts, and the pair is
    reported once.  Shared endpoints never nest.
    """
    a1, b1 = order.edge_span(e1)
    a2, b2 = order.edge_span(e2)
    if a1 > a2:
        a1, b1, a2, b2 = a2, b2, a1, b1
    return a1 < a2 and b2 < b1


# ---------------------------------------------------------------------------
# Conflict counting (O(m^2) pairwise reference)
# ---------------------------------------------------------------------------

def count_conflicts(g: Graph, layout: MixedLayout) -> ConflictReport:
    """Count crossings on stack pages and nestings on queue pages.

    Pairwise over co-paged edges; this is the reference every faster
    routine is checked against.
    """
    spec = layout.spec
    for e in g.edges:
        if e not in layout.page_of:
            raise LayoutError(f"edge {e} has no page assignment")
    pages: List[List[Edge]] = [[] for _ in range(spec.k)]
    for e in g.edges:
        p = layout.page_of[e]
        if not 0 <= p < spec.k:
            raise LayoutError(f"edge {e} assigned to invalid page {p}")
        pages[p].append(e)

    stack_counts: List[int] = []
    queue_counts: List[int] = []
    for p in range(spec.k):
        conflict = crosses if spec.is_stack(p) else nests
        edges = pages[p]
        count = 0
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if conflict(edges[i], edges[j], layout.order):
                    count += 1
        if spec.is_stack(p):
            stack_counts.append(count)
        else:
            queue_counts.append(count)

    total = sum(stack_counts) + sum(queue_counts)
    per_edge = total / g.m if g.m else 0.0
    return ConflictReport(
        crossings_per_stack_page=tuple(stack_counts),
        nestings_per_queue_page=tuple(queue_counts),
        total=total,
        per_edge=per_edge,
    )


# ---------------------------------------------------------------------------
# Linear-time page validators
# ---------------------------------------------------------------------------

def _sweep_events(edges: Iterable[Edge], order: VertexOrder):
    """Per-rank open/close lists for a single sweep; O(n + m')."""
    n = order.n
    opens: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    closes: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for e in edges:
        lo, hi = order.edge_span(e)
        opens[lo].append((lo, hi))
        closes[hi].append((lo, hi))
    return opens, closes


def validate_stack_page(edges: Sequence[Edge], order: VertexOrder) -> bool:
    """True iff the edges have no pairwise crossing under the order.

    Sweep with a stack: push at the left endpoint (same-left batches
    pushed longer-first so the shortest ends on top), pop at the right
    endpoint.  Valid iff every pop happens at the top of the stack.
    """
    opens, closes = _sweep_events(edges, order)
    stack: List[Tuple[int, int]] = []
    for r in range(order.n):
        closing = closes[r]
        if closing:
            popped = 0
            while stack and stack[-1][1] == r:
                stack.pop()
                popped += 1
            if popped != len(closing):
                return False
        # longer-first: nested spans sit deeper, so inner edges pop first
        for span in sorted(opens[r], key=lambda s: -s[1]):
            stack.append(span)
    return True


def validate_queue_page(edges: Sequence[Edge], order: VertexOrder) -> bool:
    """True iff no edge strictly nests another under the order.

    Sweep with a FIFO queue: enqueue at the left endpoint (same-left
    batches shorter-first), dequeue at the right endpoint.  Valid iff
    every removal happens at the front of the queue.
    """
    opens, closes = _sweep_events(edges, order)
    queue: List[Tuple[int, int]] = []
    head = 0  # dequeues advance this index instead of shifting the list
    for r in range(order.n):
        closing = closes[r]
        if closing:
            removed = 0
            while head < len(queue) and queue[head][1] == r:
                head += 1
                removed += 1
            if removed != len(closing):
                return False
        for span in sorted(opens[r], key=lambda s: s[1]):
            queue.append(span)
    return True


def is_valid_layout(g: Graph, layout: MixedLayout) -> bool:
    """True iff every page is conflict-free (total conflicts zero)."""
    spec = layout.spec
    for e in g.edges:
        if e not in layout.page_of:
            raise LayoutError(f"edge {e} has no page assignment")
    pages = layout.pages()
    for p in range(spec.k):
        if spec.is_stack(p):
            if not validate_stack_page(pages[p], layout.order):
                return False
        else:
            if not validate_queue_page(pages[p], layout.order):
                return False
    return True


def conflict_free_page_capacity(n: int) -> int:
    """Maximum edges a single conflict-free page can hold: 2n - 3."""
    return max(0, 2 * n - 3)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------
# Edge list:  "n m" then m lines "u v", canonical order, newline-terminated.
# Layout:     "s q", then the order as n vertex ids, then m lines "u v p".

def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise LayoutError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise LayoutError(f"bad header line {lines[0]!r}") from exc
    if len(lines) != m + 1:
        raise LayoutError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        u, v = (int(x) for x in line.split())
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def write_layout(g: Graph, layout: MixedLayout) -> str:
    lines = [f"{layout.spec.s} {layout.spec.q}"]
    lines.append(" ".join(str(v) for v in layout.order.vertex_at))
    for e in g.edges:
        lines.append(f"{e[0]} {e[1]} {layout.page_of[e]}")
    return "\n".join(lines) + "\n"


def read_layout(g: Graph, text: str) -> MixedLayout:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise LayoutError("layout text too short")
    s, q = (int(x) for x in lines[0].split())
    order = VertexOrder.from_sequence([int(x) for x in lines[1].split()])
    if order.n != g.n:
        raise LayoutError("order length does not match graph")
    page_of: Dict[Edge, int] = {}
    for line in lines[2:]:
        u, v, p = (int(x) for x in line.split())
        page_of[canonical_edge(u, v)] = p
    if set(page_of) != set(g.edges):
        raise LayoutError("layout does not cover exactly the graph's edges")
    return MixedLayout(order=order, spec=PageSpec(s, q), page_of=page_of)
