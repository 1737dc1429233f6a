"""Book embeddings: spine orders, page colorings, verification and exact search.

A book embedding is a cyclic vertex order (the spine) plus an edge coloring
whose color classes (pages) are crossing-free.  For *matching* embeddings
each page must also be a matching.  Parallel edges never cross each other:
they can always be drawn nested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import NoneWithinBudget, NotCubicBipartite, NoWitnessFound, SearchExhausted
from .graphcore import Multigraph, is_bipartite, is_k_regular

PAGE_NAMES = ("alpha", "beta", "gamma")
ALPHA, BETA, GAMMA = 0, 1, 2
DEFAULT_NODE_LIMIT = 10**8


def page_name(p: int) -> str:
    return PAGE_NAMES[p] if p < len(PAGE_NAMES) else f"page{p}"


@dataclass(frozen=True)
class CyclicOrder:
    """A spine order read cyclically."""

    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(int(v) for v in self.sequence)
        if len(set(seq)) != len(seq):
            raise ValueError("cyclic order repeats a vertex")
        object.__setattr__(self, "sequence", seq)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.sequence)}

    def linearize(self, start: int, forward: bool = True) -> tuple[int, ...]:
        """One of the two linear orders that begin at ``start``."""
        k = self.position[start]
        rotated = self.sequence[k:] + self.sequence[:k]
        if forward:
            return rotated
        return rotated[:1] + rotated[:0:-1]

    def is_equivalent(self, other: "CyclicOrder") -> bool:
        """Same cyclic order up to rotation and reflection."""
        if set(self.sequence) != set(other.sequence):
            return False
        if not self.sequence:
            return True
        start = self.sequence[0]
        return self.sequence in (other.linearize(start, True), other.linearize(start, False))


@dataclass(frozen=True)
class PageColoring:
    """``pages[e]`` is the page of edge ``e``, or None when uncolored."""

    pages: tuple[int | None, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pages", tuple(None if p is None else int(p) for p in self.pages))

    def __getitem__(self, e: int) -> int | None:
        return self.pages[e]

    def __len__(self) -> int:
        return len(self.pages)

    @property
    def page_count(self) -> int:
        return len({p for p in self.pages if p is not None})

    def edges_on(self, page: int) -> list[int]:
        return [e for e, p in enumerate(self.pages) if p == page]

    def relabel(self, mapping: Mapping[int, int]) -> "PageColoring":
        return PageColoring(tuple(None if p is None else mapping.get(p, p) for p in self.pages))


def crosses(order: CyclicOrder, e: Sequence[int], f: Sequence[int]) -> bool:
    """Whether chords ``e`` and ``f`` interleave on the spine.

    Edges sharing an endpoint (parallel copies included) never cross.
    """
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    pos = order.position
    lo, hi = sorted((pos[a], pos[b]))
    return (lo < pos[c] < hi) != (lo < pos[d] < hi)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SharedEndpoint:
    page: int
    e: int
    f: int


@dataclass(frozen=True)
class Crossing:
    page: int
    e: int
    f: int


@dataclass(frozen=True)
class Uncolored:
    e: int


@dataclass(frozen=True)
class OrderMismatch:
    detail: str


@dataclass(frozen=True)
class PageCountMismatch:
    page_count: int
    expected: int


Violation = SharedEndpoint | Crossing | Uncolored | OrderMismatch | PageCountMismatch


@dataclass(frozen=True)
class VerifyReport:
    page_count: int
    violations: tuple = ()
    subhamiltonian: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def is_book_embedding(self) -> bool:
        """No structural violation; the page count may still differ from the target."""
        return not any(not isinstance(v, PageCountMismatch) for v in self.violations)

    def crossings_per_page(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for v in self.violations:
            if isinstance(v, Crossing):
                out[v.page] = out.get(v.page, 0) + 1
        return out


def verify_matching_book_embedding(
    g: Multigraph,
    order: CyclicOrder,
    coloring: PageColoring,
    pages: int | None = None,
) -> VerifyReport:
    """Check that ``(order, coloring)`` is a matching book embedding of ``g``.

    Every same-page pair sharing an endpoint or crossing is reported, as is
    every uncolored edge.  The page count must equal ``pages``, which
    defaults to the maximum degree (the dispersable target).
    """
    violations: list = []
    if sorted(order.sequence) != list(range(g.n)):
        violations.append(OrderMismatch(f"spine is not a permutation of 0..{g.n - 1}"))
        return VerifyReport(coloring.page_count, tuple(violations), False)
    if len(coloring) != g.m:
        violations.append(OrderMismatch(f"coloring covers {len(coloring)} edges, graph has {g.m}"))
        return VerifyReport(coloring.page_count, tuple(violations), False)

    by_page: dict[int, list[int]] = {}
    for e, p in enumerate(coloring.pages):
        if p is None:
            violations.append(Uncolored(e))
        else:
            by_page.setdefault(p, []).append(e)
    for p in sorted(by_page):
        es = by_page[p]
        for i, e in enumerate(es):
            for f in es[i + 1 :]:
                if set(g.edges[e]) & set(g.edges[f]):
                    violations.append(SharedEndpoint(p, e, f))
                elif crosses(order, g.edges[e], g.edges[f]):
                    violations.append(Crossing(p, e, f))

    target = g.max_degree if pages is None else pages
    if coloring.page_count != target:
        violations.append(PageCountMismatch(coloring.page_count, target))
    return VerifyReport(coloring.page_count, tuple(violations), is_subhamiltonian_order(g, order))


def conflict_graph(g: Multigraph, order: CyclicOrder) -> Multigraph:
    """Graph on the edges of ``g``; two edges are adjacent iff they cross."""
    pairs = []
    for e in range(g.m):
        for f in range(e + 1, g.m):
            if crosses(order, g.edges[e], g.edges[f]):
                pairs.append((e, f))
    return Multigraph(g.m, tuple(pairs))


def is_subhamiltonian_order(g: Multigraph, order: CyclicOrder) -> bool:
    """True iff the edges admit a crossing-free 2-page assignment on this spine."""
    return is_bipartite(conflict_graph(g, order))


# ---------------------------------------------------------------------------
# Exact search
# ---------------------------------------------------------------------------


class _Exhausted(Exception):
    pass


class _BookSearch:
    """Backtracking over spine orders with incremental page assignment.

    Vertices are appended to a linear spine one at a time, vertex 0 first,
    and reflections are pruned by requiring the second vertex to be smaller
    than the last.  Because every later vertex lands to the right of all
    placed ones, the crossing status of two edges is final as soon as both
    are complete, and an edge ``(a, v)`` completed by the newest vertex ``v``
    crosses a completed ``(c, d)`` exactly when ``pos[c] < pos[a] < pos[d]``.
    When an edge completes it receives a page, most constrained edge first,
    with new pages opened in order of first use.

    With ``subhamiltonian`` set, a parity union-find over edges (with
    rollback) keeps the conflict graph bipartite as crossings appear.
    """

    def __init__(self, g: Multigraph, pages: int, node_limit: int, subhamiltonian: bool) -> None:
        self.g = g
        self.p = pages
        self.node_limit = node_limit
        self.subham = subhamiltonian
        self.nodes = 0
        n, m = g.n, g.m
        self.pos = [-1] * n
        self.order: list[int] = []
        self.page = [-1] * m
        self.used = [0] * n
        self.completed: list[int] = []
        self.span = [(0, 0)] * m
        self.uf_parent = list(range(m))
        self.uf_parity = [0] * m
        self.uf_rank = [0] * m
        self.uf_history: list[tuple[int, int, bool]] = []

    # parity union-find -------------------------------------------------

    def _find(self, x: int) -> tuple[int, int]:
        parity = 0
        parent = self.uf_parent
        while parent[x] != x:
            parity ^= self.uf_parity[x]
            x = parent[x]
        return x, parity

    def _separate(self, a: int, b: int) -> bool:
        ra, pa = self._find(a)
        rb, pb = self._find(b)
        if ra == rb:
            return pa != pb
        if self.uf_rank[ra] < self.uf_rank[rb]:
            ra, rb = rb, ra
        self.uf_parent[rb] = ra
        self.uf_parity[rb] = pa ^ pb ^ 1
        bumped = self.uf_rank[ra] == self.uf_rank[rb]
        if bumped:
            self.uf_rank[ra] += 1
        self.uf_history.append((rb, ra, bumped))
        return True

    def _rollback(self, mark: int) -> None:
        while len(self.uf_history) > mark:
            rb, ra, bumped = self.uf_history.pop()
            self.uf_parent[rb] = rb
            self.uf_parity[rb] = 0
            if bumped:
                self.uf_rank[ra] -= 1

    # search --------------------------------------------------------------

    def run(self) -> tuple[CyclicOrder, PageColoring] | None:
        if self.g.n == 0:
            return CyclicOrder(()), PageColoring(())
        try:
            found = self._extend(0, -1)
        except _Exhausted:
            raise SearchExhausted(self.node_limit) from None
        if not found:
            return None
        return CyclicOrder(tuple(self.order)), PageColoring(tuple(self.page))

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _Exhausted

    def _extend(self, depth: int, max_page: int) -> bool:
        n = self.g.n
        if depth == n:
            return True
        if depth == 0:
            candidates = [0]
        else:
            candidates = [v for v in range(n) if self.pos[v] < 0]
            if depth >= 2 and n >= 3:
                second = self.order[1]
                if depth == n - 1:
                    candidates = [v for v in candidates if v > second]
                elif candidates[-1] < second:
                    return False
        for v in candidates:
            self._tick()
            self.pos[v] = depth
            self.order.append(v)
            new_edges = [(a, e) for a, e in self.g.incidence[v] if self.pos[a] >= 0]
            if self._assign(v, new_edges, depth, max_page):
                return True
            self.order.pop()
            self.pos[v] = -1
        return False

    def _crossed_by(self, a: int) -> list[int]:
        pa = self.pos[a]
        span = self.span
        return [f for f in self.completed if span[f][0] < pa < span[f][1]]

    def _assign(self, v: int, new_edges: list[tuple[int, int]], depth: int, max_page: int) -> bool:
        if not new_edges:
            return self._extend(depth + 1, max_page)
        full = (1 << self.p) - 1
        prepared = []
        for a, e in new_edges:
            crossed = self._crossed_by(a)
            blocked = self.used[a]
            for f in crossed:
                blocked |= 1 << self.page[f]
            prepared.append((bin(full & ~blocked).count("1"), e, a, crossed))
        prepared.sort(key=lambda t: (t[0], t[1]))
        mark = len(self.uf_history)
        if self.subham:
            for _, e, _, crossed in prepared:
                for f in crossed:
                    if not self._separate(e, f):
                        self._rollback(mark)
                        return False
        ok = self._assign_rec(v, prepared, 0, depth, max_page)
        if not ok:
            self._rollback(mark)
        return ok

    def _assign_rec(self, v: int, prepared: list, k: int, depth: int, max_page: int) -> bool:
        if k == len(prepared):
            self._tick()
            return self._extend(depth + 1, max_page)
        _, e, a, crossed = prepared[k]
        blocked = self.used[a] | self.used[v]
        for f in crossed:
            blocked |= 1 << self.page[f]
        pos_a = self.pos[a]
        for p in range(min(self.p, max_page + 2)):
            bit = 1 << p
            if blocked & bit:
                continue
            self.page[e] = p
            self.used[a] |= bit
            self.used[v] |= bit
            self.span[e] = (pos_a, depth)
            self.completed.append(e)
            if self._assign_rec(v, prepared, k + 1, depth, max(max_page, p)):
                return True
            self.completed.pop()
            self.used[a] &= ~bit
            self.used[v] &= ~bit
            self.page[e] = -1
        return False


@dataclass(frozen=True)
class MbtResult:
    value: int
    order: CyclicOrder
    coloring: PageColoring
    nodes: int = field(default=0, compare=False)


def exact_mbt(g: Multigraph, page_budget: int = 6, node_limit: int = DEFAULT_NODE_LIMIT) -> MbtResult:
    """Exact matching book thickness with a witness, by exhaustive search.

    Page counts are tried upward from the maximum degree.  Raises
    :class:`SearchExhausted` when ``node_limit`` search nodes (summed over
    all page counts) are spent, and :class:`NoneWithinBudget` when every
    count up to ``page_budget`` is proven infeasible.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    spent = 0
    for p in range(g.max_degree, page_budget + 1):
        search = _BookSearch(g, p, node_limit - spent, subhamiltonian=False)
        try:
            found = search.run()
        except SearchExhausted:
            raise SearchExhausted(node_limit) from None
        spent += search.nodes
        if found is not None:
            return MbtResult(p, found[0], found[1], spent)
    raise NoneWithinBudget(page_budget)


def exact_dispersable_subhamiltonian(
    g: Multigraph, node_limit: int = DEFAULT_NODE_LIMIT
) -> tuple[CyclicOrder, PageColoring]:
    """First 3-page matching embedding, in canonical search order, whose spine is subhamiltonian.

    Raises :class:`SearchExhausted` at the node limit and
    :class:`NoWitnessFound` when the whole space holds no witness.
    """
    if not is_k_regular(g, 3) or not is_bipartite(g):
        raise NotCubicBipartite("base-case solver needs a cubic bipartite multigraph")
    found = _BookSearch(g, 3, node_limit, subhamiltonian=True).run()
    if found is None:
        raise NoWitnessFound("no subhamiltonian 3-page matching embedding exists")
    return found


def search_nodes_for_base_case(g: Multigraph, node_limit: int = DEFAULT_NODE_LIMIT) -> int:
    """Number of search nodes the base-case solver spends on ``g``."""
    search = _BookSearch(g, 3, node_limit, subhamiltonian=True)
    search.run()
    return search.nodes
