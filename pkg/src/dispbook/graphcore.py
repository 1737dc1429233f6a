"""Loopless multigraphs with stable edge identities.

Edges are identified by their index in :attr:`Multigraph.edges`, so parallel
edges stay distinguishable (each copy can live on its own page).  Besides the
container this module holds the connectivity machinery the decomposition
needs: bipartition, cutpoints, bridges and disjoint 2-edge-cuts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BadIndex, LoopRejected, NotBipartite, NotConnected, NotCubicBipartite

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph on vertices ``0..n-1``.

    ``edges[i]`` holds the endpoints of edge ``i``; repeated pairs are
    parallel edges.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for i, (u, v) in enumerate(edges):
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise BadIndex(x, self.n)
            if u == v:
                raise LoopRejected(u, i)
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``incidence[v]`` lists ``(neighbor, edge_id)`` in edge-id order."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(row) for row in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.incidence)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edges_between(self, u: int, v: int) -> list[int]:
        return [i for w, i in self.incidence[u] if w == v]

    def other_end(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        return b if v == a else a

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components, each sorted, ordered by smallest vertex."""
        return tuple(_components(self, frozenset()))

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def induced(self, vertices: Iterable[int]) -> tuple["Multigraph", tuple[int, ...], tuple[int, ...]]:
        """Induced subgraph, relabelled in increasing vertex order.

        Returns ``(H, vertex_back_map, edge_back_map)`` mapping H's vertices
        and edges to those of this graph.
        """
        keep = sorted(set(vertices))
        index = {v: k for k, v in enumerate(keep)}
        edges, emap = [], []
        for i, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                edges.append((index[u], index[v]))
                emap.append(i)
        return Multigraph(len(keep), tuple(edges)), tuple(keep), tuple(emap)


def build_multigraph(n: int, edge_list: Iterable[Sequence[int]]) -> Multigraph:
    """Build a multigraph; repeated pairs become parallel edges in input order."""
    return Multigraph(n, tuple((u, v) for u, v in edge_list))


def _components(g: Multigraph, removed: frozenset[int]) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for y, i in g.incidence[x]:
                if not seen[y] and i not in removed:
                    seen[y] = True
                    stack.append(y)
                    comp.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def count_components(g: Multigraph, removed_edges: Iterable[int] = (), removed_vertices: Iterable[int] = ()) -> int:
    """Number of components after deleting the given edges and vertices."""
    dead_v = set(removed_vertices)
    dead_e = set(removed_edges)
    seen = [v in dead_v for v in range(g.n)]
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y, i in g.incidence[x]:
                if not seen[y] and i not in dead_e:
                    seen[y] = True
                    stack.append(y)
    return count


# ---------------------------------------------------------------------------
# Bipartition
# ---------------------------------------------------------------------------


class Part(IntEnum):
    WHITE = 0
    BLACK = 1


@dataclass(frozen=True)
class Bipartition:
    part: tuple[Part, ...]

    def __getitem__(self, v: int) -> Part:
        return self.part[v]

    @property
    def white(self) -> list[int]:
        return [v for v, p in enumerate(self.part) if p is Part.WHITE]

    @property
    def black(self) -> list[int]:
        return [v for v, p in enumerate(self.part) if p is Part.BLACK]


def bipartition(g: Multigraph) -> Bipartition:
    """Breadth-first 2-coloring; the lowest vertex of each component is White.

    Raises :class:`NotBipartite` carrying an odd cycle as witness.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = Part.WHITE
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, _ in g.incidence[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    raise NotBipartite(_odd_cycle(parent, x, y))
    return Bipartition(tuple(Part(c) for c in color))


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    # Walk both tree paths up to their lowest common ancestor.
    path_x = [x]
    while parent[path_x[-1]] != -1:
        path_x.append(parent[path_x[-1]])
    depth = {v: k for k, v in enumerate(path_x)}
    path_y = [y]
    while path_y[-1] not in depth:
        path_y.append(parent[path_y[-1]])
    lca = path_y[-1]
    return path_x[: depth[lca] + 1] + path_y[-2::-1]


def is_bipartite(g: Multigraph) -> bool:
    try:
        bipartition(g)
    except NotBipartite:
        return False
    return True


def is_k_regular(g: Multigraph, k: int) -> bool:
    """True iff every vertex has degree exactly ``k`` (parallel edges counted)."""
    return all(d == k for d in g.degrees)


# ---------------------------------------------------------------------------
# Cutpoints and bridges
# ---------------------------------------------------------------------------


def _lowpoints(g: Multigraph, skip_edge: int = -1):
    """Iterative DFS yielding discovery times, lowpoints and tree structure.

    Parallel edges are handled by excluding only the tree edge's id (not its
    endpoint pair) when computing lowpoints.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    parent_edge = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    roots = []
    t = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        roots.append(s)
        disc[s] = low[s] = t
        t += 1
        stack = [(s, iter(g.incidence[s]))]
        while stack:
            x, it = stack[-1]
            advanced = False
            for y, i in it:
                if i == skip_edge or i == parent_edge[x]:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = t
                    t += 1
                    parent_edge[y] = i
                    children[x].append(y)
                    stack.append((y, iter(g.incidence[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[x])
    return disc, low, parent_edge, children, roots


def cutpoints(g: Multigraph) -> set[int]:
    """Vertices whose removal increases the number of components."""
    disc, low, _, children, roots = _lowpoints(g)
    rootset = set(roots)
    cut = set()
    for v in range(g.n):
        if v in rootset:
            if len(children[v]) > 1:
                cut.add(v)
        elif any(low[c] >= disc[v] for c in children[v]):
            cut.add(v)
    return cut


def _bridges(g: Multigraph, skip_edge: int = -1) -> set[int]:
    disc, low, parent_edge, _, _ = _lowpoints(g, skip_edge)
    return {parent_edge[v] for v in range(g.n) if parent_edge[v] != -1 and low[v] == disc[v]}


def bridges(g: Multigraph) -> set[int]:
    """Edge ids whose removal disconnects their component.

    A parallel edge is never a bridge.
    """
    return _bridges(g)


def oriented_degree(g: Multigraph, b: Bipartition, h_vertices: Iterable[int], v: int) -> int:
    """In-degree minus out-degree of ``v`` in the subgraph induced by ``h_vertices``.

    Edges are oriented White to Black, so an interior vertex of a k-regular
    graph scores ``+k`` when Black and ``-k`` when White.
    """
    inside = set(h_vertices)
    if v not in inside:
        raise ValueError(f"vertex {v} is not in the given vertex set")
    sign = 1 if b[v] is Part.BLACK else -1
    return sign * sum(1 for w, _ in g.incidence[v] if w in inside)


# ---------------------------------------------------------------------------
# Disjoint 2-edge-cuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutSplit:
    """A disjoint 2-edge-cut ``{e', e''}`` with its attachment vertices.

    ``e' = u'w'`` and ``e'' = u''w''`` where ``u', u''`` lie on side One and
    ``w', w''`` on side Two.
    """

    e_prime: int
    e_dprime: int
    u_prime: int
    u_dprime: int
    w_prime: int
    w_dprime: int
    side_one: frozenset[int]

    def side(self, v: int) -> int:
        return 1 if v in self.side_one else 2


def _require_cubic_bipartite(g: Multigraph) -> Bipartition:
    if not is_k_regular(g, 3):
        raise NotCubicBipartite("graph is not cubic")
    try:
        b = bipartition(g)
    except NotBipartite as exc:
        raise NotCubicBipartite(f"graph is not bipartite: odd cycle {exc.cycle}") from exc
    return b


def _disjoint(g: Multigraph, i: int, j: int) -> bool:
    return not set(g.edges[i]) & set(g.edges[j])


def make_cut_split(g: Multigraph, e_prime: int, e_dprime: int) -> CutSplit:
    """Describe the cut ``{e_prime, e_dprime}``; side One holds the lower endpoint of ``e_prime``."""
    if not _disjoint(g, e_prime, e_dprime):
        raise ValueError(f"edges {e_prime} and {e_dprime} share an endpoint")
    a, c = g.edges[e_prime]
    start = min(a, c)
    comps = _components(g, frozenset((e_prime, e_dprime)))
    one = next(comp for comp in comps if start in comp)
    side_one = frozenset(one)
    other = max(a, c)
    if other in side_one:
        raise ValueError(f"edges {e_prime}, {e_dprime} do not form a 2-edge-cut")
    x, y = g.edges[e_dprime]
    if (x in side_one) == (y in side_one):
        raise ValueError(f"edges {e_prime}, {e_dprime} do not form a 2-edge-cut")
    u_dprime, w_dprime = (x, y) if x in side_one else (y, x)
    return CutSplit(e_prime, e_dprime, start, u_dprime, other, w_dprime, side_one)


def all_disjoint_two_edge_cuts(g: Multigraph) -> list[tuple[int, int]]:
    """Every vertex-disjoint edge pair whose removal disconnects ``g``, in lexicographic order.

    ``{e, f}`` is a cut of a bridgeless graph exactly when ``f`` is a bridge
    of ``g - e``, so one bridge search per edge suffices.
    """
    if bridges(g):
        raise ValueError("graph has a bridge; 2-edge-cuts are not well defined here")
    cuts = []
    for i in range(g.m):
        for j in sorted(_bridges(g, skip_edge=i)):
            if j > i and _disjoint(g, i, j):
                cuts.append((i, j))
    return cuts


def find_disjoint_two_edge_cut(g: Multigraph) -> CutSplit | None:
    """Lexicographically least disjoint 2-edge-cut of a connected cubic bipartite graph.

    Returns None when there is none, i.e. the graph is 3-edge-connected
    (hence 3-connected, being cubic) or is Theta.
    """
    _require_cubic_bipartite(g)
    if not g.is_connected:
        raise NotConnected("graph must be connected")
    for i in range(g.m):
        candidates = [j for j in _bridges(g, skip_edge=i) if j > i and _disjoint(g, i, j)]
        if candidates:
            return make_cut_split(g, i, min(candidates))
    return None


def check_entanglement(g: Multigraph, b: Bipartition, cut: CutSplit | None) -> bool:
    """Attachment vertices on each side of the cut lie in opposite parts."""
    if cut is None:
        return True
    return b[cut.u_prime] != b[cut.u_dprime] and b[cut.w_prime] != b[cut.w_dprime]
