"""Instance generators for cubic planar bipartite multigraphs.

Besides the base pieces (Theta, even prisms, doubled C4) this module holds
``glue``, the inverse of splitting at a disjoint 2-edge-cut, and a seeded
left-deep random gluing used to build test corpora.

Randomness comes from :class:`Lcg64`, a 64-bit linear congruential
generator (Knuth's MMIX constants) whose output is the high 32 bits of the
state, so a corpus is reproducible from its seed alone::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    below(k) = (state >> 32) mod k
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GraphError
from .graphcore import Multigraph, Part, bipartition


class BadParameter(GraphError):
    pass


def gen_theta() -> Multigraph:
    """Two vertices joined by three parallel edges."""
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def gen_prism(k: int) -> Multigraph:
    """The prism C_{2k} x K2: outer cycle ``0..2k-1``, inner cycle ``2k..4k-1``, then spokes."""
    if k < 2:
        raise BadParameter(f"prism parameter must be at least 2, got {k}")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Multigraph(2 * n, tuple(edges))


def gen_cube() -> Multigraph:
    return gen_prism(2)


def gen_doubled_c4() -> Multigraph:
    """Vertices a, b, c, d = 0..3 with edges ab twice, cd twice, ac, bd."""
    return Multigraph(4, ((0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)))


PIECES: dict[str, Callable[[], Multigraph]] = {
    "theta": gen_theta,
    "doubled_c4": gen_doubled_c4,
    "prism2": gen_cube,
    "prism3": lambda: gen_prism(3),
}
DEFAULT_MENU = ("theta", "doubled_c4", "prism2", "prism3")


@dataclass(frozen=True)
class GlueResult:
    graph: Multigraph
    cut: tuple[int, int]
    left_edge_map: dict[int, int]
    right_edge_map: dict[int, int]


def glue_with_cut(h1: Multigraph, e1: int, h2: Multigraph, e2: int) -> GlueResult:
    """Glue two cubic bipartite graphs across the edges ``e1`` and ``e2``.

    ``e1 = u'u''`` and ``e2 = w'w''`` are deleted and replaced by
    ``e' = u'w'`` and ``e'' = u''w''``, where ``u'`` is the White endpoint of
    ``e1`` and ``w'`` the Black endpoint of ``e2`` (canonical bipartitions).
    H1 keeps its labels, H2 is shifted by ``h1.n``, and the surviving edges
    of H1 then H2 keep their relative order, followed by ``e'`` and ``e''``.
    """
    b1, b2 = bipartition(h1), bipartition(h2)
    p, q = h1.edges[e1]
    u1, u2 = (p, q) if b1[p] is Part.WHITE else (q, p)
    r, s = h2.edges[e2]
    w1, w2 = (r, s) if b2[r] is Part.BLACK else (s, r)
    off = h1.n
    edges: list[tuple[int, int]] = []
    left, right = {}, {}
    for i, e in enumerate(h1.edges):
        if i != e1:
            left[i] = len(edges)
            edges.append(e)
    for i, (a, c) in enumerate(h2.edges):
        if i != e2:
            right[i] = len(edges)
            edges.append((a + off, c + off))
    cut = (len(edges), len(edges) + 1)
    edges += [(u1, w1 + off), (u2, w2 + off)]
    return GlueResult(Multigraph(h1.n + h2.n, tuple(edges)), cut, left, right)


def glue(h1: Multigraph, e1: int, h2: Multigraph, e2: int) -> Multigraph:
    return glue_with_cut(h1, e1, h2, e2).graph


class Lcg64:
    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return self.state

    def below(self, bound: int) -> int:
        return (self.next() >> 32) % bound


def gen_random_glued(
    seed: int, piece_count: int, piece_menu: Sequence[str] = DEFAULT_MENU
) -> tuple[Multigraph, list[tuple[int, int]]]:
    """Left-deep random gluing of ``piece_count`` pieces drawn from ``piece_menu``.

    Returns the graph and the planted cuts as edge-id pairs.  A planted cut
    whose edge is consumed by a later gluing is carried over to the new cut
    edge on the same side, so every returned pair is a cut of the result.
    """
    if piece_count < 1:
        raise BadParameter("piece_count must be at least 1")
    unknown = [name for name in piece_menu if name not in PIECES]
    if unknown or not piece_menu:
        raise BadParameter(f"unknown pieces {unknown}; choose from {sorted(PIECES)}")
    rng = Lcg64(seed)

    def draw() -> Multigraph:
        return PIECES[piece_menu[rng.below(len(piece_menu))]]()

    g = draw()
    cuts: list[tuple[int, int]] = []
    for _ in range(piece_count - 1):
        h = draw()
        e1 = rng.below(g.m)
        e2 = rng.below(h.m)
        res = glue_with_cut(g, e1, h, e2)
        moved = []
        for a, b in cuts:
            a2 = res.cut[0] if a == e1 else res.left_edge_map[a]
            b2 = res.cut[0] if b == e1 else res.left_edge_map[b]
            moved.append((min(a2, b2), max(a2, b2)))
        cuts = moved + [res.cut]
        g = res.graph
    return g, cuts


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Multigraph
    planted_cuts: tuple[tuple[int, int], ...]


def build_corpus(
    count: int, seed: int = 0, max_pieces: int = 7, piece_menu: Sequence[str] = DEFAULT_MENU
) -> list[CorpusEntry]:
    """``count`` glued instances; entry ``i`` uses seed ``seed + i`` and ``1 + i % max_pieces`` pieces."""
    out = []
    for i in range(count):
        pieces = 1 + i % max_pieces
        g, cuts = gen_random_glued(seed + i, pieces, piece_menu)
        out.append(CorpusEntry(f"glued-s{seed + i}-p{pieces}", g, tuple(cuts)))
    return out


# ---------------------------------------------------------------------------
# Isomorphism for small multigraphs
# ---------------------------------------------------------------------------


def canonical_labeled_form(g: Multigraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Vertex count and sorted edge multiset; equal iff equal as labeled multigraphs."""
    return g.n, tuple(sorted((min(u, v), max(u, v)) for u, v in g.edges))


def _multiplicity(g: Multigraph) -> list[dict[int, int]]:
    mult: list[dict[int, int]] = [{} for _ in range(g.n)]
    for u, v in g.edges:
        mult[u][v] = mult[u].get(v, 0) + 1
        mult[v][u] = mult[v].get(u, 0) + 1
    return mult


def find_isomorphism(g: Multigraph, h: Multigraph) -> list[int] | None:
    """A vertex bijection g -> h preserving edge multiplicities, or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    mg, mh = _multiplicity(g), _multiplicity(h)
    # Visit g's vertices so each (after the first of a component) has a mapped neighbor.
    order: list[int] = []
    seen = set()
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        order.append(s)
        k = len(order) - 1
        while k < len(order):
            for y, _ in g.incidence[order[k]]:
                if y not in seen:
                    seen.add(y)
                    order.append(y)
            k += 1
    phi = [-1] * g.n
    used = [False] * h.n

    def extend(k: int) -> bool:
        if k == g.n:
            return True
        x = order[k]
        for y in range(h.n):
            if used[y] or h.degrees[y] != g.degrees[x]:
                continue
            if any(mh[y].get(phi[z], 0) != c for z, c in mg[x].items() if phi[z] >= 0):
                continue
            if sum(1 for z in mh[y] if used[z]) != sum(1 for z in mg[x] if phi[z] >= 0):
                continue
            phi[x], used[y] = y, True
            if extend(k + 1):
                return True
            phi[x], used[y] = -1, False
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    return find_isomorphism(g, h) is not None
