"""Subhamiltonian dispersable embeddings of cubic planar bipartite multigraphs.

The construction recurses on disjoint 2-edge-cuts.  A cut ``{e', e''}`` with
``e' = u'w'`` and ``e'' = u''w''`` splits G into sides G1 and G2; each side
is patched back to a cubic graph with the edge ``u'u''`` (resp. ``w'w''``),
which keeps it bipartite because the attachment vertices sit in opposite
parts.  The two patched pieces are embedded recursively, their pages are
renamed so both patch edges land on gamma, and the spines are spliced as
``reverse(lam1) + lam2`` where ``lam1`` starts at ``u''`` and ``lam2`` at
``w''``.  Both cut edges then go on gamma.  The recursion bottoms out at
Theta or at a 3-edge-connected piece, which is handed to the exact solver.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .book import (
    DEFAULT_NODE_LIMIT,
    GAMMA,
    CyclicOrder,
    PageColoring,
    exact_dispersable_subhamiltonian,
    verify_matching_book_embedding,
)
from .errors import (
    BaseCaseExhausted,
    CombineVerificationFailed,
    EntanglementViolated,
    NotBipartite,
    NotCubic,
    NotPlanar,
    SearchExhausted,
)
from .graphcore import (
    Bipartition,
    CutSplit,
    Multigraph,
    bipartition,
    check_entanglement,
    find_disjoint_two_edge_cut,
    is_k_regular,
)
from .planarity import is_planar

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatchedPiece:
    """One side of a cut, made cubic again by its patch edge.

    ``back_map`` and ``edge_back_map`` send vertices and edges of ``H`` to
    those of the parent graph; the patch edge maps to None.
    """

    H: Multigraph
    patch_edge: int
    back_map: tuple[int, ...]
    edge_back_map: tuple[int | None, ...]
    attach_start: int
    attach_other: int


@dataclass(frozen=True)
class Leaf:
    """A base piece; ``graph`` is the piece itself, vertex ``k`` standing for ``vertices[k]``."""

    kind: str  # "theta" or "three_connected"
    vertices: tuple[int, ...]
    graph: Multigraph | None = None


@dataclass(frozen=True)
class Split:
    """A cut applied to the graph on ``vertices``; ``cut`` uses that graph's local labels."""

    cut: CutSplit
    vertices: tuple[int, ...]
    left: "DecompositionTrace"
    right: "DecompositionTrace"


@dataclass(frozen=True)
class Components:
    parts: tuple["DecompositionTrace", ...]


DecompositionTrace = Union[Leaf, Split, Components]


def trace_leaves(trace: DecompositionTrace) -> list[Leaf]:
    if isinstance(trace, Leaf):
        return [trace]
    if isinstance(trace, Split):
        return trace_leaves(trace.left) + trace_leaves(trace.right)
    return [leaf for part in trace.parts for leaf in trace_leaves(part)]


def trace_splits(trace: DecompositionTrace) -> list[Split]:
    if isinstance(trace, Leaf):
        return []
    if isinstance(trace, Split):
        return [trace] + trace_splits(trace.left) + trace_splits(trace.right)
    return [s for part in trace.parts for s in trace_splits(part)]


def _remap(trace: DecompositionTrace, vmap: tuple[int, ...]) -> DecompositionTrace:
    if isinstance(trace, Leaf):
        return Leaf(trace.kind, tuple(vmap[v] for v in trace.vertices), trace.graph)
    if isinstance(trace, Split):
        return Split(
            trace.cut,
            tuple(vmap[v] for v in trace.vertices),
            _remap(trace.left, vmap),
            _remap(trace.right, vmap),
        )
    return Components(tuple(_remap(p, vmap) for p in trace.parts))


# ---------------------------------------------------------------------------
# Split and combine
# ---------------------------------------------------------------------------


def _patched(g: Multigraph, vertices, start: int, other: int) -> PatchedPiece:
    base, vmap, emap = g.induced(vertices)
    local = {v: k for k, v in enumerate(vmap)}
    h = Multigraph(base.n, base.edges + ((local[other], local[start]),))
    return PatchedPiece(h, base.m, vmap, emap + (None,), local[start], local[other])


def split_at_cut(g: Multigraph, b: Bipartition, cut: CutSplit) -> tuple[PatchedPiece, PatchedPiece]:
    """Cut ``g`` at ``cut`` and patch each side: ``H1 = G1 + u'u''``, ``H2 = G2 + w'w''``."""
    if not check_entanglement(g, b, cut):
        raise EntanglementViolated(
            f"attachments of cut ({cut.e_prime}, {cut.e_dprime}) share a bipartition part"
        )
    one = sorted(cut.side_one)
    two = sorted(set(range(g.n)) - cut.side_one)
    left = _patched(g, one, cut.u_dprime, cut.u_prime)
    right = _patched(g, two, cut.w_dprime, cut.w_prime)
    for piece in (left, right):
        if not is_k_regular(piece.H, 3):
            raise EntanglementViolated("patched piece is not cubic")
        try:
            bipartition(piece.H)
        except NotBipartite as exc:
            raise EntanglementViolated("patched piece is not bipartite") from exc
    return left, right


def normalize_colors(c: PageColoring, e: int, target: int = GAMMA) -> PageColoring:
    """Swap two page names so that edge ``e`` lands on ``target``."""
    current = c[e]
    if current == target:
        return c
    return c.relabel({current: target, target: current})


_DIRECTIONS = ((True, True), (True, False), (False, True), (False, False))


def combine(
    g: Multigraph,
    left: tuple[PatchedPiece, CyclicOrder, PageColoring],
    right: tuple[PatchedPiece, CyclicOrder, PageColoring],
    cut: CutSplit,
) -> tuple[CyclicOrder, PageColoring]:
    """Splice the embeddings of both pieces into one for ``g``.

    Each piece's spine can be read in two directions from its start vertex.
    The forward readings are tried first; the first splice that passes the
    verifier (three matching pages, no crossings, subhamiltonian) wins.
    """
    piece1, order1, col1 = left
    piece2, order2, col2 = right
    col1 = normalize_colors(col1, piece1.patch_edge, GAMMA)
    col2 = normalize_colors(col2, piece2.patch_edge, GAMMA)

    pages: list[int | None] = [None] * g.m
    for piece, col in ((piece1, col1), (piece2, col2)):
        for he, ge in enumerate(piece.edge_back_map):
            if ge is not None:
                pages[ge] = col[he]
    pages[cut.e_prime] = GAMMA
    pages[cut.e_dprime] = GAMMA
    coloring = PageColoring(tuple(pages))

    for attempt, (fwd1, fwd2) in enumerate(_DIRECTIONS):
        lam1 = order1.linearize(piece1.attach_start, fwd1)
        lam2 = order2.linearize(piece2.attach_start, fwd2)
        spine = [piece1.back_map[h] for h in reversed(lam1)] + [piece2.back_map[h] for h in lam2]
        order = CyclicOrder(tuple(spine))
        report = verify_matching_book_embedding(g, order, coloring, pages=3)
        if report.ok and report.subhamiltonian:
            if attempt:
                log.debug("combine at cut (%d, %d) needed direction retry %d", cut.e_prime, cut.e_dprime, attempt)
            return order, coloring
    raise CombineVerificationFailed(
        f"no direction choice gives a valid embedding at cut ({cut.e_prime}, {cut.e_dprime})"
    )


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------

THETA_ORDER = CyclicOrder((0, 1))
THETA_COLORING = PageColoring((0, 1, 2))


def _is_theta(g: Multigraph) -> bool:
    return g.n == 2 and g.m == 3


@lru_cache(maxsize=1024)
def _base_case(g: Multigraph, node_limit: int) -> tuple[CyclicOrder, PageColoring]:
    try:
        return exact_dispersable_subhamiltonian(g, node_limit)
    except SearchExhausted as exc:
        raise BaseCaseExhausted(exc.node_limit) from None


def _check(g: Multigraph, order: CyclicOrder, coloring: PageColoring, where: str) -> None:
    report = verify_matching_book_embedding(g, order, coloring, pages=3)
    if not (report.ok and report.subhamiltonian):
        raise CombineVerificationFailed(f"{where}: {report.violations[:3]}")


def _embed_connected(
    g: Multigraph, node_limit: int, debug: bool
) -> tuple[CyclicOrder, PageColoring, DecompositionTrace]:
    everything = tuple(range(g.n))
    if _is_theta(g):
        return THETA_ORDER, THETA_COLORING, Leaf("theta", everything, g)
    cut = find_disjoint_two_edge_cut(g)
    if cut is None:
        order, coloring = _base_case(g, node_limit)
        _check(g, order, coloring, "base case")
        return order, coloring, Leaf("three_connected", everything, g)

    left, right = split_at_cut(g, bipartition(g), cut)
    solved = []
    for piece in (left, right):
        if debug:
            assert is_planar(piece.H, witness=False).planar, "patched piece lost planarity"
        order, coloring, sub = _embed_connected(piece.H, node_limit, debug)
        _check(piece.H, order, coloring, "piece")
        solved.append((piece, order, coloring, _remap(sub, piece.back_map)))
    (p1, o1, c1, t1), (p2, o2, c2, t2) = solved
    order, coloring = combine(g, (p1, o1, c1), (p2, o2, c2), cut)
    return order, coloring, Split(cut, everything, t1, t2)


def check_hypotheses(g: Multigraph) -> Bipartition:
    """Raise the specific hypothesis error if ``g`` is not cubic, bipartite and planar."""
    for v, d in enumerate(g.degrees):
        if d != 3:
            raise NotCubic(v, d)
    b = bipartition(g)
    verdict = is_planar(g)
    if not verdict.planar:
        raise NotPlanar(verdict.witness)
    return b


def embed_dispersable(
    g: Multigraph, node_limit: int = DEFAULT_NODE_LIMIT, debug: bool = False
) -> tuple[CyclicOrder, PageColoring, DecompositionTrace]:
    """Subhamiltonian 3-page matching book embedding of a cubic planar bipartite multigraph.

    Components are embedded separately and their spines concatenated; page
    names are shared across components.
    """
    check_hypotheses(g)
    spine: list[int] = []
    pages: list[int | None] = [None] * g.m
    traces = []
    for comp in g.components:
        h, vmap, emap = g.induced(comp)
        order, coloring, trace = _embed_connected(h, node_limit, debug)
        spine.extend(vmap[v] for v in order)
        for he, ge in enumerate(emap):
            pages[ge] = coloring[he]
        traces.append(_remap(trace, vmap))
    order = CyclicOrder(tuple(spine))
    coloring = PageColoring(tuple(pages))
    if g.m:
        _check(g, order, coloring, "final embedding")
    trace = traces[0] if len(traces) == 1 else Components(tuple(traces))
    return order, coloring, trace
