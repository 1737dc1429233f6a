"""Arc-diagram rendering of book embeddings as standalone SVG.

Vertices sit on a horizontal spine in spine order and every edge is drawn
as an arc above it, stroked by page.  Parallel copies get taller arcs so
they stay distinguishable.  Output is byte-stable for fixed input.
"""

from __future__ import annotations

from .book import Crossing, CyclicOrder, PageColoring, SharedEndpoint, page_name, verify_matching_book_embedding
from .graphcore import Multigraph

PAGE_STROKES = ("crimson", "royalblue", "seagreen", "darkorange", "purple", "saddlebrown", "teal", "olive")
SPACING = 60.0
MARGIN = 30.0


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(g: Multigraph, order: CyclicOrder, coloring: PageColoring, highlight: bool = False) -> str:
    """SVG arc diagram; with ``highlight`` the edges in violations are drawn thick and dashed."""
    pos = order.position
    flagged: set[int] = set()
    if highlight:
        report = verify_matching_book_embedding(g, order, coloring)
        for v in report.violations:
            if isinstance(v, (Crossing, SharedEndpoint)):
                flagged.update((v.e, v.f))

    arcs = []
    tallest = 0.0
    for e, (u, v) in enumerate(g.edges):
        a, b = sorted((pos[u], pos[v]))
        copy = g.edges_between(u, v).index(e)
        rx = (b - a) * SPACING / 2
        ry = rx * (1 + 0.35 * copy)
        tallest = max(tallest, ry)
        arcs.append((e, a, b, rx, ry))

    width = 2 * MARGIN + max(g.n - 1, 0) * SPACING
    spine_y = MARGIN + tallest
    height = spine_y + 2 * MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<line class="spine" x1="{_fmt(MARGIN)}" y1="{_fmt(spine_y)}" x2="{_fmt(width - MARGIN)}" '
        f'y2="{_fmt(spine_y)}" stroke="#999" stroke-width="1"/>',
    ]
    for e, a, b, rx, ry in arcs:
        x1 = MARGIN + a * SPACING
        x2 = MARGIN + b * SPACING
        p = coloring[e]
        stroke = "gray" if p is None else PAGE_STROKES[p % len(PAGE_STROKES)]
        page = "uncolored" if p is None else page_name(p)
        extra = ""
        if p is None:
            extra = ' stroke-dasharray="2 3"'
        if e in flagged:
            extra = ' stroke-width="3.5" stroke-dasharray="6 3"'
            page += " violation"
        else:
            extra = ' stroke-width="1.8"' + extra
        out.append(
            f'<path class="edge {page}" data-edge="{e}" d="M {_fmt(x1)} {_fmt(spine_y)} '
            f'A {_fmt(rx)} {_fmt(ry)} 0 0 1 {_fmt(x2)} {_fmt(spine_y)}" fill="none" stroke="{stroke}"{extra}/>'
        )
    for k, v in enumerate(order.sequence):
        x = MARGIN + k * SPACING
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(spine_y)}" r="4" fill="black"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(spine_y + 18)}" font-size="11" text-anchor="middle">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
