"""Text formats: MEL multigraph edge lists and book embeddings.

MEL::

    # optional comment lines
    n m
    u v        (m lines, 0-based; repeated lines are parallel edges)

Embedding::

    order: v0 v1 ... v(n-1)
    page 0: u-v u-v#1 ...
    page 1: ...

Edges are written ``min-max``.  Parallel copies between the same pair are
numbered by edge id; the first is plain ``u-v``, the k-th later copy gets
the suffix ``#k``.
"""

from __future__ import annotations

import re

from .book import CyclicOrder, PageColoring
from .errors import BadIndex, EmbeddingMismatch, ParseError
from .graphcore import Multigraph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError(f"negative value in {line!r}", lineno)
    return values


def read_mel(text: str) -> Multigraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing header line 'n m'", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        for x in (u, v):
            if x >= n:
                raise ParseError(str(BadIndex(x, n)), lineno)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def write_mel(g: Multigraph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def edge_token(g: Multigraph, e: int) -> str:
    u, v = g.edges[e]
    a, b = min(u, v), max(u, v)
    k = g.edges_between(a, b).index(e)
    return f"{a}-{b}" if k == 0 else f"{a}-{b}#{k}"


def write_embedding(g: Multigraph, order: CyclicOrder, coloring: PageColoring) -> str:
    out = ["order: " + " ".join(str(v) for v in order.sequence)]
    used = [p for p in coloring.pages if p is not None]
    for p in range(max(used) + 1 if used else 0):
        tokens = [edge_token(g, e) for e in range(g.m) if coloring[e] == p]
        out.append(f"page {p}: " + " ".join(tokens) if tokens else f"page {p}:")
    return "\n".join(out) + "\n"


_TOKEN = re.compile(r"^(\d+)-(\d+)(?:#(\d+))?$")
_PAGE = re.compile(r"^page\s+(\d+)\s*:(.*)$")


def read_embedding(text: str, g: Multigraph) -> tuple[CyclicOrder, PageColoring]:
    """Parse an embedding for ``g``; edges not listed on any page stay uncolored."""
    lines = list(_content_lines(text))
    if not lines or not lines[0][1].startswith("order:"):
        raise ParseError("first line must be 'order: ...'", lines[0][0] if lines else 1)
    lineno, line = lines[0]
    try:
        seq = [int(t) for t in line[len("order:") :].split()]
    except ValueError:
        raise ParseError("order must list integers", lineno) from None
    if sorted(seq) != list(range(g.n)):
        raise EmbeddingMismatch(f"order is not a permutation of 0..{g.n - 1}", lineno)

    pages: list[int | None] = [None] * g.m
    seen_pages = set()
    for lineno, line in lines[1:]:
        match = _PAGE.match(line)
        if not match:
            raise ParseError(f"expected 'page <index>: ...', got {line!r}", lineno)
        p = int(match.group(1))
        if p in seen_pages:
            raise ParseError(f"page {p} listed twice", lineno)
        seen_pages.add(p)
        for token in match.group(2).split():
            tm = _TOKEN.match(token)
            if not tm:
                raise ParseError(f"bad edge token {token!r}", lineno)
            a, b, k = int(tm.group(1)), int(tm.group(2)), int(tm.group(3) or 0)
            if a >= g.n or b >= g.n:
                raise EmbeddingMismatch(f"edge {token} has a vertex outside the graph", lineno)
            copies = g.edges_between(a, b)
            if k >= len(copies):
                raise EmbeddingMismatch(f"edge {token} is not in the graph", lineno)
            e = copies[k]
            if pages[e] is not None:
                raise EmbeddingMismatch(f"edge {token} appears on two pages", lineno)
            pages[e] = p
    return CyclicOrder(tuple(seq)), PageColoring(tuple(pages))
