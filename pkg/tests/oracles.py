"""Brute-force reference implementations used only by the tests.

None of these call into the code paths they check: connectivity is
recomputed with a fresh union-find, crossings with plane geometry, and
thickness by enumerating every order and every coloring.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache


def components_after(n, edges, dead_edges=(), dead_vertices=()):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    dead_e, dead_v = set(dead_edges), set(dead_vertices)
    for i, (u, v) in enumerate(edges):
        if i in dead_e or u in dead_v or v in dead_v:
            continue
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n) if v not in dead_v})


def brute_cutpoints(g):
    base = components_after(g.n, g.edges)
    return {v for v in range(g.n) if components_after(g.n, g.edges, dead_vertices=[v]) > base}


def brute_bridges(g):
    base = components_after(g.n, g.edges)
    return {i for i in range(g.m) if components_after(g.n, g.edges, dead_edges=[i]) > base}


def brute_disjoint_two_edge_cuts(g):
    base = components_after(g.n, g.edges)
    out = []
    for i, j in itertools.combinations(range(g.m), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            continue
        if components_after(g.n, g.edges, dead_edges=[i, j]) > base:
            out.append((i, j))
    return out


def brute_sides(g, i, j):
    """Vertex sets of the two components after deleting edges i and j (flood fill)."""
    adj = {v: [] for v in range(g.n)}
    for k, (u, v) in enumerate(g.edges):
        if k not in (i, j):
            adj[u].append(v)
            adj[v].append(u)
    start = min(g.edges[i])
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen, set(range(g.n)) - seen


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------


def circle_points(sequence):
    n = len(sequence)
    return {v: (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n)) for k, v in enumerate(sequence)}


def _orient(p, q, r):
    val = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if abs(val) < 1e-12:
        return 0
    return 1 if val > 0 else -1


def chords_intersect(points, e, f):
    """Proper intersection of two chords; chords sharing an endpoint do not count."""
    if set(e) & set(f):
        return False
    p1, p2 = points[e[0]], points[e[1]]
    q1, q2 = points[f[0]], points[f[1]]
    return _orient(p1, p2, q1) * _orient(p1, p2, q2) < 0 and _orient(q1, q2, p1) * _orient(q1, q2, p2) < 0


def geometric_cross(sequence, e, f):
    return chords_intersect(circle_points(sequence), e, f)


# ---------------------------------------------------------------------------
# Book thickness by enumeration
# ---------------------------------------------------------------------------


def cyclic_orders(n):
    """All (n-1)!/2 cyclic orders up to rotation and reflection (n >= 3)."""
    if n < 3:
        yield tuple(range(n))
        return
    for rest in itertools.permutations(range(1, n)):
        if rest[0] < rest[-1]:
            yield (0,) + rest


def _crossing_pairs(sequence, edges):
    pos = {v: k for k, v in enumerate(sequence)}
    pairs = []
    for i, j in itertools.combinations(range(len(edges)), 2):
        a, b = edges[i]
        c, d = edges[j]
        if len({a, b, c, d}) < 4:
            continue
        lo, hi = sorted((pos[a], pos[b]))
        if (lo < pos[c] < hi) != (lo < pos[d] < hi):
            pairs.append((i, j))
    return pairs


def _adjacent_pairs(edges):
    return [(i, j) for i, j in itertools.combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])]


def naive_matching_embedding_exists(g, p):
    adjacent = _adjacent_pairs(g.edges)
    for seq in cyclic_orders(g.n):
        bad = adjacent + _crossing_pairs(seq, g.edges)
        for col in itertools.product(range(p), repeat=g.m):
            if all(col[i] != col[j] for i, j in bad):
                return True
    return False


def naive_mbt(g, budget=6):
    for p in range(0, budget + 1):
        if naive_matching_embedding_exists(g, p):
            return p
    return None


def two_page_assignment_exists(g, sequence):
    pairs = _crossing_pairs(sequence, g.edges)
    for col in itertools.product((0, 1), repeat=g.m):
        if all(col[i] != col[j] for i, j in pairs):
            return True
    return False


def brute_chromatic_index(g):
    adjacent = _adjacent_pairs(g.edges)
    for k in range(0, g.m + 1):
        for col in itertools.product(range(k), repeat=g.m):
            if all(col[i] != col[j] for i, j in adjacent):
                return k
    return None


# ---------------------------------------------------------------------------
# Planarity by minor search
# ---------------------------------------------------------------------------


def _relabel(vertices, edges):
    index = {v: k for k, v in enumerate(sorted(vertices))}
    return len(vertices), frozenset(frozenset((index[u], index[v])) for u, v in (tuple(e) for e in edges))


def _has_k5_or_k33_subgraph(n, edges):
    if n == 5 and len(edges) == 10:
        return True
    if n == 6 and len(edges) >= 9:
        for side in itertools.combinations(range(1, 6), 2):
            left = {0, *side}
            right = set(range(6)) - left
            if all(frozenset((a, b)) in edges for a in left for b in right):
                return True
    return False


@lru_cache(maxsize=None)
def _minor_search(n, edges):
    if n < 5:
        return False
    if _has_k5_or_k33_subgraph(n, edges):
        return True
    vertices = range(n)
    # vertex deletion
    for v in vertices:
        rest = [u for u in vertices if u != v]
        sub = [tuple(e) for e in edges if v not in e]
        if _minor_search(*_relabel(rest, sub)):
            return True
    # edge contraction
    for e in edges:
        a, b = sorted(e)
        merged = set()
        for f in edges:
            x, y = tuple(f)
            x = a if x == b else x
            y = a if y == b else y
            if x != y:
                merged.add(frozenset((x, y)))
        rest = [u for u in vertices if u != b]
        if _minor_search(*_relabel(rest, [tuple(f) for f in merged])):
            return True
    return False


def has_kuratowski_minor(n, simple_edges):
    """Whether a simple graph has a K5 or K3,3 minor.

    Edge deletion never helps beyond checking subgraphs at the end, so the
    search explores vertex deletions and edge contractions and tests for a
    K5 / K3,3 subgraph at every step.
    """
    return _minor_search(*_relabel(range(n), simple_edges))
