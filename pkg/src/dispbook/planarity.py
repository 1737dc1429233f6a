"""Planarity testing by incremental face embedding (Demoucron, Malgrange, Pertuiset).

The test runs on the underlying simple graph: parallel edges between two
already adjacent vertices never affect planarity.  It is quadratic, which is
plenty for the graph sizes this package works with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphcore import Multigraph

Adjacency = dict[int, set[int]]


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K5 or K3,3 contained in the graph.

    ``paths`` are the subdivided edges, each running between two branch
    vertices through degree-2 vertices.
    """

    kind: str  # "K5" or "K3,3"
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def edges(self) -> set[frozenset[int]]:
        out = set()
        for p in self.paths:
            out.update(frozenset(pair) for pair in zip(p, p[1:]))
        return out


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    witness: KuratowskiWitness | None = None

    def __bool__(self) -> bool:
        return self.planar


def simple_adjacency(g: Multigraph) -> Adjacency:
    adj: Adjacency = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_planar(g: Multigraph, witness: bool = True) -> PlanarityVerdict:
    """Decide planarity; a Kuratowski subdivision is attached when nonplanar."""
    adj = simple_adjacency(g)
    if _planar(adj):
        return PlanarityVerdict(True)
    return PlanarityVerdict(False, kuratowski_subdivision(adj) if witness else None)


def _planar(adj: Adjacency) -> bool:
    for block in biconnected_blocks(adj):
        nv = len({v for e in block for v in e})
        if nv <= 4:
            continue
        if len(block) > 3 * nv - 6:
            return False
        sub: Adjacency = {}
        for u, v in block:
            sub.setdefault(u, set()).add(v)
            sub.setdefault(v, set()).add(u)
        if not _dmp_block(sub):
            return False
    return True


def biconnected_blocks(adj: Adjacency) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (Hopcroft-Tarjan, iterative)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    t = 0
    for s in sorted(adj):
        if s in disc:
            continue
        disc[s] = low[s] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter(sorted(adj[s])))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if y == parent:
                    continue
                if y not in disc:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, x, iter(sorted(adj[y]))))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (p, x):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: Adjacency) -> list[int]:
    start = min(adj)
    parent = {start: None}
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if y == parent[x]:
                continue
            if y in parent:
                if y in {v for v, _ in stack}:
                    cycle = [x]
                    while cycle[-1] != y:
                        cycle.append(parent[cycle[-1]])
                    return cycle
                continue
            parent[y] = x
            stack.append((y, iter(sorted(adj[y]))))
            break
        else:
            stack.pop()
    raise ValueError("block has no cycle")


def _dmp_block(adj: Adjacency) -> bool:
    """Demoucron-Malgrange-Pertuiset on a biconnected simple graph."""
    cycle = _find_cycle(adj)
    embedded_v = set(cycle)
    embedded_e = {frozenset(p) for p in zip(cycle, cycle[1:] + cycle[:1])}
    faces = [list(cycle), list(cycle)]
    total = sum(len(ns) for ns in adj.values()) // 2

    while len(embedded_e) < total:
        best = None
        for attachments, path in _fragments(adj, embedded_v, embedded_e):
            admissible = [k for k, f in enumerate(faces) if attachments <= set(f)]
            if not admissible:
                return False
            if best is None or len(admissible) < len(best[0]):
                best = (admissible, path)
                if len(admissible) == 1:
                    break
        admissible, path = best
        k = admissible[0]
        faces[k : k + 1] = _split_face(faces[k], path)
        embedded_v.update(path)
        embedded_e.update(frozenset(p) for p in zip(path, path[1:]))
    return True


def _fragments(adj: Adjacency, embedded_v: set[int], embedded_e: set[frozenset[int]]):
    """Yield ``(attachment set, attachment-to-attachment path)`` per fragment."""
    for u in sorted(embedded_v):
        for v in sorted(adj[u]):
            if u < v and v in embedded_v and frozenset((u, v)) not in embedded_e:
                yield {u, v}, [u, v]
    seen: set[int] = set()
    for s in sorted(adj):
        if s in embedded_v or s in seen:
            continue
        comp = {s}
        queue = deque([s])
        attachments: set[int] = set()
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in embedded_v:
                    attachments.add(y)
                elif y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        yield attachments, _fragment_path(adj, comp, attachments)


def _fragment_path(adj: Adjacency, comp: set[int], attachments: set[int]) -> list[int]:
    a = min(attachments)
    starts = sorted(y for y in adj[a] if y in comp)
    prev: dict[int, int | None] = {y: None for y in starts}
    queue = deque(starts)
    while queue:
        x = queue.popleft()
        targets = sorted(y for y in adj[x] if y in attachments and y != a)
        if targets:
            path = [x]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return [a] + path[::-1] + [targets[0]]
        for y in sorted(adj[x]):
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise ValueError("fragment with a single attachment; graph is not biconnected")


def _split_face(face: list[int], path: list[int]) -> list[list[int]]:
    a, b = path[0], path[-1]
    ia, ib = face.index(a), face.index(b)
    rot_a = face[ia:] + face[:ia]
    j = rot_a.index(b)
    interior = path[1:-1]
    first = rot_a[: j + 1] + interior[::-1]
    second = rot_a[j:] + rot_a[:1] + interior
    return [first, second]


# ---------------------------------------------------------------------------
# Kuratowski witness
# ---------------------------------------------------------------------------


def kuratowski_subdivision(adj: Adjacency) -> KuratowskiWitness | None:
    """Shrink a nonplanar graph to an edge-minimal nonplanar subgraph.

    Edge-minimal nonplanar graphs are exactly subdivisions of K5 or K3,3
    (plus isolated vertices), so the survivor is the certificate.
    """
    work = {v: set(ns) for v, ns in adj.items()}
    if _planar(work):
        return None
    edges = sorted((u, v) for u in work for v in work[u] if u < v)
    for u, v in edges:
        work[u].discard(v)
        work[v].discard(u)
        if _planar(work):
            work[u].add(v)
            work[v].add(u)
    core = {v: ns for v, ns in work.items() if ns}
    branch = tuple(sorted(v for v, ns in core.items() if len(ns) >= 3))
    paths = []
    bset = set(branch)
    for s in branch:
        for first in sorted(core[s]):
            path = [s, first]
            while path[-1] not in bset:
                x = path[-1]
                path.append(next(y for y in core[x] if y != path[-2]))
            if s < path[-1] or (s == path[-1] and path[1] < path[-2]):
                paths.append(tuple(path))
    kind = "K5" if len(branch) == 5 else "K3,3"
    return KuratowskiWitness(kind, branch, tuple(sorted(paths)))
