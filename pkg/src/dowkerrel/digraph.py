"""Graph-theoretic analysis of a self-relation viewed as the digraph ``G_R``.

Vertices are the relation's labels, edges its related pairs; self-loops are
allowed. Acyclicity here tolerates self-loops: only cycles of length >= 2
are forbidden, so the identity relation counts as acyclic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from .errors import NotStronglyConnectedError
from .relation import Label, Relation, _require_self, inverse, iter_bits, r_infinity


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[frozenset, ...]
    kind: str  # "path" (connected) or "walk" (strongly connected)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self, v: Label) -> frozenset:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)


@dataclass(frozen=True)
class QStructure:
    """Cycle-length gcd ``q`` and the ``q`` residue classes of vertices.

    ``classes[c]`` holds the vertices at BFS distance ``≡ c (mod q)`` from the
    first vertex, so every edge runs from class ``c`` to class ``c + 1 mod q``.
    """

    q: int
    classes: tuple[frozenset, ...]


def _blocks_from_roots(labels, root_of) -> tuple[frozenset, ...]:
    groups: dict[int, list] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(root_of[i], []).append(lab)
    ordered = sorted(groups.values(), key=lambda g: labels.index(g[0]))
    return tuple(frozenset(g) for g in ordered)


def connected_components(R: Relation) -> ComponentPartition:
    """Components of ``G_R`` ignoring edge direction."""
    _require_self(R)
    n = len(R.source_labels)
    sym = [R.rows[i] | c for i, c in enumerate(inverse(R).rows)]
    root = [-1] * n
    for s in range(n):
        if root[s] >= 0:
            continue
        root[s] = s
        stack = [s]
        while stack:
            u = stack.pop()
            for v in iter_bits(sym[u]):
                if root[v] < 0:
                    root[v] = s
                    stack.append(v)
    return ComponentPartition(_blocks_from_roots(list(R.source_labels), root), "path")


def _scc_roots(rows: tuple[int, ...]) -> list[int]:
    # iterative Tarjan; returns, per vertex, the smallest index of its component
    n = len(rows)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    for start in range(n):
        if index[start] >= 0:
            continue
        work = [(start, iter(list(iter_bits(rows[start]))))]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(list(iter_bits(rows[w])))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    members.append(w)
                    if w == v:
                        break
                rep = min(members)
                for w in members:
                    comp[w] = rep
    return comp


def strongly_connected_components(R: Relation) -> ComponentPartition:
    _require_self(R)
    roots = _scc_roots(R.rows)
    return ComponentPartition(_blocks_from_roots(list(R.source_labels), roots), "walk")


def is_strongly_connected(R: Relation) -> bool:
    return len(R.source_labels) > 0 and len(strongly_connected_components(R)) == 1


def is_acyclic(R: Relation) -> bool:
    """True iff ``G_R`` has no directed cycle of length >= 2."""
    _require_self(R)
    return all(len(b) == 1 for b in strongly_connected_components(R).blocks)


def is_simple(R: Relation) -> bool:
    """True iff any two directed cycles are vertex-disjoint or identical.

    Equivalently, every non-trivial strongly connected component is a bare
    cycle: inside it each vertex has exactly one out- and one in-neighbour
    and no self-loop.
    """
    _require_self(R)
    roots = _scc_roots(R.rows)
    comp_mask: dict[int, int] = {}
    for v, r in enumerate(roots):
        comp_mask[r] = comp_mask.get(r, 0) | 1 << v
    cols = inverse(R).rows
    for mask in comp_mask.values():
        if mask & (mask - 1) == 0:
            continue
        for v in iter_bits(mask):
            out_inside = R.rows[v] & mask
            in_inside = cols[v] & mask
            if out_inside >> v & 1:
                return False
            if bin(out_inside).count("1") != 1 or bin(in_inside).count("1") != 1:
                return False
    return True


def has_positive_trace(R: Relation) -> bool:
    _require_self(R)
    return any(r >> i & 1 for i, r in enumerate(R.rows))


def _bfs_distances(rows: tuple[int, ...], root: int) -> list[int]:
    dist = [-1] * len(rows)
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in iter_bits(rows[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _require_strongly_connected(R: Relation) -> None:
    _require_self(R)
    if not is_strongly_connected(R):
        raise NotStronglyConnectedError("relation is not strongly connected")


def graph_period_q(R: Relation) -> int:
    """gcd of the lengths of all directed cycles of a strongly connected ``R``.

    Uses BFS levels from the first vertex: every edge ``u -> v`` contributes
    ``dist(u) + 1 - dist(v)``, and the gcd of these equals the cycle gcd.
    """
    _require_strongly_connected(R)
    dist = _bfs_distances(R.rows, 0)
    q = 0
    for u, r in enumerate(R.rows):
        for v in iter_bits(r):
            q = gcd(q, dist[u] + 1 - dist[v])
    if q == 0:
        raise NotStronglyConnectedError("relation has no cycle (single vertex without a loop)")
    return q


def q_classes(R: Relation) -> QStructure:
    q = graph_period_q(R)
    dist = _bfs_distances(R.rows, 0)
    buckets: list[list] = [[] for _ in range(q)]
    for v, d in enumerate(dist):
        buckets[d % q].append(R.source_labels[v])
    return QStructure(q, tuple(frozenset(b) for b in buckets))


def minima(R: Relation) -> frozenset:
    """Vertices with no ``R^inf``-successor other than themselves."""
    Rinf = r_infinity(R)
    return frozenset(
        x for i, (x, r) in enumerate(zip(Rinf.source_labels, Rinf.rows)) if r & ~(1 << i) == 0
    )


def maxima(R: Relation) -> frozenset:
    """Vertices with no ``R^inf``-predecessor other than themselves."""
    Rinf = inverse(r_infinity(R))
    return frozenset(
        x for i, (x, r) in enumerate(zip(Rinf.source_labels, Rinf.rows)) if r & ~(1 << i) == 0
    )


def up_set(R: Relation, x: Label) -> frozenset:
    """``{y : y R^inf x}``."""
    return r_infinity(R).preimage_of(x)


def down_set(R: Relation, x: Label) -> frozenset:
    """``{y : x R^inf y}``."""
    return r_infinity(R).image_of(x)
