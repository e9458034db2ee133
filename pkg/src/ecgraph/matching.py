"""Maximum-cardinality matching in general (non-bipartite) plain graphs.

Augmenting-path search with blossom contraction, seeded by a greedy
matching.  This is the computational engine behind the matching
reductions used elsewhere: eulerian factors, alternating cycle factors
and alternating path queries all reduce to (perfect) matching in an
auxiliary plain graph that is not bipartite in general.

Vertices and edges are scanned in declaration order throughout, so the
result is deterministic for a fixed input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence


class MatchingError(ValueError):
    pass


class PlainGraph:
    """Uncoloured multigraph; parallel edges allowed, self-loops not."""

    __slots__ = ("vertices", "edges", "_index")

    def __init__(self, vertices: Sequence[str],
                 edges: Sequence[tuple[str, str, str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise MatchingError("duplicate vertex id")
        seen: set[str] = set()
        for eid, u, v in edges:
            if eid in seen:
                raise MatchingError(f"duplicate edge id {eid!r}")
            seen.add(eid)
            if u == v:
                raise MatchingError(f"edge {eid!r}: self-loop")
            if u not in self._index or v not in self._index:
                raise MatchingError(f"edge {eid!r}: unknown endpoint")
        self.edges: tuple[tuple[str, str, str], ...] = tuple(edges)

    def vertex_index(self, v: str) -> int:
        return self._index[v]


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, by id."""

    edge_ids: frozenset[str]
    pairs: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def mate(self, v: str) -> Optional[str]:
        for a, b in self.pairs:
            if a == v:
                return b
            if b == v:
                return a
        return None


def _matched_indices(g: PlainGraph) -> list[int]:
    """Core blossom search; returns match[] over vertex indices."""
    n = len(g.vertices)
    adj: list[list[int]] = [[] for _ in range(n)]
    seen_pairs: set[tuple[int, int]] = set()
    for _, us, vs in g.edges:
        u, v = g.vertex_index(us), g.vertex_index(vs)
        key = (u, v) if u < v else (v, u)
        if key in seen_pairs:
            continue
        seen_pairs.add(key)
        adj[u].append(v)
        adj[v].append(u)

    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_path = [False] * n
        while True:
            a = base[a]
            used_path[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used_path[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            leaf = find_augmenting(v)
            if leaf == -1:
                continue
            # flip matched/unmatched edges back along the parent chain
            while leaf != -1:
                pv = p[leaf]
                ppv = match[pv]
                match[leaf] = pv
                match[pv] = leaf
                leaf = ppv
    return match


def maximum_matching(g: PlainGraph) -> Matching:
    match = _matched_indices(g)
    # map matched index pairs back to concrete edge ids: first declared
    # edge between the endpoints wins, keeping parallel edges harmless
    first_edge: dict[tuple[int, int], str] = {}
    for eid, us, vs in g.edges:
        u, v = g.vertex_index(us), g.vertex_index(vs)
        key = (u, v) if u < v else (v, u)
        first_edge.setdefault(key, eid)
    ids: list[str] = []
    pairs: list[tuple[str, str]] = []
    for v, m in enumerate(match):
        if m > v:
            ids.append(first_edge[(v, m)])
            pairs.append((g.vertices[v], g.vertices[m]))
    return Matching(frozenset(ids), tuple(pairs))


def has_perfect_matching(g: PlainGraph) -> bool:
    return 2 * len(maximum_matching(g)) == len(g.vertices)
