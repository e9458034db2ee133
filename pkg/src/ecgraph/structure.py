"""M-closed recognition and closure, vertex similarity, and blow-ups.

Two vertices are similar when they are non-adjacent and have identical
coloured edge multisets towards every third vertex; the similar classes
of a graph are exactly the independent sets one gets by blowing up a
smaller base graph.  Similarity is transitive: if u ~ v and v ~ w with
u != w, then u and w are non-adjacent (u ~ v forces the u-w multiset to
equal the v-w multiset, which is empty since v ~ w) and their joins to
any fourth vertex agree through v.  Hence the finest base is the
quotient by similarity, and a graph is an extension of an M-closed graph
iff that quotient is M-closed: merging non-similar vertices into one
class is never available, because copies of a blown-up vertex must be
non-adjacent with identical joins.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import (
    Colour,
    Edge,
    EdgeColouredMultigraph,
    GraphError,
)


def is_m_closed(g: EdgeColouredMultigraph
                ) -> tuple[bool, Optional[tuple[str, str, str]]]:
    """True iff the ends of every monochromatic 2-path are adjacent.

    On failure, returns the first violating (x, y, z) in declaration
    order: x-y and y-z share a colour but x and z are non-adjacent.
    """
    for y in g.vertices:
        inc = g.incident(y)
        for i, e in enumerate(inc):
            x = e.other_end(y)
            for f in inc[i + 1:]:
                z = f.other_end(y)
                if x == z or f.colour is not e.colour:
                    continue
                if not g.adjacent(x, z):
                    return False, (x, y, z)
    return True, None


def m_closure(g: EdgeColouredMultigraph,
              colour_policy: str = "always_red",
              seed: Optional[int] = None) -> EdgeColouredMultigraph:
    """Add edges until M-closed; new edge colours follow the policy
    (always_red, always_blue, or seeded_random)."""
    if colour_policy not in ("always_red", "always_blue", "seeded_random"):
        raise ValueError(f"unknown colour policy {colour_policy!r}")
    rng = random.Random(seed)
    edges = list(g.edges)
    cur = g
    k = 0
    while True:
        ok, triple = is_m_closed(cur)
        if ok:
            return cur
        x, _, z = triple
        if colour_policy == "always_red":
            col = Colour.RED
        elif colour_policy == "always_blue":
            col = Colour.BLUE
        else:
            col = rng.choice((Colour.RED, Colour.BLUE))
        edges.append(Edge(f"mc{k}", x, z, col))
        k += 1
        cur = EdgeColouredMultigraph(g.vertices, edges)


@dataclass(frozen=True)
class SimilarityPartition:
    blocks: tuple[tuple[str, ...], ...]
    quotient: EdgeColouredMultigraph   # induced on first block members
    multiplicities: dict[str, int]     # quotient vertex -> block size


def _signature(g: EdgeColouredMultigraph, u: str, w: str) -> tuple[int, int]:
    return (len(g.edges_between(u, w, Colour.RED)),
            len(g.edges_between(u, w, Colour.BLUE)))


def similar(g: EdgeColouredMultigraph, u: str, v: str) -> bool:
    """Non-adjacent with identical coloured joins to every third vertex."""
    if u == v or g.adjacent(u, v):
        return False
    for w in g.vertices:
        if w == u or w == v:
            continue
        if _signature(g, u, w) != _signature(g, v, w):
            return False
    return True


def similarity_partition(g: EdgeColouredMultigraph) -> SimilarityPartition:
    assigned: dict[str, int] = {}
    blocks: list[list[str]] = []
    for v in g.vertices:
        if v in assigned:
            continue
        idx = len(blocks)
        assigned[v] = idx
        block = [v]
        for u in g.vertices:
            if u not in assigned and similar(g, v, u):
                assigned[u] = idx
                block.append(u)
        blocks.append(block)
    reps = [b[0] for b in blocks]
    quotient = g.induced(reps)
    mult = {b[0]: len(b) for b in blocks}
    return SimilarityPartition(tuple(tuple(b) for b in blocks), quotient, mult)


def blow_up(g: EdgeColouredMultigraph,
            multiplicities: dict[str, int]) -> EdgeColouredMultigraph:
    """Replace each vertex by an independent set of copies, every edge by
    a copy between each pair of endpoint copies."""
    for v in g.vertices:
        m = multiplicities.get(v)
        if not isinstance(m, int) or m < 1:
            raise GraphError(f"multiplicity for {v!r} must be a positive integer")
    verts = [f"{v}.{i}" for v in g.vertices
             for i in range(multiplicities[v])]
    edges = []
    for e in g.edges:
        for i in range(multiplicities[e.u]):
            for j in range(multiplicities[e.v]):
                edges.append(Edge(f"{e.id}.{i}.{j}",
                                  f"{e.u}.{i}", f"{e.v}.{j}", e.colour))
    return EdgeColouredMultigraph(verts, edges)


def is_extension_of_m_closed(g: EdgeColouredMultigraph
                             ) -> Optional[tuple[EdgeColouredMultigraph,
                                                 dict[str, int]]]:
    """The finest (base, multiplicities) pair with an M-closed base, or
    None.  The similarity quotient is canonical: if it is not M-closed,
    no valid base exists at all."""
    part = similarity_partition(g)
    ok, _ = is_m_closed(part.quotient)
    if not ok:
        return None
    return part.quotient, part.multiplicities
