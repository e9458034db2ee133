"""Alternating paths and trails with prescribed end colours, and the
two connectivity notions built on them.

A graph is colour-connected when every ordered vertex pair (u, v) admits
an alternating (u, v)-path starting with each colour, and
trail-colour-connected when the same holds with trails in place of
paths.  Path queries reduce to perfect matching; trail queries reduce to
path queries in an auxiliary graph with two copies of every vertex and a
small gadget per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    AlternatingTrail,
    Colour,
    Edge,
    EdgeColouredMultigraph,
    GraphError,
    verify_witness,
)
from .matching import PlainGraph, maximum_matching

# graphs above this size route connectivity sweeps through the
# similarity quotient, which both notions are invariant under
_QUOTIENT_THRESHOLD = 12


@dataclass(frozen=True)
class ConnectivityReport:
    connected: bool
    counterexample: Optional[tuple[str, str, Colour]] = None
    witnesses: Optional[dict[tuple[str, str, Colour], AlternatingTrail]] = None


def alternating_path(g: EdgeColouredMultigraph, x: str, y: str,
                     start: Colour, end: Optional[Colour] = None
                     ) -> Optional[AlternatingTrail]:
    """Simple alternating (x,y)-path, first edge colour `start`, last
    edge colour `end` (either colour when end is None).

    Reduction to perfect matching: internal vertices split into a red
    and a blue copy joined by an internal edge; a colour-c graph edge
    joins the two c-copies; x keeps only its start-colour copy and y
    only its end-colour copy.  A perfect matching decomposes into the
    wanted path plus internal edges and alternating cycles.
    """
    if x == y:
        raise ValueError("endpoints must differ")
    if end is None:
        return (alternating_path(g, x, y, start, Colour.RED)
                or alternating_path(g, x, y, start, Colour.BLUE))

    def copy(v: str, c: Colour) -> Optional[str]:
        if v == x:
            return f"{v}.{c.token}" if c is start else None
        if v == y:
            return f"{v}.{c.token}" if c is end else None
        return f"{v}.{c.token}"

    verts: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for v in g.vertices:
        for c in (Colour.RED, Colour.BLUE):
            name = copy(v, c)
            if name is not None:
                verts.append(name)
        if v != x and v != y:
            edges.append((f"int.{v}", f"{v}.red", f"{v}.blue"))
    for e in g.edges:
        cu, cv = copy(e.u, e.colour), copy(e.v, e.colour)
        if cu is not None and cv is not None:
            edges.append((e.id, cu, cv))

    m = maximum_matching(PlainGraph(verts, edges))
    if 2 * len(m) != len(verts):
        return None
    at: dict[str, str] = {}
    for eid in m.edge_ids:
        if eid.startswith("int."):
            continue
        e = g.edge(eid)
        at[f"{e.u}.{e.colour.token}"] = eid
        at[f"{e.v}.{e.colour.token}"] = eid

    seq: list[str] = []
    cur, col = x, start
    while True:
        eid = at[f"{cur}.{col.token}"]
        seq.append(eid)
        cur = g.edge(eid).other_end(cur)
        if cur == y:
            break
        col = col.other()
    path = AlternatingTrail(x, tuple(seq))
    assert verify_witness(g, path)
    return path


def _trail_aux_graph(g: EdgeColouredMultigraph) -> EdgeColouredMultigraph:
    """Two vertex copies v.1/v.2 plus a 5-edge gadget per original edge;
    alternating trails of g correspond to alternating paths here."""
    verts: list[str] = []
    for v in g.vertices:
        verts.append(f"{v}.1")
        verts.append(f"{v}.2")
    edges: list[Edge] = []
    for e in g.edges:
        hu, hv = f"{e.id}.u", f"{e.id}.v"
        verts.append(hu)
        verts.append(hv)
        edges.append(Edge(f"{e.id}.a", f"{e.u}.1", hu, e.colour))
        edges.append(Edge(f"{e.id}.b", f"{e.u}.2", hu, e.colour))
        edges.append(Edge(f"{e.id}.c", f"{e.v}.1", hv, e.colour))
        edges.append(Edge(f"{e.id}.d", f"{e.v}.2", hv, e.colour))
        edges.append(Edge(f"{e.id}.x", hu, hv, e.colour.other()))
    return EdgeColouredMultigraph(verts, edges)


def alternating_trail(g: EdgeColouredMultigraph, x: str, y: str,
                      start: Colour, end: Optional[Colour] = None
                      ) -> Optional[AlternatingTrail]:
    """Alternating (x,y)-trail with prescribed first (and optionally
    last) edge colour, via a path query in the auxiliary graph."""
    if x == y:
        raise ValueError("endpoints must differ")
    aux = _trail_aux_graph(g)
    p = alternating_path(aux, f"{x}.1", f"{y}.1", start, end)
    if p is None:
        return None
    seq = [eid[:-2] for eid in p.edge_ids if eid.endswith(".x")]
    t = AlternatingTrail(x, tuple(seq))
    assert verify_witness(g, t)
    assert t.end(g) == y
    return t


def _sweep(g: EdgeColouredMultigraph, query, collect: bool
           ) -> ConnectivityReport:
    witnesses: dict[tuple[str, str, Colour], AlternatingTrail] = {}
    for u in g.vertices:
        for v in g.vertices:
            if u == v:
                continue
            for c in (Colour.RED, Colour.BLUE):
                w = query(u, v, c)
                if w is None:
                    return ConnectivityReport(False, (u, v, c))
                if collect:
                    witnesses[(u, v, c)] = w
    return ConnectivityReport(True, None, witnesses if collect else None)


def _quotient_route(g: EdgeColouredMultigraph, sweep_fn, collect: bool
                    ) -> Optional[ConnectivityReport]:
    """Decide connectivity on the similarity quotient instead, mapping a
    failing pair back to first copies.  Both connectivity notions are
    invariant under blowing up, so the answers agree; only the
    counterexample choice differs from the direct sweep."""
    if collect or len(g.vertices) <= _QUOTIENT_THRESHOLD:
        return None
    from .structure import similarity_partition
    part = similarity_partition(g)
    if len(part.quotient.vertices) >= len(g.vertices) \
            or len(part.quotient.vertices) < 2:
        return None
    rep = sweep_fn(part.quotient, collect=False, use_quotient=False)
    if rep.connected:
        return ConnectivityReport(True)
    # quotient vertices are named after the first member of their block,
    # so the failing pair maps straight back to original vertices
    return ConnectivityReport(False, rep.counterexample)


def is_colour_connected(g: EdgeColouredMultigraph, collect: bool = False,
                        use_quotient: bool = True) -> ConnectivityReport:
    if len(g.vertices) < 2:
        raise ValueError("colour-connectivity needs at least two vertices")
    if use_quotient:
        rep = _quotient_route(g, is_colour_connected, collect)
        if rep is not None:
            return rep
    return _sweep(g, lambda u, v, c: alternating_path(g, u, v, c), collect)


def is_trail_colour_connected(g: EdgeColouredMultigraph,
                              collect: bool = False,
                              use_quotient: bool = True
                              ) -> ConnectivityReport:
    if len(g.vertices) < 2:
        raise ValueError("trail-colour-connectivity needs at least two vertices")
    if use_quotient:
        rep = _quotient_route(g, is_trail_colour_connected, collect)
        if rep is not None:
            return rep
    return _sweep(g, lambda u, v, c: alternating_trail(g, u, v, c), collect)


def complete_multipartite_classes(g: EdgeColouredMultigraph
                                  ) -> Optional[list[list[str]]]:
    """Partite classes if g is complete multipartite, else None."""
    # classes are the components of the complement; then every
    # cross-class pair must actually be adjacent
    verts = list(g.vertices)
    seen: set[str] = set()
    classes: list[list[str]] = []
    for v in verts:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            a = stack.pop()
            for b in verts:
                if b not in seen and not g.adjacent(a, b):
                    seen.add(b)
                    comp.append(b)
                    stack.append(b)
        classes.append(comp)
    for cls in classes:
        for i, a in enumerate(cls):
            for b in cls[i + 1:]:
                if g.adjacent(a, b):
                    return None
    return classes


def trail_to_path_complete_multipartite(g: EdgeColouredMultigraph,
                                        t: AlternatingTrail
                                        ) -> AlternatingTrail:
    """Shorten an open alternating (u,v)-trail of a complete multipartite
    graph into an alternating (u,v)-path with the same start colour.

    Repeatedly removes the first repetition: an even-length detour is
    spliced out; an odd-length one is bypassed through a neighbour of
    the repeated vertex, using completeness to find the bypass edge.
    """
    if complete_multipartite_classes(g) is None:
        raise ValueError("graph is not complete multipartite")
    if t.closed or not t.edge_ids:
        raise ValueError("expected a nonempty open trail")
    r = verify_witness(g, t)
    if not r:
        raise ValueError(f"invalid trail: {r.reason}")

    u = t.start
    c = g.edge(t.edge_ids[0]).colour
    cur = t
    while True:
        seq = cur.vertex_sequence(g)
        v = seq[-1]
        k = len(cur.edge_ids)
        # already a path?
        if len(set(seq)) == len(seq):
            return cur
        # target v revisited: cut at its first occurrence
        first_v = seq.index(v)
        if first_v < k:
            cur = AlternatingTrail(u, cur.edge_ids[:first_v])
            continue
        # first vertex met twice, by order of second occurrence
        pos: dict[str, int] = {}
        a = b = -1
        for p, w in enumerate(seq):
            if w in pos:
                a, b = pos[w], p
                break
            pos[w] = p
        gap = b - a
        if gap % 2 == 0:
            cur = AlternatingTrail(
                u, cur.edge_ids[:a] + cur.edge_ids[b:])
            continue
        # odd detour: bypass through x = successor of the first
        # occurrence, or its own successor, or straight to v
        w = seq[a]
        xx = seq[a + 1]
        x_pred = seq[a + 2]
        d = g.edge(cur.edge_ids[a]).colour
        prefix = cur.edge_ids[:a]
        back = tuple(reversed(cur.edge_ids[a + 1:b]))  # w -> xx, starts d
        candidates: list[tuple[str, ...]] = []
        for e in g.edges_between(xx, v, d.other()):
            candidates.append(prefix + (cur.edge_ids[a],) + (e.id,))
        for e in g.edges_between(xx, v, d):
            candidates.append(prefix + back + (e.id,))
        for e in g.edges_between(w, v, d):
            candidates.append(prefix + (e.id,))
        for e in g.edges_between(x_pred, v, d):
            candidates.append(prefix + cur.edge_ids[a:a + 2] + (e.id,))
        for e in g.edges_between(x_pred, v, d.other()):
            candidates.append(prefix + back[:-1] + (e.id,))
        for cand in candidates:
            nxt = AlternatingTrail(u, cand)
            if len(cand) >= k or not verify_witness(g, nxt):
                continue
            if g.edge(cand[0]).colour is not c or nxt.end(g) != v:
                continue
            cur = nxt
            break
        else:
            raise GraphError("trail shortening found no valid bypass")
