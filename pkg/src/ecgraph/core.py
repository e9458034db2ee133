"""Data model for 2-edge-coloured multigraphs and their witnesses.

A graph is a set of named vertices together with identity-carrying edges,
each coloured red or blue.  Parallel edges are allowed, self-loops are not.
Witness objects (alternating trails, cycles, eulerian factors, cycle
factors) reference edges by id so that parallel edges are handled
uniformly.  Everything is immutable; every function here is pure.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class Colour(enum.IntEnum):
    RED = 1
    BLUE = 2

    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @property
    def token(self) -> str:
        return "red" if self is Colour.RED else "blue"


RED = Colour.RED
BLUE = Colour.BLUE

_COLOUR_TOKENS = {"red": RED, "blue": BLUE}


class GraphError(ValueError):
    """Raised for malformed graphs, witnesses, or serialized documents."""


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str
    colour: Colour

    def other_end(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise GraphError(f"vertex {x!r} is not an endpoint of edge {self.id!r}")

    def touches(self, x: str) -> bool:
        return x == self.u or x == self.v


class EdgeColouredMultigraph:
    """Immutable 2-edge-coloured multigraph with opaque string ids.

    Vertex order is declaration order and is the deterministic tie-break
    used by every algorithm in this package.
    """

    __slots__ = ("vertices", "edges", "_by_id", "_incident", "_index")

    def __init__(self, vertices: Sequence[str], edges: Sequence[Edge]):
        seen: set[str] = set()
        for v in vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex id {v!r}")
            seen.add(v)
        self.vertices: tuple[str, ...] = tuple(vertices)
        by_id: dict[str, Edge] = {}
        incident: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in edges:
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id!r}")
            if e.u not in seen:
                raise GraphError(f"edge {e.id!r}: unknown vertex {e.u!r}")
            if e.v not in seen:
                raise GraphError(f"edge {e.id!r}: unknown vertex {e.v!r}")
            if e.u == e.v:
                raise GraphError(f"edge {e.id!r}: self-loop at {e.u!r}")
            by_id[e.id] = e
            incident[e.u].append(e)
            incident[e.v].append(e)
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._by_id = by_id
        self._incident = {v: tuple(es) for v, es in incident.items()}
        self._index = {v: i for i, v in enumerate(self.vertices)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouredMultigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return (f"EdgeColouredMultigraph({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges)")

    # --- lookups -----------------------------------------------------

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge id {edge_id!r}") from None

    def has_edge_id(self, edge_id: str) -> bool:
        return edge_id in self._by_id

    def incident(self, v: str, colour: Optional[Colour] = None) -> tuple[Edge, ...]:
        es = self._incident[v]
        if colour is None:
            return es
        return tuple(e for e in es if e.colour is colour)

    def degree(self, v: str, colour: Optional[Colour] = None) -> int:
        return len(self.incident(v, colour))

    def edges_between(self, u: str, v: str,
                      colour: Optional[Colour] = None) -> tuple[Edge, ...]:
        return tuple(e for e in self._incident[u]
                     if e.touches(v) and (colour is None or e.colour is colour))

    def adjacent(self, u: str, v: str) -> bool:
        return any(e.touches(v) for e in self._incident[u])

    def vertex_index(self, v: str) -> int:
        return self._index[v]

    def neighbours(self, v: str) -> tuple[str, ...]:
        seen: list[str] = []
        got: set[str] = set()
        for e in self._incident[v]:
            w = e.other_end(v)
            if w not in got:
                got.add(w)
                seen.append(w)
        return tuple(seen)

    # --- derived graphs ----------------------------------------------

    def induced(self, vertex_set: Iterable[str]) -> "EdgeColouredMultigraph":
        keep = set(vertex_set)
        verts = [v for v in self.vertices if v in keep]
        edges = [e for e in self.edges if e.u in keep and e.v in keep]
        return EdgeColouredMultigraph(verts, edges)

    def restricted_to_edges(self, edge_ids: Iterable[str]) -> "EdgeColouredMultigraph":
        keep = set(edge_ids)
        edges = [e for e in self.edges if e.id in keep]
        touched = {x for e in edges for x in (e.u, e.v)}
        verts = [v for v in self.vertices if v in touched]
        return EdgeColouredMultigraph(verts, edges)


@dataclass(frozen=True)
class AlternatingTrail:
    """A sequence of pairwise-distinct edge ids forming an alternating trail.

    ``closed`` trails return to ``start`` and, per the convention used
    throughout this package, have first and last edges of different
    colours (so the length is even and at least 2).
    """

    start: str
    edge_ids: tuple[str, ...]
    closed: bool = False

    def __len__(self) -> int:
        return len(self.edge_ids)

    def vertex_sequence(self, g: EdgeColouredMultigraph) -> list[str]:
        """Vertices visited in order, including both endpoints."""
        seq = [self.start]
        cur = self.start
        for eid in self.edge_ids:
            cur = g.edge(eid).other_end(cur)
            seq.append(cur)
        return seq

    def colour_sequence(self, g: EdgeColouredMultigraph) -> list[Colour]:
        return [g.edge(eid).colour for eid in self.edge_ids]

    def end(self, g: EdgeColouredMultigraph) -> str:
        return self.vertex_sequence(g)[-1]

    def vertex_set(self, g: EdgeColouredMultigraph) -> frozenset[str]:
        return frozenset(self.vertex_sequence(g))

    def reversed(self, g: EdgeColouredMultigraph) -> "AlternatingTrail":
        new_start = self.start if self.closed else self.end(g)
        return AlternatingTrail(new_start, tuple(reversed(self.edge_ids)),
                                self.closed)


@dataclass(frozen=True)
class AlternatingCycle(AlternatingTrail):
    """Closed alternating trail visiting every vertex exactly once."""

    closed: bool = True


@dataclass(frozen=True)
class EulerianFactor:
    """Partition of V into parts, each spanned by a closed alternating trail."""

    parts: tuple[tuple[frozenset[str], AlternatingTrail], ...]

    def visit_count(self, g: EdgeColouredMultigraph, v: str) -> int:
        for _, trail in self.parts:
            seq = trail.vertex_sequence(g)
            if v in seq:
                return seq[:-1].count(v)
        raise GraphError(f"vertex {v!r} not covered by factor")


@dataclass(frozen=True)
class CycleFactor:
    """Vertex-disjoint alternating cycles covering V."""

    cycles: tuple[AlternatingCycle, ...]


Witness = AlternatingTrail | EulerianFactor | CycleFactor


# ---------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------

def parse_graph(text: str) -> EdgeColouredMultigraph:
    """Parse the JSON graph document; raises GraphError with a location."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise GraphError("top-level document must be an object")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphError('"vertices" must be a list of strings')
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list')
    edges: list[Edge] = []
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise GraphError(f"{where}: must be an object")
        for key in ("id", "u", "v", "colour"):
            if not isinstance(item.get(key), str):
                raise GraphError(f'{where}: missing or non-string "{key}"')
        colour = _COLOUR_TOKENS.get(item["colour"])
        if colour is None:
            raise GraphError(f"{where}: unknown colour token {item['colour']!r}")
        if item["u"] == item["v"]:
            raise GraphError(f"{where}: self-loop at {item['u']!r}")
        edges.append(Edge(item["id"], item["u"], item["v"], colour))
    try:
        return EdgeColouredMultigraph(verts, edges)
    except GraphError as exc:
        raise GraphError(str(exc)) from None


def graph_to_dict(g: EdgeColouredMultigraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "colour": e.colour.token}
            for e in g.edges
        ],
    }


def serialize_graph(g: EdgeColouredMultigraph, format: str = "json") -> str:
    if format == "json":
        return json.dumps(graph_to_dict(g), indent=2) + "\n"
    if format == "dot":
        lines = ["graph {"]
        for v in g.vertices:
            lines.append(f'  "{v}";')
        for e in g.edges:
            lines.append(f'  "{e.u}" -- "{e.v}" '
                         f'[color={e.colour.token}, id="{e.id}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise GraphError(f"unknown format {format!r}")


def witness_to_dict(g: EdgeColouredMultigraph, w: Witness) -> dict:
    if isinstance(w, AlternatingCycle):
        return {"kind": "cycle", "start": w.start, "edges": list(w.edge_ids)}
    if isinstance(w, AlternatingTrail):
        return {"kind": "trail", "start": w.start, "closed": w.closed,
                "edges": list(w.edge_ids)}
    if isinstance(w, EulerianFactor):
        return {"kind": "eulerian_factor",
                "parts": [{"vertices": sorted(vs),
                           "start": t.start,
                           "edges": list(t.edge_ids)}
                          for vs, t in w.parts]}
    if isinstance(w, CycleFactor):
        return {"kind": "cycle_factor",
                "cycles": [{"start": c.start, "edges": list(c.edge_ids)}
                           for c in w.cycles]}
    raise GraphError(f"unknown witness type {type(w).__name__}")


def serialize_witness(g: EdgeColouredMultigraph, w: Witness) -> str:
    return json.dumps(witness_to_dict(g, w), indent=2) + "\n"


# ---------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_trail(g: EdgeColouredMultigraph, t: AlternatingTrail) -> VerifyResult:
    if t.start not in g._index:
        return VerifyResult(False, f"unknown start vertex {t.start!r}")
    if len(t.edge_ids) != len(set(t.edge_ids)):
        return VerifyResult(False, "edge repeated")
    cur = t.start
    prev_colour: Optional[Colour] = None
    for eid in t.edge_ids:
        if not g.has_edge_id(eid):
            return VerifyResult(False, f"unknown edge id {eid!r}")
        e = g.edge(eid)
        if not e.touches(cur):
            return VerifyResult(False, f"edge {eid!r} does not continue the walk")
        if prev_colour is not None and e.colour is prev_colour:
            return VerifyResult(False, f"colours do not alternate at edge {eid!r}")
        prev_colour = e.colour
        cur = e.other_end(cur)
    if t.closed:
        if not t.edge_ids:
            return VerifyResult(False, "closed trail must have edges")
        if cur != t.start:
            return VerifyResult(False, "not closed")
        if len(t.edge_ids) % 2 != 0 or len(t.edge_ids) < 2:
            return VerifyResult(False, "closed trail length must be even and >= 2")
        first = g.edge(t.edge_ids[0]).colour
        last = g.edge(t.edge_ids[-1]).colour
        if first is last:
            return VerifyResult(False, "first and last edge colours must differ")
    return VerifyResult(True)


def _check_cycle(g: EdgeColouredMultigraph, c: AlternatingCycle) -> VerifyResult:
    if not c.closed:
        return VerifyResult(False, "cycle must be closed")
    r = _check_trail(g, c)
    if not r:
        return r
    seq = c.vertex_sequence(g)[:-1]
    if len(seq) != len(set(seq)):
        # the length-2 digon case already passes: its sequence is [u, v]
        return VerifyResult(False, "cycle revisits a vertex")
    return VerifyResult(True)


def verify_witness(g: EdgeColouredMultigraph, w: Witness) -> VerifyResult:
    """Check every invariant of the witness type against g."""
    if isinstance(w, AlternatingCycle):
        return _check_cycle(g, w)
    if isinstance(w, AlternatingTrail):
        return _check_trail(g, w)
    if isinstance(w, EulerianFactor):
        covered: set[str] = set()
        for vs, trail in w.parts:
            if covered & vs:
                return VerifyResult(False, "factor parts overlap")
            covered |= vs
            if not trail.closed:
                return VerifyResult(False, "factor witness must be closed")
            r = _check_trail(g, trail)
            if not r:
                return r
            visited = set(trail.vertex_sequence(g))
            if visited != vs:
                return VerifyResult(
                    False, "factor witness does not span its vertex set")
            for eid in trail.edge_ids:
                e = g.edge(eid)
                if e.u not in vs or e.v not in vs:
                    return VerifyResult(
                        False, f"edge {eid!r} leaves its factor part")
        if covered != set(g.vertices):
            return VerifyResult(False, "factor parts do not cover V")
        return VerifyResult(True)
    if isinstance(w, CycleFactor):
        covered = set()
        for c in w.cycles:
            r = _check_cycle(g, c)
            if not r:
                return r
            vs = set(c.vertex_sequence(g))
            if covered & vs:
                return VerifyResult(False, "factor cycles overlap")
            covered |= vs
        if covered != set(g.vertices):
            return VerifyResult(False, "factor cycles do not cover V")
        return VerifyResult(True)
    return VerifyResult(False, f"unknown witness type {type(w).__name__}")


def build_graph(vertices: Sequence[str],
                edge_triples: Sequence[tuple[str, str, Colour]],
                prefix: str = "e") -> EdgeColouredMultigraph:
    """Convenience constructor assigning sequential edge ids."""
    edges = [Edge(f"{prefix}{i}", u, v, c)
             for i, (u, v, c) in enumerate(edge_triples)]
    return EdgeColouredMultigraph(vertices, edges)
