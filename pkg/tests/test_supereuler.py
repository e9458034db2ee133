import random

import pytest
from hypothesis import given, settings, strategies as st

from ecgraph import (
    BLUE,
    RED,
    AlternatingTrail,
    BudgetExceeded,
    Dominates,
    Merged,
    NoEdgeBetween,
    OracleBudget,
    UnsupportedClass,
    bb_from_digraph,
    bb_to_digraph,
    build_graph,
    decide_complete_bipartite,
    eulerian_factor,
    is_colour_connected,
    is_trail_colour_connected,
    merge_trails_pair,
    oracle_ham_alternating,
    oracle_supereulerian,
    supereulerian,
    verify_witness,
)
from ecgraph.core import GraphError
from ecgraph.structure import is_m_closed, m_closure
from ecgraph.supereuler import merge_trails_3cycle, merge_trails_transitive
from ecgraph.reductions import fixture, generate

WIDE = OracleBudget(max_vertices=9, max_edges=40, seconds=60)


def three_digons(pattern):
    """Three digon parts a, b, c plus complete monochromatic joins:
    pattern maps (i, j) to the colours of v_{i,1}'s and v_{i,2}'s edges
    into part j."""
    parts = {p: [f"{p}1", f"{p}2"] for p in "abc"}
    triples = []
    for p in "abc":
        triples.append((f"{p}1", f"{p}2", RED))
        triples.append((f"{p}1", f"{p}2", BLUE))
    for (i, j), (c1, c2) in pattern.items():
        for tgt in parts[j]:
            triples.append((f"{i}1", tgt, c1))
            triples.append((f"{i}2", tgt, c2))
    return build_graph([v for p in "abc" for v in parts[p]], triples)


def digon_trails(g):
    return [AlternatingTrail(s, (f"e{2 * k}", f"e{2 * k + 1}"), closed=True)
            for k, s in enumerate(("a1", "b1", "c1"))]


class TestSupereulerianTopLevel:
    def test_out_of_class_raises(self):
        with pytest.raises(UnsupportedClass):
            supereulerian(fixture("efig"))

    def test_no_eulerian_factor_reason(self):
        g = build_graph(["a", "b", "c"],
                        [("a", "b", RED), ("b", "c", RED), ("a", "c", BLUE)])
        assert is_m_closed(g)[0]
        res = supereulerian(g)
        assert res.reason == "no_eulerian_factor" and not res

    def test_not_trail_colour_connected_reason(self):
        g = build_graph(["a", "b", "c", "d"],
                        [("a", "b", RED), ("a", "b", BLUE),
                         ("c", "d", RED), ("c", "d", BLUE)])
        res = supereulerian(g)
        assert res.reason == "not_trail_colour_connected"
        assert res.counterexample is not None

    def test_digon_positive(self):
        g = build_graph(["a", "b"], [("a", "b", RED), ("a", "b", BLUE)])
        res = supereulerian(g)
        assert res and len(res.trail.edge_ids) == 2


class TestTrailPairMerging:
    def test_no_edge_between(self):
        g = build_graph(["a", "b", "c", "d"],
                        [("a", "b", RED), ("a", "b", BLUE),
                         ("c", "d", RED), ("c", "d", BLUE)])
        t1 = AlternatingTrail("a", ("e0", "e1"), closed=True)
        t2 = AlternatingTrail("c", ("e2", "e3"), closed=True)
        assert isinstance(merge_trails_pair(g, t1, t2), NoEdgeBetween)

    def test_merge_through_blow_up(self):
        g = three_digons({("a", "b"): (RED, BLUE)})
        # make the pair mergeable by adding a mixed vertex
        g = build_graph(
            ["a1", "a2", "b1", "b2"],
            [("a1", "a2", RED), ("a1", "a2", BLUE),
             ("b1", "b2", RED), ("b1", "b2", BLUE),
             ("a1", "b1", RED), ("a1", "b1", BLUE),
             ("a2", "b2", RED), ("a2", "b2", BLUE)])
        t1 = AlternatingTrail("a1", ("e0", "e1"), closed=True)
        t2 = AlternatingTrail("b1", ("e2", "e3"), closed=True)
        out = merge_trails_pair(g, t1, t2)
        assert isinstance(out, Merged)
        assert out.cycle.vertex_set(g) == set(g.vertices)
        assert verify_witness(g, out.cycle)

    def test_domination_between_trails(self):
        g = three_digons({("a", "b"): (RED, BLUE)})
        t = digon_trails(g)
        out = merge_trails_pair(g, t[0], t[1])
        assert isinstance(out, Dominates)
        assert out.certificate.labels == {"a1": RED, "a2": BLUE}

    def test_blow_up_with_hamiltonian_cycle_is_supereulerian(self):
        # needall_h is a blow-up of needall_g and carries a hamiltonian
        # alternating cycle, hence a spanning closed trail
        g = fixture("needall_h")
        res = supereulerian(g)
        assert res and verify_witness(g, res.trail)
        assert res.trail.vertex_set(g) == set(g.vertices)


class TestTournamentMerges:
    def test_triangle(self):
        g = three_digons({("a", "b"): (RED, BLUE),
                          ("b", "c"): (RED, BLUE),
                          ("c", "a"): (RED, BLUE)})
        t = digon_trails(g)
        certs = {}
        for i, j in ((0, 1), (1, 2), (2, 0)):
            out = merge_trails_pair(g, t[i], t[j])
            assert isinstance(out, Dominates)
            certs[(i, j)] = out.certificate
        merged = merge_trails_3cycle(g, t[0], t[1], t[2],
                                     certs[(0, 1)], certs[(1, 2)],
                                     certs[(2, 0)])
        assert verify_witness(g, merged)
        assert merged.vertex_set(g) == set(g.vertices)
        # the full pipeline agrees with the oracle
        assert bool(supereulerian(g)) \
            == (oracle_supereulerian(g, WIDE) is not None)

    def test_transitive(self):
        g = three_digons({("a", "b"): (RED, BLUE),
                          ("a", "c"): (BLUE, RED),
                          ("b", "c"): (RED, BLUE)})
        t = digon_trails(g)
        for i, j in ((0, 1), (0, 2), (1, 2)):
            assert isinstance(merge_trails_pair(g, t[i], t[j]), Dominates)
        merged = merge_trails_transitive(g, t[0], t[1], t[2], "a1", RED)
        assert verify_witness(g, merged)
        assert merged.vertex_set(g) == set(g.vertices)
        assert bool(supereulerian(g)) \
            == (oracle_supereulerian(g, WIDE) is not None)


class TestBipartiteDigraph:
    def test_round_trip_structure(self):
        g = generate("complete_bipartite", seed=7, n1=3, n2=3)
        back = bb_from_digraph(bb_to_digraph(g))
        assert sorted(back.vertices) == sorted(g.vertices)
        key = lambda e: (e.id, frozenset((e.u, e.v)), e.colour)
        assert sorted(map(key, back.edges)) == sorted(map(key, g.edges))

    def test_directed_four_cycle(self):
        from ecgraph.supereuler import BipartiteDigraph
        d = BipartiteDigraph(("x1", "x2"), ("y1", "y2"),
                             (("a1", "x1", "y1"), ("a2", "y1", "x2"),
                              ("a3", "x2", "y2"), ("a4", "y2", "x1")))
        g = bb_from_digraph(d)
        cols = [g.edge(f"a{i}").colour for i in (1, 2, 3, 4)]
        assert cols == [RED, BLUE, RED, BLUE]
        assert oracle_ham_alternating(g) is not None

    def test_non_bipartite_rejected(self):
        with pytest.raises(GraphError, match="not bipartite"):
            bb_to_digraph(fixture("needall_h"))


class TestDecideCompleteBipartite:
    def test_requires_complete_bipartite(self):
        with pytest.raises(UnsupportedClass):
            decide_complete_bipartite(fixture("cmg_example"))

    def test_all_red_k22_negative(self):
        g = build_graph(["a1", "a2", "b1", "b2"],
                        [("a1", "b1", RED), ("a1", "b2", RED),
                         ("a2", "b1", RED), ("a2", "b2", RED)])
        v = decide_complete_bipartite(g)
        assert not v.supereulerian and not v.hamiltonian
        assert not v.colour_connected

    def test_alternating_k22_positive(self):
        g = build_graph(["a1", "a2", "b1", "b2"],
                        [("a1", "b1", RED), ("b1", "a2", BLUE),
                         ("a2", "b2", RED), ("b2", "a1", BLUE)])
        v = decide_complete_bipartite(g)
        assert v.supereulerian and v.hamiltonian


def test_reconstructed_trail_cc_not_cc_witness():
    """Some small M-closed graph is supereulerian and
    trail-colour-connected without being colour-connected."""
    for seed in range(200):
        rng = random.Random(seed)
        g = generate("random_2ec", seed=seed, n=rng.randint(3, 6),
                     m=rng.randint(3, 12))
        h = m_closure(g, "seeded_random", seed=seed)
        if len(h.edges) > 20:
            continue
        try:
            if is_colour_connected(h).connected:
                continue
            if not is_trail_colour_connected(h).connected:
                continue
        except ValueError:
            continue
        if oracle_supereulerian(h) is None:
            continue
        assert is_m_closed(h)[0]
        return
    pytest.fail("no witness graph found in the searched range")


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 100_000))
def test_supereulerian_three_way_equivalence(seed):
    rng = random.Random(seed)
    g = generate("mclosed_blowup", seed=seed, n=rng.randint(2, 8))
    res = supereulerian(g)
    characterized = (eulerian_factor(g) is not None
                     and is_trail_colour_connected(g).connected)
    slow = oracle_supereulerian(g, WIDE)
    assert bool(res) == characterized == (slow is not None)
    if res:
        assert verify_witness(g, res.trail)
        assert res.trail.vertex_set(g) == set(g.vertices)
