import random

import pytest
from hypothesis import given, settings, strategies as st

from ecgraph import (
    BLUE,
    RED,
    GraphError,
    alternating_path,
    alternating_trail,
    build_graph,
    complete_multipartite_classes,
    is_colour_connected,
    is_trail_colour_connected,
    oracle_alternating_path,
    oracle_alternating_trail,
    oracle_colour_connected,
    oracle_trail_colour_connected,
    trail_to_path_complete_multipartite,
    verify_witness,
)
from ecgraph.structure import blow_up
from ecgraph.reductions import fixture, generate


def rand_graph(seed, n_max=6, m_max=12):
    rng = random.Random(seed)
    return generate("random_2ec", seed=seed, n=rng.randint(2, n_max),
                    m=rng.randint(1, m_max))


class TestPathQueries:
    def test_single_edge(self):
        g = build_graph(["a", "b"], [("a", "b", RED)])
        p = alternating_path(g, "a", "b", RED)
        assert p is not None and len(p.edge_ids) == 1
        assert alternating_path(g, "a", "b", BLUE) is None

    def test_prescribed_end_colour(self):
        g = build_graph(["a", "b", "c"], [("a", "b", RED), ("b", "c", BLUE)])
        assert alternating_path(g, "a", "c", RED, BLUE) is not None
        assert alternating_path(g, "a", "c", RED, RED) is None

    def test_same_endpoints_rejected(self):
        g = build_graph(["a", "b"], [("a", "b", RED)])
        with pytest.raises(ValueError):
            alternating_path(g, "a", "a", RED)

    def test_path_is_simple(self):
        g = fixture("efig")
        for c in (RED, BLUE):
            p = alternating_path(g, "v1", "v6", c)
            if p is not None:
                seq = p.vertex_sequence(g)
                assert len(seq) == len(set(seq))


class TestTrailQueries:
    def test_trail_where_no_path(self):
        # blue-first works via the direct edge, red-first dead-ends at u
        g = fixture("needall_g")
        assert alternating_trail(g, "x1", "x2", BLUE) is not None
        assert alternating_trail(g, "x1", "x2", RED) is None

    def test_trail_end_vertex(self):
        g = fixture("halfm")
        t = alternating_trail(g, "a", "h", RED)
        assert t is not None and t.end(g) == "h"
        assert verify_witness(g, t)


class TestConnectivity:
    def test_needs_two_vertices(self):
        g = build_graph(["a"], [])
        with pytest.raises(ValueError):
            is_colour_connected(g)

    def test_counterexample_is_first_in_declaration_order(self):
        g = fixture("needall_g")
        rep = is_trail_colour_connected(g)
        assert not rep.connected
        assert rep.counterexample == ("x1", "x2", RED)

    def test_collect_witnesses(self):
        g = build_graph(["a", "b"], [("a", "b", RED), ("a", "b", BLUE)])
        rep = is_colour_connected(g, collect=True)
        assert rep.connected
        assert len(rep.witnesses) == 4
        for w in rep.witnesses.values():
            assert verify_witness(g, w)

    def test_quotient_route_matches_direct(self):
        g = generate("mclosed_blowup", seed=11, n=14)
        assert is_colour_connected(g).connected \
            == is_colour_connected(g, use_quotient=False).connected
        assert is_trail_colour_connected(g).connected \
            == is_trail_colour_connected(g, use_quotient=False).connected


class TestCompleteMultipartite:
    def test_classes_of_fixture(self):
        classes = complete_multipartite_classes(fixture("cmg_example"))
        assert classes is not None
        assert sorted(sorted(c) for c in classes) == [
            ["x1", "x2"], ["y1", "y2", "z1", "z3"], ["z2", "z4"]]

    def test_not_multipartite(self):
        g = build_graph(["a", "b", "c"], [("a", "b", RED)])
        assert complete_multipartite_classes(g) is None

    def test_trail_to_path_requires_multipartite(self):
        g = fixture("needall_g")
        t = alternating_trail(g, "x1", "x2", BLUE)
        with pytest.raises(ValueError):
            trail_to_path_complete_multipartite(g, t)

    def test_trail_to_path_preserves_ends_and_start_colour(self):
        g = generate("complete_multipartite", seed=3, sizes=[2, 2, 2])
        checked = 0
        for u in g.vertices:
            for v in g.vertices:
                if u == v:
                    continue
                for c in (RED, BLUE):
                    t = alternating_trail(g, u, v, c)
                    if t is None:
                        continue
                    p = trail_to_path_complete_multipartite(g, t)
                    seq = p.vertex_sequence(g)
                    assert len(seq) == len(set(seq))
                    assert seq[0] == u and seq[-1] == v
                    assert g.edge(p.edge_ids[0]).colour is c
                    checked += 1
        assert checked > 0


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 100_000))
def test_path_and_trail_queries_match_oracles(seed):
    g = rand_graph(seed)
    rng = random.Random(seed ^ 0xABC)
    for _ in range(6):
        u, v = rng.sample(g.vertices, 2)
        c = rng.choice((RED, BLUE))
        p = alternating_path(g, u, v, c)
        assert (p is None) == (oracle_alternating_path(g, u, v, c) is None)
        if p is not None:
            assert verify_witness(g, p)
            seq = p.vertex_sequence(g)
            assert len(seq) == len(set(seq))
        t = alternating_trail(g, u, v, c)
        assert (t is None) == (oracle_alternating_trail(g, u, v, c) is None)
        if t is not None:
            assert verify_witness(g, t)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_connectivity_sweeps_match_oracles(seed):
    g = rand_graph(seed, n_max=5, m_max=10)
    assert is_colour_connected(g).connected == oracle_colour_connected(g)
    assert is_trail_colour_connected(g).connected \
        == oracle_trail_colour_connected(g)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 100_000), st.integers(1, 3))
def test_connectivity_invariant_under_blow_up(seed, extra):
    g = rand_graph(seed, n_max=5, m_max=8)
    rng = random.Random(seed)
    mult = {v: 1 for v in g.vertices}
    for _ in range(extra):
        mult[rng.choice(g.vertices)] += 1
    h = blow_up(g, mult)
    assert is_colour_connected(g).connected == is_colour_connected(h).connected
    assert is_trail_colour_connected(g).connected \
        == is_trail_colour_connected(h).connected
