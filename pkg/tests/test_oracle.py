import pytest

from ecgraph import (
    BLUE,
    RED,
    BudgetExceeded,
    OracleBudget,
    build_graph,
    oracle_alternating_path,
    oracle_alternating_trail,
    oracle_colour_connected,
    oracle_cycle_factor,
    oracle_eulerian_factor,
    oracle_ham_alternating,
    oracle_supereulerian,
    oracle_trail_colour_connected,
    verify_witness,
)
from ecgraph.reductions import fixture


def digon():
    return build_graph(["a", "b"], [("a", "b", RED), ("a", "b", BLUE)])


class TestFixtureClaims:
    def test_efig_spanning_trail(self):
        g = fixture("efig")
        t = oracle_supereulerian(g)
        assert t is not None and len(t.edge_ids) == 8
        assert verify_witness(g, t)
        assert t.vertex_set(g) == set(g.vertices)

    def test_efig_no_hamiltonian_cycle(self):
        assert oracle_ham_alternating(fixture("efig")) is None

    def test_halfm_negative_both_ways(self):
        g = fixture("halfm")
        assert oracle_supereulerian(g) is None
        assert oracle_ham_alternating(g) is None

    def test_halfm_has_cycle_factor(self):
        g = fixture("halfm")
        cf = oracle_cycle_factor(g)
        assert cf is not None and verify_witness(g, cf)

    def test_cmg_example_not_supereulerian(self):
        g = fixture("cmg_example")
        assert oracle_supereulerian(
            g, OracleBudget(max_vertices=8, max_edges=40, seconds=120)) is None

    def test_needall_h_hamiltonian(self):
        g = fixture("needall_h")
        c = oracle_ham_alternating(
            g, OracleBudget(max_vertices=8, max_edges=40, seconds=120))
        assert c is not None and len(c.edge_ids) == 8
        assert verify_witness(g, c)


class TestSmallCases:
    def test_digon_everything(self):
        g = digon()
        assert oracle_supereulerian(g) is not None
        assert oracle_ham_alternating(g) is not None
        assert oracle_eulerian_factor(g) is not None
        assert oracle_colour_connected(g)
        assert oracle_trail_colour_connected(g)

    def test_all_red_triangle(self):
        g = build_graph(["a", "b", "c"],
                        [("a", "b", RED), ("b", "c", RED), ("a", "c", RED)])
        assert oracle_eulerian_factor(g) is None
        assert oracle_cycle_factor(g) is None
        assert not oracle_colour_connected(g)

    def test_forbid_digons(self):
        assert oracle_cycle_factor(digon(), forbid_digons=True) is None
        g = build_graph(["a", "b", "c", "d"],
                        [("a", "b", RED), ("b", "c", BLUE),
                         ("c", "d", RED), ("d", "a", BLUE)])
        assert oracle_cycle_factor(g, forbid_digons=True) is not None

    def test_path_and_trail_queries(self):
        g = build_graph(["a", "b", "c"], [("a", "b", RED), ("b", "c", BLUE)])
        assert oracle_alternating_path(g, "a", "c", RED) is not None
        assert oracle_alternating_path(g, "a", "c", BLUE) is None
        assert oracle_alternating_trail(g, "a", "c", RED) is not None


class TestBudget:
    def test_vertex_cap(self):
        g = build_graph([f"v{i}" for i in range(4)],
                        [("v0", "v1", RED), ("v1", "v2", BLUE),
                         ("v2", "v3", RED)])
        with pytest.raises(BudgetExceeded):
            oracle_supereulerian(g, OracleBudget(max_vertices=3))

    def test_edge_cap(self):
        g = fixture("efig")
        with pytest.raises(BudgetExceeded):
            oracle_ham_alternating(g, OracleBudget(max_edges=5))

    def test_time_cap(self):
        from ecgraph.reductions import generate
        # large enough that the trail search cannot finish instantly
        g = generate("random_2ec", seed=5, n=12, m=36)
        with pytest.raises(BudgetExceeded):
            oracle_supereulerian(
                g, OracleBudget(max_vertices=20, max_edges=500, seconds=0.0))
