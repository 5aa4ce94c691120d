"""Graph invariants against brute-force oracles, plus the text exports."""

import itertools

import numpy as np
import pytest

from noncyc.graphs import (
    CliqueBudgetError,
    Distance,
    SimpleGraph,
    clique_number,
    connected_components,
    decode_graph6,
    diameter,
    distance_matrix,
    domination_number,
    encode_graph6,
    hamiltonian_cycle,
    max_clique,
    to_dot,
)
from oracles import brute_max_clique, naive_diameter, naive_domination


def from_edges(m, edges):
    adj = np.zeros((m, m), bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return SimpleGraph(adj)


def random_graph(m, p, seed):
    rng = np.random.default_rng(seed)
    adj = rng.random((m, m)) < p
    adj = np.triu(adj, 1)
    return SimpleGraph(adj | adj.T)


CASES = [
    from_edges(1, []),
    from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    from_edges(6, [(0, 1), (1, 2), (3, 4)]),
    from_edges(7, [(i, j) for i in range(7) for j in range(i + 1, 7)]),
    from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
                   (2, 3), (2, 4), (2, 5)]),
] + [random_graph(m, p, seed)
     for m, p, seed in [(8, 0.3, 1), (10, 0.5, 2), (12, 0.4, 3),
                        (14, 0.6, 4), (16, 0.25, 5), (13, 0.8, 6)]]


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph(np.zeros((2, 3), bool))
    loop = np.zeros((2, 2), bool)
    loop[0, 0] = True
    with pytest.raises(ValueError):
        SimpleGraph(loop)
    asym = np.zeros((2, 2), bool)
    asym[0, 1] = True
    with pytest.raises(ValueError):
        SimpleGraph(asym)
    with pytest.raises(ValueError):
        SimpleGraph(np.zeros((2, 2), bool), labels=("a",))


def test_simple_graph_accessors():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.order == 4
    assert g.edge_count == 4
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert g.neighbors(1) == (0, 2)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert list(g.degrees) == [2, 2, 2, 2]
    comp = g.complement()
    assert comp.edges() == [(0, 2), (1, 3)]
    sub = g.induced([0, 1, 2])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_distance_ordering_and_repr():
    assert Distance.finite(2) == Distance.finite(2)
    assert Distance.finite(2) != Distance.finite(3)
    assert Distance.finite(3) != Distance.infinite()
    assert str(Distance.finite(3)) == "3"
    assert str(Distance.infinite()) == "inf"
    assert Distance.finite(2).to_dict() == {"kind": "finite", "value": 2}
    assert Distance.infinite().to_dict() == {"kind": "infinite"}


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_diameter_matches_oracle(g):
    want = naive_diameter(g.adj)
    got = diameter(g)
    if want is None:
        assert got == Distance.infinite()
    else:
        assert got == Distance.finite(want)


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_distance_matrix_properties(g):
    dist = distance_matrix(g)
    assert (dist.diagonal() == 0).all()
    assert np.array_equal(dist, dist.T)
    assert ((dist == 1) == g.adj).all()


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_clique_matches_oracle(g):
    size, _ = brute_max_clique(g.adj)
    out = max_clique(g)
    assert out.completed
    assert out.size == size
    if size:
        assert len(out.witness) == size


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_domination_matches_oracle(g):
    for cap in (1, 2, 3):
        want = naive_domination(g.adj, cap)
        got = domination_number(g, cap=cap)
        assert got.value == want
        assert got.cap == cap
        if got.value is not None:
            assert len(got.witness) == got.value


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_hamilton_matches_exhaustive(g):
    m = g.order
    out = hamiltonian_cycle(g)
    assert out.status in ("found", "none")
    if m <= 10:
        exists = m >= 3 and any(
            g.adj[perm[-1], perm[0]]
            and all(g.adj[perm[i], perm[i + 1]] for i in range(m - 1))
            for perm in itertools.permutations(range(1, m))
            for perm in [(0,) + perm]
        )
        assert (out.status == "found") == exists
    if out.status == "found":
        cycle = out.cycle
        assert sorted(cycle) == list(range(m))
        assert all(g.adj[cycle[i], cycle[(i + 1) % m]] for i in range(m))


def test_connected_components():
    g = from_edges(6, [(0, 1), (1, 2), (3, 4)])
    assert connected_components(g) == [(0, 1, 2), (3, 4), (5,)]
    whole = from_edges(3, [(0, 1), (1, 2)])
    assert connected_components(whole) == [(0, 1, 2)]


def test_clique_budget_error():
    g = random_graph(30, 0.9, 7)
    with pytest.raises(CliqueBudgetError):
        clique_number(g, budget=3)


def test_clique_stop_at_short_circuits():
    g = from_edges(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])
    out = max_clique(g, stop_at=4)
    assert out.target_hit
    assert out.size >= 4


def test_graph6_triangle():
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert encode_graph6(k3) == "Bw"
    back = decode_graph6("Bw")
    assert np.array_equal(back.adj, k3.adj)


@pytest.mark.parametrize("g", CASES, ids=range(len(CASES)))
def test_graph6_round_trip(g):
    assert np.array_equal(decode_graph6(encode_graph6(g)).adj, g.adj)


def test_graph6_large_order_header():
    g = SimpleGraph(np.zeros((70, 70), bool))
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text).order == 70


@pytest.mark.parametrize("text", ["", "B", "Bww", "~??"])
def test_graph6_rejects_malformed(text):
    with pytest.raises(ValueError):
        decode_graph6(text)


def test_to_dot_layout():
    g = SimpleGraph(
        np.array([[0, 1], [1, 0]], bool), labels=('say "hi"', "b"))
    text = to_dot(g, name="pair")
    lines = text.splitlines()
    assert lines[0] == 'graph "pair" {'
    assert lines[1] == '  0 [label="say \\"hi\\""];'
    assert lines[2] == '  1 [label="b"];'
    assert lines[3] == "  0 -- 1;"
    assert lines[4] == "}"
    assert text.endswith("}\n")
    unlabeled = to_dot(SimpleGraph(np.zeros((2, 2), bool)))
    assert "  0;" in unlabeled and "label" not in unlabeled
