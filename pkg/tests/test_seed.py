import random

import pytest

from quiverlab.errors import NotDivisible
from quiverlab.laurent import LaurentPoly as L
from quiverlab.quiver import fan_quiver, from_arrows, linear_quiver
from quiverlab.seed import exchange_graph, initial_seed, mutate_seed


def kronecker():
    return from_arrows(2, [(2, 1), (2, 1)])


def test_initial_seed_fan():
    s = initial_seed(fan_quiver(3))
    assert [p.render() for p in s.cluster] == ["x1", "x2", "x3"]
    assert s.matrix == ((0, -1, -1), (1, 0, 0), (1, 0, 0))


def test_initial_seed_a1():
    s = initial_seed(linear_quiver(1))
    assert s.matrix == ((0,),)
    assert s.cluster[0] == L.variable(1, 1)


def test_initial_seed_kronecker():
    s = initial_seed(kronecker())
    assert s.matrix[1][0] == 2


def test_mutation_chain_fan_a3():
    s = initial_seed(fan_quiver(3))
    s = mutate_seed(s, 1)
    assert s.cluster[0] == L.parse("(x2*x3 + 1)/x1", 3)
    s = mutate_seed(s, 2)
    assert s.cluster[1] == L.parse("(x2*x3 + 1 + x1)/(x1*x2)", 3)
    s = mutate_seed(s, 3)
    assert s.cluster[2] == L.parse("(x2*x3 + 1 + x1)/(x1*x3)", 3)


def test_mutation_involutive_random():
    rng = random.Random(7)
    for q in (fan_quiver(3), linear_quiver(4), kronecker()):
        s = initial_seed(q)
        for _ in range(4):
            k = rng.randrange(1, q.n + 1)
            s = mutate_seed(s, k)
            assert mutate_seed(mutate_seed(s, k), k) == s


def test_exchange_graph_a3():
    graph = exchange_graph(fan_quiver(3))
    assert graph.cluster_count == 14
    assert len(graph.variables) == 9
    assert graph.complete


def test_exchange_graph_n1():
    graph = exchange_graph(linear_quiver(1))
    assert graph.cluster_count == 2
    assert graph.complete
    keys = [sorted(node) for node in graph.nodes]
    assert keys[0] == ["x1"]
    assert keys[1] == ["2*x1^-1"]


def test_exchange_graph_kronecker_budget():
    # Infinite type: the closure to BFS depth 6 holds the initial cluster
    # plus two per depth.  Never completes.
    graph = exchange_graph(kronecker(), max_depth=6)
    assert not graph.complete
    assert graph.cluster_count == 13


def test_kronecker_alternating_walk_sees_seven_clusters():
    # Direct seed iteration down the strip: six alternating mutations visit
    # seven distinct clusters.
    s = initial_seed(kronecker())
    seen = {s.cluster_key()}
    direction = 1
    for _ in range(6):
        s = mutate_seed(s, direction)
        seen.add(s.cluster_key())
        direction = 3 - direction
    assert len(seen) == 7


def test_exchange_graph_regularity():
    for q in (linear_quiver(2), fan_quiver(3), linear_quiver(3)):
        graph = exchange_graph(q)
        assert graph.complete
        for node_id in range(graph.cluster_count):
            assert len(graph.neighbors(node_id)) == q.n


def test_exchange_graph_max_nodes():
    graph = exchange_graph(fan_quiver(3), max_nodes=5)
    assert not graph.complete
    assert graph.cluster_count == 5


def test_exchange_graph_labeled_option():
    # Labeled-seed identity distinguishes orderings; the unordered count stays 14.
    plain = exchange_graph(fan_quiver(3))
    labeled = exchange_graph(fan_quiver(3), labeled=True)
    assert labeled.cluster_count >= plain.cluster_count


def test_exports():
    graph = exchange_graph(linear_quiver(2))
    assert "clusters" not in graph.to_dot()
    assert graph.to_dot().startswith("graph exchange {")
    assert '"complete": true' in graph.to_edge_list_json()


def test_laurent_phenomenon_random_walks():
    # Every division along random walks is exact and every numerator
    # coefficient positive; the full-depth version runs in acceptance.
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.choice([2, 3, 4])
        arrows = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.random() < 0.6:
                    pair = (i, j) if rng.random() < 0.5 else (j, i)
                    arrows.append(pair)
        q = from_arrows(n, arrows)
        s = initial_seed(q)
        for _ in range(6):
            k = rng.randrange(1, n + 1)
            try:
                s = mutate_seed(s, k)
            except NotDivisible:
                pytest.fail(f"division failed on {q} walk")
            for p in s.cluster:
                assert all(c > 0 for c in p.coefficients())
