import itertools
import random
from fractions import Fraction

import pytest

from combinlab.graph_core import Digraph, Graph, dfs
from combinlab.paths_mst import (
    INF,
    WeightedDigraph,
    WeightedGraph,
    dijkstra,
    floyd_warshall,
    kruskal,
    max_spanning_tree,
    prim,
    reconstruct_path,
    transitive_closure,
    undirected_shortest_path,
)


def test_dijkstra_single_arc():
    g = WeightedDigraph(2, {(1, 2): 5})
    res = dijkstra(g, 1)
    assert res.dist[2] == 5
    assert res.path_to(2) == [1, 2]


def test_dijkstra_triangle():
    g = WeightedDigraph(3, {(1, 2): 1, (2, 3): 1, (1, 3): 3})
    res = dijkstra(g, 1)
    assert res.dist[3] == 2
    assert res.path_to(3) == [1, 2, 3]


def test_dijkstra_unreachable_and_negative():
    g = WeightedDigraph(3, {(1, 2): 1})
    res = dijkstra(g, 1)
    assert res.dist[3] == INF
    with pytest.raises(ValueError):
        res.path_to(3)
    with pytest.raises(ValueError):
        dijkstra(WeightedDigraph(2, {(1, 2): -1}), 1)


def test_floyd_negative_cycle_flags():
    g = WeightedDigraph(2, {(1, 2): -1, (2, 1): -1})
    t = floyd_warshall(g)
    assert t.d(1, 1) < 0
    assert 1 in t.negative_cycle_vertices


def test_floyd_matches_dijkstra_and_path():
    g = WeightedDigraph(3, {(1, 2): 1, (2, 3): 1, (1, 3): 3})
    t = floyd_warshall(g)
    assert t.d(1, 3) == 2
    assert reconstruct_path(t, 1, 3) == [1, 2, 3]
    single = floyd_warshall(WeightedDigraph(1, {}))
    assert single.d(1, 1) == 0
    assert single.negative_cycle_vertices == set()


def test_reconstruct_path_guards():
    g = WeightedDigraph(3, {(1, 2): 1})
    t = floyd_warshall(g)
    with pytest.raises(ValueError):
        reconstruct_path(t, 1, 3)
    neg = floyd_warshall(WeightedDigraph(3, {(1, 2): -2, (2, 1): 1, (2, 3): 1}))
    with pytest.raises(ValueError):
        reconstruct_path(neg, 1, 3)


def random_weighted_digraph(rng, n, lo=0, hi=9):
    arcs = {}
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and rng.random() < 0.4:
                arcs[(u, v)] = rng.randint(lo, hi)
    return WeightedDigraph(n, arcs)


def test_dijkstra_equals_floyd_rows_random():
    rng = random.Random(4)
    for _ in range(200):
        g = random_weighted_digraph(rng, rng.randint(1, 8))
        t = floyd_warshall(g)
        for s in range(1, g.n + 1):
            res = dijkstra(g, s)
            for v in range(1, g.n + 1):
                if s == v:
                    continue
                assert res.dist[v] == t.d(s, v)


def test_transitive_closure_cases():
    chain = Digraph(3, [(1, 2), (2, 3)])
    t = transitive_closure(chain)
    assert t[1][3] == 1
    empty = transitive_closure(Digraph(3, []))
    for i in range(1, 4):
        for j in range(1, 4):
            assert empty[i][j] == (1 if i == j else 0)


def test_transitive_closure_matches_dfs_reachability():
    rng = random.Random(8)
    for _ in range(50):
        n = 6
        arcs = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(1, n + 1)
            if u != v and rng.random() < 0.3
        ]
        d = Digraph(n, arcs)
        t = transitive_closure(d)
        for s in range(1, n + 1):
            seen = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in d.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            for v in range(1, n + 1):
                assert t[s][v] == (1 if v in seen else 0)
        # idempotence: closing the closure changes nothing
        closure_arcs = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and t[i][j]
        ]
        t2 = transitive_closure(Digraph(n, closure_arcs))
        assert t2 == t


def test_undirected_shortest_path_mirrors_dijkstra():
    g = WeightedGraph(3, {(1, 2): 1, (2, 3): 1, (1, 3): 3})
    dist, path = undirected_shortest_path(g, 1, 3)
    assert dist == 2 and path == [1, 2, 3]
    lonely = WeightedGraph(2, {})
    dist, path = undirected_shortest_path(lonely, 1, 2)
    assert dist == INF and path is None


def spanning_tree_weights(g: WeightedGraph):
    n = g.n
    for subset in itertools.combinations(g.edges, n - 1):
        label = {v: v for v in range(1, n + 1)}
        ok = True
        for u, v in subset:
            ru = label[u]
            rv = label[v]
            if ru == rv:
                ok = False
                break
            for x in label:
                if label[x] == rv:
                    label[x] = ru
        if ok:
            yield sum(g.weight[e] for e in subset)


def test_mst_triangle():
    g = WeightedGraph(3, {(1, 2): 1, (2, 3): 2, (1, 3): 3})
    assert prim(g).total_weight == 3
    assert kruskal(g).total_weight == 3
    assert min(spanning_tree_weights(g)) == 3
    assert max_spanning_tree(g).total_weight == 5


def test_mst_path_graph_is_itself():
    g = WeightedGraph(4, {(1, 2): 4, (2, 3): 1, (3, 4): 7})
    assert sorted(prim(g).edges) == [(1, 2), (2, 3), (3, 4)]


def test_mst_disconnected_raises():
    g = WeightedGraph(4, {(1, 2): 1, (3, 4): 1})
    with pytest.raises(ValueError):
        prim(g)
    with pytest.raises(ValueError):
        kruskal(g)


def test_prim_kruskal_agree_and_match_bruteforce():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(2, 7)
        edges = {}
        weights = rng.sample(range(1, 100), n * (n - 1) // 2)
        idx = 0
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if rng.random() < 0.7:
                    edges[(u, v)] = weights[idx]
                idx += 1
        g = WeightedGraph(n, edges)
        try:
            p = prim(g)
        except ValueError:
            continue  # disconnected draw
        k = kruskal(g)
        assert p.total_weight == k.total_weight == min(spanning_tree_weights(g))
        # distinct weights: the minimum spanning tree is unique
        assert p.edge_set() == k.edge_set()
        assert len(p.edges) == n - 1
        assert max_spanning_tree(g).total_weight == max(spanning_tree_weights(g))


def test_prim_square_with_diagonal():
    g = WeightedGraph(
        4, {(1, 2): 1, (2, 3): 2, (3, 4): 3, (1, 4): 4, (1, 3): 5}
    )
    assert prim(g).edge_set() == kruskal(g).edge_set()


def test_fraction_weights_supported():
    g = WeightedGraph(3, {(1, 2): Fraction(1, 3), (2, 3): Fraction(1, 2), (1, 3): 1})
    assert prim(g).total_weight == Fraction(5, 6)
    res = dijkstra(g.to_digraph(), 1)
    assert res.dist[3] == Fraction(5, 6)


def test_float_weights_rejected():
    with pytest.raises(ValueError):
        WeightedGraph(2, {(1, 2): 0.5})
