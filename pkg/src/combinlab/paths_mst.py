"""Shortest paths, transitive closure, and minimum spanning trees.

Weights are exact integers or fractions; the +infinity sentinel is the
distinct IEEE infinity object (comparisons against exact numbers stay
exact, addition saturates), never a large surrogate number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph_core import Digraph, Graph

INF = float("inf")


class WeightedDigraph(Digraph):
    """Digraph with exactly one exact weight per arc."""

    def __init__(self, n: int, arc_weights: dict):
        super().__init__(n, list(arc_weights.keys()))
        if len(arc_weights) != len(self.arcs):
            raise ValueError("duplicate arcs in weight map")
        for w in arc_weights.values():
            if isinstance(w, float):
                raise ValueError("weights must be exact ints or fractions")
        self.weight = dict(arc_weights)

    def w(self, u: int, v: int):
        return self.weight.get((u, v), INF)


class WeightedGraph(Graph):
    """Undirected graph with exactly one exact weight per edge."""

    def __init__(self, n: int, edge_weights: dict):
        norm = {}
        for (u, v), w in edge_weights.items():
            key = (min(u, v), max(u, v))
            if key in norm:
                raise ValueError("duplicate edges in weight map")
            if isinstance(w, float):
                raise ValueError("weights must be exact ints or fractions")
            norm[key] = w
        super().__init__(n, list(norm.keys()))
        self.weight = norm

    def w(self, u: int, v: int):
        return self.weight.get((min(u, v), max(u, v)), INF)

    def to_digraph(self) -> WeightedDigraph:
        """Replace each edge {u, v} by the two arcs (u, v) and (v, u)."""
        arcs = {}
        for (u, v), w in self.weight.items():
            arcs[(u, v)] = w
            arcs[(v, u)] = w
        return WeightedDigraph(self.n, arcs)


@dataclass
class DijkstraResult:
    source: int
    dist: dict[int, object]  # vertex -> exact distance or INF
    pred: dict[int, int | None]

    def path_to(self, v: int) -> list[int]:
        if self.dist[v] is INF or self.dist[v] == INF:
            raise ValueError(f"vertex {v} unreachable from {self.source}")
        path = [v]
        while path[-1] != self.source:
            path.append(self.pred[path[-1]])
        return list(reversed(path))


def dijkstra(g: WeightedDigraph, source: int, target: int | None = None) -> DijkstraResult:
    """Single-source shortest paths, array version.

    Temporary labels shrink via min(l(x), l(p) + d(p, x)); the smallest
    temporary label (ties to the smallest vertex) becomes permanent each
    round.  All weights must be >= 0.
    """
    if any(w < 0 for w in g.weight.values()):
        raise ValueError("Dijkstra requires non-negative weights")
    if not 1 <= source <= g.n:
        raise ValueError("source out of range")
    dist = {v: INF for v in range(1, g.n + 1)}
    pred: dict[int, int | None] = {v: None for v in range(1, g.n + 1)}
    dist[source] = 0
    permanent = set()
    current = source
    while True:
        permanent.add(current)
        if target is not None and current == target:
            break
        for v in g.neighbors(current):
            if v in permanent:
                continue
            cand = dist[current] + g.weight[(current, v)]
            if cand < dist[v]:
                dist[v] = cand
                pred[v] = current
        pending = [v for v in range(1, g.n + 1) if v not in permanent and dist[v] != INF]
        if not pending:
            break
        current = min(pending, key=lambda v: (dist[v], v))
    return DijkstraResult(source, dist, pred)


@dataclass
class FloydTables:
    """All-pairs distance matrix, successor matrix (0 = none), and the
    vertices flagged on negative cycles.  Matrices are 1-based maps."""

    n: int
    dist: list[list[object]]  # (n+1) x (n+1), row/col 0 unused
    succ: list[list[int]]
    negative_cycle_vertices: set[int]

    def d(self, i: int, j: int):
        return self.dist[i][j]


def floyd_warshall(g: WeightedDigraph) -> FloydTables:
    """All-pairs shortest paths with successor tracking.

    d(i,i) starts at 0; after the run, vertices with d(i,i) < 0 are
    reported as lying on negative cycles (not raised).
    """
    n = g.n
    dist = [[INF] * (n + 1) for _ in range(n + 1)]
    succ = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][i] = 0
    for (u, v), w in g.weight.items():
        dist[u][v] = w
        succ[u][v] = v
    for k in range(1, n + 1):
        # D^(k) is built from the D^(k-1) snapshot; with negative cycles
        # the in-place variant would diverge from the recurrence.
        prev = [row[:] for row in dist]
        prev_succ = [row[:] for row in succ]
        for i in range(1, n + 1):
            dik = prev[i][k]
            if dik == INF:
                continue
            row_k = prev[k]
            for j in range(1, n + 1):
                dkj = row_k[j]
                if dkj == INF:
                    continue
                cand = dik + dkj
                if cand < prev[i][j]:
                    dist[i][j] = cand
                    succ[i][j] = prev_succ[i][k]
    flagged = {i for i in range(1, n + 1) if dist[i][i] < 0}
    return FloydTables(n, dist, succ, flagged)


def reconstruct_path(t: FloydTables, i: int, j: int) -> list[int]:
    """Shortest path i -> j from the successor matrix.

    Refuses pairs touching a negative cycle (endpoints flagged, or some
    flagged k with finite d(i,k) and d(k,j)).
    """
    if i == j:
        if i in t.negative_cycle_vertices:
            raise ValueError("endpoint lies on a negative cycle")
        return [i]
    if t.succ[i][j] == 0:
        raise ValueError(f"no path from {i} to {j}")
    if i in t.negative_cycle_vertices or j in t.negative_cycle_vertices:
        raise ValueError("endpoint lies on a negative cycle")
    for k in t.negative_cycle_vertices:
        if t.dist[i][k] != INF and t.dist[k][j] != INF:
            raise ValueError("path range touches a negative cycle")
    path = [i]
    guard = 0
    while path[-1] != j:
        path.append(t.succ[path[-1]][j])
        guard += 1
        if guard > t.n:
            raise ValueError("successor matrix is cyclic")
    return path


def transitive_closure(g: Digraph) -> list[list[int]]:
    """Boolean reachability closure, reflexive by convention.

    closure[i][j] (1-based) is 1 iff i == j or a directed path i -> j
    exists.  Row/col 0 unused.
    """
    n = g.n
    t = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        t[i][i] = 1
    for u, v in g.arcs:
        t[u][v] = 1
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if t[i][k]:
                row_i, row_k = t[i], t[k]
                for j in range(1, n + 1):
                    if row_k[j]:
                        row_i[j] = 1
    return t


def undirected_shortest_path(g: WeightedGraph, u: int, v: int):
    """Shortest path in an undirected graph via the doubled digraph."""
    res = dijkstra(g.to_digraph(), u, target=v)
    return res.dist[v], (res.path_to(v) if res.dist[v] != INF else None)


@dataclass
class MstResult:
    edges: list[tuple[int, int]]
    total_weight: object
    prim_trace: list[tuple[int, int | None, object]] | None = None

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def prim(g: WeightedGraph) -> MstResult:
    """Minimum spanning tree with (anchor, best-distance) labels.

    After a vertex v joins the tree, every outside vertex u refreshes its
    label via: if beta(u) > d(u, v) then beta(u) = d(u, v), anchor = v.
    """
    n = g.n
    if n == 0:
        raise ValueError("graph not connected")
    in_tree = {1}
    anchor: dict[int, int | None] = {}
    beta: dict[int, object] = {}
    for u in range(2, n + 1):
        beta[u] = g.w(u, 1) if 1 in g.adj[u] else INF
        anchor[u] = 1 if 1 in g.adj[u] else None
    edges = []
    total = 0
    trace = [(1, None, 0)]
    while len(in_tree) < n:
        outside = [u for u in range(1, n + 1) if u not in in_tree]
        pick = min(outside, key=lambda u: (beta[u], u))
        if beta[pick] is INF or beta[pick] == INF:
            raise ValueError("graph not connected")
        edges.append((min(pick, anchor[pick]), max(pick, anchor[pick])))
        total = total + beta[pick]
        trace.append((pick, anchor[pick], beta[pick]))
        in_tree.add(pick)
        for u in outside:
            if u == pick:
                continue
            w = g.w(u, pick)
            if w != INF and (beta[u] == INF or beta[u] > w):
                beta[u] = w
                anchor[u] = pick
    return MstResult(edges, total, trace)


def kruskal(g: WeightedGraph) -> MstResult:
    """Minimum spanning tree by edges in stable (weight, u, v) order with
    component labels for the cycle test."""
    if g.n == 0:
        raise ValueError("graph not connected")
    label = {v: v for v in range(1, g.n + 1)}
    ordered = sorted(g.edges, key=lambda e: (g.weight[e], e))
    edges = []
    total = 0
    for u, v in ordered:
        if label[u] == label[v]:
            continue
        keep, drop = min(label[u], label[v]), max(label[u], label[v])
        for x in label:
            if label[x] == drop:
                label[x] = keep
        edges.append((u, v))
        total = total + g.weight[(u, v)]
    if len(edges) != g.n - 1:
        raise ValueError("graph not connected")
    return MstResult(edges, total)


def max_spanning_tree(g: WeightedGraph) -> MstResult:
    """Maximum spanning tree via weight negation."""
    negated = WeightedGraph(g.n, {e: -w for e, w in g.weight.items()})
    res = kruskal(negated)
    total = sum(g.weight[e] for e in res.edges)
    return MstResult(res.edges, total)
