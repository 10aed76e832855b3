"""Approximation algorithms with checked ratio guarantees, the instance
generators that expose their failure modes, and desk-scale brute-force
optima for ratio harnesses.

Guarantees implemented here:

* vc_matching_2approx       cover <= 2 * optimum
* set_cover_greedy          cover <= H(max set size) * optimum
* tsp_double_tree           tour <= 2 * optimum (metric instances)
* tsp_christofides          tour <= 3/2 * optimum (metric instances)
* max_cut_local_search      optimum <= 2 * cut
* knapsack_fptas            value >= optimum / (1 + eps)
* bin_pack_first_fit        bins <= ceil(2 * total size) and <= 2 * optimum

vc_degree_greedy has no guarantee; vc_greedy_counterexample builds the
family on which its ratio grows like H(n) - 1.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .graph_core import Graph
from .intmath import ceil_log2, harmonic
from .paths_mst import WeightedGraph, prim


@dataclass(frozen=True)
class ApproxReport:
    """Heuristic value against the (optional) brute-force optimum."""

    algorithm: str
    n: int
    heuristic: object
    optimal: object | None
    ratio: object | None  # >= 1 when optimal present
    bound: object
    instance_digest: str
    seed: int | None = None

    def to_json(self) -> str:
        def enc(x):
            if isinstance(x, Fraction):
                return f"{x.numerator}/{x.denominator}"
            return x

        return json.dumps(
            {
                "algorithm": self.algorithm,
                "n": self.n,
                "heuristic": enc(self.heuristic),
                "optimal": enc(self.optimal),
                "ratio": enc(self.ratio),
                "bound": enc(self.bound),
                "digest": self.instance_digest,
                "seed": self.seed,
            },
            sort_keys=True,
        )


def digest_of(payload) -> str:
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, default=str).encode()
    ).hexdigest()[:16]


def make_report(algorithm, n, heuristic, optimal, bound, payload, seed=None, maximize=False):
    ratio = None
    if optimal is not None:
        if maximize:
            ratio = Fraction(optimal) / Fraction(heuristic) if heuristic else None
        else:
            ratio = Fraction(heuristic) / Fraction(optimal) if optimal else None
    return ApproxReport(
        algorithm, n, heuristic, optimal, ratio, bound, digest_of(payload), seed
    )


# --- vertex cover ---------------------------------------------------------


def vc_matching_2approx(g: Graph) -> set[int]:
    """Take both endpoints of a maximal matching; at most 2x optimal."""
    cover: set[int] = set()
    for u, v in g.edges:
        if u not in cover and v not in cover:
            cover.add(u)
            cover.add(v)
    return cover


def vc_degree_greedy(g: Graph) -> set[int]:
    """Repeatedly take a maximum-degree vertex.  No ratio guarantee: on
    vc_greedy_counterexample graphs the error grows like H(n) - 1."""
    alive = {v: set(g.neighbors(v)) for v in range(1, g.n + 1)}
    cover: set[int] = set()
    while any(alive.values()):
        v = max(alive, key=lambda x: (len(alive[x]), -x))
        cover.add(v)
        for w in alive[v]:
            alive[w].discard(v)
        alive[v] = set()
    return cover


def vc_greedy_counterexample(n: int) -> Graph:
    """Bipartite family with n core vertices and, for each k = 1..n,
    floor(n/k) gadgets adjacent to k distinct cores (disjointly per k).

    Gadgets get the lowest indices (largest level first) so degree ties
    favour them; the pendant k = 1 level pins the optimum at exactly n,
    while degree greedy picks every gadget: sum floor(n/k) vertices.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    gadget_count = sum(n // k for k in range(1, n + 1))
    core_base = gadget_count  # cores are gadget_count+1 .. gadget_count+n
    edges = []
    gid = 0
    for k in range(n, 0, -1):
        for block in range(n // k):
            gid += 1
            for c in range(block * k + 1, block * k + k + 1):
                edges.append((gid, core_base + c))
    return Graph(gadget_count + n, edges)


# --- set cover --------------------------------------------------------------


def set_cover_greedy(universe, family) -> list[int]:
    """Pick the set covering the most uncovered elements (ties to the
    lowest index); within H(max |A_i|) of optimal."""
    family = [frozenset(s) for s in family]
    uncovered = set(universe)
    reachable = set().union(*family) if family else set()
    if uncovered - reachable:
        raise ValueError("family does not cover the universe")
    chosen: list[int] = []
    while uncovered:
        best = max(
            range(1, len(family) + 1),
            key=lambda i: (len(family[i - 1] & uncovered), -i),
        )
        gain = family[best - 1] & uncovered
        if not gain:
            raise ValueError("family does not cover the universe")
        chosen.append(best)
        uncovered -= gain
    return chosen


# --- metric TSP -------------------------------------------------------------


class MetricTspInstance:
    """Symmetric non-negative matrix with zero diagonal satisfying the
    triangle inequality on every triple (checked at construction)."""

    def __init__(self, matrix):
        m = [list(row) for row in matrix]
        n = len(m)
        for i in range(n):
            if len(m[i]) != n:
                raise ValueError("matrix must be square")
            if m[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix must be symmetric")
                if m[i][j] < 0:
                    raise ValueError("distances must be non-negative")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if m[i][j] > m[i][k] + m[k][j]:
                        raise ValueError("triangle inequality violated")
        self.matrix = tuple(tuple(row) for row in m)
        self.n = n

    def d(self, u: int, v: int):
        return self.matrix[u - 1][v - 1]

    def tour_length(self, tour) -> object:
        n = self.n
        return sum(self.d(tour[i], tour[(i + 1) % n]) for i in range(n))


def tour_length(matrix, tour) -> object:
    n = len(matrix)
    return sum(matrix[tour[i] - 1][tour[(i + 1) % n] - 1] for i in range(n))


def _complete_weighted_graph(matrix) -> WeightedGraph:
    n = len(matrix)
    return WeightedGraph(
        n,
        {
            (u, v): matrix[u - 1][v - 1]
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
        },
    )


def _euler_walk_multigraph(n: int, multi_edges) -> list[int]:
    """Euler walk over a connected even-degree multigraph (edge list with
    repetitions allowed)."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in multi_edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort(reverse=True)
    start = next(v for v in range(1, n + 1) if adj[v])
    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        if adj[v]:
            w = adj[v].pop()
            adj[w].remove(v)
            stack.append(w)
        else:
            walk.append(stack.pop())
    return walk[::-1]


def _shortcut(walk, n) -> list[int]:
    seen = set()
    tour = []
    for v in walk:
        if v not in seen:
            seen.add(v)
            tour.append(v)
    assert len(tour) == n
    return tour


def tsp_double_tree(inst) -> list[int]:
    """Double the minimum spanning tree, walk it, shortcut repeats.
    Within 2x optimal on metric instances."""
    matrix = inst.matrix if isinstance(inst, MetricTspInstance) else inst
    n = len(matrix)
    if n < 3:
        raise ValueError("needs n >= 3")
    tree = prim(_complete_weighted_graph(matrix))
    doubled = list(tree.edges) + list(tree.edges)
    walk = _euler_walk_multigraph(n, doubled)
    return _shortcut(walk, n)


def min_perfect_matching_exact(vertices, weight) -> list[tuple[int, int]]:
    """Minimum-weight perfect matching by subset DP (even count <= 20)."""
    vs = list(vertices)
    if len(vs) % 2 or len(vs) > 20:
        raise ValueError("needs an even vertex count of at most 20")
    if not vs:
        return []
    full = (1 << len(vs)) - 1
    memo: dict[int, object] = {0: 0}
    choice: dict[int, tuple[int, int]] = {}

    def solve(mask: int):
        if mask in memo:
            return memo[mask]
        first = (mask & -mask).bit_length() - 1
        best = None
        best_pair = None
        rest = mask & ~(1 << first)
        sub = rest
        while sub:
            second = (sub & -sub).bit_length() - 1
            sub &= sub - 1
            cand = weight(vs[first], vs[second]) + solve(
                rest & ~(1 << second)
            )
            if best is None or cand < best:
                best = cand
                best_pair = (first, second)
        memo[mask] = best
        choice[mask] = best_pair
        return best

    solve(full)
    pairs = []
    mask = full
    while mask:
        a, b = choice[mask]
        pairs.append((vs[a], vs[b]))
        mask &= ~(1 << a)
        mask &= ~(1 << b)
    return pairs


def tsp_christofides(inst) -> list[int]:
    """Tree plus minimum matching on its odd-degree vertices, Euler walk,
    shortcut: within 3/2 of optimal on metric instances."""
    matrix = inst.matrix if isinstance(inst, MetricTspInstance) else inst
    n = len(matrix)
    if n < 3:
        raise ValueError("needs n >= 3")
    tree = prim(_complete_weighted_graph(matrix))
    degree = {v: 0 for v in range(1, n + 1)}
    for u, v in tree.edges:
        degree[u] += 1
        degree[v] += 1
    odd = [v for v in range(1, n + 1) if degree[v] % 2]
    if len(odd) > 20:
        raise ValueError(
            "odd-degree set larger than 20; use tsp_double_tree instead"
        )
    matching = min_perfect_matching_exact(
        odd, lambda a, b: matrix[a - 1][b - 1]
    )
    walk = _euler_walk_multigraph(n, list(tree.edges) + matching)
    return _shortcut(walk, n)


def tsp_gap_instance(g: Graph, eps) -> list[list[object]]:
    """Inapproximability feed: unit cost on edges, (1+eps)|V|+1 elsewhere.
    The optimum is |V| exactly when g is Hamiltonian and exceeds
    (1+eps)|V| otherwise.  Deliberately non-metric in general."""
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("needs eps >= 0")
    n = g.n
    far = (1 + eps) * n + 1
    far = int(far) if far.denominator == 1 else far
    return [
        [
            0 if i == j else (1 if g.has_edge(i, j) else far)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]


def random_metric_instance(n: int, seed: int, span: int = 50) -> MetricTspInstance:
    """Random integer points under the L1 metric: the triangle inequality
    holds automatically and all arithmetic stays exact."""
    rng = random.Random(seed)
    pts = [(rng.randint(0, span), rng.randint(0, span)) for _ in range(n)]
    matrix = [
        [abs(a[0] - b[0]) + abs(a[1] - b[1]) for b in pts] for a in pts
    ]
    return MetricTspInstance(matrix)


# --- max cut ----------------------------------------------------------------


def max_cut_local_search(g: Graph) -> tuple[set[int], int]:
    """Single-vertex moves until locally optimal (first improving move,
    ascending vertex index).  The optimum is at most twice the result."""
    side = {v: False for v in range(1, g.n + 1)}

    def cut_size() -> int:
        return sum(1 for u, v in g.edges if side[u] != side[v])

    current = cut_size()
    improved = True
    while improved:
        improved = False
        for v in range(1, g.n + 1):
            gain = 0
            for w in g.neighbors(v):
                gain += -1 if side[v] != side[w] else 1
            if gain > 0:
                side[v] = not side[v]
                current += gain
                improved = True
                break
    chosen = {v for v in side if side[v]}
    assert current == cut_size()
    return chosen, current


# --- knapsack FPTAS ----------------------------------------------------------


def knapsack_fptas(values, volumes, capacity, eps) -> tuple[set[int], int]:
    """(1+eps)-approximate knapsack by zeroing the low b bits of the
    values and solving the truncated instance exactly.

    b is the largest integer with 2**b <= c0 * eps / (n * (1 + eps)); the
    returned set's true value is at least OPT / (1 + eps).
    """
    from .dp import knapsack_pareto

    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("needs eps > 0")
    values = list(values)
    volumes = list(volumes)
    # The bound chain needs c0 <= OPT, so c0 ranges over items that fit.
    fitting = [c for c, v in zip(values, volumes) if v <= capacity]
    b = fptas_truncation_bits(fitting, eps) if fitting else 0
    scaled = [c >> b for c in values]
    chosen, _ = knapsack_pareto(scaled, volumes, capacity)
    return chosen, sum(values[i - 1] for i in chosen)


def fptas_truncation_bits(values, eps) -> int:
    """Largest b >= 0 with 2**b <= c0 * eps / (n * (1 + eps)), floored at
    zero; computed with exact arithmetic."""
    eps = Fraction(eps)
    values = list(values)
    n = len(values)
    c0 = max(values, default=0)
    b = 0
    if n and c0:
        while Fraction(2 ** (b + 1)) * n * (1 + eps) <= c0 * eps:
            b += 1
    return b


# --- bin packing --------------------------------------------------------------


def bin_pack_first_fit(sizes) -> list[int]:
    """First-fit packing into unit bins; returns the bin index (1-based)
    per item.  Uses at most ceil(2 * sum sizes) bins and at most twice
    the optimal count."""
    sizes = [Fraction(s) for s in sizes]
    if any(s < 0 or s > 1 for s in sizes):
        raise ValueError("sizes must lie in [0, 1]")
    rooms: list[Fraction] = []  # remaining capacity per open bin
    assignment = []
    for s in sizes:
        placed = None
        for idx, room in enumerate(rooms):
            if s <= room:
                placed = idx
                break
        if placed is None:
            rooms.append(Fraction(1))
            placed = len(rooms) - 1
        rooms[placed] -= s
        assignment.append(placed + 1)
    return assignment


# --- desk-scale optima for ratio checks ---------------------------------------


def vertex_cover_optimum(g: Graph) -> int:
    for k in range(0, g.n + 1):
        for combo in itertools.combinations(range(1, g.n + 1), k):
            vs = set(combo)
            if all(u in vs or v in vs for u, v in g.edges):
                return k
    return g.n


def set_cover_optimum(universe, family) -> int:
    universe = set(universe)
    m = len(family)
    for k in range(0, m + 1):
        for combo in itertools.combinations(range(m), k):
            covered = set().union(*(family[i] for i in combo)) if combo else set()
            if covered >= universe:
                return k
    raise ValueError("family does not cover the universe")


def tsp_optimum(matrix) -> object:
    n = len(matrix)
    best = None
    for perm in itertools.permutations(range(2, n + 1)):
        tour = [1, *perm]
        length = tour_length(matrix, tour)
        if best is None or length < best:
            best = length
    return best


def max_cut_optimum(g: Graph) -> int:
    best = 0
    for mask in range(1 << (g.n - 1)) if g.n else [0]:
        side = {v: bool(mask >> (v - 1) & 1) for v in range(1, g.n + 1)}
        best = max(best, sum(1 for u, v in g.edges if side[u] != side[v]))
    return best


def knapsack_optimum(values, volumes, capacity) -> int:
    n = len(values)
    best = 0
    for mask in range(1 << n):
        vol = val = 0
        for i in range(n):
            if mask >> i & 1:
                vol += volumes[i]
                val += values[i]
        if vol <= capacity:
            best = max(best, val)
    return best


def bin_pack_optimum(sizes) -> int:
    sizes = [Fraction(s) for s in sizes]
    if not sizes:
        return 0
    bins: list[Fraction] = []

    best = [len(sizes)]

    def place(i: int):
        if len(bins) >= best[0]:
            return
        if i == len(sizes):
            best[0] = min(best[0], len(bins))
            return
        s = sizes[i]
        tried = set()
        for idx in range(len(bins)):
            room = bins[idx]
            if s <= room and room not in tried:
                tried.add(room)
                bins[idx] = room - s
                place(i + 1)
                bins[idx] = room
        bins.append(Fraction(1) - s)
        place(i + 1)
        bins.pop()

    place(0)
    return best[0]
