"""Graph representations, traversals, Euler cycles and strong components.

Vertices are 1..n.  Graphs are immutable after construction and validate
the usual sanity invariants (no self-loops, no parallel edges, handshake).

The shared text format is::

    p <n> <m>          # undirected header, then m lines
    e <u> <v> [w]
    pd <n> <m>         # directed header, then m lines
    a <u> <v> [w]

with 1-based vertices, '#' comments, and weights as exact decimal
integers or p/q rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class NotEulerianError(ValueError):
    """Graph has no Euler cycle; .reason is 'OddDegree' or 'Disconnected'."""

    def __init__(self, reason: str, vertex: int | None = None):
        self.reason = reason
        self.vertex = vertex
        detail = f"odd degree at {vertex}" if reason == "OddDegree" else "disconnected"
        super().__init__(f"not Eulerian: {detail}")


class Graph:
    """Undirected simple graph on vertices 1..n."""

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self.n = n
        seen = set()
        ordered = []
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loops not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            ordered.append(key)
        self.edges = tuple(ordered)
        adj = {v: [] for v in range(1, n + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}
        degrees = [len(self.adj[v]) for v in range(1, n + 1)]
        assert sum(degrees) == 2 * len(self.edges)
        assert sum(1 for d in degrees if d % 2) % 2 == 0

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int):
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def adjacency_matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u - 1][v - 1] = mat[v - 1][u - 1] = 1
        return mat

    def incidence_matrix(self) -> list[list[int]]:
        mat = [[0] * len(self.edges) for _ in range(self.n)]
        for j, (u, v) in enumerate(self.edges):
            mat[u - 1][j] = mat[v - 1][j] = 1
        return mat

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(u + 1, self.n + 1)
            if v not in self.adj[u]
        ]
        return Graph(self.n, edges)


class Digraph:
    """Directed graph on vertices 1..n without self-loops."""

    def __init__(self, n: int, arcs):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self.n = n
        seen = set()
        ordered = []
        for u, v in arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loops not allowed")
            if (u, v) in seen:
                continue
            seen.add((u, v))
            ordered.append((u, v))
        self.arcs = tuple(ordered)
        adj = {v: [] for v in range(1, n + 1)}
        for u, v in self.arcs:
            adj[u].append(v)
        self.adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def neighbors(self, v: int):
        return self.adj[v]

    def transpose(self) -> "Digraph":
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def adjacency_matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.arcs:
            mat[u - 1][v - 1] = 1
        return mat


@dataclass
class BfsForest:
    """Breadth-first forest: one (root, tree edges) entry per component,
    plus the global visitation order."""

    trees: list[tuple[int, list[tuple[int, int]]]]
    order: list[int]


def bfs_forest(g: Graph) -> BfsForest:
    visited = set()
    trees = []
    order = []
    for s in range(1, g.n + 1):
        if s in visited:
            continue
        visited.add(s)
        order.append(s)
        queue = [s]
        tree_edges = []
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in visited:
                    visited.add(w)
                    order.append(w)
                    queue.append(w)
                    tree_edges.append((v, w))
        trees.append((s, tree_edges))
    return BfsForest(trees, order)


def connected_components(g: Graph) -> list[list[int]]:
    forest = bfs_forest(g)
    comps = []
    for root, edges in forest.trees:
        block = {root}
        for u, v in edges:
            block.add(u)
            block.add(v)
        comps.append(sorted(block))
    return sorted(comps, key=lambda b: b[0])


def _positive_degree_connected(g: Graph) -> bool:
    active = [v for v in range(1, g.n + 1) if g.degree(v) > 0]
    if not active:
        return True
    comps = connected_components(g)
    hit = [c for c in comps if any(g.degree(v) > 0 for v in c)]
    return len(hit) == 1


def euler_cycle(g: Graph) -> list[int]:
    """Closed walk using every edge exactly once, by cycle splicing.

    Isolated vertices are ignored; a graph with no edges yields [].
    Raises NotEulerianError with the violated condition otherwise.
    """
    for v in range(1, g.n + 1):
        if g.degree(v) % 2:
            raise NotEulerianError("OddDegree", v)
    if not _positive_degree_connected(g):
        raise NotEulerianError("Disconnected")
    if not g.edges:
        return []

    unused = {v: list(g.neighbors(v)) for v in range(1, g.n + 1)}
    used = set()

    def walk_cycle(start: int) -> list[int]:
        # With all remaining degrees even, a greedy walk from `start` can
        # only get stuck back at `start`, closing a cycle.
        path = [start]
        v = start
        while True:
            while unused[v] and (min(v, unused[v][0]), max(v, unused[v][0])) in used:
                unused[v].pop(0)
            if not unused[v]:
                break
            w = unused[v].pop(0)
            used.add((min(v, w), max(v, w)))
            path.append(w)
            v = w
        assert path[0] == path[-1]
        return path

    start = min(v for v in range(1, g.n + 1) if g.degree(v) > 0)
    cycle = walk_cycle(start)
    while len(used) < len(g.edges):
        # Find a cycle vertex with an unused incident edge and splice in
        # the cycle through it.
        at = next(
            i
            for i, v in enumerate(cycle)
            if any((min(v, w), max(v, w)) not in used for w in g.neighbors(v))
        )
        side = walk_cycle(cycle[at])
        cycle = cycle[:at] + side + cycle[at + 1 :]
    return cycle


def fleury_euler_cycle(g: Graph) -> list[int]:
    """Euler cycle by Fleury's rule: never cross a bridge of the remaining
    positive-degree graph unless there is no alternative.  Used as a
    cross-check for the splicing construction."""
    for v in range(1, g.n + 1):
        if g.degree(v) % 2:
            raise NotEulerianError("OddDegree", v)
    if not _positive_degree_connected(g):
        raise NotEulerianError("Disconnected")
    if not g.edges:
        return []

    adj = {v: set(g.neighbors(v)) for v in range(1, g.n + 1)}

    def component_count(vertices) -> int:
        seen = set()
        comps = 0
        for s in vertices:
            if s in seen:
                continue
            comps += 1
            stack = [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return comps

    def is_bridge(u: int, v: int) -> bool:
        # Vertices already spent are ignored, but an endpoint stranded by
        # this very removal counts as a component of its own.
        active = {x for x in adj if adj[x]}
        before = component_count(active)
        adj[u].discard(v)
        adj[v].discard(u)
        after = component_count(active)
        adj[u].add(v)
        adj[v].add(u)
        return after > before

    v = min(w for w in adj if adj[w])
    cycle = [v]
    remaining = len(g.edges)
    while remaining:
        choices = sorted(adj[v])
        nxt = None
        for w in choices:
            if len(choices) == 1 or not is_bridge(v, w):
                nxt = w
                break
        if nxt is None:
            nxt = choices[0]
        adj[v].discard(nxt)
        adj[nxt].discard(v)
        cycle.append(nxt)
        v = nxt
        remaining -= 1
    return cycle


@dataclass
class DfsRecord:
    """Per-vertex discovery/finish stamps, parents, and the DFS forest."""

    discovery: dict[int, int]
    finish: dict[int, int]
    parent: dict[int, int | None]
    forest_edges: list[tuple[int, int]]
    roots: list[int]


def dfs(g, order=None) -> DfsRecord:
    """Depth-first search over a Graph or Digraph.

    `order` is the outer-loop vertex permutation (default ascending).
    Timestamps are 1..2n with the usual nesting property.
    """
    n = g.n
    if order is None:
        order = range(1, n + 1)
    order = list(order)
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("order must be a permutation of 1..n")
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in range(1, n + 1)}
    rec = DfsRecord({}, {}, {v: None for v in range(1, n + 1)}, [], [])
    time = 0

    def visit(u: int) -> None:
        nonlocal time
        color[u] = GRAY
        time += 1
        rec.discovery[u] = time
        for v in g.neighbors(u):
            if color[v] == WHITE:
                rec.parent[v] = u
                rec.forest_edges.append((u, v))
                visit(v)
        color[u] = BLACK
        time += 1
        rec.finish[u] = time

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 100))
    try:
        for u in order:
            if color[u] == WHITE:
                rec.roots.append(u)
                visit(u)
    finally:
        sys.setrecursionlimit(old_limit)
    return rec


def scc_kosaraju(g: Digraph) -> list[list[int]]:
    """Strongly connected components via two DFS passes.

    The second pass scans vertices by decreasing first-pass finish time on
    the transposed graph; components come out in condensation order
    (sources of the condensation first).
    """
    first = dfs(g)
    by_finish = sorted(range(1, g.n + 1), key=lambda v: -first.finish[v])
    second = dfs(g.transpose(), order=by_finish)
    comp_members: dict[int, list[int]] = {}
    root_of: dict[int, int] = {}
    for v in by_finish:
        u = v
        while second.parent[u] is not None:
            u = second.parent[u]
        root_of[v] = u
        comp_members.setdefault(u, []).append(v)
    ordered_roots = [r for r in second.roots]
    return [sorted(comp_members[r]) for r in ordered_roots]


# --- shared text format -------------------------------------------------


def _parse_weight(tok: str):
    if "/" in tok:
        return Fraction(tok)
    return int(tok)


def parse_graph_text(text: str):
    """Parse the shared text format; returns Graph, Digraph,
    WeightedGraph or WeightedDigraph depending on header and weights."""
    from .paths_mst import WeightedDigraph, WeightedGraph

    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph text")
    header = lines[0].split()
    if header[0] not in ("p", "pd") or len(header) != 3:
        raise ValueError("bad header, expected 'p <n> <m>' or 'pd <n> <m>'")
    directed = header[0] == "pd"
    n, m = int(header[1]), int(header[2])
    tag = "a" if directed else "e"
    edges = []
    weights = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != tag:
            raise ValueError(f"expected '{tag}' line, got: {ln}")
        if len(parts) not in (3, 4):
            raise ValueError(f"bad edge line: {ln}")
        u, v = int(parts[1]), int(parts[2])
        edges.append((u, v))
        weights.append(_parse_weight(parts[3]) if len(parts) == 4 else None)
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    has_weights = [w is not None for w in weights]
    if any(has_weights) and not all(has_weights):
        raise ValueError("either all or no edges may carry weights")
    if all(has_weights) and edges:
        pairs = {e: w for e, w in zip(edges, weights)}
        if directed:
            return WeightedDigraph(n, pairs)
        return WeightedGraph(n, {(min(u, v), max(u, v)): w for (u, v), w in pairs.items()})
    return Digraph(n, edges) if directed else Graph(n, edges)


def format_graph_text(g, weights=None) -> str:
    """Serialize a graph back into the shared text format."""
    directed = isinstance(g, Digraph)
    links = g.arcs if directed else g.edges
    out = [("pd" if directed else "p") + f" {g.n} {len(links)}"]
    tag = "a" if directed else "e"
    for u, v in links:
        if weights is not None:
            out.append(f"{tag} {u} {v} {weights[(u, v)]}")
        else:
            out.append(f"{tag} {u} {v}")
    return "\n".join(out) + "\n"
