"""Dynamic-programming solvers: resource allocation, Pareto-set knapsack,
longest common subsequence, matrix-chain ordering, parenthesization
counting, and optimal polygon triangulation.

Instance files for knapsack and allocation are plain JSON (see
load_knapsack_json / load_allocation_json).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

DIAG, UP, LEFT = "Diag", "Up", "Left"


@dataclass(frozen=True)
class AllocationInstance:
    """N tasks with per-task cost and profit tables over x = 0..b."""

    costs: tuple[tuple[int, ...], ...]
    profits: tuple[tuple[int, ...], ...]
    budget: int

    def __post_init__(self):
        if len(self.costs) != len(self.profits) or not self.costs:
            raise ValueError("need matching, nonempty cost/profit tables")
        width = len(self.costs[0])
        for table in (*self.costs, *self.profits):
            if len(table) != width:
                raise ValueError("all tables must cover the same 0..b range")
            if table[0] != 0:
                raise ValueError("tables must start at 0")
            if any(a > b for a, b in zip(table, table[1:])):
                raise ValueError("tables must be monotone non-decreasing")
            if any(x < 0 for x in table):
                raise ValueError("tables must be non-negative")
        if self.budget < 0:
            raise ValueError("budget must be >= 0")

    @property
    def n_tasks(self) -> int:
        return len(self.costs)

    @property
    def b(self) -> int:
        return len(self.costs[0]) - 1

    @classmethod
    def from_lists(cls, costs, profits, budget) -> "AllocationInstance":
        return cls(
            tuple(tuple(t) for t in costs),
            tuple(tuple(t) for t in profits),
            budget,
        )

    @classmethod
    def simple_split(cls, profits, total) -> "AllocationInstance":
        """The (N, L) special case: unit costs c_i(x) = x, budget L."""
        width = total + 1
        tables = []
        for table in profits:
            if len(table) < width:
                table = list(table) + [table[-1]] * (width - len(table))
            tables.append(tuple(table[:width]))
        unit = tuple(range(width))
        return cls(tuple(unit for _ in tables), tuple(tables), total)


def allocate(inst: AllocationInstance) -> tuple[int, list[int]]:
    """Best total profit and one optimal plan (x_1..x_N)."""
    n, k, b = inst.n_tasks, inst.budget, inst.b
    best = [[0] * (k + 1) for _ in range(n + 1)]
    choice = [[0] * (k + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost, profit = inst.costs[i - 1], inst.profits[i - 1]
        for j in range(k + 1):
            top, arg = -1, 0
            for x in range(b + 1):
                if cost[x] > j:
                    break  # costs are monotone: larger x cannot fit
                cand = profit[x] + best[i - 1][j - cost[x]]
                if cand > top:
                    top, arg = cand, x
            best[i][j] = top
            choice[i][j] = arg
    plan = []
    j = k
    for i in range(n, 0, -1):
        x = choice[i][j]
        plan.append(x)
        j -= inst.costs[i - 1][x]
    plan.reverse()
    return best[n][k], plan


@dataclass(frozen=True)
class ParetoEntry:
    items: frozenset[int]
    value: int
    volume: int


def _prune(entries: list[ParetoEntry]) -> list[ParetoEntry]:
    ordered = sorted(
        entries, key=lambda e: (e.volume, -e.value, sorted(e.items))
    )
    kept: list[ParetoEntry] = []
    best_value = -1
    for e in ordered:
        if e.value > best_value:
            kept.append(e)
            best_value = e.value
    return kept


def knapsack_pareto(values, volumes, capacity) -> tuple[set[int], int]:
    """Exact 0/1 knapsack via Pareto-set sweep.

    Items are numbered from 1.  Among equal-value states the smaller
    volume survives; among fully equal states the lexicographically
    smallest item set does.  Returns (chosen item set, total value).
    """
    values, volumes = list(values), list(volumes)
    if len(values) != len(volumes):
        raise ValueError("values and volumes must align")
    if any(c < 0 for c in values) or any(v < 0 for v in volumes):
        raise ValueError("inputs must be non-negative")
    states = [ParetoEntry(frozenset(), 0, 0)]
    for k in range(1, len(values) + 1):
        extended = [
            ParetoEntry(e.items | {k}, e.value + values[k - 1], e.volume + volumes[k - 1])
            for e in states
            if e.volume + volumes[k - 1] <= capacity
        ]
        states = _prune(states + extended)
        assert not _has_dominated_pair(states)
    best = max(states, key=lambda e: (e.value, -e.volume))
    return set(best.items), best.value


def _has_dominated_pair(states) -> bool:
    for a in states:
        for b in states:
            if a is not b and a.value >= b.value and a.volume <= b.volume:
                return True
    return False


def greedy_knapsack_by_density(values, volumes, capacity) -> tuple[set[int], int]:
    """Value-density greedy; feasible but with no optimality contract."""
    values, volumes = list(values), list(volumes)

    def density_key(i: int):
        c, v = values[i - 1], volumes[i - 1]
        if v == 0:  # free items first, best value leading
            return (0, -c, i)
        return (1, Fraction(-c, v), i)

    order = sorted(range(1, len(values) + 1), key=density_key)
    chosen: set[int] = set()
    room = capacity
    total = 0
    for i in order:
        if volumes[i - 1] <= room:
            chosen.add(i)
            room -= volumes[i - 1]
            total += values[i - 1]
    return chosen, total


@dataclass
class LcsTables:
    lengths: list[list[int]]  # (n+1) x (m+1)
    arrows: list[list[str | None]]  # (n+1) x (m+1); [i][j] for i, j >= 1


def lcs(x, y) -> tuple[int, list, LcsTables]:
    """Longest common subsequence with arrow tables.

    Ties resolve Diag > Up > Left, matching the classical pseudocode, so
    the tables are deterministic.
    """
    x, y = list(x), list(y)
    n, m = len(x), len(y)
    c = [[0] * (m + 1) for _ in range(n + 1)]
    b: list[list[str | None]] = [[None] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if x[i - 1] == y[j - 1]:
                c[i][j] = c[i - 1][j - 1] + 1
                b[i][j] = DIAG
            elif c[i - 1][j] >= c[i][j - 1]:
                c[i][j] = c[i - 1][j]
                b[i][j] = UP
            else:
                c[i][j] = c[i][j - 1]
                b[i][j] = LEFT
    out = []
    i, j = n, m
    while i > 0 and j > 0:
        if b[i][j] == DIAG:
            out.append(x[i - 1])
            i, j = i - 1, j - 1
        elif b[i][j] == UP:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return c[n][m], out, LcsTables(c, b)


@dataclass
class ChainTables:
    costs: list[list[object]]  # m[i][j], 1-based upper triangle
    splits: list[list[int]]  # s[i][j]


def matrix_chain(dims) -> tuple[int, str, ChainTables]:
    """Cheapest parenthesization for multiplying A_1..A_n with dimension
    vector p_0..p_n; returns (cost, expression, tables)."""
    p = list(dims)
    n = len(p) - 1
    if n < 1 or any(d < 1 for d in p):
        raise ValueError("need at least one matrix and positive dimensions")
    m = [[0] * (n + 1) for _ in range(n + 1)]
    s = [[0] * (n + 1) for _ in range(n + 1)]
    for length in range(2, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            m[i][j] = None
            for k in range(i, j):
                q = m[i][k] + m[k + 1][j] + p[i - 1] * p[k] * p[j]
                if m[i][j] is None or q < m[i][j]:
                    m[i][j] = q
                    s[i][j] = k
    def render(i, j):
        if i == j:
            return f"A{i}"
        k = s[i][j]
        return "(" + render(i, k) + render(k + 1, j) + ")"

    return m[1][n], render(1, n), ChainTables(m, s)


def count_parenthesizations(n: int) -> int:
    """Number of full parenthesizations of an n-term product (exact)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    p = [0] * (n + 1)
    p[1] = 1
    for t in range(2, n + 1):
        p[t] = sum(p[k] * p[t - k] for k in range(1, t))
    return p[n]


def polygon_triangulation(weight, vertex_count: int) -> tuple[object, list[tuple[int, int]]]:
    """Minimum-weight triangulation of the polygon v_0..v_{n} where
    vertex_count = n + 1 >= 3.

    `weight(i, k, j)` scores the triangle on vertices v_i, v_k, v_j.
    Returns (total weight, list of diagonals), with exactly
    vertex_count - 3 diagonals.
    """
    if vertex_count < 3:
        raise ValueError("polygon needs at least 3 vertices")
    n = vertex_count - 1
    m = [[0] * (n + 1) for _ in range(n + 1)]
    s = [[0] * (n + 1) for _ in range(n + 1)]
    for length in range(2, n + 1):
        for i in range(1, n - length + 2):
            j = i + length - 1
            m[i][j] = None
            for k in range(i, j):
                q = m[i][k] + m[k + 1][j] + weight(i - 1, k, j)
                if m[i][j] is None or q < m[i][j]:
                    m[i][j] = q
                    s[i][j] = k

    diagonals: list[tuple[int, int]] = []

    def is_side(a: int, b: int) -> bool:
        a, b = min(a, b), max(a, b)
        return b - a == 1 or (a == 0 and b == n)

    def collect(i, j):
        if i >= j:
            return
        k = s[i][j]
        for a, b in ((i - 1, k), (k, j)):
            if a != b and not is_side(a, b) and tuple(sorted((a, b))) not in diagonals:
                diagonals.append(tuple(sorted((a, b))))
        collect(i, k)
        collect(k + 1, j)

    collect(1, n)
    return m[1][n], sorted(diagonals)


def triangle_area_weight(coords):
    """Exact triangle-area weight callback over integer coordinates."""

    def weight(i, k, j):
        (x1, y1), (x2, y2), (x3, y3) = coords[i], coords[k], coords[j]
        doubled = (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)
        return abs(Fraction(doubled, 2))

    return weight


def dimension_product_weight(dims):
    """Matrix-chain weight w(v_i, v_k, v_j) = p_i * p_k * p_j."""

    def weight(i, k, j):
        return dims[i] * dims[k] * dims[j]

    return weight


# --- JSON instance files -------------------------------------------------


def load_knapsack_json(text: str) -> tuple[list[int], list[int], int]:
    data = json.loads(text)
    return list(data["values"]), list(data["volumes"]), int(data["capacity"])


def dump_knapsack_json(values, volumes, capacity) -> str:
    return json.dumps(
        {"values": list(values), "volumes": list(volumes), "capacity": capacity},
        sort_keys=True,
    )


def load_allocation_json(text: str) -> AllocationInstance:
    data = json.loads(text)
    return AllocationInstance.from_lists(
        data["costs"], data["profits"], int(data["budget"])
    )


def dump_allocation_json(inst: AllocationInstance) -> str:
    return json.dumps(
        {
            "costs": [list(t) for t in inst.costs],
            "profits": [list(t) for t in inst.profits],
            "budget": inst.budget,
        },
        sort_keys=True,
    )
