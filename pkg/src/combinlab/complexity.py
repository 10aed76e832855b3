"""NP problem instances, witness verifiers, desk-scale brute-force
oracles, a reduction compiler with bidirectional witness maps, and the
polynomial 2-SAT solver.

Literals are DIMACS-style signed integers (+v / -v); a clause is a tuple
of literals; assignments are lists of booleans indexed from variable 1.
CNF input/output uses the DIMACS cnf format.  Set systems and ILP ride in
JSON, graphs in the shared text format.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from typing import Callable

from .graph_core import Digraph, Graph, scc_kosaraju


class WitnessFormatError(ValueError):
    """Witness shape does not match the problem (distinct from False)."""


class InstanceTooLargeError(ValueError):
    """Instance exceeds the desk-scale brute-force caps."""


# --- CNF ------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def is_three_cnf(self) -> bool:
        return all(len(c) == 3 for c in self.clauses)

    def evaluate(self, assignment: list[bool]) -> bool:
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in clause)
            for clause in self.clauses
        )


def cnf(num_vars: int, clauses) -> CnfFormula:
    return CnfFormula(num_vars, tuple(tuple(c) for c in clauses))


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    clauses = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("c", "%")):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if current:
        raise ValueError("clause not 0-terminated")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


# --- problem instances ----------------------------------------------------


@dataclass(frozen=True)
class Sat:
    formula: CnfFormula


@dataclass(frozen=True)
class ThreeSat:
    formula: CnfFormula

    def __post_init__(self):
        if not self.formula.is_three_cnf:
            raise ValueError("not a 3-CNF formula")


@dataclass(frozen=True)
class Clique:
    graph: Graph
    k: int


@dataclass(frozen=True)
class IndependentSet:
    graph: Graph
    k: int


@dataclass(frozen=True)
class VertexCover:
    graph: Graph
    k: int


@dataclass(frozen=True)
class Coloring:
    graph: Graph
    k: int


@dataclass(frozen=True)
class ExactCover:
    universe: tuple
    family: tuple[frozenset, ...]

    def __post_init__(self):
        cover = set().union(*self.family) if self.family else set()
        if set(self.universe) != cover:
            raise ValueError("family must cover the universe exactly")


@dataclass(frozen=True)
class Representatives:
    universe: tuple
    family: tuple[frozenset, ...]


@dataclass(frozen=True)
class SetCover:
    universe: tuple
    family: tuple[frozenset, ...]
    k: int

    def __post_init__(self):
        if set(self.universe) - (set().union(*self.family) if self.family else set()):
            raise ValueError("family does not cover the universe")


@dataclass(frozen=True)
class Knapsack01:
    numbers: tuple[int, ...]
    target: int


@dataclass(frozen=True)
class KnapsackDecision:
    values: tuple[int, ...]
    volumes: tuple[int, ...]
    capacity: int
    goal: int


@dataclass(frozen=True)
class Partition:
    numbers: tuple[int, ...]


@dataclass(frozen=True)
class HamCircuit:
    digraph: Digraph


@dataclass(frozen=True)
class HamCycle:
    graph: Graph


@dataclass(frozen=True)
class Tsp:
    matrix: tuple[tuple[object, ...], ...]
    limit: object

    def __post_init__(self):
        n = len(self.matrix)
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise ValueError("matrix must be square")
            if row[i] != 0:
                raise ValueError("diagonal must be zero")


@dataclass(frozen=True)
class Ilp:
    """Rows a_i x (rel_i) b_i over non-negative integer vectors; the
    brute-force oracle only searches the supplied box bounds."""

    rows: tuple[tuple[int, ...], ...]
    relations: tuple[str, ...]  # '<=' / '==' / '>='
    rhs: tuple[int, ...]
    bounds: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not (len(self.rows) == len(self.relations) == len(self.rhs)):
            raise ValueError("rows, relations and rhs must align")
        width = len(self.bounds)
        for row in self.rows:
            if len(row) != width:
                raise ValueError("row width must match bound count")
        for rel in self.relations:
            if rel not in ("<=", "==", ">="):
                raise ValueError(f"bad relation {rel}")


# --- witness verification ---------------------------------------------------


def _as_assignment(w, num_vars: int) -> list[bool]:
    if not isinstance(w, (list, tuple)) or len(w) != num_vars:
        raise WitnessFormatError("assignment must list one bool per variable")
    if not all(isinstance(b, (bool, int)) and b in (0, 1, True, False) for b in w):
        raise WitnessFormatError("assignment entries must be boolean")
    return [bool(b) for b in w]


def _as_vertex_set(w, n: int) -> set[int]:
    if not isinstance(w, (set, frozenset, list, tuple)):
        raise WitnessFormatError("expected a vertex collection")
    vs = set(w)
    if not all(isinstance(v, int) and 1 <= v <= n for v in vs):
        raise WitnessFormatError("vertex out of range")
    return vs


def verify_witness(problem, w) -> bool:
    """Polynomial witness check per problem; malformed witnesses raise
    WitnessFormatError rather than answering False."""
    if isinstance(problem, (Sat, ThreeSat)):
        return problem.formula.evaluate(_as_assignment(w, problem.formula.num_vars))
    if isinstance(problem, Clique):
        vs = _as_vertex_set(w, problem.graph.n)
        if len(vs) < problem.k:
            return False
        return all(
            problem.graph.has_edge(u, v) for u, v in itertools.combinations(vs, 2)
        )
    if isinstance(problem, IndependentSet):
        vs = _as_vertex_set(w, problem.graph.n)
        if len(vs) < problem.k:
            return False
        return not any(
            problem.graph.has_edge(u, v) for u, v in itertools.combinations(vs, 2)
        )
    if isinstance(problem, VertexCover):
        vs = _as_vertex_set(w, problem.graph.n)
        if len(vs) > problem.k:
            return False
        return all(u in vs or v in vs for u, v in problem.graph.edges)
    if isinstance(problem, Coloring):
        g, k = problem.graph, problem.k
        if not isinstance(w, dict) or set(w) != set(range(1, g.n + 1)):
            raise WitnessFormatError("coloring must map every vertex")
        if not all(isinstance(c, int) and 1 <= c <= k for c in w.values()):
            return False
        return all(w[u] != w[v] for u, v in g.edges)
    if isinstance(problem, ExactCover):
        idxs = _family_indices(w, len(problem.family))
        covered: list = []
        for i in idxs:
            covered.extend(problem.family[i - 1])
        return len(covered) == len(set(covered)) and set(covered) == set(
            problem.universe
        )
    if isinstance(problem, Representatives):
        if not isinstance(w, (set, frozenset, list, tuple)):
            raise WitnessFormatError("expected an element collection")
        ws = set(w)
        if ws - set(problem.universe):
            raise WitnessFormatError("representative outside the universe")
        return all(len(ws & s) == 1 for s in problem.family)
    if isinstance(problem, SetCover):
        idxs = _family_indices(w, len(problem.family))
        if len(idxs) > problem.k:
            return False
        covered = set().union(*(problem.family[i - 1] for i in idxs)) if idxs else set()
        return covered == set(problem.universe)
    if isinstance(problem, Knapsack01):
        x = _as_assignment(w, len(problem.numbers))
        return sum(a for a, xi in zip(problem.numbers, x) if xi) == problem.target
    if isinstance(problem, KnapsackDecision):
        x = _as_assignment(w, len(problem.values))
        vol = sum(v for v, xi in zip(problem.volumes, x) if xi)
        val = sum(c for c, xi in zip(problem.values, x) if xi)
        return vol <= problem.capacity and val >= problem.goal
    if isinstance(problem, Partition):
        if not isinstance(w, (set, frozenset, list, tuple)):
            raise WitnessFormatError("expected an index collection")
        idx = set(w)
        n = len(problem.numbers)
        if not all(isinstance(i, int) and 1 <= i <= n for i in idx):
            raise WitnessFormatError("index out of range")
        inside = sum(problem.numbers[i - 1] for i in idx)
        return 2 * inside == sum(problem.numbers)
    if isinstance(problem, HamCircuit):
        return _check_ham_sequence(w, problem.digraph, directed=True)
    if isinstance(problem, HamCycle):
        return _check_ham_sequence(w, problem.graph, directed=False)
    if isinstance(problem, Tsp):
        n = len(problem.matrix)
        if not isinstance(w, (list, tuple)) or sorted(w) != list(range(1, n + 1)):
            raise WitnessFormatError("tour must be a permutation of 1..n")
        length = sum(
            problem.matrix[w[i] - 1][w[(i + 1) % n] - 1] for i in range(n)
        )
        return length <= problem.limit
    if isinstance(problem, Ilp):
        if not isinstance(w, (list, tuple)) or len(w) != len(problem.bounds):
            raise WitnessFormatError("solution width mismatch")
        if not all(isinstance(x, int) and x >= 0 for x in w):
            raise WitnessFormatError("solution must be non-negative integers")
        for row, rel, b in zip(problem.rows, problem.relations, problem.rhs):
            lhs = sum(a * x for a, x in zip(row, w))
            if rel == "<=" and not lhs <= b:
                return False
            if rel == "==" and not lhs == b:
                return False
            if rel == ">=" and not lhs >= b:
                return False
        return True
    raise TypeError(f"unknown problem type {type(problem)!r}")


def _family_indices(w, m: int) -> set[int]:
    if not isinstance(w, (set, frozenset, list, tuple)):
        raise WitnessFormatError("expected a collection of family indices")
    idxs = set(w)
    if not all(isinstance(i, int) and 1 <= i <= m for i in idxs):
        raise WitnessFormatError("family index out of range")
    return idxs


def _check_ham_sequence(w, g, directed: bool) -> bool:
    n = g.n
    if not isinstance(w, (list, tuple)) or sorted(w) != list(range(1, n + 1)):
        raise WitnessFormatError("expected a permutation of 1..n")
    seq = list(w)
    for u, v in zip(seq, seq[1:] + seq[:1]):
        ok = v in g.adj[u] if directed else g.has_edge(u, v)
        if not ok:
            return False
    return True


# --- brute-force oracle ------------------------------------------------------


# Subset-enumeration problems keep the tight 12-vertex / 20-element caps;
# backtracking deciders (coloring, hamiltonicity, tsp, exact cover) afford
# slightly larger instances, which the reduction targets need.
_DEFAULT_CAPS = {
    "bool_vars": 20,
    "vertices": 12,
    "coloring_vertices": 24,
    "ham_vertices": 16,
    "tsp_cities": 16,
    "elements": 20,
    "exact_cover_sets": 40,
}


def _cap(name: str) -> int:
    override = os.environ.get("COMBINLAB_ORACLE_LIMIT")
    if override:
        return int(override)
    return _DEFAULT_CAPS[name]


def brute_force_decide(problem):
    """Exhaustively search for a verifying witness; None when none exists.

    Desk-scale only: instances beyond the caps raise
    InstanceTooLargeError.  The env var COMBINLAB_ORACLE_LIMIT overrides
    every cap with a single integer.
    """
    if isinstance(problem, (Sat, ThreeSat)):
        f = problem.formula
        if f.num_vars > _cap("bool_vars"):
            raise InstanceTooLargeError("instance too large for oracle")
        for bits in itertools.product([False, True], repeat=f.num_vars):
            if f.evaluate(list(bits)):
                return list(bits)
        return None
    if isinstance(problem, (Clique, IndependentSet, VertexCover)):
        g, k = problem.graph, problem.k
        if g.n > _cap("vertices"):
            raise InstanceTooLargeError("instance too large for oracle")
        size = min(k, g.n) if isinstance(problem, VertexCover) else k
        if isinstance(problem, VertexCover):
            for r in range(0, size + 1):
                for vs in itertools.combinations(range(1, g.n + 1), r):
                    if verify_witness(problem, set(vs)):
                        return set(vs)
            return None
        if k > g.n:
            return None
        for vs in itertools.combinations(range(1, g.n + 1), k):
            if verify_witness(problem, set(vs)):
                return set(vs)
        return None
    if isinstance(problem, Coloring):
        g, k = problem.graph, problem.k
        if g.n > _cap("coloring_vertices"):
            raise InstanceTooLargeError("instance too large for oracle")
        if k < 1:
            return None if g.n else {}
        # Colour high-degree vertices first: prunes dramatically better.
        order = sorted(range(1, g.n + 1), key=lambda v: (-g.degree(v), v))
        coloring: dict[int, int] = {}

        def extend(pos: int):
            if pos == len(order):
                return dict(coloring)
            v = order[pos]
            used = {coloring[w] for w in g.neighbors(v) if w in coloring}
            for c in range(1, k + 1):
                if c not in used:
                    coloring[v] = c
                    found = extend(pos + 1)
                    if found:
                        return found
                    del coloring[v]
            return None

        return extend(0)
    if isinstance(problem, ExactCover):
        if len(problem.family) > _cap("exact_cover_sets"):
            raise InstanceTooLargeError("instance too large for oracle")
        return _exact_cover_backtrack(problem)
    if isinstance(problem, SetCover):
        m = len(problem.family)
        if m > _cap("elements") or len(problem.universe) > _cap("elements"):
            raise InstanceTooLargeError("instance too large for oracle")
        for r in range(0, min(problem.k, m) + 1):
            for combo in itertools.combinations(range(1, m + 1), r):
                if verify_witness(problem, set(combo)):
                    return set(combo)
        return None
    if isinstance(problem, Representatives):
        universe = list(problem.universe)
        if len(universe) > _cap("elements"):
            raise InstanceTooLargeError("instance too large for oracle")
        for r in range(0, len(universe) + 1):
            for combo in itertools.combinations(universe, r):
                if verify_witness(problem, set(combo)):
                    return set(combo)
        return None
    if isinstance(problem, (Knapsack01, KnapsackDecision)):
        n = len(problem.numbers if isinstance(problem, Knapsack01) else problem.values)
        if n > _cap("bool_vars"):
            raise InstanceTooLargeError("instance too large for oracle")
        for bits in itertools.product([0, 1], repeat=n):
            if verify_witness(problem, list(bits)):
                return list(bits)
        return None
    if isinstance(problem, Partition):
        n = len(problem.numbers)
        if n > _cap("bool_vars"):
            raise InstanceTooLargeError("instance too large for oracle")
        for r in range(0, n + 1):
            for combo in itertools.combinations(range(1, n + 1), r):
                if verify_witness(problem, set(combo)):
                    return set(combo)
        return None
    if isinstance(problem, (HamCircuit, HamCycle)):
        g = problem.digraph if isinstance(problem, HamCircuit) else problem.graph
        if g.n > _cap("ham_vertices"):
            raise InstanceTooLargeError("instance too large for oracle")
        return _ham_backtrack(g, directed=isinstance(problem, HamCircuit))
    if isinstance(problem, Tsp):
        n = len(problem.matrix)
        if n > _cap("tsp_cities"):
            raise InstanceTooLargeError("instance too large for oracle")
        return _tsp_backtrack(problem)
    if isinstance(problem, Ilp):
        if any(hi - lo > 3 for lo, hi in problem.bounds):
            raise InstanceTooLargeError("instance too large for oracle")
        space = 1
        for lo, hi in problem.bounds:
            space *= hi - lo + 1
            if space > 4_000_000:
                raise InstanceTooLargeError("instance too large for oracle")
        return _ilp_backtrack(problem)
    raise TypeError(f"unknown problem type {type(problem)!r}")


def _ham_backtrack(g, directed: bool):
    n = g.n
    if n == 0:
        return None
    path = [1]
    seen = {1}

    def ok(u, v):
        return v in g.adj[u] if directed else g.has_edge(u, v)

    def extend():
        if len(path) == n:
            return ok(path[-1], path[0])
        for v in g.neighbors(path[-1]) if directed else g.neighbors(path[-1]):
            if v not in seen:
                seen.add(v)
                path.append(v)
                if extend():
                    return True
                path.pop()
                seen.remove(v)
        return False

    return list(path) if extend() else None


def _exact_cover_backtrack(problem: ExactCover):
    containing: dict = {}
    for idx, s in enumerate(problem.family, start=1):
        for a in s:
            containing.setdefault(a, []).append(idx)
    chosen: list[int] = []

    def extend(uncovered: frozenset):
        if not uncovered:
            return set(chosen)
        a = min(uncovered, key=lambda x: len(containing.get(x, ())))
        for idx in containing.get(a, ()):
            s = problem.family[idx - 1]
            if s <= uncovered:
                chosen.append(idx)
                found = extend(uncovered - s)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return extend(frozenset(problem.universe))


def _tsp_backtrack(problem: Tsp):
    n = len(problem.matrix)
    if n == 1:
        return [1] if 0 <= problem.limit else None
    off_diag = [
        problem.matrix[i][j] for i in range(n) for j in range(n) if i != j
    ]
    cheapest = min(off_diag)
    optimistic = cheapest >= 0  # completion bound only valid then
    tour = [1]
    seen = {1}

    def extend(partial):
        remaining_arcs = n - len(tour) + 1
        if optimistic and partial + remaining_arcs * cheapest > problem.limit:
            return False
        if len(tour) == n:
            return partial + problem.matrix[tour[-1] - 1][0] <= problem.limit
        for v in range(2, n + 1):
            if v in seen:
                continue
            seen.add(v)
            tour.append(v)
            if extend(partial + problem.matrix[tour[-2] - 1][v - 1]):
                return True
            tour.pop()
            seen.remove(v)
        return False

    return list(tour) if extend(0) else None


def _ilp_backtrack(problem: Ilp):
    width = len(problem.bounds)
    rows = [list(r) for r in problem.rows]
    nrows = len(rows)
    # suffix_lo[r][p] / suffix_hi[r][p]: extreme contribution of columns
    # p.. given the box bounds, precomputed once.
    suffix_lo = [[0] * (width + 1) for _ in range(nrows)]
    suffix_hi = [[0] * (width + 1) for _ in range(nrows)]
    for r in range(nrows):
        for p in range(width - 1, -1, -1):
            a = rows[r][p]
            blo, bhi = problem.bounds[p]
            lo_term = min(a * blo, a * bhi)
            hi_term = max(a * blo, a * bhi)
            suffix_lo[r][p] = suffix_lo[r][p + 1] + lo_term
            suffix_hi[r][p] = suffix_hi[r][p + 1] + hi_term

    partial = [0] * nrows
    x = [0] * width

    def feasible(pos: int) -> bool:
        for r in range(nrows):
            lo = partial[r] + suffix_lo[r][pos]
            hi = partial[r] + suffix_hi[r][pos]
            rel, b = problem.relations[r], problem.rhs[r]
            if rel == "<=" and lo > b:
                return False
            if rel == ">=" and hi < b:
                return False
            if rel == "==" and not (lo <= b <= hi):
                return False
        return True

    def extend(pos: int):
        if pos == width:
            return list(x)
        blo, bhi = problem.bounds[pos]
        for val in range(blo, bhi + 1):
            x[pos] = val
            for r in range(nrows):
                partial[r] += rows[r][pos] * val
            if feasible(pos + 1):
                found = extend(pos + 1)
                if found:
                    return found
            for r in range(nrows):
                partial[r] -= rows[r][pos] * val
        x[pos] = 0
        return None

    found = extend(0)
    if found is not None:
        assert verify_witness(problem, found)
    return found


# --- reductions --------------------------------------------------------------


@dataclass
class ReductionOutput:
    """Transformed instance plus forward/backward witness transport."""

    source: object
    target: object
    forward: Callable
    backward: Callable
    notes: dict = field(default_factory=dict)


def sat_to_3sat(f: CnfFormula) -> ReductionOutput:
    """Equisatisfiable exact-3-CNF via unit/pair padding and chain splits."""
    if not f.clauses:
        raise ValueError("needs at least one clause")
    clauses: list[tuple[int, int, int]] = []
    next_var = f.num_vars + 1
    plans: list[dict] = []
    for clause in f.clauses:
        lits = list(clause)
        if len(lits) == 1:
            z, w = next_var, next_var + 1
            next_var += 2
            x = lits[0]
            clauses.extend(
                [(x, z, w), (x, z, -w), (x, -z, w), (x, -z, -w)]
            )
            plans.append({"kind": "unit", "fresh": [z, w]})
        elif len(lits) == 2:
            w = next_var
            next_var += 1
            x, y = lits
            clauses.extend([(x, y, w), (x, y, -w)])
            plans.append({"kind": "pair", "fresh": [w]})
        elif len(lits) == 3:
            clauses.append(tuple(lits))
            plans.append({"kind": "triple", "fresh": []})
        else:
            chain = []
            rest = lits
            while len(rest) > 3:
                w = next_var
                next_var += 1
                clauses.append((rest[0], rest[1], w))
                chain.append(w)
                rest = [-w] + rest[2:]
            clauses.append(tuple(rest))
            plans.append({"kind": "chain", "fresh": chain, "lits": lits})
    target = CnfFormula(next_var - 1, tuple(clauses))

    def forward(assignment):
        alpha = _as_assignment(assignment, f.num_vars)
        ext = list(alpha)

        def sat_lit(l):
            return ext[abs(l) - 1] == (l > 0)

        for plan in plans:
            if plan["kind"] in ("unit", "pair"):
                ext.extend([False] * len(plan["fresh"]))
            elif plan["kind"] == "chain":
                # Chain var true exactly when the remaining suffix must
                # carry the satisfaction.
                lits = plan["lits"]
                for pos in range(len(plan["fresh"])):
                    ext.append(not any(sat_lit(l) for l in lits[: 2 + pos]))
        return ext

    def backward(assignment):
        full = _as_assignment(assignment, target.num_vars)
        return full[: f.num_vars]

    return ReductionOutput(Sat(f), ThreeSat(target), forward, backward)


def sat_to_clique(f: CnfFormula) -> ReductionOutput:
    """Vertices are (literal, clause) occurrences; edges join compatible
    occurrences across clauses; k = clause count."""
    if not f.clauses:
        raise ValueError("needs at least one clause")
    occurrences: list[tuple[int, int]] = []  # (clause index, literal)
    for ci, clause in enumerate(f.clauses):
        for lit in dict.fromkeys(clause):  # dedupe, keep first occurrence
            occurrences.append((ci, lit))
    index = {occ: i + 1 for i, occ in enumerate(occurrences)}
    edges = []
    for a, b in itertools.combinations(occurrences, 2):
        if a[0] != b[0] and a[1] != -b[1]:
            edges.append((index[a], index[b]))
    g = Graph(len(occurrences), edges)
    target = Clique(g, len(f.clauses))

    def forward(assignment):
        alpha = _as_assignment(assignment, f.num_vars)
        chosen = set()
        for ci, clause in enumerate(f.clauses):
            lit = next(l for l in clause if alpha[abs(l) - 1] == (l > 0))
            chosen.add(index[(ci, lit)])
        return chosen

    def backward(vertex_set):
        alpha = [False] * f.num_vars
        for v in vertex_set:
            ci, lit = occurrences[v - 1]
            alpha[abs(lit) - 1] = lit > 0
        return alpha

    return ReductionOutput(Sat(f), target, forward, backward, {"vertices": occurrences})


def threesat_to_coloring(f: CnfFormula) -> ReductionOutput:
    """3-CNF to (n+1)-colorability over 3n + r vertices (n padded >= 4)."""
    if not f.is_three_cnf:
        raise ValueError("input must be exact 3-CNF")
    n = max(f.num_vars, 4)
    r = len(f.clauses)
    # vertex ids: x_i -> i, not-x_i -> n+i, D_j -> 2n+j, v_i -> 2n+r+i
    def pos(i):
        return i

    def neg(i):
        return n + i

    def cl(j):
        return 2 * n + j

    def anchor(i):
        return 2 * n + r + i

    edges = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            edges.add((anchor(i), anchor(j)))
        for j in range(1, n + 1):
            if i != j:
                edges.add((anchor(i), pos(j)))
                edges.add((anchor(i), neg(j)))
        edges.add((pos(i), neg(i)))
    for j, clause in enumerate(f.clauses, start=1):
        present = set(clause)
        for i in range(1, n + 1):
            if i not in present:
                edges.add((pos(i), cl(j)))
            if -i not in present:
                edges.add((neg(i), cl(j)))
    g = Graph(3 * n + r, sorted((min(u, v), max(u, v)) for u, v in edges))
    target = Coloring(g, n + 1)

    def forward(assignment):
        alpha = _as_assignment(assignment, f.num_vars)
        alpha = alpha + [False] * (n - f.num_vars)
        colors = {}
        for i in range(1, n + 1):
            colors[anchor(i)] = i
            colors[pos(i)] = i if alpha[i - 1] else n + 1
            colors[neg(i)] = n + 1 if alpha[i - 1] else i
        for j, clause in enumerate(f.clauses, start=1):
            lit = next(l for l in clause if alpha[abs(l) - 1] == (l > 0))
            colors[cl(j)] = abs(lit)
        return colors

    def backward(coloring):
        relabel = {coloring[anchor(i)]: i for i in range(1, n + 1)}
        spare = next(
            c for c in range(1, n + 2) if c not in relabel
        )
        relabel[spare] = n + 1
        alpha = [relabel[coloring[pos(i)]] == i for i in range(1, n + 1)]
        return alpha[: f.num_vars]

    return ReductionOutput(ThreeSat(f), target, forward, backward)


def exact_cover_to_knapsack01(problem: ExactCover) -> ReductionOutput:
    """Incidence rows read as base-(m+1) digits; exact subcovers are the
    0/1 solutions of sum z(h_i) x_i = 1 + (m+1) + ... + (m+1)^(n-1)."""
    universe = list(problem.universe)
    n, m = len(universe), len(problem.family)
    base = m + 1
    place = {a: base ** (n - 1 - idx) for idx, a in enumerate(universe)}
    numbers = tuple(sum(place[a] for a in s) for s in problem.family)
    total = sum(base**p for p in range(n))
    target = Knapsack01(numbers, total)

    def forward(subfamily):
        idxs = _family_indices(subfamily, m)
        return [1 if i in idxs else 0 for i in range(1, m + 1)]

    def backward(x):
        bits = _as_assignment(x, m)
        return {i + 1 for i, b in enumerate(bits) if b}

    return ReductionOutput(problem, target, forward, backward)


def vc_to_ham_circuit(problem: VertexCover) -> ReductionOutput:
    """Cover-driven Hamiltonian circuit digraph on 4q + k vertices.

    Edge chains per vertex follow the graph's stored edge order; selector
    vertices a_1..a_k enter each chain at its first edge and leave after
    the last.  k is clamped to the number of positive-degree vertices
    (covers never need isolated vertices).
    """
    g, k = problem.graph, problem.k
    if not g.edges:
        raise ValueError("needs at least one edge")
    if k > g.n:
        raise ValueError("k larger than the vertex count")
    if k < 1:
        raise ValueError("needs k >= 1")
    positive = [v for v in range(1, g.n + 1) if g.degree(v)]
    k_eff = min(k, len(positive))
    edge_order = {e: idx for idx, e in enumerate(g.edges)}
    incident = {
        v: sorted(
            ((min(v, w), max(v, w)) for w in g.neighbors(v)),
            key=lambda e: edge_order[e],
        )
        for v in positive
    }
    ids: dict = {}
    for v in positive:
        for e in incident[v]:
            for delta in (0, 1):
                ids[(v, e, delta)] = len(ids) + 1
    selectors = {i: len(ids) + i for i in range(1, k_eff + 1)}
    total = len(ids) + k_eff
    arcs = set()
    for v in positive:
        first, last = incident[v][0], incident[v][-1]
        for i in range(1, k_eff + 1):
            arcs.add((selectors[i], ids[(v, first, 0)]))
            arcs.add((ids[(v, last, 1)], selectors[i]))
        for e, nxt in zip(incident[v], incident[v][1:]):
            arcs.add((ids[(v, e, 1)], ids[(v, nxt, 0)]))
        for e in incident[v]:
            arcs.add((ids[(v, e, 0)], ids[(v, e, 1)]))
    for (u, v) in g.edges:
        e = (u, v)
        for delta in (0, 1):
            arcs.add((ids[(u, e, delta)], ids[(v, e, delta)]))
            arcs.add((ids[(v, e, delta)], ids[(u, e, delta)]))
    digraph = Digraph(total, sorted(arcs))
    target = HamCircuit(digraph)
    names = {num: key for key, num in ids.items()}

    def forward(cover):
        vs = _as_vertex_set(cover, g.n)
        chosen = sorted(v for v in vs if g.degree(v))
        for v in sorted(positive):
            if len(chosen) >= k_eff:
                break
            if v not in chosen:
                chosen.append(v)
        chosen = sorted(chosen[:k_eff])
        circuit: list[int] = []
        covered_by = {}
        for e in g.edges:
            owner = next((v for v in chosen if v in e), None)
            if owner is None:
                raise ValueError("witness is not a cover")
            covered_by[e] = owner
        for pos_i, v in enumerate(chosen, start=1):
            circuit.append(selectors[pos_i])
            for e in incident[v]:
                circuit.append(ids[(v, e, 0)])
                other = e[0] if e[1] == v else e[1]
                if covered_by[e] == v and other not in chosen and g.degree(other):
                    circuit.append(ids[(other, e, 0)])
                    circuit.append(ids[(other, e, 1)])
                circuit.append(ids[(v, e, 1)])
        return circuit

    def backward(circuit):
        if sorted(circuit) != list(range(1, total + 1)):
            raise WitnessFormatError("expected a permutation of digraph vertices")
        succ = {u: v for u, v in zip(circuit, circuit[1:] + circuit[:1])}
        cover = set()
        for i in range(1, k_eff + 1):
            entry = succ[selectors[i]]
            v, _, _ = names[entry]
            if v in cover:
                raise ValueError("selector successors must name distinct vertices")
            cover.add(v)
        return cover

    return ReductionOutput(
        problem, target, forward, backward, {"edge_order": list(g.edges), "k_eff": k_eff}
    )


REDUCTION_KINDS = (
    "CliqueToIS",
    "ISToVC",
    "ColoringToExactCover",
    "ExactCoverToRepresentatives",
    "Knapsack01ToPartition",
    "VCToSetCover",
    "HamCircuitToHamCycle",
    "HamCycleToTsp",
    "Knapsack01ToIlp",
    "SetCoverToIlp",
    "TspToIlp",
)


def apply_simple_reduction(kind: str, problem) -> ReductionOutput:
    """Dispatch table for the one-step reductions; raises on tag mismatch."""
    try:
        fn = _SIMPLE[kind]
    except KeyError:
        raise ValueError(f"unknown reduction kind {kind!r}") from None
    return fn(problem)


def _clique_to_is(problem: Clique) -> ReductionOutput:
    if not isinstance(problem, Clique):
        raise TypeError("CliqueToIS expects a Clique instance")
    target = IndependentSet(problem.graph.complement(), problem.k)
    identity = lambda w: set(w)
    return ReductionOutput(problem, target, identity, identity)


def _is_to_vc(problem: IndependentSet) -> ReductionOutput:
    if not isinstance(problem, IndependentSet):
        raise TypeError("ISToVC expects an IndependentSet instance")
    g, k = problem.graph, problem.k
    target = VertexCover(g, g.n - k)

    def forward(ind_set):
        return set(range(1, g.n + 1)) - _as_vertex_set(ind_set, g.n)

    def backward(cover):
        return set(range(1, g.n + 1)) - _as_vertex_set(cover, g.n)

    return ReductionOutput(problem, target, forward, backward)


def _coloring_to_exact_cover(problem: Coloring) -> ReductionOutput:
    if not isinstance(problem, Coloring):
        raise TypeError("ColoringToExactCover expects a Coloring instance")
    g, k = problem.graph, problem.k
    universe = tuple(
        [("v", v) for v in range(1, g.n + 1)]
        + [("slot", i, e) for i in range(1, k + 1) for e in g.edges]
    )
    family = []
    labels = []
    for v in range(1, g.n + 1):
        for i in range(1, k + 1):
            members = {("v", v)} | {
                ("slot", i, e) for e in g.edges if v in e
            }
            family.append(frozenset(members))
            labels.append(("S", v, i))
    for e in g.edges:
        for i in range(1, k + 1):
            family.append(frozenset({("slot", i, e)}))
            labels.append(("T", e, i))
    target = ExactCover(universe, tuple(family))
    index_of = {lab: idx + 1 for idx, lab in enumerate(labels)}

    def forward(coloring):
        chosen = {index_of[("S", v, coloring[v])] for v in range(1, g.n + 1)}
        covered = set()
        for idx in chosen:
            covered |= target.family[idx - 1]
        for e in g.edges:
            for i in range(1, k + 1):
                if ("slot", i, e) not in covered:
                    chosen.add(index_of[("T", e, i)])
        return chosen

    def backward(subfamily):
        idxs = _family_indices(subfamily, len(family))
        colors = {}
        for idx in idxs:
            lab = labels[idx - 1]
            if lab[0] == "S":
                _, v, i = lab
                colors[v] = i
        return colors

    return ReductionOutput(problem, target, forward, backward)


def _exact_cover_to_representatives(problem: ExactCover) -> ReductionOutput:
    if not isinstance(problem, ExactCover):
        raise TypeError("ExactCoverToRepresentatives expects ExactCover")
    m = len(problem.family)
    universe = tuple(range(1, m + 1))
    family = tuple(
        frozenset(j for j in range(1, m + 1) if a in problem.family[j - 1])
        for a in problem.universe
    )
    target = Representatives(universe, family)

    def forward(subfamily):
        return set(_family_indices(subfamily, m))

    def backward(w):
        return set(w)

    return ReductionOutput(problem, target, forward, backward)


def _knapsack01_to_partition(problem: Knapsack01) -> ReductionOutput:
    if not isinstance(problem, Knapsack01):
        raise TypeError("Knapsack01ToPartition expects Knapsack01")
    a, b = list(problem.numbers), problem.target
    numbers = tuple(a + [2 * b, sum(a)])
    target = Partition(numbers)
    n = len(a)

    def forward(x):
        bits = _as_assignment(x, n)
        side = {i + 1 for i, bit in enumerate(bits) if bit}
        return side | {n + 2}  # put the sum element next to the chosen items

    def backward(idx_set):
        idxs = set(idx_set)
        if n + 2 not in idxs:
            idxs = set(range(1, n + 3)) - idxs
        return [1 if i in idxs else 0 for i in range(1, n + 1)]

    return ReductionOutput(problem, target, forward, backward)


def _vc_to_set_cover(problem: VertexCover) -> ReductionOutput:
    if not isinstance(problem, VertexCover):
        raise TypeError("VCToSetCover expects VertexCover")
    g, k = problem.graph, problem.k
    universe = tuple(g.edges)
    family = tuple(
        frozenset(e for e in g.edges if v in e) for v in range(1, g.n + 1)
    )
    target = SetCover(universe, family, min(k, g.n))

    def forward(cover):
        return set(_as_vertex_set(cover, g.n))

    def backward(idxs):
        return set(_family_indices(idxs, g.n))

    return ReductionOutput(problem, target, forward, backward)


def _ham_circuit_to_ham_cycle(problem: HamCircuit) -> ReductionOutput:
    if not isinstance(problem, HamCircuit):
        raise TypeError("HamCircuitToHamCycle expects HamCircuit")
    d = problem.digraph
    p = d.n

    def vid(u, part):  # part in (1, 2, 3)
        return 3 * (u - 1) + part

    edges = []
    for u in range(1, p + 1):
        edges.append((vid(u, 1), vid(u, 2)))
        edges.append((vid(u, 2), vid(u, 3)))
    for u, v in d.arcs:
        edges.append((vid(u, 3), vid(v, 1)))
    target = HamCycle(Graph(3 * p, edges))

    def forward(circuit):
        seq = list(circuit)
        out = []
        for u in seq:
            out.extend([vid(u, 1), vid(u, 2), vid(u, 3)])
        return out

    def backward(cycle):
        seq = list(cycle)
        n3 = 3 * p
        if sorted(seq) != list(range(1, n3 + 1)):
            raise WitnessFormatError("expected a permutation")
        # Normalize direction so that each triple reads 1, 2, 3.
        start = next(i for i, v in enumerate(seq) if (v - 1) % 3 == 0)
        seq = seq[start:] + seq[:start]
        if (seq[1] - 1) % 3 != 1:
            seq = [seq[0]] + list(reversed(seq[1:]))
        return [(v - 1) // 3 + 1 for v in seq[::3]]

    return ReductionOutput(problem, target, forward, backward)


def _ham_cycle_to_tsp(problem: HamCycle) -> ReductionOutput:
    if not isinstance(problem, HamCycle):
        raise TypeError("HamCycleToTsp expects HamCycle")
    g = problem.graph
    p = g.n
    matrix = tuple(
        tuple(
            0 if i == j else (1 if g.has_edge(i, j) else 2)
            for j in range(1, p + 1)
        )
        for i in range(1, p + 1)
    )
    target = Tsp(matrix, p)

    def forward(cycle):
        seq = list(cycle)
        at = seq.index(1)
        return seq[at:] + seq[:at]

    def backward(tour):
        return list(tour)

    return ReductionOutput(problem, target, forward, backward)


def _knapsack01_to_ilp(problem: Knapsack01) -> ReductionOutput:
    if not isinstance(problem, Knapsack01):
        raise TypeError("Knapsack01ToIlp expects Knapsack01")
    n = len(problem.numbers)
    rows = [tuple(problem.numbers)]
    relations = ["=="]
    rhs = [problem.target]
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        rows.append(tuple(unit))
        relations.append("<=")
        rhs.append(1)
    target = Ilp(tuple(rows), tuple(relations), tuple(rhs), tuple((0, 1) for _ in range(n)))

    def forward(x):
        return [int(b) for b in _as_assignment(x, n)]

    def backward(x):
        return [int(b) for b in x]

    return ReductionOutput(problem, target, forward, backward)


def _set_cover_to_ilp(problem: SetCover) -> ReductionOutput:
    if not isinstance(problem, SetCover):
        raise TypeError("SetCoverToIlp expects SetCover")
    m = len(problem.family)
    k_eff = min(problem.k, m)
    rows = []
    relations = []
    rhs = []
    for a in problem.universe:
        rows.append(tuple(1 if a in s else 0 for s in problem.family))
        relations.append(">=")
        rhs.append(1)
    rows.append(tuple([1] * m))
    relations.append("==")
    rhs.append(k_eff)
    for i in range(m):
        unit = [0] * m
        unit[i] = 1
        rows.append(tuple(unit))
        relations.append("<=")
        rhs.append(1)
    target = Ilp(tuple(rows), tuple(relations), tuple(rhs), tuple((0, 1) for _ in range(m)))

    def forward(idxs):
        chosen = set(_family_indices(idxs, m))
        for i in range(1, m + 1):
            if len(chosen) >= k_eff:
                break
            chosen.add(i)
        return [1 if i in chosen else 0 for i in range(1, m + 1)]

    def backward(x):
        return {i + 1 for i, b in enumerate(x) if b}

    return ReductionOutput(problem, target, forward, backward)


def _tsp_to_ilp(problem: Tsp) -> ReductionOutput:
    if not isinstance(problem, Tsp):
        raise TypeError("TspToIlp expects Tsp")
    n = len(problem.matrix)
    arc_vars = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    u_vars = list(range(2, n + 1))
    width = len(arc_vars) + len(u_vars)
    col = {("x", i, j): idx for idx, (i, j) in enumerate(arc_vars)}
    for idx, i in enumerate(u_vars):
        col[("u", i)] = len(arc_vars) + idx

    rows = []
    relations = []
    rhs = []

    def row_of(entries):
        r = [0] * width
        for key, coef in entries:
            r[col[key]] = coef
        return tuple(r)

    length_row = [
        (("x", i, j), problem.matrix[i - 1][j - 1]) for (i, j) in arc_vars
    ]
    rows.append(row_of(length_row))
    relations.append("<=")
    rhs.append(problem.limit)
    for i in range(1, n + 1):
        rows.append(row_of([(("x", i, j), 1) for j in range(1, n + 1) if j != i]))
        relations.append("==")
        rhs.append(1)
    for j in range(1, n + 1):
        rows.append(row_of([(("x", i, j), 1) for i in range(1, n + 1) if i != j]))
        relations.append("==")
        rhs.append(1)
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            if i == j:
                continue
            rows.append(
                row_of([(("u", i), 1), (("u", j), -1), (("x", i, j), n)])
            )
            relations.append("<=")
            rhs.append(n - 1)
    for (i, j) in arc_vars:
        rows.append(row_of([(("x", i, j), 1)]))
        relations.append("<=")
        rhs.append(1)
    bounds = tuple([(0, 1)] * len(arc_vars) + [(0, n - 1)] * len(u_vars))
    target = Ilp(tuple(rows), tuple(relations), tuple(rhs), bounds)

    def forward(tour):
        seq = list(tour)
        at = seq.index(1)
        seq = seq[at:] + seq[:at]
        x = [0] * width
        for a, b in zip(seq, seq[1:] + seq[:1]):
            x[col[("x", a, b)]] = 1
        for rank, city in enumerate(seq):
            if city != 1:
                x[col[("u", city)]] = rank
        return x

    def backward(x):
        succ = {}
        for (i, j) in arc_vars:
            if x[col[("x", i, j)]]:
                succ[i] = j
        tour = [1]
        while len(tour) < n:
            tour.append(succ[tour[-1]])
        return tour

    return ReductionOutput(
        problem, target, forward, backward, {"columns": col, "n": n}
    )


_SIMPLE = {
    "CliqueToIS": _clique_to_is,
    "ISToVC": _is_to_vc,
    "ColoringToExactCover": _coloring_to_exact_cover,
    "ExactCoverToRepresentatives": _exact_cover_to_representatives,
    "Knapsack01ToPartition": _knapsack01_to_partition,
    "VCToSetCover": _vc_to_set_cover,
    "HamCircuitToHamCycle": _ham_circuit_to_ham_cycle,
    "HamCycleToTsp": _ham_cycle_to_tsp,
    "Knapsack01ToIlp": _knapsack01_to_ilp,
    "SetCoverToIlp": _set_cover_to_ilp,
    "TspToIlp": _tsp_to_ilp,
}


# --- 2-SAT -------------------------------------------------------------------


@dataclass
class TwoSatResult:
    satisfiable: bool
    assignment: list[bool] | None
    conflict_var: int | None


def implication_graph(f: CnfFormula) -> Digraph:
    """Literal digraph: vertex i is not-x_i, vertex n+i is x_i; every
    clause (a or b) contributes arcs not-a -> b and not-b -> a."""
    n = f.num_vars

    def node(lit: int) -> int:
        return n + lit if lit > 0 else -lit

    arcs = set()
    for clause in f.clauses:
        if len(clause) > 2:
            raise ValueError("clause with more than 2 literals")
        a = clause[0]
        b = clause[1] if len(clause) == 2 else clause[0]
        for tail, head in ((-a, b), (-b, a)):
            if tail != head:
                arcs.add((node(tail), node(head)))
    return Digraph(2 * n, sorted(arcs))


def twosat_solve(f: CnfFormula) -> TwoSatResult:
    """Decide a <=2-CNF formula via strong components of the implication
    graph; UNSAT certificates name a variable co-located with its
    negation (checkable by scc_kosaraju)."""
    n = f.num_vars
    g = implication_graph(f)
    comps = scc_kosaraju(g)
    comp_index = {}
    for idx, block in enumerate(comps):
        for v in block:
            comp_index[v] = idx
    for x in range(1, n + 1):
        if comp_index[n + x] == comp_index[x]:
            return TwoSatResult(False, None, x)
    # Components are emitted sources-first, so "later" means closer to a
    # sink; a literal is true when its component follows its negation's.
    assignment = [comp_index[n + x] > comp_index[x] for x in range(1, n + 1)]
    return TwoSatResult(True, assignment, None)
