"""Command-line front end.

Subcommands: solve, sort, select, reduce, verify, twosat, approx, bench,
gen.  Exit codes: 0 success, 1 negative decision (UNSAT / not Eulerian /
no cover / witness rejected), 2 input error, 3 size-limit error.

JSON output is deterministic: the same seed and flags produce
byte-identical bytes.  Instance file dialects are documented in the
README (graphs in the shared text format, CNF in DIMACS, set systems and
ILP in JSON, TSP matrices as whitespace grids).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import approx as ax
from . import complexity as cx
from . import dp
from . import graph_core as gc
from . import paths_mst as pm
from . import search_games as sg
from . import sorting as srt
from . import tournament as trn
from .intmath import ceil_log2, ceil_log2_factorial, ceil_log3
from .oracles import counting_comparator

OK, NEGATIVE, INPUT_ERROR, TOO_LARGE = 0, 1, 2, 3


class CliInputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliInputError(str(exc)) from exc


def _emit(payload, fmt: str, text_renderer=None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=_json_default))
    else:
        if text_renderer is None:
            for key in sorted(payload):
                print(f"{key}: {payload[key]}")
        else:
            text_renderer(payload)


def _json_default(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, float) and x == float("inf"):
        return "inf"
    raise TypeError(f"cannot encode {type(x)!r}")


def _numbers_from_text(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise CliInputError(f"bad number list: {exc}") from exc


def _matrix_from_text(text: str):
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        matrix = [[int(tok) if "/" not in tok else Fraction(tok) for tok in row] for row in rows]
    except ValueError as exc:
        raise CliInputError(f"bad matrix: {exc}") from exc
    if any(len(r) != len(matrix) for r in matrix):
        raise CliInputError("matrix must be square")
    return matrix


def _graph(path: str):
    try:
        return gc.parse_graph_text(_read(path))
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc


# --- solve ------------------------------------------------------------------


def cmd_solve(args) -> int:
    problem = args.problem
    fmt = args.format
    if problem == "euler":
        g = _graph(args.file)
        try:
            walk = gc.euler_cycle(g)
        except gc.NotEulerianError as exc:
            _emit({"eulerian": False, "reason": exc.reason, "vertex": exc.vertex}, fmt)
            return NEGATIVE
        _emit({"eulerian": True, "cycle": walk, "edges": len(g.edges)}, fmt)
        return OK
    if problem == "components":
        g = _graph(args.file)
        comps = gc.connected_components(g)
        _emit({"count": len(comps), "components": comps}, fmt)
        return OK
    if problem == "bfs":
        g = _graph(args.file)
        forest = gc.bfs_forest(g)
        _emit(
            {
                "order": forest.order,
                "trees": [{"root": r, "edges": e} for r, e in forest.trees],
            },
            fmt,
        )
        return OK
    if problem == "dfs":
        g = _graph(args.file)
        rec = gc.dfs(g)
        _emit(
            {
                "discovery": rec.discovery,
                "finish": rec.finish,
                "roots": rec.roots,
            },
            fmt,
        )
        return OK
    if problem == "scc":
        g = _graph(args.file)
        if not isinstance(g, gc.Digraph):
            raise CliInputError("scc needs a directed graph (pd header)")
        comps = gc.scc_kosaraju(g)
        _emit({"count": len(comps), "components": comps}, fmt)
        return OK
    if problem == "dijkstra":
        g = _graph(args.file)
        if not isinstance(g, pm.WeightedDigraph):
            raise CliInputError("dijkstra needs a weighted digraph")
        res = pm.dijkstra(g, args.source, target=args.target)
        out = {"source": args.source, "dist": {str(v): d for v, d in res.dist.items()}}
        if args.target is not None:
            if res.dist[args.target] == pm.INF:
                _emit({"reachable": False, "target": args.target}, fmt)
                return NEGATIVE
            out["path"] = res.path_to(args.target)
        _emit(out, fmt)
        return OK
    if problem == "floyd":
        g = _graph(args.file)
        if not isinstance(g, pm.WeightedDigraph):
            raise CliInputError("floyd needs a weighted digraph")
        t = pm.floyd_warshall(g)
        _emit(
            {
                "dist": [row[1:] for row in t.dist[1:]],
                "successor": [row[1:] for row in t.succ[1:]],
                "negative_cycle_vertices": sorted(t.negative_cycle_vertices),
            },
            fmt,
        )
        return OK
    if problem == "closure":
        g = _graph(args.file)
        if not isinstance(g, gc.Digraph):
            raise CliInputError("closure needs a directed graph")
        t = pm.transitive_closure(g)
        _emit({"closure": [row[1:] for row in t[1:]]}, fmt)
        return OK
    if problem == "shortest":
        g = _graph(args.file)
        if not isinstance(g, pm.WeightedGraph):
            raise CliInputError("shortest needs a weighted undirected graph")
        if args.target is None:
            raise CliInputError("shortest needs --target")
        dist, path = pm.undirected_shortest_path(g, args.source, args.target)
        if path is None:
            _emit({"reachable": False, "target": args.target}, fmt)
            return NEGATIVE
        _emit({"distance": dist, "path": path}, fmt)
        return OK
    if problem in ("prim", "kruskal", "maxst"):
        g = _graph(args.file)
        if not isinstance(g, pm.WeightedGraph):
            raise CliInputError(f"{problem} needs a weighted undirected graph")
        try:
            res = {"prim": pm.prim, "kruskal": pm.kruskal, "maxst": pm.max_spanning_tree}[
                problem
            ](g)
        except ValueError as exc:
            _emit({"connected": False, "error": str(exc)}, fmt)
            return NEGATIVE
        _emit({"edges": res.edges, "weight": res.total_weight}, fmt)
        return OK
    if problem == "knapsack":
        values, volumes, cap = dp.load_knapsack_json(_read(args.file))
        chosen, value = dp.knapsack_pareto(values, volumes, cap)
        _emit({"items": sorted(chosen), "value": value}, fmt)
        return OK
    if problem == "allocate":
        inst = dp.load_allocation_json(_read(args.file))
        value, plan = dp.allocate(inst)
        _emit({"value": value, "plan": plan}, fmt)
        return OK
    if problem == "chain":
        dims = _numbers_from_text(_read(args.file))
        cost, expr, _ = dp.matrix_chain(dims)
        _emit({"cost": cost, "parenthesization": expr}, fmt)
        return OK
    if problem == "lcs":
        lines = [ln for ln in _read(args.file).splitlines() if ln.strip()]
        if len(lines) < 2:
            raise CliInputError("lcs input needs two lines")
        length, seq, _ = dp.lcs(lines[0].strip(), lines[1].strip())
        _emit({"length": length, "subsequence": "".join(seq)}, fmt)
        return OK
    raise CliInputError(f"unknown solve problem {problem!r}")


# --- sort / select -------------------------------------------------------------


_SORTERS = {
    "insertion": srt.insertion_sort,
    "merge": srt.merge_sort_grouped,
    "mergeinsertion": srt.merge_insertion_sort,
}


def cmd_sort(args) -> int:
    items = _numbers_from_text(_read(args.file))
    if len(items) != len(set(items)):
        raise CliInputError("sort input keys must be pairwise distinct")
    cmp = counting_comparator(items)
    out = _SORTERS[args.algorithm](items, cmp)
    payload = {"sorted": out}
    if args.count:
        payload["comparisons"] = cmp.count
        if items:
            budgets = srt.sort_budgets(len(items))
            payload["budget"] = {
                "insertion": budgets.a_n,
                "merge": budgets.b_n,
                "mergeinsertion": budgets.f_n,
            }[args.algorithm]
    _emit(payload, args.format)
    return OK


def cmd_select(args) -> int:
    items = _numbers_from_text(_read(args.file))
    if len(items) != len(set(items)):
        raise CliInputError("select input keys must be pairwise distinct")
    if not 1 <= args.t <= len(items):
        raise CliInputError("t out of range")
    cmp = counting_comparator(items)
    fn = trn.select_t_linear if args.algorithm == "linear" else trn.select_t_tournament
    idx = fn(items, args.t, cmp)
    payload = {"t": args.t, "index": idx + 1, "value": items[idx]}
    if args.count:
        payload["comparisons"] = cmp.count
    _emit(payload, args.format)
    return OK


# --- reduce / verify ------------------------------------------------------------


def _set_system_from_json(text: str):
    data = json.loads(text)
    universe = tuple(data["universe"])
    family = tuple(frozenset(s) for s in data["family"])
    return universe, family, data.get("k")


def _load_problem(kind: str, path: str, args):
    if kind in ("sat", "3sat"):
        f = cx.parse_dimacs(_read(path))
        return cx.Sat(f) if kind == "sat" else cx.ThreeSat(f)
    if kind in ("clique", "independent-set", "vertex-cover", "coloring"):
        g = _graph(path)
        if args.k is None:
            raise CliInputError(f"{kind} needs --k")
        cls = {
            "clique": cx.Clique,
            "independent-set": cx.IndependentSet,
            "vertex-cover": cx.VertexCover,
            "coloring": cx.Coloring,
        }[kind]
        return cls(g, args.k)
    if kind in ("exact-cover", "set-cover", "representatives"):
        universe, family, k = _set_system_from_json(_read(path))
        if kind == "exact-cover":
            return cx.ExactCover(universe, family)
        if kind == "representatives":
            return cx.Representatives(universe, family)
        if k is None and args.k is None:
            raise CliInputError("set-cover needs k")
        return cx.SetCover(universe, family, args.k if args.k is not None else k)
    if kind == "knapsack01":
        data = json.loads(_read(path))
        return cx.Knapsack01(tuple(data["numbers"]), int(data["target"]))
    if kind == "knapsack-decision":
        data = json.loads(_read(path))
        return cx.KnapsackDecision(
            tuple(data["values"]),
            tuple(data["volumes"]),
            int(data["capacity"]),
            int(data["goal"]),
        )
    if kind == "partition":
        return cx.Partition(tuple(_numbers_from_text(_read(path))))
    if kind in ("ham-circuit", "ham-cycle"):
        g = _graph(path)
        if kind == "ham-circuit":
            if not isinstance(g, gc.Digraph):
                raise CliInputError("ham-circuit needs a digraph")
            return cx.HamCircuit(g)
        return cx.HamCycle(g)
    if kind == "tsp":
        matrix = _matrix_from_text(_read(path))
        if args.limit is None:
            raise CliInputError("tsp needs --limit")
        return cx.Tsp(tuple(tuple(r) for r in matrix), args.limit)
    if kind == "ilp":
        data = json.loads(_read(path))
        return cx.Ilp(
            tuple(tuple(r) for r in data["rows"]),
            tuple(data["relations"]),
            tuple(data["rhs"]),
            tuple(tuple(b) for b in data["bounds"]),
        )
    raise CliInputError(f"unknown problem kind {kind!r}")


def _describe_instance(problem):
    if isinstance(problem, (cx.Sat, cx.ThreeSat)):
        return {"dimacs": cx.format_dimacs(problem.formula)}
    if isinstance(problem, (cx.Clique, cx.IndependentSet, cx.VertexCover, cx.Coloring)):
        return {"graph": gc.format_graph_text(problem.graph), "k": problem.k}
    if isinstance(problem, cx.ExactCover):
        return {
            "universe": [str(a) for a in problem.universe],
            "family": [sorted(str(a) for a in s) for s in problem.family],
        }
    if isinstance(problem, cx.Representatives):
        return {
            "universe": [str(a) for a in problem.universe],
            "family": [sorted(str(a) for a in s) for s in problem.family],
        }
    if isinstance(problem, cx.SetCover):
        return {
            "universe": [str(a) for a in problem.universe],
            "family": [sorted(str(a) for a in s) for s in problem.family],
            "k": problem.k,
        }
    if isinstance(problem, cx.Knapsack01):
        return {"numbers": list(problem.numbers), "target": problem.target}
    if isinstance(problem, cx.Partition):
        return {"numbers": list(problem.numbers)}
    if isinstance(problem, cx.HamCircuit):
        return {"digraph": gc.format_graph_text(problem.digraph)}
    if isinstance(problem, cx.HamCycle):
        return {"graph": gc.format_graph_text(problem.graph)}
    if isinstance(problem, cx.Tsp):
        return {"matrix": [list(r) for r in problem.matrix], "limit": problem.limit}
    if isinstance(problem, cx.Ilp):
        return {
            "rows": [list(r) for r in problem.rows],
            "relations": list(problem.relations),
            "rhs": list(problem.rhs),
            "bounds": [list(b) for b in problem.bounds],
        }
    return {"repr": repr(problem)}


_REDUCTIONS = {
    "sat-3sat": ("sat", lambda p: cx.sat_to_3sat(p.formula)),
    "sat-clique": ("sat", lambda p: cx.sat_to_clique(p.formula)),
    "3sat-coloring": ("3sat", lambda p: cx.threesat_to_coloring(p.formula)),
    "exactcover-knapsack": ("exact-cover", cx.exact_cover_to_knapsack01),
    "vc-hamcircuit": ("vertex-cover", cx.vc_to_ham_circuit),
    "clique-is": ("clique", lambda p: cx.apply_simple_reduction("CliqueToIS", p)),
    "is-vc": (
        "independent-set",
        lambda p: cx.apply_simple_reduction("ISToVC", p),
    ),
    "coloring-exactcover": (
        "coloring",
        lambda p: cx.apply_simple_reduction("ColoringToExactCover", p),
    ),
    "exactcover-representatives": (
        "exact-cover",
        lambda p: cx.apply_simple_reduction("ExactCoverToRepresentatives", p),
    ),
    "knapsack-partition": (
        "knapsack01",
        lambda p: cx.apply_simple_reduction("Knapsack01ToPartition", p),
    ),
    "vc-setcover": (
        "vertex-cover",
        lambda p: cx.apply_simple_reduction("VCToSetCover", p),
    ),
    "hamcircuit-hamcycle": (
        "ham-circuit",
        lambda p: cx.apply_simple_reduction("HamCircuitToHamCycle", p),
    ),
    "hamcycle-tsp": (
        "ham-cycle",
        lambda p: cx.apply_simple_reduction("HamCycleToTsp", p),
    ),
    "knapsack-ilp": (
        "knapsack01",
        lambda p: cx.apply_simple_reduction("Knapsack01ToIlp", p),
    ),
    "setcover-ilp": (
        "set-cover",
        lambda p: cx.apply_simple_reduction("SetCoverToIlp", p),
    ),
    "tsp-ilp": ("tsp", lambda p: cx.apply_simple_reduction("TspToIlp", p)),
}


def cmd_reduce(args) -> int:
    if args.kind not in _REDUCTIONS:
        raise CliInputError(f"unknown reduction kind {args.kind!r}")
    source_kind, run = _REDUCTIONS[args.kind]
    problem = _load_problem(source_kind, args.file, args)
    red = run(problem)
    payload = {"kind": args.kind, "target": _describe_instance(red.target)}
    if args.witness:
        w = json.loads(_read(args.witness))
        w = _coerce_witness(red.source, w)
        moved = red.forward(w)
        payload["witness"] = {
            "source": _encode_witness(w),
            "target": _encode_witness(moved),
            "target_accepts": cx.verify_witness(red.target, moved),
        }
    if args.oracle:
        src_w = cx.brute_force_decide(red.source)
        tgt_w = cx.brute_force_decide(red.target)
        table = {
            "source_decision": src_w is not None,
            "target_decision": tgt_w is not None,
        }
        if src_w is not None:
            moved = red.forward(src_w)
            table["forward"] = {
                "source_witness": _encode_witness(src_w),
                "target_witness": _encode_witness(moved),
                "target_accepts": cx.verify_witness(red.target, moved),
            }
        if tgt_w is not None:
            back = red.backward(tgt_w)
            table["backward"] = {
                "target_witness": _encode_witness(tgt_w),
                "source_witness": _encode_witness(back),
                "source_accepts": cx.verify_witness(red.source, back),
            }
        payload["oracle"] = table
    _emit(payload, args.format)
    return OK


def _coerce_witness(problem, w):
    if isinstance(problem, cx.Coloring):
        return {int(k): v for k, v in w.items()} if isinstance(w, dict) else w
    if isinstance(
        problem,
        (
            cx.Clique,
            cx.IndependentSet,
            cx.VertexCover,
            cx.ExactCover,
            cx.SetCover,
            cx.Partition,
        ),
    ):
        return set(w) if isinstance(w, list) else w
    if isinstance(problem, cx.Representatives):
        return set(w) if isinstance(w, list) else w
    return w


def _encode_witness(w):
    if isinstance(w, (set, frozenset)):
        return sorted(w)
    if isinstance(w, dict):
        return {str(k): v for k, v in w.items()}
    return w


def cmd_verify(args) -> int:
    problem = _load_problem(args.problem, args.instance, args)
    w = _coerce_witness(problem, json.loads(_read(args.witness)))
    try:
        accepted = cx.verify_witness(problem, w)
    except cx.WitnessFormatError as exc:
        raise CliInputError(f"malformed witness: {exc}") from exc
    _emit({"accepted": accepted}, args.format)
    return OK if accepted else NEGATIVE


def cmd_twosat(args) -> int:
    f = cx.parse_dimacs(_read(args.file))
    try:
        res = cx.twosat_solve(f)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    if res.satisfiable:
        _emit(
            {"satisfiable": True, "assignment": [int(b) for b in res.assignment]},
            args.format,
        )
        return OK
    _emit({"satisfiable": False, "conflict_variable": res.conflict_var}, args.format)
    return NEGATIVE


# --- approx -----------------------------------------------------------------


def cmd_approx(args) -> int:
    fmt = args.format
    algo = args.algorithm
    if algo in ("vc-matching", "vc-greedy", "maxcut"):
        g = _graph(args.file)
        if algo == "maxcut":
            chosen, cut = ax.max_cut_local_search(g)
            opt = ax.max_cut_optimum(g) if args.oracle else None
            report = ax.make_report(
                "max_cut_local_search",
                g.n,
                cut,
                opt,
                2,
                {"edges": sorted(g.edges)},
                maximize=True,
            )
            payload = json.loads(report.to_json())
            payload["cut_side"] = sorted(chosen)
        else:
            fn = ax.vc_matching_2approx if algo == "vc-matching" else ax.vc_degree_greedy
            cover = fn(g)
            opt = ax.vertex_cover_optimum(g) if args.oracle else None
            report = ax.make_report(
                algo.replace("-", "_"),
                g.n,
                len(cover),
                opt,
                2 if algo == "vc-matching" else None,
                {"edges": sorted(g.edges)},
            )
            payload = json.loads(report.to_json())
            payload["cover"] = sorted(cover)
        _emit(payload, fmt)
        return OK
    if algo == "setcover":
        universe, family, k = _set_system_from_json(_read(args.file))
        chosen = ax.set_cover_greedy(universe, family)
        opt = ax.set_cover_optimum(universe, family) if args.oracle else None
        biggest = max((len(s) for s in family), default=0)
        from .intmath import harmonic

        report = ax.make_report(
            "set_cover_greedy",
            len(universe),
            len(chosen),
            opt,
            harmonic(max(1, biggest)),
            {"family": [sorted(map(str, s)) for s in family]},
        )
        payload = json.loads(report.to_json())
        payload["chosen"] = chosen
        _emit(payload, fmt)
        return OK
    if algo in ("tsp-doubletree", "tsp-christofides"):
        matrix = _matrix_from_text(_read(args.file))
        inst = ax.MetricTspInstance(matrix)
        fn = ax.tsp_double_tree if algo == "tsp-doubletree" else ax.tsp_christofides
        tour = fn(inst)
        length = inst.tour_length(tour)
        opt = ax.tsp_optimum(inst.matrix) if args.oracle else None
        report = ax.make_report(
            algo.replace("-", "_"),
            inst.n,
            length,
            opt,
            2 if algo == "tsp-doubletree" else Fraction(3, 2),
            {"matrix": [list(r) for r in inst.matrix]},
        )
        payload = json.loads(report.to_json())
        payload["tour"] = tour
        _emit(payload, fmt)
        return OK
    if algo == "knapsack-fptas":
        values, volumes, cap = dp.load_knapsack_json(_read(args.file))
        eps = Fraction(args.eps)
        chosen, value = ax.knapsack_fptas(values, volumes, cap, eps)
        opt = ax.knapsack_optimum(values, volumes, cap) if args.oracle else None
        report = ax.make_report(
            "knapsack_fptas",
            len(values),
            value,
            opt,
            1 + eps,
            {"values": values, "volumes": volumes, "capacity": cap},
            maximize=True,
        )
        payload = json.loads(report.to_json())
        payload["items"] = sorted(chosen)
        payload["eps"] = str(eps)
        _emit(payload, fmt)
        return OK
    if algo == "binpack":
        sizes = _read(args.file).split()
        assignment = ax.bin_pack_first_fit(sizes)
        bins = max(assignment, default=0)
        opt = ax.bin_pack_optimum(sizes) if args.oracle else None
        report = ax.make_report(
            "bin_pack_first_fit", len(sizes), bins, opt, 2, {"sizes": sizes}
        )
        payload = json.loads(report.to_json())
        payload["assignment"] = assignment
        _emit(payload, fmt)
        return OK
    raise CliInputError(f"unknown approx algorithm {algo!r}")


# --- bench -------------------------------------------------------------------


def _bench_sorting(args):
    rng = random.Random(args.seed)
    rows = []
    for n in range(1, args.n_max + 1):
        budgets = srt.sort_budgets(n)
        measured = 0
        for _ in range(args.trials):
            items = list(range(n))
            rng.shuffle(items)
            cmp = counting_comparator(items)
            srt.merge_insertion_sort(items, cmp)
            measured = max(measured, cmp.count)
        rows.append(
            {
                "n": n,
                "info_lower": budgets.info_lower,
                "bound": budgets.f_n,
                "measured": measured,
                "within_bound": measured <= budgets.f_n,
            }
        )
    return {"suite": "sorting", "seed": args.seed, "rows": rows}


def _bench_selection(args):
    rng = random.Random(args.seed)
    rows = []
    for n in range(2, args.n_max + 1, max(1, args.n_max // 16)):
        t = max(1, n // 2)
        bound = n - t + (t - 1) * ceil_log2(n + 2 - t)
        measured = 0
        for _ in range(args.trials):
            items = rng.sample(range(10 * n), n)
            cmp = counting_comparator(items)
            trn.select_t_tournament(items, t, cmp)
            measured = max(measured, cmp.count)
        rows.append(
            {"n": n, "t": t, "bound": bound, "measured": measured,
             "within_bound": measured <= bound}
        )
    return {"suite": "selection", "seed": args.seed, "rows": rows}


def _bench_search(args):
    rows = []
    for n in range(1, args.n_max + 1):
        ball_bound = ceil_log2(n)
        worst_ball = 0
        for hot in range(1, n + 1):
            calls = 0

            def tester(subset, hot=hot):
                nonlocal calls
                calls += 1
                return hot in subset

            assert sg.find_radioactive(n, tester) == hot
            worst_ball = max(worst_ball, calls)
        coin_bound = ceil_log3(2 * n + 1)
        worst_coin = 0
        for world in _coin_worlds(n):
            oracle = sg.BalanceOracle(n, world)
            assert sg.find_counterfeit(n, oracle.weigh) == world
            worst_coin = max(worst_coin, oracle.count)
        rows.append(
            {
                "n": n,
                "ball_bound": ball_bound,
                "ball_measured": worst_ball,
                "coin_bound": coin_bound,
                "coin_measured": worst_coin,
                "within_bound": worst_ball <= ball_bound and worst_coin <= coin_bound,
            }
        )
    return {"suite": "search", "seed": args.seed, "rows": rows}


def _coin_worlds(n):
    yield sg.ALL_GENUINE
    for i in range(1, n + 1):
        yield sg.CoinVerdict(i, sg.HEAVIER)
        yield sg.CoinVerdict(i, sg.LIGHTER)


def _bench_approx(args):
    rows = []
    for trial in range(args.trials):
        seed = args.seed * 1000 + trial
        n = 5 + (trial % 4)
        inst = ax.random_metric_instance(n, seed)
        opt = ax.tsp_optimum(inst.matrix)
        for name, fn, bound in (
            ("tsp_double_tree", ax.tsp_double_tree, 2),
            ("tsp_christofides", ax.tsp_christofides, Fraction(3, 2)),
        ):
            length = inst.tour_length(fn(inst))
            report = ax.make_report(
                name, n, length, opt, bound,
                {"matrix": [list(r) for r in inst.matrix]}, seed=seed,
            )
            rows.append(json.loads(report.to_json()))
    rows.sort(key=lambda r: (r["algorithm"], r["seed"], r["n"]))
    return {"suite": "approx", "seed": args.seed, "rows": rows}


_BENCHES = {
    "sorting": _bench_sorting,
    "selection": _bench_selection,
    "search": _bench_search,
    "approx": _bench_approx,
}


def cmd_bench(args) -> int:
    payload = _BENCHES[args.suite](args)
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, default=_json_default))
    else:
        rows = payload["rows"]
        if rows:
            cols = sorted(rows[0])
            print("\t".join(cols))
            for row in rows:
                print("\t".join(str(row[c]) for c in cols))
    bad = [r for r in payload["rows"] if r.get("within_bound") is False]
    return NEGATIVE if bad else OK


# --- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    fam = args.family
    if fam in ("graph", "digraph"):
        n = args.n
        if fam == "graph":
            edges = [
                (u, v)
                for u in range(1, n + 1)
                for v in range(u + 1, n + 1)
                if rng.random() < args.density
            ]
            print(gc.format_graph_text(gc.Graph(n, edges)), end="")
        else:
            arcs = [
                (u, v)
                for u in range(1, n + 1)
                for v in range(1, n + 1)
                if u != v and rng.random() < args.density
            ]
            print(gc.format_graph_text(gc.Digraph(n, arcs)), end="")
        return OK
    if fam == "metric":
        inst = ax.random_metric_instance(args.n, args.seed)
        for row in inst.matrix:
            print(" ".join(str(x) for x in row))
        return OK
    if fam == "gap":
        n = args.n
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < args.density
        ]
        matrix = ax.tsp_gap_instance(gc.Graph(n, edges), Fraction(args.eps))
        for row in matrix:
            print(" ".join(str(x) for x in row))
        return OK
    if fam == "knapsack":
        values = [rng.randint(1, 300) for _ in range(args.n)]
        volumes = [rng.randint(1, 50) for _ in range(args.n)]
        cap = max(1, sum(volumes) // 2)
        print(dp.dump_knapsack_json(values, volumes, cap))
        return OK
    if fam == "numbers":
        print(" ".join(str(x) for x in rng.sample(range(10 * args.n), args.n)))
        return OK
    if fam == "counterexample":
        print(gc.format_graph_text(ax.vc_greedy_counterexample(args.n)), end="")
        return OK
    raise CliInputError(f"unknown generator family {fam!r}")


# --- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combinlab",
        description="Combinatorial algorithms laboratory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="run a graph/DP/search solver on a file")
    p.add_argument("problem")
    p.add_argument("file")
    p.add_argument("--source", type=int, default=1)
    p.add_argument("--target", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("sort", help="sort a number file with a counted algorithm")
    p.add_argument("algorithm", choices=sorted(_SORTERS))
    p.add_argument("file")
    p.add_argument("--count", action="store_true")
    add_common(p)
    p.set_defaults(fn=cmd_sort)

    p = sub.add_parser("select", help="select the t-th largest")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument(
        "--algorithm", choices=("tournament", "linear"), default="tournament"
    )
    p.add_argument("--count", action="store_true")
    add_common(p)
    p.set_defaults(fn=cmd_select)

    p = sub.add_parser("reduce", help="compile an instance into another problem")
    p.add_argument("kind", choices=sorted(_REDUCTIONS))
    p.add_argument("file")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--witness", default=None, help="JSON witness to transport")
    p.add_argument("--oracle", action="store_true")
    add_common(p)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("problem")
    p.add_argument("instance")
    p.add_argument("witness")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("twosat", help="solve a DIMACS 2-CNF file")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(fn=cmd_twosat)

    p = sub.add_parser("approx", help="run an approximation algorithm")
    p.add_argument(
        "algorithm",
        choices=(
            "vc-matching",
            "vc-greedy",
            "setcover",
            "tsp-doubletree",
            "tsp-christofides",
            "maxcut",
            "knapsack-fptas",
            "binpack",
        ),
    )
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--eps", default="1/2")
    add_common(p)
    p.set_defaults(fn=cmd_approx)

    p = sub.add_parser("bench", help="run a bound-vs-measured suite")
    p.add_argument("suite", choices=sorted(_BENCHES))
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--trials", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("gen", help="generate an instance file")
    p.add_argument(
        "family",
        choices=(
            "graph",
            "digraph",
            "metric",
            "gap",
            "knapsack",
            "numbers",
            "counterexample",
        ),
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--eps", default="1")
    add_common(p)
    p.set_defaults(fn=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except cx.InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return TOO_LARGE
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
