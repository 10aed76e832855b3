import json

import pytest

from combinlab.cli import main

K5 = "p 5 10\n" + "\n".join(
    f"e {u} {v}" for u in range(1, 6) for v in range(u + 1, 6)
) + "\n"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_euler_k5(tmp_path, capsys):
    path = tmp_path / "k5.g"
    path.write_text(K5)
    code, out, _ = run(capsys, ["solve", "euler", str(path), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["eulerian"] is True
    assert len(data["cycle"]) == 11


def test_solve_euler_negative(tmp_path, capsys):
    path = tmp_path / "p.g"
    path.write_text("p 2 1\ne 1 2\n")
    code, out, _ = run(capsys, ["solve", "euler", str(path), "--format", "json"])
    assert code == 1
    assert json.loads(out)["reason"] == "OddDegree"


def test_solve_missing_file(capsys):
    code, _, err = run(capsys, ["solve", "euler", "/nonexistent.g"])
    assert code == 2 and "error" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_sort_with_count(tmp_path, capsys):
    path = tmp_path / "nums.txt"
    path.write_text("5 3 9 1 4 8 2\n")
    code, out, _ = run(
        capsys, ["sort", "mergeinsertion", str(path), "--count", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["sorted"] == [1, 2, 3, 4, 5, 8, 9]
    assert data["comparisons"] <= data["budget"]


def test_select_linear(tmp_path, capsys):
    path = tmp_path / "nums.txt"
    path.write_text(" ".join(str(x) for x in range(50, 0, -1)))
    code, out, _ = run(
        capsys,
        ["select", str(path), "--t", "3", "--algorithm", "linear", "--format", "json"],
    )
    assert code == 0
    assert json.loads(out)["value"] == 48


def test_twosat_sat_and_unsat(tmp_path, capsys):
    sat = tmp_path / "sat.cnf"
    sat.write_text("p cnf 2 2\n1 2 0\n-1 2 0\n")
    code, out, _ = run(capsys, ["twosat", str(sat), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["satisfiable"] is True
    assert data["assignment"][1] == 1

    unsat = tmp_path / "unsat.cnf"
    unsat.write_text("p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = run(capsys, ["twosat", str(unsat), "--format", "json"])
    assert code == 1
    assert json.loads(out)["conflict_variable"] == 1


def test_reduce_with_oracle_and_witness_roundtrip(tmp_path, capsys):
    cnf_path = tmp_path / "f.cnf"
    cnf_path.write_text("p cnf 2 2\n1 2 0\n-1 2 0\n")
    code, out, _ = run(
        capsys,
        ["reduce", "sat-clique", str(cnf_path), "--oracle", "--format", "json"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["oracle"]["source_decision"] is True
    assert data["oracle"]["target_decision"] is True
    assert data["oracle"]["forward"]["target_accepts"] is True
    assert data["oracle"]["backward"]["source_accepts"] is True


def test_reduce_knapsack_partition(tmp_path, capsys):
    src = tmp_path / "k.json"
    src.write_text('{"numbers": [1, 2], "target": 2}')
    wit = tmp_path / "w.json"
    wit.write_text("[0, 1]")
    code, out, _ = run(
        capsys,
        [
            "reduce",
            "knapsack-partition",
            str(src),
            "--witness",
            str(wit),
            "--format",
            "json",
        ],
    )
    assert code == 0
    data = json.loads(out)
    assert data["target"]["numbers"] == [1, 2, 4, 3]
    assert data["witness"]["target_accepts"] is True


def test_verify_vertex_cover(tmp_path, capsys):
    g = tmp_path / "g.g"
    g.write_text("p 3 2\ne 1 2\ne 2 3\n")
    w = tmp_path / "w.json"
    w.write_text("[2]")
    code, out, _ = run(
        capsys,
        ["verify", "vertex-cover", str(g), str(w), "--k", "1", "--format", "json"],
    )
    assert code == 0 and json.loads(out)["accepted"] is True

    w.write_text("[3]")
    code, out, _ = run(
        capsys,
        ["verify", "vertex-cover", str(g), str(w), "--k", "1", "--format", "json"],
    )
    assert code == 1 and json.loads(out)["accepted"] is False


def test_verify_accepts_solver_output(tmp_path, capsys):
    # witnesses produced by reduce --oracle pass verify
    sc = tmp_path / "sc.json"
    sc.write_text('{"universe": [1, 2, 3], "family": [[1, 2], [3], [1]], "k": 2}')
    code, out, _ = run(
        capsys, ["reduce", "setcover-ilp", str(sc), "--oracle", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["oracle"]["forward"]["target_accepts"] is True


def test_approx_oracle_report(tmp_path, capsys):
    g = tmp_path / "g.g"
    g.write_text("p 3 2\ne 1 2\ne 2 3\n")
    code, out, _ = run(
        capsys, ["approx", "vc-matching", str(g), "--oracle", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["heuristic"] == 2 and data["optimal"] == 1
    assert data["ratio"] == "2/1" or data["ratio"] == 2


def test_approx_binpack(tmp_path, capsys):
    f = tmp_path / "sizes.txt"
    f.write_text("0.5 0.5 0.5 0.5\n")
    code, out, _ = run(
        capsys, ["approx", "binpack", str(f), "--oracle", "--format", "json"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["heuristic"] == 2 and data["optimal"] == 2


def test_bench_deterministic(capsys):
    code1, out1, _ = run(
        capsys, ["bench", "sorting", "--n-max", "10", "--seed", "5", "--format", "json"]
    )
    code2, out2, _ = run(
        capsys, ["bench", "sorting", "--n-max", "10", "--seed", "5", "--format", "json"]
    )
    assert code1 == code2 == 0
    assert out1 == out2
    rows = json.loads(out1)["rows"]
    assert all(r["measured"] <= r["bound"] for r in rows)
    assert all(r["info_lower"] <= r["bound"] for r in rows)


def test_bench_search_suite(capsys):
    code, out, _ = run(
        capsys, ["bench", "search", "--n-max", "6", "--format", "json"]
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert all(r["within_bound"] for r in rows)


def test_gen_deterministic_and_parsable(capsys, tmp_path):
    code1, out1, _ = run(capsys, ["gen", "graph", "--n", "8", "--seed", "3"])
    code2, out2, _ = run(capsys, ["gen", "graph", "--n", "8", "--seed", "3"])
    assert code1 == code2 == 0 and out1 == out2
    from combinlab.graph_core import parse_graph_text

    g = parse_graph_text(out1)
    assert g.n == 8

    code, out, _ = run(capsys, ["gen", "metric", "--n", "5", "--seed", "1"])
    assert code == 0
    from combinlab.approx import MetricTspInstance

    MetricTspInstance([[int(x) for x in row.split()] for row in out.splitlines()])


def test_size_limit_exit_code(tmp_path, capsys):
    big = tmp_path / "big.cnf"
    clauses = "\n".join(f"{i} 0" for i in range(1, 25))
    big.write_text(f"p cnf 24 24\n{clauses}\n")
    code, out, err = run(
        capsys, ["reduce", "sat-clique", str(big), "--oracle", "--format", "json"]
    )
    assert code == 3
