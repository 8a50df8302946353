import subprocess
import sys

import pytest

from graphburn.burnsim import load_schedule, verify_schedule
from graphburn.cli import main
from graphburn.gen import gen_complete, gen_path
from graphburn.graph import dump_edge_list, load_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_burn_path9(write, capsys, tmp_path):
    f = write("p9.txt", dump_edge_list(gen_path(9)))
    out_sched = tmp_path / "sched.txt"
    assert main(["burn", f, "--trace", "--schedule-out", str(out_sched)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[:2] == ["n=9", "k=8"]
    assert "valid: true" in out
    assert any(line.startswith("j=7 case=") for line in out)
    sched = load_schedule(out_sched.read_text())
    assert verify_schedule(gen_path(9), 8, sched).valid


def test_burn_single_vertex(write, capsys):
    assert main(["burn", write("k1.txt", "1 0\n")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "k=6" in out and "completion=1" in out


def test_burn_disconnected(write, capsys):
    assert main(["burn", write("d.txt", "3 1\n0 1\n")]) == 2


def test_burn_parse_error(write, capsys):
    assert main(["burn", write("bad.txt", "3 2\n0 1\n0 1\n")]) == 1
    assert main(["burn", "/nonexistent/file"]) == 1
    assert "graphburn:" in capsys.readouterr().err


def test_burn_root_option(write, capsys):
    f = write("k5.txt", dump_edge_list(gen_complete(5)))
    assert main(["burn", f, "--root", "3"]) == 0
    assert main(["burn", f, "--root", "9"]) == 1


@pytest.mark.parametrize("graph, b", [(gen_path(9), 3), (gen_complete(5), 2), (gen_path(16), 4)])
def test_exact(write, capsys, graph, b):
    assert main(["exact", write("g.txt", dump_edge_list(graph))]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == f"b={b}"
    witness = load_schedule("\n".join(out[1:]))
    assert verify_schedule(graph, b, witness, "strict").valid


def test_exact_limits(write, capsys):
    f = write("p16.txt", dump_edge_list(gen_path(16)))
    assert main(["exact", f, "--max-k", "3"]) == 4
    assert main(["exact", f, "--limit", "10"]) == 4
    assert main(["exact", write("p30.txt", dump_edge_list(gen_path(30))), "--limit", "30"]) == 0


def test_verify(write, capsys):
    g = write("p9.txt", dump_edge_list(gen_path(9)))
    good = write("s.txt", "1 2\n2 6\n3 8\n")
    assert main(["verify", g, good, "--k", "3"]) == 0
    assert main(["verify", g, good, "--k", "3", "--strict"]) == 0
    # greedy fill after lighting 0 finishes in round 5
    lone = write("s0.txt", "1 0\n")
    capsys.readouterr()
    assert main(["verify", g, lone, "--k", "2"]) == 5
    assert "completion=5" in capsys.readouterr().out
    assert main(["verify", g, write("s9.txt", "1 9\n"), "--k", "3"]) == 1
    assert main(["verify", g, write("sbad.txt", "2 1\n1 0\n"), "--k", "3"]) == 1


def test_verify_strict_collision(write):
    g = write("p3.txt", dump_edge_list(gen_path(3)))
    assert main(["verify", g, write("s.txt", "1 0\n2 1\n"), "--k", "5", "--strict"]) == 5
    assert main(["verify", g, write("s.txt", "1 0\n2 1\n"), "--k", "5"]) == 0


def test_bound(capsys):
    assert main(["bound", "100"]) == 0
    assert capsys.readouterr().out.splitlines() == ["n=100", "new=15", "land_lu=12", "ceil_sqrt=10"]
    assert main(["bound", "0"]) == 1


def test_gen(capsys):
    assert main(["gen", "path", "3"]) == 0
    assert load_edge_list(capsys.readouterr().out) == gen_path(3)
    assert main(["gen", "spider", "--legs", "2,2,2"]) == 0
    assert load_edge_list(capsys.readouterr().out).n == 7
    assert main(["gen", "caterpillar", "--legs", "1,0,2"]) == 0
    assert load_edge_list(capsys.readouterr().out).n == 6
    assert main(["gen", "random-tree", "50", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    main(["gen", "random-tree", "50", "--seed", "4"])
    assert capsys.readouterr().out == first


def test_bench_path(capsys):
    assert main(["bench", "--family", "path", "--sizes", "100"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,seed,family,k_bound_new,completion_round,bound_landlu,ceil_sqrt_n,valid"
    row = lines[1].split(",")
    assert row[0] == "100" and row[3] == "15" and row[6] == "10" and row[7] == "true"


def test_bench_random_trees(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--family", "random-tree", "--sizes", "1000", "--seeds", "1..10", "--csv", str(out)]) == 0
    rows = out.read_text().splitlines()[1:]
    assert len(rows) == 10
    assert all(r.endswith(",true") for r in rows)
    first = out.read_bytes()
    main(["bench", "--family", "random-tree", "--sizes", "1000", "--seeds", "1..10", "--csv", str(out)])
    assert out.read_bytes() == first


def test_bench_empty_sizes(capsys):
    assert main(["bench", "--sizes", ""]) == 0
    assert capsys.readouterr().out == "n,seed,family,k_bound_new,completion_round,bound_landlu,ceil_sqrt_n,valid\n"


def test_bench_unwritable(capsys):
    assert main(["bench", "--sizes", "10", "--csv", "/nonexistent/dir/out.csv"]) == 1


def test_module_entry_point(tmp_path):
    f = tmp_path / "p9.txt"
    f.write_text(dump_edge_list(gen_path(9)))
    proc = subprocess.run([sys.executable, "-m", "graphburn", "burn", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "valid: true" in proc.stdout
