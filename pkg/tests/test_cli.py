from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from nstree import Graph, RootedTree, is_normal
from nstree.cli import main
from nstree.io import dumps, graph_to_obj, tree_to_obj

DST_EDGES = "\n".join(
    f"{u} {v}"
    for u, v in [
        (1, 4), (4, 2), (1, 5), (5, 2),
        (1, 6), (6, 3), (1, 7), (7, 3),
        (2, 8), (8, 3), (2, 9), (9, 3),
    ]
) + "\n"


@pytest.fixture()
def k4_file(tmp_path):
    g = Graph(edges=[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    path = tmp_path / "k4.json"
    path.write_text(dumps(graph_to_obj(g)))
    return str(path)


@pytest.fixture()
def dst_file(tmp_path):
    path = tmp_path / "dst.txt"
    path.write_text(DST_EDGES)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_nst_json(capsys, k4_file):
    code, out = run(capsys, ["nst", "--input", k4_file, "--root", "1"])
    assert code == 0
    obj = json.loads(out)
    assert obj == {"root": 1, "parent": {"2": 1, "3": 2, "4": 3}}


def test_nst_dot(capsys, k4_file):
    code, out = run(capsys, ["nst", "--input", k4_file, "--root", "1", "--format", "dot"])
    assert code == 0
    assert out.startswith("graph {")
    assert '"1" [shape=doublecircle];' in out


def test_omega_from_generator(capsys):
    code, out = run(capsys, ["omega", "--gen", "grid", "--radius", "3", "--root", "0"])
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "spanning"
    assert obj["tree"]["root"] == 0


def test_omega_budget_reported(capsys, k4_file):
    code, out = run(capsys, ["omega", "--input", k4_file, "--root", "1", "--budget", "0"])
    assert code == 0
    assert json.loads(out)["status"] == "budget-exhausted"


def test_local_targets(capsys, dst_file):
    code, out = run(capsys, ["local", "--input", dst_file, "--root", "1", "--targets", "8"])
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] in ("target-covered", "spanning")
    assert "8" in obj["tree"]["parent"]


def test_cover_nst(capsys, tmp_path, k4_file):
    cover = tmp_path / "cover.json"
    cover.write_text('{"cover": [[1, 2], [3, 4]]}')
    code, out = run(
        capsys, ["cover-nst", "--input", k4_file, "--root", "1", "--cover", str(cover)]
    )
    assert code == 0
    assert json.loads(out)["status"] == "spanning"


def test_levels(capsys, tmp_path):
    tree = tmp_path / "tree.json"
    tree.write_text(dumps(tree_to_obj(RootedTree(0, {1: 0, 2: 0, 3: 1}))))
    code, out = run(capsys, ["levels", "--tree", str(tree)])
    assert code == 0
    assert json.loads(out) == {"levels": [[0], [1, 2], [3]]}


def test_check_normal_accepts(capsys, tmp_path, k4_file):
    tree = tmp_path / "tree.json"
    tree.write_text(dumps(tree_to_obj(RootedTree(1, {2: 1, 3: 2, 4: 3}))))
    code, out = run(capsys, ["check-normal", "--input", k4_file, "--tree", str(tree)])
    assert code == 0
    assert json.loads(out) == {"normal": True, "witness": None}


def test_check_normal_rejects_with_witness(capsys, tmp_path):
    g = tmp_path / "c4.txt"
    g.write_text("1 2\n2 3\n3 4\n1 4\n")
    tree = tmp_path / "tree.json"
    tree.write_text(dumps(tree_to_obj(RootedTree(1, {2: 1, 4: 1}))))
    code, out = run(capsys, ["check-normal", "--input", str(g), "--tree", str(tree)])
    assert code == 1
    obj = json.loads(out)
    assert obj["normal"] is False
    assert sorted(obj["witness"]["ends"]) == [2, 4]
    assert obj["witness"]["path"] == [2, 3, 4]


def test_kappa(capsys, k4_file):
    code, out = run(capsys, ["kappa", "--input", k4_file, "--pair", "1", "2"])
    assert code == 0
    obj = json.loads(out)
    assert obj["kappa"] == 3
    assert obj["paths"] == [[1, 2], [1, 3, 2], [1, 4, 2]]


def test_separator(capsys, dst_file):
    code, out = run(capsys, ["separator", "--input", dst_file, "--a", "1", "--b", "2"])
    assert code == 0
    obj = json.loads(out)
    assert obj["size"] == 3


def test_separator_inseparable_exit_1(capsys, k4_file):
    code, out = run(capsys, ["separator", "--input", k4_file, "--a", "1", "--b", "2"])
    assert code == 1
    assert json.loads(out)["inseparable"] is True


def test_fat_tk_find_pipes_into_verify(capsys, tmp_path, dst_file):
    code, out = run(
        capsys, ["fat-tk-find", "--input", dst_file, "--branch", "1,2,3", "--m", "2"]
    )
    assert code == 0
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    code, out = run(
        capsys, ["fat-tk-verify", "--input", dst_file, "--cert", str(cert)]
    )
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_fat_tk_find_failure_exit_1(capsys, dst_file):
    code, out = run(
        capsys, ["fat-tk-find", "--input", dst_file, "--branch", "1,2,3", "--m", "3"]
    )
    assert code == 1
    obj = json.loads(out)
    assert obj["found"] is False
    assert obj["separator"] == [4, 5]


def test_fat_tk_verify_rejects_exit_1(capsys, tmp_path, dst_file):
    cert = tmp_path / "cert.json"
    cert.write_text(
        json.dumps({"branch": [1, 2], "m": 1, "paths": {"1,2": [[1, 2]]}})
    )
    code, out = run(capsys, ["fat-tk-verify", "--input", dst_file, "--cert", str(cert)])
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_dispersed_exit_codes(capsys, tmp_path, dst_file):
    pendant = tmp_path / "pendant.txt"
    pendant.write_text(DST_EDGES + "1 10\n")
    code, out = run(
        capsys,
        ["dispersed", "--input", str(pendant), "--probe", "10",
         "--n", "3", "--m", "2", "--s", "1"],
    )
    assert code == 0
    assert json.loads(out)["dispersed"] is True
    code, out = run(
        capsys,
        ["dispersed", "--input", dst_file, "--probe", "1,2,3",
         "--n", "3", "--m", "2", "--s", "1"],
    )
    assert code == 1
    assert json.loads(out)["dispersed"] is False


def test_gen_list(capsys):
    code, out = run(capsys, ["gen-list"])
    assert code == 0
    assert json.loads(out) == {
        "generators": ["binary-tree", "double-ray", "fat-tk-gen(n,m)", "grid", "ray"]
    }


def test_fat_tk_generator_argument_form(capsys):
    code, out = run(
        capsys, ["omega", "--gen", "fat-tk-gen(3,2)", "--radius", "2", "--root", "0"]
    )
    assert code == 0
    assert json.loads(out)["status"] in ("spanning", "budget-exhausted")


@pytest.mark.parametrize(
    "argv",
    [
        ["nst", "--root", "1"],  # no graph source
        ["nst", "--gen", "grid", "--root", "0"],  # missing radius
        ["nst", "--gen", "no-such", "--radius", "2", "--root", "0"],
        ["nst", "--input", "/nonexistent.json", "--root", "1"],
        ["kappa", "--gen", "grid", "--radius", "2", "--pair", "0", "999"],
        ["separator", "--gen", "grid", "--radius", "2", "--a", "0", "--b", "x"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code = main(argv)
    err = capsys.readouterr().err
    assert code == 2
    assert err.startswith("error:")


def test_both_sources_rejected(capsys, k4_file):
    code = main(["nst", "--input", k4_file, "--gen", "grid", "--radius", "2", "--root", "1"])
    assert code == 2
    assert "not both" in capsys.readouterr().err


def _run_proc(argv, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-c",
         "import sys; from nstree.cli import main; sys.exit(main(sys.argv[1:]))",
         *argv],
        capture_output=True,
        text=True,
        env=env,
    )


def test_repeated_runs_are_byte_identical():
    argv = ["omega", "--gen", "grid", "--radius", "4", "--root", "0"]
    first = _run_proc(argv)
    second = _run_proc(argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_log_modes():
    argv = ["omega", "--gen", "grid", "--radius", "2", "--root", "0"]
    quiet = _run_proc(argv, {"NTK_LOG": "off"})
    steps = _run_proc(argv, {"NTK_LOG": "steps"})
    full = _run_proc(argv, {"NTK_LOG": "full"})
    assert quiet.stderr == ""
    assert steps.stderr != ""
    assert len(full.stderr) > len(steps.stderr)
    assert quiet.stdout == steps.stdout == full.stdout


def test_unknown_log_mode_warns():
    out = _run_proc(["gen-list"], {"NTK_LOG": "loud"})
    assert out.returncode == 0
    assert "unknown NTK_LOG" in out.stderr
