import json
import subprocess
import sys
from pathlib import Path

import pytest

from qverona.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


@pytest.mark.parametrize(
    "argv,golden",
    [
        ("center --n 3 --m 2 --v 2 --deg 4", "center_3_2_2.json"),
        ("basis --n 2 --m 2 --v 1", "basis_2_2_1.json"),
        ("discriminant --n 3 --m 2 --v 2 --p 1 --check-theorem --stability 3", "discriminant_3_2_2.json"),
        ("free-check --n 3 --m 2 --v 1 --maxlen 4", "free_check_3_2_1.json"),
        ("verify-all", "verify_all_default.json"),
    ],
)
def test_golden_output(argv, golden, capsys):
    code, out = run(argv.split(), capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_center_examples(capsys):
    _, rep = run_json("center --n 3 --m 2 --v 2 --deg 4".split(), capsys)
    assert rep["schema"] == "qverona/1"
    assert [2, 0, 0] in rep["monomials"] and rep["oracle_agreement"]
    _, rep = run_json("center --n 2 --m 2 --v 1 --deg 0".split(), capsys)
    assert rep["monomials"] == [[0, 0]]


@pytest.mark.parametrize("argv", ["center --n 1 --m 2", "basis --n 2 --m 1", "center --n 2 --m 2 --v 0"])
def test_invalid_parameters_exit_nonzero(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv.split())
    assert exc.value.code != 0


@pytest.mark.parametrize(
    "argv,exponent",
    [
        ("--n 3 --m 2 --v 2 --p 1", [4, 4, 4]),
        ("--n 2 --m 2 --v 1 --p 1", [4, 4]),
        ("--n 3 --m 2 --v 1 --p 1", [0, 0, 0]),
    ],
)
def test_discriminant_examples(argv, exponent, capsys):
    code, rep = run_json(["discriminant", "--check-theorem", *argv.split()], capsys)
    assert code == 0
    assert rep["exponent"] == exponent and rep["theorem_match"]


def test_free_check_examples(capsys):
    code, rep = run_json("free-check --n 2 --m 2 --v 2 --maxlen 3".split(), capsys)
    assert code == 0 and rep["collapsing"] == [] and rep["words_checked"] == 52
    code, _ = run("free-check --n 3 --m 2 --v 2".split(), capsys)
    assert code == 2


def test_auto_verify(capsys):
    code, rep = run_json("auto-verify --n 3 --m 2 --v 1".split(), capsys)
    assert code == 0
    names = [a["auto"] for a in rep["automorphisms"]]
    assert "exp_d1" in names and "exp_d3" in names
    assert all(a["homomorphism"] and a["discriminant_invariant"] for a in rep["automorphisms"])


def test_verify_all_grid_semantics(capsys):
    _, rep = run_json(["verify-all", "--ns", ""], capsys)
    assert rep["cells"] == [] and rep["ok"]
    code, rep = run_json("verify-all --ns 3 --ms 4 --vs 6 --ps 1".split(), capsys)
    (cell,) = rep["cells"]
    assert code == 0 and cell["status"] == "skipped" and "seconds" not in cell


def test_verify_all_parallel_is_deterministic(capsys):
    argv = "verify-all --ns 2,3 --ms 2,3 --vs 1,2 --ps 1,2".split()
    _, serial = run(argv, capsys)
    _, parallel = run(argv + ["--jobs", "3"], capsys)
    assert serial == parallel


def test_table_format(capsys):
    code, out = run("discriminant --n 2 --m 2 --v 1 --format table".split(), capsys)
    assert code == 0 and "exponent: [4, 4]" in out


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "qverona", "basis", "--n", "3", "--m", "2", "--v", "2"],
        capture_output=True, text=True, check=True,
    ).stdout
    assert json.loads(out)["w"] == 4
