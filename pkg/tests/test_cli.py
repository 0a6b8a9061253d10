import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from mlmkit.cli import cli_dispatch, main

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted((GOLDEN / "cases").glob("*.txt"))


def load_case(path):
    text = path.read_text()
    cmd, status, stdout = text.split("\n", 2)
    assert cmd.startswith("$ mlmkit ") and status.startswith("[exit ")
    return shlex.split(cmd[len("$ mlmkit "):]), int(status[6:-1]), stdout


@pytest.fixture
def in_golden(monkeypatch):
    monkeypatch.chdir(GOLDEN)
    monkeypatch.delenv("MLMKIT_BUDGET", raising=False)


@pytest.mark.parametrize("path", CASES, ids=lambda p: p.stem)
def test_golden(path, in_golden):
    argv, status, stdout = load_case(path)
    assert cli_dispatch(argv) == (status, stdout)


def test_enough_golden_cases():
    assert len(CASES) >= 15
    assert any("--seed" in p.read_text() for p in CASES)


def test_seeded_run_is_repeatable(in_golden):
    argv = ["estimate", "--graph", "inputs/sparse.bigraph", "--backend", "mc", "--samples", "3000", "--seed", "9"]
    assert cli_dispatch(argv) == cli_dispatch(argv)


@pytest.mark.parametrize(
    "argv,status",
    [
        (["coeff", "inputs/square.poly", "--monomial", "x1*x1"], 1),
        (["coeff", "inputs/square.poly", "--monomial", "x1*x7"], 1),
        (["table", "inputs/missing.poly"], 1),
        (["oracle", "inputs/square.circ"], 1),
        (["estimate", "inputs/mixed.poly", "--monomial", "x1*x3"], 1),
        (["hybrid", "inputs/hybrid.poly", "--split", "5", "--monomial", "x1"], 1),
        (["gen", "kpath", "inputs/path3.graph"], 1),
        (["gen", "2sat", "inputs/identity.csv"], 1),
        (["perm", "--matrix", "inputs/k33.bigraph"], 1),
        (["bogus"], 1),
        ([], 1),
        (["maxmlm", "inputs/maxmlm.poly", "--mode", "exact", "--limit", "3"], 2),
    ],
)
def test_error_statuses(argv, status, in_golden):
    assert cli_dispatch(argv)[0] == status


def test_budget_exceeded(in_golden, monkeypatch, tmp_path, capsys):
    from mlmkit import EvalBudget, cli

    big = tmp_path / "ones.csv"
    big.write_text("\n".join(",".join(["1"] * 10) for _ in range(10)))
    monkeypatch.setattr(cli, "_budget", lambda: EvalBudget(max_total_work=100))
    assert main(["perm", "--matrix", str(big)]) == 2
    assert "resource limit" in capsys.readouterr().err


def test_env_budget(in_golden, monkeypatch):
    monkeypatch.setenv("MLMKIT_BUDGET", "not-a-number")
    assert cli_dispatch(["sum", "inputs/square.poly"])[0] == 1
    monkeypatch.setenv("MLMKIT_BUDGET", str(10**12))
    assert cli_dispatch(["sum", "inputs/square.poly"]) == (0, "2\n")


def test_module_entry_point(in_golden):
    proc = subprocess.run(
        [sys.executable, "-m", "mlmkit", "coeff", "inputs/square.poly", "--monomial", "x1*x2"],
        capture_output=True,
        text=True,
        cwd=GOLDEN,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
