"""End-to-end CLI tests that chain commands through files on disk."""

from __future__ import annotations

import os
import subprocess
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

from fibecc.cli import app

runner = CliRunner()

SRC = Path(__file__).resolve().parents[1] / "src"


@pytest.fixture
def workdir(monkeypatch, tmp_path: Path) -> Path:
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr("fibecc.cli.project_root", lambda: tmp_path)
    return tmp_path


def _invoke(args: list[str]) -> str:
    result = runner.invoke(app, args)
    assert result.exit_code == 0, result.output
    return result.output


def test_module_entrypoint_reports_version() -> None:
    env = {**os.environ, "PYTHONPATH": str(SRC)}
    completed = subprocess.run(
        [sys.executable, "-m", "fibecc", "--version"],
        capture_output=True,
        text=True,
        check=True,
        env=env,
    )

    assert completed.stdout.startswith("fibecc ")


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_keygen_encrypt_decrypt_on_published_curve(workdir: Path, seed: int) -> None:
    message = "MEET-AT-9~30!"

    _invoke(["keygen", "--seed", str(seed)])
    _invoke(["encrypt", "-m", message, "--seed", str(seed + 100)])
    output = _invoke(["decrypt"])

    assert output.splitlines()[-1] == message


def test_three_by_three_blocks_with_custom_alphabet(workdir: Path) -> None:
    curve = ["--p", "7", "--a", "1", "--b", "1"]
    _invoke(["alphabet", *curve, "--charset", "wxyz#", "--out", "small.alphabet"])
    _invoke(["keygen", *curve, "--E", "0,1", "--n", "3", "--r", "4"])

    _invoke(
        ["encrypt", "-m", "zyxwwx", "--e", "3", "--alphabet", "small.alphabet"]
    )
    ciphertext = (workdir / "fibecc.ct").read_text(encoding="utf-8").splitlines()
    output = _invoke(["decrypt", "--alphabet", "small.alphabet"])

    assert ciphertext[:3] == ["a=6", "n=3", "len=6"]
    assert len(ciphertext) == 4
    assert output.splitlines()[-1] == "zyxwwx"


def test_configured_dimension_flows_into_ciphertext(workdir: Path) -> None:
    (workdir / "pyproject.toml").write_text(
        "[tool.fibecc]\ndimension = 4\n", encoding="utf-8"
    )

    _invoke(["keygen", "--beta", "31", "--r", "14"])
    _invoke(["encrypt", "-m", "COVID-19", "--e", "21"])
    output = _invoke(["decrypt"])

    lines = (workdir / "fibecc.ct").read_text(encoding="utf-8").splitlines()
    assert lines[1] == "n=4"
    assert len(lines[3].split(";")) == 16
    assert output.splitlines()[-1] == "COVID-19"
