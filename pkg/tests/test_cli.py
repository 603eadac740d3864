"""Tests for the command-line interface."""

import json

import pandas as pd
import pytest
from unittest.mock import patch

from octsum.cli.routes import main
from octsum.utils.error_utils import ShallowTreeError


def test_p8(capsys):
    assert main(["p8", "-1"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_values(capsys):
    assert main(["values", "--max", "40"]) == 0
    assert capsys.readouterr().out.strip() == "0 1 5 8 16 21 33 40"


def test_represent(capsys):
    assert main(["represent", "--coeffs", "1,1", "--n", "2", "--witness"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["2 represented by Phi(1,1)", "x = 1,1"]


def test_represent_not_represented(capsys):
    assert main(["represent", "--coeffs", "1,1", "--n", "3"]) == 1
    assert "not represented" in capsys.readouterr().out


def test_exceptions(capsys):
    assert main(["exceptions", "--coeffs", "1,1,3,4", "--max", "100"]) == 0
    assert capsys.readouterr().out.strip() == "18"

    assert main(["exceptions", "--coeffs", "1,1,3,3", "--max", "100"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_truant(capsys):
    assert main(["truant", "--coeffs", "3,2,1", "--max", "100"]) == 0
    assert capsys.readouterr().out.strip() == "9"


def test_classify(capsys):
    assert main(["classify", "--coeffs", "1,1,3,7", "--max", "100"]) == 1
    assert capsys.readouterr().out.strip() == "not-universal(14)"

    assert main(["classify", "--coeffs", "1,2,3,4", "--max", "100", "--scan-only"]) == 0
    assert capsys.readouterr().out.strip() == "bounded-universal-unproven (checked to 100)"


def test_escalate_json(tmp_path, capsys):
    out_file = tmp_path / "tree.json"
    assert main(["escalate", "--depth", "3", "--max", "50", "--json", str(out_file)]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "() truant 1"
    assert "  (1) truant 2" in lines
    tree = json.loads(out_file.read_text(encoding="utf-8"))
    assert [child["coeffs"] for child in tree["children"]] == [[1]]


def test_criterion(capsys):
    assert main(["criterion", "--form", "1,1,2", "--max", "200"]) == 0
    assert "0 disagreements" in capsys.readouterr().out


def test_verify_writes_certificate(tmp_path, capsys):
    cert = tmp_path / "phi-1-1-3-4.json"
    with patch("octsum.config.settings.CACHE_PATH", None):
        assert main(["verify", "--theorem", "phi-1-1-3-4", "--max", "100", "--cert", str(cert)]) == 0

    assert capsys.readouterr().out.startswith("phi-1-1-3-4: pass (max 100)")
    data = json.loads(cert.read_text(encoding="utf-8"))
    assert data["exceptions"] == [18]


def test_verify_by_label(tmp_path, capsys):
    cert = tmp_path / "L3.2.json"
    with patch("octsum.config.settings.CACHE_PATH", None):
        assert main(["verify", "--theorem", "L3.2", "--max", "100", "--cert", str(cert)]) == 0

    assert capsys.readouterr().out.startswith("phi-1-1-2-14: pass (max 100)")
    data = json.loads(cert.read_text(encoding="utf-8"))
    assert data["label"] == "L3.2"
    assert data["exceptions"] == [60]


def test_usage_errors(capsys):
    assert main(["verify", "--theorem", "phi-9-9"]) == 2
    assert "error: unknown theorem id" in capsys.readouterr().err

    assert main(["no-such-command"]) == 2
    assert main(["represent", "--coeffs", "1,0", "--n", "3"]) == 2
    assert main(["represent", "--coeffs", "1,x", "--n", "3"]) == 2
    assert main(["truant", "--coeffs", "1", "--max", "0"]) == 2


def test_engine_error_exit_code(capsys):
    with patch("octsum.cli.escalation_commands.escalate") as mock_escalate:
        mock_escalate.side_effect = ShallowTreeError("too shallow")
        assert main(["escalate", "--depth", "2"]) == 2
    assert "error: too shallow" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_all(tmp_path, capsys):
    assert main(["verify-all", "--max", "1000", "--out", str(tmp_path), "--workers", "1"]) == 0

    summary = pd.read_csv(tmp_path / "summary.csv")
    assert len(summary) == 17
    assert set(summary["verdict"]) == {"pass"}
    assert "T3.1" in set(summary["label"])
    assert (tmp_path / "sixty.json").is_file()


@pytest.mark.parametrize(
    "argv, code, out",
    [
        (["classify", "--coeffs", "1,1,2,14", "--max", "100"], 1, "not-universal(60)"),
        (["truant", "--coeffs", "1,2", "--max", "100"], 0, "4"),
        (["represent", "--coeffs", "1", "--n", "2"], 1, "2 not represented by Phi(1)"),
    ],
)
def test_documented_examples(capsys, argv, code, out):
    assert main(argv) == code
    assert capsys.readouterr().out.strip() == out
