import json

import pytest
from click.testing import CliRunner

import regdim.main
from regdim.exceptions import VerificationFailure
from regdim.main import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write_ideal(tmp_path):
    def write(text: str, name: str = "ideal.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def test_analyze_square(runner, write_ideal, tmp_path):
    report_path = tmp_path / "report.json"
    result = runner.invoke(cli, ["analyze", write_ideal("n = 1\nx1^2\n"), "-i", "1", "--json", str(report_path)])
    assert result.exit_code == 0, result.output
    report = json.loads(report_path.read_text())
    assert report["indices"] == [1]
    record = report["records"][0]
    assert record["reg_exact"] == 0
    assert record["dim"] == 0
    assert record["pass_theorem"] and record["pass_corollary"]
    assert report["characteristic"] == 2


def test_analyze_all_indices_with_oracle(runner, write_ideal, tmp_path):
    report_path = tmp_path / "report.json"
    result = runner.invoke(cli, ["analyze", write_ideal("n = 2\n[2,1]\nx2^3\n"), "--oracle", "--char", "3",
                                 "--timing", "--json", str(report_path)])
    assert result.exit_code == 0, result.output
    report = json.loads(report_path.read_text())
    assert report["indices"] == [0, 1, 2]
    assert report["characteristic"] == 3
    assert report["oracle"]["checked"]
    assert "total" in report["timing"]


def test_analyze_pretty(runner, write_ideal):
    result = runner.invoke(cli, ["--log-level", "warning", "analyze", write_ideal("n = 2\nx1\nx2\n"), "--pretty"])
    assert result.exit_code == 0, result.output
    assert "dim Ext" in result.output
    assert "ok" in result.output


def test_unit_ideal_is_rejected(runner, write_ideal):
    result = runner.invoke(cli, ["analyze", write_ideal("n = 1\n[0]\n")])
    assert result.exit_code == 2
    assert "unit ideal not supported" in result.output


def test_characteristic_must_be_prime(runner, write_ideal):
    result = runner.invoke(cli, ["analyze", write_ideal("n = 1\nx1\n"), "--char", "4"])
    assert result.exit_code == 2
    assert "characteristic must be prime" in result.output


def test_parse_error_reports_the_line(runner, write_ideal):
    result = runner.invoke(cli, ["analyze", write_ideal("n = 2\nx1\nbogus\n")])
    assert result.exit_code == 2
    assert "line 3" in result.output


def test_missing_file(runner, tmp_path):
    result = runner.invoke(cli, ["analyze", str(tmp_path / "nowhere.txt")])
    assert result.exit_code == 2


def test_bad_index_list(runner, write_ideal):
    assert runner.invoke(cli, ["analyze", write_ideal("n = 1\nx1\n"), "-i", "one"]).exit_code == 2
    assert runner.invoke(cli, ["analyze", write_ideal("n = 1\nx1\n"), "-i", "2"]).exit_code == 2


def test_verification_failure_exits_one(runner, write_ideal, monkeypatch):
    def fail(report):
        raise VerificationFailure("reg 3 > dim 1", witness={"index": 1})

    monkeypatch.setattr(regdim.main, "raise_for_failures", fail)
    result = runner.invoke(cli, ["analyze", write_ideal("n = 1\nx1^2\n")])
    assert result.exit_code == 1
    assert "reg 3 > dim 1" in result.output


def test_exhaustive_sweep(runner, tmp_path):
    summary_path = tmp_path / "summary.json"
    result = runner.invoke(cli, ["sweep", "--n", "2", "--max-exp", "1", "--exhaustive", "--json", str(summary_path)])
    assert result.exit_code == 0, result.output
    summary = json.loads(summary_path.read_text())
    assert summary["ideals"] == 5
    assert summary["modules_checked"] == 15
    assert summary["failures"] == 0


def test_sweep_reports_are_byte_identical(runner, tmp_path):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        result = runner.invoke(cli, ["sweep", "--n", "3", "--max-exp", "2", "--samples", "6", "--seed", "2024",
                                     "--json", str(path)])
        assert result.exit_code == 0, result.output
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_outside_exhaustive_bounds(runner):
    result = runner.invoke(cli, ["sweep", "--n", "5", "--max-exp", "2", "--exhaustive"])
    assert result.exit_code == 2


def test_examples_listing_and_show(runner):
    listing = runner.invoke(cli, ["examples"])
    assert listing.exit_code == 0
    assert "projective_plane" in listing.output
    assert "maximal_ideal_3" in listing.output

    shown = runner.invoke(cli, ["examples", "--show", "square"])
    assert shown.exit_code == 0
    assert "n = 1" in shown.output
    assert "x1^2" in shown.output

    assert runner.invoke(cli, ["examples", "--show", "torus"]).exit_code == 2
