"""
Tests for the command-line interface
"""

import csv
import io
import json
import math
import sys
from pathlib import Path

import pandas as pd
import pytest

sys.path.append(str(Path(__file__).parent))

import fund_analyzer
from exceptions import InvariantError
from main import EXIT_INPUT_ERROR, EXIT_INVARIANT_FAILURE, EXIT_OK, main
from sample_data import HDFC_AGGREGATES

DATA_DIR = Path(__file__).parent / "data"
HDFC_TEXT = str(DATA_DIR / "hdfc_bank_monthly.txt")


def write_daily_csv(path, monthly_values, start="2008-01-01", skip_month=None):
    """One weekday close per row; every close of a month equals that month's value."""
    months = pd.period_range(pd.Period(start, freq="M"), periods=len(monthly_values), freq="M")
    days = pd.bdate_range(months[0].start_time, months[-1].end_time.normalize())
    lookup = dict(zip(months, monthly_values))
    frame = pd.DataFrame({"date": days, "close": [lookup[d.to_period("M")] for d in days]})
    if skip_month is not None:
        year, month = skip_month
        frame = frame[~((frame["date"].dt.year == year) & (frame["date"].dt.month == month))]
    frame["date"] = frame["date"].dt.strftime("%Y-%m-%d")
    frame.to_csv(path, index=False)
    return path


def write_monthly(path, ticker, values, start="2008-01"):
    lines = [f"# ticker: {ticker}", f"# start: {start}"] + [repr(float(v)) for v in values]
    path.write_text("\n".join(lines) + "\n")
    return path


def noisy_values(n=60):
    """Level 100 with a five-month oscillation the seasonal cycle cannot absorb."""
    return [100 + 40 * math.cos(2 * math.pi * i / 5) for i in range(n)]


def write_fund(path, style, capitalization, holdings):
    path.write_text(json.dumps({
        "name": "CLI Test Fund",
        "style": style,
        "capitalization": capitalization,
        "holdings": holdings,
    }))
    return str(path)


class TestDecomposeCommand:
    """Test cases for `decompose`."""

    def test_daily_file_with_published_aggregates(self, tmp_path, capsys):
        """Test that daily closes averaging to the published aggregates give the published trend."""
        path = write_daily_csv(tmp_path / "HDFCBANK.csv", HDFC_AGGREGATES)

        code = main(["decompose", str(path)])
        lines = capsys.readouterr().out.splitlines()

        assert code == EXIT_OK
        assert len(lines) == 2 + 96
        assert lines[8].split()[:4] == ["2008", "July", "209", "244"]

    def test_constant_prices(self, tmp_path, capsys):
        """Test that a constant price file has zero seasonal and random cells."""
        path = write_daily_csv(tmp_path / "flat.csv", [42.0] * 30)

        code = main(["decompose", str(path), "--format", "csv"])
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))

        assert code == EXIT_OK
        assert len(rows) == 30
        for row in rows:
            assert abs(float(row["seasonal"])) < 1e-9
            if row["random"]:
                assert abs(float(row["random"])) < 1e-9

    def test_missing_month(self, tmp_path, capsys):
        """Test that a gap is reported with its month and exit code 2."""
        path = write_daily_csv(tmp_path / "gap.csv", HDFC_AGGREGATES, skip_month=(2009, 3))

        code = main(["decompose", str(path)])
        captured = capsys.readouterr()

        assert code == EXIT_INPUT_ERROR
        assert "EmptyMonth 2009-03" in captured.err
        assert captured.out == ""

    def test_missing_file(self, tmp_path, capsys):
        """Test that a nonexistent price file is an input error."""
        code = main(["decompose", str(tmp_path / "nope.csv")])

        assert code == EXIT_INPUT_ERROR
        assert "MissingFile" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "name, content",
        [
            ("prices.csv", b"date,close\n2008-01-02,1\xff2.0\n"),
            ("prices.txt", b"# start: 2008-01\n1\xff2.0\n"),
        ],
    )
    def test_invalid_utf8_is_input_error(self, tmp_path, capsys, name, content):
        """Test that undecodable price files exit with the input error code."""
        path = tmp_path / name
        path.write_bytes(content)

        code = main(["decompose", str(path)])

        assert code == EXIT_INPUT_ERROR
        assert "MalformedRow line 2: invalid UTF-8" in capsys.readouterr().err

    def test_odd_period(self, capsys):
        """Test that the seasonal period must be even."""
        code = main(["decompose", HDFC_TEXT, "--period", "7"])

        assert code == EXIT_INPUT_ERROR
        assert "ConfigError" in capsys.readouterr().err

    def test_output_file(self, tmp_path, capsys):
        """Test that --output writes the report instead of printing it."""
        out = tmp_path / "reports" / "hdfc.json"

        code = main(["decompose", HDFC_TEXT, "--format", "json", "--output", str(out)])

        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert len(json.loads(out.read_text())["rows"]) == 96


class TestSummarizeCommand:
    """Test cases for `summarize`."""

    def test_constant_series(self, tmp_path, capsys):
        """Test that a constant series is entirely trend."""
        path = write_daily_csv(tmp_path / "flat.csv", [42.0] * 30)

        code = main(["summarize", str(path)])
        row = capsys.readouterr().out.splitlines()[2].split()

        assert code == EXIT_OK
        assert " ".join(row[1:]) == "100 100 100 | 0 0 0 | 0 0 0 | T"

    def test_hdfc_json(self, capsys):
        """Test the HDFC Bank summary as JSON."""
        code = main(["summarize", HDFC_TEXT, "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert data["dominant"] == ["T"]
        assert data["trend"]["mean"] == pytest.approx(101, abs=2)
        assert data["observation_count"] == 84

    def test_large_noise_is_random_dominated(self, tmp_path, capsys):
        """Test that strong irregular movement makes the random component dominant."""
        path = write_monthly(tmp_path / "noisy.txt", "NOISY", noisy_values())

        code = main(["summarize", str(path), "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert "R" in data["dominant"]
        assert data["random"]["mean_abs"] > 15

    def test_threshold_flag(self, capsys):
        """Test that --threshold changes the dominant set."""
        code = main(["summarize", HDFC_TEXT, "--format", "json", "--threshold", "4"])
        data = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert data["threshold"] == 4
        assert data["dominant"] == ["T", "R"]

    def test_csv_and_json_agree(self, capsys):
        """Test that CSV and JSON carry the same full-precision numbers."""
        main(["summarize", HDFC_TEXT, "--format", "csv"])
        row = next(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        main(["summarize", HDFC_TEXT, "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert float(row["trend_mean"]) == data["trend"]["mean"]
        assert float(row["seasonal_mean_abs"]) == data["seasonal"]["mean_abs"]
        assert float(row["random_min"]) == data["random"]["min"]


class TestAnalyzeFundCommand:
    """Test cases for `analyze-fund`."""

    def test_constant_single_holding(self, tmp_path, capsys):
        """Test that a flat large cap growth holding is consistent."""
        write_daily_csv(tmp_path / "flat.csv", [42.0] * 30)
        fund = write_fund(tmp_path / "fund.json", "growth", "large",
                          [{"ticker": "FLAT", "price_file": "flat.csv"}])

        code = main(["analyze-fund", fund, "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert data["verdict"] == "consistent"
        assert data["deviation_count"] == 0

    def test_demo_fund_text(self, capsys):
        """Test the bundled demo fund in text form."""
        code = main(["analyze-fund", str(DATA_DIR / "hdfc_demo_fund.json")])
        out = capsys.readouterr().out

        assert code == EXIT_OK
        assert "FUND CONSISTENCY REPORT: HDFC Bank Demo Fund" in out
        assert "Verdict:             consistent" in out

    def test_invalid_utf8_fund_file(self, tmp_path, capsys):
        """Test that an undecodable fund file exits with the input error code."""
        fund = tmp_path / "fund.json"
        fund.write_bytes(b'{"name": "Caf\xe9 Fund"}\n')

        code = main(["analyze-fund", str(fund)])

        assert code == EXIT_INPUT_ERROR
        assert "invalid UTF-8 at line 1" in capsys.readouterr().err

    def test_missing_price_file_names_ticker(self, tmp_path, capsys):
        """Test that a holding whose price file is missing is named in the error."""
        fund = write_fund(tmp_path / "fund.json", "growth", "large",
                          [{"ticker": "GHOST", "price_file": "ghost.csv"}])

        code = main(["analyze-fund", fund])
        err = capsys.readouterr().err

        assert code == EXIT_INPUT_ERROR
        assert "HoldingError GHOST" in err
        assert "MissingFile" in err

    def test_strict_rules_file(self, tmp_path, capsys):
        """Test that a random-dominated holding fails the strict bluechip profile but still exits 0."""
        write_monthly(tmp_path / "noisy.txt", "NOISY", noisy_values())
        fund = write_fund(tmp_path / "fund.json", "growth", "large",
                          [{"ticker": "NOISY", "price_file": "noisy.txt"}])

        code = main(["analyze-fund", fund, "--format", "json"])
        tolerant = json.loads(capsys.readouterr().out)
        code_strict = main(["analyze-fund", fund, "--format", "json",
                            "--rules", str(Path(__file__).parent / "style_rules_strict.json")])
        strict = json.loads(capsys.readouterr().out)

        assert code == code_strict == EXIT_OK
        assert tolerant["verdict"] == "consistent"
        assert strict["verdict"] == "inconsistent"
        assert strict["per_stock"][0]["note"] == "unexpected R"

    def test_no_rule_for_profile(self, tmp_path, capsys):
        """Test that a fund profile absent from the rules file is an input error."""
        rules = tmp_path / "rules.json"
        rules.write_text(json.dumps([{
            "style": "blend", "capitalization": "large",
            "required": ["T"], "tolerated": ["R", "S"], "flagged": [],
        }]))

        code = main(["analyze-fund", str(DATA_DIR / "hdfc_demo_fund.json"), "--rules", str(rules)])

        assert code == EXIT_INPUT_ERROR
        assert "NoRuleForStyle (growth, large)" in capsys.readouterr().err

    def test_output_is_deterministic(self, tmp_path, capsys):
        """Test that repeated runs produce identical output."""
        write_monthly(tmp_path / "a.txt", "A", noisy_values())
        write_monthly(tmp_path / "b.txt", "B", HDFC_AGGREGATES)
        fund = write_fund(tmp_path / "fund.json", "growth", "medium", [
            {"ticker": "B", "price_file": "b.txt"},
            {"ticker": "A", "price_file": "a.txt"},
        ])

        outputs = []
        for fmt in ("text", "text", "json", "json", "csv", "csv"):
            main(["analyze-fund", fund, "--format", fmt])
            outputs.append(capsys.readouterr().out)

        assert outputs[0] == outputs[1]
        assert outputs[2] == outputs[3]
        assert outputs[4] == outputs[5]
        assert [s["ticker"] for s in json.loads(outputs[2])["per_stock"]] == ["B", "A"]


class TestExitCodes:
    """Test cases for the exit code contract."""

    def test_usage_error(self, capsys):
        """Test that a missing subcommand is a usage error."""
        assert main([]) == EXIT_INPUT_ERROR

    def test_invariant_failure(self, monkeypatch, capsys):
        """Test that an internal check failure exits with 3."""
        def broken(series, period=12):
            raise InvariantError("aggregate != trend + seasonal + random", series.ticker)

        monkeypatch.setattr(fund_analyzer, "decompose", broken)

        code = main(["decompose", HDFC_TEXT])

        assert code == EXIT_INVARIANT_FAILURE
        assert "HDFC Bank" in capsys.readouterr().err

    def test_rules_file_only_read_by_analyze_fund(self, tmp_path, monkeypatch, capsys):
        """Test that a bad STYLE_RULES_FILE affects analyze-fund but not decompose or summarize."""
        monkeypatch.setenv("STYLE_RULES_FILE", str(tmp_path / "no_rules.json"))

        assert main(["decompose", HDFC_TEXT]) == EXIT_OK
        assert main(["summarize", HDFC_TEXT]) == EXIT_OK
        capsys.readouterr()

        code = main(["analyze-fund", str(DATA_DIR / "hdfc_demo_fund.json")])

        assert code == EXIT_INPUT_ERROR
        assert "MissingFile" in capsys.readouterr().err


class TestAggregateCommand:
    """Test cases for `aggregate`."""

    def test_daily_to_monthly_file(self, tmp_path, capsys):
        """Test that the stored monthly file decomposes like the daily file."""
        daily = write_daily_csv(tmp_path / "HDFCBANK.csv", HDFC_AGGREGATES)
        monthly = tmp_path / "HDFCBANK.txt"

        assert main(["aggregate", str(daily), "--output", str(monthly)]) == EXIT_OK
        assert monthly.read_text().splitlines()[:3] == ["# ticker: HDFCBANK", "# start: 2008-01", "328.0"]

        main(["decompose", str(daily), "--format", "json"])
        from_daily = json.loads(capsys.readouterr().out)
        main(["decompose", str(monthly), "--format", "json"])
        from_monthly = json.loads(capsys.readouterr().out)

        assert from_daily == from_monthly
