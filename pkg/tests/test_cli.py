"""Command-line interface tests: output formats, exit codes, CSV schema."""

import csv
import io
import math

import pytest

import betamedian.cli as cli_mod
from betamedian import ONE_THIRD, ConvergenceError
from betamedian.cli import CSV_HEADER, main, parse_offset


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPointCommands:
    def test_median_exact_prints_shortest_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "median", "--a", "4", "--b", "1", "--method", "exact")
        assert code == 0
        assert out.strip() == "0.8408964152537145"

    def test_median_approx(self, capsys):
        code, out, _ = run_cli(capsys, "median", "--a", "2", "--b", "3", "--method", "approx")
        assert code == 0
        assert out.strip() == "0.38461538461538464"

    def test_median_approx_with_offset(self, capsys):
        code, out, _ = run_cli(
            capsys, "median", "--a", "2", "--b", "3", "--method", "approx", "--d", "0"
        )
        assert code == 0
        assert float(out) == 0.4

    def test_median_special(self, capsys):
        code, out, _ = run_cli(capsys, "median", "--a", "3", "--b", "1", "--method", "special")
        assert code == 0
        assert float(out) == pytest.approx(2.0 ** (-1.0 / 3.0), rel=1e-15)

    def test_median_special_absent_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "median", "--a", "2", "--b", "3", "--method", "special")
        assert code == 3
        assert "closed-form" in err

    def test_negative_shape_exits_3_naming_parameter(self, capsys):
        code, _, err = run_cli(capsys, "median", "--a", "-1", "--b", "2", "--method", "exact")
        assert code == 3
        assert "a" in err and "-1" in err

    def test_nan_shape_exits_3(self, capsys):
        code, _, err = run_cli(capsys, "median", "--a", "nan", "--b", "2")
        assert code == 3

    def test_usage_error_exits_2(self, capsys):
        assert run_cli(capsys, "median", "--a", "1")[0] == 2          # missing --b
        assert run_cli(capsys, "median", "--a", "x", "--b", "1")[0] == 2
        assert run_cli(capsys, "no-such-command")[0] == 2

    def test_usage_error_prints_synopsis_to_stderr(self, capsys):
        code, out, err = run_cli(capsys, "median")
        assert code == 2
        assert out == ""
        assert "usage" in err.lower()

    def test_convergence_failure_exits_4(self, capsys, monkeypatch):
        def boom(params, cfg=None):
            raise ConvergenceError("synthetic")

        monkeypatch.setattr(cli_mod, "beta_median_exact", boom)
        code, _, err = run_cli(capsys, "median", "--a", "2", "--b", "2")
        assert code == 4
        assert "convergence" in err

    def test_cdf(self, capsys):
        code, out, _ = run_cli(capsys, "cdf", "--a", "1", "--b", "1", "--x", "0.37")
        assert code == 0
        assert abs(float(out) - 0.37) <= 1e-15

    def test_gamma_median_exact(self, capsys):
        code, out, _ = run_cli(capsys, "gamma-median", "--a", "10")
        assert code == 0
        assert float(out) == pytest.approx(9.668714614714132, abs=1e-10)

    def test_gamma_median_approx(self, capsys):
        code, out, _ = run_cli(capsys, "gamma-median", "--a", "10", "--method", "approx")
        assert code == 0
        assert float(out) == 10.0 - ONE_THIRD

    def test_outputs_reparse_to_identical_double(self, capsys):
        for argv in (
            ["median", "--a", "2.5", "--b", "7.1"],
            ["cdf", "--a", "3", "--b", "4", "--x", "0.21"],
            ["gamma-median", "--a", "3.7"],
        ):
            _, out, _ = run_cli(capsys, *argv)
            token = out.strip()
            assert repr(float(token)) == token


class TestOffsetParsing:
    def test_literal_fraction_token(self):
        assert parse_offset("1/3") == ONE_THIRD
        assert parse_offset(" 1/3 ") == ONE_THIRD

    def test_decimal_taken_verbatim(self):
        assert parse_offset("0.333") == 0.333
        assert parse_offset("0.333") != ONE_THIRD

    def test_invalid_token(self):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parse_offset("1/4")


def parse_csv(text):
    rows = list(csv.DictReader(io.StringIO(text)))
    return rows


class TestGridCommands:
    def test_schema_header_exact(self, capsys):
        code, out, _ = run_cli(
            capsys, "grid-relerr", "--p", "0.25", "--a-min", "1", "--a-max", "4",
            "--points", "3",
        )
        assert code == 0
        assert out.splitlines()[0] == ",".join(CSV_HEADER)

    def test_relerr_round_trip_and_empty_fields(self, capsys):
        _, out, _ = run_cli(
            capsys, "grid-relerr", "--p", "0.25,0.4", "--a-min", "1", "--a-max", "8",
            "--points", "4", "--d", "1/3",
        )
        rows = parse_csv(out)
        assert len(rows) == 8
        for row in rows:
            approx, exact = float(row["approx"]), float(row["exact"])
            assert (approx - exact) / exact == pytest.approx(float(row["rel_err"]), abs=1e-15)
            assert row["log_scaled_abs_err"] == ""
            assert row["tail_prob"] == ""
            assert row["underflow"] == "false"
            assert float(row["d"]) == ONE_THIRD

    def test_csv_fields_reparse_to_identical_doubles(self, capsys):
        _, out, _ = run_cli(
            capsys, "grid-relerr", "--p", "0.25", "--a-min", "1", "--a-max", "4",
            "--points", "3",
        )
        for row in parse_csv(out):
            for key in ("a", "b", "p", "d", "approx", "exact", "rel_err"):
                assert repr(float(row[key])) == row[key]

    def test_byte_identical_reruns(self, tmp_path):
        paths = []
        for name in ("one.csv", "two.csv"):
            path = tmp_path / name
            code = main([
                "grid-relerr", "--p", "0.25", "--a-min", "1", "--a-max", "32",
                "--points", "6", "--out", str(path),
            ])
            assert code == 0
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]

    def test_lf_line_endings(self, tmp_path):
        path = tmp_path / "grid.csv"
        main(["grid-relerr", "--p", "0.25", "--a-min", "1", "--a-max", "2",
              "--points", "2", "--out", str(path)])
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert raw.decode("utf-8").endswith("\n")

    def test_grid_means_mirrors_fixed_shape(self, capsys):
        _, out, _ = run_cli(capsys, "grid-means", "--min-shape", "2", "--p-points", "9")
        rows = parse_csv(out)
        assert len(rows) == 9
        for row in rows:
            p = float(row["p"])
            if p <= 0.5:
                assert float(row["a"]) == 2.0
            else:
                assert float(row["b"]) == 2.0

    def test_curve_abserr_default_offsets(self, capsys):
        _, out, _ = run_cli(capsys, "curve-abserr", "--p", "0.3")
        rows = parse_csv(out)
        offsets = sorted({float(r["d"]) for r in rows})
        assert offsets == [0.0, 0.25, 0.3, ONE_THIRD, 0.4, 0.5]
        populated = [r for r in rows if r["log_scaled_abs_err"]]
        assert populated, "log column must be populated"

    def test_grid_tail_band(self, capsys):
        _, out, _ = run_cli(capsys, "grid-tail", "--points", "3", "--p-points", "7")
        rows = parse_csv(out)
        assert len(rows) == 21
        for row in rows:
            assert 0.4865 <= float(row["tail_prob"]) <= 0.5135

    def test_rate_fit_csv(self, capsys):
        code, out, _ = run_cli(capsys, "rate-fit", "--p", "0.01", "--d", "1/3",
                               "--a-min", "8", "--a-max", "512", "--points", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "d,p,slope,intercept,max_abs_residual"
        row = dict(zip(lines[0].split(","), lines[1].split(",")))
        assert -1.8 < float(row["slope"]) < -1.2

    def test_grid_domain_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "grid-relerr", "--p", "0.25",
                               "--a-min", "0.2", "--a-max", "2", "--points", "3")
        assert code == 3
        assert "grid point" in err
