"""Tests de la ligne de commande nlfm (codes de sortie, erreurs JSON)"""

import json
import re
from pathlib import Path

import pytest

import nlfm
from nlfm.main import create_parser, main

SMALL = {"T": "1us", "B": "20MHz", "fs": "100MHz", "n_points": 201, "oversample": 2}


def last_error(captured):
    """Document d'erreur JSON : dernière ligne de stderr."""
    return json.loads(captured.err.strip().splitlines()[-1])


class TestParser:
    """Tests de create_parser()."""

    def test_commands_registered(self):
        parser = create_parser()
        for command in ("design", "compare", "sweep"):
            args = parser.parse_args([command] + (["--grid", "k=1"] if command == "sweep" else []))
            assert args.command == command
            assert callable(args.func)

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert "nlfm" in capsys.readouterr().out

    def test_no_command_prints_help(self, capsys):
        assert main([]) == 0
        assert "design" in capsys.readouterr().out

    def test_sweep_requires_grid(self):
        with pytest.raises(SystemExit):
            main(["sweep"])


class TestDesignCli:
    """Tests de ``nlfm design``."""

    def test_success(self, write_config, temp_dir, capsys):
        out = temp_dir / "run"
        path = write_config(out=out, **SMALL)

        assert main(["design", "--config", str(path)]) == 0
        assert "[OK]" in capsys.readouterr().out
        assert (out / "report.json").exists()

    def test_cli_overrides_file(self, write_config, temp_dir):
        path = write_config(out=temp_dir / "run", **SMALL)
        assert main(["design", "-c", str(path), "--method", "lfm", "--out", str(temp_dir / "lfm")]) == 0

        report = json.loads((temp_dir / "lfm" / "report.json").read_text(encoding='utf-8'))
        assert report["nmlw"] == 1.0
        assert not (temp_dir / "run").exists()

    def test_aliasing_exit_code(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "run", **{**SMALL, "fs": "10MHz"})

        assert main(["design", "--config", str(path)]) == 2
        document = last_error(capsys.readouterr())
        assert document["error"] == "AliasingError"
        assert document["exit_code"] == 2

    def test_spline_without_lambda(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "run", method="spline", **SMALL)

        assert main(["design", "--config", str(path)]) == 2
        assert "lambda" in last_error(capsys.readouterr())["message"]

    def test_unknown_key(self, write_config, temp_dir, capsys):
        path = write_config(colour="blue")
        assert main(["design", "--config", str(path)]) == 2
        assert last_error(capsys.readouterr())["error"] == "ConfigError"

    def test_missing_config_file(self, temp_dir, capsys):
        assert main(["design", "--config", str(temp_dir / "absent.conf")]) == 4
        assert last_error(capsys.readouterr())["exit_code"] == 4


class TestCompareCli:
    """Tests de ``nlfm compare``."""

    def test_success(self, write_config, temp_dir, capsys):
        first = write_config("poly.conf", method="polynomial", **SMALL)
        second = write_config("spline.conf", method="spline", **{"lambda": 0}, **SMALL)

        code = main(["compare", "-c", str(first), "-c", str(second), "--out", str(temp_dir / "cmp")])
        assert code == 0
        output = capsys.readouterr().out
        assert "[OK]" in output
        assert "lfm" in output
        assert (temp_dir / "cmp" / "compare.csv").exists()

    def test_no_config(self, capsys):
        assert main(["compare"]) == 2
        assert last_error(capsys.readouterr())["error"] == "ConfigError"

    def test_mixed_sample_rates(self, write_config, temp_dir, capsys):
        first = write_config("a.conf", **SMALL)
        second = write_config("b.conf", window="taylor", **{**SMALL, "fs": "200MHz"})

        assert main(["compare", "-c", str(first), "-c", str(second), "-o", str(temp_dir)]) == 2
        assert last_error(capsys.readouterr())["error"] == "InvalidComparisonError"


class TestSweepCli:
    """Tests de ``nlfm sweep``."""

    def test_success(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "sweep", **SMALL)

        code = main(["sweep", "-c", str(path), "--grid", "degree=5,9", "--workers", "1"])
        assert code == 0
        output = capsys.readouterr().out
        assert "2 points évalués (0 en échec)" in output
        assert "Meilleur (psl)" in output
        assert (temp_dir / "sweep" / "sweep.csv").exists()
        assert (temp_dir / "sweep" / "best.json").exists()

    def test_failed_points_do_not_abort(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "sweep", method="spline", **{"lambda": 0}, **SMALL)

        code = main(["sweep", "-c", str(path), "-g", "lambda=-1,-2", "-j", "1"])
        assert code == 0
        assert "[WARN] aucun point exploitable" in capsys.readouterr().out

    def test_invalid_workers(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "sweep", **SMALL)
        assert main(["sweep", "-c", str(path), "-g", "degree=5", "-j", "0"]) == 2
        assert "--workers" in last_error(capsys.readouterr())["message"]

    def test_invalid_grid(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "sweep", **SMALL)
        assert main(["sweep", "-c", str(path), "-g", "T=1us,2us"]) == 2

    def test_lambda_grid_on_polynomial(self, write_config, temp_dir, capsys):
        path = write_config(out=temp_dir / "sweep", method="polynomial", **SMALL)

        assert main(["sweep", "-c", str(path), "-g", "lambda=0,1e-21", "-j", "1"]) == 2
        error = last_error(capsys.readouterr())
        assert error["error"] == "ConfigError"
        assert "lambda" in error["message"]
        assert not (temp_dir / "sweep" / "sweep.csv").exists()


class TestPackageMetadata:
    """Métadonnées du paquet alignées sur pyproject.toml."""

    def test_matches_pyproject(self):
        text = (Path(__file__).resolve().parents[2] / "pyproject.toml").read_text(encoding="utf-8")
        author, email = re.search(r'authors = \["(.+?) <(.+?)>"\]', text).groups()
        version = re.search(r'^version = "(.+?)"', text, re.MULTILINE).group(1)

        assert nlfm.__author__ == author
        assert nlfm.__email__ == email
        assert nlfm.__version__ == version
