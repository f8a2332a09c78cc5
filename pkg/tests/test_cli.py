import io
import json

import pytest

import app
from cli.interface import EXIT_FAILURE, EXIT_IO, EXIT_OK, EXIT_USAGE, run_cli
from core.certificates import Certificate
from core.families import FamilyId, build_family
from core.graph_io import decode_graph6


def _run(*argv):
    out = io.StringIO()
    code = run_cli(list(argv), stdout=out)
    return code, out.getvalue()


class TestFamilyCommand:
    def test_q_index(self):
        code, out = _run("family", "K1v(kP2+P1)", "--k", "2", "--q")
        assert code == EXIT_OK
        assert out.strip() == "q = 6.372281323269"

    def test_graph6_is_the_default(self):
        code, out = _run("family", "L2", "--k", "4")
        assert code == EXIT_OK
        assert decode_graph6(out.strip()) == build_family(FamilyId.L2, 4).graph

    def test_dot(self):
        code, out = _run("family", "L2", "--k", "4", "--dot")
        assert code == EXIT_OK
        assert out.startswith("graph L2 {")

    def test_k_below_minimum(self):
        code, _ = _run("family", "K1v(2S3+P1)", "--k", "2")
        assert code == EXIT_USAGE

    def test_unknown_family(self):
        code, _ = _run("family", "K1v(kP3)", "--k", "4")
        assert code == EXIT_USAGE


class TestSearchCommand:
    def test_report(self):
        code, out = _run("search", "4")
        assert code == EXIT_OK
        assert "m = 4, filter = two-leaves-free, n <= 5" in out
        assert "Classes searched: 2" in out
        assert "max q = " in out

    def test_json_output(self, tmp_path):
        target = tmp_path / "search.json"
        code, _ = _run("search", "4", "--out", str(target))
        assert code == EXIT_OK
        data = json.loads(target.read_text(encoding='utf-8'))
        assert data['graph_count'] == 2
        assert data['filter'] == "two-leaves-free"
        assert len(data['argmax']) == 1

    def test_beyond_enumeration_cap(self):
        code, _ = _run("search", "11")
        assert code == EXIT_USAGE

    def test_unknown_filter(self):
        code, _ = _run("search", "4", "--filter", "trees")
        assert code == EXIT_USAGE


class TestVerifyCommand:
    def test_polynomials_suite(self, tmp_path):
        target = tmp_path / "certificates.json"
        code, out = _run("verify", "polynomials", "--k-min", "6", "--k-max", "7",
                         "--out", str(target))
        assert code == EXIT_OK
        assert "Suite polynomials: 8 certificates" in out
        assert "FAIL: 0" in out
        data = json.loads(target.read_text(encoding='utf-8'))
        assert len(data) == 8

    def test_impossible_tolerance_fails(self):
        code, out = _run("verify", "polynomials", "--k-min", "5", "--k-max", "9",
                         "--agreement-tol", "1e-30")
        assert code == EXIT_FAILURE
        assert "Failed claims:" in out

    def test_invalid_workers(self):
        code, _ = _run("verify", "delta-bound", "--m-max", "4", "--workers", "0")
        assert code == EXIT_USAGE

    def test_non_positive_tolerance(self):
        code, _ = _run("verify", "polynomials", "--gap", "0")
        assert code == EXIT_USAGE

    def test_schema_rejection_is_an_io_error(self, monkeypatch, tmp_path):
        monkeypatch.setattr("cli.interface.run_suite",
                            lambda suite, options: [Certificate.build("", "anchor", {}, [])])
        target = tmp_path / "certificates.json"
        code, _ = _run("verify", "polynomials", "--out", str(target))
        assert code == EXIT_IO
        assert not target.exists()


class TestConfigCommand:
    def test_show(self):
        code, out = _run("config", "show")
        assert code == EXIT_OK
        assert "[tolerances]" in out
        assert "  residual = 1e-08" in out

    def test_validate(self):
        assert _run("config", "validate") == (EXIT_OK, "Configuration is valid\n")

    def test_validate_reports_errors(self, config):
        config.spectral.solver = 'lanczos'
        code, out = _run("config", "validate")
        assert code == EXIT_FAILURE
        assert out.startswith("error: ")

    def test_reset_saves(self, config):
        config.verification.k_max = 7
        code, out = _run("config", "reset")
        assert code == EXIT_OK
        assert config.config_file.exists()
        assert config.verification.k_max == 40
        assert "Configuration reset and saved" in out

    def test_export(self, config, tmp_path):
        config.verification.k_max = 12
        target = tmp_path / "exported.json"
        code, out = _run("config", "export", str(target))
        assert code == EXIT_OK
        assert json.loads(target.read_text())['verification']['k_max'] == 12
        assert config.config_file == tmp_path / "qindex_config.json"
        assert "Configuration exported to" in out

    def test_export_needs_a_target(self):
        assert _run("config", "export")[0] == EXIT_USAGE

    def test_export_to_missing_directory(self, tmp_path):
        assert _run("config", "export", str(tmp_path / "missing" / "c.json"))[0] == EXIT_IO


class TestParser:
    def test_unknown_command(self):
        assert _run("frobnicate")[0] == EXIT_USAGE

    def test_missing_command(self):
        assert _run()[0] == EXIT_USAGE

    def test_version(self, capsys):
        assert _run("--version")[0] == EXIT_OK
        assert "qindex-verify" in capsys.readouterr().out


class TestApp:
    def test_dependencies_present(self):
        success, missing, _ = app.check_dependencies()
        assert success
        assert missing == []

    def test_missing_dependency_message(self, capsys):
        app.show_dependency_error(['scipy'], ['pytest-xdist'])
        err = capsys.readouterr().err
        assert "scipy" in err
        assert "pip install -r requirements.txt" in err

    @pytest.mark.parametrize("argv, expected", [(["config", "validate"], EXIT_OK),
                                                (["search", "11"], EXIT_USAGE)])
    def test_main(self, argv, expected):
        assert app.main(argv) == expected
