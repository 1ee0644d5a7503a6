#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Тесты для модуля main
=====================

Проверяются подкоманды командной строки и коды завершения.
"""

import json

import pytest

import settings
from main import cli_main, underlying_graph
from sgcore import read_sdimacs, SignedGraph, POSITIVE, NEGATIVE


class TestGen:
    """Тесты подкоманды gen."""

    def test_hks(self, tmp_path):
        path = tmp_path / "hks32.sdim"
        assert cli_main(["gen", "--family", "hks", "--n", "3", "--k", "2", "-o", str(path)]) == settings.EXIT_OK
        g = read_sdimacs(path)
        assert g.order == 6
        assert g.label(0).startswith("{")

    def test_borsuk(self, tmp_path):
        path = tmp_path / "bs.sdim"
        code = cli_main(["gen", "--family", "borsuk", "--d", "1", "--eps", "0.5", "--res", "8", "-o", str(path)])
        assert code == settings.EXIT_OK
        assert read_sdimacs(path).order == 16

    def test_default_extension(self, tmp_path):
        base = tmp_path / "kneser52"
        assert cli_main(["gen", "--family", "kneser", "--n", "5", "--k", "2", "-o", str(base)]) == settings.EXIT_OK
        assert read_sdimacs(str(base) + settings.DIMACS_EXTENSION).order == 10

    def test_invalid_parameters(self, tmp_path):
        path = tmp_path / "bad.sdim"
        assert cli_main(["gen", "--family", "ks", "--n", "2", "--k", "3", "-o", str(path)]) == settings.EXIT_USAGE

    def test_unknown_family(self, tmp_path):
        with pytest.raises(SystemExit) as error:
            cli_main(["gen", "--family", "petersen", "-o", str(tmp_path / "x.sdim")])
        assert error.value.code == settings.EXIT_USAGE


class TestChi:
    """Тесты подкоманд chib и chi."""

    @pytest.fixture
    def hks42_file(self, tmp_path):
        path = tmp_path / "hks42.sdim"
        cli_main(["gen", "--family", "hks", "--n", "4", "--k", "2", "-o", str(path)])
        return path

    def test_chib(self, hks42_file, tmp_path, capsys):
        certificate = tmp_path / "cert.json"
        code = cli_main(["chib", str(hks42_file), "--certificate", str(certificate), "--no-timings"])
        assert code == settings.EXIT_OK
        assert capsys.readouterr().out.strip().splitlines()[-1] == "3"
        data = json.loads(certificate.read_text(encoding="utf-8"))
        assert data["value"] == 3 and data["exact"]
        assert data["elapsed"] == 0.0
        assert len(data["certificate"]["colour"]) == 12

    def test_chi(self, hks42_file, tmp_path):
        certificate = tmp_path / "chi.json"
        assert cli_main(["chi", str(hks42_file), "--certificate", str(certificate)]) == settings.EXIT_OK
        data = json.loads(certificate.read_text(encoding="utf-8"))
        assert data["exact"]
        assert data["value"] == len(set(data["certificate"].values()))

    def test_missing_file(self, tmp_path):
        assert cli_main(["chib", str(tmp_path / "absent.sdim")]) == settings.EXIT_IO

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "broken.sdim"
        path.write_text("p sgraph 2 1\ne 1 1 -\n", encoding="utf-8")
        assert cli_main(["chib", str(path)]) == settings.EXIT_IO

    def test_underlying_graph(self):
        g = SignedGraph.from_edges(3, [(0, 1, POSITIVE), (0, 1, NEGATIVE), (1, 2, NEGATIVE)])
        h = underlying_graph(g)
        assert sorted(h.edges()) == [(0, 1), (1, 2)]
        assert h.number_of_nodes() == 3


class TestConstruct:
    """Тесты подкоманды construct."""

    def test_bi_cover(self, tmp_path):
        path = tmp_path / "cover.json"
        code = cli_main(["construct", "--what", "bi-cover", "--n", "4", "--k", "2", "-o", str(path)])
        assert code == settings.EXIT_OK
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["verified"] and data["colours"] == 3

    def test_critical(self):
        code = cli_main(["construct", "--what", "critical", "--n", "4", "--k", "2", "--vertex", "{1,-2}"])
        assert code == settings.EXIT_OK

    def test_critical_without_vertex(self):
        assert cli_main(["construct", "--what", "critical", "--n", "4", "--k", "2"]) == settings.EXIT_USAGE

    def test_bi_plus(self):
        code = cli_main(["construct", "--what", "bi-plus", "--n", "4", "--k", "2", "--target", "ks"])
        assert code == settings.EXIT_OK

    def test_equator(self):
        code = cli_main(["construct", "--what", "equator", "--d", "2", "--eps", "0.1", "--res", "300", "--seed", "3"])
        assert code == settings.EXIT_OK

    def test_bad_indices(self):
        code = cli_main(["construct", "--what", "bi-cover", "--n", "4", "--k", "2", "--indices", "1,x"])
        assert code == settings.EXIT_USAGE


class TestVerify:
    """Тесты подкоманды verify."""

    def test_counts(self, tmp_path, capsys):
        path = tmp_path / "reports" / "counts.json"
        code = cli_main(["verify", "--theorem", "counts", "--max-n", "3", "--report", str(path), "--no-timings"])
        assert code == settings.EXIT_OK
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["summary"]["total_ms"] == 0.0
        assert all(r["elapsed_ms"] == 0.0 for r in data["records"])
        assert str(path) in capsys.readouterr().out

    def test_bad_workers(self, tmp_path):
        code = cli_main(["verify", "--theorem", "counts", "--workers", "0", "--report", str(tmp_path / "r.json")])
        assert code == settings.EXIT_USAGE
