import json

import pytest

from tcount_synth.channel import channel_of_unitary
from tcount_synth.circuits import parse_circuit, unitary_of_circuit
from tcount_synth.cli import (EXIT_INCONCLUSIVE, EXIT_INVALID_INPUT, EXIT_OK,
                              EXIT_RESOURCE_CAP, load_channel, main)
from tcount_synth.fixtures import random_circuit


@pytest.fixture
def t_qc(tmp_path):
    path = tmp_path / "t.qc"
    path.write_text("t 1\n")
    return str(path)


@pytest.fixture
def t5_qc(tmp_path):
    path = tmp_path / "t5.qc"
    path.write_text("t 1\nh 1\nt 1\nh 1\nt 1\nh 1\nt 1\nh 1\nt 1\n")
    return str(path)


class TestLoadChannel:
    def test_qc(self, t_qc):
        assert load_channel(t_qc).sde == 1

    def test_json(self, tmp_path):
        u = unitary_of_circuit(random_circuit(2, 3, 1))
        path = tmp_path / "u.json"
        path.write_text(u.to_json())
        assert load_channel(str(path)) == channel_of_unitary(u)

    def test_unknown_extension(self, tmp_path):
        path = tmp_path / "u.txt"
        path.write_text("t 1\n")
        assert main(["tcount", str(path)]) == EXIT_INVALID_INPUT

    def test_missing_file(self, tmp_path):
        assert main(["tcount", str(tmp_path / "nope.qc")]) \
            == EXIT_INVALID_INPUT

    def test_malformed_circuit(self, tmp_path):
        path = tmp_path / "bad.qc"
        path.write_text("frobnicate 1\n")
        assert main(["tcount", str(path)]) == EXIT_INVALID_INPUT


class TestTcount:
    def test_single_t(self, t_qc, capsys):
        assert main(["tcount", t_qc]) == EXIT_OK
        out = capsys.readouterr().out
        assert "tcount     1" in out

    def test_json_report(self, t5_qc, capsys):
        assert main(["tcount", "--json", t5_qc]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["tcount"] == 5
        assert len(report["paulis"]) == 5
        assert report["telemetry"]["max_frontier"] >= 1

    def test_inconclusive_exit(self, t5_qc, capsys):
        assert main(["tcount", "--m-cap", "2", t5_qc]) == EXIT_INCONCLUSIVE
        assert "inconclusive" in capsys.readouterr().err


class TestTcountProvable:
    def test_decides(self, t5_qc, capsys):
        assert main(["tcount-provable", "--m", "6", "--json", t5_qc]) \
            == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["tcount"] == 5
        assert report["db_sizes"][0] == 1

    def test_no_beyond_bound(self, t5_qc, capsys):
        assert main(["tcount-provable", "--m", "3", t5_qc]) == EXIT_OK
        assert "NO (> 3)" in capsys.readouterr().out

    def test_memory_cap(self, tmp_path, capsys):
        path = tmp_path / "cs.qc"
        path.write_text("t 1\nt 2\ncnot 1 2\ntdg 2\ncnot 1 2\n")
        assert main(["tcount-provable", "--m", "4", "--mem-cap", "5",
                     str(path)]) == EXIT_RESOURCE_CAP

    def test_db_dir_env(self, t_qc, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("TCDB_DIR", str(tmp_path / "dbs"))
        assert main(["tcount-provable", "--m", "2", t_qc]) == EXIT_OK
        assert (tmp_path / "dbs" / "d1_0.tcdb").exists()
        capsys.readouterr()
        # second run reuses the saved databases
        assert main(["tcount-provable", "--m", "2", t_qc]) == EXIT_OK
        assert "tcount     1" in capsys.readouterr().out


class TestGen:
    def test_fixture_circuit(self, tmp_path, capsys):
        out = str(tmp_path / "tof.qc")
        assert main(["gen", "toffoli", "--out", out]) == EXIT_OK
        c = parse_circuit(open(out).read())
        assert c.t_gate_count() == 7

    def test_fixture_unitary(self, tmp_path):
        out = str(tmp_path / "u2.json")
        assert main(["gen", "u2", "--out", out]) == EXIT_OK
        assert load_channel(out).n == 4

    def test_random_deterministic(self, tmp_path):
        a, b = str(tmp_path / "a.qc"), str(tmp_path / "b.qc")
        base = ["gen", "random", "--n", "2", "--tgates", "5", "--seed", "3"]
        assert main(base + ["--out", a]) == EXIT_OK
        assert main(base + ["--out", b]) == EXIT_OK
        assert open(a).read() == open(b).read()

    def test_random_needs_parameters(self, tmp_path, capsys):
        assert main(["gen", "random", "--out", str(tmp_path / "x.qc")]) \
            == EXIT_INVALID_INPUT

    def test_unknown_fixture(self, capsys):
        assert main(["gen", "no_such_gate"]) == EXIT_INVALID_INPUT
