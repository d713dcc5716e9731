import json
import subprocess
import sys

import pytest

import matrix_oracle
from zerodiv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestInfo:
    def test_n12(self, capsys):
        code, out, _ = run(capsys, "info", "12")
        assert code == 0
        assert "vertices: 7" in out
        assert "edges: 8" in out
        assert "diameter: 3 (theorem)" in out
        assert "center (theorem): size 3 {4,6,8}" in out
        assert "center (oracle): size 3 {4,6,8}" in out

    def test_prime(self, capsys):
        code, out, _ = run(capsys, "info", "7")
        assert code == 0
        assert "vertices: 0" in out and "empty graph" in out

    def test_singleton(self, capsys):
        code, out, _ = run(capsys, "info", "4")
        assert code == 0
        for line in ("vertices: 1", "edges: 0", "diameter: 0", "center (oracle): size 1 {2}"):
            assert line in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "info", "35")
        doc = json.loads(out)
        assert doc["factorization"] == [[5, 1], [7, 1]]
        assert (doc["diameter"], doc["diameter_source"]) == (2, "oracle")

    def test_above_cap(self, capsys):
        code, out, _ = run(capsys, "--oracle-max-n", "100", "info", "1000000000000")
        assert code == 0
        assert "edges: n/a" in out and "diameter: 3 (theorem)" in out


class TestQueries:
    def test_center_disagree(self, capsys):
        code, out, _ = run(capsys, "center", "6", "--method", "both")
        assert code == 2
        assert out.splitlines() == ["theorem: {2,3,4}", "oracle:  {3}", "DISAGREE"]

    def test_cut_edges_agree(self, capsys):
        code, out, _ = run(capsys, "cut-edges", "8", "--method", "both")
        assert code == 0
        assert out.splitlines() == ["theorem: {(2,4),(4,6)}", "oracle:  {(2,4),(4,6)}", "AGREE"]

    def test_cut_edges_z9_disagree(self, capsys):
        code, out, _ = run(capsys, "cut-edges", "9")
        assert code == 2

    def test_degree(self, capsys):
        code, out, _ = run(capsys, "degree", "12", "8", "--method", "theorem")
        assert (code, out) == (0, "3\n")
        code, out, _ = run(capsys, "degree", "12", "8")
        assert code == 0 and "AGREE" in out

    def test_neighbors_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "neighbors", "12", "8")
        doc = json.loads(out)
        assert doc["theorem"] == doc["oracle"] == [3, 6, 9]
        assert doc["verdict"] == "AGREE"

    def test_distance(self, capsys):
        code, out, _ = run(capsys, "distance", "12", "2", "3")
        assert code == 0 and out.splitlines()[-1] == "AGREE"
        code, out, _ = run(capsys, "distance", "12", "2", "9", "--method", "oracle")
        assert (code, out) == (0, "3\n")
        code, _, err = run(capsys, "distance", "12", "2", "9", "--method", "theorem")
        assert code == 1 and "no closed form" in err

    def test_default_method_above_cap(self, capsys):
        code, out, _ = run(capsys, "--oracle-max-n", "50", "center", "60")
        assert (code, out) == (0, "{12,20,24,30,36,40,48}\n")

    def test_oracle_above_cap(self, capsys):
        code, _, err = run(capsys, "--oracle-max-n", "50", "center", "60", "--method", "oracle")
        assert code == 3 and "cap" in err

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("ZDG_ORACLE_MAX_N", "50")
        code, _, _ = run(capsys, "center", "58", "--method", "both")
        assert code == 3
        code, _, _ = run(capsys, "center", "58", "--method", "both", "--oracle-max-n", "100")
        assert code == 2

    @pytest.mark.parametrize("argv", [
        ["bogus"], ["degree", "12"], ["degree", "12", "5"], ["degree", "x", "2"],
        ["info", "1"], ["center", "12", "--method", "psychic"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == 1


class TestExport:
    def test_dot(self, capsys):
        code, out, _ = run(capsys, "export", "8", "--format", "dot")
        assert (code, out) == (0, "graph zdg_8 {\n  2 -- 4;\n  4 -- 6;\n}\n")

    def test_dot_empty(self, capsys):
        _, out, _ = run(capsys, "export", "7", "--format", "dot")
        assert out == "graph zdg_7 {\n}\n"

    def test_dot_isolated(self, capsys):
        _, out, _ = run(capsys, "export", "4")
        assert out == "graph zdg_4 {\n  2;\n}\n"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "export", "6", "--format", "json")
        assert out == '{"n":6,"vertices":[2,3,4],"edges":[[2,3],[3,4]]}\n'

    def test_csv(self, capsys):
        _, out, _ = run(capsys, "export", "8", "--format", "csv")
        assert out == "lo,hi\n2,4\n4,6\n"

    def test_dot_round_trip(self, tmp_path, capsys):
        for n in (12, 30, 64, 97, 210):
            path = tmp_path / f"g{n}.dot"
            assert run(capsys, "export", str(n), "--out", str(path))[0] == 0
            lines = path.read_text().splitlines()
            assert lines[0] == f"graph zdg_{n} {{" and lines[-1] == "}"
            edges = set()
            for line in lines[1:-1]:
                lo, hi = line.strip().rstrip(";").split(" -- ")
                edges.add((int(lo), int(hi)))
            assert edges == matrix_oracle.edge_set(n)

    def test_above_cap(self, capsys):
        code, _, _ = run(capsys, "--oracle-max-n", "10", "export", "12")
        assert code == 3

    def test_unwritable(self, tmp_path, capsys):
        code, _, _ = run(capsys, "export", "8", "--out", str(tmp_path / "missing" / "x.dot"))
        assert code == 1


class TestVerify:
    def test_cut_edges_reports_z9(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "--min", "2", "--max", "100",
                           "--check", "cut-edges", "--report", str(report))
        assert code == 2
        doc = json.loads(report.read_text())
        assert doc == {
            "range": [2, 100],
            "checks": [{
                "check": "cut-edges", "agree": 98, "disagree": 1, "skipped": 0,
                "discrepancies": [{"n": 9, "theorem": [], "oracle": [[3, 6]]}],
            }],
        }

    def test_center_disagrees(self, capsys):
        code, out, _ = run(capsys, "verify", "--min", "2", "--max", "100", "--check", "center")
        assert code == 2
        doc = json.loads(out)
        assert doc["checks"][0]["discrepancies"][0] == {"n": 6, "theorem": [2, 3, 4], "oracle": [3]}

    def test_connectivity_diameter_agree(self, capsys):
        code, out, _ = run(capsys, "verify", "--min", "2", "--max", "50",
                           "--check", "connectivity,diameter")
        assert code == 0
        assert [c["check"] for c in json.loads(out)["checks"]] == ["connectivity", "diameter"]

    def test_key_order(self, capsys):
        _, out, _ = run(capsys, "verify", "--min", "2", "--max", "20")
        doc = json.loads(out)
        assert list(doc) == ["range", "checks"]
        assert [c["check"] for c in doc["checks"]] == [
            "cut-edges", "center", "degree", "diameter", "connectivity", "prime-distance"]

    @pytest.mark.parametrize("argv, expected", [
        (["verify", "--min", "2", "--max", "100", "--check", "girth"], 1),
        (["verify", "--min", "5", "--max", "3"], 1),
        (["verify", "--min", "2", "--max", "10", "--jobs", "0"], 1),
        (["--oracle-max-n", "50", "verify", "--min", "2", "--max", "100"], 3),
    ])
    def test_errors(self, capsys, argv, expected):
        assert run(capsys, *argv)[0] == expected


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zerodiv", "degree", "12", "8", "--method", "theorem"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
