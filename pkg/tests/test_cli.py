import json

import pytest

from flatcert.cli import main
from flatcert.graphs import graph_to_json, k6, named_graph
from flatcert.spheres import system_to_json
from flatcert.certificates import bundled_certificate, certificate_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps({
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]],
    }))
    return str(path)


class TestFamily:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "family")
        assert code == 0
        assert out.count("15 edges") == 7
        for name in ("K6", "P7", "K331", "P8", "K44_MINUS_E", "P9", "P10"):
            assert name in out

    def test_json_and_stability(self, capsys):
        code, out1, _ = run(capsys, "family", "--format", "json")
        assert code == 0
        data = json.loads(out1)
        assert len(data["family"]) == 7
        assert sorted(m["vertices"] for m in data["family"]) == [6, 7, 7, 8, 8, 9, 10]
        _, out2, _ = run(capsys, "family", "--format", "json")
        assert out1 == out2  # byte-identical across runs


class TestCycles:
    def test_counts(self, capsys, k4_file):
        code, out, _ = run(capsys, "cycles", k4_file, "--format", "json")
        assert code == 0
        assert json.loads(out)["count"] == 7

    def test_max_len_and_name_input(self, capsys):
        code, out, _ = run(capsys, "cycles", "K6", "--max-len", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)["count"] == 20


class TestBohmeCheck:
    def test_failing_pair_exits_one(self, capsys, k4_file, tmp_path):
        cycles_path = tmp_path / "cycles.json"
        cycles_path.write_text(json.dumps([["a", "b", "c", "d"], ["a", "c", "b", "d"]]))
        code, out, _ = run(capsys, "bohme-check", k4_file, str(cycles_path))
        assert code == 1
        assert "FAIL" in out and "witness" in out

    def test_passing_set(self, capsys, k4_file, tmp_path):
        cycles_path = tmp_path / "cycles.json"
        cycles_path.write_text(json.dumps([["a", "b", "c"], ["a", "b", "d"]]))
        code, out, _ = run(capsys, "bohme-check", k4_file, str(cycles_path))
        assert code == 0 and "PASS" in out


class TestSphereCheck:
    def test_tetrahedron(self, capsys, k4_file, tmp_path):
        sys_path = tmp_path / "system.json"
        sys_path.write_text(json.dumps({
            "faces": [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]]
        }))
        code, out, _ = run(capsys, "sphere-check", k4_file, str(sys_path), "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["is_sphere"] and data["euler_characteristic"] == 2

    def test_not_a_sphere(self, capsys, k4_file, tmp_path):
        sys_path = tmp_path / "system.json"
        sys_path.write_text(json.dumps({"faces": [["a", "b", "c"], ["a", "b", "d"]]}))
        code, out, _ = run(capsys, "sphere-check", k4_file, str(sys_path))
        assert code == 1
        assert "edge-degree" in out


class TestCertCommands:
    def test_bundled_verify_all(self, capsys):
        for name in ("K6", "P7", "K331", "P8", "K44_MINUS_E", "P9"):
            code, out, _ = run(capsys, "cert", "verify", name, "--bundled")
            assert code == 0, (name, out)
            assert out.strip().endswith("certificate: PASS")

    def test_bundled_p10_fails_with_witness(self, capsys):
        code, out, _ = run(capsys, "cert", "verify", "P10", "--bundled", "--format", "json")
        assert code == 1
        data = json.loads(out)
        failing = [c["name"] for c in data["checks"] if not c["pass"]]
        assert failing == ["bohme-system"]
        assert data["checks"][1]["witness"]

    def test_verify_from_file(self, capsys, tmp_path):
        graph_path = tmp_path / "g.json"
        graph_path.write_text(json.dumps(graph_to_json(k6())))
        cert_path = tmp_path / "cert.json"
        cert_path.write_text(json.dumps(certificate_to_json(bundled_certificate("K6"))))
        code, out, _ = run(capsys, "cert", "verify", str(graph_path), str(cert_path))
        assert code == 0

    def test_verify_needs_cert_or_bundled(self, capsys):
        code, _, err = run(capsys, "cert", "verify", "K6")
        assert code == 2 and "bundled" in err

    def test_search(self, capsys):
        code, out, _ = run(
            capsys, "cert", "search", "K6",
            "--max-base-len", "3", "--schema", "TRIANGLE_CONNECTOR",
            "--max-results", "4", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["count"] == 4

    def test_search_empty_exits_one(self, capsys, tmp_path):
        path = tmp_path / "c6.json"
        path.write_text(json.dumps({
            "vertices": list("abcdef"),
            "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "f"], ["a", "f"]],
        }))
        code, _, _ = run(capsys, "cert", "search", str(path))
        assert code == 1


class TestLinkingOmega:
    def test_k6_triangles(self, capsys):
        code, out, _ = run(
            capsys, "linking", "omega", "K6",
            "--seed", "1", "--trials", "3", "--mode", "triangles", "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["parity_histogram"] == {"0": 0, "1": 3}
        assert all(t["parity"] == 1 for t in data["trials"])

    def test_non_family_graph_exits_one(self, capsys, tmp_path):
        path = tmp_path / "c5.json"
        path.write_text(json.dumps({
            "vertices": list("abcde"),
            "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["a", "e"]],
        }))
        code, out, _ = run(capsys, "linking", "omega", str(path), "--trials", "1")
        assert code == 1
        assert "parity 0" in out


class TestExportAndErrors:
    def test_export_dot(self, capsys):
        code, out, _ = run(capsys, "export", "dot", "K331")
        assert code == 0
        assert out.startswith("graph G {") and '"1" -- "a";' in out

    def test_unknown_graph_name(self, capsys):
        code, _, err = run(capsys, "cycles", "NOPE")
        assert code == 2 and "error:" in err

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "cycles", str(path))
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_text_and_json_verdicts_agree(self, capsys):
        code_t, out_t, _ = run(capsys, "cert", "verify", "P9", "--bundled")
        code_j, out_j, _ = run(capsys, "cert", "verify", "P9", "--bundled", "--format", "json")
        assert code_t == code_j == 0
        assert ("PASS" in out_t) and json.loads(out_j)["pass"]
