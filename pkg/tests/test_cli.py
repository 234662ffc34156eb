import json
import subprocess
import sys

from diagnoscope.cli import main
from diagnoscope.families import complete, hypercube, petersen
from diagnoscope.formats import emit_edge_list, emit_graph6, gamma_spec_to_json, parse_graph6
from diagnoscope.families import GammaSpec


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_hypercube_graph6(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "hypercube", "3")
        assert code == 0
        assert parse_graph6(out.strip()) == hypercube(3)

    def test_edge_list_output(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "complete", "4", "--format", "edge-list")
        assert code == 0
        assert out.splitlines()[0] == "4 6"

    def test_circulant(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "circulant", "8", "1", "2")
        assert code == 0
        assert parse_graph6(out.strip()).min_degree == 4

    def test_gamma_from_spec_file(self, capsys, tmp_path):
        spec = GammaSpec(1, 3, 4, core_edges=((0, 1), (0, 2), (1, 2)))
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(gamma_spec_to_json(spec)))
        code, out, _ = run_cli(capsys, "gen", "gamma", str(path))
        assert code == 0
        assert parse_graph6(out.strip()).n == 7

    def test_unknown_kind(self, capsys):
        code, _, err = run_cli(capsys, "gen", "dodecahedron")
        assert code == 1
        assert "unknown graph kind" in err

    def test_unsatisfiable_random(self, capsys):
        code, _, err = run_cli(capsys, "gen", "random-t-connected", "4", "9")
        assert code == 1


class TestAnalyze:
    def test_pipeline_hypercube_pmc(self, capsys, tmp_path):
        path = tmp_path / "q3.g6"
        path.write_text(emit_graph6(hypercube(3)) + "\n")
        code, out, _ = run_cli(
            capsys, "analyze", str(path), "--model", "pmc", "--h-max", "1",
            "--method", "brute",
        )
        assert code == 0
        report = json.loads(out)
        assert report["graph"]["n"] == 8
        assert report["kappa"] == 3
        assert report["maximally_connected"] is True
        values = {(r["model"], r["h"]): r["value"] for r in report["results"]}
        assert values == {("pmc", 0): 3, ("pmc", 1): 2}
        for r in report["results"]:
            assert r["method"] == "brute_force"
            assert "worst_scenario" in r

    def test_auto_uses_theorems_on_petersen(self, capsys, tmp_path):
        path = tmp_path / "pet.g6"
        path.write_text(emit_graph6(petersen()) + "\n")
        code, out, _ = run_cli(capsys, "analyze", str(path), "--h-max", "1")
        assert code == 0
        report = json.loads(out)
        values = {(r["model"], r["h"]): r["value"] for r in report["results"]}
        assert values == {
            ("pmc", 0): 3, ("pmc", 1): 2, ("mm", 0): 3, ("mm", 1): 2,
        }
        assert all(r["method"] == "theorem" for r in report["results"])
        assert report["exceptional_family"]["member"] is False

    def test_auto_equals_brute_where_both_produce(self, capsys, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(emit_graph6(hypercube(3)) + "\n")
        _, auto_out, _ = run_cli(capsys, "analyze", str(path), "--h-max", "1")
        _, brute_out, _ = run_cli(
            capsys, "analyze", str(path), "--h-max", "1", "--method", "brute"
        )
        auto = json.loads(auto_out)
        brute = json.loads(brute_out)
        for a, b in zip(auto["results"], brute["results"]):
            assert a["value"] == b["value"]

    def test_bounds_only_omits_value_when_no_theorem(self, capsys, tmp_path):
        path = tmp_path / "c5.el"
        from diagnoscope.families import cycle

        path.write_text(emit_edge_list(cycle(5)))
        code, out, _ = run_cli(
            capsys, "analyze", str(path), "--method", "bounds", "--model", "mm", "--h-max", "0"
        )
        assert code == 0
        report = json.loads(out)
        entry = report["results"][0]
        # delta = 2 < 3: the comparison-model rules cannot apply
        assert "value" not in entry
        assert entry["bounds"]["upper"] == 2

    def test_edge_list_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(emit_edge_list(complete(4))))
        code, out, _ = run_cli(capsys, "analyze", "-", "--h-max", "0", "--model", "pmc")
        assert code == 0
        assert json.loads(out)["graph"]["format_echo"] == "edge-list"

    def test_malformed_file_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.el"
        path.write_text("3 1\n0 0\n")
        code, _, err = run_cli(capsys, "analyze", str(path))
        assert code == 2
        assert "line 2" in err

    def test_cap_exit_3(self, capsys, tmp_path):
        path = tmp_path / "k5.g6"
        path.write_text(emit_graph6(complete(5)) + "\n")
        code, _, err = run_cli(capsys, "analyze", str(path), "--cap", "4")
        assert code == 3
        assert "cap" in err.lower()

    def test_byte_stable(self, capsys, tmp_path):
        path = tmp_path / "pet.g6"
        path.write_text(emit_graph6(petersen()) + "\n")
        _, first, _ = run_cli(capsys, "analyze", str(path), "--h-max", "1")
        _, second, _ = run_cli(capsys, "analyze", str(path), "--h-max", "1")
        assert first == second


class TestOtherCommands:
    def test_usage_error_exit_1(self, capsys):
        code, _, _ = run_cli(capsys, "analyze", "--model", "bogus")
        assert code == 1

    def test_no_command_prints_help(self, capsys):
        code, _, err = run_cli(capsys)
        assert code == 1
        assert "usage" in err.lower()

    def test_recognize(self, capsys, tmp_path):
        spec = GammaSpec(1, 3, 4, core_edges=((0, 1), (0, 2), (1, 2)))
        from diagnoscope.families import make_gamma

        path = tmp_path / "gamma.g6"
        path.write_text(emit_graph6(make_gamma(spec)) + "\n")
        code, out, _ = run_cli(capsys, "recognize", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["member"] is True
        assert payload["index"] == 1
        assert payload["status"] == "decided"

    def test_syndrome_roundtrip(self, capsys, tmp_path):
        path = tmp_path / "q3.g6"
        path.write_text(emit_graph6(hypercube(3)) + "\n")
        code, out, _ = run_cli(
            capsys, "syndrome", str(path), "--faults", "2", "--model", "pmc",
            "--policy", "random", "--seed", "7", "--t", "3",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["faults"] == [2]
        assert payload["candidates"] == [[2]]
        assert payload["unique"] is True
        assert len(payload["syndrome"]) == 24

    def test_paths_pair(self, capsys, tmp_path):
        path = tmp_path / "q3.g6"
        path.write_text(emit_graph6(hypercube(3)) + "\n")
        code, out, _ = run_cli(capsys, "paths", str(path), "--pair", "0", "7")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 3
        assert len(payload["paths"]) == 3

    def test_paths_kappa(self, capsys, tmp_path):
        path = tmp_path / "pet.g6"
        path.write_text(emit_graph6(petersen()) + "\n")
        code, out, _ = run_cli(capsys, "paths", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["kappa"] == 3
        assert payload["maximally_connected"] is True

    def test_verify_json_smoke(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--claims", "connectivity_under_edge_deletion",
            "--format", "json", "--trials", "2",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["fail"] == 0

    def test_verify_unknown_claim(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--claims", "nope")
        assert code == 1
        assert "unknown claims" in err


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "diagnoscope", "gen", "petersen"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout.strip()) == petersen()
