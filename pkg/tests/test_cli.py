"""Command-line behavior: verdict-driven exit codes, formats, files."""

import json
from pathlib import Path

import pytest

from roughgrace.cli import main

FIXTURE = str(Path(__file__).parent / "fixtures" / "delivery.csv")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIngest:
    def test_explicit_target(self, capsys):
        code, out, _ = run(capsys, "ingest", FIXTURE, "--decision", "Delivery",
                           "--target", "1,4,5,7")
        assert code == 0
        assert "target (4): 1, 4, 5, 7" in out

    def test_decision_selector(self, capsys):
        code, out, _ = run(capsys, "ingest", FIXTURE, "--decision", "Delivery",
                           "--target-decision", "Delivery=Fullterm", "--format", "json")
        assert code == 0
        assert json.loads(out)["target"] == ["1", "4", "5", "7"]

    def test_empty_target_string(self, capsys):
        code, out, _ = run(capsys, "ingest", FIXTURE, "--target", "", "--format", "json")
        assert code == 0
        assert json.loads(out)["target"] == []

    def test_both_selectors_conflict(self, capsys):
        code, _, err = run(capsys, "ingest", FIXTURE, "--target", "1",
                           "--target-decision", "Delivery=Fullterm")
        assert code == 2
        assert "error" in err

    def test_neither_selector_conflict(self, capsys):
        code, _, _ = run(capsys, "ingest", FIXTURE)
        assert code == 2

    def test_unknown_target_id_is_domain_error(self, capsys):
        code, _, err = run(capsys, "ingest", FIXTURE, "--target", "1,99")
        assert code == 4
        assert "99" in err

    def test_malformed_csv_is_parse_error(self, capsys, tmp_path):
        p = tmp_path / "bad.csv"
        p.write_text("id,A\no1,1,extra\n")
        code, _, err = run(capsys, "ingest", str(p), "--target", "")
        assert code == 3
        assert "line 2" in err

    def test_bad_selector_shape(self, capsys):
        code, _, _ = run(capsys, "ingest", FIXTURE, "--target-decision", "DeliveryFullterm")
        assert code == 2


class TestBuildGraph:
    def test_pipeline_prints_membership_table(self, capsys, tmp_path):
        out_file = tmp_path / "g.json"
        code, out, _ = run(capsys, "build-graph", FIXTURE, "--decision", "Delivery",
                           "--target", "1,4,5,7", "--out", str(out_file))
        assert code == 0
        for row in ("1       1/1", "2       0/1", "7       1/1"):
            assert row in out
        doc = json.loads(out_file.read_text())
        assert len(doc["edges"]) == 18
        assert doc["vertices"][0] == {"id": "1", "weight": "1/1"}

    def test_attrs_subset(self, capsys):
        code, out, _ = run(capsys, "build-graph", FIXTURE, "--decision", "Delivery",
                           "--target", "1,4,5,7", "--attrs", "Age", "--format", "table")
        assert code == 0
        assert "1/2" in out  # the Age-only partition has fractional memberships

    def test_empty_target_gives_edgeless_graph(self, capsys):
        code, out, _ = run(capsys, "build-graph", FIXTURE, "--target", "",
                           "--format", "json", "--decision", "Delivery")
        assert code == 0
        assert json.loads(out)["edges"] == []

    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "build-graph", FIXTURE, "--target", "1,4,5,7",
                           "--decision", "Delivery", "--format", "dot")
        assert code == 0
        assert out.startswith("graph G {")

    def test_unknown_attr_is_parameter_error(self, capsys):
        code, _, _ = run(capsys, "build-graph", FIXTURE, "--target", "",
                         "--attrs", "Nope")
        assert code == 2


class TestGenerate:
    def test_json_document(self, capsys):
        code, out, _ = run(capsys, "generate", "path", "--n", "3")
        assert code == 0
        doc = json.loads(out)
        assert [v["id"] for v in doc["vertices"]] == ["v1", "v2", "v3"]

    def test_weights_attach(self, capsys):
        code, out, _ = run(capsys, "generate", "path", "--n", "2",
                           "--weights", "1/2,1")
        assert code == 0
        assert json.loads(out)["vertices"][0]["weight"] == "1/2"

    def test_weights_arity_checked(self, capsys):
        code, _, _ = run(capsys, "generate", "path", "--n", "3", "--weights", "1,1")
        assert code == 2

    def test_bad_n_is_parameter_error(self, capsys):
        code, _, _ = run(capsys, "generate", "cycle", "--n", "2")
        assert code == 2

    def test_unknown_family_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "generate", "wheel", "--n", "3")
        assert code == 2


class TestLabel:
    def test_graceful_family_exits_zero(self, capsys):
        code, out, _ = run(capsys, "label", "path", "--n", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["graceful"] is True
        assert doc["vertex_labels"] == {"v1": 2, "v2": 4, "v3": 6, "v4": 8}
        assert [row["induced"] for row in doc["edge_labels"]] == [5, 7, 9]

    def test_literal_even_comb_fails_verdict(self, capsys):
        code, out, _ = run(capsys, "label", "comb", "--n", "4", "--mode", "literal")
        assert code == 1
        assert json.loads(out)["graceful"] is False

    def test_corrected_even_comb_passes(self, capsys):
        code, _, _ = run(capsys, "label", "comb", "--n", "4")
        assert code == 0

    def test_table_rendering(self, capsys):
        code, out, _ = run(capsys, "label", "star", "--n", "4", "--format", "table")
        assert code == 0
        assert "graceful: yes" in out
        assert "✓" in out and "✗" in out  # one leaf coincides


class TestVerifyInduce:
    def make_doc(self, capsys, tmp_path, *argv) -> Path:
        path = tmp_path / "doc.json"
        code = main(list(argv) + ["--out", str(path), "--quiet"])
        capsys.readouterr()
        assert code in (0, 1)
        return path

    def test_verify_round_trip(self, capsys, tmp_path):
        doc = self.make_doc(capsys, tmp_path, "label", "cycle", "--n", "5")
        code, out, _ = run(capsys, "verify", str(doc))
        assert code == 0
        assert "verdict: graceful" in out

    def test_verify_rejects_bad_labeling(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "graph": {
                "vertices": [{"id": "a", "weight": "1/1"}, {"id": "b", "weight": "1/1"}],
                "edges": [["a", "b"]],
            },
            "vertex_labels": {"a": 2, "b": 3},
        }))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1
        assert "FAIL" in out
        assert "bad label: b = 3" in out

    def test_induce_recomputes(self, capsys, tmp_path):
        doc = self.make_doc(capsys, tmp_path, "label", "ladder", "--n", "3")
        code, out, _ = run(capsys, "induce", str(doc))
        assert code == 0
        parsed = json.loads(out)
        assert parsed["m"] == 7
        assert parsed["graceful"] is True

    def test_missing_file_is_parse_error(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", str(tmp_path / "nope.json"))
        assert code in (3, 4)  # unreadable file surfaces as a parse failure

    def test_graph_by_reference(self, capsys, tmp_path):
        gpath = tmp_path / "g.json"
        main(["generate", "path", "--n", "2", "--out", str(gpath), "--quiet"])
        capsys.readouterr()
        doc = tmp_path / "lab.json"
        doc.write_text(json.dumps({
            "graph": "g.json",
            "vertex_labels": {"v1": 0, "v2": 4},
        }))
        code, out, _ = run(capsys, "verify", str(doc))
        assert code == 0


class TestAudit:
    def test_clean_family_exits_zero(self, capsys):
        code, out, _ = run(capsys, "audit", "path", "--n", "10")
        assert code == 0
        assert "discrepancies: 0/9" in out

    def test_mismatching_family_exits_one(self, capsys):
        code, out, _ = run(capsys, "audit", "star", "--n", "4")
        assert code == 1
        assert "✗" in out

    def test_uncovered_glyph_distinct(self, capsys):
        code, out, _ = run(capsys, "audit", "ladder", "--n", "3", "--format", "table")
        assert code == 1
        assert "~" in out and "✗" in out and "✓" in out

    def test_range_audits_each_n(self, capsys):
        code, out, _ = run(capsys, "audit", "path", "--range", "2..5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert [r["n"] for r in doc["reports"]] == [2, 3, 4, 5]

    def test_mode_both_doubles_even_sizes(self, capsys):
        code, out, _ = run(capsys, "audit", "comb", "--range", "3..4",
                           "--mode", "both", "--format", "json")
        assert code == 1  # literal comb n=4 pendants mismatch
        doc = json.loads(out)
        assert [(r["n"], r["mode"]) for r in doc["reports"]] == [
            (3, "corrected"), (4, "corrected"), (4, "literal"),
        ]

    def test_n_and_range_conflict(self, capsys):
        code, _, _ = run(capsys, "audit", "path", "--n", "3", "--range", "2..4")
        assert code == 2

    def test_bad_range_shape(self, capsys):
        code, _, _ = run(capsys, "audit", "path", "--range", "5")
        assert code == 2
        code, _, _ = run(capsys, "audit", "path", "--range", "5..2")
        assert code == 2


class TestSearch:
    def graph_file(self, capsys, tmp_path, family="cycle", n="4") -> str:
        path = tmp_path / "g.json"
        main(["generate", family, "--n", n, "--out", str(path), "--quiet"])
        capsys.readouterr()
        return str(path)

    def test_found_outputs_labeling_document(self, capsys, tmp_path):
        gfile = self.graph_file(capsys, tmp_path)
        code, out, _ = run(capsys, "search", gfile, "--cap", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["graceful"] is True
        assert set(doc["vertex_labels"]) == {"v1", "v2", "v3", "v4"}

    def test_count_all(self, capsys, tmp_path):
        gfile = self.graph_file(capsys, tmp_path)
        code, out, _ = run(capsys, "search", gfile, "--cap", "3", "--count-all")
        assert code == 0
        assert json.loads(out)["count"] == 8

    def test_parallel_same_result(self, capsys, tmp_path):
        gfile = self.graph_file(capsys, tmp_path, family="path", n="5")
        _, serial, _ = run(capsys, "search", gfile, "--cap", "5")
        _, threaded, _ = run(capsys, "search", gfile, "--cap", "5", "--parallel", "4")
        assert serial == threaded

    def test_cap_too_small_is_parameter_error(self, capsys, tmp_path):
        gfile = self.graph_file(capsys, tmp_path)
        code, _, _ = run(capsys, "search", gfile, "--cap", "1")
        assert code == 2

    def test_none_verdict_exits_one(self, capsys, tmp_path):
        # K4 within a minimal pool admits no valid assignment
        gfile = tmp_path / "k4.json"
        gfile.write_text(json.dumps({
            "vertices": [{"id": c, "weight": "1/1"} for c in "abcd"],
            "edges": [["a", "b"], ["a", "c"], ["a", "d"],
                      ["b", "c"], ["b", "d"], ["c", "d"]],
        }))
        count_code, out, _ = run(capsys, "search", str(gfile), "--cap", "3", "--count-all")
        first_code, out2, _ = run(capsys, "search", str(gfile), "--cap", "3")
        count = json.loads(out)["count"]
        assert (count == 0) == (count_code == 1)
        assert first_code == count_code


class TestExportDot:
    def test_graph_file(self, capsys, tmp_path):
        gpath = tmp_path / "g.json"
        main(["generate", "star", "--n", "3", "--out", str(gpath), "--quiet"])
        capsys.readouterr()
        code, out, _ = run(capsys, "export-dot", str(gpath))
        assert code == 0
        assert out.startswith("graph G {")
        assert '"u0" -- "u1";' in out

    def test_labeling_file_attaches_induced(self, capsys, tmp_path):
        lpath = tmp_path / "lab.json"
        main(["label", "path", "--n", "4", "--out", str(lpath), "--quiet"])
        capsys.readouterr()
        code, out, _ = run(capsys, "export-dot", str(lpath))
        assert code == 0
        assert '"v1" -- "v2" [label="5"];' in out

    def test_out_writes_file(self, capsys, tmp_path):
        gpath = tmp_path / "g.json"
        dpath = tmp_path / "g.dot"
        main(["generate", "path", "--n", "2", "--out", str(gpath), "--quiet"])
        capsys.readouterr()
        code, _, _ = run(capsys, "export-dot", str(gpath), "--out", str(dpath))
        assert code == 0
        assert dpath.read_text().startswith("graph G {")


class TestGlobalFlags:
    def test_quiet_suppresses_stdout(self, capsys):
        code, out, _ = run(capsys, "label", "path", "--n", "3", "--quiet")
        assert code == 0
        assert out == ""

    def test_invalid_format_for_command(self, capsys):
        code, _, err = run(capsys, "ingest", FIXTURE, "--target", "", "--format", "dot")
        assert code == 2
        assert "not valid" in err

    def test_no_subcommand_is_usage_error(self, capsys):
        assert run(capsys, )[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_out_files_identical_across_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "label", "path_star", "--n", "3", "--out", str(a), "--quiet")
        run(capsys, "label", "path_star", "--n", "3", "--out", str(b), "--quiet")
        assert a.read_bytes() == b.read_bytes()
