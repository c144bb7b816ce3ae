import csv
import io
import json
import xml.etree.ElementTree as ET

import pytest

from permcode.cli import main
from permcode.render import RenderSpec, render, render_ascii, render_svg, word_path
from permcode.codewords import parse_word
from permcode.lattice import LatticePath


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_main_class_counts_csv(self, capsys):
        code, out, _ = run(capsys, "count", "--patterns", "2431,4231,1432,4132", "--n-max", "5")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [(r["n"], r["count"]) for r in rows] == [
            ("1", "1"), ("2", "2"), ("3", "6"), ("4", "20"), ("5", "70")]

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "count", "--patterns", "2431,4231,1432,4132", "--n-max", "1")
        assert code == 0
        assert out.splitlines() == ["n,count", "1,1"]

    def test_catalan_style_class(self, capsys):
        code, out, _ = run(capsys, "count", "--patterns", "1324,1342,1432,4132", "--n-max", "5",
                           "--format", "lines")
        assert code == 0
        assert out.splitlines() == ["1 1", "2 2", "3 6", "4 20", "5 70"]

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "count", "--patterns", "2431,4231,1432,4132", "--n-max", "4",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["counts"] == [1, 2, 6, 20]
        assert sorted(data["patterns"]) == ["1,4,3,2", "2,4,3,1", "4,1,3,2", "4,2,3,1"]

    def test_pipe_separated_full_forms(self, capsys):
        code, out, _ = run(capsys, "count", "--patterns", "2,4,3,1|4,2,3,1|1,4,3,2|4,1,3,2",
                           "--n-max", "3")
        assert code == 0
        assert "3,6" in out

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "count", "--patterns", "24x1", "--n-max", "3")
        assert code == 2
        assert "error" in err

    def test_budget_error_exits_3(self, capsys):
        code, _, err = run(capsys, "count", "--patterns", "2431,4231,1432,4132",
                           "--n-max", "8", "--budget", "10")
        assert code == 3
        assert "budget" in err


class TestEncodeDecode:
    def test_figure_round_trip(self, capsys):
        code, out, _ = run(capsys, "encode", "--perm", "245178396")
        assert code == 0
        assert out.strip() == "B,E,2,3,3,5,6,8"
        code, out, _ = run(capsys, "decode", "--word", "B,E,2,3,3,5,6,8")
        assert code == 0
        assert out.strip() == "2,4,5,1,7,8,3,9,6"

    def test_shell_composition_is_identity(self, capsys):
        for text in ("24513", "1", "21", "245178396"):
            _, word_out, _ = run(capsys, "encode", "--perm", text)
            _, perm_out, _ = run(capsys, "decode", "--word", word_out.strip())
            expected = ",".join(text) if len(text) > 1 else text
            assert perm_out.strip() == expected

    def test_encode_rejects_non_avoider(self, capsys):
        code, _, err = run(capsys, "encode", "--perm", "2431")
        assert code == 2
        assert "2431" in err
        assert "1,2,3,4" in err

    def test_decode_names_the_violated_condition(self, capsys):
        code, _, err = run(capsys, "decode", "--word", "B,2,E")
        assert code == 2
        assert "C2" in err
        code, _, err = run(capsys, "decode", "--word", "E,3")
        assert code == 2
        assert "C1" in err


class TestVerify:
    def test_bijection_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bijection", "--n-max", "5")
        assert code == 0
        assert "suite bijection: PASS" in out
        assert "ok bijection n=5" in out

    def test_counts_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "counts", "--n-max", "6")
        assert code == 0
        assert "suite counts: PASS" in out

    def test_paths_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paths", "--n-max", "6")
        assert code == 0
        assert "suite paths: PASS" in out

    def test_identity_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "identity", "--m-max", "8", "--n-max", "8")
        assert code == 0
        assert "suite identity: PASS" in out


class TestScan:
    def test_scan_n4_summary(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        cache = tmp_path / "cache.json"
        code, out, _ = run(capsys, "scan", "--n-max", "4", "--out", str(out_file),
                           "--cache", str(cache))
        assert code == 0
        assert out.strip() == "classes=1524 matches=1524"
        report = json.loads(out_file.read_text())
        assert report["total_classes"] == 1524
        assert report["total_subsets"] == 10626
        assert len(report["reports"]) == 1524

    def test_scan_csv_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "report.csv"
        code, _, _ = run(capsys, "scan", "--n-max", "4", "--out", str(out_file),
                         "--format", "csv", "--cache", str(tmp_path / "c.json"))
        assert code == 0
        rows = list(csv.DictReader(out_file.open()))
        assert len(rows) == 1524 * 4
        assert rows[0]["n"] == "1"
        assert all(r["verdict"] == "matches-central-binomial-prefix" for r in rows[:8])

    def test_scan_deterministic_bytes(self, capsys, tmp_path):
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        run(capsys, "scan", "--n-max", "4", "--out", str(first), "--cache", str(tmp_path / "c1"))
        run(capsys, "scan", "--n-max", "4", "--out", str(second), "--cache", str(tmp_path / "c2"))
        assert first.read_bytes() == second.read_bytes()

    def test_scan_stdout_keeps_summary_on_stderr(self, capsys, tmp_path):
        code, out, err = run(capsys, "scan", "--n-max", "4", "--format", "lines",
                             "--cache", str(tmp_path / "c.json"))
        assert code == 0
        assert "classes=1524" in err
        assert len(out.splitlines()) == 1524


class TestCandidates:
    def test_twelve_rows(self, capsys, tmp_path):
        code, out, _ = run(capsys, "candidates", "--n-max", "5",
                           "--cache", str(tmp_path / "c.json"))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 12
        assert all(line.endswith("matches-central-binomial-prefix") for line in lines)

    def test_csv_format(self, capsys, tmp_path):
        code, out, _ = run(capsys, "candidates", "--n-max", "4", "--format", "csv",
                           "--cache", str(tmp_path / "c.json"))
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 12
        assert rows[0]["patterns"].count("|") == 3


class TestRender:
    def test_ascii_figure(self, capsys):
        code, out, _ = run(capsys, "render", "--word", "B,E,2,3,3,5,6,8", "--format", "ascii")
        assert code == 0
        assert "o" in out and "/" in out
        assert "(6, 7)" in out
        assert "y = x + 2" in out
        # 8 vertex rows (y = 7 .. 0) plus edge rows in between
        vertex_rows = [line for line in out.splitlines() if line.strip().startswith(tuple("01234567"))]
        assert len(vertex_rows) >= 8

    def test_svg_structure(self, capsys, tmp_path):
        out_file = tmp_path / "fig.svg"
        code, _, _ = run(capsys, "render", "--word", "BE233568", "--format", "svg",
                         "--out", str(out_file))
        assert code == 0
        root = ET.fromstring(out_file.read_text())
        assert root.tag.endswith("svg")
        circles = [el for el in root.iter() if el.tag.endswith("circle")]
        assert len(circles) == 14  # 13 steps + 1
        polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
        assert len(polylines) == 1
        dashed = [el for el in root.iter() if el.get("stroke-dasharray")]
        assert dashed

    def test_all_marker_word_needs_flag(self, capsys):
        code, _, err = run(capsys, "render", "--word", "B,E")
        assert code == 2
        assert "allow-empty-path" in err
        code, out, _ = run(capsys, "render", "--word", "B,E", "--allow-empty-path")
        assert code == 0
        assert "barrier y = x + 2" in out

    def test_invalid_word_rejected(self, capsys):
        code, _, err = run(capsys, "render", "--word", "B,2,E")
        assert code == 2
        assert "C2" in err


class TestRenderModule:
    def test_word_path_strips_markers(self):
        path, barrier = word_path(parse_word("B,E,2,3,3,5,6,8"))
        assert barrier == 2
        assert path.end == (6, 7)

    def test_render_dispatch(self):
        path, barrier = word_path(parse_word("B,E,2"))
        ascii_art = render(RenderSpec(path=path, barrier=barrier, fmt="ascii"))
        assert ascii_art == render_ascii(path, barrier)
        svg = render(RenderSpec(path=path, barrier=barrier, fmt="svg", cell=24))
        assert svg == render_svg(path, barrier, 24)
        with pytest.raises(ValueError):
            render(RenderSpec(path=path, barrier=barrier, fmt="png"))

    def test_svg_vertex_count_degenerate(self):
        svg = render_svg(LatticePath("N"), 2)
        root = ET.fromstring(svg)
        circles = [el for el in root.iter() if el.tag.endswith("circle")]
        assert len(circles) == 2
