import json
import xml.etree.ElementTree as ET

import pytest

from tri_extremal.cli import main

SQUARE = "0 0\n0 1\n1 1\n1 0\n"


@pytest.fixture
def square_file(tmp_path):
    f = tmp_path / "square.txt"
    f.write_text(SQUARE)
    return str(f)


@pytest.fixture
def tri_file(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("0 0\n1 3\n3 0\n")
    return str(f)


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    assert rc == 0, out
    return json.loads(out)


class TestMaxTriangle:
    def test_square_human(self, square_file, capsys):
        assert main(["max-triangle", square_file]) == 0
        out = capsys.readouterr().out
        assert "area: 1/2" in out

    def test_square_json(self, square_file, capsys):
        payload = run_json(capsys, ["max-triangle", square_file, "--json"])
        assert payload["result"]["area"] == "1/2"
        assert sorted(payload["counters"]) == \
            ["cursor_advances", "gadget_calls", "predicate_evals"]
        assert payload["input"]["n"] == 4
        assert "wall_time_s" not in payload

    def test_triangle_is_itself(self, tri_file, capsys):
        payload = run_json(capsys, ["max-triangle", tri_file, "--json"])
        assert payload["result"]["indices"] == [0, 1, 2]
        assert payload["result"]["area"] == "9/2"

    def test_byte_identical_json(self, square_file, capsys):
        main(["max-triangle", square_file, "--json"])
        first = capsys.readouterr().out
        main(["max-triangle", square_file, "--json"])
        second = capsys.readouterr().out
        assert first == second


class TestListAndEnclosing:
    def test_list_3stable_square(self, square_file, capsys):
        payload = run_json(capsys, ["list-3stable", square_file, "--json"])
        tris = payload["result"]["triangles"]
        assert len(tris) == 4
        assert all(t["area"] == "1/2" for t in tris)
        assert [t["indices"] for t in tris] == \
            [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]

    def test_min_enclosing_square(self, square_file, capsys):
        payload = run_json(capsys, ["min-enclosing", square_file, "--json"])
        assert payload["result"]["area"] == "2"
        assert len(payload["result"]["minima"]) == 4
        src = payload["result"]["source"]
        assert {c["unit"]["kind"] for c in src["corners"]} == {"vertex"}

    def test_list_g3stable_square(self, square_file, capsys):
        payload = run_json(capsys, ["list-g3stable", square_file, "--json"])
        assert len(payload["result"]["triangles"]) == 4

    def test_trace_jsonl_schema(self, square_file, tmp_path, capsys):
        trace = tmp_path / "trace.jsonl"
        rc = main(["list-3stable", square_file, "--json", "--trace", str(trace)])
        capsys.readouterr()
        assert rc == 0
        lines = trace.read_text().strip().split("\n")
        assert lines
        for line in lines:
            rec = json.loads(line)
            assert set(rec) == {"B", "C", "A", "decision", "reported"}
            assert rec["decision"] in ("KillB", "KillC")
            for t in rec["reported"]:
                assert len(t) == 3
        # at least one iteration reported a triangle
        assert any(json.loads(line)["reported"] for line in lines)

    def test_svg_renders(self, square_file, tmp_path, capsys):
        svg = tmp_path / "trace.svg"
        rc = main(["list-3stable", square_file, "--json", "--svg", str(svg)])
        capsys.readouterr()
        assert rc == 0
        root = ET.parse(str(svg)).getroot()
        assert root.tag.endswith("svg")
        assert len(root) > 3

    def test_general_trace(self, square_file, tmp_path, capsys):
        trace = tmp_path / "gt.jsonl"
        rc = main(["min-enclosing", square_file, "--json", "--trace", str(trace)])
        capsys.readouterr()
        assert rc == 0
        for line in trace.read_text().strip().split("\n"):
            rec = json.loads(line)
            assert rec["decision"] in ("KillB", "KillC")
            assert rec["reported"] == []


class TestGen:
    def test_gen_stdout_parses(self, capsys):
        rc = main(["gen", "--n", "12", "--seed", "2", "--bound", "100"])
        out = capsys.readouterr().out
        assert rc == 0
        from tri_extremal import parse_polygon

        assert parse_polygon(out).n == 12

    def test_gen_pipe_to_max(self, tmp_path, capsys):
        f = tmp_path / "gen.txt"
        assert main(["gen", "--n", "50", "--seed", "5", "--bound", "10000",
                     "--out", str(f)]) == 0
        payload = run_json(capsys, ["max-triangle", str(f), "--json"])
        assert payload["input"]["n"] == 50

    def test_gen_flag_validation(self, capsys):
        assert main(["gen", "--n", "2", "--seed", "1", "--bound", "10"]) == 2
        capsys.readouterr()


class TestVerifyAndBench:
    def test_verify_small(self, capsys, monkeypatch):
        monkeypatch.setenv("TRI_EXTREMAL_THREADS", "1")
        rc = main(["verify", "--n-max", "14", "--cases", "2", "--seed", "1"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "8/8 passed" in out
        assert out.count("PASS") == 8

    def test_verify_parallel_workers(self, capsys, monkeypatch):
        monkeypatch.setenv("TRI_EXTREMAL_THREADS", "2")
        rc = main(["verify", "--n-max", "10", "--cases", "2", "--seed", "3"])
        out = capsys.readouterr().out
        assert rc == 0 and "8/8 passed" in out
        # aggregation is ordered by case index regardless of worker timing
        ids = [int(line.split()[1]) for line in out.splitlines()
               if line.startswith("case ")]
        assert ids == sorted(ids)

    def test_bench_runs(self, capsys):
        rc = main(["bench", "--sizes", "500,1000", "--seed", "1", "--json"])
        out = capsys.readouterr().out
        assert rc == 0
        payload = json.loads(out)
        assert [row["n"] for row in payload["sizes"]] == [500, 1000]
        for row in payload["sizes"]:
            assert row["three_stable"]["counters"]["cursor_advances"] <= 6 * row["n"]
            assert row["general"]["counters"]["cursor_advances"] <= 12 * row["n"]

    def test_bench_size_parsing(self, capsys):
        rc = main(["bench", "--sizes", "1e3", "--seed", "1", "--mode", "3stable"])
        capsys.readouterr()
        assert rc == 0

    def test_bench_bad_size(self, capsys):
        assert main(["bench", "--sizes", "abc", "--seed", "1"]) == 2
        capsys.readouterr()


class TestErrors:
    def test_missing_file(self, capsys):
        assert main(["max-triangle", "/nonexistent/poly.txt"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_invalid_polygon(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("0 0\n1 0\n2 0\n1 1\n")
        assert main(["max-triangle", str(f)]) == 2
        assert "collinear" in capsys.readouterr().err

    def test_parse_error_with_line(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("0 0\nnope\n1 1\n")
        assert main(["max-triangle", str(f)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_unknown_flag(self, square_file, capsys):
        assert main(["max-triangle", square_file, "--frobnicate"]) == 2
        capsys.readouterr()

    def test_lane_flag(self, square_file, capsys):
        payload = run_json(capsys, ["--lane", "pure", "max-triangle",
                                    square_file, "--json"])
        assert payload["result"]["area"] == "1/2"

    def test_forced_compiled_overflow_is_clean(self, tmp_path, capsys):
        from tri_extremal import kernel

        if not kernel.HAVE_COMPILED:
            pytest.skip("compiled kernel not built")
        big = 10 ** 19
        f = tmp_path / "huge.txt"
        f.write_text(f"0 0\n0 {big}\n{big} {big}\n{big} 0\n")
        assert main(["--lane", "compiled", "max-triangle", str(f)]) == 2
        assert "error:" in capsys.readouterr().err
        # auto lane handles the same file via the pure fallback
        assert main(["--lane", "auto", "max-triangle", str(f)]) == 0
        capsys.readouterr()
