"""End-to-end checks of the command line interface.

Each test drives main() directly with an argv list and a StringIO sink,
which keeps the suite fast; a single subprocess test confirms the module
entry point works outside the test harness.
"""

import io
import json
import subprocess
import sys

import pytest

from borelchi import GeneratorSet, coloring_sft, read_witness_file, sft_to_text
from borelchi.cache import CACHE_FILENAME
from borelchi.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def parse_records(text, kind):
    rows = []
    for line in text.splitlines():
        parts = line.split()
        if parts and parts[0] == kind:
            rows.append(dict(part.split("=", 1) for part in parts[1:]))
    return rows


class TestDecide:
    def test_yes_exit_zero(self):
        code, text = run(["decide", "-S", "1", "--colors", "3"])
        assert code == 0
        assert "answer: yes" in text

    def test_no_exit_one(self):
        code, text = run(["decide", "-S", "1,5,8", "--colors", "3"])
        assert code == 1
        assert "answer: no" in text

    def test_records_format(self):
        code, text = run(["decide", "-S", "1,2", "--colors", "4", "--format", "records"])
        assert code == 0
        (row,) = parse_records(text, "decision")
        assert row["answer"] == "yes"
        assert int(row["vertices"]) > 0
        assert int(row["edges"]) > 0
        assert int(row["sccs"]) >= 1

    def test_scc_table_printed(self):
        code, text = run(["decide", "-S", "1", "--colors", "2"])
        assert code == 1
        assert "scc  size" in text

    def test_sft_file_input(self, tmp_path):
        sft = coloring_sft(GeneratorSet((1,)), 3)
        path = tmp_path / "shift.sft"
        path.write_text(sft_to_text(sft))
        code, text = run(["decide", "--sft", str(path)])
        assert code == 0
        assert "answer: yes" in text

    def test_witness_out_on_yes(self, tmp_path):
        wpath = tmp_path / "w.txt"
        code, text = run(
            ["decide", "-S", "1,4", "--colors", "3", "--witness-out", str(wpath)]
        )
        assert code == 0
        assert f"witness written to {wpath}" in text
        n, p, q, labels = read_witness_file(wpath)
        assert n == 5 and len(labels) == p + q - n

    def test_witness_out_on_no(self, tmp_path):
        wpath = tmp_path / "w.txt"
        code, text = run(
            ["decide", "-S", "1,2", "--colors", "3", "--witness-out", str(wpath)]
        )
        assert code == 1
        assert "no witness" in text
        assert not wpath.exists()

    def test_dot_output(self, tmp_path):
        dpath = tmp_path / "g.dot"
        code, _ = run(["decide", "-S", "1", "--colors", "3", "--dot", str(dpath)])
        assert code == 0
        body = dpath.read_text()
        assert body.startswith("digraph") and "->" in body

    def test_missing_colors_is_usage_error(self):
        code, _ = run(["decide", "-S", "1,2"])
        assert code == 2

    def test_budget_exhaustion_exit_three(self):
        code, _ = run(["decide", "-S", "1,5,8", "--colors", "3", "--budget", "100"])
        assert code == 3


class TestChi:
    def test_text_output(self):
        code, text = run(["chi", "-S", "1,5,8"])
        assert code == 0
        assert "chi: 4" in text
        assert "method:" in text and "bounds:" in text

    def test_records_with_decisions(self):
        code, text = run(["chi", "-S", "1,2", "--method", "scan-only", "--format", "records"])
        assert code == 0
        (row,) = parse_records(text, "chi")
        assert row["value"] == "4"
        assert row["method"] == "decision-scan"
        assert row["decisions"] == "3:no,4:yes"

    def test_fast_path_records_have_no_decisions(self):
        code, text = run(["chi", "-S", "1,2", "--format", "records"])
        assert code == 0
        (row,) = parse_records(text, "chi")
        assert row["decisions"] == "-"
        assert row["method"] == "pair-formula"

    def test_verify_fast_paths_flag(self):
        code, text = run(["chi", "-S", "2,3", "--verify-fast-paths"])
        assert code == 0
        assert "+scan-verified" in text

    def test_witness_out(self, tmp_path):
        wpath = tmp_path / "w.txt"
        code, _ = run(["chi", "-S", "1,4", "--witness-out", str(wpath)])
        assert code == 0
        vcode, vtext = run(["verify", str(wpath), "-S", "1,4", "--colors", "3"])
        assert vcode == 0 and vtext.startswith("verified:")


class TestVerify:
    def test_witness_roundtrip_via_cli(self, tmp_path):
        wpath = tmp_path / "w.txt"
        run(["decide", "-S", "2,3", "--colors", "3", "--witness-out", str(wpath)])
        code, text = run(["verify", str(wpath), "-S", "2,3"])
        assert code == 0
        assert text.startswith("verified: witness")

    def test_witness_against_sft_file(self, tmp_path):
        sft = coloring_sft(GeneratorSet((1,)), 3)
        spath = tmp_path / "shift.sft"
        spath.write_text(sft_to_text(sft))
        wpath = tmp_path / "w.txt"
        run(["decide", "--sft", str(spath), "--witness-out", str(wpath)])
        code, text = run(["verify", str(wpath), "--sft", str(spath)])
        assert code == 0 and "verified" in text

    def test_tampered_witness_fails(self, tmp_path):
        wpath = tmp_path / "w.txt"
        run(["decide", "-S", "1", "--colors", "3", "--witness-out", str(wpath)])
        lines = wpath.read_text().splitlines()
        toks = lines[1].split()
        toks[1] = toks[2]
        wpath.write_text(lines[0] + "\n" + " ".join(toks) + "\n")
        code, text = run(["verify", str(wpath), "-S", "1"])
        assert code == 1
        assert text.startswith("FAILED:")

    def test_tile_file_pass_and_fail(self, tmp_path):
        from borelchi import pair_construction, write_tile_file

        t = pair_construction(1, 4)
        tpath = tmp_path / "tiles.txt"
        write_tile_file(tpath, t.c1, t.c2, t.ell)
        code, text = run(["verify", str(tpath), "-S", "1,4"])
        assert code == 0 and "tile pair" in text

        bad = list(t.c1)
        bad[t.ell] = bad[t.ell + 1]
        write_tile_file(tpath, bad, t.c2, t.ell)
        code, text = run(["verify", str(tpath), "-S", "1,4"])
        assert code == 1 and text.startswith("FAILED:")

    def test_tiles_need_generators(self, tmp_path):
        from borelchi import pair_construction, write_tile_file

        t = pair_construction(1, 4)
        tpath = tmp_path / "tiles.txt"
        write_tile_file(tpath, t.c1, t.c2, t.ell)
        assert run(["verify", str(tpath)])[0] == 2

    def test_unknown_kind_is_usage_error(self, tmp_path):
        path = tmp_path / "junk.txt"
        path.write_text("bricks 1 2 3\n")
        assert run(["verify", str(path), "-S", "1"])[0] == 2

    def test_missing_file_is_usage_error(self, tmp_path):
        assert run(["verify", str(tmp_path / "absent.txt"), "-S", "1"])[0] == 2


class TestSweep:
    def test_pairs_count_and_values(self):
        code, text = run(["sweep", "pairs", "--max", "5", "--format", "records"])
        assert code == 0
        rows = parse_records(text, "chi")
        expected_sets = {"1,2", "1,3", "1,4", "1,5", "2,3", "2,5", "3,4", "3,5", "4,5"}
        assert {r["S"] for r in rows} == expected_sets
        by_s = {r["S"]: r for r in rows}
        assert by_s["1,2"]["value"] == "4"
        assert all(r["value"] == "3" for s, r in by_s.items() if s != "1,2")

    def test_odd_family_membership(self):
        code, text = run(["sweep", "odd", "--max", "5", "--format", "records"])
        assert code == 0
        rows = parse_records(text, "chi")
        assert {r["S"] for r in rows} == {"1", "1,3", "1,5", "3,5", "1,3,5"}
        assert all(r["value"] == "3" for r in rows)

    def test_workers_match_sequential(self):
        _, seq = run(["sweep", "pairs", "--max", "4", "--format", "records"])
        _, par = run(["sweep", "pairs", "--max", "4", "--workers", "2", "--format", "records"])
        assert sorted(seq.splitlines()) == sorted(par.splitlines())


class TestCache:
    def test_decide_cold_and_warm_identical(self, tmp_path):
        argv = ["decide", "-S", "1,2", "--colors", "4", "--cache-dir", str(tmp_path)]
        cold = run(argv)
        assert (tmp_path / CACHE_FILENAME).exists()
        warm = run(argv)
        assert cold == warm

    def test_chi_warm_run_uses_cache(self, tmp_path):
        argv = [
            "chi", "-S", "1,5,8", "--method", "scan-only",
            "--cache-dir", str(tmp_path), "--format", "records",
        ]
        cold = run(argv)
        store = json.loads((tmp_path / CACHE_FILENAME).read_text())
        assert any(key.startswith("S=1,5,8") for key in store)
        warm = run(argv)
        assert cold == warm

    def test_sweep_populates_cache(self, tmp_path):
        # pairs resolve by closed form and record nothing, so sweep a family
        # that forces decision scans
        run(["sweep", "triples", "--max", "4", "--cache-dir", str(tmp_path)])
        store = json.loads((tmp_path / CACHE_FILENAME).read_text())
        assert any(key.startswith("S=1,2,4;") for key in store)

    def test_env_var_cache_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("BORELCHI_CACHE_DIR", str(tmp_path))
        run(["decide", "-S", "1", "--colors", "3"])
        assert (tmp_path / CACHE_FILENAME).exists()


class TestBench:
    def test_records_fields(self):
        code, text = run(["bench", "-S", "1", "--colors", "2,3"])
        assert code == 0
        rows = parse_records(text, "bench")
        assert len(rows) == 2
        for row in rows:
            assert {"b", "vertices", "edges", "sccs", "build_s", "scc_s", "period_s"} <= row.keys()
            float(row["build_s"])

    def test_repeatable_generator_flag(self):
        code, text = run(["bench", "-S", "1", "-S", "1,2", "--colors", "3"])
        assert code == 0
        assert len(parse_records(text, "bench")) == 2


class TestTopLevel:
    def test_bad_subcommand_exits_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_generator_string_is_usage_error(self):
        assert run(["chi", "-S", "2,4"])[0] == 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "borelchi.cli", "decide", "-S", "1", "--colors", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "answer: yes" in proc.stdout

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "borelchi" in capsys.readouterr().out
