"""The exotic-rs command: subcommands, formats, and exit codes."""

from __future__ import annotations

import io
import json

import pytest

from exotic_rs import (
    Report,
    SignedPermutation,
    enumerate_bipartitions,
    enumerate_signed_permutations,
    enumerate_standard_bitableaux,
    insertion,
    load_golden_table,
)
from exotic_rs.cli import parse_ascii_bitableau, run

MIXED_WORD = "2 7 5 -6 4 -3 1"
MIXED_ASCII = "T:\n4 1 | 2 7\n5 3 | 6\nR:\n2 1 | 3 7\n5 4 | 6\n"
EMPTY_PAIR_JSON = '{"T": {"left": [], "right": []}, "R": {"left": [], "right": []}}'


def invoke(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestInsert:
    def test_ascii_rendering_of_a_seven_letter_word(self, capsys):
        code, out, err = invoke(capsys, ["insert", MIXED_WORD])
        assert (code, err) == (0, "")
        assert out == MIXED_ASCII

    def test_empty_word_as_json(self, capsys):
        code, out, _ = invoke(capsys, ["insert", "", "--json"])
        assert code == 0
        assert out == EMPTY_PAIR_JSON + "\n"

    def test_json_trace_structure(self, capsys):
        code, out, _ = invoke(capsys, ["insert", "-2 1", "--json", "--trace"])
        assert code == 0
        obj = json.loads(out)
        assert set(obj) == {"T", "R", "trace"}
        assert obj["trace"][0] == {
            "k": 1,
            "letter": -2,
            "steps": [{"value": 2, "side": "right", "row": 1, "col": 1, "displaced": None}],
        }

    def test_ascii_trace_names_each_letter(self, capsys):
        code, out, _ = invoke(capsys, ["insert", "-2 1", "--trace"])
        assert code == 0
        assert out.splitlines()[0] == "letter -2: 2->(right r1 c1)"
        assert out.splitlines()[1].startswith("letter 1:")

    def test_json_and_ascii_are_mutually_exclusive(self, capsys):
        code, _, err = invoke(capsys, ["insert", "1", "--json", "--ascii"])
        assert code == 2
        assert "not allowed" in err

    def test_bad_words_exit_2_with_a_diagnostic(self, capsys):
        code, _, err = invoke(capsys, ["insert", "1 x"])
        assert code == 2
        assert "token 2" in err
        code, _, err = invoke(capsys, ["insert", "1 1"])
        assert code == 2
        assert "magnitudes" in err


class TestBump:
    def test_reads_a_pair_from_a_file(self, capsys, tmp_path):
        path = tmp_path / "pair.json"
        path.write_text(json.dumps(insertion_pair_json(MIXED_WORD)))
        code, out, _ = invoke(capsys, ["bump", "--pair", str(path)])
        assert (code, out) == (0, MIXED_WORD + "\n")

    def test_reads_a_pair_from_stdin(self, capsys, monkeypatch):
        code, out, _ = invoke(
            capsys, ["bump", "--pair", "-"], stdin_text=EMPTY_PAIR_JSON, monkeypatch=monkeypatch
        )
        assert (code, out) == (0, "\n")

    def test_trace_is_json_with_word_and_steps(self, capsys, monkeypatch):
        pair_json = json.dumps(insertion_pair_json(MIXED_WORD))
        code, out, _ = invoke(
            capsys, ["bump", "--pair", "-", "--trace"], stdin_text=pair_json, monkeypatch=monkeypatch
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["word"] == MIXED_WORD
        assert [rec["k"] for rec in obj["trace"]] == list(range(7, 0, -1))
        step = obj["trace"][0]["steps"][0]
        assert set(step) == {"value", "side", "row", "col", "shape", "to", "emit"}

    def test_missing_pair_argument_exits_2(self, capsys):
        code, _, err = invoke(capsys, ["bump"])
        assert code == 2
        assert "--pair" in err

    def test_unreadable_file_exits_2(self, capsys, tmp_path):
        code, _, err = invoke(capsys, ["bump", "--pair", str(tmp_path / "missing.json")])
        assert code == 2
        assert "error:" in err

    def test_invalid_json_exits_2(self, capsys, monkeypatch):
        code, _, err = invoke(
            capsys, ["bump", "--pair", "-"], stdin_text="{nope", monkeypatch=monkeypatch
        )
        assert code == 2
        assert "not valid JSON" in err

    def test_mismatched_shapes_exit_2(self, capsys, monkeypatch):
        bad = '{"T": {"left": [[1]], "right": []}, "R": {"left": [], "right": [[1]]}}'
        code, _, err = invoke(
            capsys, ["bump", "--pair", "-"], stdin_text=bad, monkeypatch=monkeypatch
        )
        assert code == 2
        assert "share one shape" in err


class TestPipeRoundTrip:
    @pytest.mark.parametrize("n", range(5))
    def test_insert_json_piped_into_bump_reproduces_every_word(self, capsys, monkeypatch, n):
        for w in enumerate_signed_permutations(n):
            code, pair_json, _ = invoke(capsys, ["insert", w.to_text(), "--json"])
            assert code == 0
            code, out, _ = invoke(
                capsys, ["bump", "--pair", "-"], stdin_text=pair_json, monkeypatch=monkeypatch
            )
            assert code == 0
            assert out == w.to_text() + "\n"

    def test_bump_then_insert_reproduces_the_pair_bytes(self, capsys, monkeypatch):
        pair_json = json.dumps(insertion_pair_json(MIXED_WORD))
        code, word_out, _ = invoke(
            capsys, ["bump", "--pair", "-"], stdin_text=pair_json, monkeypatch=monkeypatch
        )
        assert code == 0
        code, pair_out, _ = invoke(capsys, ["insert", word_out.strip(), "--json"])
        assert code == 0
        assert pair_out == pair_json + "\n"


class TestRender:
    def test_renders_a_pair_file(self, capsys, monkeypatch):
        pair_json = json.dumps(insertion_pair_json(MIXED_WORD))
        code, out, _ = invoke(
            capsys, ["render", "--pair", "-"], stdin_text=pair_json, monkeypatch=monkeypatch
        )
        assert (code, out) == (0, MIXED_ASCII)

    def test_renders_the_empty_pair(self, capsys, monkeypatch):
        code, out, _ = invoke(
            capsys, ["render", "--pair", "-"], stdin_text=EMPTY_PAIR_JSON, monkeypatch=monkeypatch
        )
        assert (code, out) == (0, "T:\nR:\n")


class TestParseAscii:
    @pytest.mark.parametrize("n", range(6))
    def test_parse_inverts_render_for_every_standard_bitableau(self, n):
        for bp in enumerate_bipartitions(n):
            for t in enumerate_standard_bitableaux(bp):
                assert parse_ascii_bitableau(t.render()) == t

    def test_blank_lines_are_skipped(self):
        t = parse_ascii_bitableau("\n1 | 2\n\n")
        assert t.to_json() == {"left": [[1]], "right": [[2]]}

    @pytest.mark.parametrize(
        "text, message",
        [
            ("1 2 3", "line 1: expected exactly one"),
            ("1 | 2\n3 | 4 | 5", "line 2: expected exactly one"),
            ("x | 1", "token 'x' is not an integer"),
        ],
    )
    def test_parse_errors_name_the_line(self, text, message):
        with pytest.raises(ValueError, match=message):
            parse_ascii_bitableau(text)


class TestTable:
    def test_size_three_table_matches_the_frozen_rows(self, capsys):
        code, out, _ = invoke(capsys, ["table", "3"])
        assert code == 0
        lines = out.splitlines()
        headers = [line for line in lines if line.startswith("# ")]
        data = [line for line in lines if line and not line.startswith("#")]
        assert len(headers) == 10
        assert len(data) == 48
        got = {
            (word, t_json, r_json)
            for word, t_json, r_json in (line.split("\t") for line in data)
        }
        frozen = {
            (row["word"], json.dumps(row["T"]), json.dumps(row["R"]))
            for row in load_golden_table()["rows"]
        }
        assert got == frozen

    def test_json_table_has_one_block_per_shape(self, capsys):
        code, out, _ = invoke(capsys, ["table", "2", "--json"])
        assert code == 0
        blocks = json.loads(out)
        assert len(blocks) == 5
        assert sum(len(b["words"]) for b in blocks) == 8

    def test_beyond_budget_exits_2(self, capsys, monkeypatch):
        monkeypatch.delenv("EXOTIC_RS_MAX_N", raising=False)
        code, _, err = invoke(capsys, ["table", "7"])
        assert code == 2
        assert "EXOTIC_RS_MAX_N" in err


class TestCells:
    def test_size_two_headers_and_membership(self, capsys):
        code, out, _ = invoke(capsys, ["cells", "2"])
        assert code == 0
        lines = out.splitlines()
        headers = [line for line in lines if not line.startswith("  ")]
        members = [line.strip() for line in lines if line.startswith("  ")]
        assert headers == [
            "mu=[1,1];nu=[] (1):",
            "mu=[1];nu=[1] (4):",
            "mu=[2];nu=[] (1):",
            "mu=[];nu=[1,1] (1):",
            "mu=[];nu=[2] (1):",
        ]
        assert len(members) == 8
        assert set(members) == {w.to_text() for w in enumerate_signed_permutations(2)}


class TestCount:
    def test_size_three_summary_line(self, capsys):
        code, out, _ = invoke(capsys, ["count", "3"])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 11
        assert lines[-1] == "shapes 10; sum of squares 48; group order 48; OK"

    def test_size_zero(self, capsys):
        code, out, _ = invoke(capsys, ["count", "0"])
        assert code == 0
        assert out.splitlines()[-1] == "shapes 1; sum of squares 1; group order 1; OK"

    def test_mismatch_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "exotic_rs.cli.verify_counting",
            lambda n: Report("counting", n, 1, ({"sum_of_squares": 0, "group_order": 1},)),
        )
        code, out, _ = invoke(capsys, ["count", "1"])
        assert code == 1
        assert out.splitlines()[-1].endswith("MISMATCH")


class TestVerify:
    def test_golden_summary(self, capsys):
        code, out, _ = invoke(capsys, ["verify", "golden", "3"])
        assert (code, out) == (0, "golden n=3: OK (96 checks)\n")

    def test_json_report(self, capsys):
        code, out, _ = invoke(capsys, ["verify", "counting", "4", "--json"])
        assert code == 0
        obj = json.loads(out)
        assert obj == {"property": "counting", "n": 4, "checked": 20, "failures": []}

    def test_failing_report_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "exotic_rs.cli.run_verifier",
            lambda name, n: Report(name, n, 4, ({"word": "1"},)),
        )
        code, out, _ = invoke(capsys, ["verify", "roundtrip", "1"])
        assert code == 1
        assert "FAILED (1 of 4 checks)" in out

    def test_beyond_budget_exits_2(self, capsys, monkeypatch):
        monkeypatch.delenv("EXOTIC_RS_MAX_N", raising=False)
        code, _, err = invoke(capsys, ["verify", "roundtrip", "7"])
        assert code == 2
        assert "exceeds the budget" in err

    def test_unknown_property_exits_2(self, capsys):
        code, _, err = invoke(capsys, ["verify", "nope", "3"])
        assert code == 2
        assert "unknown property" in err

    def test_golden_at_other_sizes_exits_2(self, capsys):
        code, _, err = invoke(capsys, ["verify", "golden", "4"])
        assert code == 2
        assert "fixed at n=3" in err


class TestUsage:
    def test_unknown_subcommand_exits_2(self, capsys):
        assert invoke(capsys, ["frobnicate"])[0] == 2

    def test_no_arguments_exits_2(self, capsys):
        assert invoke(capsys, [])[0] == 2

    def test_help_exits_0(self, capsys):
        code, out, _ = invoke(capsys, ["--help"])
        assert code == 0
        assert "insert" in out and "verify" in out


def insertion_pair_json(word_text: str) -> dict:
    return insertion(SignedPermutation.from_text(word_text)).to_json()
