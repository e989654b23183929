import io
import json

import pytest

from platbraid.cli import ReplSession, all_words, build_parser, cmd_repl, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_invariants():
    code, out, _ = call("invariants", "--k", "4", "2")
    assert code == 0
    assert json.loads(out) == {
        "k": 4,
        "word": "2",
        "components": 2,
        "cycles": [[1], [2]],
        "homology": [1, 1],
        "affine_witness": None,
    }
    assert json.loads(call("invariants", "--k", "4", "")[1])["components"] == 1


def test_exit_codes():
    assert call("invariants", "--k", "3", "1")[0] == 3
    assert call("invariants", "--k", "4", "9")[0] == 2
    code, _, err = call("apply", "--k", "4", "", "--move", "M2>")
    assert code == 4 and "EmptyWord" in err
    assert call("apply", "--k", "4", "", "--move", "M9")[0] == 4
    assert call("catalog", "--k", "10", "--max-len", "1")[0] == 5
    assert call("catalog", "--k", "4", "--max-len", "7")[0] == 5


def test_caveats():
    assert "k = 2" in call("invariants", "--k", "2", "")[2]
    assert "odd" in call("invariants", "--k", "6", "")[2]
    assert call("invariants", "--k", "4", "")[2] == ""


def test_apply():
    assert call("apply", "--k", "4", "1 2", "--move", "M2>")[1] == "3 2\nk=4\n"
    assert call("apply", "--k", "4", "", "--move", "M1+@1")[1] == "1\nk=4\n"
    record = json.loads(call("apply", "--k", "4", "", "--move", "M3@3", "--json")[1])
    assert record == {"move": "M3@3", "before": "", "after": "2", "k_before": 4, "k_after": 8}


def test_search():
    code, out, _ = call("search", "1", "", "--k-a", "4")
    assert code == 0 and len(json.loads(out)["path"]) == 1
    code, out, _ = call("search", "2", "", "--k-a", "4")
    assert code == 1 and json.loads(out)["verdict"] == "DistinguishedByInvariant"
    code, out, _ = call("search", "1 2 -3", "", "--k-a", "4", "--budget", "0")
    assert code == 1 and json.loads(out)["verdict"] == "BudgetExceeded"
    code, out, _ = call("search", "", "2", "--k-a", "4", "--k-b", "8")
    assert json.loads(out)["words"] == ["", "2"]


def test_equal():
    code, out, _ = call("equal", "1 2 1", "2 1 2", "--k", "4")
    assert code == 0 and json.loads(out)["verdict"] == "Equal"
    code, out, _ = call("equal", "1", "2", "--k", "4")
    assert code == 1 and json.loads(out)["reason"] == "NotEqualByInvariant"


def test_catalog_small(tmp_path):
    target = tmp_path / "cat.jsonl"
    code, _, err = call("catalog", "--k", "4", "--max-len", "1", "--out", str(target))
    lines = target.read_text().splitlines()
    assert code == 0 and len(lines) == 9
    assert "9 records" in err
    records = [json.loads(line) for line in lines]
    assert records[0]["word"] == "" and [r["word"] for r in records[1:3]] == ["1", "-1"]
    assert all(r["components"] == len(r["cycles"]) for r in records)


def test_catalog_stdout_and_reduced():
    _, out, _ = call("catalog", "--k", "4", "--max-len", "2")
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 1 + 8 + 64
    assert {r["reduced"] for r in records if r["word"] == "1 -1"} == {""}


def test_all_words_order():
    texts = [w.text for w in all_words(2, 1)]
    assert texts == ["", "1", "-1", "2", "-2"]


def test_render(tmp_path):
    code, out, _ = call("render", "1", "--k", "4")
    assert code == 0 and out.startswith("<?xml")
    code, out, _ = call("render", "1", "--k", "4", "--format", "ascii", "--braid-only")
    assert code == 0 and "\\" in out
    assert call("render", "1", "--k", "3")[0] == 3


def _payload(reply):
    return json.loads(reply[reply.index("{") :])


class TestRepl:
    def test_do_undo(self):
        s = ReplSession(4)
        s.handle("do M1+@1")
        assert s.word.text == "1"
        s.handle("undo")
        assert s.word.text == ""

    def test_moves_listing(self):
        s = ReplSession(4, max_strands=12)
        lines = s.handle("moves").splitlines()
        assert lines[0].startswith("M1+@1")
        assert any(line.startswith("M3@3") for line in lines)

    def test_unknown_and_bad_move_leave_state(self):
        s = ReplSession(4, "1 2")
        assert s.handle("frobnicate").startswith("error")
        assert s.handle("do M0+@3").startswith("error")
        assert s.word.text == "1 2"

    def test_show_after_moves_keeps_components(self):
        s = ReplSession(4, "2")
        before = _payload(s.handle("show"))["components"]
        for move in ("M2>", "M1+@3", "M3@4"):
            assert _payload(s.handle(f"do {move}"))["components"] == before

    def test_render_and_quit(self, tmp_path):
        s = ReplSession(4)
        target = tmp_path / "x.svg"
        assert s.handle(f"render {target}").startswith("wrote")
        assert target.read_text().startswith("<?xml")
        s.handle("quit")
        assert s.done

    def test_stream(self):
        stdin = io.StringIO("do M1+@1\nshow\nquit\n")
        out = io.StringIO()
        args = build_parser().parse_args(["repl", "--k", "4"])
        code = cmd_repl(args, out, io.StringIO(), stdin)
        assert code == 0
        assert out.getvalue().splitlines()[-1].startswith("k=4 word=[1]")
