"""Command-line interface: ``platbraid <command> ...``.

Exit codes: 0 success, 1 not found / not connected, 2 parse error,
3 odd strand count, 4 move error, 5 guard violation.
"""

from __future__ import annotations

import argparse
import collections
import itertools
import json
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Sequence, TextIO

from .bfs import thread_count
from .errors import BraidError, ConfigError, OddStrandCount, ParseError
from .moves import MoveApplication, MoveId, apply_move, enumerate_moves
from .plat import affine_witness, plat_report
from .relations import word_equal_bounded
from .render import render_braid, render_plat
from .search import SearchConfig, m_equivalent
from .words import BraidWord, free_reduce, parse_word, require_even

EXIT_OK, EXIT_NOT_FOUND, EXIT_PARSE, EXIT_PARITY, EXIT_MOVE, EXIT_GUARD = range(6)

CATALOG_MAX_K = 8
CATALOG_MAX_LEN = 6


class Guard(Exception):
    pass


def _exit_code(err: Exception) -> int:
    if isinstance(err, ParseError):
        return EXIT_PARSE
    if isinstance(err, OddStrandCount):
        return EXIT_PARITY
    if isinstance(err, (ConfigError, Guard)):
        return EXIT_GUARD
    return EXIT_MOVE


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _caveat(w: BraidWord) -> str | None:
    n = w.k // 2
    if n == 1:
        return (
            "note: for k = 2 the closure is a single curve of class 1; "
            "the raw letter scan would report a witness for the empty word, which is not meaningful"
        )
    if n % 2 and affine_witness(w, literal=True) is not None:
        return (
            "note: n is odd, so the closure has total class 1 and is never affine; "
            "affine_witness is reported as null"
        )
    return None


# -- commands --------------------------------------------------------------


def cmd_invariants(args, out: TextIO, err: TextIO) -> int:
    w = parse_word(args.word, args.k)
    report = plat_report(w)
    note = _caveat(w)
    if note:
        print(note, file=err)
    print(_dump(report.to_dict()), file=out)
    return EXIT_OK


def cmd_apply(args, out: TextIO, err: TextIO) -> int:
    w = parse_word(args.word, args.k)
    require_even(w)
    move = MoveId.parse(args.move)
    after = apply_move(w, move)
    if args.json:
        print(_dump(MoveApplication(move, w, after).to_dict()), file=out)
    else:
        print(after.text, file=out)
        print(f"k={after.k}", file=out)
    return EXIT_OK


def search_payload(args) -> tuple[dict, bool]:
    a = parse_word(args.word_a, args.k_a)
    b = parse_word(args.word_b, args.k_b if args.k_b is not None else args.k_a)
    cfg = SearchConfig(
        max_strands=args.max_strands, max_word_length=args.max_length, node_budget=args.budget
    )
    outcome = m_equivalent(a, b, cfg)
    payload = outcome.to_dict(timing=not args.no_timing)
    if outcome.path is not None:
        payload["words"] = [outcome.path[0].before.text] + [s.after.text for s in outcome.path]
    return payload, outcome.connected


def cmd_search(args, out: TextIO, err: TextIO) -> int:
    payload, connected = search_payload(args)
    print(_dump(payload), file=out)
    return EXIT_OK if connected else EXIT_NOT_FOUND


def cmd_equal(args, out: TextIO, err: TextIO) -> int:
    a = parse_word(args.word_a, args.k)
    b = parse_word(args.word_b, args.k)
    result = word_equal_bounded(
        a, b, budget=args.budget, literal_commutation=args.literal_commutation
    )
    payload = {"verdict": result.verdict}
    if result.path is not None:
        payload["path"] = [step.label for step in result.path]
    if result.reason is not None:
        payload["reason"] = result.reason
    payload["nodes_expanded"] = result.nodes_expanded
    print(_dump(payload), file=out)
    return EXIT_OK if result.equal else EXIT_NOT_FOUND


def all_words(k: int, max_len: int) -> Iterator[BraidWord]:
    """Words sorted by length, then lexicographically over 1 < -1 < 2 < -2 < ..."""
    alphabet = [v for i in range(1, k + 1) for v in (i, -i)]
    for length in range(max_len + 1):
        for values in itertools.product(alphabet, repeat=length):
            yield BraidWord.from_ints(k, values)


def catalog_record(w: BraidWord) -> dict:
    record = plat_report(w).to_dict()
    record["reduced"] = free_reduce(w).text
    return record


def catalog_lines(k: int, max_len: int, threads: int = 1) -> Iterator[tuple[str, dict]]:
    words = all_words(k, max_len)
    if threads <= 1:
        for record in map(catalog_record, words):
            yield _dump(record), record
        return
    # Executor.map keeps input order, so output does not depend on the schedule
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for record in pool.map(catalog_record, words):
            yield _dump(record), record


def cmd_catalog(args, out: TextIO, err: TextIO) -> int:
    if args.k % 2:
        raise OddStrandCount(f"catalog needs an even strand count, got k={args.k}")
    if args.k < 2 or args.max_len < 0:
        raise Guard("k must be at least 2 and max-len non-negative")
    if not args.no_guard and (args.k > CATALOG_MAX_K or args.max_len > CATALOG_MAX_LEN):
        raise Guard(
            f"catalog limited to k <= {CATALOG_MAX_K} and max-len <= {CATALOG_MAX_LEN}; "
            "pass --no-guard to override"
        )
    buckets: collections.Counter = collections.Counter()
    sink = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else out
    try:
        for line, record in catalog_lines(args.k, args.max_len, thread_count()):
            sink.write(line + "\n")
            buckets[(record["components"], record["affine_witness"] is not None)] += 1
    finally:
        if args.out:
            sink.close()
    total = sum(buckets.values())
    parts = [
        f"components={c} affine={'yes' if a else 'no'}: {buckets[(c, a)]}"
        for c, a in sorted(buckets)
    ]
    print(f"{total} records; " + "; ".join(parts), file=err)
    return EXIT_OK


def cmd_render(args, out: TextIO, err: TextIO) -> int:
    w = parse_word(args.word, args.k)
    text = (render_braid if args.braid_only else render_plat)(w, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# -- REPL ------------------------------------------------------------------


class ReplSession:
    """Line-oriented move explorer.  Every state change is an M-move."""

    HELP = "commands: show | moves | do <move> | undo | render <file> | help | quit"

    def __init__(self, k: int, word: str = "", max_strands: int = 12):
        self.word = free_reduce(parse_word(word, k))
        require_even(self.word)
        self.max_strands = max_strands
        self.history: list[BraidWord] = []
        self.done = False

    def show(self) -> str:
        report = plat_report(self.word)
        return f"k={self.word.k} word=[{self.word.text}] " + _dump(
            {key: v for key, v in report.to_dict().items() if key not in ("k", "word")}
        )

    def handle(self, line: str) -> str:
        try:
            parts = shlex.split(line)
        except ValueError as exc:
            return f"error: {exc}"
        if not parts:
            return ""
        cmd, rest = parts[0], parts[1:]
        if cmd == "show":
            return self.show()
        if cmd == "moves":
            apps = enumerate_moves(self.word, self.max_strands)
            return "\n".join(f"{app.move}\t[{app.after.text}] k={app.after.k}" for app in apps)
        if cmd == "do" and len(rest) == 1:
            try:
                after = apply_move(self.word, rest[0])
            except BraidError as exc:
                return f"error: {type(exc).__name__}: {exc}"
            if after.k > self.max_strands:
                return f"error: result has {after.k} strands, above max {self.max_strands}"
            self.history.append(self.word)
            self.word = after
            return self.show()
        if cmd == "undo":
            if not self.history:
                return "error: nothing to undo"
            self.word = self.history.pop()
            return self.show()
        if cmd == "render" and len(rest) == 1:
            with open(rest[0], "w", encoding="utf-8", newline="\n") as fh:
                fh.write(render_plat(self.word))
            return f"wrote {rest[0]}"
        if cmd == "help":
            return self.HELP
        if cmd in ("quit", "exit"):
            self.done = True
            return ""
        return f"error: unknown command {line.strip()!r}; {self.HELP}"


def cmd_repl(args, out: TextIO, err: TextIO, stdin: TextIO | None = None) -> int:
    session = ReplSession(args.k, args.word, args.max_strands)
    stdin = stdin or sys.stdin
    print(session.show(), file=out)
    for line in stdin:
        reply = session.handle(line)
        if reply:
            print(reply, file=out)
        if session.done:
            break
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="platbraid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariants", help="component count, residual cycles, homology, witness")
    q.add_argument("word")
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("apply", help="apply one M-move")
    q.add_argument("word")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--move", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_apply)

    q = sub.add_parser("search", help="bounded search for an M-move path")
    q.add_argument("word_a")
    q.add_argument("word_b")
    q.add_argument("--k-a", type=int, required=True)
    q.add_argument("--k-b", type=int)
    q.add_argument("--budget", type=int, default=SearchConfig.node_budget)
    q.add_argument("--max-strands", type=int, default=SearchConfig.max_strands)
    q.add_argument("--max-length", type=int, default=SearchConfig.max_word_length)
    q.add_argument("--no-timing", action="store_true", help="report wall_time_ms as 0")
    q.set_defaults(func=cmd_search)

    q = sub.add_parser("equal", help="bounded word problem in the sphere braid group")
    q.add_argument("word_a")
    q.add_argument("word_b")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--budget", type=int, default=10_000)
    q.add_argument("--literal-commutation", action="store_true")
    q.set_defaults(func=cmd_equal)

    q = sub.add_parser("catalog", help="JSONL table of invariants of all short words")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--max-len", type=int, required=True)
    q.add_argument("--out")
    q.add_argument("--no-guard", action="store_true")
    q.set_defaults(func=cmd_catalog)

    q = sub.add_parser("render", help="draw a braid or its plat closure")
    q.add_argument("word")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--format", choices=("svg", "ascii"), default="svg")
    q.add_argument("--braid-only", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=cmd_render)

    q = sub.add_parser("repl", help="interactive move explorer")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--word", default="")
    q.add_argument("--max-strands", type=int, default=12)
    q.set_defaults(func=cmd_repl)
    return p


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(list(argv))
    try:
        return args.func(args, out, err)
    except (BraidError, Guard) as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return _exit_code(exc)


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
