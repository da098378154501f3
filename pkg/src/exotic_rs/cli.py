"""Command-line interface.

Subcommands::

    insert <word> [--trace] [--json|--ascii]   word -> pair
    bump --pair <file|-> [--trace]             pair -> word
    table <n> [--json]                         the full correspondence, grouped by shape
    cells <n>                                  words grouped by the shape insertion gives them
    count <n>                                  tableau counts per shape + the sum-of-squares identity
    verify <property> <n> [--json]             run one verifier and report
    render --pair <file|->                     pretty-print a pair

Exit codes: 0 success, 1 a verified property failed, 2 usage or parse errors
(including budget refusals).  Data goes to stdout, diagnostics to stderr.
Words are space-separated signed integers ("-3 6 4 -7 2 -5 1", minus = bar);
pairs are JSON objects {"T": {"left": [...], "right": [...]}, "R": ...} with
rows stored wall-outward.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .bitableaux import Bitableau
from .correspondence import (
    CorrespondencePair,
    insertion_with_trace,
    reverse_bumping_with_trace,
)
from .partitions import count_bitableaux, enumerate_bipartitions
from .signed_perm import SignedPermutation
from .verify import BudgetExceededError, cells, run_verifier, verify_counting


def parse_ascii_bitableau(text: str) -> Bitableau:
    """Parse the rendering produced by :meth:`Bitableau.render`.

    Each line shows one row as ``<left outward..wall> | <right wall..outward>``;
    the left half is mirrored back into wall-outward storage order.
    """
    left_rows = []
    right_rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.count("|") != 1:
            raise ValueError(f"line {lineno}: expected exactly one '|' wall marker")
        left_txt, right_txt = line.split("|")

        def parse_tokens(chunk: str) -> list[int]:
            out = []
            for tok in chunk.split():
                try:
                    out.append(int(tok))
                except ValueError:
                    raise ValueError(f"line {lineno}: token {tok!r} is not an integer") from None
            return out

        left_rows.append(tuple(reversed(parse_tokens(left_txt))))
        right_rows.append(tuple(parse_tokens(right_txt)))
    strip = lambda rows: tuple(r for r in rows if r)
    return Bitableau(strip(left_rows), strip(right_rows))


def _read_pair(path: str) -> CorrespondencePair:
    raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as err:
        raise ValueError(f"pair input is not valid JSON: {err}") from None
    return CorrespondencePair.from_json(obj)


def _render_pair(pair: CorrespondencePair) -> str:
    lines = ["T:"]
    if pair.T.size:
        lines.append(pair.T.render())
    lines.append("R:")
    if pair.R.size:
        lines.append(pair.R.render())
    return "\n".join(lines)


def cmd_insert(args: argparse.Namespace) -> int:
    word = SignedPermutation.from_text(args.word)
    pair, records = insertion_with_trace(word)
    if args.json:
        obj = pair.to_json()
        if args.trace:
            obj["trace"] = [r.to_json() for r in records]
        print(json.dumps(obj))
    else:
        if args.trace:
            for rec in records:
                hops = ", ".join(
                    f"{s.value}->({s.target.side.value} r{s.target.row} c{s.target.col})"
                    + (f" displacing {s.displaced}" if s.displaced is not None else "")
                    for s in rec.steps
                )
                print(f"letter {rec.letter}: {hops}")
        print(_render_pair(pair))
    return 0


def cmd_bump(args: argparse.Namespace) -> int:
    pair = _read_pair(args.pair)
    word, records = reverse_bumping_with_trace(pair)
    if args.trace:
        print(json.dumps({"word": word.to_text(), "trace": [r.to_json() for r in records]}))
    else:
        print(word.to_text())
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    by_shape = cells(args.n)
    if args.json:
        blocks = []
        for shape, words in by_shape.items():
            rows = []
            for w in words:
                pair, _ = insertion_with_trace(w)
                rows.append({"word": w.to_text(), "T": pair.T.to_json(), "R": pair.R.to_json()})
            blocks.append({"shape": shape.to_json(), "words": rows})
        print(json.dumps(blocks))
        return 0
    for shape, words in by_shape.items():
        print(f"# {shape.to_text()}")
        for w in words:
            pair, _ = insertion_with_trace(w)
            print(f"{w.to_text()}\t{json.dumps(pair.T.to_json())}\t{json.dumps(pair.R.to_json())}")
    return 0


def cmd_cells(args: argparse.Namespace) -> int:
    for shape, words in cells(args.n).items():
        print(f"{shape.to_text()} ({len(words)}):")
        for w in words:
            print(f"  {w.to_text()}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    report = verify_counting(args.n)
    shapes = enumerate_bipartitions(args.n)
    total = 0
    for bp in shapes:
        c = count_bitableaux(bp)
        total += c * c
        print(f"{bp.to_text()} {c}")
    order = 2**args.n * math.factorial(args.n)
    print(f"shapes {len(shapes)}; sum of squares {total}; group order {order}; "
          f"{'OK' if report.ok else 'MISMATCH'}")
    return 0 if report.ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verifier(args.property, args.n)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.summary())
    return 0 if report.ok else 1


def cmd_render(args: argparse.Namespace) -> int:
    print(_render_pair(_read_pair(args.pair)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exotic-rs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="map a word to its pair of bitableaux")
    p.add_argument("word", help='space-separated signed letters, e.g. "2 -1 3" ("" for n=0)')
    p.add_argument("--trace", action="store_true", help="include the bump-by-bump trace")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the pair as JSON")
    fmt.add_argument("--ascii", action="store_true", help="emit the pair as pictures (default)")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("bump", help="map a pair of bitableaux back to its word")
    p.add_argument("--pair", required=True, help="path to the pair JSON, or - for stdin")
    p.add_argument("--trace", action="store_true", help="emit JSON with the removal trace")
    p.set_defaults(func=cmd_bump)

    p = sub.add_parser("table", help="print the whole correspondence for size n")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cells", help="group the words of size n by shape")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("count", help="standard-bitableau counts per shape of size n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run one verifier")
    p.add_argument("property", help="golden | roundtrip | inverse | counting | transition | wtilde | embedding")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="pretty-print a pair JSON file")
    p.add_argument("--pair", required=True, help="path to the pair JSON, or - for stdin")
    p.set_defaults(func=cmd_render)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
