"""Command-line front end.

    tricolor tri -n 4 --strategy paper --emit dot
    tricolor kraft sum 1,2,3,3
    tricolor kraft colortree --words 0,10,110,111
    tricolor validate structure.json

Exit status: 0 success, 1 usage or parse error, 2 property violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from tricolor import coloring as col
from tricolor import emit
from tricolor.errors import (
    DomainError,
    DuplicateWord,
    KraftViolation,
    ParseError,
    PrefixViolation,
    ResourceError,
    format_rational,
)
from tricolor.prefixcode import (
    build_tree,
    find_prefix_pair,
    kraft_construct,
    kraft_sum,
    leaf_color_repetition,
)
from tricolor.structure import AdjacencyMode, build_structure, to_graph

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2
STRATEGIES = ("paper", "periodic", "greedy", "exact")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_lengths(text: str) -> list[int]:
    out = []
    for i, item in enumerate(text.split(","), 1):
        item = item.strip()
        if not item.isdigit() or int(item) < 1:
            raise ParseError(f"length {i} is not a positive integer: {item!r}", "lengths")
        out.append(int(item))
    return out


def parse_words(text: str) -> list[str]:
    """Codeword file: one word per line, '#' starts a comment, blank lines
    are skipped."""
    words = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise ParseError(f"codeword {line!r} has symbols other than 0 and 1", f"line {lineno}")
        words.append(line)
    return words


def _inline_words(text: str) -> list[str]:
    return parse_words("\n".join(text.split(",")))


def cmd_tri(args, out: TextIO, err: TextIO) -> int:
    if args.n < 2:
        raise UsageError(f"order must be >= 2, got {args.n}")
    if args.strategy == "paper" and args.n != 4:
        raise UsageError("strategy 'paper' is only defined for -n 4")
    s = build_structure(args.n)
    mode = AdjacencyMode(args.mode)
    g = to_graph(s, mode)
    if args.strategy == "paper":
        c = col.paper_fixture_coloring(4)
    elif args.strategy == "periodic":
        c = col.periodic_coloring(s)
    elif args.strategy == "greedy":
        c = col.greedy_coloring(g)
    else:
        found = col.exact_chromatic(g)
        assert found is not None
        c = found[1]

    proper = col.is_proper(g, c)
    periodic = col.row_periodicity(s, c)
    spec = emit.RenderSpec(
        emit.Target.JSON if args.emit == "json" else emit.Target.STRUCTURE_DOT,
        include_colors=not args.no_color,
    )
    if args.emit == "json":
        out.write(emit.dumps(emit.document(s, mode, c, args.strategy, spec)))
    else:
        out.write(emit.structure_dot(s, mode, c, spec))

    err.write(
        f"order {s.order}: {len(s.points)} points, {len(g.edges)} edges, "
        f"{c.palette_size} colors; proper={proper} row_periodic={periodic}\n"
    )
    # Row repetition is only promised by the paper and periodic schemes.
    if not proper or (args.strategy in ("paper", "periodic") and not periodic):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_kraft(args, out: TextIO, err: TextIO) -> int:
    words: Optional[list[str]] = None
    lengths: Optional[list[int]] = None
    sources = [x is not None for x in (args.lengths, args.words, args.file)]
    if sum(sources) != 1:
        raise UsageError("give exactly one of LENGTHS, --words or --file")
    if args.lengths is not None:
        lengths = parse_lengths(args.lengths)
    elif args.words is not None:
        words = _inline_words(args.words)
    else:
        words = parse_words(Path(args.file).read_text(encoding="utf-8"))

    if args.action == "sum":
        if lengths is None:
            lengths = [len(w) for w in words]
        total = kraft_sum(lengths, args.radix)
        out.write(format_rational(total) + "\n")
        return EXIT_OK if total <= 1 else EXIT_VIOLATION

    if args.radix != 2:
        raise UsageError("--radix only applies to 'sum'")

    if args.action == "check":
        if words is None:
            raise UsageError("'check' needs codewords (--words or --file)")
        if len(set(words)) != len(words):
            dup = next(w for w in words if words.count(w) > 1)
            out.write(f"not prefix-free: duplicate {dup}\n")
            return EXIT_VIOLATION
        pair = find_prefix_pair(words)
        if pair is not None:
            out.write(f"not prefix-free: {pair[0]} is a prefix of {pair[1]}\n")
            return EXIT_VIOLATION
        out.write(f"prefix-free; kraft sum {format_rational(kraft_sum(len(w) for w in words))}\n")
        return EXIT_OK

    if args.action == "construct":
        if lengths is None:
            raise UsageError("'construct' needs a length list")
        out.writelines(w + "\n" for w in kraft_construct(lengths))
        return EXIT_OK

    # colortree
    if words is None:
        words = kraft_construct(lengths)
    tree = build_tree(words)
    out.write(emit.tree_dot(tree, emit.RenderSpec(emit.Target.TREE_DOT, not args.no_color)))
    report = leaf_color_repetition(tree)
    for k, leaf in enumerate(report.leaves, 1):
        err.write(f"C{k} {leaf.word} depth={leaf.depth} {leaf.color.value}\n")
    err.write(f"same_parity_same_color={report.same_parity_same_color}\n")
    return EXIT_OK


def cmd_validate(args, out: TextIO, err: TextIO) -> int:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="utf-8")
    doc = emit.document_from_json(emit.loads(text))
    s = doc.structure
    g = to_graph(s, doc.mode)
    problems = []
    if doc.graph is not None and doc.graph != g:
        problems.append(f"graph does not match the {doc.mode.value} graph of the structure")
    proper = periodic = None
    if doc.coloring is not None:
        proper = col.is_proper(g, doc.coloring)
        periodic = col.row_periodicity(s, doc.coloring)
        if not proper:
            problems.append("coloring is not proper")
        if args.require_periodic and not periodic:
            problems.append("rows of equal parity differ")
    out.write(
        f"order {s.order}: {len(s.points)} points, mode {doc.mode.value}, "
        f"proper={proper} row_periodic={periodic}\n"
    )
    for p in problems:
        err.write(f"violation: {p}\n")
    return EXIT_VIOLATION if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tricolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tri = sub.add_parser("tri", help="build, color and emit a triangular structure")
    tri.add_argument("-n", type=int, required=True, help="order (points per line)")
    tri.add_argument("--mode", choices=[m.value for m in AdjacencyMode], default="path")
    tri.add_argument("--strategy", choices=STRATEGIES, default="periodic")
    tri.add_argument("--emit", choices=("dot", "json"), default="dot")
    tri.add_argument("--no-color", action="store_true")
    tri.set_defaults(func=cmd_tri)

    kraft = sub.add_parser("kraft", help="Kraft sums and prefix codes")
    kraft.add_argument("action", choices=("sum", "check", "construct", "colortree"))
    kraft.add_argument("lengths", nargs="?", help="comma-separated codeword lengths")
    kraft.add_argument("--words", help="comma-separated codewords")
    kraft.add_argument("--file", help="codeword file, one word per line")
    kraft.add_argument("--radix", type=int, default=2)
    kraft.add_argument("--no-color", action="store_true")
    kraft.set_defaults(func=cmd_kraft)

    val = sub.add_parser("validate", help="check a JSON structure document")
    val.add_argument("file", help="path, or - for stdin")
    val.add_argument("--require-periodic", action="store_true")
    val.set_defaults(func=cmd_validate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ParseError, DomainError, ResourceError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (KraftViolation, PrefixViolation, DuplicateWord) as exc:
        out.write(f"{exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
