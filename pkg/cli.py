#!/usr/bin/env python3
"""
colorful-tverberg command line.

Exit codes: 0 success, 1 negative answer (no certificate, not colorful, ...),
2 usage or format error. Input words, points and partitions are read from stdin
unless a file option names them; set TVERBERG_WORKERS for internal parallelism.
"""

import argparse
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Callable, List, Optional, TextIO, Tuple

import geometry
import gd_graphs
import tverberg
import words
from config import log
from formats import (
    format_certificate,
    format_complex,
    format_flat,
    format_partition,
    format_point,
    format_points,
    format_witness,
    format_word,
    parse_complex,
    parse_ints,
    parse_partition,
    parse_parts,
    parse_points,
    parse_word,
)

Result = Tuple[int, str]


def _read(path: str) -> str:
    with open(path) as f:
        return f.read()


# ---- word ----

def word_check(args, stdin: str) -> Result:
    if words.is_colorful(parse_word(stdin), args.d):
        return 0, "colorful"
    return 1, "not colorful"


def word_find(args, stdin: str) -> Result:
    cert = words.find_colorful_subword(parse_word(stdin), parse_ints(args.sigma), args.d)
    if cert is None:
        return 1, "none"
    return 0, format_certificate(cert)


def word_delta(args, stdin: str) -> Result:
    return 0, format_complex(words.delta_complex(parse_word(stdin), args.d))


def word_reduce(args, stdin: str) -> Result:
    return 0, format_word(words.reduce(parse_word(stdin)))


def word_restrict(args, stdin: str) -> Result:
    return 0, format_word(words.restrict(parse_word(stdin), parse_ints(args.tau)))


def word_chunks(args, stdin: str) -> Result:
    found = words.chunks(parse_word(stdin), parse_ints(args.tau))
    return 0, "\n".join(f"{c.letter} {c.start} {c.end}" for c in found)


def word_minimize(args, stdin: str) -> Result:
    keep = parse_ints(args.keep) if args.keep is not None else None
    return 0, format_word(words.minimize_letter(parse_word(stdin), args.b, args.d, keep))


# ---- construct ----

def construct_canonical(args, stdin: str) -> Result:
    return 0, format_word(words.canonical_word(parse_ints(args.sigma), args.d))


def construct_facets(args, stdin: str) -> Result:
    return 0, format_word(words.facet_concat_word(parse_complex(_read(args.file))))


def construct_lift(args, stdin: str) -> Result:
    lifted, relabeling = words.lift_word(parse_word(stdin))
    mapping = " ".join(f"{k}>{v}" for k, v in sorted(relabeling.items()))
    return 0, f"{format_word(lifted)}\n# relabeling {mapping}"


def construct_delete(args, stdin: str) -> Result:
    return 0, format_word(words.delete_letter(parse_word(stdin), args.i))


# ---- geom ----

def geom_moment(args, stdin: str) -> Result:
    return 0, format_points(geometry.moment_curve(args.n, args.d, args.base))


def geom_gp(args, stdin: str) -> Result:
    if geometry.in_general_position(parse_points(stdin)):
        return 0, "general position"
    return 1, "not in general position"


def geom_sgp(args, stdin: str) -> Result:
    if geometry.in_strong_general_position(parse_points(stdin)):
        return 0, "strong general position"
    return 1, "not in strong general position"


def geom_intersect(args, stdin: str) -> Result:
    witness = geometry.convex_hulls_intersect(parse_parts(_read(args.parts)))
    if witness is None:
        return 1, "none"
    return 0, format_point(witness)


def geom_affine(args, stdin: str) -> Result:
    return 0, format_flat(geometry.affine_intersection(parse_parts(_read(args.parts))))


# ---- tverberg ----

def tv_nerve(args, stdin: str) -> Result:
    P = parse_points(_read(args.points))
    return 0, format_complex(tverberg.nerve(P, parse_partition(stdin)))


def tv_minimal(args, stdin: str) -> Result:
    found = tverberg.enumerate_minimal_tverberg(parse_points(stdin), args.r)
    return (0 if found else 1), "\n\n".join(format_witness(w) for w in found)


def tv_colorful_check(args, stdin: str) -> Result:
    if tverberg.colorful_minimality_check(parse_points(stdin), args.d, args.rmax):
        return 0, "minimal partitions are colorful"
    return 1, "minimal partitions differ from colorful partitions"


def tv_find(args, stdin: str) -> Result:
    witness = tverberg.find_tverberg_partition(parse_points(stdin), args.r)
    if witness is None:
        return 1, "none"
    return 0, format_witness(witness)


def tv_word2part(args, stdin: str) -> Result:
    P = parse_points(_read(args.points))
    return 0, format_partition(tverberg.word_to_partition(parse_word(stdin), P))


def tv_part2word(args, stdin: str) -> Result:
    P = parse_points(_read(args.points))
    return 0, format_word(tverberg.partition_to_word(P, parse_partition(stdin)))


def tv_extend(args, stdin: str) -> Result:
    K = parse_complex(_read(args.complex))
    P = parse_points(_read(args.points))
    return 0, format_partition(tverberg.extend_partition_for_cone(K, P, parse_partition(stdin)))


# ---- graph ----

def graph_gd(args, stdin: str) -> Result:
    params = gd_graphs.GdParams(n=args.n, d=args.d, multiplicity=args.mult)
    return 0, format_complex(gd_graphs.build_gd(params))


def graph_search(args, stdin: str) -> Result:
    K = parse_complex(_read(args.file))
    found = gd_graphs.search_word(K, args.d, args.max_len)
    if found is None:
        return 1, "none"
    return 0, format_word(found)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorful-tverberg",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def command(group, name: str, handler: Callable, help: str):
        sub = group.add_parser(name, help=help)
        sub.set_defaults(handler=handler)
        return sub

    w = groups.add_parser("word", help="word combinatorics").add_subparsers(dest="verb", required=True)
    c = command(w, "check", word_check, "is the word d-colorful")
    c.add_argument("--d", type=int, required=True)
    c = command(w, "find", word_find, "certificate of a d-colorful subword on sigma")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--sigma", required=True, help='letters, e.g. "2 3 4"')
    c = command(w, "delta", word_delta, "facets of the complex the word represents")
    c.add_argument("--d", type=int, required=True)
    command(w, "reduce", word_reduce, "collapse repeated letters")
    c = command(w, "restrict", word_restrict, "keep only letters in tau")
    c.add_argument("--tau", required=True)
    c = command(w, "chunks", word_chunks, "maximal runs of the restriction to tau (letter start end)")
    c.add_argument("--tau", required=True)
    c = command(w, "minimize", word_minimize, "insertion pattern of letter b")
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--keep", help="letters kept besides b (default: all)")

    k = groups.add_parser("construct", help="word constructions").add_subparsers(dest="verb", required=True)
    c = command(k, "canonical", construct_canonical, "zigzag d-colorful word on sigma")
    c.add_argument("--sigma", required=True)
    c.add_argument("--d", type=int, required=True)
    c = command(k, "facets", construct_facets, "word representing a complex at (#facets + 1)")
    c.add_argument("--file", required=True, help="complex file")
    command(k, "lift", construct_lift, "word representing the same complex one dimension up")
    c = command(k, "delete", construct_delete, "delete a letter from a colorful word")
    c.add_argument("--i", type=int, required=True)

    g = groups.add_parser("geom", help="exact geometry").add_subparsers(dest="verb", required=True)
    c = command(g, "moment", geom_moment, "points on the moment curve")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--base", default="2")
    command(g, "gp", geom_gp, "general position test")
    command(g, "sgp", geom_sgp, "strong general position test")
    c = command(g, "intersect", geom_intersect, "common point of convex hulls")
    c.add_argument("--parts", required=True, help="parts file")
    c = command(g, "affine", geom_affine, "intersection of affine hulls")
    c.add_argument("--parts", required=True, help="parts file")

    t = groups.add_parser("tverberg", help="Tverberg partitions").add_subparsers(dest="verb", required=True)
    c = command(t, "nerve", tv_nerve, "nerve of a partition (partition on stdin)")
    c.add_argument("--points", required=True)
    c = command(t, "minimal", tv_minimal, "all minimal Tverberg partitions with r parts")
    c.add_argument("--r", type=int, required=True)
    c = command(t, "colorful-check", tv_colorful_check, "minimal partitions == colorful partitions")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--rmax", type=int, required=True)
    c = command(t, "find", tv_find, "first Tverberg partition with r parts")
    c.add_argument("--r", type=int, required=True)
    c = command(t, "word2part", tv_word2part, "partition labelled by a word (word on stdin)")
    c.add_argument("--points", required=True)
    c = command(t, "part2word", tv_part2word, "word of a partition (partition on stdin)")
    c.add_argument("--points", required=True)
    c = command(t, "extend", tv_extend, "cover all points, keeping the nerve of a cone")
    c.add_argument("--complex", required=True)
    c.add_argument("--points", required=True)

    h = groups.add_parser("graph", help="G_d graphs and word search").add_subparsers(dest="verb", required=True)
    c = command(h, "gd", graph_gd, "edges and isolated vertices of G_d")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--mult", type=int, default=1)
    c = command(h, "search", graph_search, "least representing word up to a length")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--max-len", dest="max_len", type=int, required=True)
    c.add_argument("--file", required=True, help="complex file")

    return parser


_READS_STDIN = {
    word_check, word_find, word_delta, word_reduce, word_restrict, word_chunks, word_minimize,
    construct_lift, construct_delete, geom_gp, geom_sgp, tv_nerve, tv_minimal,
    tv_colorful_check, tv_find, tv_word2part, tv_part2word, tv_extend,
}


def run(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse writes usage and help to sys.stderr / sys.stdout
        with redirect_stderr(stderr), redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    log("CLI", f"{args.group} {args.verb}")
    try:
        text = stdin.read() if args.handler in _READS_STDIN else ""
        code, output = args.handler(args, text)
    except (ValueError, OSError) as e:
        message = str(e).strip().splitlines()[0] if str(e).strip() else type(e).__name__
        print(f"error: {message}", file=stderr)
        return 2
    if output:
        print(output, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
