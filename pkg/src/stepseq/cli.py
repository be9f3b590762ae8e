"""Command-line front end.

Exit codes: 0 success, 1 invalid sequence, 2 usage or parse error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
import time
from itertools import islice

from . import generators, graycode, search, transforms
from .core import (
    VERIFY_LIMIT,
    DomainError,
    ResourceLimitError,
    SteppingSequence,
    format_moves,
    parse_moves,
    verify,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

METHODS = ("recursive", "greedy", "humble", "for-c", "for-j")
STREAM_CHUNK = 4096


class UsageError(Exception):
    pass


def _stream_for(method: str, m: int):
    return generators.stream_for_c(m) if method == "for-c" else generators.stream_for_j(m)


def _materialize(method: str, m: int, args) -> SteppingSequence:
    limit = args.limit_materialize
    if method == "recursive":
        return generators.recursive_r(m, limit or generators.MATERIALIZE_LIMIT)
    if method == "greedy":
        return generators.greedy(m, limit or generators.GREEDY_LIMIT)
    if method == "humble":
        return generators.humble(m, limit or generators.GREEDY_LIMIT)
    limit = limit or generators.MATERIALIZE_LIMIT
    if m > limit:
        raise ResourceLimitError(f"m={m} exceeds materialization limit {limit}; use --stream")
    return SteppingSequence(m, tuple(_stream_for(method, m)))


def _read_sequences(args) -> list[SteppingSequence]:
    if args.input and args.input != "-":
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return [parse_moves(line, args.m) for line in text.splitlines() if line.strip()]
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _source_sequence(args) -> SteppingSequence:
    """Sequence from --input if given, otherwise R_m."""
    if args.input:
        seqs = _read_sequences(args)
        if len(seqs) != 1:
            raise UsageError(f"expected exactly one sequence, got {len(seqs)}")
        return seqs[0]
    return generators.recursive_r(args.m, args.limit_materialize or generators.MATERIALIZE_LIMIT)


def cmd_generate(args, out) -> int:
    if args.stream:
        if args.method not in ("for-c", "for-j"):
            raise UsageError("--stream is only available for for-c and for-j")
        stream = _stream_for(args.method, args.m)
        first = True
        while True:
            chunk = list(islice(stream, STREAM_CHUNK))
            if not chunk:
                break
            out.write(("" if first else " ") + " ".join(map(str, chunk)))
            first = False
        out.write("\n")
        return EXIT_OK
    out.write(format_moves(_materialize(args.method, args.m, args)) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    seqs = _read_sequences(args)
    if not seqs:
        raise UsageError("no sequence on input")
    status = EXIT_OK
    for seq in seqs:
        report = verify(seq, args.limit_verify)
        out.write(report.describe() + "\n")
        if not report.valid:
            status = EXIT_INVALID
    return status


def cmd_enumerate(args, out) -> int:
    filt = search.Filter.STRONGLY_CONTIGUOUS if args.strong else search.Filter(args.filter)
    mode = search.Mode.COUNT if args.count_only else search.Mode.COLLECT
    config = search.SearchConfig(
        args.m, filt, mode,
        node_budget=args.budget,
        limit=args.limit_search,
        collect_limit=max(args.limit_search or 0, search.COLLECT_LIMIT),
        workers=args.threads,
    )
    result = search.enumerate_sequences(config)
    if args.count_only:
        out.write(f"{result.count}\n")
    else:
        for seq in result.sequences:
            out.write(format_moves(seq) + "\n")
    return EXIT_OK


def cmd_transform(args, out) -> int:
    seqs = _read_sequences(args)
    if args.op == "orbit":
        for seq in transforms.orbit_closure(seqs, args.ops.split(",")):
            out.write(format_moves(seq) + "\n")
        return EXIT_OK
    for seq in seqs:
        if args.op == "reverse":
            results = [transforms.reverse(seq)]
        elif args.op == "complement":
            results = [transforms.complement(seq)]
        else:
            results = transforms.commutations(seq)
        for r in results:
            out.write(format_moves(r) + "\n")
    return EXIT_OK


def cmd_graycode(args, out) -> int:
    seq = _source_sequence(args)
    ordering = graycode.to_ordering(seq, args.limit_verify)
    out.write(ordering.format(args.format) + "\n")
    return EXIT_OK


def cmd_ksubsets(args, out) -> int:
    seq = _source_sequence(args)
    k_order = graycode.restrict_to_k(seq, args.k, args.limit_verify)
    out.write(k_order.format() + "\n")
    return EXIT_OK


def cmd_check_brgc(args, out) -> int:
    ordering = graycode.brgc(args.m)
    out.write(ordering.format("binary") + "\n")
    hit = graycode.nesting_scan(ordering)
    if hit is None:
        out.write("no nesting violation\n")
        return EXIT_OK
    pos, family = hit
    word = ordering.words[pos]
    out.write(
        f"nesting violation at position {pos}: "
        f"{graycode.format_word(word, args.m)} = {graycode.format_subset(word)}\n"
    )
    out.write("family: " + ", ".join(graycode.format_subset(s) for s in family) + "\n")
    return EXIT_OK


def cmd_census_m4(args, out) -> int:
    out.write(search.census_m4().summary() + "\n")
    return EXIT_OK


def cmd_bench(args, out) -> int:
    m = args.m
    rows = []
    limit = args.limit_materialize or generators.MATERIALIZE_LIMIT
    if m <= limit:
        start = time.perf_counter()
        n = len(generators.recursive_r(m, limit))
        rows.append(("recursive", n, time.perf_counter() - start))
    for method in ("for-c", "for-j"):
        stream = _stream_for(method, m)
        start = time.perf_counter()
        n = 0
        for _ in islice(stream, args.tokens):
            n += 1
        rows.append((method, n, time.perf_counter() - start))
    for name, n, secs in rows:
        rate = n / secs if secs > 0 else float("inf")
        out.write(f"{name:<10} {n:>12} tokens {secs:10.4f} s {rate:14.0f} tokens/s\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit-verify", type=int, default=VERIFY_LIMIT)
    common.add_argument("--limit-materialize", type=int, default=None,
                        help=f"default {generators.MATERIALIZE_LIMIT} ({generators.GREEDY_LIMIT} for greedy/humble)")
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--output", "-o", help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="stepseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="print R_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="recursive")
    p.add_argument("--stream", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="check sequences read one per line")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--input", "-i", help="file to read (default stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="exhaustive search")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--filter", choices=[f.value for f in search.Filter], default="all")
    p.add_argument("--strong", action="store_true", help="same as --filter strong")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--limit-search", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", parents=[common], help="apply a symmetry")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--op", choices=("reverse", "complement", "commutations", "orbit"), required=True)
    p.add_argument("--ops", default="reverse,complement,commutation",
                   help="operations for --op orbit, comma separated")
    p.add_argument("--input", "-i")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("graycode", parents=[common], help="ordering of m-bit words")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("binary", "decimal"), default="binary")
    p.add_argument("--input", "-i", help="sequence to use instead of R_m")
    p.set_defaults(func=cmd_graycode)

    p = sub.add_parser("ksubsets", parents=[common], help="ordering of k-element subsets")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", "-i", help="sequence to use instead of R_m")
    p.set_defaults(func=cmd_ksubsets)

    p = sub.add_parser("check-brgc", parents=[common], help="reflected Gray code nesting check")
    p.add_argument("--m", type=int, default=3)
    p.set_defaults(func=cmd_check_brgc)

    p = sub.add_parser("census-m4", parents=[common], help="breakdown of the m=4 sequences")
    p.set_defaults(func=cmd_census_m4)

    p = sub.add_parser("bench", parents=[common], help="throughput of the R_m generators")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tokens", type=int, default=1_000_000,
                   help="tokens to pull from each stream")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            out = sys.stdout
            if args.output:
                out = stack.enter_context(open(args.output, "w"))
            return args.func(args, out)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early, e.g. `| head`
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
