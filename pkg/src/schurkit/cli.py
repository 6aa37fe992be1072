"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 usage or input error,
3 a decomposition ran out of remainders (raise ``--wcap``).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import lr, partitions, semigroup
from .cache import CacheFormatError, StaleValue, cache_load, cache_store
from .partitions import Partition, PartitionError, RankContext, format_composition, format_partition

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NO_DECOMPOSITION = 3


class ParseError(ValueError):
    def __init__(self, text, position, message):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position


def parse_partition_arg(text: str) -> Partition:
    """Parse ``2,1`` style literals; ``0`` is the zero partition."""
    if text == "0":
        return Partition()
    parts = []
    pos = 0
    for i, chunk in enumerate(text.split(",")):
        if not chunk.isdigit() or not chunk.isascii():
            raise ParseError(text, pos, f"expected a nonnegative integer, got {chunk!r}")
        if i == 0 and int(chunk) == 0:
            raise ParseError(text, pos, "leading part must be positive")
        parts.append(int(chunk))
        pos += len(chunk) + 1
    return partitions.make_partition(parts)


def _partition_type(text):
    try:
        return parse_partition_arg(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", default=argparse.SUPPRESS,
                        help="LR cache file (default: $SCHURKIT_CACHE)")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--paranoid", action="store_true", default=argparse.SUPPRESS,
                        help="recompute every cached value on load")

    parser = _Parser(prog="schurkit", parents=[common],
                     description="Littlewood-Richardson decompositions and embedding certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rank(p):
        p.add_argument("--rank", type=int, required=True, dest="rank")

    def wcap(p):
        p.add_argument("--wcap", type=int, default=None)

    lr_p = sub.add_parser("lr", parents=[common], help="LR coefficients and products")
    lr_sub = lr_p.add_subparsers(dest="lr_command", required=True, parser_class=_Parser)
    p = lr_sub.add_parser("coef", parents=[common])
    p.add_argument("a", type=_partition_type)
    p.add_argument("c", type=_partition_type)
    p.add_argument("b", type=_partition_type)
    p = lr_sub.add_parser("prod", parents=[common])
    p.add_argument("a", type=_partition_type)
    p.add_argument("c", type=_partition_type)
    rank(p)
    p = lr_sub.add_parser("power", parents=[common])
    p.add_argument("a", type=_partition_type)
    p.add_argument("--n", type=int, required=True)
    rank(p)

    p = sub.add_parser("dom", parents=[common], help="extended dominance b ⪯ a")
    p.add_argument("b", type=_partition_type)
    p.add_argument("a", type=_partition_type)
    rank(p)

    p = sub.add_parser("gens", parents=[common], help="generators v(L, mu·a)")
    p.add_argument("a", type=_partition_type)
    rank(p)

    p = sub.add_parser("sigma", parents=[common], help="remainder set sigma(a)")
    p.add_argument("a", type=_partition_type)
    rank(p)
    wcap(p)

    p = sub.add_parser("decompose", parents=[common], help="decompose b over sigma(a)")
    p.add_argument("b", type=_partition_type)
    p.add_argument("a", type=_partition_type)
    rank(p)
    wcap(p)

    p = sub.add_parser("certify", parents=[common], help="certificates for (S_a)^n")
    p.add_argument("a", type=_partition_type)
    p.add_argument("--n", type=int, required=True)
    rank(p)
    wcap(p)

    p = sub.add_parser("dim", parents=[common], help="dimension of S_a at rank d")
    p.add_argument("a", type=_partition_type)
    rank(p)

    p = sub.add_parser("flagsig", parents=[common], help="flag signature of a")
    p.add_argument("a", type=_partition_type)
    rank(p)

    check_p = sub.add_parser("check", parents=[common], help="batch property checks")
    check_sub = check_p.add_subparsers(dest="check_command", required=True, parser_class=_Parser)
    p = check_sub.add_parser("semigroup", parents=[common])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-weight", type=int, default=5)
    rank(p)
    p = check_sub.add_parser("dominance", parents=[common])
    p.add_argument("a", type=_partition_type)
    p.add_argument("--n", type=int, required=True)
    rank(p)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _decomposition_lines(dec, fmt):
    if fmt == "json":
        return [_dump(dec.to_json())]
    return [f"{format_partition(b)}\t{m}" for b, m in dec.items()]


def _execute(args, cache, out) -> int:
    fmt = args.format
    cmd = args.command
    ctx = RankContext(args.rank) if getattr(args, "rank", None) is not None else None

    if cmd == "lr":
        if args.lr_command == "coef":
            value = lr.lr_coefficient(args.a, args.c, args.b, cache=cache)
            if fmt == "json":
                out.append(_dump({"a": list(args.a), "c": list(args.c), "b": list(args.b),
                                  "value": str(value)}))
            else:
                out.append(str(value))
            return EXIT_OK
        if args.lr_command == "prod":
            dec = lr.tensor_product(args.a, args.c, ctx, cache=cache)
        else:
            if args.n < 1:
                raise _UsageError("--n must be at least 1")
            dec = lr.tensor_power(args.a, args.n, ctx, cache=cache)
        out.extend(_decomposition_lines(dec, fmt))
        return EXIT_OK

    if cmd == "dom":
        value = partitions.dominated_ext(args.b, args.a, ctx.d)
        out.append(_dump({"b": list(args.b), "a": list(args.a), "dominated": value})
                   if fmt == "json" else _bool(value))
        return EXIT_OK

    if cmd == "gens":
        gmap = partitions.generator_map(args.a, ctx)
        if fmt == "json":
            out.append(_dump({"a": list(args.a), "rank": ctx.d, "mu": ctx.mu,
                              "generators": [{"L": list(L), "v": list(v)} for L, v in gmap.items()]}))
        else:
            out.extend(f"{format_composition(L)}\t{format_partition(v)}" for L, v in gmap.items())
        return EXIT_OK

    if cmd == "sigma":
        sigma = semigroup.compute_sigma(args.a, ctx, args.wcap)
        if fmt == "json":
            out.append(_dump({"a": list(args.a), "rank": ctx.d, "weight_cap": sigma.weight_cap,
                              "members": [list(p) for p in sigma.sorted()]}))
        else:
            out.extend(format_partition(p) for p in sigma.sorted())
        return EXIT_OK

    if cmd == "decompose":
        sigma = semigroup.compute_sigma(args.a, ctx, args.wcap)
        w = semigroup.decompose(args.b, args.a, ctx, sigma)
        if fmt == "json":
            out.append(_dump({"b": list(args.b), "a": list(args.a), "c": list(w.c),
                              "M": w.M, "m": w.m_json()}))
        else:
            out.append(f"c={format_partition(w.c)}")
            out.append(f"M={w.M}")
            out.extend(f"{format_composition(L)}\t{k}" for L, k in w.m.items())
        return EXIT_OK

    if cmd == "certify":
        if args.n < 1:
            raise _UsageError("--n must be at least 1")
        sigma = semigroup.compute_sigma(args.a, ctx, args.wcap)
        certs = semigroup.certify(args.a, args.n, ctx, sigma, cache=cache)
        for cert in certs:
            out.append(_dump(cert.to_json()) if fmt == "json" else cert.to_text())
        return EXIT_OK if all(c.verified for c in certs) else EXIT_VIOLATION

    if cmd == "dim":
        value = lr.dim_schur(args.a, ctx.d)
        out.append(_dump({"a": list(args.a), "rank": ctx.d, "dim": str(value)})
                   if fmt == "json" else str(value))
        return EXIT_OK

    if cmd == "flagsig":
        sig = partitions.flag_signature(args.a, ctx.d)
        if fmt == "json":
            out.append(_dump({"s": list(sig.s), "exponents": list(sig.exponents)}))
        else:
            out.append("s=" + ",".join(map(str, sig.s)))
            out.append("exponents=" + ",".join(map(str, sig.exponents)))
        return EXIT_OK

    if cmd == "check":
        if args.check_command == "semigroup":
            rng = random.Random(args.seed)
            failures = []
            for _ in range(args.samples):
                tup = lr.sample_semigroup_tuple(rng, ctx, args.max_weight, cache=cache)
                if not lr.check_semigroup(*tup, ctx, cache=cache):
                    failures.append(tup)
            if fmt == "json":
                out.append(_dump({"samples": args.samples, "seed": args.seed, "rank": ctx.d,
                                  "violations": [[list(p) for p in t] for t in failures]}))
            else:
                out.append(f"samples={args.samples} violations={len(failures)}")
                out.extend(" ".join(format_partition(p) for p in t) for t in failures)
            return EXIT_VIOLATION if failures else EXIT_OK
        if args.n < 1:
            raise _UsageError("--n must be at least 1")
        bad = lr.check_dominance_bound(args.a, args.n, ctx, cache=cache)
        if fmt == "json":
            out.append(_dump({"a": list(args.a), "n": args.n, "rank": ctx.d,
                              "violations": [list(b) for b in bad]}))
        else:
            out.append(f"violations={len(bad)}")
            out.extend(format_partition(b) for b in bad)
        return EXIT_VIOLATION if bad else EXIT_OK

    raise _UsageError(f"unknown command {cmd}")


def run_command(argv, stdout=None, stderr=None) -> int:
    """Run one CLI invocation and return its exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.format = getattr(args, "format", "text")
    cache_path = getattr(args, "cache", None) or os.environ.get("SCHURKIT_CACHE")
    paranoid = getattr(args, "paranoid", False)

    try:
        records = cache_load(cache_path, paranoid=paranoid) if cache_path else {}
    except (CacheFormatError, StaleValue, OSError) as exc:
        print(f"schurkit: cache error: {exc}", file=stderr)
        return EXIT_USAGE
    cache = lr.LRCache(records)

    out: list[str] = []
    try:
        code = _execute(args, cache, out)
    except semigroup.NoDecomposition as exc:
        print(f"schurkit: {exc}", file=stderr)
        return EXIT_NO_DECOMPOSITION
    except (_UsageError, PartitionError, semigroup.NotInZ, semigroup.CapTooSmall,
            semigroup.ZeroM, lr.HypothesisFailed, ValueError) as exc:
        print(f"schurkit: {exc}", file=stderr)
        return EXIT_USAGE
    for line in out:
        print(line, file=stdout)
    if cache_path:
        try:
            cache_store(cache_path, cache.records())
        except OSError as exc:
            print(f"schurkit: cannot write cache: {exc}", file=stderr)
    return code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
