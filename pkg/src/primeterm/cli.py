"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 resource limit (bit budget or oracle range).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import BitLimitExceeded, PrimeTermError, RangeExceeded
from .term import DEFAULT_MAX_BITS

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
ENV_MAX_BITS = "PRIMETERM_MAX_BITS"


class UsageError(Exception):
    pass


def _max_bits(args) -> int:
    if args.max_bits is not None:
        v = args.max_bits
    else:
        raw = os.environ.get(ENV_MAX_BITS)
        if raw is None:
            return DEFAULT_MAX_BITS
        try:
            v = int(raw)
        except ValueError:
            raise UsageError(f"{ENV_MAX_BITS} must be an integer, got {raw!r}") from None
    if v < 64:
        raise UsageError("the bit budget must be at least 64")
    return v


def _print_value(args, value):
    if args.output == "json":
        print(json.dumps({"command": args.command, "value": value}, sort_keys=True))
    else:
        print(value)


def _natural(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def cmd_eval(args):
    from .term import EvalConfig, eval_term, parse_term
    env = {}
    for item in args.set or []:
        name, sep, val = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--set expects name=value, got {item!r}")
        try:
            env[name] = int(val)
        except ValueError:
            raise UsageError(f"--set {name}: not an integer: {val!r}") from None
    cfg = EvalConfig(max_bits=_max_bits(args), semantic_shortcuts=not args.literal)
    _print_value(args, eval_term(parse_term(args.expr), env, cfg))
    return EXIT_OK


def cmd_prime_function(args):
    from . import primes
    mb = _max_bits(args)
    if args.command == "omega":
        v = primes.omega(args.n, args.mode, mb)
    elif args.command == "pi":
        v = primes.prime_pi(args.n, args.mode, mb)
    elif args.command == "nsqrt1":
        v = primes.sqrt_unity_count(args.n, args.mode, mb)
    elif args.command == "prime":
        v = primes.nth_prime(args.n, args.n_mode, mb)
    else:
        v = primes.next_prime(args.n, args.mode, mb)
    _print_value(args, v)
    return EXIT_OK


def cmd_expand(args):
    from .expoly.build import build_F
    from .expoly.emit import emit
    variant = {"f": "F32", "fhat": "Fhat42"}[args.equation]
    print(emit(build_F(variant, args.dialect), args.format))
    return EXIT_OK


def cmd_verify(args):
    from . import verify
    try:
        numbers = verify.resolve(args.suite)
    except KeyError:
        names = ", ".join(name for name, _, _ in verify.SUITES.values())
        raise UsageError(f"unknown suite {args.suite!r}; use all, 1..15 or one of {names}") from None
    options = {7: {"stretch": args.stretch}, 8: {"include_five": args.pi5}}
    results = [verify.run_suite(n, **options.get(n, {})) for n in numbers]
    if args.output == "json":
        print(json.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed,
                           "detail": r.detail, "seconds": round(r.seconds, 3)}
                          for r in results], indent=1, sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_bench(args):
    from . import bench
    from .kernels import BACKEND
    print(f"active kernel backend: {BACKEND}")
    print(bench.report(bench.run(args.repeat)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primeterm",
                                description="Evaluate and verify arithmetic terms for primes.")
    p.add_argument("--max-bits", type=int, default=None,
                   help=f"bit budget for intermediates (default {DEFAULT_MAX_BITS}, "
                        f"or ${ENV_MAX_BITS})")
    p.add_argument("--output", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a term")
    e.add_argument("--expr", required=True)
    e.add_argument("--set", action="append", metavar="NAME=VALUE")
    e.add_argument("--literal", action="store_true", help="expand gcd, nu2 and hw into terms")
    e.set_defaults(fn=cmd_eval)

    for name, help_ in (("omega", "distinct prime divisors"), ("pi", "prime counting"),
                        ("nsqrt1", "square roots of unity modulo N")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("n", type=_natural, metavar="N")
        s.add_argument("--mode", choices=("term", "oracle"), default="term")
        s.set_defaults(fn=cmd_prime_function)

    s = sub.add_parser("prime", help="the N-th prime")
    s.add_argument("n", type=_natural, metavar="N")
    s.add_argument("--n-mode", choices=("hypercube", "oracle"), default="oracle")
    s.set_defaults(fn=cmd_prime_function)

    s = sub.add_parser("next-prime", help="smallest prime above X")
    s.add_argument("n", type=_natural, metavar="X")
    s.add_argument("--mode", choices=("term", "oracle"), default="oracle")
    s.set_defaults(fn=cmd_prime_function)

    s = sub.add_parser("expand", help="expand an equation")
    s.add_argument("equation", choices=("f", "fhat"))
    s.add_argument("--format", choices=("json", "latex", "text", "count"), default="count")
    s.add_argument("--dialect", choices=("listing", "corrected"), default=None)
    s.set_defaults(fn=cmd_expand)

    s = sub.add_parser("verify", help="run acceptance suites")
    s.add_argument("suite", nargs="?", default="all")
    s.add_argument("--stretch", action="store_true", help="omega up to 128")
    s.add_argument("--pi5", action="store_true", help="include pi(5) in term mode")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("bench", help="time the kernels")
    s.add_argument("--repeat", type=int, default=3)
    s.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"primeterm: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BitLimitExceeded, RangeExceeded) as e:
        print(f"primeterm: resource limit: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (PrimeTermError, ValueError) as e:
        print(f"primeterm: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
