"""Command line entry point: ``bettibounds <command> ...``.

Exit codes: 0 success, 1 verification failure or table mismatch, 2 usage,
parse or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import betti as bt
from .errors import BettiBoundsError, InstabilityError
from .field import DEFAULT_PRIME, is_prime
from .groebner import gin_probabilistic
from .io import dumps_ideal, ideal_to_dict, parse_polynomial_lines, read_ideal
from .monomial import (is_stable, is_strongly_stable, random_monomial_ideal, random_stable_ideal,
                       stability_violation, format_monomial)
from .segments import lex_segment_ideal, rev_segment_ideal
from .strands import DEFAULT_MAX_GENERATORS, multigraded_betti
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _prime(text):
    value = int(text)
    if not is_prime(value) or value >= 2**31:
        raise argparse.ArgumentTypeError(f"{text} is not a prime below 2**31")
    return value


def _add_globals(parser, suppress):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--field-prime", type=_prime, default=default(DEFAULT_PRIME),
                        help="prime q of the coefficient field (default 32003)")
    parser.add_argument("--seed", type=int, default=default(0), help="random seed (default 0)")
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))
    parser.add_argument("--max-generators", type=_positive_int, default=default(DEFAULT_MAX_GENERATORS),
                        help="generator cap for Koszul computations (default 15)")
    parser.add_argument("--parallel", type=_nonnegative_int, default=default(0),
                        help="worker processes; 0 or 1 runs serially")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bettibounds",
                                     description="Betti numbers of monomial ideals and their bounds.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded Betti table of an ideal file")
    p.add_argument("ideal", help="ideal JSON file")
    p.add_argument("--method", choices=("ek", "koszul", "both"), default="both")
    p.add_argument("--quotient", action="store_true", help="report the table of S/I")
    p.add_argument("--multigraded", action="store_true", help="also list beta_{i,a}")

    p = sub.add_parser("segment", help="write I(d,k) (rev) or J(d,k) (lex)")
    p.add_argument("kind", choices=("rev", "lex"))
    p.add_argument("d", type=_nonnegative_int)
    p.add_argument("k", type=_nonnegative_int)
    p.add_argument("-n", "--n", type=_positive_int, default=3, help="number of variables (default 3)")
    p.add_argument("-o", "--output", help="write the ideal JSON here instead of stdout")

    p = sub.add_parser("verify", help="run a seeded property sweep")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--count", type=_positive_int, default=100)
    p.add_argument("--dump-dir", default="reproducers", help="where failing instances are written")

    p = sub.add_parser("random", help="write a seeded random ideal")
    p.add_argument("kind", choices=("stable", "monomial"))
    p.add_argument("n", type=_positive_int)
    p.add_argument("d", type=_nonnegative_int)
    p.add_argument("k", type=_nonnegative_int)
    p.add_argument("-o", "--output")

    p = sub.add_parser("gin", help="probabilistic generic initial ideal (revlex)")
    p.add_argument("input", help="ideal JSON file, or polynomial text with --n")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--n", type=_positive_int, help="variable count for polynomial text input")

    p = sub.add_parser("stable-check", help="stability predicates of an ideal file")
    p.add_argument("ideal")

    for action in sub.choices.values():
        _add_globals(action, suppress=True)
    return parser


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def _write_ideal(args, ideal):
    if args.output:
        Path(args.output).write_text(dumps_ideal(ideal) + "\n")
    _emit(args, f"{ideal}" + (f"\nwritten to {args.output}" if args.output else f"\n{dumps_ideal(ideal)}"),
          ideal_to_dict(ideal))


def cmd_betti(args) -> int:
    ideal = read_ideal(args.ideal)
    kind = "quotient" if args.quotient else "ideal"
    tables, payload = {}, {"ideal": ideal_to_dict(ideal), "module": kind}
    if args.method in ("ek", "both"):
        t = bt.ek_betti(ideal)
        tables["ek"] = t.quotient() if args.quotient else t
    if args.method in ("koszul", "both"):
        mg = multigraded_betti(ideal, args.field_prime, kind, args.max_generators, args.parallel)
        tables["koszul"] = mg.coarse()
        if args.multigraded:
            payload["multigraded"] = [{"i": i, "a": list(a), "beta": v} for (i, a), v in mg.items()]
    lines = [f"ideal {ideal}  ({kind})"]
    for name, t in tables.items():
        payload[name] = t.to_dict()
        lines += [f"[{name}]", t.render()]
    if "multigraded" in payload:
        lines.append("[multigraded]")
        lines += [f"  beta_{{{e['i']},{e['a']}}} = {e['beta']}" for e in payload["multigraded"]]
    code = EXIT_OK
    if len(tables) == 2:
        match = tables["ek"] == tables["koszul"]
        payload["verdict"] = "MATCH" if match else "MISMATCH"
        lines.append(f"verdict: {payload['verdict']}")
        code = EXIT_OK if match else EXIT_FAIL
    _emit(args, "\n".join(lines), payload)
    return code


def cmd_segment(args) -> int:
    make = rev_segment_ideal if args.kind == "rev" else lex_segment_ideal
    _write_ideal(args, make(args.n, args.d, args.k))
    return EXIT_OK


def cmd_random(args) -> int:
    if args.kind == "stable":
        ideal = random_stable_ideal(args.n, args.d, args.k, args.seed)
    else:
        ideal = random_monomial_ideal(args.n, args.d, args.k, args.seed)
    _write_ideal(args, ideal)
    return EXIT_OK


def cmd_verify(args) -> int:
    result = run_suite(args.suite, args.count, args.seed, args.parallel, q=args.field_prime)
    paths = result.dump_reproducers(args.dump_dir) if result.failures else []
    payload = result.to_dict()
    payload["reproducers"] = [str(p) for p in paths]
    text = result.render() + "".join(f"\n  reproducer: {p}" for p in paths)
    _emit(args, text, payload)
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_gin(args) -> int:
    path = Path(args.input)
    if args.n is not None:
        gens = parse_polynomial_lines(path.read_text(), args.n, args.field_prime)
        if not gens:
            raise BettiBoundsError("no polynomials in input")
    else:
        gens = read_ideal(path)
    try:
        res = gin_probabilistic(gens, args.trials, args.seed, args.field_prime)
    except InstabilityError as exc:
        observed = "\n".join(f"  {o}" for o in exc.observed)
        _emit(args, f"no consensus over F_{args.field_prime}:\n{observed}\n{exc}",
              {"error": str(exc), "observed": [ideal_to_dict(o) for o in exc.observed]})
        return EXIT_FAIL
    text = (f"Gin over F_{res.q} ({res.trials} trials, seed {res.seed}): {res.ideal}\n"
            f"stable: {is_stable(res.ideal)}")
    payload = res.to_dict()
    payload["stable"] = is_stable(res.ideal)
    _emit(args, text, payload)
    return EXIT_OK


def cmd_stable_check(args) -> int:
    ideal = read_ideal(args.ideal)
    bad = stability_violation(ideal)
    payload = {"ideal": ideal_to_dict(ideal), "stable": bad is None,
               "strongly_stable": is_strongly_stable(ideal)}
    text = f"{ideal}\nstable: {bad is None}\nstrongly stable: {payload['strongly_stable']}"
    if bad is not None:
        payload["violation"] = {"generator": list(bad[0]), "missing": list(bad[1])}
        text += f"\nviolation: {format_monomial(bad[0])} -> {format_monomial(bad[1])} not in ideal"
    _emit(args, text, payload)
    return EXIT_OK


COMMANDS = {"betti": cmd_betti, "segment": cmd_segment, "verify": cmd_verify,
            "random": cmd_random, "gin": cmd_gin, "stable-check": cmd_stable_check}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (BettiBoundsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
