"""Command line front end.

Exit codes: 0 success, 2 usage or parse error, 3 resource bound exceeded,
4 verification suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .braid import BraidWord, closure_components, writhe
from .errors import HVError, OperatorError, ResourceError, WordError
from .eyb import EYBOperator, jones_operator, load_operator
from .invariants import link_invariant, trace_Ti
from .report import Report
from .series import DEFAULT_ORDER, TruncatedSeries
from .suites import SUITES, run_suite
from .syntax import parse_word, print_word

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_SUITE = 4


def rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def series_list(t: TruncatedSeries) -> list[list]:
    return [[e, rational(c)] for e, c in t.items()]


def _metadata(w, op: EYBOperator, seed=None) -> dict:
    braid = isinstance(w, BraidWord)
    return {
        "writhe": writhe(w) if braid else None,
        "components": closure_components(w) if braid else None,
        "singular_letters": 0 if braid else w.singular_count,
        "operator": op.name,
        "convention_id": op.convention_id,
        "seed": seed,
    }


def _operator(args) -> EYBOperator:
    return load_operator(args.operator) if args.operator else jones_operator()


def _word(args, allow_singular: bool):
    return parse_word(args.word, args.genus, args.strands, allow_singular)


def _check_i(args) -> None:
    if not 0 <= args.i <= args.genus:
        raise WordError(f"--i must lie in 0..{args.genus}")


def cmd_invariant(args) -> tuple[dict, str]:
    op = _operator(args)
    _check_i(args)
    w = _word(args, allow_singular=False)
    res = link_invariant(w, args.i, args.d, op, args.order)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "invariant",
        "word": print_word(w),
        "g": w.genus,
        "n": w.strands,
        "i": args.i,
        "d": args.d,
        "D": args.order,
        "value": rational(res.value),
        "series": series_list(res.series),
        "metadata": _metadata(w, op),
    }
    text = "\n".join([
        f"word        {record['word'] or 'e'}  (g={w.genus}, n={w.strands})",
        f"L_{{{args.i},{args.d}}}     {res.value}",
        f"T_{args.i}         {res.series}",
        f"writhe      {res.writhe}",
        f"components  {res.components}",
        f"convention  {op.name} {op.convention_id}",
    ])
    return record, text


def cmd_trace(args) -> tuple[dict, str]:
    op = _operator(args)
    _check_i(args)
    w = _word(args, allow_singular=True)
    series = trace_Ti(w, args.i, op, args.order)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "trace",
        "word": print_word(w),
        "g": w.genus,
        "n": w.strands,
        "i": args.i,
        "d": None,
        "D": args.order,
        "value": None,
        "series": series_list(series),
        "metadata": _metadata(w, op),
    }
    text = f"T_{args.i}([{record['word'] or 'e'}]) = {series}\nconvention  {op.name} {op.convention_id}"
    return record, text


def cmd_check(args) -> tuple[dict, str, Report]:
    op = _operator(args)
    rep = run_suite(args.suite, args.genus, args.strands, args.depth, args.seed, op, args.trials)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "suite": args.suite,
        "passed": rep.passed,
        "items": [{"label": label, "ok": ok} for label, ok in rep.items],
        "metadata": {"operator": op.name, "convention_id": op.convention_id, "seed": args.seed},
    }
    lines = [rep.summary()] + [f"  FAIL {label}" for label in rep.failures]
    return record, "\n".join(lines), rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hvassiliev", description="Finite-type invariants of links in handlebodies.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=True):
        sp.add_argument("--genus", "-g", type=int, default=0)
        sp.add_argument("--strands", "-n", type=int, default=1)
        if word:
            sp.add_argument("--word", "-w", default="", help='e.g. "s1 s1^-1 t1 a2" or "s1^3"')
            sp.add_argument("--i", type=int, default=0, help="collapse level, 0..genus")
            sp.add_argument("--order", "-D", type=int, default=DEFAULT_ORDER, help="truncation order in eps")
        sp.add_argument("--operator", help="operator definition file (JSON)")
        sp.add_argument("--json", action="store_true", help="print a machine-readable record")

    inv = sub.add_parser("invariant", help="link invariant L_{i,d} of a braid closure")
    common(inv)
    inv.add_argument("--d", type=int, default=0, help="degree")
    inv.set_defaults(func=cmd_invariant)

    tr = sub.add_parser("trace", help="series T_i of a braid or singular braid word")
    common(tr)
    tr.set_defaults(func=cmd_trace)

    ck = sub.add_parser("check", help="run a verification suite")
    ck.add_argument("--suite", required=True, choices=SUITES)
    common(ck, word=False)
    ck.set_defaults(genus=None, strands=None)
    ck.add_argument("--depth", type=int, default=8, help="rewrite search depth")
    ck.add_argument("--seed", type=int, default=0)
    ck.add_argument("--trials", type=int, default=100)
    ck.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command != "check" and args.order < 0:
            raise WordError("--order must be nonnegative")
        if args.command == "invariant" and not 0 <= args.d <= args.order:
            raise WordError(f"--d must lie in 0..{args.order}")
        out = args.func(args)
    except ResourceError as exc:
        print(f"hvassiliev: resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (WordError, OperatorError) as exc:
        print(f"hvassiliev: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HVError as exc:
        print(f"hvassiliev: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record, text = out[0], out[1]
    print(json.dumps(record, indent=2) if args.json else text)
    if args.command == "check" and not out[2].passed:
        return EXIT_SUITE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
