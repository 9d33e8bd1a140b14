"""Command-line front end.

Exit codes: 0 everything holds, 1 some check fails, 2 something was
inconclusive, 3 bad usage or unparsable input.
"""

import argparse
import configparser
import json
import sys
import warnings

from .clifford import normal_form
from .exterior import contract, to_text
from .parser import ParseError, format_expression, parse_mixed, parse_wedge
from .partitions import parse_partition
from .schubert import (SigmaMinus, SigmaMinusBar, SigmaPlus, SigmaPlusBar, apply_derivation,
                       compare_series)
from .semiring import builtin_semirings, get_semiring
from .verify import ALL_CHECKS, MAIN_VARIANTS, REPORT_VERSION, CheckConfig, main_lhs, main_rhs, run_suite

USAGE_ERROR = 3

KINDS = {"sigma_plus": SigmaPlus, "sigma_minus": SigmaMinus,
         "sigma_plus_bar": SigmaPlusBar, "sigma_minus_bar": SigmaMinusBar}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--semiring", default="nat", help="nat, qplus or maxplus")
    p.add_argument("--n", type=int, default=None, help="rank bound: x^k = 0 for k >= n")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    return p


def build_parser():
    common = _common()
    p = _Parser(prog="semiwedge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("normal-form", parents=[common], help="move every x left of every d")
    s.add_argument("expr")
    s.add_argument("--strategy", choices=("leftmost", "rightmost", "random"), default="leftmost")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("wedge", parents=[common], help="canonicalize a wedge expression")
    s.add_argument("expr", nargs="+", help="several expressions are wedged left to right")

    s = sub.add_parser("contract", parents=[common], help="contract a wedge with d_j")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("expr")

    s = sub.add_parser("schubert", parents=[common], help="expand a Schubert derivation on a wedge")
    s.add_argument("expr")
    s.add_argument("--kind", choices=sorted(KINDS), default="sigma_plus")
    s.add_argument("--order", type=int, default=4)

    s = sub.add_parser("expand-main", parents=[common],
                       help="both sides of the generating-function formula and the verdict")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--lambda", dest="lam", default="0")
    s.add_argument("--zmax", type=int, default=4)
    s.add_argument("--wmax", type=int, default=4)
    s.add_argument("--variant", choices=MAIN_VARIANTS + ("derived",), default="w_pos")
    s.add_argument("--factored", action="store_true",
                   help="pull sigma_plus(z) out of the determinant instead of expanding each column")

    s = sub.add_parser("verify", help="run the theorem checks")
    s.add_argument("--semiring", default=None, help="comma list of ids or 'all'")
    s.add_argument("--rmax", type=int)
    s.add_argument("--weight", type=int)
    s.add_argument("--zmax", type=int)
    s.add_argument("--wmax", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--checks", help=f"comma list from {','.join(ALL_CHECKS)}")
    s.add_argument("--json", metavar="OUT", help="write the JSON report here ('-' for stdout)")
    s.add_argument("--config", help="file of key = value lines with the same names as the flags")
    s.add_argument("--verbose", "-v", action="store_true", help="print every report line")
    return p


def _emit(args, text, payload):
    if args.json:
        print(json.dumps({"version": REPORT_VERSION, **payload}, indent=2))
    else:
        print(text)


def cmd_normal_form(args):
    e = parse_mixed(args.expr, args.semiring, args.n)
    nf = normal_form(e, strategy=args.strategy, seed=args.seed)
    _emit(args, format_expression(nf), {"result": format_expression(nf)})
    return 0


def cmd_wedge(args):
    u = None
    for src in args.expr:
        v = parse_wedge(src, args.semiring, args.n)
        u = v if u is None else u ^ v
    _emit(args, to_text(u), {"result": u.to_json()})
    return 0


def cmd_contract(args):
    u = parse_wedge(args.expr, args.semiring, args.n)
    out = contract(args.d, u)
    _emit(args, to_text(out), {"result": out.to_json()})
    return 0


def cmd_schubert(args):
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    u = parse_wedge(args.expr, args.semiring, args.n)
    s = apply_derivation(KINDS[args.kind](), u, args.order)
    _emit(args, s.to_text(zmax=args.order), {"result": s.to_json()})
    return 0


def cmd_expand_main(args):
    if args.r < 1:
        raise UsageError("--r must be positive")
    lam = parse_partition(args.lam)
    if len(lam) > args.r:
        raise UsageError(f"partition {args.lam} has more than {args.r} parts")
    order = args.zmax + args.r + 1
    sr = get_semiring(args.semiring)
    lhs = main_lhs(sr, args.r, lam, order, args.n)
    rhs = main_rhs(sr, args.r, lam, order, args.variant, args.n, args.factored)
    c = compare_series(lhs, rhs, args.zmax, args.wmax)
    code = {"holds": 0, "fails": 1, "inconclusive": 2}[c.verdict]
    if args.json:
        _emit(args, None, {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "verdict": c.verdict,
                           "witness": None if c.witness is None else repr(c.witness)})
        return code
    print("left side:")
    print(lhs.to_text(args.zmax, args.wmax))
    print(f"right side ({args.variant}):")
    print(rhs.to_text(args.zmax, args.wmax))
    line = f"verdict: {c.verdict}"
    if c.witness:
        z, w, key, left, right = c.witness
        fmt = lhs.sr.format_pair
        line += f" at z^{z} w^{w} {'^'.join(f'x{e}' for e in key) or '1'}: {fmt(left)} vs {fmt(right)}"
    print(line)
    return code


def _read_config(path):
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_string("[verify]\n" + fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    except configparser.Error as exc:
        raise UsageError(f"bad config file: {exc}") from None
    return dict(cp["verify"])


def verify_config(args):
    opts = _read_config(args.config) if args.config else {}
    for key in ("semiring", "rmax", "weight", "zmax", "wmax", "n", "checks"):
        value = getattr(args, key)
        if value is not None:
            opts[key] = value
    unknown = set(opts) - {"semiring", "rmax", "weight", "zmax", "wmax", "n", "checks"}
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    kw = {}
    sem = str(opts.get("semiring", "nat"))
    kw["semirings"] = tuple(builtin_semirings()) if sem == "all" else sem
    for key in ("rmax", "weight", "zmax", "wmax", "n"):
        if key in opts:
            try:
                kw[key] = int(opts[key])
            except ValueError:
                raise UsageError(f"{key} must be an integer, got {opts[key]!r}") from None
    if "checks" in opts:
        kw["checks"] = tuple(c.strip() for c in str(opts["checks"]).split(",") if c.strip())
    try:
        return CheckConfig(**kw)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args):
    cfg = verify_config(args)
    result = run_suite(cfg)
    if args.json:
        text = json.dumps(result.to_json(), indent=2)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text + "\n")
    if args.json != "-":
        for rep in result.reports:
            if args.verbose or rep.verdict != "holds":
                print(rep.line())
        for sid, winners in result.header.get("prefactor_resolution", {}).items():
            print(f"prefactor resolution ({sid}): {', '.join(winners) or 'no stated variant holds'}")
        for name, counts in sorted(result.by_check().items()):
            print(f"{name:24s} holds={counts['holds']} fails={counts['fails']} "
                  f"inconclusive={counts['inconclusive']}")
        c = result.counts()
        print(f"total: {c['holds']} holds, {c['fails']} fails, {c['inconclusive']} inconclusive "
              f"({result.seconds:.1f}s)")
    return result.exit_code()


COMMANDS = {"normal-form": cmd_normal_form, "wedge": cmd_wedge, "contract": cmd_contract,
            "schubert": cmd_schubert, "expand-main": cmd_expand_main, "verify": cmd_verify}


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = COMMANDS[args.command](args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE_ERROR


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
