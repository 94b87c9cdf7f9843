"""Command line interface.

Every subcommand reads ordinals and worms in the concrete syntax of the
syntax module and prints text on stdout, or a single JSON object with
fields command, inputs and result under --json (ordinals appear in both
sum and whnf renderings there).  Exit status 0 means success, 2 a parse
or precondition error (reported on stderr), and 1 a failing selftest.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Tuple

from . import oracle, ordinal, syntax, turing
from . import worm as worms

Outcome = Tuple[Dict[str, Any], Any, str, int]  # inputs, json result, text, exit code

_ERRORS = (
    syntax.ParseError,
    ordinal.Underflow,
    ordinal.ZeroInput,
    ordinal.GammaZeroOverflow,
    worms.NotInFragment,
    worms.NotBnf,
    turing.ModalityTooLarge,
    oracle.TooLarge,
    ValueError,
)


def _ord_out(x: ordinal.Ordinal) -> Dict[str, str]:
    return {
        "sum": syntax.print_ordinal(x),
        "whnf": syntax.print_ordinal(x, "whnf"),
    }


def _report_out(report: oracle.VerifyReport) -> Dict[str, Any]:
    return {
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "checked": c.checked,
                "seconds": round(c.seconds, 3),
                "counterexample": c.counterexample,
            }
            for c in report.checks
        ],
    }


# --- handlers ---------------------------------------------------------------

def _ord_cmp(a) -> Outcome:
    x, y = syntax.parse_ordinal(a.left), syntax.parse_ordinal(a.right)
    verdict = ordinal.compare(x, y)
    return {"left": _ord_out(x), "right": _ord_out(y)}, verdict, verdict, 0


def _ord_add(a) -> Outcome:
    x, y = syntax.parse_ordinal(a.left), syntax.parse_ordinal(a.right)
    out = ordinal.add(x, y)
    return (
        {"left": _ord_out(x), "right": _ord_out(y)},
        _ord_out(out),
        syntax.print_ordinal(out),
        0,
    )


def _ord_sub(a) -> Outcome:
    x, y = syntax.parse_ordinal(a.left), syntax.parse_ordinal(a.right)
    out = ordinal.left_sub(x, y)
    return (
        {"left": _ord_out(x), "right": _ord_out(y)},
        _ord_out(out),
        syntax.print_ordinal(out),
        0,
    )


def _ord_ell(a) -> Outcome:
    x = syntax.parse_ordinal(a.ordinal)
    out = ordinal.last_exponent(x)
    return {"ordinal": _ord_out(x)}, _ord_out(out), syntax.print_ordinal(out), 0


def _ord_cnf(a) -> Outcome:
    x = syntax.parse_ordinal(a.ordinal)
    exps = ordinal.cnf_terms(x)
    text = ", ".join(syntax.print_ordinal(e) for e in exps) if exps else "(empty)"
    return {"ordinal": _ord_out(x)}, [_ord_out(e) for e in exps], text, 0


def _ord_whnf(a) -> Outcome:
    x = syntax.parse_ordinal(a.ordinal)
    return {"ordinal": _ord_out(x)}, _ord_out(x), syntax.print_ordinal(x, "whnf"), 0


def _hyperexp(a) -> Outcome:
    xi, g = syntax.parse_ordinal(a.xi), syntax.parse_ordinal(a.gamma)
    out = ordinal.hyperexp(xi, g)
    return (
        {"xi": _ord_out(xi), "gamma": _ord_out(g)},
        _ord_out(out),
        syntax.print_ordinal(out),
        0,
    )


def _hyperlog(a) -> Outcome:
    xi, g = syntax.parse_ordinal(a.xi), syntax.parse_ordinal(a.gamma)
    out = ordinal.hyperlog(xi, g)
    return (
        {"xi": _ord_out(xi), "gamma": _ord_out(g)},
        _ord_out(out),
        syntax.print_ordinal(out),
        0,
    )


def _worm_o(a) -> Outcome:
    w = syntax.parse_worm(a.worm)
    out = worms.order_type(w)
    return {"worm": syntax.print_worm(w)}, _ord_out(out), syntax.print_ordinal(out), 0


def _worm_normalize(a) -> Outcome:
    w = syntax.parse_worm(a.worm)
    out = worms.normalize(w)
    text = syntax.print_worm(out)
    return {"worm": syntax.print_worm(w)}, text, text, 0


def _worm_at_xi(op) -> Any:
    def handler(a) -> Outcome:
        xi, w = syntax.parse_ordinal(a.xi), syntax.parse_worm(a.worm)
        out = op(xi, w)
        text = syntax.print_worm(out)
        return {"xi": _ord_out(xi), "worm": syntax.print_worm(w)}, text, text, 0

    return handler


def _worm_compare(a) -> Outcome:
    xi = syntax.parse_ordinal(a.xi)
    left, right = syntax.parse_worm(a.left), syntax.parse_worm(a.right)
    verdict = worms.compare_at(xi, left, right)
    return (
        {
            "xi": _ord_out(xi),
            "left": syntax.print_worm(left),
            "right": syntax.print_worm(right),
        },
        verdict,
        verdict,
        0,
    )


def _worm_omega(a) -> Outcome:
    xi, w = syntax.parse_ordinal(a.xi), syntax.parse_worm(a.worm)
    out = worms.omega(xi, w)
    return (
        {"xi": _ord_out(xi), "worm": syntax.print_worm(w)},
        _ord_out(out),
        syntax.print_ordinal(out),
        0,
    )


def _worm_omega_seq(a) -> Outcome:
    w = syntax.parse_worm(a.worm)
    seq = worms.omega_sequence(w)
    text = "; ".join(
        f"{syntax.print_ordinal(start)}: {syntax.print_ordinal(value)}"
        for start, value in seq.entries
    )
    result = [
        {"start": _ord_out(start), "value": _ord_out(value)}
        for start, value in seq.entries
    ]
    return {"worm": syntax.print_worm(w)}, result, text, 0


def _turing_schedule(a) -> Outcome:
    w = syntax.parse_worm(a.worm)
    sched = turing.schedule(w)
    result = {
        "statement": sched.statement(),
        "entries": [
            {
                "level": e.level,
                "extent": _ord_out(e.extent),
                "remainder": syntax.print_worm(e.remainder),
            }
            for e in sched.entries
        ],
    }
    return {"worm": syntax.print_worm(w)}, result, sched.render(), 0


def _turing_conservativity(a) -> Outcome:
    w = syntax.parse_worm(a.worm)
    report = turing.conservativity(w, a.level)
    result = {
        "statement": report.statement(),
        "level": report.level,
        "extent": _ord_out(report.extent),
        "remainder": syntax.print_worm(report.remainder),
    }
    return (
        {"worm": syntax.print_worm(w), "level": a.level},
        result,
        report.render(),
        0,
    )


def _enumerate(a) -> Outcome:
    alphabet = tuple(
        syntax.parse_ordinal(part) for part in a.alphabet.split(",") if part.strip()
    )
    universe = oracle.enumerate_worms(alphabet, a.max_length)
    lines = [syntax.print_worm(w) for w in universe.worms]
    text = "\n".join(lines + [f"{len(lines)} worms"])
    return (
        {"alphabet": a.alphabet, "max_length": a.max_length},
        lines,
        text,
        0,
    )


def _selftest(a) -> Outcome:
    universe = oracle.enumerate_worms(
        (ordinal.ZERO, ordinal.ONE, ordinal.from_int(2)), 5
    )
    xis = tuple(ordinal.from_int(k) for k in range(4))
    universe_report = oracle.verify_universe(universe, xis)
    grid_report = oracle.verify_ordinal_grid(seed=a.seed)
    ok = universe_report.passed and grid_report.passed
    text = "\n".join(
        [
            "worm universe {0,1,2} up to length 5, orders 0..3:",
            universe_report.render(),
            f"ordinal law grid (seed {a.seed}):",
            grid_report.render(),
        ]
    )
    result = {
        "passed": ok,
        "universe": _report_out(universe_report),
        "ordinal_grid": _report_out(grid_report),
    }
    return {"seed": a.seed}, result, text, 0 if ok else 1


# --- parser -----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wormcalc",
        description="worm calculus: ordinals below Gamma_0, consistency "
        "orders, omega sequences and Turing progression schedules",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    parser.add_argument(
        "--seed", type=int, default=oracle.DEFAULT_SEED, help="seed for selftest grids"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ord = sub.add_parser("ord", help="ordinal arithmetic")
    ord_sub = p_ord.add_subparsers(dest="subcommand", required=True)
    p = ord_sub.add_parser("cmp", help="compare two ordinals")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_ord_cmp)
    p = ord_sub.add_parser("add", help="ordinal sum")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_ord_add)
    p = ord_sub.add_parser("sub", help="left subtraction: the C with LEFT + C = RIGHT")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_ord_sub)
    p = ord_sub.add_parser("ell", help="last Cantor normal form exponent")
    p.add_argument("ordinal")
    p.set_defaults(run=_ord_ell)
    p = ord_sub.add_parser("cnf", help="all Cantor normal form exponents")
    p.add_argument("ordinal")
    p.set_defaults(run=_ord_cnf)
    p = ord_sub.add_parser("whnf", help="weak hyperexponential normal form")
    p.add_argument("ordinal")
    p.set_defaults(run=_ord_whnf)

    p = sub.add_parser("hyperexp", help="hyperexponential e^XI(GAMMA)")
    p.add_argument("xi")
    p.add_argument("gamma")
    p.set_defaults(run=_hyperexp)
    p = sub.add_parser("hyperlog", help="hyperlogarithm l^XI(GAMMA)")
    p.add_argument("xi")
    p.add_argument("gamma")
    p.set_defaults(run=_hyperlog)

    p_worm = sub.add_parser("worm", help="worm calculus")
    worm_sub = p_worm.add_subparsers(dest="subcommand", required=True)
    p = worm_sub.add_parser("o", help="order type of the worm")
    p.add_argument("worm")
    p.set_defaults(run=_worm_o)
    p = worm_sub.add_parser("normalize", help="Beklemishev normal form")
    p.add_argument("worm")
    p.set_defaults(run=_worm_normalize)
    for name, op, blurb in (
        ("head", worms.head, "largest initial segment with modalities >= XI"),
        ("rem", worms.remainder, "what the XI-head leaves"),
        ("up", worms.promote, "add XI to every modality"),
        ("down", worms.demote, "left-subtract XI from every modality"),
    ):
        p = worm_sub.add_parser(name, help=blurb)
        p.add_argument("xi")
        p.add_argument("worm")
        p.set_defaults(run=_worm_at_xi(op))
    p = worm_sub.add_parser("compare", help="relate two worms in <_XI")
    p.add_argument("xi")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=_worm_compare)
    p = worm_sub.add_parser("omega", help="omega coordinate at XI")
    p.add_argument("xi")
    p.add_argument("worm")
    p.set_defaults(run=_worm_omega)
    p = worm_sub.add_parser("omega-seq", help="all change points of the omega sequence")
    p.add_argument("worm")
    p.set_defaults(run=_worm_omega_seq)

    p_turing = sub.add_parser("turing", help="Turing progression schedules")
    turing_sub = p_turing.add_subparsers(dest="subcommand", required=True)
    p = turing_sub.add_parser("schedule", help="per-level progression extents")
    p.add_argument("worm")
    p.set_defaults(run=_turing_schedule)
    p = turing_sub.add_parser("conservativity", help="level-N conservation statement")
    p.add_argument("worm")
    p.add_argument("level", type=int)
    p.set_defaults(run=_turing_conservativity)

    p = sub.add_parser("enumerate", help="list all worms over a small alphabet")
    p.add_argument("--alphabet", default="0,1,2", help="comma-separated modalities")
    p.add_argument("--max-length", type=int, default=5)
    p.set_defaults(run=_enumerate)

    p = sub.add_parser("selftest", help="run the exhaustive and randomized checks")
    p.set_defaults(run=_selftest)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    command = args.command
    if getattr(args, "subcommand", None):
        command += f" {args.subcommand}"
    try:
        inputs, result, text, code = args.run(args)
    except _ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"command": command, "inputs": inputs, "result": result}))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
