"""
Command-line front end.

    qlogic eval     --semantics amr-prob --state superposed --formula "H"
    qlogic compare  --state superposed --assign H=0.5,T=0.5 --formula "H & T" --formula "H | T"
    qlogic timeline --semantics classical --before H=1,T=1 --after H=1,T=0 --formula "H & T"
    qlogic census   --semantics amr --state heads_up --formula H --formula T
    qlogic demo-coin

Without ``--scenario`` the built-in coin is used.  Exit status: 0 success,
1 evaluation or configuration error, 2 syntax error (formula, scenario file,
assignment or grid text).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from qlogic.errors import (DimensionError, EvaluationError, InvariantError, ParseError,
                           ScenarioError, ScenarioSyntaxError)
from qlogic.formula import parse, render
from qlogic.linalg import DEFAULT_TOL
from qlogic.scenarios import (TimelineSpec, changes, coin_fixture, coin_report,
                              grid_points, outcome_census, run_timeline)
from qlogic.semantics import SEMANTICS, evaluate, input_kind
from qlogic.statements import load_scenario
from qlogic.truth import format_value, parse_assignment, to_json

EXIT_OK, EXIT_EVAL, EXIT_SYNTAX = 0, 1, 2


class _SyntaxFailure(Exception):
    pass


def _scenario(args):
    if args.scenario is None:
        return coin_fixture()
    try:
        return load_scenario(args.scenario, args.tol)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario: {exc}") from None


def _assignment(text: str):
    try:
        return parse_assignment(text)
    except ValueError as exc:
        raise _SyntaxFailure(f"bad assignment {text!r}: {exc}") from None


def _formulas(args) -> list:
    return [parse(text) for text in (args.formula or [])]


def _input_for(semantics: str, state, assign):
    """Pick the input a semantics consumes; raises if it was not supplied."""
    if input_kind(semantics) == "assignment":
        if assign is None:
            raise EvaluationError(f"{semantics} semantics needs --assign")
        return _assignment(assign)
    if state is None:
        raise EvaluationError(f"{semantics} semantics needs --state")
    return state


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_eval(args) -> str:
    formulas = _formulas(args)
    if len(formulas) != 1:
        raise EvaluationError("eval takes exactly one --formula")
    f = formulas[0]
    spec = _scenario(args)
    value = evaluate(args.semantics, f, spec, _input_for(args.semantics, args.state, args.assign), args.tol)
    if args.format == "json":
        return _json({"formula": render(f), "semantics": args.semantics, "value": to_json(value)})
    if args.format == "csv":
        return _csv([("formula", "semantics", "value"), (render(f), args.semantics, format_value(value))])
    return format_value(value) + "\n"


def cmd_compare(args) -> str:
    formulas = _formulas(args)
    if not formulas:
        raise EvaluationError("compare needs at least one --formula")
    spec = _scenario(args)
    rows = []
    for f in formulas:
        cells = []
        for sem in SEMANTICS:
            # a semantics whose input is missing or outside its domain shows n/a
            try:
                cells.append(evaluate(sem, f, spec, _input_for(sem, args.state, args.assign), args.tol))
            except EvaluationError as exc:
                cells.append(exc)
        rows.append((render(f), cells))

    def text(c):
        return "n/a" if isinstance(c, Exception) else format_value(c)

    if args.format == "json":
        return _json({
            "semantics": list(SEMANTICS),
            "rows": [{"formula": name,
                      "values": {sem: ({"tag": "n/a", "message": str(c)} if isinstance(c, Exception)
                                       else to_json(c)) for sem, c in zip(SEMANTICS, cells)}}
                     for name, cells in rows],
        })
    table = [("formula", *SEMANTICS)] + [(name, *map(text, cells)) for name, cells in rows]
    if args.format == "csv":
        return _csv(table)
    widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in table)


def _grid(text: str) -> list[float]:
    try:
        start, stop, step = (float(x) for x in text.split(":"))
        return grid_points(start, stop, step)
    except ValueError as exc:
        raise _SyntaxFailure(f"bad --grid {text!r} (want start:stop:step): {exc}") from None


def cmd_timeline(args) -> str:
    formulas = _formulas(args)
    if len(formulas) != 1:
        raise EvaluationError("timeline takes exactly one --formula")
    f = formulas[0]
    spec = _scenario(args)
    if args.grid:
        grid = _grid(args.grid)
    else:
        span = 2 * max(args.t_o - args.t_r, 0.0)
        grid = [args.t_r + span * i / 100 for i in range(101)]
    kind = input_kind(args.semantics)
    if args.before is None or args.after is None:
        raise EvaluationError("timeline needs --before and --after")
    before, after = ((_assignment(args.before), _assignment(args.after)) if kind == "assignment"
                     else (args.before, args.after))
    ts = TimelineSpec(args.t_r, args.t_o, grid, args.semantics, before, after)
    series = run_timeline(ts, f, spec, args.tol)
    jumps = set(changes(series))
    if args.format == "json":
        return _json({"formula": render(f), "semantics": args.semantics, "t_r": ts.t_r, "t_o": ts.t_o,
                      "series": [{"t": t, "value": to_json(v)} for t, v in series],
                      "changes": [series[i][0] for i in sorted(jumps)]})
    if args.format == "csv":
        return _csv([("t", "value")] + [(format(t, ".12g"), format_value(v)) for t, v in series])
    lines = [f"# {render(f)} under {args.semantics}, t_r={ts.t_r:g}, t_o={ts.t_o:g}"]
    for i, (t, v) in enumerate(series):
        lines.append(f"{t:.12g}\t{format_value(v)}" + ("\t<-- jump" if i in jumps else ""))
    return "\n".join(lines) + "\n"


def cmd_census(args) -> str:
    formulas = _formulas(args)
    if not formulas:
        raise EvaluationError("census needs at least one --formula")
    spec = _scenario(args)
    given = _input_for(args.semantics, args.state, args.assign)
    res = outcome_census(formulas, given, args.semantics, spec, args.tol)
    names = [render(f) for f in formulas]
    if args.format == "json":
        total = {"tag": "count", "n": res.count} if res.sum_defined else {"tag": "sum_undefined"}
        return _json({"semantics": args.semantics,
                      "values": [{"formula": n, "value": to_json(v)} for n, v in zip(names, res.values)],
                      "total": total})
    if args.format == "csv":
        return _csv([("formula", "value")] + [(n, format_value(v)) for n, v in zip(names, res.values)]
                    + [("total", res.describe())])
    return "".join(f"{n}: {format_value(v)}\n" for n, v in zip(names, res.values)) + res.describe() + "\n"


def cmd_demo_coin(args) -> tuple[str, int]:
    checks = coin_report(args.tol)
    out = "".join(c.line + "\n" for c in checks)
    failed = [c for c in checks if not c.ok]
    if failed:
        print(f"mismatch: {failed[0].line}", file=sys.stderr)
        return out, EXIT_EVAL
    return out + f"all {len(checks)} checks PASS\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlogic", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", metavar="PATH", help="scenario JSON file (default: built-in coin)")
    common.add_argument("--formula", action="append", metavar="TEXT",
                        help="formula; repeatable for compare and census")
    common.add_argument("--state", metavar="NAME", help="state name for state-driven semantics")
    common.add_argument("--assign", metavar="LIST", help="assignment, e.g. H=1,T=0.5,R=u")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)

    def semantics_flag(p, required=True):
        p.add_argument("--semantics", choices=SEMANTICS, required=required, metavar="ID",
                       help="one of " + ", ".join(SEMANTICS))

    p = sub.add_parser("eval", parents=[common], help="evaluate one formula")
    semantics_flag(p)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("compare", parents=[common], help="formulas x all semantics")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("timeline", parents=[common], help="valuation before and after observation")
    semantics_flag(p)
    p.add_argument("--t-r", type=float, default=0.0, dest="t_r")
    p.add_argument("--t-o", type=float, default=1.0, dest="t_o")
    p.add_argument("--grid", metavar="START:STOP:STEP", help="inclusive sample grid")
    p.add_argument("--before", metavar="INPUT", help="state name or assignment before t_o")
    p.add_argument("--after", metavar="INPUT", help="state name or assignment from t_o on")
    p.set_defaults(handler=cmd_timeline)

    p = sub.add_parser("census", parents=[common], help="count true outcomes")
    semantics_flag(p)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("demo-coin", aliases=["demo"], parents=[common], help="reproduce the coin valuations")
    p.set_defaults(handler=cmd_demo_coin)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not args.tol > 0:
        print("qlogic: error: --tol must be positive", file=sys.stderr)
        return EXIT_EVAL
    try:
        result = args.handler(args)
    except (ParseError, ScenarioSyntaxError, _SyntaxFailure) as exc:
        print(f"qlogic: syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (EvaluationError, ScenarioError, DimensionError, InvariantError) as exc:
        print(f"qlogic: error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    out, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
