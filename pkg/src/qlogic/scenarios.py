"""
Worked experiments on top of the semantics engines.

The ideal coin lives in a 2-dimensional space: ``H`` and ``T`` project onto
the two basis rays and ``R`` onto their equal superposition, which is also
the ``superposed`` state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from qlogic import linalg
from qlogic.errors import EvaluationError
from qlogic.formula import Formula, parse
from qlogic.linalg import DEFAULT_TOL
from qlogic.semantics import SEMANTICS, eval_amr, evaluate, input_kind
from qlogic.statements import ScenarioSpec
from qlogic.truth import (HALF, NULL, UNDEFINED, Bit, Scalar, TruthValue, coerce,
                          format_value)

_S = 1 / math.sqrt(2)


def coin_fixture() -> ScenarioSpec:
    heads, tails, rest = np.array([1, 0]), np.array([0, 1]), np.array([_S, _S])
    return ScenarioSpec(
        dim=2,
        atoms={
            "H": linalg.projector_onto([heads]),
            "T": linalg.projector_onto([tails]),
            "R": linalg.projector_onto([rest]),
        },
        states={"heads_up": heads, "tails_up": tails, "superposed": rest},
        name="coin",
    )


Input = Union[str, Mapping[str, object], np.ndarray]


@dataclass(frozen=True)
class TimelineSpec:
    """
    Valuation schedule: grid times before ``t_o`` use ``before``, the rest ``after``.

    ``before``/``after`` are state names (or kets) for state-driven semantics
    and atom assignments for assignment-driven ones.
    """

    t_r: float
    t_o: float
    grid: Sequence[float]
    semantics: str
    before: Input
    after: Input

    def __post_init__(self):
        if not self.t_r < self.t_o:
            raise EvaluationError(f"rest time {self.t_r} must precede observation time {self.t_o}")
        grid = tuple(float(t) for t in self.grid)
        if not grid:
            raise EvaluationError("timeline grid is empty")
        if any(b < a for a, b in zip(grid, grid[1:])):
            raise EvaluationError("timeline grid must be sorted ascending")
        if grid[0] < self.t_r:
            raise EvaluationError("timeline grid starts before the rest time")
        if self.semantics not in SEMANTICS:
            raise EvaluationError(f"unknown semantics {self.semantics!r}")
        object.__setattr__(self, "grid", grid)


def _check_kind(semantics: str, given) -> None:
    want = input_kind(semantics)
    is_assignment = isinstance(given, Mapping)
    if (want == "assignment") != is_assignment:
        raise EvaluationError(f"{semantics} semantics needs {'an' if want == 'assignment' else 'a'} {want}")


def run_timeline(ts: TimelineSpec, f: Formula, spec: Optional[ScenarioSpec] = None,
                 tol: float = DEFAULT_TOL) -> list[tuple[float, TruthValue]]:
    _check_kind(ts.semantics, ts.before)
    _check_kind(ts.semantics, ts.after)
    before = evaluate(ts.semantics, f, spec, ts.before, tol)
    after = evaluate(ts.semantics, f, spec, ts.after, tol)
    return [(t, before if t < ts.t_o else after) for t in ts.grid]


def changes(series: Sequence[tuple[float, TruthValue]]) -> list[int]:
    """Indices ``i`` where the value differs from the value at ``i - 1``."""
    return [i for i in range(1, len(series)) if series[i][1] != series[i - 1][1]]


def grid_points(start: float, stop: float, step: float) -> list[float]:
    """Inclusive arithmetic grid ``start, start+step, ..., <= stop``."""
    if step <= 0:
        raise ValueError("grid step must be positive")
    if stop < start:
        raise ValueError("grid stop precedes start")
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(n)]


@dataclass(frozen=True)
class CensusResult:
    values: tuple[TruthValue, ...]
    count: Optional[int]

    @property
    def sum_defined(self) -> bool:
        return self.count is not None

    def describe(self) -> str:
        return f"count={self.count}" if self.sum_defined else "sum undefined"


def outcome_census(formulas: Sequence[Formula], given, semantics: str,
                   spec: Optional[ScenarioSpec] = None, tol: float = DEFAULT_TOL) -> CensusResult:
    """
    Evaluate each formula and count the true ones.

    The count only exists when every value is a bit; a NULL or undefined
    value has no cardinality, so the sum is undefined.
    """
    if not formulas:
        raise EvaluationError("census needs at least one formula")
    _check_kind(semantics, given)
    values = tuple(evaluate(semantics, f, spec, given, tol) for f in formulas)
    if all(isinstance(v, Bit) for v in values):
        return CensusResult(values, sum(v.value for v in values))
    return CensusResult(values, None)


def definiteness_check(spec: ScenarioSpec, state, tol: float = DEFAULT_TOL):
    """AMR value of every registered atom in ``state``, and whether all are bits."""
    values = {name: eval_amr(parse(name), spec, state, tol) for name in spec.atoms}
    return values, all(v is not NULL for v in values.values())


# -- one-shot reproduction of the coin valuations -------------------------------

@dataclass(frozen=True)
class Check:
    line: str
    ok: bool


def _match(label: str, got: TruthValue, want, tol: float = 1e-12) -> Check:
    want = coerce(want)
    ok = got == want or (isinstance(got, Scalar) and isinstance(want, Scalar)
                         and abs(got.value - want.value) < tol)
    return Check(f"{label}: {format_value(got)} {'PASS' if ok else 'FAIL'}", ok)


def coin_report(tol: float = DEFAULT_TOL) -> list[Check]:
    """Every worked coin valuation, each compared with its expected constant."""
    coin = coin_fixture()
    f = parse
    out: list[Check] = []

    # classical timeline under negative construal
    ts = TimelineSpec(0.0, 1.0, grid_points(0.0, 2.0, 0.25), "classical",
                      {"H": 1, "T": 1}, {"H": 1, "T": 0})
    series = run_timeline(ts, f("H & T"), coin, tol)
    idx = changes(series)
    jump_ok = (len(idx) == 1 and series[idx[0]][0] >= ts.t_o and series[idx[0] - 1][0] < ts.t_o
               and series[0][1] == Bit(1) and series[-1][1] == Bit(0))
    where = f"t={series[idx[0]][0]:g}" if idx else "none"
    out.append(Check(f"classical jump of H & T: 1 -> 0 at {where} {'PASS' if jump_ok else 'FAIL'}", jump_ok))

    # distributivity in the non-distributive logic, v(H) = 0
    sides = [(evaluate("quantum-nd", f("H | (R & !R)"), coin, {"H": 0, "R": r}, tol),
              evaluate("quantum-nd", f("(H | R) & (H | !R)"), coin, {"H": 0, "R": r}, tol))
             for r in (0, 1)]
    ok = all(lhs == Bit(0) and rhs == Bit(1) for lhs, rhs in sides)
    lhs, rhs = sides[0]
    law = "HOLDS(distributive law)" if lhs == rhs else "FAIL(distributive law)"
    out.append(Check(f"distributivity: LHS={format_value(lhs)} RHS={format_value(rhs)} "
                     f"{law} {'PASS(expected)' if ok else 'FAIL(expected)'}", ok))

    for text in ("!R | H", "!R | T"):
        out.append(_match(f"quantum-nd {text} (R=1, H=0, T=1)",
                          evaluate("quantum-nd", f(text), coin, {"R": 1, "H": 0, "T": 1}, tol), 1))
        out.append(_match(f"partial {text}",
                          evaluate("partial", f(text), coin, {"R": 0, "H": UNDEFINED, "T": UNDEFINED}, tol),
                          UNDEFINED))
    out.append(_match("partial H & T with H, T undefined",
                      evaluate("partial", f("H & T"), coin, {"H": UNDEFINED, "T": UNDEFINED}, tol), 0))

    half = {"H": HALF, "T": HALF}
    out.append(_match("l3 H & T (H=T=1/2)", evaluate("l3", f("H & T"), coin, half), 0))
    out.append(_match("l3 H | T (H=T=1/2)", evaluate("l3", f("H | T"), coin, half), 1))

    for state, text, want in [("superposed", "H", 0.5), ("superposed", "T", 0.5),
                              ("superposed", "H & T", 0), ("heads_up", "H", 1),
                              ("heads_up", "T", 0)]:
        out.append(_match(f"mvp {text} [{state}]", evaluate("mvp", f(text), coin, state, tol), want))
    for state in coin.states:
        out.append(_match(f"mvp R & H [{state}]", evaluate("mvp", f("R & H"), coin, state, tol), UNDEFINED))

    for state in coin.states:
        out.append(_match(f"AMR H & T [{state}]", evaluate("amr", f("H & T"), coin, state, tol), 0))
        out.append(_match(f"AMR H | T [{state}]", evaluate("amr", f("H | T"), coin, state, tol), 1))
    out.append(_match("AMR H [superposed]", evaluate("amr", f("H"), coin, "superposed", tol), NULL))
    for text in ("R & H", "R | H", "R -> H", "R -> T"):
        for state in coin.states:
            out.append(_match(f"AMR {text} [{state}]", evaluate("amr", f(text), coin, state, tol), NULL))
    for state, want in (("heads_up", 0), ("tails_up", 1), ("superposed", NULL)):
        out.append(_match(f"AMR H -> T [{state}]", evaluate("amr", f("H -> T"), coin, state, tol), want))

    ts = TimelineSpec(0.0, 1.0, grid_points(0.0, 2.0, 0.25), "amr", "superposed", "heads_up")
    for text in ("H & T", "H | T"):
        n = len(changes(run_timeline(ts, f(text), coin, tol)))
        out.append(Check(f"AMR timeline {text}: {n} changes {'PASS' if n == 0 else 'FAIL'}", n == 0))

    out.append(_match("Born check", evaluate("amr-prob", f("H"), coin, "superposed", tol), 0.5))
    out.append(_match("amr-prob H | T [superposed]",
                      evaluate("amr-prob", f("H | T"), coin, "superposed", tol), 1))
    out.append(_match("amr-prob H & T [superposed]",
                      evaluate("amr-prob", f("H & T"), coin, "superposed", tol), 0))
    out.append(_match("amr-prob R & H [superposed]",
                      evaluate("amr-prob", f("R & H"), coin, "superposed", tol), NULL))

    for label, given, sem, want in [("amr superposed", "superposed", "amr", None),
                                    ("amr heads_up", "heads_up", "amr", 1),
                                    ("classical H=T=1", {"H": 1, "T": 1}, "classical", 2)]:
        res = outcome_census([f("H"), f("T")], given, sem, coin, tol)
        ok = res.count == want
        out.append(Check(f"census [H, T] {label}: {res.describe()} {'PASS' if ok else 'FAIL'}", ok))

    values, bivalent = definiteness_check(coin, "superposed", tol)
    ok = values == {"H": NULL, "T": NULL, "R": Bit(1)} and not bivalent
    shown = ", ".join(f"{k}={format_value(v)}" for k, v in values.items())
    out.append(Check(f"definiteness [superposed]: {shown} all_bivalent={bivalent} "
                     f"{'PASS' if ok else 'FAIL'}", ok))
    return out

