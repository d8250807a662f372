"""Propositional formulas over quantum statements, evaluated under seven truth semantics."""

from qlogic.errors import (DimensionError, EvaluationError, InvariantError, ParseError,
                           QLogicError, ScenarioError, ScenarioSyntaxError)
from qlogic.formula import And, Atom, Formula, Implies, Not, Or, atoms_of, parse, render
from qlogic.linalg import DEFAULT_TOL, Projector, Subspace
from qlogic.scenarios import (CensusResult, TimelineSpec, coin_fixture, definiteness_check,
                              outcome_census, run_timeline)
from qlogic.semantics import SEMANTICS, evaluate
from qlogic.statements import (EncodingResult, Exists, Nonexistent, ScenarioSpec, encode,
                               load_scenario, pairwise_commuting, register_scenario)
from qlogic.truth import NULL, UNDEFINED, Bit, Scalar, TruthValue

__version__ = "0.1.0"
