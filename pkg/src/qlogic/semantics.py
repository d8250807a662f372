"""
Seven valuation engines over one formula language.

Assignment-driven engines take a mapping from atom names to truth values:
``classical``, ``quantum-nd``, ``partial`` and ``l3``.  State-driven engines
take a ket of the scenario: ``mvp``, ``amr`` and ``amr-prob``.  Every engine
returns a :data:`~qlogic.truth.TruthValue`.
"""

from __future__ import annotations

from typing import Mapping, Optional

import numpy as np

from qlogic import linalg
from qlogic.errors import EvaluationError
from qlogic.formula import And, Atom, Formula, Implies, Not, Or
from qlogic.linalg import DEFAULT_TOL
from qlogic.statements import Exists, ScenarioSpec, encode
from qlogic.truth import (FALSE, NULL, TRUE, UNDEFINED, Bit, Scalar, TruthValue,
                          coerce, from_real)

SEMANTICS = ("classical", "quantum-nd", "partial", "l3", "mvp", "amr", "amr-prob")
ASSIGNMENT_DRIVEN = frozenset({"classical", "quantum-nd", "partial", "l3"})
STATE_DRIVEN = frozenset({"mvp", "amr", "amr-prob"})


def _lookup(a: Mapping, name: str) -> TruthValue:
    try:
        return coerce(a[name])
    except KeyError:
        raise EvaluationError(f"unbound atom {name!r}") from None


def _bit(a: Mapping, name: str) -> int:
    v = _lookup(a, name)
    if not isinstance(v, Bit):
        raise EvaluationError(f"atom {name!r} must be 0 or 1, got {v!r}")
    return v.value


def _desugar(f: Implies) -> Or:
    return Or(Not(f.left), f.right)


# -- classical ---------------------------------------------------------------

def _classical(f: Formula, a: Mapping) -> int:
    if isinstance(f, Atom):
        return _bit(a, f.name)
    if isinstance(f, Not):
        return 1 - _classical(f.child, a)
    if isinstance(f, Implies):
        return max(1 - _classical(f.left, a), _classical(f.right, a))
    x, y = _classical(f.left, a), _classical(f.right, a)
    return min(x, y) if isinstance(f, And) else max(x, y)


def eval_classical(f: Formula, a: Mapping) -> Bit:
    return Bit(_classical(f, a))


# -- commutator-gated engines ------------------------------------------------
#
# Each recursion returns (value, observable).  The observable of a compound
# is built from its operands: NOT -> I - P, AND -> PQ, OR -> P + Q - PQ.

def _meet(p, q):
    return p @ q


def _join(p, q):
    return p + q - p @ q


def _quantum_nd(f: Formula, spec: ScenarioSpec, a: Mapping, tol: float):
    if isinstance(f, Atom):
        return _bit(a, f.name), spec.projector(f.name).matrix
    if isinstance(f, Not):
        v, p = _quantum_nd(f.child, spec, a, tol)
        return 1 - v, np.eye(spec.dim) - p
    if isinstance(f, Implies):
        return _quantum_nd(_desugar(f), spec, a, tol)
    (x, p), (y, q) = _quantum_nd(f.left, spec, a, tol), _quantum_nd(f.right, spec, a, tol)
    compatible = linalg.commute(p, q, tol)
    if isinstance(f, And):
        if compatible:
            return min(x, y), _meet(p, q)
        return 0, np.zeros((spec.dim, spec.dim), dtype=complex)
    if compatible:
        return max(x, y), _join(p, q)
    return 1, np.eye(spec.dim, dtype=complex)


def eval_quantum_nd(f: Formula, spec: ScenarioSpec, a: Mapping, tol: float = DEFAULT_TOL) -> Bit:
    """
    Boolean connectives gated by commutators.

    A conjunction of incompatible operands is a contradiction (value 0, zero
    operator); a disjunction of incompatible operands is a tautology (value 1,
    identity).  Those operators then take part in enclosing connectives.
    """
    return Bit(_quantum_nd(f, spec, a, tol)[0])


def _partial(f: Formula, spec: ScenarioSpec, a: Mapping, tol: float):
    """Values are 0, 1 or None (undefined); observables are None when incompatible."""
    if isinstance(f, Atom):
        v = _lookup(a, f.name)
        if v is UNDEFINED:
            value = None
        elif isinstance(v, Bit):
            value = v.value
        else:
            raise EvaluationError(f"atom {f.name!r} must be 0, 1 or undefined, got {v!r}")
        return value, spec.projector(f.name).matrix
    if isinstance(f, Implies):
        return _partial(_desugar(f), spec, a, tol)
    if isinstance(f, Not):
        v, p = _partial(f.child, spec, a, tol)
        if p is None:
            return None, None
        obs = np.eye(spec.dim) - p
        value = None if v is None else 1 - v
    else:
        (x, p), (y, q) = _partial(f.left, spec, a, tol), _partial(f.right, spec, a, tol)
        if p is None or q is None or not linalg.commute(p, q, tol):
            return None, None
        if isinstance(f, And):
            obs = _meet(p, q)
            value = None if x is None or y is None else min(x, y)
        else:
            obs = _join(p, q)
            value = None if x is None or y is None else max(x, y)
    if value is None:
        # a contradiction or tautology is decided by its observable alone
        if linalg.is_zero(obs, tol):
            value = 0
        elif linalg.is_zero(obs - np.eye(spec.dim), tol):
            value = 1
    return value, obs


def eval_partial(f: Formula, spec: ScenarioSpec, a: Mapping, tol: float = DEFAULT_TOL) -> TruthValue:
    """
    Partial valuation: incompatible operands leave the compound undefined.

    Atoms may be assigned ``UNDEFINED``.  A compound whose operands are
    undefined still gets 0 when its observable is the zero operator and 1
    when it is the identity.
    """
    v, _ = _partial(f, spec, a, tol)
    return UNDEFINED if v is None else Bit(v)


# -- Lukasiewicz -------------------------------------------------------------

_L3_DOMAIN = (0.0, 0.5, 1.0)


def _l3(f: Formula, a: Mapping) -> float:
    if isinstance(f, Atom):
        v = _lookup(a, f.name)
        if not isinstance(v, (Bit, Scalar)) or float(v) not in _L3_DOMAIN:
            raise EvaluationError(f"atom {f.name!r} must be 0, 1/2 or 1, got {v!r}")
        return float(v)
    if isinstance(f, Not):
        return 1.0 - _l3(f.child, a)
    x, y = _l3(f.left, a), _l3(f.right, a)
    if isinstance(f, And):
        return max(x + y - 1.0, 0.0)
    if isinstance(f, Or):
        return min(x + y, 1.0)
    return min(1.0 - x + y, 1.0)


def eval_l3(f: Formula, a: Mapping) -> TruthValue:
    # sums of 0, 0.5 and 1 are exact in binary floating point
    return coerce(_l3(f, a))


# -- state-driven engines ----------------------------------------------------

def _state(spec: ScenarioSpec, state) -> np.ndarray:
    if isinstance(state, str):
        return spec.state(state)
    v = linalg.as_ket(state, spec.dim)
    if not linalg.is_normalized(v):
        raise EvaluationError("state vector is not normalized")
    return v


def _mvp(f: Formula, spec: ScenarioSpec, psi: np.ndarray, tol: float):
    """Values are floats or None (undefined), paired with observables."""
    if isinstance(f, Atom):
        p = spec.projector(f.name)
        return float(from_real(linalg.expectation(p, psi), tol)), p.matrix
    if isinstance(f, Implies):
        return _mvp(_desugar(f), spec, psi, tol)
    if isinstance(f, Not):
        v, p = _mvp(f.child, spec, psi, tol)
        if v is None:
            return None, None
        return 1.0 - v, np.eye(spec.dim) - p
    (x, p), (y, q) = _mvp(f.left, spec, psi, tol), _mvp(f.right, spec, psi, tol)
    if x is None or y is None or not linalg.commute(p, q, tol):
        return None, None
    if isinstance(f, And):
        return max(x + y - 1.0, 0.0), _meet(p, q)
    return min(x + y, 1.0), _join(p, q)


def eval_mvp(f: Formula, spec: ScenarioSpec, state, tol: float = DEFAULT_TOL) -> TruthValue:
    """
    Multivalued predicate semantics.

    An atom's value is the expectation <psi|P|psi> of its projector; compounds
    combine with the Lukasiewicz functions when their observables commute and
    are undefined otherwise.
    """
    v, _ = _mvp(f, spec, _state(spec, state), tol)
    return UNDEFINED if v is None else from_real(v, tol)


def eval_amr(f: Formula, spec: ScenarioSpec, state, tol: float = DEFAULT_TOL) -> TruthValue:
    """1 if the state lies in the synonym subspace, 0 if in the antonym, NULL otherwise."""
    psi = _state(spec, state)
    enc = encode(f, spec, tol)
    if not isinstance(enc, Exists):
        return NULL
    if linalg.contains(enc.synonym, psi, tol):
        return TRUE
    if linalg.contains(enc.antonym, psi, tol):
        return FALSE
    return NULL


def eval_amr_prob(f: Formula, spec: ScenarioSpec, state, tol: float = DEFAULT_TOL) -> TruthValue:
    """Like :func:`eval_amr`, but a state outside both subspaces gets its Born weight on the synonym."""
    psi = _state(spec, state)
    enc = encode(f, spec, tol)
    if not isinstance(enc, Exists):
        return NULL
    if linalg.contains(enc.synonym, psi, tol):
        return TRUE
    if linalg.contains(enc.antonym, psi, tol):
        return FALSE
    return from_real(linalg.expectation(enc.projector, psi), tol)


def evaluate(semantics: str, f: Formula, spec: Optional[ScenarioSpec] = None,
             given=None, tol: float = DEFAULT_TOL) -> TruthValue:
    """
    Dispatch on the semantics name.

    ``given`` is an assignment mapping for assignment-driven semantics and a
    state (name or ket) for state-driven ones.
    """
    if semantics not in SEMANTICS:
        raise EvaluationError(f"unknown semantics {semantics!r}; choose from {', '.join(SEMANTICS)}")
    if semantics in ASSIGNMENT_DRIVEN:
        if not isinstance(given, Mapping):
            raise EvaluationError(f"{semantics} semantics needs an atom assignment")
        if semantics == "classical":
            return eval_classical(f, given)
        if semantics == "l3":
            return eval_l3(f, given)
        if spec is None:
            raise EvaluationError(f"{semantics} semantics needs a scenario")
        engine = eval_quantum_nd if semantics == "quantum-nd" else eval_partial
        return engine(f, spec, given, tol)
    if given is None or isinstance(given, Mapping):
        raise EvaluationError(f"{semantics} semantics needs a state")
    if spec is None:
        raise EvaluationError(f"{semantics} semantics needs a scenario")
    engine = {"mvp": eval_mvp, "amr": eval_amr, "amr-prob": eval_amr_prob}[semantics]
    return engine(f, spec, given, tol)


def input_kind(semantics: str) -> str:
    return "assignment" if semantics in ASSIGNMENT_DRIVEN else "state"

