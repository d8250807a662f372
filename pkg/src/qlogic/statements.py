"""
Scenario registry and the subspace encoding of formulas.

A scenario binds atom names to projectors and state names to normalized kets
in one Hilbert space.  :func:`encode` maps a formula to its synonym subspace
(states that prove it true) and antonym subspace (states that prove it false),
or reports that no such pair exists because two of its atoms do not commute.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Union

import numpy as np

from qlogic import linalg
from qlogic.errors import (DimensionError, EvaluationError, InvariantError,
                           ScenarioError, ScenarioSyntaxError)
from qlogic.formula import And, Atom, Formula, Implies, Not, Or, atoms_of
from qlogic.linalg import DEFAULT_TOL, Projector, Subspace

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class ScenarioSpec:
    dim: int
    atoms: Mapping[str, Projector]
    states: Mapping[str, np.ndarray]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ScenarioError("dimension must be positive")
        for label, table in (("atom", self.atoms), ("state", self.states)):
            for key in table:
                if not _IDENT.match(key):
                    raise ScenarioError(f"invalid {label} name {key!r}")
        for key, p in self.atoms.items():
            if p.dim != self.dim:
                raise ScenarioError(f"atom {key!r} has dimension {p.dim}, scenario has {self.dim}")
        states = {}
        for key, v in self.states.items():
            try:
                v = linalg.as_ket(v, self.dim)
            except DimensionError as exc:
                raise ScenarioError(f"state {key!r}: {exc}") from None
            if not linalg.is_normalized(v):
                raise ScenarioError(f"state {key!r} is not normalized (norm {np.linalg.norm(v):.6g})")
            v = v.copy()
            v.setflags(write=False)
            states[key] = v
        object.__setattr__(self, "atoms", MappingProxyType(dict(self.atoms)))
        object.__setattr__(self, "states", MappingProxyType(states))

    def projector(self, atom: str) -> Projector:
        try:
            return self.atoms[atom]
        except KeyError:
            raise EvaluationError(f"unbound atom {atom!r}") from None

    def state(self, name: str) -> np.ndarray:
        try:
            return self.states[name]
        except KeyError:
            raise EvaluationError(f"unknown state {name!r}") from None


def _complex(x, where: str) -> complex:
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(
            isinstance(c, (int, float)) and not isinstance(c, bool) for c in x):
        return complex(x[0], x[1])
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    raise ScenarioSyntaxError(f"{where}: expected [re, im], got {x!r}")


def _vector(raw, where: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise ScenarioSyntaxError(f"{where}: expected a list of amplitudes")
    return np.array([_complex(x, where) for x in raw], dtype=complex)


def _matrix(raw, where: str) -> np.ndarray:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ScenarioSyntaxError(f"{where}: expected a list of rows")
    rows = [_vector(r, where) for r in raw]
    if len({len(r) for r in rows}) > 1:
        raise ScenarioError(f"{where}: ragged matrix")
    return np.array(rows, dtype=complex)


def _named_entries(doc: dict, key: str) -> list[dict]:
    entries = doc.get(key, [])
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise ScenarioSyntaxError(f"'{key}' must be a list of objects")
    seen = set()
    for e in entries:
        name = e.get("name")
        if not isinstance(name, str):
            raise ScenarioSyntaxError(f"every entry of '{key}' needs a string 'name'")
        if name in seen:
            raise ScenarioError(f"duplicate name {name!r} in '{key}'")
        seen.add(name)
    return entries


def register_scenario(source: Union[str, bytes, Mapping], tol: float = DEFAULT_TOL) -> ScenarioSpec:
    """
    Build a validated :class:`ScenarioSpec` from a JSON document (text or parsed).

    Format::

        {"dimension": n,
         "atoms":  [{"name": str, "vector": [[re, im], ...]}
                  | {"name": str, "matrix": [[[re, im], ...], ...]}],
         "states": [{"name": str, "amplitudes": [[re, im], ...]}]}

    A ``vector`` atom denotes the rank-1 projector onto that vector after
    normalization.  Atom and state names live in separate namespaces.
    """
    if isinstance(source, (str, bytes)):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ScenarioSyntaxError(f"invalid JSON: {exc}") from None
    else:
        doc = source
    if not isinstance(doc, Mapping):
        raise ScenarioSyntaxError("scenario must be a JSON object")
    dim = doc.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ScenarioSyntaxError("'dimension' must be an integer")
    if dim < 1:
        raise ScenarioError("'dimension' must be positive")

    atoms: dict[str, Projector] = {}
    for e in _named_entries(doc, "atoms"):
        where = f"atom {e['name']!r}"
        if ("vector" in e) == ("matrix" in e):
            raise ScenarioSyntaxError(f"{where}: give exactly one of 'vector' or 'matrix'")
        try:
            if "vector" in e:
                v = _vector(e["vector"], where)
                if v.shape[0] != dim:
                    raise ScenarioError(f"{where}: vector has dimension {v.shape[0]}, scenario has {dim}")
                if np.linalg.norm(v) < tol:
                    raise ScenarioError(f"{where}: zero vector")
                atoms[e["name"]] = linalg.projector_onto([v], dim, tol)
            else:
                m = _matrix(e["matrix"], where)
                if m.shape != (dim, dim):
                    raise ScenarioError(f"{where}: matrix shape {m.shape}, scenario has dimension {dim}")
                atoms[e["name"]] = Projector(m, tol)
        except (InvariantError, DimensionError) as exc:
            raise ScenarioError(f"{where}: {exc}") from None

    states = {}
    for e in _named_entries(doc, "states"):
        where = f"state {e['name']!r}"
        if "amplitudes" not in e:
            raise ScenarioSyntaxError(f"{where}: missing 'amplitudes'")
        states[e["name"]] = _vector(e["amplitudes"], where)

    return ScenarioSpec(dim, atoms, states, name=str(doc.get("name", "")))


def load_scenario(path: Union[str, os.PathLike], tol: float = DEFAULT_TOL) -> ScenarioSpec:
    with open(path, encoding="utf-8") as fh:
        return register_scenario(fh.read(), tol)


def scenario_to_json(spec: ScenarioSpec) -> dict:
    """Serialize with explicit matrices, the form :func:`register_scenario` reads back."""
    pair = lambda z: [float(z.real), float(z.imag)]  # noqa: E731
    return {
        "name": spec.name,
        "dimension": spec.dim,
        "atoms": [{"name": k, "matrix": [[pair(z) for z in row] for row in p.matrix]}
                  for k, p in spec.atoms.items()],
        "states": [{"name": k, "amplitudes": [pair(z) for z in v]} for k, v in spec.states.items()],
    }


def non_commuting_pair(f: Formula, spec: ScenarioSpec, tol: float = DEFAULT_TOL):
    """First pair of distinct atoms of ``f`` whose projectors do not commute, or None."""
    names = atoms_of(f)
    projectors = [spec.projector(n) for n in names]
    for (a, p), (b, q) in combinations(zip(names, projectors), 2):
        if not linalg.commute(p.matrix, q.matrix, tol):
            return a, b
    return None


def pairwise_commuting(f: Formula, spec: ScenarioSpec, tol: float = DEFAULT_TOL) -> bool:
    return non_commuting_pair(f, spec, tol) is None


@dataclass(frozen=True)
class Exists:
    projector: Projector
    synonym: Subspace
    antonym: Subspace


@dataclass(frozen=True)
class Nonexistent:
    reason: str


EncodingResult = Union[Exists, Nonexistent]


def _synonym(f: Formula, spec: ScenarioSpec, tol: float) -> Subspace:
    if isinstance(f, Atom):
        return linalg.range_of(spec.projector(f.name), tol)
    if isinstance(f, Not):
        return linalg.orthocomplement(_synonym(f.child, spec, tol), tol)
    if isinstance(f, Implies):
        return _synonym(Or(Not(f.left), f.right), spec, tol)
    left, right = _synonym(f.left, spec, tol), _synonym(f.right, spec, tol)
    if isinstance(f, And):
        return linalg.intersect(left, right, tol)
    return linalg.span_sum(left, right, tol)


def encode(f: Formula, spec: ScenarioSpec, tol: float = DEFAULT_TOL) -> EncodingResult:
    pair = non_commuting_pair(f, spec, tol)
    if pair is not None:
        a, b = pair
        return Nonexistent(f"observables of {a} and {b} do not commute")
    syn = _synonym(f, spec, tol)
    return Exists(syn.projector(), syn, linalg.orthocomplement(syn, tol))
