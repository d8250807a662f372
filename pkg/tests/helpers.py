"""Generators shared by the property tests."""

import itertools

import numpy as np
from hypothesis import strategies as st

from qlogic.formula import And, Atom, Implies, Not, Or
from qlogic.linalg import Projector
from qlogic.statements import ScenarioSpec

NAMES = ["A", "B", "C", "D", "E"]


def formulas(names=NAMES, max_depth=6):
    atoms = st.sampled_from(names).map(Atom)

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(children, children).map(lambda p: And(*p)),
            st.tuples(children, children).map(lambda p: Or(*p)),
            st.tuples(children, children).map(lambda p: Implies(*p)),
        )

    # max_leaves bounds the size; depth is filtered by callers when it matters
    return st.recursive(atoms, extend, max_leaves=2 ** min(max_depth, 5))


def random_formula(rng, names, max_depth):
    """Uniform-ish random tree of height <= max_depth."""
    if max_depth == 0 or rng.random() < 0.25:
        return Atom(names[rng.integers(len(names))])
    kind = rng.integers(4)
    if kind == 0:
        return Not(random_formula(rng, names, max_depth - 1))
    cls = (And, Or, Implies)[kind - 1]
    return cls(random_formula(rng, names, max_depth - 1), random_formula(rng, names, max_depth - 1))


def formulas_up_to_depth_1(names):
    """Every formula of height <= 1 over ``names``."""
    atoms = [Atom(n) for n in names]
    out = list(atoms) + [Not(a) for a in atoms]
    for cls in (And, Or, Implies):
        out += [cls(a, b) for a, b in itertools.product(atoms, atoms)]
    return out


def random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def commuting_family(rng, dim, n_atoms, rotate=True):
    """
    Atoms sharing the eigenbasis given by the columns of ``u``.

    Returns (spec, u, patterns) where ``patterns[i]`` maps atom name to the
    eigenvalue bit of basis vector ``i``.
    """
    names = NAMES[:n_atoms]
    u = random_unitary(rng, dim) if rotate else np.eye(dim, dtype=complex)
    diags = {n: rng.integers(0, 2, size=dim) for n in names}
    atoms = {n: Projector(u @ np.diag(d) @ u.conj().T) for n, d in diags.items()}
    states = {f"e{i}": u[:, i] for i in range(dim)}
    patterns = [{n: int(diags[n][i]) for n in names} for i in range(dim)]
    return ScenarioSpec(dim, atoms, states), u, patterns


def random_subspace_basis(rng, dim, rank, shared=None):
    """``rank`` random complex vectors, optionally including the columns of ``shared``."""
    vecs = [] if shared is None else [shared[:, i] for i in range(shared.shape[1])]
    while len(vecs) < rank:
        vecs.append(rng.normal(size=dim) + 1j * rng.normal(size=dim))
    return vecs[:rank]
