import json
import math
from pathlib import Path

import numpy as np
import pytest

from qlogic import linalg
from qlogic.errors import EvaluationError, ScenarioError, ScenarioSyntaxError
from qlogic.formula import And, Not, Or, parse
from qlogic.linalg import Subspace
from qlogic.statements import (Exists, Nonexistent, encode, load_scenario,
                               pairwise_commuting, register_scenario, scenario_to_json)

from helpers import NAMES, commuting_family, random_formula

COIN_JSON = Path(__file__).resolve().parents[1] / "data" / "coin.json"
S = 1 / math.sqrt(2)


def _doc(**overrides):
    doc = {"dimension": 2,
           "atoms": [{"name": "H", "vector": [[1, 0], [0, 0]]}],
           "states": [{"name": "up", "amplitudes": [[1, 0], [0, 0]]}]}
    doc.update(overrides)
    return doc


class TestRegisterScenario:
    def test_coin_file(self, coin):
        spec = load_scenario(COIN_JSON)
        assert spec.dim == 2
        assert list(spec.atoms) == ["H", "T", "R"]
        assert list(spec.states) == ["heads_up", "tails_up", "superposed"]
        for name in spec.atoms:
            assert spec.atoms[name].close_to(coin.atoms[name])
        for name in spec.states:
            np.testing.assert_allclose(spec.states[name], coin.states[name], atol=1e-15)

    def test_round_trip_through_json(self, coin):
        again = register_scenario(json.dumps(scenario_to_json(coin)))
        assert all(again.atoms[n].close_to(coin.atoms[n]) for n in coin.atoms)

    def test_matrix_atom(self):
        spec = register_scenario(_doc(atoms=[{"name": "R", "matrix": [[[0.5, 0], [0.5, 0]],
                                                                     [[0.5, 0], [0.5, 0]]]}]))
        assert spec.atoms["R"].rank == 1

    def test_complex_vector_atom(self):
        spec = register_scenario(_doc(atoms=[{"name": "Y", "vector": [[1, 0], [0, 1]]}]))
        p = spec.atoms["Y"].matrix
        np.testing.assert_allclose(p, [[0.5, -0.5j], [0.5j, 0.5]], atol=1e-15)

    def test_non_hermitian(self):
        with pytest.raises(ScenarioError, match="Hermitian"):
            register_scenario(_doc(atoms=[{"name": "X", "matrix": [[[1, 0], [1, 0]], [[0, 0], [0, 0]]]}]))

    def test_non_idempotent(self):
        with pytest.raises(ScenarioError, match="idempotent"):
            register_scenario(_doc(atoms=[{"name": "X", "matrix": [[[2, 0], [0, 0]], [[0, 0], [0, 0]]]}]))

    def test_state_of_norm_two(self):
        with pytest.raises(ScenarioError, match="normalized"):
            register_scenario(_doc(states=[{"name": "big", "amplitudes": [[2, 0], [0, 0]]}]))

    def test_duplicate_name(self):
        with pytest.raises(ScenarioError, match="duplicate"):
            register_scenario(_doc(atoms=[{"name": "H", "vector": [[1, 0], [0, 0]]}] * 2))

    def test_dimension_mismatch(self):
        with pytest.raises(ScenarioError, match="dimension"):
            register_scenario(_doc(states=[{"name": "s", "amplitudes": [[1, 0]]}]))

    def test_invalid_name(self):
        with pytest.raises(ScenarioError, match="invalid"):
            register_scenario(_doc(atoms=[{"name": "9H", "vector": [[1, 0], [0, 0]]}]))

    @pytest.mark.parametrize("source", [
        "{not json", "[]", json.dumps({"atoms": []}),
        json.dumps(_doc(atoms=[{"name": "H"}])),
        json.dumps(_doc(atoms=[{"name": "H", "vector": [["a", 0], [0, 0]]}])),
        json.dumps(_doc(states=[{"name": "s"}])),
    ])
    def test_malformed(self, source):
        with pytest.raises(ScenarioSyntaxError):
            register_scenario(source)

    def test_spec_is_read_only(self, coin):
        with pytest.raises(TypeError):
            coin.atoms["X"] = coin.atoms["H"]
        with pytest.raises(ValueError):
            coin.states["heads_up"][0] = 0


class TestPairwiseCommuting:
    def test_diagonal(self, coin):
        assert pairwise_commuting(parse("H & T"), coin)

    def test_rest_and_heads(self, coin):
        assert not pairwise_commuting(parse("R & H"), coin)

    def test_single_atom(self, coin):
        assert pairwise_commuting(parse("H"), coin)
        assert pairwise_commuting(parse("R | !R"), coin)

    def test_unbound(self, coin):
        with pytest.raises(EvaluationError, match="unbound"):
            pairwise_commuting(parse("H & Q"), coin)


class TestEncode:
    def test_heads_and_tails(self, coin):
        enc = encode(parse("H & T"), coin)
        assert isinstance(enc, Exists)
        assert enc.synonym.rank == 0 and enc.antonym.rank == 2
        assert np.linalg.norm(enc.projector.matrix) < 1e-9

    def test_heads_or_tails(self, coin):
        enc = encode(parse("H | T"), coin)
        assert enc.synonym.rank == 2 and enc.antonym.rank == 0
        np.testing.assert_allclose(enc.projector.matrix, np.eye(2), atol=1e-9)

    def test_rest_and_heads(self, coin):
        enc = encode(parse("R & H"), coin)
        assert isinstance(enc, Nonexistent)
        assert "R" in enc.reason and "H" in enc.reason

    def test_implication(self, coin):
        enc = encode(parse("H -> T"), coin)
        e_h, e_t = (linalg.range_of(coin.atoms[n]) for n in "HT")
        assert enc.synonym.same_as(e_t)
        assert enc.antonym.same_as(e_h)

    def test_exists_invariants(self, coin):
        for text in ("H", "!H", "H & T", "H | T", "H -> T", "R", "!R | R"):
            enc = encode(parse(text), coin)
            p, q = enc.synonym.projector().matrix, enc.antonym.projector().matrix
            np.testing.assert_allclose(p + q, np.eye(2), atol=1e-9)
            np.testing.assert_allclose(p @ q, np.zeros((2, 2)), atol=1e-9)
            assert enc.projector.close_to(enc.synonym.projector())


def _syn(f, spec):
    enc = encode(f, spec)
    return enc.synonym if isinstance(enc, Exists) else None


def test_lattice_properties_on_commuting_families():
    rng = np.random.default_rng(11)
    for _ in range(150):
        dim, k = int(rng.integers(2, 6)), int(rng.integers(2, 5))
        spec, _, _ = commuting_family(rng, dim, k)
        names = NAMES[:k]
        f, g = random_formula(rng, names, 2), random_formula(rng, names, 2)
        sf, sg = _syn(f, spec), _syn(g, spec)
        assert sf is not None and sg is not None
        assert _syn(Not(Not(f)), spec).same_as(sf)
        for v in _syn(And(f, g), spec).vectors():
            assert linalg.contains(sf, v)
        for v in sf.vectors():
            assert linalg.contains(_syn(Or(f, g), spec), v)
        assert _syn(Not(And(f, g)), spec).same_as(_syn(Or(Not(f), Not(g)), spec))
        assert _syn(Not(Or(f, g)), spec).same_as(_syn(And(Not(f), Not(g)), spec))


def test_coin_projectors_exact(coin):
    np.testing.assert_allclose(encode(parse("H | T"), coin).projector.matrix, np.eye(2), atol=1e-9)
    np.testing.assert_allclose(encode(parse("H & T"), coin).projector.matrix, np.zeros((2, 2)), atol=1e-9)


def test_double_negation_of_a_single_noncommuting_atom(coin):
    assert _syn(parse("!!R"), coin).same_as(Subspace.span([[S, S]], 2))
