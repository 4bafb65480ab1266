"""
tests for superdatum validation and the coefficient tables
"""
from fractions import Fraction

import numpy as np
import pytest
import sympy

from borcherds.datum import (
    GammaTable, QTable, Superdatum, Vertex, default_gamma, default_qtable, q_eval, random_superdatum, t_set,
    validate,
)


def test_sl2_passes(sl2):
    assert validate(sl2, default_qtable(sl2), default_gamma(sl2))


def test_odd_vertex_needs_even_row():
    datum = Superdatum((Vertex('i', 1), Vertex('j', 0)), ((2, -1), (-1, 2)))
    report = validate(datum)
    assert not report
    assert report.axiom == 'iv'


def test_zero_pattern_must_be_symmetric():
    datum = Superdatum((Vertex('i', 0), Vertex('j', 0)), ((2, -1), (0, 2)))
    report = validate(datum)
    assert report.axiom == 'iii'
    assert report.indices == (0, 1)


@pytest.mark.parametrize('matrix, axiom', [
    (((1,),), 'i'),
    (((-1,),), 'i'),
    (((2, 1), (1, 2)), 'ii'),
    (((2, -1, 0), (-1, 2, 0)), 'shape'),
])
def test_validation_axioms(matrix, axiom):
    vertices = tuple(Vertex(name, 0) for name in 'ijk'[:len(matrix)])
    assert validate(Superdatum(vertices, matrix)).axiom == axiom


def test_symmetrizability():
    datum = Superdatum((Vertex('i', 0, 2), Vertex('j', 0, 1)), ((2, -1), (-1, 2)))
    assert validate(datum).axiom == 'v'
    fixed = Superdatum((Vertex('i', 0, 2), Vertex('j', 0, 1)), ((2, -1), (-2, 2)))
    assert validate(fixed)


def test_bundled_datums_validate(bundle):
    assert validate(bundle.datum, bundle.qtable, bundle.gamma)


def test_default_qtable_orthogonal_pair_is_constant(orthogonal):
    assert default_qtable(orthogonal).terms(0, 1) == ((0, 0, 1),)


def test_default_qtable_linear(rank2_even):
    assert default_qtable(rank2_even.datum).terms(0, 1) == ((0, 1, 1), (1, 0, 1))


def test_default_qtable_with_symmetrizer():
    datum = Superdatum((Vertex('i', 1, 1), Vertex('j', 0, 2)), ((2, -2), (-1, 2)))
    assert validate(datum)
    assert t_set(datum, 0, 1) == [(0, 1), (2, 0)]
    table = default_qtable(datum)
    assert table.terms(0, 1) == ((0, 1, 1), (2, 0, 1))
    # reversed lookup swaps the exponents
    assert table.terms(1, 0) == ((0, 2, 1), (1, 0, 1))
    assert validate(datum, table, default_gamma(datum))


def test_qtable_rejects_terms_outside_t_set(rank2_odd):
    datum = rank2_odd.datum
    bad = rank2_odd.qtable.with_terms(0, 1, [(2, 0, 1), (1, 1, 1), (0, 2, 1)])
    assert validate(datum, bad).axiom == 'qtable'


def test_qtable_needs_extreme_coefficients(rank2_odd):
    datum = rank2_odd.datum
    bad = rank2_odd.qtable.with_terms(0, 1, [(0, 2, 1)])
    assert validate(datum, bad).axiom == 'qtable'


def test_qtable_inconsistent_entries():
    with pytest.raises(ValueError):
        QTable({(0, 1): [(1, 0, 1)], (1, 0): [(1, 0, 2)]})
    with pytest.raises(ValueError):
        QTable({(0, 0): [(0, 0, 1)]})


def test_gamma_constraint(rank2_odd):
    datum = rank2_odd.datum
    gamma = default_gamma(datum)
    assert gamma[(0, 1)]*gamma[(1, 0)] == Fraction(-1, 2)
    mutated = gamma.with_value(1, 0, '1/2')
    assert validate(datum, rank2_odd.qtable, mutated).axiom == 'gamma'


def test_gamma_is_one_on_mixed_pairs(rank3_mixed):
    gamma = default_gamma(rank3_mixed.datum)
    assert gamma[(0, 1)] == 1 and gamma[(1, 0)] == 1
    assert validate(rank3_mixed.datum, rank3_mixed.qtable, GammaTable(dict(gamma.items())))


def test_q_eval():
    datum = Superdatum((Vertex('i', 0), Vertex('j', 0)), ((2, -1), (-1, 2)))
    table = default_qtable(datum)
    x, y = sympy.symbols('x y')
    assert sympy.expand(q_eval(table, 0, 1, x, y, sympy.Integer(1)) - (x + y)) == 0
    orthogonal = Superdatum((Vertex('i', 0), Vertex('j', 0)), ((2, 0), (0, 2)))
    assert q_eval(default_qtable(orthogonal), 0, 1, x, y, sympy.Integer(1)) == 1


def test_q_eval_symmetry(bundle):
    u, v = sympy.symbols('u v')
    datum = bundle.datum
    for i in datum.indices:
        for j in datum.indices:
            if i == j:
                continue
            forward = q_eval(bundle.qtable, i, j, u, v, sympy.Integer(1))
            backward = q_eval(bundle.qtable, j, i, v, u, sympy.Integer(1))
            assert sympy.expand(forward - backward) == 0


def test_q_is_homogeneous(bundle):
    datum = bundle.datum
    for i in datum.indices:
        for j in datum.indices:
            if i == j:
                continue
            for a, b, t in bundle.qtable.terms(i, j):
                assert 2*datum.r(i)*a + 2*datum.r(j)*b == -2*datum.dot(i, j)


def test_random_superdata_validate():
    rng = np.random.default_rng(11)
    for _ in range(100):
        datum = random_superdatum(rng)
        assert validate(datum, default_qtable(datum), default_gamma(datum)), datum


def test_json_round_trip(rank3_mixed):
    datum = rank3_mixed.datum
    assert Superdatum.from_json(datum.to_json()) == datum
    assert datum.real == (0, 1) and datum.imaginary == (2,)
    assert datum.odd == (1, 2) and datum.even == (0,)
