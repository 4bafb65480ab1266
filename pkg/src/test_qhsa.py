"""
tests for the straightening multiplication of R(nu), its action and graded dimensions
"""
import numpy as np
import pytest

from borcherds.params import DomainError
from borcherds.qhsa import (
    act_on_poly, crossing_polynomial, graded_dim, independence_check, tau_omega0_eval, trivial_functional,
)
from borcherds.scalar import ONE, DimSeries, Scalar, invert, series_expand
from borcherds.superpoly import CliffordPoly, monomials
from src.conftest import qhsa_of, rep_of

I, J = 0, 1


def squares(qhsa, label, ks):
    tokens = tuple(('x', k) for k in ks for _ in range(2))
    return qhsa.word_element(tokens, label)


def test_crossing_squares_to_zero_on_equal_strands(rank2_odd):
    qhsa = qhsa_of(rank2_odd.datum)
    for label in [(I, I), (J, J)]:
        tau = qhsa.crossing(0, label)
        assert qhsa.mult(tau, tau).is_zero()


def test_crossing_square_is_q(rank2_odd):
    qhsa = qhsa_of(rank2_odd.datum)
    tau = qhsa.crossing(0, (I, J))
    square = qhsa.mult(qhsa.crossing(0, (J, I)), tau)
    expected = qhsa.word_element((('x', 0), ('x', 0)), (I, J)) + qhsa.word_element((('x', 1), ('x', 1)), (I, J))
    assert square == expected


def test_mismatched_idempotents_multiply_to_zero(rank2_odd):
    qhsa = qhsa_of(rank2_odd.datum)
    assert qhsa.mult(qhsa.idempotent((I, J)), qhsa.idempotent((J, I))).is_zero()
    e = qhsa.idempotent((I, J))
    assert qhsa.mult(e, e) == e


def test_nil_hecke_exchange(sl2):
    qhsa = qhsa_of(sl2)
    label = (I, I)
    lhs = qhsa.word_element((('t', 0), ('x', 0)), label)
    rhs = qhsa.word_element((('x', 1), ('t', 0)), label) + qhsa.idempotent(label)
    assert lhs == rhs


def test_odd_dots_anticommute(odd_sl2):
    qhsa = qhsa_of(odd_sl2)
    label = (I, I)
    x1x2 = qhsa.word_element((('x', 0), ('x', 1)), label)
    x2x1 = qhsa.word_element((('x', 1), ('x', 0)), label)
    assert x1x2 == -x2x1


def test_bidegree(rank2_odd):
    datum = rank2_odd.datum
    qhsa = qhsa_of(datum)
    assert qhsa.crossing(0, (I, J)).bidegrees(datum) == {(-datum.dot(I, J), 1)}
    assert qhsa.dot(0, (I, J)).bidegrees(datum) == {(2, 1)}
    assert qhsa.crossing(0, (I, I)).bidegrees(datum) == {(-2, 1)}


@pytest.mark.parametrize('n', [1, 2, 3])
def test_e_idempotent(bundle, n):
    qhsa = qhsa_of(bundle.datum)
    for i in bundle.datum.real:
        e = qhsa.e_idempotent(i, n)
        assert qhsa.is_idempotent(e), bundle.datum.name_of(i)


def test_e_idempotent_four_strands(odd_sl2, sl2):
    for datum in (odd_sl2, sl2):
        qhsa = qhsa_of(datum)
        assert qhsa.is_idempotent(qhsa.e_idempotent(I, 4))


def test_e_idempotent_needs_real_vertex(odd_imaginary):
    with pytest.raises(DomainError):
        qhsa_of(odd_imaginary).e_idempotent(I, 2)


@pytest.mark.parametrize('n, expected', [(2, 1), (3, -1), (4, 1)])
def test_tau_omega0(odd_sl2, n, expected):
    assert tau_omega0_eval(rep_of(odd_sl2), I, n) == expected


def test_center(odd_sl2, sl2):
    for datum in (odd_sl2, sl2):
        qhsa = qhsa_of(datum)
        assert not qhsa.center_probe((2,), qhsa.dot(0, (I, I)))
    qhsa = qhsa_of(odd_sl2)
    label = (I, I)
    assert qhsa.center_probe((2,), squares(qhsa, label, [0]) + squares(qhsa, label, [1]))
    assert qhsa.center_probe((2,), squares(qhsa, label, [0, 1]))


def test_format_and_parse(rank2_odd, sl2):
    qhsa = qhsa_of(sl2)
    e = qhsa.e_idempotent(I, 2)
    assert qhsa.format(e) == '1*x(1)*t(1)*e(i i)'
    assert qhsa.parse(qhsa.format(e)) == e
    assert qhsa.parse('0').is_zero()
    qhsa = qhsa_of(rank2_odd.datum)
    element = qhsa.crossing(0, (I, J)) + qhsa.dot(1, (J, I)).scale(-2)
    assert qhsa.parse(qhsa.format(element)) == element


@pytest.mark.parametrize('text', ['x(1)', 't(2)*e(i i)', 'e(i i)*x(1)', 'y(1)*e(i)'])
def test_parse_errors(sl2, text):
    with pytest.raises(ValueError):
        qhsa_of(sl2).parse(text)


def test_parse_normalizes_generator_order(sl2):
    qhsa = qhsa_of(sl2)
    assert qhsa.parse('t(1)*x(1)*e(i i)') == qhsa.parse('x(2)*t(1)*e(i i) + 1*e(i i)')


def test_action_is_a_homomorphism(rank2_odd):
    datum = rank2_odd.datum
    qhsa, rep = qhsa_of(datum), rep_of(datum)
    rng = np.random.default_rng(5)
    nu = (1, 1)
    polys = [f for label in [(I, J), (J, I)] for f in monomials(datum, label, 1)]
    for _ in range(3):
        a = qhsa.random_element(rng, nu)
        b = qhsa.random_element(rng, nu)
        product = qhsa.mult(a, b)
        for f in polys:
            assert act_on_poly(rep, product, f) == act_on_poly(rep, a, act_on_poly(rep, b, f))


def test_act_on_poly_drops_other_labels(rank2_odd):
    datum = rank2_odd.datum
    qhsa, rep = qhsa_of(datum), rep_of(datum)
    f = CliffordPoly.one(datum, (I, J))
    assert act_on_poly(rep, qhsa.idempotent((J, I)), f) == {}
    assert act_on_poly(rep, qhsa.idempotent((I, J)), f) == {(I, J): f}


@pytest.mark.parametrize('source', [(I, I), (I, J), (J, J)])
def test_independence(rank2_odd, source):
    datum = rank2_odd.datum
    assert independence_check(qhsa_of(datum), rep_of(datum), source, 2)


def test_independence_on_even_vertices(sl2):
    assert independence_check(qhsa_of(sl2), rep_of(sl2), (I, I), 2)


def test_graded_dim_single_strand(odd_sl2):
    expected = series_expand(invert(ONE - Scalar.monomial(1, 2, odd=True)), 6)
    assert graded_dim(odd_sl2, (I,), (I,), 6) == expected


def test_graded_dim_other_weight_is_zero(rank2_odd):
    assert graded_dim(rank2_odd.datum, (I,), (J,), 6) == DimSeries(6)


def test_crossing_polynomial(rank2_odd):
    datum = rank2_odd.datum
    assert crossing_polynomial(datum, (J, I), (I, J)) == Scalar.monomial(1, -datum.dot(I, J), odd=True)
    assert crossing_polynomial(datum, (I, I), (I, I)) == ONE + Scalar.monomial(1, -2, odd=True)


@pytest.mark.parametrize('datum_name', ['odd_imaginary', 'even_imaginary'])
def test_trivial_module(request, datum_name):
    datum = request.getfixturevalue(datum_name)
    qhsa = qhsa_of(datum)
    rng = np.random.default_rng(9)
    assert trivial_functional(qhsa.idempotent((I, I))) == 1
    assert trivial_functional(qhsa.dot(0, (I, I))) == 0
    for _ in range(5):
        a = qhsa.random_element(rng, (2,))
        b = qhsa.random_element(rng, (2,))
        assert trivial_functional(qhsa.mult(a, b)) == trivial_functional(a)*trivial_functional(b)
