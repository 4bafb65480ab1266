"""
tests for Clifford polynomials, the sigma operators and the polynomial representation
"""
import pytest

from borcherds.covering import words
from borcherds.params import DomainError, InexactDivisionError, LabelError
from borcherds.superpoly import (
    CliffordPoly, PolynomialRepresentation, crossing_generator, divide, dot_generator, idempotent, monomials,
    normal_form, sigma, sigma_closed_form, sigma_identities_check, sigma_prime, sn_act, tilde_s,
    verify_relations, x_element,
)
from src.conftest import rep_of

I, J = 0, 1


def test_clifford_generators(odd_sl2):
    one = CliffordPoly.one(odd_sl2, (I, I))
    c0, c1 = one.gen('c', 0), one.gen('c', 1)
    assert c0*c0 == one
    assert c1*c0 == -(c0*c1)
    assert normal_form(odd_sl2, (I, I), [('c', 1), ('c', 0)]) == -one.monomial(s=(0, 1))
    y0 = one.gen('y', 0)
    assert c0*y0 == -(y0*c0)
    assert c1*y0 == y0*c1


def test_even_strands_commute(sl2):
    one = CliffordPoly.one(sl2, (I,))
    assert one.gen('c', 0)*one.gen('y', 0) == one.gen('y', 0)*one.gen('c', 0)


def test_labels_must_match(rank2_odd):
    datum = rank2_odd.datum
    with pytest.raises(LabelError):
        CliffordPoly.one(datum, (I, J)) + CliffordPoly.one(datum, (J, I))
    with pytest.raises(ValueError):
        CliffordPoly.one(datum, (I,)).monomial(s=(0, 0))


def test_dot_image(odd_sl2, sl2):
    x = x_element(odd_sl2, (I,), 0)
    y = CliffordPoly.one(odd_sl2, (I,)).gen('y', 0)
    assert x*x == -(y*y)
    assert x.bidegrees(odd_sl2) == {(2, 1)}
    assert x_element(sl2, (I,), 0) == CliffordPoly.one(sl2, (I,)).gen('y', 0)


def test_monomial_counts(rank2_odd, rank2_even):
    assert len(monomials(rank2_odd.datum, (I, J), 1)) == 16
    assert len(monomials(rank2_odd.datum, (I, J), 1, full=True)) == 20
    assert len(monomials(rank2_even.datum, (I, J), 1)) == 3


def test_sn_act_relabels(rank2_odd):
    f = CliffordPoly.one(rank2_odd.datum, (I, J)).gen('y', 0)
    g = sn_act(0, f)
    assert g.label == (J, I)
    assert g == CliffordPoly.one(rank2_odd.datum, (J, I)).gen('y', 1)


def test_divide(sl2):
    one = CliffordPoly.one(sl2, (I, I))
    y0, y1 = one.gen('y', 0), one.gen('y', 1)
    assert divide(y0*y0 - y1*y1, 0, 'y', 1) == y0 + y1
    assert divide(y0*y0 - y1*y1, 0, 'y', -1) == y0 - y1
    with pytest.raises(InexactDivisionError):
        divide(y0, 0, 'y', 1)


def test_tilde_s_needs_even_pair(odd_sl2):
    with pytest.raises(DomainError):
        tilde_s(0, CliffordPoly.one(odd_sl2, (I, I)))


def test_sigma_on_generators(odd_sl2):
    one = CliffordPoly.one(odd_sl2, (I, I))
    cc = one.gen('c', 0)*one.gen('c', 1)
    assert sigma(0, one.gen('y', 0)) == -one - cc
    assert sigma(0, one.gen('y', 1)) == one - cc
    assert sigma(0, one).is_zero()
    assert sigma(0, one.gen('z', 0)).is_zero()
    assert sigma_prime(0, one.gen('z', 1)) == one - cc


def test_sigma_closed_form(odd_sl2):
    one = CliffordPoly.one(odd_sl2, (I, I))
    y0, y1 = one.gen('y', 0), one.gen('y', 1)
    for f in (y0, y0*y0*y1, y1*y1*y1 - y0):
        assert sigma(0, f) == sigma_closed_form(0, f)
    with pytest.raises(DomainError):
        sigma_closed_form(0, one.gen('c', 0))


@pytest.mark.parametrize('n, bound', [(2, 4), (3, 2)])
def test_sigma_identities(n, bound):
    report = sigma_identities_check((I,)*n, bound)
    assert report, report.witness
    assert report.checked > 0


@pytest.mark.parametrize('label', [(J, J), (I, J), (J, J, J)])
def test_sigma_identities_ignore_vertex_parity(label):
    # σ acts on 𝒫 where every c anticommutes with y, even over even vertices
    report = sigma_identities_check(label, 3)
    assert report, report.witness


def test_tau_squares_to_zero_on_equal_strands(rank2_odd, rank2_even):
    for bundle in (rank2_odd, rank2_even):
        rep = rep_of(bundle.datum)
        for f in monomials(bundle.datum, (I, I), 2):
            assert rep.tau(0, rep.tau(0, f)).is_zero(), f


def test_tau_on_real_even_strands(sl2):
    rep = rep_of(sl2)
    one = CliffordPoly.one(sl2, (I, I))
    assert rep.tau(0, one).is_zero()
    assert rep.tau(0, one.gen('y', 0)) == one


def test_act(rank2_odd):
    datum = rank2_odd.datum
    rep = rep_of(datum)
    f = CliffordPoly.one(datum, (I, J))
    assert rep.act(idempotent((I, J)), f) == f
    assert rep.act(idempotent((J, I)), f).is_zero()
    assert rep.act(dot_generator(0, (I, J)), f) == rep.x(0, f)
    image = rep.act(crossing_generator(0, (I, J)), f)
    assert image.label == (J, I)
    assert rep.act(crossing_generator(0, (J, I)), f).label == (I, J)
    assert str(crossing_generator(0, (I, J))) == 't_1,(0, 1)'


@pytest.mark.parametrize('nu', [(2, 0), (1, 1), (0, 2)])
def test_relations_rank2(rank2_odd, rank2_even, nu):
    for bundle in (rank2_odd, rank2_even):
        rep = PolynomialRepresentation(bundle.datum, bundle.qtable, bundle.gamma)
        report = verify_relations(rep, nu, 2)
        assert report, report.witness


def test_relations_height_three(rank2_odd):
    rep = PolynomialRepresentation(rank2_odd.datum, rank2_odd.qtable, rank2_odd.gamma)
    for nu in [(2, 1), (1, 2)]:
        report = verify_relations(rep, nu, 1)
        assert report, report.witness
        assert report.checked > 0


def test_relations_rank3(rank3_mixed):
    rep = PolynomialRepresentation(rank3_mixed.datum, rank3_mixed.qtable, rank3_mixed.gamma)
    for nu in [(1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]:
        report = verify_relations(rep, nu, 2)
        assert report, report.witness


def test_mutated_gamma_breaks_the_square(rank2_odd):
    gamma = rank2_odd.gamma.with_value(J, I, '1/2')
    rep = PolynomialRepresentation(rank2_odd.datum, rank2_odd.qtable, gamma)
    report = verify_relations(rep, (1, 1), 1)
    assert not report
    assert report.witness.relation == 'square t1'
    assert report.witness.label == (I, J)
    assert report.witness.to_json()['label'] == [I, J]


def test_relation_labels_default_to_words(rank2_odd):
    rep = rep_of(rank2_odd.datum)
    everything = verify_relations(rep, (1, 1), 1)
    one_label = verify_relations(rep, (1, 1), 1, labels=[(I, J)])
    assert one_label.checked*len(words((1, 1))) == everything.checked
