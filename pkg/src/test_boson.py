"""
tests for the quantum boson operators and their form at pi = -1
"""
import itertools

import pytest

from borcherds.boson import (
    binomial_recursion_check, boson_form, boson_nondegeneracy_check, commutation_check, congruence_check,
    default_kappa, e_dprime, e_prime, identity_B3_check, serre_operator_identity_check,
)
from borcherds.covering import form, generator, specialize, word_element, words
from borcherds.params import DomainError
from borcherds.scalar import ONE, Scalar

I, J = 0, 1


def test_e_prime(rank2_odd):
    datum = rank2_odd.datum
    assert e_prime(datum, I, generator(I)) == word_element(())
    expected = word_element((J,), Scalar.monomial(-1, -datum.dot(I, J)))
    assert e_prime(datum, I, word_element((J, I))) == expected
    assert e_prime(datum, I, generator(J)).is_zero()


def test_e_prime_generic_pi(rank2_odd):
    datum = rank2_odd.datum
    expected = word_element((J,), Scalar.monomial(1, -datum.dot(I, J), odd=True))
    assert e_prime(datum, I, word_element((J, I)), sign=None) == expected


def test_e_dprime(rank2_odd, sl2):
    datum = rank2_odd.datum
    assert e_dprime(datum, I, generator(I)) == word_element(())
    assert e_dprime(datum, I, generator(J)).is_zero()
    # (1 + (-1)^{p(i)} q_i^{a_ii}) f_i
    assert e_dprime(datum, I, word_element((I, I))) == word_element((I,), ONE - Scalar.monomial(1, 2))
    assert e_dprime(sl2, I, word_element((I, I))) == word_element((I,), ONE + Scalar.monomial(1, 2))


def test_boson_form_values(rank2_odd):
    datum = rank2_odd.datum
    kappas = default_kappa(datum)
    assert boson_form(datum, word_element(()), word_element(()), kappas) == 1
    assert boson_form(datum, generator(I), generator(I), kappas) == kappas[I]
    assert boson_form(datum, generator(I), generator(J), kappas).is_zero()


def test_boson_form_rejects_zero_kappa(rank2_odd):
    datum = rank2_odd.datum
    with pytest.raises(DomainError):
        boson_form(datum, generator(I), generator(I), {I: 0, J: 1})


def test_boson_form_is_covering_form_at_minus_one(bundle):
    datum = bundle.datum
    kappas = default_kappa(datum)
    heights = 3 if datum.size == 3 else 4
    for nu in itertools.product(range(heights + 1), repeat=datum.size):
        if not 0 < sum(nu) <= heights:
            continue
        basis = words(nu)
        for w, v in itertools.product(basis, repeat=2):
            x, y = word_element(w), word_element(v)
            assert boson_form(datum, x, y, kappas) == specialize(form(datum, x, y), -1), (w, v)


def test_alternating_sum_vanishes():
    for pi, pj in itertools.product((0, 1), repeat=2):
        assert identity_B3_check(1, pi, pj).is_zero()
        assert identity_B3_check(3, pi, pj).is_zero()
        assert identity_B3_check(5, pi, pj, r=2).is_zero()
    assert identity_B3_check(2, 0, 1).is_zero()
    assert identity_B3_check(4, 0, 0).is_zero()


def test_alternating_sum_needs_odd_m_for_odd_vertex():
    assert identity_B3_check(2, 1, 0) == Scalar.monomial(2, 2) - 2
    with pytest.raises(DomainError):
        identity_B3_check(0, 0, 0)


def test_scalar_identities():
    assert congruence_check(8)
    assert binomial_recursion_check(8, (1, 2))


def test_commutation(bundle):
    datum = bundle.datum
    for i, j in itertools.product(datum.indices, repeat=2):
        report = commutation_check(datum, i, j, 3)
        assert report, report.detail
        assert report.checked == sum(datum.size**n for n in range(4))


def test_serre_operator_orthogonal(orthogonal):
    assert serre_operator_identity_check(orthogonal, I, J, I, 4)
    assert serre_operator_identity_check(orthogonal, I, J, J, 4)


def test_serre_operator_even(rank2_even):
    datum = rank2_even.datum
    for k in datum.indices:
        assert serre_operator_identity_check(datum, I, J, k, 4)


def test_serre_operator_mutated_sign_fails(rank2_even):
    report = serre_operator_identity_check(rank2_even.datum, I, J, I, 4, mutate=True)
    assert not report
    assert report.witness is not None
    assert report.witness[0] == I


def test_serre_operator_odd(rank2_odd):
    datum = rank2_odd.datum
    for k in datum.indices:
        assert serre_operator_identity_check(datum, I, J, k, 3)


@pytest.mark.parametrize('nu', [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
def test_nondegeneracy(rank2_odd, nu):
    report = boson_nondegeneracy_check(rank2_odd.datum, nu)
    assert report, report.detail


def test_nondegeneracy_sees_the_serre_relation(rank2_even):
    report = boson_nondegeneracy_check(rank2_even.datum, (2, 1))
    assert report
    assert report.detail == "gram rank 2, ideal rank 1, words 3"


def test_nondegeneracy_rejects_an_ideal_outside_the_kernel(rank2_even):
    # same ranks as the Serre relation, but iij lies outside the kernel
    report = boson_nondegeneracy_check(rank2_even.datum, (2, 1), [('fake', word_element((I, I, J)))])
    assert not report
    assert report.detail.startswith("fake multiplied by")
