"""
tests for the covering algebra, its twisted coproduct and bilinear form
"""
import itertools

import numpy as np
import pytest

from borcherds.covering import (
    FreeElement, TensorElement, commutator_element, coproduct, divided_power, form, format_weight, generator,
    gram, iterated_rho, kappa, mult, parse_weight, radical_generators, radical_member, rho_component,
    WORD_FORM_CACHE_SIZE, serre_element, specialize, tensor_pairing, word_element, word_form, words,
)
from borcherds.datum import random_superdatum
from borcherds.params import BoundError, DomainError
from borcherds.scalar import ONE, RationalScalar, Scalar, invert, quantum_int

I, J = 0, 1


def twist(datum, i, j) -> Scalar:
    return Scalar.monomial(1, -datum.dot(i, j), odd=bool(datum.parity(i)*datum.parity(j)))


def test_words_are_lexicographic():
    assert words((2, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert words((0, 0)) == [()]


def test_weight_text(rank3_mixed):
    datum = rank3_mixed.datum
    assert parse_weight(datum, "i:2,k") == (2, 0, 1)
    assert format_weight(datum, (2, 0, 1)) == "i:2,k:1"
    assert format_weight(datum, (0, 0, 0)) == "0"
    with pytest.raises(ValueError):
        parse_weight(datum, "x:1")


def test_mult(rank2_odd):
    assert mult(generator(I), generator(J)) == word_element((I, J))
    assert mult(word_element(()), generator(J)) == generator(J)
    assert mult(generator(I) + generator(J), generator(I)) == word_element((I, I)) + word_element((J, I))


def test_coproduct(rank2_odd):
    datum = rank2_odd.datum
    assert coproduct(datum, word_element(())) == TensorElement({((), ()): 1})
    assert coproduct(datum, generator(I)) == TensorElement({((I,), ()): 1, ((), (I,)): 1})
    expected = TensorElement({
        ((J, I), ()): 1,
        ((J,), (I,)): 1,
        ((I,), (J,)): twist(datum, I, J),
        ((), (J, I)): 1,
    })
    assert coproduct(datum, word_element((J, I))) == expected


def test_coproduct_term_count(rank3_mixed):
    datum = rank3_mixed.datum
    rho = coproduct(datum, word_element((0, 2, 1)))
    assert len(rho.items()) == 8


def test_rho_component(rank2_odd):
    datum = rank2_odd.datum
    assert rho_component(datum, I, generator(I)) == word_element(())
    assert rho_component(datum, I, word_element((J, I))) == word_element((J,), twist(datum, I, J))
    assert rho_component(datum, I, generator(J)).is_zero()


def test_form_values(bundle):
    datum = bundle.datum
    assert form(datum, word_element(()), word_element(())) == 1
    for i in datum.indices:
        expected = invert(ONE - Scalar.monomial(1, 2*datum.r(i), odd=bool(datum.parity(i))))
        assert form(datum, generator(i), generator(i)) == expected
    for i, j in itertools.permutations(datum.indices, 2):
        value = form(datum, word_element((i, j)), word_element((j, i)))
        assert value == kappa(datum, i)*kappa(datum, j)*twist(datum, i, j)


def test_form_vanishes_across_weights(rank2_odd):
    datum = rank2_odd.datum
    assert form(datum, generator(I), generator(J)).is_zero()
    assert form(datum, word_element((I, I)), word_element((I, J))).is_zero()


def test_form_is_symmetric(bundle):
    datum = bundle.datum
    for nu in [(2, 1), (1, 2)] + ([(1, 1, 1)] if datum.size == 3 else []):
        nu = nu + (0,)*(datum.size - len(nu))
        basis = words(nu)
        for w, v in itertools.product(basis, repeat=2):
            assert form(datum, word_element(w), word_element(v)) == form(datum, word_element(v), word_element(w))


def test_form_matches_coproduct_pairing(rank2_odd):
    datum = rank2_odd.datum
    rng = np.random.default_rng(3)
    basis = words((2, 1))
    for _ in range(10):
        x = FreeElement({basis[k]: int(rng.integers(-2, 3)) for k in range(len(basis))})
        for cut in range(4):
            for v in basis:
                y, z = word_element(v[:cut]), word_element(v[cut:])
                lhs = form(datum, x, mult(y, z))
                rhs = tensor_pairing(datum, coproduct(datum, x), TensorElement({(v[:cut], v[cut:]): 1}))
                assert lhs == rhs


def test_gram(orthogonal):
    g = gram(orthogonal, (1, 0))
    assert g.rows() == [[kappa(orthogonal, I)]]
    g = gram(orthogonal, (1, 1))
    kk = kappa(orthogonal, I)*kappa(orthogonal, J)
    assert g.words == ((I, J), (J, I))
    assert g.entry(0, 0) == kk
    assert g.entry(0, 1) == kk*Scalar.monomial(1, 0, odd=True)
    with pytest.raises(BoundError):
        gram(orthogonal, (3, 3), max_height=4)


def test_gram_for_even_square(sl2):
    g = gram(sl2, (2,))
    assert g.entry(0, 0) == kappa(sl2, I)*kappa(sl2, I)*(ONE + Scalar.monomial(1, -2))


def test_commutator_element(orthogonal):
    element = commutator_element(orthogonal, I, J)
    assert element == word_element((I, J)) - word_element((J, I), Scalar.monomial(1, 0, odd=True))
    assert radical_member(orthogonal, element).member


def test_serre_element_even(rank2_even):
    datum = rank2_even.datum
    element = serre_element(datum, I, J)
    two = invert(quantum_int(2))
    assert element.coefficient((I, I, J)) == two
    assert element.coefficient((I, J, I)) == -1
    assert element.coefficient((J, I, I)) == two
    assert divided_power(datum, I, 2) == word_element((I, I), two)


def test_serre_element_needs_real_vertex(rank2_odd):
    with pytest.raises(DomainError):
        serre_element(rank2_odd.datum, J, I)
    with pytest.raises(DomainError):
        serre_element(rank2_odd.datum, I, I)
    with pytest.raises(DomainError):
        commutator_element(rank2_odd.datum, I, J)


def test_radical_generators_are_members(bundle):
    datum = bundle.datum
    generators = radical_generators(datum, 4)
    assert generators
    for label, element in generators:
        certificate = radical_member(datum, element, 4)
        assert certificate.member, label
        assert certificate.rho_agrees, label


def test_radical_labels(rank2_odd):
    labels = [label for label, _ in radical_generators(rank2_odd.datum, 4)]
    assert labels == ['serre.ij.1']


def test_generators_are_not_in_radical(bundle):
    datum = bundle.datum
    assert radical_member(datum, FreeElement()).member
    for i in datum.indices:
        certificate = radical_member(datum, generator(i))
        assert not certificate
        assert certificate.rho_agrees


def test_iterated_rho_recovers_form(rank2_odd):
    datum = rank2_odd.datum
    x = word_element((I, J, I))
    for w in words((2, 1)):
        scaled = iterated_rho(datum, w, x)*kappa(datum, I)*kappa(datum, I)*kappa(datum, J)
        assert scaled == form(datum, word_element(w), x)


def test_specialize_kappa(odd_sl2, sl2):
    q2 = Scalar.monomial(1, 2)
    assert specialize(kappa(odd_sl2, I), 1) == RationalScalar(ONE, ONE - q2)
    assert specialize(kappa(odd_sl2, I), -1) == RationalScalar(ONE, ONE + q2)
    assert specialize(kappa(sl2, I), 1) == specialize(kappa(sl2, I), -1)


def test_word_form_cache_is_bounded():
    rng = np.random.default_rng(11)
    for _ in range(5):
        datum = random_superdatum(rng, max_size=2)
        for w, v in itertools.product(words((1,)*datum.size), repeat=2):
            form(datum, word_element(w), word_element(v))
    info = word_form.cache_info()
    assert info.maxsize == WORD_FORM_CACHE_SIZE
    assert info.currsize <= WORD_FORM_CACHE_SIZE
