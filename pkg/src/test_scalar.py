"""
tests for Laurent polynomials with pi, quantum numbers and series expansion
"""
import numpy as np
import pytest

from borcherds.params import DomainError, ExpansionError
from borcherds.scalar import (
    ONE, PI, Q, ZERO, DimSeries, RationalScalar, Scalar, format_scalar, invert, parity_exponent,
    parse_scalar, quantum_binom, quantum_factorial, quantum_int, series_expand,
)


def q(n: int) -> Scalar:
    return Scalar.monomial(1, n)


def pi_q(n: int) -> Scalar:
    return Scalar.monomial(1, n, odd=True)


def random_scalar(rng: np.random.Generator) -> Scalar:
    return Scalar(
        (int(n), (int(rng.integers(-3, 4)), int(rng.integers(-3, 4))))
        for n in rng.integers(-4, 5, size=3)
    )


def test_pi_squares_to_one():
    assert PI*PI == ONE
    assert (PI*Q)**2 == q(2)


def test_ring_axioms_on_random_triples():
    rng = np.random.default_rng(7)
    for _ in range(300):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert (a*b)*c == a*(b*c)
        assert a*(b + c) == a*b + a*c
        assert a*b == b*a
        assert a - a == ZERO


@pytest.mark.parametrize('n, r, p, expected', [
    (0, 1, 0, ZERO),
    (1, 1, 1, ONE),
    (2, 1, 1, pi_q(1) + q(-1)),
    (2, 1, 0, q(1) + q(-1)),
    (3, 1, 1, q(2) + PI + q(-2)),
    (2, 2, 0, q(2) + q(-2)),
])
def test_quantum_int(n, r, p, expected):
    assert quantum_int(n, r, p) == expected


def test_quantum_int_is_the_defining_ratio():
    for p in (0, 1):
        base = Scalar.monomial(1, 1, odd=bool(p))
        for n in range(1, 7):
            assert quantum_int(n, 1, p)*(base - q(-1)) == base**n - q(-n)


def test_quantum_int_at_minus_one():
    assert quantum_int(3, 1, 1).specialize(-1) == q(2) - ONE + q(-2)
    assert quantum_int(3, 1, 1).specialize(1) == quantum_int(3)


@pytest.mark.parametrize('n, k, p, expected', [
    (2, 1, 0, q(1) + q(-1)),
    (2, 1, 1, pi_q(1) + q(-1)),
    (3, 1, 1, q(2) + PI + q(-2)),
    (4, 0, 1, ONE),
    (4, 4, 1, ONE),
])
def test_quantum_binom(n, k, p, expected):
    assert quantum_binom(n, k, 1, p) == expected


def test_binomial_is_factorial_ratio():
    for p in (0, 1):
        for r in (1, 2):
            for n in range(7):
                for k in range(n + 1):
                    lhs = quantum_binom(n, k, r, p)*quantum_factorial(k, r, p)*quantum_factorial(n - k, r, p)
                    assert lhs == quantum_factorial(n, r, p)


def test_binomial_rejects_bad_k():
    with pytest.raises(DomainError):
        quantum_binom(2, 3)
    with pytest.raises(DomainError):
        quantum_int(-1)


@pytest.mark.parametrize('a, pi, pj, n, expected', [
    (0, 1, 1, 3, 0),
    (2, 1, 0, 1, 1),
    (1, 1, 1, 1, 1),
    (3, 1, 0, 1, 1),
    (2, 0, 1, 5, 0),
])
def test_parity_exponent(a, pi, pj, n, expected):
    assert parity_exponent(a, pi, pj, n) == expected


def test_invert():
    x = ONE - pi_q(2)
    inverse = invert(x)
    assert inverse == RationalScalar(ONE + pi_q(2), ONE - q(4))
    assert inverse*x == 1
    assert invert(ONE) == 1
    with pytest.raises(ZeroDivisionError):
        invert(ZERO)
    with pytest.raises(ZeroDivisionError):
        invert(ONE + PI)


def test_series_expand():
    series = series_expand(RationalScalar(ONE + pi_q(2), ONE - q(4)), 6)
    assert series == DimSeries(6, (ONE + pi_q(2) + q(4) + pi_q(6)).terms)
    assert series.coefficient(6) == (0, 1)
    with pytest.raises(ValueError):
        series.coefficient(7)


def test_series_expand_needs_unit_constant_term():
    with pytest.raises(ExpansionError):
        series_expand(RationalScalar(ONE, ONE*2 - q(2)), 4)


def test_series_product_tracks_exact_order():
    kappa = series_expand(invert(ONE - q(2)), 6)
    square = kappa*kappa
    assert square.order == 6
    assert [square.coefficient(n) for n in (0, 2, 4, 6)] == [(1, 0), (2, 0), (3, 0), (4, 0)]
    shifted = kappa*q(-2)
    assert shifted.order == 4
    assert shifted.coefficient(-2) == (1, 0)


def test_specialize():
    value = q(2) + pi_q(2) + pi_q(0)
    assert value.specialize(1) == q(2)*2 + ONE
    assert value.specialize(-1) == -ONE
    with pytest.raises(ValueError):
        value.specialize(0)


def test_bar_fixes_quantum_integers():
    for n in range(6):
        assert quantum_int(n).bar() == quantum_int(n)


def test_canonical_text():
    value = q(2)*3 - pi_q(2) + Scalar.monomial(-1, -1)
    text = format_scalar(value)
    assert text == "3*q^2 + -1*pi*q^2 + -1*q^-1"
    assert parse_scalar(text) == value
    assert format_scalar(ZERO) == "0"
    with pytest.raises(ValueError):
        parse_scalar("3q")
