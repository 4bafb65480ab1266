"""The quantum boson calculus: derivations e′_i, e″_i on the free algebra and the form they define.

Words of the free algebra are read as monomials in the f_i. Operators work
at π = −1 by default; ``sign=None`` keeps π generic and ``sign=1`` gives the
even specialization.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from borcherds.params import DomainError
from borcherds.scalar import Scalar, RationalScalar, ZERO, ONE, quantum_binom, parity_exponent
from borcherds.covering import (
    FreeElement, word_element, words, weight_of, kappa, radical_generators, mult,
)
from borcherds.linalg import rank_laurent

if TYPE_CHECKING:
    from typing import Optional, Callable
    from collections.abc import Mapping, Sequence
    from borcherds.datum import Superdatum

__all__ = (
    'BosonOperator',
    'e_prime',
    'e_dprime',
    'boson_form',
    'default_kappa',
    'serre_operator',
    'serre_operator_identity_check',
    'identity_B3_check',
    'congruence_check',
    'binomial_recursion_check',
    'commutation_check',
    'boson_nondegeneracy_check',
    'IdentityReport',
)


_log = logging.getLogger(__name__)


def _pi(odd: int, sign: Optional[int]) -> Scalar:
    if not odd:
        return ONE
    if sign is None:
        return Scalar.monomial(1, 0, odd=True)
    return Scalar.monomial(sign)


@dataclass(frozen=True)
class BosonOperator:
    kind: str  # 'prime' or 'dprime'
    vertex: int
    sign: Optional[int] = -1

    def __call__(self, datum: Superdatum, x: FreeElement) -> FreeElement:
        direction = -1 if self.kind == 'prime' else 1
        result = []
        for word, coeff in x.items():
            for pos, letter in enumerate(word):
                if letter != self.vertex:
                    continue
                prefix = word[:pos]
                parity = sum(datum.parity(self.vertex)*datum.parity(c) for c in prefix) % 2
                exponent = direction*sum(datum.dot(self.vertex, c) for c in prefix)
                scalar = _pi(parity, self.sign)*Scalar.monomial(1, exponent)
                result.append((prefix + word[pos + 1:], coeff*scalar))
        return FreeElement(result)


def e_prime(datum: Superdatum, i: int, x: FreeElement, sign: Optional[int] = -1) -> FreeElement:
    """e′_i(f_j w) = δ_ij w + (−1)^{p(i)p(j)} q_i^{−a_ij} f_j e′_i(w)"""
    return BosonOperator('prime', i, sign)(datum, x)

def e_dprime(datum: Superdatum, i: int, x: FreeElement, sign: Optional[int] = -1) -> FreeElement:
    """e″_i(f_j w) = δ_ij w + (−1)^{p(i)p(j)} q_i^{a_ij} f_j e″_i(w)"""
    return BosonOperator('dprime', i, sign)(datum, x)


def default_kappa(datum: Superdatum, sign: Optional[int] = -1) -> dict[int, RationalScalar]:
    """κ_i = (1 − π^{p(i)} q_i²)⁻¹ at the requested specialization."""
    result = {}
    for i in datum.indices:
        k = kappa(datum, i)
        result[i] = k if sign is None else k.specialize(sign)
    return result

def boson_form(
        datum: Superdatum, x: FreeElement, y: FreeElement,
        kappa_map: Mapping[int, RationalScalar],
        sign: Optional[int] = -1,
) -> RationalScalar:
    """⟨f_i x, y⟩ = κ_i ⟨x, e′_i y⟩ with ⟨1, 1⟩ = 1."""
    for i, k in kappa_map.items():
        if RationalScalar.coerce(k).is_zero():
            raise DomainError(f"κ for vertex {datum.name_of(i)} is zero")
    total = RationalScalar(ZERO)
    for w, a in x.items():
        for v, b in y.items():
            if weight_of(datum, w) != weight_of(datum, v):
                continue
            total = total + a*b*_word_boson_form(datum, w, word_element(v), kappa_map, sign)
    return total

def _word_boson_form(
        datum: Superdatum, w: tuple[int, ...], y: FreeElement,
        kappa_map: Mapping[int, RationalScalar], sign: Optional[int],
) -> RationalScalar:
    if y.is_zero():
        return RationalScalar(ZERO)
    if not w:
        return y.coefficient(())
    i = w[0]
    inner = _word_boson_form(datum, w[1:], e_prime(datum, i, y, sign), kappa_map, sign)
    return RationalScalar.coerce(kappa_map[i])*inner


## Operator identities

def _compose(datum: Superdatum, ops: Sequence[tuple[str, int]], x: FreeElement, sign: Optional[int]) -> FreeElement:
    """Apply ops right to left."""
    for kind, i in reversed(ops):
        x = BosonOperator(kind, i, sign)(datum, x)
    return x

def serre_operator(datum: Superdatum, i: int, j: int, mutate: bool = False) -> Callable[[FreeElement], FreeElement]:
    """S = Σ_{a+b=m} (−1)^{a+p(a;i,j)} binom(m,a)_i^− e′_i^a e′_j e′_i^b with m = 1 − a_ij.

    ``mutate`` flips the sign of the a = 0 term."""
    if not datum.is_real(i):
        raise DomainError(f"{datum.name_of(i)} is not a real vertex")
    m = 1 - datum.a(i, j)
    coeffs = []
    for a in range(m + 1):
        exponent = a + parity_exponent(a, datum.parity(i), datum.parity(j))
        coeff = quantum_binom(m, a, datum.r(i), datum.parity(i)).specialize(-1)
        coeff = -coeff if exponent % 2 else coeff
        if mutate and a == 0:
            coeff = -coeff
        coeffs.append(coeff)

    def apply(x: FreeElement) -> FreeElement:
        result = FreeElement()
        for a, coeff in enumerate(coeffs):
            ops = [('prime', i)]*a + [('prime', j)] + [('prime', i)]*(m - a)
            result = result + _compose(datum, ops, x, -1).scale(coeff)
        return result

    return apply


@dataclass(frozen=True)
class IdentityReport:
    ok: bool
    checked: int
    witness: Optional[tuple[int, ...]] = None
    detail: str = ''

    def __bool__(self) -> bool:
        return self.ok


def _all_words(datum: Superdatum, max_len: int):
    for length in range(max_len + 1):
        yield from itertools.product(datum.indices, repeat=length)

def serre_operator_identity_check(
        datum: Superdatum, i: int, j: int, k: int, degree_bound: int = 4, mutate: bool = False,
) -> IdentityReport:
    """S f_k w = (−1)^{(m p(i)+p(j))p(k)} q_k^{−m a_ki − a_kj} f_k S w on all words of length ≤ D."""
    S = serre_operator(datum, i, j, mutate)
    m = 1 - datum.a(i, j)
    odd = ((m*datum.parity(i) + datum.parity(j))*datum.parity(k)) % 2
    exponent = -(m*datum.dot(k, i) + datum.dot(k, j))
    factor = Scalar.monomial(-1 if odd else 1, exponent)
    checked = 0
    for w in _all_words(datum, degree_bound - 1):
        lhs = S(word_element((k,) + w))
        rhs = mult(word_element((k,)), S(word_element(w))).scale(factor)
        checked += 1
        if lhs != rhs:
            return IdentityReport(False, checked, (k,) + w, f"S f_k w differs for i={i}, j={j}, k={k}")
    return IdentityReport(True, checked)

def identity_B3_check(m: int, i_parity: int, j_parity: int, r: int = 1) -> Scalar:
    """Σ_{a+b=m} (−1)^{a+p(a;i,j)+b p(i)p(j)} q_i^{b(m−1)} binom(m,a)_i^− (vanishes for admissible m)."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    total = ZERO
    for a in range(m + 1):
        b = m - a
        exponent = a + parity_exponent(a, i_parity, j_parity) + b*i_parity*j_parity
        binom = quantum_binom(m, a, r, i_parity).specialize(-1)
        term = binom.shift(r*b*(m - 1))
        total = total + (-term if exponent % 2 else term)
    return total

def congruence_check(max_m: int = 8) -> bool:
    """p(a;i,j) + (b−1)p(i) + p(a+1;i,j) + (m−1)p(i) + p(i)p(j) ≡ 0 for all a + b = m."""
    for m in range(1, max_m + 1):
        for a in range(m + 1):
            b = m - a
            for pi, pj in itertools.product((0, 1), repeat=2):
                total = (
                    parity_exponent(a, pi, pj) + (b - 1)*pi + parity_exponent(a + 1, pi, pj)
                    + (m - 1)*pi + pi*pj
                )
                if total % 2:
                    return False
    return True

def binomial_recursion_check(max_n: int = 8, rs: Sequence[int] = (1, 2)) -> bool:
    """q_i^{−k} binom(n,k) + (−1)^{p(i)(n−k+1)} q_i^{n−k+1} binom(n,k−1) = binom(n+1,k) at π = −1."""
    for r in rs:
        for p in (0, 1):
            for n in range(max_n):
                for k in range(0, n + 2):
                    lhs = ZERO
                    if k <= n:
                        lhs = lhs + quantum_binom(n, k, r, p).specialize(-1).shift(-r*k)
                    if k >= 1:
                        sign = -1 if (p*(n - k + 1)) % 2 else 1
                        lhs = lhs + quantum_binom(n, k - 1, r, p).specialize(-1).shift(r*(n - k + 1))*sign
                    if lhs != quantum_binom(n + 1, k, r, p).specialize(-1):
                        return False
    return True

def commutation_check(datum: Superdatum, i: int, j: int, degree_bound: int = 4) -> IdentityReport:
    """e′_i e″_j = (−1)^{p(i)p(j)} q_i^{a_ij} e″_j e′_i on all words of length ≤ D."""
    odd = datum.parity(i)*datum.parity(j)
    factor = Scalar.monomial(-1 if odd else 1, datum.dot(i, j))
    checked = 0
    for w in _all_words(datum, degree_bound):
        x = word_element(w)
        lhs = e_prime(datum, i, e_dprime(datum, j, x))
        rhs = e_dprime(datum, j, e_prime(datum, i, x)).scale(factor)
        checked += 1
        if lhs != rhs:
            return IdentityReport(False, checked, tuple(w), f"e'_i e''_j differs for i={i}, j={j}")
    return IdentityReport(True, checked)

def boson_nondegeneracy_check(
        datum: Superdatum,
        nu: Sequence[int],
        generators: Optional[Sequence[tuple[str, FreeElement]]] = None,
) -> IdentityReport:
    """The Serre ideal in weight ν is the kernel of the π = −1 form.

    Every two-sided multiple of a Serre or commutator element must pair to
    zero with every word, and the rank of the Gram matrix plus the rank of
    those multiples must equal |Seq(ν)|."""
    basis = words(nu)
    kappas = default_kappa(datum)
    gram_rows = []
    for w in basis:
        row = []
        for v in basis:
            value = boson_form(datum, word_element(w), word_element(v), kappas)
            row.append(value)
        gram_rows.append(_clear_row(row))
    gram_rank = rank_laurent(gram_rows)

    if generators is None:
        generators = radical_generators(datum, sum(nu))
    ideal_rows = []
    for name, gen in generators:
        gen = gen.map_coefficients(lambda c: c.specialize(-1))
        if gen.is_zero():
            continue
        gen_weight = gen.weight(datum)
        rest = tuple(n - g for n, g in zip(nu, gen_weight))
        if any(r < 0 for r in rest):
            continue
        for left_len in range(sum(rest) + 1):
            for left in _words_of_length(datum, rest, left_len):
                right_weight = tuple(r - c for r, c in zip(rest, weight_of(datum, left)))
                for right in words(right_weight):
                    element = mult(mult(word_element(left), gen), word_element(right))
                    for v in basis:
                        if not boson_form(datum, element, word_element(v), kappas).is_zero():
                            detail = f"{name} multiplied by {left}, {right} pairs nontrivially with {v}"
                            return IdentityReport(False, len(basis), tuple(v), detail)
                    ideal_rows.append(_clear_row([element.coefficient(w) for w in basis]))
    ideal_rank = rank_laurent(ideal_rows) if ideal_rows else 0
    ok = gram_rank + ideal_rank == len(basis)
    detail = f"gram rank {gram_rank}, ideal rank {ideal_rank}, words {len(basis)}"
    _log.debug("nondegeneracy for %s: %s", nu, detail)
    return IdentityReport(ok, len(basis), None if ok else tuple(nu), detail)

def _words_of_length(datum: Superdatum, bound: Sequence[int], length: int):
    for w in itertools.product(datum.indices, repeat=length):
        if all(c <= b for c, b in zip(weight_of(datum, w), bound)):
            yield w

def _clear_row(row: Sequence[RationalScalar]) -> list[Scalar]:
    """Multiply a row of π-free rational scalars by the product of its denominators."""
    row = [RationalScalar.coerce(x) for x in row]
    common = ONE
    for x in row:
        if not x.is_zero():
            common = common*x.denominator
    return [x.numerator*_inverse_exact(x.denominator, common) if not x.is_zero() else ZERO for x in row]

def _inverse_exact(den: Scalar, common: Scalar) -> Scalar:
    """common / den as a Scalar; den divides common by construction."""
    return (RationalScalar(common)/RationalScalar(den)).as_scalar()
