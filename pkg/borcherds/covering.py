"""The free twisted bialgebra over Q(q)^π, its coproduct and the bilinear form {,}_π.

Elements are linear combinations of words in the generators θ_i, a word
being a tuple of vertex indices. The form of two words of weight ν factors
as κ^ν times a Laurent polynomial; the polynomial part is computed by
peeling the leftmost letter and kept in a bounded LRU cache keyed by datum.
"""

from __future__ import annotations

import logging
import functools
from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING

from sympy.utilities.iterables import multiset_permutations

from borcherds.params import DomainError, BoundError
from borcherds.scalar import (
    Scalar, RationalScalar, ONE, ZERO, invert, quantum_factorial, parity_exponent,
)

if TYPE_CHECKING:
    from typing import Any, Optional
    from collections.abc import Iterable, Iterator, Mapping, Sequence
    from borcherds.datum import Superdatum
    from borcherds.json import Json

__all__ = (
    'Weight',
    'FreeElement',
    'TensorElement',
    'words',
    'parse_weight',
    'format_weight',
    'weight_of',
    'height',
    'generator',
    'word_element',
    'mult',
    'coproduct',
    'rho_component',
    'iterated_rho',
    'twist',
    'kappa',
    'kappa_power',
    'WORD_FORM_CACHE_SIZE',
    'word_form',
    'form',
    'tensor_pairing',
    'Gram',
    'gram',
    'divided_power',
    'serre_element',
    'commutator_element',
    'radical_generators',
    'RadicalCertificate',
    'radical_member',
    'specialize',
    'DEFAULT_MAX_HEIGHT',
)


_log = logging.getLogger(__name__)

DEFAULT_MAX_HEIGHT = 6

Weight = tuple[int, ...]


## Weights and words

def weight_of(datum: Superdatum, word: Sequence[int]) -> Weight:
    counts = [0]*datum.size
    for letter in word:
        counts[letter] += 1
    return tuple(counts)

def height(nu: Sequence[int]) -> int:
    return sum(nu)

def words(nu: Sequence[int]) -> list[tuple[int, ...]]:
    """Seq(ν) in lexicographic order."""
    letters = [i for i, count in enumerate(nu) for _ in range(count)]
    if not letters:
        return [()]
    return [tuple(w) for w in multiset_permutations(letters)]

def parse_weight(datum: Superdatum, text: str) -> Weight:
    """Parse ``"i:2,j:1"``; a bare name counts once."""
    counts = [0]*datum.size
    text = text.strip()
    if not text or text == '0':
        return tuple(counts)
    for part in text.split(','):
        name, _, mult = part.strip().partition(':')
        try:
            counts[datum.index(name.strip())] += int(mult) if mult else 1
        except (KeyError, ValueError) as err:
            raise ValueError(f"malformed weight {text!r}: {err}") from None
    return tuple(counts)

def format_weight(datum: Superdatum, nu: Sequence[int]) -> str:
    parts = [f"{datum.name_of(i)}:{count}" for i, count in enumerate(nu) if count]
    return ",".join(parts) if parts else "0"

def _word_parity(datum: Superdatum, word: Iterable[int]) -> int:
    return sum(datum.parity(c) for c in word) % 2

def _word_dot(datum: Superdatum, i: int, word: Iterable[int]) -> int:
    return sum(datum.dot(i, c) for c in word)

def twist(datum: Superdatum, left: Sequence[int], right: Sequence[int]) -> Scalar:
    """π^{p(x)p(y)} q^{−|x|·|y|} for words x = left, y = right."""
    parity = _word_parity(datum, left)*_word_parity(datum, right) % 2
    exponent = -sum(datum.dot(a, b) for a in left for b in right)
    return Scalar.monomial(1, exponent, odd=bool(parity))


## Elements

class FreeElement:
    """A finite combination of words with RationalScalar coefficients."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[tuple[int, ...], Any] | Iterable[tuple[tuple[int, ...], Any]] = ()):
        items = terms.items() if hasattr(terms, 'items') else terms
        clean: dict[tuple[int, ...], RationalScalar] = {}
        for word, coeff in items:
            word = tuple(word)
            coeff = RationalScalar.coerce(coeff)
            if word in clean:
                coeff = clean[word] + coeff
            if coeff.is_zero():
                clean.pop(word, None)
            else:
                clean[word] = coeff
        self._terms = clean

    @property
    def terms(self) -> dict[tuple[int, ...], RationalScalar]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], RationalScalar]]:
        return sorted(self._terms.items())

    def coefficient(self, word: Sequence[int]) -> RationalScalar:
        return self._terms.get(tuple(word), RationalScalar(ZERO))

    def is_zero(self) -> bool:
        return not self._terms

    def weights(self, datum: Superdatum) -> set[Weight]:
        return {weight_of(datum, w) for w in self._terms}

    def weight(self, datum: Superdatum) -> Weight:
        """The common weight; raises DomainError for inhomogeneous elements."""
        found = self.weights(datum)
        if len(found) > 1:
            raise DomainError(f"element is not homogeneous: weights {sorted(found)}")
        if not found:
            return (0,)*datum.size
        return found.pop()

    def scale(self, coeff: Any) -> FreeElement:
        coeff = RationalScalar.coerce(coeff)
        return FreeElement((w, c*coeff) for w, c in self._terms.items())

    def map_coefficients(self, func) -> FreeElement:
        return FreeElement((w, func(c)) for w, c in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self - other).is_zero()

    def __add__(self, other: FreeElement) -> FreeElement:
        return FreeElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> FreeElement:
        return self.scale(-1)

    def __sub__(self, other: FreeElement) -> FreeElement:
        return self + (-other)

    def __mul__(self, other: Any) -> FreeElement:
        if isinstance(other, FreeElement):
            return mult(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> FreeElement:
        return self.scale(other)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{''.join(map(str, w)) or '1'}" for w, c in self.items())
        return f'<{self.__class__.__name__}: {body or "0"}>'

    def to_json(self, datum: Optional[Superdatum] = None) -> Json:
        def name(word):
            if datum is None:
                return list(word)
            return [datum.name_of(c) for c in word]
        return [{'word': name(w), 'coeff': str(c)} for w, c in self.items()]


class TensorElement:
    """A combination of word pairs, multiplied with the twisted rule."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[tuple[tuple[int, ...], tuple[int, ...]], Any] | Iterable = ()):
        items = terms.items() if hasattr(terms, 'items') else terms
        clean: dict[tuple[tuple[int, ...], tuple[int, ...]], RationalScalar] = {}
        for (left, right), coeff in items:
            key = (tuple(left), tuple(right))
            coeff = RationalScalar.coerce(coeff)
            if key in clean:
                coeff = clean[key] + coeff
            if coeff.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = coeff
        self._terms = clean

    def items(self) -> list:
        return sorted(self._terms.items())

    def coefficient(self, left: Sequence[int], right: Sequence[int]) -> RationalScalar:
        return self._terms.get((tuple(left), tuple(right)), RationalScalar(ZERO))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        keys = set(self._terms) | set(other._terms)
        return all(self.coefficient(*k) == other.coefficient(*k) for k in keys)

    def __add__(self, other: TensorElement) -> TensorElement:
        return TensorElement(list(self._terms.items()) + list(other._terms.items()))

    def mult(self, datum: Superdatum, other: TensorElement) -> TensorElement:
        """(x₁⊗x₂)(y₁⊗y₂) = π^{p(x₂)p(y₁)} q^{−|x₂|·|y₁|} x₁y₁⊗x₂y₂"""
        result = []
        for (x1, x2), a in self._terms.items():
            for (y1, y2), b in other._terms.items():
                result.append(((x1 + y1, x2 + y2), a*b*twist(datum, x2, y1)))
        return TensorElement(result)

    def apply_left(self, func) -> TensorElement:
        """Apply a linear map on words to the left factor."""
        result = []
        for (left, right), coeff in self._terms.items():
            for word, c in func(left).items():
                result.append(((word, right), coeff*c))
        return TensorElement(result)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{''.join(map(str, a)) or '1'}⊗{''.join(map(str, b)) or '1'}" for (a, b), c in self.items())
        return f'<{self.__class__.__name__}: {body or "0"}>'


def generator(i: int) -> FreeElement:
    return FreeElement({(i,): 1})

def word_element(word: Sequence[int], coeff: Any = 1) -> FreeElement:
    return FreeElement({tuple(word): coeff})


## Algebra structure

def mult(x: FreeElement, y: FreeElement) -> FreeElement:
    return FreeElement((a + b, c*d) for a, c in x.items() for b, d in y.items())

def _word_coproduct(datum: Superdatum, word: tuple[int, ...]) -> TensorElement:
    result = TensorElement({((), ()): 1})
    for letter in word:
        factor = TensorElement({((letter,), ()): 1, ((), (letter,)): 1})
        result = result.mult(datum, factor)
    return result

def coproduct(datum: Superdatum, x: FreeElement) -> TensorElement:
    """ρ_π as an algebra map into the twisted tensor square."""
    result = TensorElement()
    for word, coeff in x.items():
        term = _word_coproduct(datum, word)
        result = result + TensorElement((k, c*coeff) for k, c in term.items())
    return result

def _rho_word(datum: Superdatum, i: int, word: tuple[int, ...]) -> list[tuple[tuple[int, ...], Scalar]]:
    terms = []
    for pos, letter in enumerate(word):
        if letter == i:
            prefix = word[:pos]
            terms.append((prefix + word[pos + 1:], twist(datum, (i,), prefix)))
    return terms

def rho_component(datum: Superdatum, i: int, x: FreeElement) -> FreeElement:
    """The coefficient of θ_i⊗(·) in ρ_π(x)."""
    x.weight(datum)
    return FreeElement(
        (rest, coeff*scalar)
        for word, coeff in x.items()
        for rest, scalar in _rho_word(datum, i, word)
    )

def iterated_rho(datum: Superdatum, seq: Sequence[int], x: FreeElement) -> RationalScalar:
    """Peel the letters of seq off x from the left; {θ_seq, x} = κ^ν times the result."""
    for i in seq:
        x = rho_component(datum, i, x)
    return x.coefficient(())


## The form

# entries of the word form cache shared by every datum
WORD_FORM_CACHE_SIZE = 1 << 16

def kappa(datum: Superdatum, i: int) -> RationalScalar:
    """κ_i = (1 − π^{p(i)} q_i²)⁻¹"""
    return invert(ONE - Scalar.monomial(1, 2*datum.r(i), odd=bool(datum.parity(i))))

def kappa_power(datum: Superdatum, nu: Sequence[int]) -> RationalScalar:
    result = RationalScalar(ONE)
    for i, count in enumerate(nu):
        for _ in range(count):
            result = result*kappa(datum, i)
    return result

@functools.lru_cache(maxsize=WORD_FORM_CACHE_SIZE)
def word_form(datum: Superdatum, w: tuple[int, ...], v: tuple[int, ...]) -> Scalar:
    """{θ_w, θ_v}_π / κ^ν for words of weight ν (0 when weights differ)."""
    if len(w) != len(v):
        return ZERO
    if not w:
        return ONE
    i, rest = w[0], w[1:]
    total = ZERO
    for shorter, scalar in _rho_word(datum, i, v):
        total = total + scalar*word_form(datum, rest, shorter)
    return total

def form(datum: Superdatum, x: FreeElement, y: FreeElement) -> RationalScalar:
    total = RationalScalar(ZERO)
    by_weight: dict[Weight, RationalScalar] = defaultdict(lambda: RationalScalar(ZERO))
    for w, a in x.items():
        nu = weight_of(datum, w)
        for v, b in y.items():
            if weight_of(datum, v) != nu:
                continue
            value = word_form(datum, w, v)
            if not value.is_zero():
                by_weight[nu] = by_weight[nu] + a*b*value
    for nu, value in sorted(by_weight.items()):
        total = total + value*kappa_power(datum, nu)
    return total

def tensor_pairing(datum: Superdatum, x: TensorElement, y: TensorElement) -> RationalScalar:
    """{a⊗b, c⊗d} = {a,c}{b,d}"""
    total = RationalScalar(ZERO)
    for (a, b), s in x.items():
        for (c, d), t in y.items():
            if len(a) != len(c) or len(b) != len(d):
                continue
            left = form(datum, word_element(a), word_element(c))
            if left.is_zero():
                continue
            total = total + s*t*left*form(datum, word_element(b), word_element(d))
    return total


@dataclass(frozen=True)
class Gram:
    weight: Weight
    words: tuple[tuple[int, ...], ...]
    reduced: tuple[tuple[Scalar, ...], ...]
    scale: RationalScalar

    def entry(self, a: int, b: int) -> RationalScalar:
        return self.scale*self.reduced[a][b]

    def rows(self) -> list[list[RationalScalar]]:
        n = len(self.words)
        return [[self.entry(a, b) for b in range(n)] for a in range(n)]

    def to_json(self, datum: Superdatum) -> Json:
        return {
            'weight': format_weight(datum, self.weight),
            'words': ["".join(datum.name_of(c) for c in w) for w in self.words],
            'scale': str(self.scale),
            'matrix': [[str(x) for x in row] for row in self.reduced],
        }


def _check_height(nu: Sequence[int], max_height: int) -> None:
    if height(nu) > max_height:
        raise BoundError('height', height(nu), max_height)

def gram(datum: Superdatum, nu: Sequence[int], max_height: int = DEFAULT_MAX_HEIGHT) -> Gram:
    """G[w][w′] = {θ_w, θ_w′}_π over Seq(ν), stored as κ^ν times Laurent polynomials."""
    _check_height(nu, max_height)
    basis = tuple(words(nu))
    rows = tuple(tuple(word_form(datum, w, v) for v in basis) for w in basis)
    _log.debug("gram matrix of size %d for weight %s", len(basis), nu)
    return Gram(tuple(nu), basis, rows, kappa_power(datum, nu))


## Serre elements and the radical

def divided_power(datum: Superdatum, i: int, a: int) -> FreeElement:
    """θ_i^{(a)} = θ_i^a / [a]_i^π!"""
    fact = quantum_factorial(a, datum.r(i), datum.parity(i))
    return word_element((i,)*a, invert(fact))

def serre_element(datum: Superdatum, i: int, j: int, n: int = 1) -> FreeElement:
    """Σ_{a+b=1−n a_ij} (−1)^a π^{p(a;i,j;n)} θ_i^{(a)} θ_j^n θ_i^{(b)}"""
    if not datum.is_real(i):
        raise DomainError(f"Serre elements need a real vertex, {datum.name_of(i)} is imaginary")
    if i == j:
        raise DomainError("Serre elements need two distinct vertices")
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    m = 1 - n*datum.a(i, j)
    middle = word_element((j,)*n)
    result = FreeElement()
    for a in range(m + 1):
        sign = -1 if a % 2 else 1
        pi = Scalar.monomial(sign, 0, odd=bool(parity_exponent(a, datum.parity(i), datum.parity(j), n)))
        term = mult(mult(divided_power(datum, i, a), middle), divided_power(datum, i, m - a))
        result = result + term.scale(pi)
    return result

def commutator_element(datum: Superdatum, i: int, j: int) -> FreeElement:
    """θ_iθ_j − π^{p(i)p(j)} θ_jθ_i for i·j = 0."""
    if datum.dot(i, j) != 0:
        raise DomainError(f"commutator elements need i·j = 0, got {datum.dot(i, j)}")
    pi = Scalar.monomial(1, 0, odd=bool(datum.parity(i)*datum.parity(j)))
    return word_element((i, j)) - word_element((j, i), pi)

def radical_generators(datum: Superdatum, max_height: int) -> list[tuple[str, FreeElement]]:
    """Serre and commutator elements of height at most max_height, labelled."""
    found = []
    for i in datum.indices:
        for j in datum.indices:
            if datum.dot(i, j) == 0 and i <= j:
                found.append((f"comm.{datum.name_of(i)}{datum.name_of(j)}", commutator_element(datum, i, j)))
            if i == j or not datum.is_real(i):
                continue
            n = 1
            while (1 - n*datum.a(i, j)) + n <= max_height:
                if datum.a(i, j) == 0 and n > 1:
                    break
                found.append((f"serre.{datum.name_of(i)}{datum.name_of(j)}.{n}", serre_element(datum, i, j, n)))
                n += 1
    return found


@dataclass(frozen=True)
class RadicalCertificate:
    member: bool
    weight: Weight
    product: tuple[RationalScalar, ...]
    rho_agrees: bool

    def __bool__(self) -> bool:
        return self.member


def radical_member(datum: Superdatum, x: FreeElement, max_height: int = DEFAULT_MAX_HEIGHT) -> RadicalCertificate:
    """Whether gram(ν) annihilates x, cross-checked with iterated rho components."""
    nu = x.weight(datum)
    _check_height(nu, max_height)
    if x.is_zero():
        return RadicalCertificate(True, nu, (), True)
    g = gram(datum, nu, max_height)
    product = []
    for row in g.reduced:
        total = RationalScalar(ZERO)
        for v, value in zip(g.words, row):
            coeff = x.coefficient(v)
            if not value.is_zero() and not coeff.is_zero():
                total = total + coeff*value
        product.append(total*g.scale)
    member = all(p.is_zero() for p in product)
    by_rho = all(iterated_rho(datum, w, x).is_zero() for w in g.words)
    if by_rho != member:
        _log.warning("radical criteria disagree for weight %s", nu)
    return RadicalCertificate(member, nu, tuple(product), by_rho == member)


def specialize(value: Any, sign: int) -> Any:
    """Evaluate π ↦ ±1 in a scalar, form value or element."""
    if isinstance(value, FreeElement):
        return value.map_coefficients(lambda c: c.specialize(sign))
    return value.specialize(sign)
