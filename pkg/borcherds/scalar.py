"""Exact arithmetic in Z^π[q, q⁻¹] and Q(q)^π.

A :class:`Scalar` is a Laurent polynomial in ``q`` whose coefficients are
``a + π b`` with integers ``a, b`` and ``π² = 1``. A :class:`RationalScalar`
is a fraction with a π-free denominator, and a :class:`DimSeries` is a
truncated Laurent series used for graded dimensions.
"""

from __future__ import annotations

import re
import logging
from fractions import Fraction
from collections.abc import Mapping
from typing import TYPE_CHECKING

import sympy

from borcherds.params import DomainError, ExpansionError

if TYPE_CHECKING:
    from typing import Any, Optional, Union
    from collections.abc import Iterable, Iterator
    Coercible = Union['Scalar', int]

__all__ = (
    'Scalar',
    'RationalScalar',
    'DimSeries',
    'quantum_int',
    'quantum_factorial',
    'quantum_binom',
    'parity_exponent',
    'invert',
    'series_expand',
    'format_scalar',
    'parse_scalar',
    'Q',
    'PI',
    'ONE',
    'ZERO',
)


_log = logging.getLogger(__name__)

_q = sympy.Symbol('q')


class Scalar:
    """Element of Z^π[q, q⁻¹], stored as ``{exponent: (even, odd)}``."""

    __slots__ = ('_terms', '_key')

    def __init__(self, terms: Mapping[int, tuple[int, int]] | Iterable[tuple[int, tuple[int, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for n, (a, b) in items:
            if a or b:
                clean[int(n)] = (int(a), int(b))
        self._terms = clean
        self._key = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, coeff: int = 1, exponent: int = 0, odd: bool = False) -> Scalar:
        if odd:
            return cls({exponent: (0, coeff)})
        return cls({exponent: (coeff, 0)})

    @classmethod
    def coerce(cls, value: Coercible) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int):
            return cls.monomial(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Scalar")

    @property
    def terms(self) -> Mapping[int, tuple[int, int]]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, tuple[int, int]]]:
        return iter(self._key)

    def coefficient(self, exponent: int) -> tuple[int, int]:
        return self._terms.get(exponent, (0, 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_pi_free(self) -> bool:
        return all(b == 0 for a, b in self._terms.values())

    @property
    def min_exponent(self) -> Optional[int]:
        return self._key[0][0] if self._key else None

    @property
    def max_exponent(self) -> Optional[int]:
        return self._key[-1][0] if self._key else None

    def even_part(self) -> Scalar:
        return Scalar((n, (a, 0)) for n, (a, b) in self._key)

    def odd_part(self) -> Scalar:
        """The π¹ coefficient as a π-free Scalar."""
        return Scalar((n, (b, 0)) for n, (a, b) in self._key)

    def conjugate(self) -> Scalar:
        """a + πb ↦ a − πb"""
        return Scalar((n, (a, -b)) for n, (a, b) in self._key)

    def bar(self) -> Scalar:
        """q ↦ q⁻¹ with π fixed."""
        return Scalar((-n, ab) for n, ab in self._key)

    def shift(self, k: int) -> Scalar:
        return Scalar((n + k, ab) for n, ab in self._key)

    def specialize(self, sign: int) -> Scalar:
        if sign not in (1, -1):
            raise ValueError(f"π can only be specialized to ±1, got {sign}")
        return Scalar((n, (a + sign*b, 0)) for n, (a, b) in self._key)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = Scalar.monomial(other)
        if isinstance(other, Scalar):
            return self._key == other._key
        if isinstance(other, RationalScalar):
            return RationalScalar(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __neg__(self) -> Scalar:
        return Scalar((n, (-a, -b)) for n, (a, b) in self._key)

    def __add__(self, other: Coercible) -> Scalar:
        if isinstance(other, RationalScalar):
            return NotImplemented
        other = Scalar.coerce(other)
        result = dict(self._terms)
        for n, (a, b) in other._key:
            a0, b0 = result.get(n, (0, 0))
            result[n] = (a0 + a, b0 + b)
        return Scalar(result)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> Scalar:
        if isinstance(other, RationalScalar):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Coercible) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: Coercible) -> Scalar:
        if isinstance(other, RationalScalar):
            return NotImplemented
        if isinstance(other, int):
            return Scalar((n, (a*other, b*other)) for n, (a, b) in self._key)
        other = Scalar.coerce(other)
        result: dict[int, tuple[int, int]] = {}
        for n1, (a1, b1) in self._key:
            for n2, (a2, b2) in other._key:
                a0, b0 = result.get(n1 + n2, (0, 0))
                result[n1 + n2] = (a0 + a1*a2 + b1*b2, b0 + a1*b2 + b1*a2)
        return Scalar(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> Scalar:
        if power < 0:
            raise ValueError("negative powers of a Scalar are not Scalars, use invert()")
        result = ONE
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f'<{self.__class__.__name__}: {format_scalar(self)}>'

    ## sympy bridge, π-free only
    def _to_poly(self, low: int) -> sympy.Poly:
        coeffs = {(n - low,): a for n, (a, b) in self._key}
        return sympy.Poly.from_dict(coeffs, _q, domain=sympy.ZZ) if coeffs else sympy.Poly(0, _q, domain=sympy.ZZ)

    @classmethod
    def _from_poly(cls, poly: sympy.Poly, low: int) -> Scalar:
        return cls((monom[0] + low, (int(coeff), 0)) for monom, coeff in poly.terms())


ZERO = Scalar()
ONE = Scalar.monomial(1)
PI = Scalar.monomial(1, odd=True)
Q = Scalar.monomial(1, 1)


def _reduce(num: Scalar, den: Scalar) -> tuple[Scalar, Scalar]:
    if den.is_zero():
        raise ZeroDivisionError("denominator is zero")
    if num.is_zero():
        return ZERO, ONE

    even, odd = num.even_part(), num.odd_part()
    if den.max_exponent != den.min_exponent or abs(den.coefficient(den.min_exponent)[0]) != 1:
        low = min(s.min_exponent for s in (even, odd, den) if not s.is_zero())
        polys = [s._to_poly(low) for s in (even, odd, den)]
        g = sympy.gcd(sympy.gcd(polys[2], polys[0]), polys[1])
        if g.degree() > 0 or abs(g.LC()) != 1:
            even, odd, den = (Scalar._from_poly(p.exquo(g), low) for p in polys)

    # normalize: lowest denominator exponent 0, positive leading coefficient
    shift = -den.min_exponent
    sign = 1 if den.coefficient(den.max_exponent)[0] > 0 else -1
    num = (even + odd*PI).shift(shift)*sign
    den = den.shift(shift)*sign
    return num, den


class RationalScalar:
    """Element of Q(q)^π as ``numerator / denominator`` with a π-free denominator."""

    __slots__ = ('numerator', 'denominator')

    numerator: Scalar
    denominator: Scalar

    def __init__(self, numerator: Coercible, denominator: Coercible = 1):
        numerator = Scalar.coerce(numerator)
        denominator = Scalar.coerce(denominator)
        if not denominator.is_pi_free():
            # clear π from the denominator by conjugate multiplication
            conj = denominator.conjugate()
            numerator = numerator*conj
            denominator = denominator*conj
        self.numerator, self.denominator = _reduce(numerator, denominator)

    @classmethod
    def coerce(cls, value: Any) -> RationalScalar:
        if isinstance(value, RationalScalar):
            return value
        return cls(Scalar.coerce(value))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_scalar(self) -> bool:
        return self.denominator == ONE

    def as_scalar(self) -> Scalar:
        if not self.is_scalar():
            raise DomainError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def specialize(self, sign: int) -> RationalScalar:
        return RationalScalar(self.numerator.specialize(sign), self.denominator)

    def conjugate(self) -> RationalScalar:
        return RationalScalar(self.numerator.conjugate(), self.denominator)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, (int, Scalar)):
            other = RationalScalar(other)
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return self.numerator*other.denominator == other.numerator*self.denominator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __neg__(self) -> RationalScalar:
        return RationalScalar(-self.numerator, self.denominator)

    def __add__(self, other: Any) -> RationalScalar:
        other = RationalScalar.coerce(other)
        if self.denominator == other.denominator:
            return RationalScalar(self.numerator + other.numerator, self.denominator)
        return RationalScalar(
            self.numerator*other.denominator + other.numerator*self.denominator,
            self.denominator*other.denominator,
        )

    __radd__ = __add__

    def __sub__(self, other: Any) -> RationalScalar:
        return self + (-RationalScalar.coerce(other))

    def __rsub__(self, other: Any) -> RationalScalar:
        return RationalScalar.coerce(other) - self

    def __mul__(self, other: Any) -> RationalScalar:
        other = RationalScalar.coerce(other)
        return RationalScalar(self.numerator*other.numerator, self.denominator*other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> RationalScalar:
        other = RationalScalar.coerce(other)
        return self*other.denominator*invert(other.numerator)

    def __rtruediv__(self, other: Any) -> RationalScalar:
        return RationalScalar.coerce(other)/self

    def __str__(self) -> str:
        if self.is_scalar():
            return format_scalar(self.numerator)
        return f"({format_scalar(self.numerator)})/({format_scalar(self.denominator)})"

    def __repr__(self) -> str:
        return f'<{self.__class__.__name__}: {self}>'


class DimSeries:
    """Truncated Laurent series with coefficients in Z^π.

    Coefficients are exact for every exponent up to and including ``order``;
    ``low`` is a bound below which all coefficients vanish."""

    __slots__ = ('order', 'low', '_coeffs')

    def __init__(self, order: int, coefficients: Mapping[int, tuple[int, int]] = (), low: Optional[int] = None):
        self.order = int(order)
        coeffs = {
            n: (int(a), int(b)) for n, (a, b) in dict(coefficients).items()
            if n <= order and (a or b)
        }
        self._coeffs = coeffs
        bound = min(coeffs, default=self.order + 1)
        self.low = bound if low is None else min(low, bound)

    @classmethod
    def from_scalar(cls, value: Scalar, order: int) -> DimSeries:
        return cls(order, value.terms)

    def coefficient(self, exponent: int) -> tuple[int, int]:
        if exponent > self.order:
            raise ValueError(f"coefficient of q^{exponent} is beyond the truncation order {self.order}")
        return self._coeffs.get(exponent, (0, 0))

    def items(self) -> Iterator[tuple[int, tuple[int, int]]]:
        return iter(sorted(self._coeffs.items()))

    def to_scalar(self) -> Scalar:
        return Scalar(self._coeffs)

    def truncate(self, order: int) -> DimSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return DimSeries(order, self._coeffs, self.low)

    def specialize(self, sign: int) -> DimSeries:
        return DimSeries(self.order, self.to_scalar().specialize(sign).terms, self.low)

    def _check_order(self, other: DimSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} != {other.order}")

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, DimSeries):
            return NotImplemented
        self._check_order(other)
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, tuple(sorted(self._coeffs.items()))))

    def __neg__(self) -> DimSeries:
        return DimSeries(self.order, (-self.to_scalar()).terms, self.low)

    def __add__(self, other: DimSeries) -> DimSeries:
        order = min(self.order, other.order)
        total = self.truncate(order).to_scalar() + other.truncate(order).to_scalar()
        return DimSeries(order, total.terms, min(self.low, other.low))

    def __sub__(self, other: DimSeries) -> DimSeries:
        return self + (-other)

    def __mul__(self, other: Any) -> DimSeries:
        if isinstance(other, (int, Scalar)):
            other = Scalar.coerce(other)
            if other.is_zero():
                return DimSeries(self.order)
            order = self.order + other.min_exponent
            return DimSeries(order, (self.to_scalar()*other).terms, self.low + other.min_exponent)
        # a coefficient is exact as long as every factor it uses is known
        order = min(self.order + other.low, other.order + self.low)
        product = self.to_scalar()*other.to_scalar()
        return DimSeries(order, product.terms, self.low + other.low)

    __rmul__ = __mul__

    def __str__(self) -> str:
        body = format_scalar(self.to_scalar())
        return f"{body} + O(q^{self.order + 1})"

    def __repr__(self) -> str:
        return f'<{self.__class__.__name__}: {self}>'


## Quantum numbers

def quantum_int(n: int, r: int = 1, p: int = 0) -> Scalar:
    """[n] = ((π^p q^r)^n − q^{−rn}) / (π^p q^r − q^{−r}) as a Laurent polynomial."""
    if n < 0:
        raise DomainError(f"quantum integers are defined for n >= 0, got {n}")
    terms = {}
    for k in range(n):
        odd = (p*(n - 1 - k)) % 2
        exponent = r*(n - 1 - 2*k)
        terms[exponent] = (0, 1) if odd else (1, 0)
    return Scalar(terms)

def quantum_factorial(n: int, r: int = 1, p: int = 0) -> Scalar:
    result = ONE
    for k in range(1, n + 1):
        result = result*quantum_int(k, r, p)
    return result

def quantum_binom(n: int, k: int, r: int = 1, p: int = 0) -> Scalar:
    """Two-parameter binomial from [n+1,k] = q^{−rk}[n,k] + (π^p q^r)^{n+1−k}[n,k−1]."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"quantum binomial needs 0 <= k <= n, got n={n}, k={k}")
    row = [ONE]
    for m in range(n):
        nxt = []
        for j in range(m + 2):
            value = ZERO
            if j <= m:
                value = value + row[j].shift(-r*j)
            if j >= 1:
                value = value + row[j - 1]*_twisted_power(m + 1 - j, r, p)
            nxt.append(value)
        row = nxt
    return row[k]

def _twisted_power(e: int, r: int, p: int) -> Scalar:
    return Scalar.monomial(1, r*e, odd=bool((p*e) % 2))

def parity_exponent(a: int, i_parity: int, j_parity: int, n: int = 1) -> int:
    """p(a;i,j;n) = a·n·p(i)p(j) + a(a−1)/2·p(i) mod 2"""
    if a < 0:
        raise DomainError(f"parity exponent needs a >= 0, got {a}")
    return (a*n*i_parity*j_parity + (a*(a - 1)//2)*i_parity) % 2


## Inversion and expansion

def invert(x: Coercible) -> RationalScalar:
    """1/x with a π-free denominator: (A − πB)/(A² − B²)."""
    x = Scalar.coerce(x)
    if x.is_zero():
        raise ZeroDivisionError("cannot invert zero")
    even, odd = x.even_part(), x.odd_part()
    norm = even*even - odd*odd
    if norm.is_zero():
        raise ZeroDivisionError(f"{x} is a zero divisor in Q(q)^π")
    return RationalScalar(x.conjugate(), norm)

def series_expand(x: Any, order: int) -> DimSeries:
    """Expand x as a Laurent series in q up to q^order by long division."""
    x = RationalScalar.coerce(x)
    den = x.denominator
    shift = den.min_exponent
    d = [den.coefficient(shift + t)[0] for t in range(den.max_exponent - shift + 1)]
    num = x.numerator.shift(-shift)
    if num.is_zero():
        return DimSeries(order)

    exact = abs(d[0]) == 1
    low = num.min_exponent
    result: dict[int, tuple[Any, Any]] = {}
    for n in range(low, order + 1):
        a, b = num.coefficient(n)
        for t in range(1, len(d)):
            ra, rb = result.get(n - t, (0, 0))
            a -= d[t]*ra
            b -= d[t]*rb
        if exact:
            result[n] = (a*d[0], b*d[0])
        else:
            result[n] = (Fraction(a, d[0]), Fraction(b, d[0]))

    if not exact:
        for n, (a, b) in result.items():
            if Fraction(a).denominator != 1 or Fraction(b).denominator != 1:
                raise ExpansionError(
                    f"expansion of {x} has a non-integral coefficient at q^{n}; "
                    f"the denominator's lowest coefficient {d[0]} is not a unit",
                    exponent=n,
                )
        result = {n: (int(a), int(b)) for n, (a, b) in result.items()}
    return DimSeries(order, result, low)


## Canonical text

_TERM = re.compile(r'^(-?\d+)\*(pi\*)?q\^(-?\d+)$')

def format_scalar(x: Scalar) -> str:
    parts = []
    for n, (a, b) in sorted(x.items(), key=lambda item: -item[0]):
        if a:
            parts.append(f"{a}*q^{n}")
        if b:
            parts.append(f"{b}*pi*q^{n}")
    return " + ".join(parts) if parts else "0"

def parse_scalar(text: str) -> Scalar:
    text = text.strip()
    if text == "0":
        return ZERO
    result = ZERO
    for part in text.split(" + "):
        match = _TERM.match(part.strip())
        if match is None:
            raise ValueError(f"malformed scalar term: {part!r}")
        coeff, pi, exponent = match.groups()
        result = result + Scalar.monomial(int(coeff), int(exponent), odd=pi is not None)
    return result
