"""Clifford-polynomial superalgebras 𝒫_𝕚 and the polynomial representation of R(ν).

An element of 𝒫_𝕚 is stored in normal order y^a z^b c_S: the exponent vectors
``a`` and ``b`` and the increasing tuple ``S`` form the monomial key. Positions
are 0-based. The y's and z's commute, the c's anticommute and square to 1,
and c_k passes y_k or z_k with sign (−1)^{p(i_k)}.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, NamedTuple, Optional

from borcherds.covering import words
from borcherds.params import DomainError, InexactDivisionError, LabelError
from borcherds.relations import LocalRelations

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence
    from borcherds.datum import Superdatum, QTable, GammaTable
    from borcherds.relations import Token

__all__ = (
    'Key',
    'CliffordPoly',
    'normal_form',
    'x_element',
    'monomials',
    'sn_act',
    'symbol_swap',
    'tilde_s',
    'approx_s',
    'bar_s',
    'sigma',
    'sigma_prime',
    'sigma_closed_form',
    'divide',
    'Generator',
    'idempotent',
    'dot_generator',
    'crossing_generator',
    'PolynomialRepresentation',
    'RelationFailure',
    'RelationReport',
    'verify_relations',
    'sigma_identities_check',
)


_log = logging.getLogger(__name__)


Key = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def _mul_keys(parities: Sequence[int], left: Key, right: Key) -> tuple[int, Key]:
    a1, b1, s1 = left
    a2, b2, s2 = right
    sign = 1
    for k in s1:
        if parities[k] and (a2[k] + b2[k]) % 2:
            sign = -sign
    if sum(1 for s in s1 for t in s2 if s > t) % 2:
        sign = -sign
    a = tuple(x + y for x, y in zip(a1, a2))
    b = tuple(x + y for x, y in zip(b1, b2))
    return sign, (a, b, tuple(sorted(set(s1) ^ set(s2))))


class CliffordPoly:
    __slots__ = ('label', 'parities', '_terms')

    def __init__(self, label: Sequence[int], parities: Sequence[int], terms: Mapping[Key, Any] | Iterable[tuple[Key, Any]] = ()):
        self.label = tuple(label)
        self.parities = tuple(parities)
        if len(self.label) != len(self.parities):
            raise ValueError("label and parities differ in length")
        acc: dict[Key, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def zero(cls, datum: Superdatum, label: Sequence[int]) -> CliffordPoly:
        return cls(label, [datum.parity(i) for i in label])

    @classmethod
    def one(cls, datum: Superdatum, label: Sequence[int]) -> CliffordPoly:
        return cls.zero(datum, label).constant(1)

    @property
    def size(self) -> int:
        return len(self.label)

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def items(self) -> list[tuple[Key, Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_pure_y(self) -> bool:
        return all(not any(b) and not s for (a, b, s) in self._terms)

    def _like(self, terms: Mapping[Key, Any] | Iterable[tuple[Key, Any]]) -> CliffordPoly:
        return CliffordPoly(self.label, self.parities, terms)

    def _blank(self) -> tuple[int, ...]:
        return (0,)*self.size

    def constant(self, coeff: Any = 1) -> CliffordPoly:
        return self._like({(self._blank(), self._blank(), ()): coeff})

    def monomial(self, a: Sequence[int] = None, b: Sequence[int] = None, s: Sequence[int] = (), coeff: Any = 1) -> CliffordPoly:
        a = tuple(a) if a is not None else self._blank()
        b = tuple(b) if b is not None else self._blank()
        if list(s) != sorted(set(s)):
            raise ValueError(f"Clifford indices must be increasing, got {tuple(s)}")
        return self._like({(a, b, tuple(s)): coeff})

    def gen(self, kind: str, k: int) -> CliffordPoly:
        """The generator y_k, z_k or c_k of the same 𝒫_𝕚."""
        unit = tuple(1 if m == k else 0 for m in range(self.size))
        if kind == 'y':
            return self.monomial(a=unit)
        if kind == 'z':
            return self.monomial(b=unit)
        if kind == 'c':
            return self.monomial(s=(k,))
        raise ValueError(f"unknown generator {kind!r}")

    def _check(self, other: CliffordPoly) -> None:
        if other.label != self.label:
            raise LabelError(f"cannot combine polynomials over {self.label} and {other.label}")

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, CliffordPoly):
            return NotImplemented
        return self.label == other.label and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.label, frozenset(self._terms.items())))

    def __neg__(self) -> CliffordPoly:
        return self._like((key, -c) for key, c in self._terms.items())

    def __add__(self, other: CliffordPoly) -> CliffordPoly:
        self._check(other)
        return self._like(itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: CliffordPoly) -> CliffordPoly:
        return self + (-other)

    def scale(self, coeff: Any) -> CliffordPoly:
        coeff = Fraction(coeff)
        return self._like((key, c*coeff) for key, c in self._terms.items())

    def __mul__(self, other: Any) -> CliffordPoly:
        if not isinstance(other, CliffordPoly):
            return self.scale(other)
        self._check(other)
        result: dict[Key, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                sign, key = _mul_keys(self.parities, k1, k2)
                result[key] = result.get(key, Fraction(0)) + sign*c1*c2
        return self._like(result)

    def __rmul__(self, other: Any) -> CliffordPoly:
        return self.scale(other)

    def bidegrees(self, datum: Superdatum) -> set[tuple[int, int]]:
        """(degree, parity) of every term; |y_k| = 2r, |z_k| = r·a_ii, c_k odd of degree 0."""
        result = set()
        for a, b, s in self._terms:
            deg = 0
            for k, i in enumerate(self.label):
                deg += 2*datum.r(i)*a[k] + datum.r(i)*datum.a(i, i)*b[k]
            result.add((deg, len(s) % 2))
        return result

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for (a, b, s), c in self.items():
            factors = []
            for name, exps in (('y', a), ('z', b)):
                for k, e in enumerate(exps):
                    if e == 1:
                        factors.append(f'{name}{k + 1}')
                    elif e:
                        factors.append(f'{name}{k + 1}^{e}')
            factors.extend(f'c{k + 1}' for k in s)
            parts.append('*'.join([str(c)] + factors))
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f'CliffordPoly({self.label}, {self})'


def normal_form(datum: Superdatum, label: Sequence[int], factors: Iterable[tuple[str, int]], coeff: Any = 1) -> CliffordPoly:
    """Normal-ordered value of a product of y, z and c generators given in any order."""
    result = CliffordPoly.one(datum, label).scale(coeff)
    for kind, k in factors:
        result = result*result.gen(kind, k)
    return result

def x_element(datum: Superdatum, label: Sequence[int], k: int) -> CliffordPoly:
    """c_k^{p(i_k)} y_k, the image of the dot on strand k."""
    f = CliffordPoly.one(datum, label)
    dot = f.gen('y', k)
    return f.gen('c', k)*dot if f.parities[k] else dot

def _bounded(slots: Sequence[int], n: int, budget: int) -> Iterator[tuple[int, ...]]:
    for exps in itertools.product(range(budget + 1), repeat=len(slots)):
        if sum(exps) <= budget:
            vector = [0]*n
            for k, e in zip(slots, exps):
                vector[k] = e
            yield tuple(vector)

def monomials(datum: Superdatum, label: Sequence[int], degree_bound: int, full: bool = False) -> list[CliffordPoly]:
    """Monomials y^a z^b c_S of total polynomial degree at most ``degree_bound``.

    Unless ``full``, z's appear only on imaginary strands and c's only on odd
    strands; that span is stable under the action of R(ν)."""
    label = tuple(label)
    n = len(label)
    base = CliffordPoly.zero(datum, label)
    z_slots = list(range(n)) if full else [k for k, i in enumerate(label) if datum.is_imaginary(i)]
    c_slots = list(range(n)) if full else [k for k, i in enumerate(label) if datum.parity(i)]
    return _monomials_of(base, z_slots, c_slots, degree_bound)

def _monomials_of(base: CliffordPoly, z_slots: Sequence[int], c_slots: Sequence[int], degree_bound: int) -> list[CliffordPoly]:
    n = base.size
    result = []
    for b in _bounded(z_slots, n, degree_bound):
        for a in _bounded(range(n), n, degree_bound - sum(b)):
            for size in range(len(c_slots) + 1):
                for s in itertools.combinations(c_slots, size):
                    result.append(base.monomial(a, b, s))
    return result


## Symmetric group actions

def _swap(vector: tuple[int, ...], k: int) -> tuple[int, ...]:
    v = list(vector)
    v[k], v[k + 1] = v[k + 1], v[k]
    return tuple(v)

def _swap_clifford(s: tuple[int, ...], k: int) -> tuple[int, tuple[int, ...]]:
    sign = -1 if k in s and k + 1 in s else 1
    mapped = sorted(k + 1 if m == k else k if m == k + 1 else m for m in s)
    return sign, tuple(mapped)

def sn_act(k: int, f: CliffordPoly) -> CliffordPoly:
    """s_k: 𝒫_𝕚 → 𝒫_{s_k 𝕚}, relabelling every index k ↔ k+1."""
    terms = []
    for (a, b, s), c in f.terms.items():
        sign, s2 = _swap_clifford(s, k)
        terms.append(((_swap(a, k), _swap(b, k), s2), sign*c))
    return CliffordPoly(_swap(f.label, k), _swap(f.parities, k), terms)

def symbol_swap(k: int, f: CliffordPoly) -> CliffordPoly:
    """s_k on symbols with the label fixed."""
    if f.parities[k] != f.parities[k + 1]:
        raise DomainError(f"strands {k} and {k + 1} of {f.label} differ in parity")
    terms = []
    for (a, b, s), c in f.terms.items():
        sign, s2 = _swap_clifford(s, k)
        terms.append(((_swap(a, k), _swap(b, k), s2), sign*c))
    return f._like(terms)

def _require_even_pair(k: int, f: CliffordPoly) -> None:
    if f.label[k] != f.label[k + 1] or f.parities[k]:
        raise DomainError(f"strands {k}, {k + 1} of {f.label} are not an equal even pair")

def tilde_s(k: int, f: CliffordPoly) -> CliffordPoly:
    _require_even_pair(k, f)
    return f._like(((_swap(a, k), b, s), c) for (a, b, s), c in f.terms.items())

def approx_s(k: int, f: CliffordPoly) -> CliffordPoly:
    _require_even_pair(k, f)
    return f._like(((_swap(a, k), _swap(b, k), s), c) for (a, b, s), c in f.terms.items())

def bar_s(k: int, f: CliffordPoly) -> CliffordPoly:
    """y_k ↦ −y_{k+1}, y_{k+1} ↦ −y_k."""
    terms = []
    for (a, b, s), c in f.terms.items():
        sign = -1 if (a[k] + a[k + 1]) % 2 else 1
        terms.append(((_swap(a, k), b, s), sign*c))
    return f._like(terms)


## Divided differences

def divide(f: CliffordPoly, k: int, var: str, lam: int) -> CliffordPoly:
    """The exact quotient h with f = (v_k − lam·v_{k+1})·h for v = y or z."""
    idx = {'y': 0, 'z': 1}[var]

    def bump(key: Key, pos: int, step: int) -> Key:
        parts = list(key)
        vector = list(parts[idx])
        vector[pos] += step
        parts[idx] = tuple(vector)
        return tuple(parts)

    rem = dict(f.terms)
    quotient: dict[Key, Fraction] = {}
    while rem:
        key = max(rem, key=lambda key: (key[idx][k], key))
        if key[idx][k] == 0:
            raise InexactDivisionError(f"{f} is not divisible by {var}{k + 1} - ({lam})*{var}{k + 2}")
        c = rem.pop(key)
        lower = bump(key, k, -1)
        quotient[lower] = quotient.get(lower, Fraction(0)) + c
        shifted = bump(lower, k + 1, 1)
        value = rem.get(shifted, Fraction(0)) + lam*c
        if value:
            rem[shifted] = value
        else:
            rem.pop(shifted, None)
    return f._like(quotient)


## σ operators

def _split(vector: tuple[int, ...], k: int) -> tuple[tuple[int, ...], int, int]:
    v = list(vector)
    alpha, beta = v[k], v[k + 1]
    v[k] = v[k + 1] = 0
    return tuple(v), alpha, beta

def _sigma_power(f: CliffordPoly, k: int, var: str, alpha: int, beta: int, memo: dict) -> CliffordPoly:
    """σ of v_k^alpha v_{k+1}^beta by the Leibniz rule, v = y for σ and z for σ′."""
    if (alpha, beta) in memo:
        return memo[alpha, beta]
    if alpha == beta == 0:
        return f._like(())
    one = f.constant(1)
    cc = f.gen('c', k)*f.gen('c', k + 1)
    if alpha > 0:
        rest = _power(f, var, k, alpha - 1, beta)
        result = (-one - cc)*rest + f.gen(var, k + 1)*_sigma_power(f, k, var, alpha - 1, beta, memo)
    else:
        rest = _power(f, var, k, 0, beta - 1)
        result = (one - cc)*rest + f.gen(var, k)*_sigma_power(f, k, var, 0, beta - 1, memo)
    memo[alpha, beta] = result
    return result

def _power(f: CliffordPoly, var: str, k: int, alpha: int, beta: int) -> CliffordPoly:
    exps = [0]*f.size
    exps[k], exps[k + 1] = alpha, beta
    return f.monomial(a=exps) if var == 'y' else f.monomial(b=exps)

def _require_equal_parity(k: int, f: CliffordPoly) -> None:
    if f.parities[k] != f.parities[k + 1]:
        raise DomainError(f"strands {k} and {k + 1} of {f.label} differ in parity")

def sigma(k: int, f: CliffordPoly) -> CliffordPoly:
    """σ_k: kills z's and c's, σ_k(y_k) = −1 − c_k c_{k+1}, σ_k(y_{k+1}) = 1 − c_k c_{k+1}."""
    _require_equal_parity(k, f)
    memo: dict = {}
    result = f._like(())
    blank = f._blank()
    for (a, b, s), c in f.terms.items():
        rest, alpha, beta = _split(a, k)
        left = f.monomial(a=rest)
        right = f._like({(blank, b, s): 1})
        result = result + (left*_sigma_power(f, k, 'y', alpha, beta, memo)*right).scale(c)
    return result

def sigma_prime(k: int, f: CliffordPoly) -> CliffordPoly:
    """σ′_k: the same recursion on z's; kills y's and c's."""
    _require_equal_parity(k, f)
    memo: dict = {}
    result = f._like(())
    for (a, b, s), c in f.terms.items():
        rest, alpha, beta = _split(b, k)
        left = f.monomial(a=_swap(a, k))*f.monomial(b=rest)
        right = f.monomial(s=s)
        result = result + (left*_sigma_power(f, k, 'z', alpha, beta, memo)*right).scale(c)
    return result

def sigma_closed_form(k: int, f: CliffordPoly) -> CliffordPoly:
    """(s f − f)/(y_k − y_{k+1}) + c_k c_{k+1}·(s̄ f − f)/(y_k + y_{k+1}) for pure-y f."""
    if not f.is_pure_y():
        raise DomainError("closed form applies to polynomials in the y's only")
    swapped = f._like(((_swap(a, k), b, s), c) for (a, b, s), c in f.terms.items())
    first = divide(swapped - f, k, 'y', 1)
    second = divide(bar_s(k, f) - f, k, 'y', -1)
    return first + f.gen('c', k)*f.gen('c', k + 1)*second


## Generator action

class Generator(NamedTuple):
    kind: str  # 'e', 'x' or 't'
    label: tuple[int, ...]
    k: int = -1

    def __str__(self) -> str:
        if self.kind == 'e':
            return f'1_{self.label}'
        return f'{self.kind}_{self.k + 1},{self.label}'


def idempotent(label: Sequence[int]) -> Generator:
    return Generator('e', tuple(label))

def dot_generator(k: int, label: Sequence[int]) -> Generator:
    return Generator('x', tuple(label), k)

def crossing_generator(k: int, label: Sequence[int]) -> Generator:
    return Generator('t', tuple(label), k)


class PolynomialRepresentation:
    """R(ν) acting on 𝒫_ν = ⊕ 𝒫_𝕚 through dots c_k^{p} y_k and the crossing case table."""

    def __init__(self, datum: Superdatum, qtable: QTable, gamma: GammaTable):
        self.datum = datum
        self.qtable = qtable
        self.gamma = gamma

    def x(self, k: int, f: CliffordPoly) -> CliffordPoly:
        dot = f.gen('y', k)
        if f.parities[k]:
            dot = f.gen('c', k)*dot
        return dot*f

    def _half_c(self, f: CliffordPoly, k: int) -> CliffordPoly:
        return (f.gen('c', k) - f.gen('c', k + 1)).scale(Fraction(1, 2))

    def tau(self, k: int, f: CliffordPoly) -> CliffordPoly:
        datum = self.datum
        i, j = f.label[k], f.label[k + 1]
        if i == j:
            real = datum.is_real(i)
            if not datum.parity(i):
                if real:
                    return divide(f - tilde_s(k, f), k, 'y', 1)
                return divide(tilde_s(k, f) - approx_s(k, f), k, 'z', 1)
            if real:
                return self._half_c(f, k)*sigma(k, f)
            return self._half_c(f, k)*sigma_prime(k, f)
        g = sn_act(k, f)
        if datum.precedes(i, j):
            # Q_ij(x_{k+1}, x_k) on the swapped label, u-powers leftmost
            total = g._like(())
            for alpha, beta, t in self.qtable.terms(i, j):
                h = g
                for _ in range(beta):
                    h = self.x(k, h)
                for _ in range(alpha):
                    h = self.x(k + 1, h)
                total = total + h.scale(t)
            g = total
        if datum.parity(i)*datum.parity(j):
            g = self._half_c(g, k)*g
        return g.scale(1/self.gamma[i, j])

    def apply(self, tokens: Sequence[Token], f: CliffordPoly) -> CliffordPoly:
        """Apply a generator word, rightmost token first."""
        for kind, k in reversed(tokens):
            f = self.x(k, f) if kind == 'x' else self.tau(k, f)
        return f

    def act(self, gen: Generator, f: CliffordPoly) -> CliffordPoly:
        label = tuple(gen.label)
        if f.label != label:
            target = _swap(label, gen.k) if gen.kind == 't' else label
            return CliffordPoly.zero(self.datum, target)
        if gen.kind == 'e':
            return f
        if gen.kind == 'x':
            return self.x(gen.k, f)
        if gen.kind == 't':
            return self.tau(gen.k, f)
        raise ValueError(f"unknown generator kind {gen.kind!r}")


## Relation checks

@dataclass(frozen=True)
class RelationFailure:
    relation: str
    label: tuple[int, ...]
    monomial: str
    difference: str

    def to_json(self):
        return {
            'relation': self.relation,
            'label': list(self.label),
            'monomial': self.monomial,
            'difference': self.difference,
        }


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    checked: int
    failures: tuple[RelationFailure, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    @property
    def witness(self) -> Optional[RelationFailure]:
        return self.failures[0] if self.failures else None


def _relation_instances(relations: LocalRelations, label: Sequence[int]) -> Iterator[tuple[str, tuple, list]]:
    n = len(label)
    dot = lambda m: ('x', m)
    tau = lambda k: ('t', k)
    for k, l in itertools.combinations(range(n), 2):
        yield f'dots x{k + 1} x{l + 1}', (dot(k), dot(l)), [(relations.dot_sign(label, k, l), (dot(l), dot(k)))]
    for k in range(n - 1):
        for l in range(n - 1):
            if abs(k - l) > 1:
                yield f'distant t{k + 1} t{l + 1}', (tau(k), tau(l)), [(relations.crossing_sign(label, k, l), (tau(l), tau(k)))]
        for m in range(n):
            yield f'exchange t{k + 1} x{m + 1}', (tau(k), dot(m)), relations.exchange(label, k, m)
        yield f'square t{k + 1}', (tau(k), tau(k)), relations.tau_square(label, k)
    for k in range(n - 2):
        rhs = [(1, (tau(k + 1), tau(k), tau(k + 1)))] + relations.braid_correction(label, k)
        yield f'braid t{k + 1}', (tau(k), tau(k + 1), tau(k)), rhs

def _evaluate(rep: PolynomialRepresentation, rewrite: list, f: CliffordPoly) -> Optional[CliffordPoly]:
    total = None
    for coeff, tokens in rewrite:
        term = rep.apply(tokens, f).scale(coeff)
        total = term if total is None else total + term
    return total

def verify_relations(
        rep: PolynomialRepresentation,
        nu: Sequence[int],
        degree_bound: int = 4,
        labels: Optional[Iterable[Sequence[int]]] = None,
        max_failures: int = 10,
) -> RelationReport:
    """Check every local relation as an operator identity on the monomials of each 𝒫_𝕚."""
    relations = LocalRelations(rep.datum, rep.qtable)
    labels = [tuple(x) for x in labels] if labels is not None else words(nu)
    checked = 0
    failures = []
    for label in labels:
        instances = list(_relation_instances(relations, label))
        for f in monomials(rep.datum, label, degree_bound):
            for name, lhs, rhs in instances:
                checked += 1
                left = rep.apply(lhs, f)
                right = _evaluate(rep, rhs, f)
                diff = left if right is None else left - right
                if not diff.is_zero():
                    _log.warning("relation %s fails on %s over %s", name, f, label)
                    failures.append(RelationFailure(name, label, str(f), str(diff)))
                    if len(failures) >= max_failures:
                        return RelationReport(False, checked, tuple(failures))
    _log.debug("checked %d relation instances, %d failures", checked, len(failures))
    return RelationReport(not failures, checked, tuple(failures))

def sigma_identities_check(label: Sequence[int], degree_bound: int = 6) -> RelationReport:
    """nilCoxeter relations for σ and σ′, the pure-y closed form, and s_1 σ_2 s_1 = s_2 σ_1 s_2.

    σ and σ′ live on 𝒫, where every c_k anticommutes with y_k and z_k, so the
    check runs with odd parities on every strand whatever the vertices of
    ``label`` are; the label only names the strands in failures."""
    label = tuple(label)
    n = len(label)
    base = CliffordPoly(label, (1,)*n)
    checked = 0
    failures = []

    def record(name: str, f: CliffordPoly, left: CliffordPoly, right: CliffordPoly) -> None:
        nonlocal checked
        checked += 1
        diff = left - right
        if not diff.is_zero():
            failures.append(RelationFailure(name, label, str(f), str(diff)))

    for f in _monomials_of(base, range(n), range(n), degree_bound):
        zero = f._like(())
        for op_name, op in (('sigma', sigma), ('sigma_prime', sigma_prime)):
            for k in range(n - 1):
                record(f'{op_name} square {k + 1}', f, op(k, op(k, f)), zero)
                for l in range(k + 2, n - 1):
                    record(f'{op_name} distant {k + 1},{l + 1}', f, op(k, op(l, f)), op(l, op(k, f)))
            for k in range(n - 2):
                record(f'{op_name} braid {k + 1}', f, op(k, op(k + 1, op(k, f))), op(k + 1, op(k, op(k + 1, f))))
        for k in range(n - 2):
            left = symbol_swap(k, sigma(k + 1, symbol_swap(k, f)))
            right = symbol_swap(k + 1, sigma(k, symbol_swap(k + 1, f)))
            record(f'conjugated sigma {k + 1}', f, left, right)
        if f.is_pure_y():
            for k in range(n - 1):
                record(f'closed form {k + 1}', f, sigma(k, f), sigma_closed_form(k, f))
    return RelationReport(not failures, checked, tuple(failures))
