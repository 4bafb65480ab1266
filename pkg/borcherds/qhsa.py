"""The quiver Hecke superalgebra R(ν) in the normal form x^u τ_ω 1_𝕚.

A basis symbol is x_1^{u_1} ... x_n^{u_n} τ_{k_1} ... τ_{k_r} 1_𝕚, where the
crossing word is the canonical reduced word of ω. Products are straightened
by rewriting generator words with :class:`borcherds.relations.LocalRelations`.
Coefficients are plain integers.
"""

from __future__ import annotations

import itertools
import logging
import re
import threading
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Any, Optional

from borcherds.covering import weight_of, words, kappa_power
from borcherds.linalg import rank_rational
from borcherds.params import DomainError
from borcherds.perm import (
    Move, apply_move, apply_word, canonical_word, crossing_pairs, is_reduced,
    moves_to_end, moves_to_front, perm_of_word, permutations_between,
)
from borcherds.relations import LocalRelations
from borcherds.scalar import Scalar, ZERO, RationalScalar, DimSeries, series_expand
from borcherds.superpoly import CliffordPoly

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence
    from numpy.random import Generator
    from borcherds.datum import Superdatum, QTable
    from borcherds.relations import Token
    from borcherds.superpoly import PolynomialRepresentation

__all__ = (
    'BasisSymbol',
    'QhsaElement',
    'Qhsa',
    'canonical_word',
    'act_on_poly',
    'crossing_polynomial',
    'graded_dim',
    'tau_omega0_eval',
    'independence_check',
    'trivial_functional',
)


_log = logging.getLogger(__name__)


def _taus(word: Iterable[int]) -> tuple[Token, ...]:
    return tuple(('t', k) for k in word)

def _crossings(tokens: Sequence[Token]) -> int:
    return sum(1 for kind, _ in tokens if kind == 't')


@dataclass(frozen=True, order=True)
class BasisSymbol:
    target: tuple[int, ...]
    dots: tuple[int, ...]
    word: tuple[int, ...]
    source: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.source)

    def tokens(self) -> tuple[Token, ...]:
        dots = tuple(('x', k) for k, e in enumerate(self.dots) for _ in range(e))
        return dots + _taus(self.word)

    def perm(self) -> tuple[int, ...]:
        return perm_of_word(self.word, self.size)

    def degree(self, datum: Superdatum) -> int:
        deg = sum(2*datum.r(self.target[k])*u for k, u in enumerate(self.dots))
        for a, b in crossing_pairs(self.perm()):
            deg -= datum.dot(self.source[a], self.source[b])
        return deg

    def parity(self, datum: Superdatum) -> int:
        par = sum(datum.parity(self.target[k])*u for k, u in enumerate(self.dots))
        for a, b in crossing_pairs(self.perm()):
            par += datum.parity(self.source[a])*datum.parity(self.source[b])
        return par % 2

    def bidegree(self, datum: Superdatum) -> tuple[int, int]:
        return self.degree(datum), self.parity(datum)


class QhsaElement:
    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[BasisSymbol, int] | Iterable[tuple[BasisSymbol, int]] = ()):
        acc: dict[BasisSymbol, int] = defaultdict(int)
        items = terms.items() if hasattr(terms, 'items') else terms
        for symbol, coeff in items:
            acc[symbol] += coeff
        self._terms = {s: c for s, c in acc.items() if c}

    @property
    def terms(self) -> Mapping[BasisSymbol, int]:
        return self._terms

    def items(self) -> list[tuple[BasisSymbol, int]]:
        return sorted(self._terms.items())

    def coefficient(self, symbol: BasisSymbol) -> int:
        return self._terms.get(symbol, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def bidegrees(self, datum: Superdatum) -> set[tuple[int, int]]:
        return {s.bidegree(datum) for s in self._terms}

    def scale(self, coeff: int) -> QhsaElement:
        return QhsaElement((s, c*coeff) for s, c in self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QhsaElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> QhsaElement:
        return self.scale(-1)

    def __add__(self, other: QhsaElement) -> QhsaElement:
        return QhsaElement(itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: QhsaElement) -> QhsaElement:
        return self + (-other)

    def __repr__(self) -> str:
        return f'QhsaElement({self.items()})'


_TERM = re.compile(r'^(?:(-?\d+)\*)?(.*)$')
_FACTOR = re.compile(r'^(x|t)\((\d+)\)(?:\^(\d+))?$|^e\(([^)]*)\)$')


class Qhsa:
    """Straightening multiplication in R(ν) for a fixed superdatum and Q-table.

    Normal forms of generator words are cached; the cache is shared between
    threads."""

    def __init__(self, datum: Superdatum, qtable: QTable):
        self.datum = datum
        self.qtable = qtable
        self.relations = LocalRelations(datum, qtable)
        self._cache: dict[tuple, QhsaElement] = {}
        self._lock = threading.Lock()

    ## Straightening

    def normalize(self, tokens: Sequence[Token], source: Sequence[int]) -> QhsaElement:
        """Normal form of the generator word ``tokens`` applied to 1_source."""
        tokens, source = tuple(tokens), tuple(source)
        with self._lock:
            cached = self._cache.get((tokens, source))
        if cached is not None:
            return cached
        work: dict[tuple[Token, ...], int] = defaultdict(int)
        work[tokens] = 1
        result: dict[BasisSymbol, int] = defaultdict(int)
        steps = 0
        while work:
            current = max(work, key=lambda w: (_crossings(w), len(w), w))
            coeff = work.pop(current)
            if not coeff:
                continue
            steps += 1
            rewrite = self._rewrite(current, source)
            if rewrite is None:
                sign, symbol = self._symbol(current, source)
                result[symbol] += sign*coeff
                continue
            for c, new in rewrite:
                work[new] += c*coeff
        element = QhsaElement(result)
        _log.debug("normalized %d tokens over %s in %d steps", len(tokens), source, steps)
        with self._lock:
            self._cache[tokens, source] = element
        return element

    def _rewrite(self, tokens: tuple[Token, ...], source: tuple[int, ...]) -> Optional[list[tuple[int, tuple[Token, ...]]]]:
        for p in range(len(tokens) - 1):
            if tokens[p][0] == 't' and tokens[p + 1][0] == 'x':
                label = apply_word([k for kind, k in tokens[p + 2:] if kind == 't'], source)
                rhs = self.relations.exchange(label, tokens[p][1], tokens[p + 1][1])
                return [(c, tokens[:p] + new + tokens[p + 2:]) for c, new in rhs]
        split = next((p for p, (kind, _) in enumerate(tokens) if kind == 't'), len(tokens))
        dots, word = tokens[:split], tuple(k for _, k in tokens[split:])
        n = len(source)
        if not is_reduced(word, n):
            return self._reduce(dots, word, source)
        canon = canonical_word(perm_of_word(word, n))
        if word != canon:
            return self._canonicalize(dots, word, canon, source)
        return None

    def _move(self, dots: tuple[Token, ...], word: tuple[int, ...], move: Move, source: tuple[int, ...]):
        pos = move.pos
        new = apply_move(word, move)
        if move.kind == 'commute':
            label = apply_word(word[pos + 2:], source)
            return self.relations.crossing_sign(label, word[pos], word[pos + 1]), new, []
        label = apply_word(word[pos + 3:], source)
        a, b = word[pos], word[pos + 1]
        sign = 1 if a < b else -1
        head, tail = dots + _taus(word[:pos]), _taus(word[pos + 3:])
        corrections = [(sign*c, head + x + tail) for c, x in self.relations.braid_correction(label, min(a, b))]
        return 1, new, corrections

    def _reduce(self, dots, word, source):
        n = len(source)
        p = max(p for p in range(len(word)) if not is_reduced(word[p:], n))
        offset = p + 1
        sign, out = 1, []
        for move in moves_to_front(word[offset:], word[p]):
            s, word, corrections = self._move(dots, word, Move(move.kind, move.pos + offset), source)
            out.extend((sign*c, tokens) for c, tokens in corrections)
            sign *= s
        label = apply_word(word[p + 2:], source)
        for c, x in self.relations.tau_square(label, word[p]):
            out.append((sign*c, dots + _taus(word[:p]) + x + _taus(word[p + 2:])))
        return out

    def _canonicalize(self, dots, word, canon, source):
        sign, out = 1, []
        while word != canon:
            pos = max(q for q in range(len(word)) if word[q] != canon[q])
            for move in moves_to_end(word[:pos + 1], canon[pos]):
                s, word, corrections = self._move(dots, word, move, source)
                out.extend((sign*c, tokens) for c, tokens in corrections)
                sign *= s
        out.append((sign, dots + _taus(word)))
        return out

    def _symbol(self, tokens: tuple[Token, ...], source: tuple[int, ...]) -> tuple[int, BasisSymbol]:
        ks = [k for kind, k in tokens if kind == 'x']
        word = tuple(k for kind, k in tokens if kind == 't')
        target = apply_word(word, source)
        sign = 1
        for a, b in itertools.combinations(range(len(ks)), 2):
            if ks[a] > ks[b]:
                sign *= self.relations.dot_sign(target, ks[a], ks[b])
        dots = tuple(ks.count(k) for k in range(len(source)))
        return sign, BasisSymbol(target, dots, word, source)

    ## Elements

    def word_element(self, tokens: Sequence[Token], source: Sequence[int], coeff: int = 1) -> QhsaElement:
        return self.normalize(tokens, source).scale(coeff)

    def idempotent(self, label: Sequence[int]) -> QhsaElement:
        label = tuple(label)
        return QhsaElement({BasisSymbol(label, (0,)*len(label), (), label): 1})

    def dot(self, k: int, label: Sequence[int]) -> QhsaElement:
        return self.normalize((('x', k),), label)

    def crossing(self, k: int, label: Sequence[int]) -> QhsaElement:
        return self.normalize((('t', k),), label)

    def generators(self, nu: Sequence[int]) -> list[QhsaElement]:
        """x_k 1_𝕚 and τ_k 1_𝕚 over every 𝕚 of weight ν."""
        result = []
        for label in words(nu):
            n = len(label)
            result.extend(self.dot(k, label) for k in range(n))
            result.extend(self.crossing(k, label) for k in range(n - 1))
        return result

    def mult(self, a: QhsaElement, b: QhsaElement) -> QhsaElement:
        """ab, acting as a after b; symbols with mismatched idempotents give 0."""
        total: dict[BasisSymbol, int] = defaultdict(int)
        for sa, ca in a.terms.items():
            for sb, cb in b.terms.items():
                if sb.target != sa.source:
                    continue
                for symbol, c in self.normalize(sa.tokens() + sb.tokens(), sb.source).terms.items():
                    total[symbol] += ca*cb*c
        return QhsaElement(total)

    def basis(self, nu: Sequence[int], max_dot: int, source: Optional[Sequence[int]] = None) -> list[BasisSymbol]:
        """Basis symbols with every u_k ≤ max_dot, optionally with a fixed source."""
        sources = [tuple(source)] if source is not None else words(nu)
        result = []
        for src in sources:
            n = len(src)
            for perm in itertools.permutations(range(n)):
                word = canonical_word(perm)
                target = apply_word(word, src)
                for dots in itertools.product(range(max_dot + 1), repeat=n):
                    result.append(BasisSymbol(target, dots, word, src))
        return sorted(result)

    def random_element(self, rng: Generator, nu: Sequence[int], max_dot: int = 2, size: int = 3) -> QhsaElement:
        symbols = self.basis(nu, max_dot)
        picks = rng.choice(len(symbols), size=min(size, len(symbols)), replace=False)
        return QhsaElement((symbols[int(p)], int(rng.integers(-3, 4)) or 1) for p in sorted(picks))

    ## ν = n·i

    def e_idempotent(self, i: int, n: int) -> QhsaElement:
        """e_{i,n} = (−1)^{C(n,3)p(i)} x_1^{n−1} ... x_{n−1} τ_{ω0} 1_{i^n}"""
        if not self.datum.is_real(i):
            raise DomainError(f"vertex {self.datum.name_of(i)} is imaginary")
        label = (i,)*n
        word = canonical_word(tuple(reversed(range(n))))
        sign = -1 if comb(n, 3)*self.datum.parity(i) % 2 else 1
        dots = tuple(n - 1 - k for k in range(n))
        return QhsaElement({BasisSymbol(label, dots, word, label): sign})

    def center_probe(self, nu: Sequence[int], candidate: QhsaElement) -> bool:
        """Whether ``candidate`` commutes with every generator of R(ν)."""
        for g in self.generators(nu):
            if self.mult(candidate, g) != self.mult(g, candidate):
                return False
        return True

    def is_idempotent(self, e: QhsaElement) -> bool:
        return self.mult(e, e) == e

    ## Text

    def format(self, element: QhsaElement) -> str:
        if element.is_zero():
            return '0'
        parts = []
        for symbol, c in element.items():
            factors = [str(c)]
            for k, e in enumerate(symbol.dots):
                if e == 1:
                    factors.append(f'x({k + 1})')
                elif e:
                    factors.append(f'x({k + 1})^{e}')
            factors.extend(f't({k + 1})' for k in symbol.word)
            factors.append('e(' + ' '.join(self.datum.name_of(i) for i in symbol.source) + ')')
            parts.append('*'.join(factors))
        return ' + '.join(parts)

    def parse(self, text: str) -> QhsaElement:
        """Read ``coef*x(k)^e*t(k)*e(i j)`` terms joined by ``+``; any generator order is normalized."""
        text = text.strip()
        if text == '0':
            return QhsaElement()
        total = QhsaElement()
        for term in text.split(' + '):
            match = _TERM.match(term.strip())
            coeff = int(match.group(1)) if match.group(1) else 1
            factors = match.group(2).split('*')
            tokens: list[Token] = []
            source = None
            for pos, factor in enumerate(factors):
                found = _FACTOR.match(factor.strip())
                if not found:
                    raise ValueError(f"cannot read factor {factor!r} in {term!r}")
                if found.group(4) is not None:
                    if pos != len(factors) - 1:
                        raise ValueError(f"the idempotent must come last in {term!r}")
                    source = tuple(self.datum.index(name) for name in found.group(4).split())
                    continue
                k = int(found.group(2)) - 1
                power = int(found.group(3)) if found.group(3) else 1
                tokens.extend([(found.group(1), k)]*power)
            if source is None:
                raise ValueError(f"term {term!r} has no idempotent e(...)")
            for kind, k in tokens:
                if not 0 <= k < len(source) - (kind == 't'):
                    raise ValueError(f"{kind}({k + 1}) is out of range for e({' '.join(map(str, source))})")
            total = total + self.word_element(tokens, source, coeff)
        return total


## Polynomial representation

def act_on_poly(
        rep: PolynomialRepresentation,
        element: QhsaElement,
        f: CliffordPoly | Mapping[tuple[int, ...], CliffordPoly],
) -> dict[tuple[int, ...], CliffordPoly]:
    """element·f in 𝒫_ν, as a map from labels to nonzero components."""
    components = {f.label: f} if isinstance(f, CliffordPoly) else dict(f)
    result: dict[tuple[int, ...], CliffordPoly] = {}
    for symbol, coeff in element.items():
        g = components.get(symbol.source)
        if g is None:
            continue
        image = rep.apply(symbol.tokens(), g).scale(coeff)
        result[image.label] = result[image.label] + image if image.label in result else image
    return {label: g for label, g in result.items() if not g.is_zero()}


## Graded dimensions

def crossing_polynomial(datum: Superdatum, target: Sequence[int], source: Sequence[int]) -> Scalar:
    """Σ over ω with ω(source) = target of π^{p(τ_ω)} q^{deg(τ_ω)}."""
    total = ZERO
    for perm in permutations_between(source, target):
        deg = par = 0
        for a, b in crossing_pairs(perm):
            deg -= datum.dot(source[a], source[b])
            par += datum.parity(source[a])*datum.parity(source[b])
        total = total + Scalar.monomial(1, deg, odd=bool(par % 2))
    return total

def graded_dim(datum: Superdatum, target: Sequence[int], source: Sequence[int], order: int) -> DimSeries:
    """dim^π_q 1_target R(ν) 1_source up to q^order."""
    if weight_of(datum, target) != weight_of(datum, source):
        return DimSeries(order)
    value = RationalScalar(crossing_polynomial(datum, target, source))*kappa_power(datum, weight_of(datum, source))
    return series_expand(value, order)


## Checks on R(n·i)

def tau_omega0_eval(rep: PolynomialRepresentation, i: int, n: int) -> Fraction:
    """Constant term of τ_{ω0} applied to x_1^{n−1} ... x_{n−1}·1."""
    label = (i,)*n
    f = CliffordPoly.one(rep.datum, label)
    dots = tuple(('x', k) for k in range(n) for _ in range(n - 1 - k))
    f = rep.apply(dots, f)
    f = rep.apply(_taus(canonical_word(tuple(reversed(range(n))))), f)
    blank = (0,)*n
    return f.coefficient((blank, blank, ()))

def _test_inputs(rep: PolynomialRepresentation, label: tuple[int, ...], bound: int) -> list[CliffordPoly]:
    datum = rep.datum
    n = len(label)
    one = CliffordPoly.one(datum, label)
    z_slots = [k for k in range(n) if datum.is_imaginary(label[k])]
    result = []
    for ys in itertools.product(range(bound + 1), repeat=n):
        for zs in itertools.product(range(bound + 1), repeat=len(z_slots)):
            f = one
            for k, e in enumerate(ys):
                for _ in range(e):
                    f = rep.x(k, f)
            for k, e in zip(z_slots, zs):
                step = f.gen('z', k)
                if f.parities[k]:
                    step = f.gen('c', k)*step
                for _ in range(e):
                    f = step*f
            result.append(f)
    return result

def independence_check(qhsa: Qhsa, rep: PolynomialRepresentation, source: Sequence[int], max_dot: int) -> bool:
    """Whether the basis symbols out of 1_source with u_k ≤ max_dot act linearly independently."""
    source = tuple(source)
    n = len(source)
    nu = weight_of(qhsa.datum, source)
    symbols = qhsa.basis(nu, max_dot, source=source)
    inputs = _test_inputs(rep, source, n - 1)
    images = []
    columns: dict[tuple, int] = {}
    for symbol in symbols:
        row: dict[int, Fraction] = {}
        for p, f in enumerate(inputs):
            g = rep.apply(symbol.tokens(), f)
            for key, c in g.terms.items():
                col = columns.setdefault((p, g.label, key), len(columns))
                row[col] = c
        images.append(row)
    matrix = [[row.get(col, Fraction(0)) for col in range(len(columns))] for row in images]
    rank = rank_rational(matrix)
    _log.info("independence over %s: rank %d of %d symbols", source, rank, len(symbols))
    return rank == len(symbols)

def trivial_functional(element: QhsaElement) -> int:
    """The character of the module on which dots and crossings act by zero."""
    return sum(c for s, c in element.terms.items() if not s.word and not any(s.dots))
