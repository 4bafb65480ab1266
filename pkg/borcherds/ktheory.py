"""Grothendieck-group numerics: the pairing of projectives, idempotent truncations,
the categorified Serre relation and the Mackey filtration, all as graded dimensions."""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Optional

from borcherds.covering import (
    DEFAULT_MAX_HEIGHT, divided_power, form, height, kappa_power, mult, weight_of, word_element, words,
)
from borcherds.linalg import rank_rational
from borcherds.params import AnomalyError, BoundError, DomainError, IdempotentError
from borcherds.perm import canonical_word, crossing_pairs, permutations_between, shuffle_splits
from borcherds.qhsa import BasisSymbol, QhsaElement, crossing_polynomial, graded_dim
from borcherds.scalar import DimSeries, RationalScalar, Scalar, ZERO, parity_exponent, series_expand

if TYPE_CHECKING:
    from collections.abc import Sequence
    from borcherds.datum import Superdatum
    from borcherds.json import Json
    from borcherds.qhsa import Qhsa

__all__ = (
    'PAIRING_ORIENTATION',
    'series_agree',
    'PairingReport',
    'pairing_check',
    'resolve_orientation',
    'idempotent_trunc_dim',
    'divided_power_shift',
    'induced_idempotent',
    'SerreReport',
    'serre_categorified_check',
    'MackeyReport',
    'mackey_dim_check',
)


_log = logging.getLogger(__name__)


# ([P_𝕚], [P_𝕛]) is matched with {θ_𝕚, θ_𝕛}_π without reversing either sequence
PAIRING_ORIENTATION = 'identity'


def _common(a: DimSeries, b: DimSeries) -> tuple[DimSeries, DimSeries]:
    order = min(a.order, b.order)
    return a.truncate(order), b.truncate(order)

def _agree(a: DimSeries, b: DimSeries) -> bool:
    a, b = _common(a, b)
    return a == b

def series_agree(a: DimSeries, b: DimSeries, sign: Optional[int] = None) -> bool:
    """Equality up to the smaller order, after π ↦ sign when a sign is given."""
    a, b = _common(a, b)
    if sign is not None:
        a, b = a.specialize(sign), b.specialize(sign)
    return a == b

def _orient(seq: Sequence[int], orientation: str) -> tuple[int, ...]:
    if orientation == 'identity':
        return tuple(seq)
    if orientation == 'reversal':
        return tuple(reversed(seq))
    raise ValueError(f"unknown orientation {orientation!r}")


## Pairing

@dataclass(frozen=True)
class PairingReport:
    nu: tuple[int, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    order: int
    lhs: DimSeries
    rhs: DimSeries

    @property
    def ok(self) -> bool:
        return _agree(self.lhs, self.rhs)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> Json:
        return {
            'nu': list(self.nu),
            'left': list(self.left),
            'right': list(self.right),
            'order': self.order,
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
        }


def pairing_check(
        datum: Superdatum,
        left: Sequence[int],
        right: Sequence[int],
        order: int,
        orientation: str = PAIRING_ORIENTATION,
        max_height: int = DEFAULT_MAX_HEIGHT,
) -> PairingReport:
    """dim^π_q 1_left R(ν) 1_right against the series of {θ_left, θ_right}_π."""
    left, right = tuple(left), tuple(right)
    nu = weight_of(datum, left)
    for seq in (left, right):
        if height(weight_of(datum, seq)) > max_height:
            raise BoundError('height', height(weight_of(datum, seq)), max_height)
    lhs = graded_dim(datum, left, right, order)
    value = form(datum, word_element(_orient(left, orientation)), word_element(_orient(right, orientation)))
    rhs = series_expand(value, order)
    report = PairingReport(nu, left, right, order, lhs, rhs)
    if not report.ok:
        _log.warning("pairing mismatch for %s, %s: %s != %s", left, right, lhs, rhs)
    return report

def resolve_orientation(datum: Superdatum, order: int = 8) -> Optional[str]:
    """The first orientation matching every pair of height-two sequences, or None."""
    pairs = []
    for i, j in itertools.combinations_with_replacement(datum.indices, 2):
        nu = [0]*datum.size
        nu[i] += 1
        nu[j] += 1
        seqs = words(nu)
        pairs.extend(itertools.product(seqs, seqs))
    for orientation in ('identity', 'reversal'):
        if all(pairing_check(datum, a, b, order, orientation) for a, b in pairs):
            return orientation
    return None


## Idempotent truncations

def divided_power_shift(datum: Superdatum, i: int, n: int) -> Scalar:
    """q_i^{C(n,2)}: the shift relating 1_𝕜 R e_{i,n} to the form against θ_i^{(n)}."""
    return Scalar.monomial(1, datum.r(i)*comb(n, 2))

def _single_interface(e: QhsaElement) -> tuple[int, ...]:
    sides = {(s.target, s.source) for s in e.terms}
    if len(sides) != 1:
        raise IdempotentError("the idempotent must live in a single 1_𝕚 R 1_𝕚")
    target, source = sides.pop()
    if target != source:
        raise IdempotentError(f"the idempotent maps {source} to {target}")
    return source

def _bounded_symbols(datum: Superdatum, target: tuple[int, ...], source: tuple[int, ...], order: int):
    """Basis symbols 1_target x^u τ_ω 1_source of degree at most ``order``."""
    n = len(source)
    result = []
    for perm in permutations_between(source, target):
        word = canonical_word(perm)
        cross = -sum(datum.dot(source[a], source[b]) for a, b in crossing_pairs(perm))
        budget = order - cross
        if budget < 0:
            continue
        steps = [2*datum.r(target[k]) for k in range(n)]
        for dots in itertools.product(*(range(budget//s + 1) for s in steps)):
            if sum(u*s for u, s in zip(dots, steps)) <= budget:
                result.append(BasisSymbol(target, dots, word, source))
    return sorted(result)

def _recombine(deg: int, plus: int, minus: Fraction) -> tuple[int, int]:
    """(even, odd) dimensions from the π = +1 and π = −1 values at q^deg."""
    if minus.denominator != 1 or abs(minus) > plus or (plus + minus) % 2:
        raise AnomalyError(f"values {plus} at pi=+1 and {minus} at pi=-1 at q^{deg} do not recombine integrally")
    minus = int(minus)
    return (plus + minus)//2, (plus - minus)//2

def idempotent_trunc_dim(qhsa: Qhsa, target: Sequence[int], e: QhsaElement, order: int) -> DimSeries:
    """dim^π_q 1_target R(ν) e up to q^order.

    The map b ↦ b·e is a degree-preserving projection of 1_target R 1_source.
    In each degree its rank gives the value at π = +1 and its supertrace the
    value at π = −1; the two are recombined into even and odd parts."""
    if not qhsa.is_idempotent(e):
        raise IdempotentError(f"{qhsa.format(e)} is not idempotent")
    datum = qhsa.datum
    source = _single_interface(e)
    target = tuple(target)
    if weight_of(datum, target) != weight_of(datum, source):
        return DimSeries(order)
    slices: dict[int, list[BasisSymbol]] = defaultdict(list)
    for symbol in _bounded_symbols(datum, target, source, order):
        slices[symbol.bidegree(datum)[0]].append(symbol)
    coefficients = {}
    for deg, symbols in sorted(slices.items()):
        images = [qhsa.mult(QhsaElement({b: 1}), e) for b in symbols]
        columns = sorted({s for image in images for s in image.terms})
        index = {s: c for c, s in enumerate(columns)}
        rows = []
        for image in images:
            row = [0]*len(columns)
            for s, c in image.terms.items():
                row[index[s]] = c
            rows.append(row)
        plus = rank_rational(rows)
        minus = sum(
            (Fraction(image.terms.get(b, 0))*(-1)**b.parity(datum) for b, image in zip(symbols, images)),
            Fraction(0),
        )
        coefficients[deg] = _recombine(deg, plus, minus)
    _log.debug("truncated dimension of 1_%s R e: %s", target, coefficients)
    return DimSeries(order, coefficients)

def induced_idempotent(qhsa: Qhsa, parts: Sequence[QhsaElement], labels: Sequence[Sequence[int]]) -> QhsaElement:
    """The horizontal concatenation e_1 ⊗ ... ⊗ e_r, placed side by side on the strands."""
    factors = []
    offset = 0
    for part, label in zip(parts, labels):
        shifted = []
        for symbol, coeff in part.terms.items():
            tokens = tuple((kind, k + offset) for kind, k in symbol.tokens())
            shifted.append((tokens, symbol.source, coeff))
        factors.append(shifted)
        offset += len(label)
    total = QhsaElement()
    for combo in itertools.product(*factors):
        tokens = tuple(t for tokens, _, _ in combo for t in tokens)
        source = tuple(i for _, src, _ in combo for i in src)
        coeff = 1
        for _, _, c in combo:
            coeff *= c
        total = total + qhsa.word_element(tokens, source, coeff)
    return total


## Serre relation

@dataclass(frozen=True)
class SerreReport:
    i: int
    j: int
    n: int
    order: int
    rows: tuple[tuple[tuple[int, ...], DimSeries, DimSeries], ...]
    mismatches: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(_agree(even, odd) for _, even, odd in self.rows)

    def __bool__(self) -> bool:
        return self.ok

    def witness(self) -> Optional[str]:
        for label, even, odd in self.rows:
            if not _agree(even, odd):
                return f"{label}: {even} != {odd}"
        return self.mismatches[0] if self.mismatches else None

    def to_json(self) -> Json:
        return {
            'i': self.i,
            'j': self.j,
            'n': self.n,
            'order': self.order,
            'rows': [{'label': list(label), 'even': str(even), 'odd': str(odd)} for label, even, odd in self.rows],
            'mismatches': list(self.mismatches),
        }


def serre_categorified_check(qhsa: Qhsa, i: int, j: int, n: int, order: int, max_height: int = DEFAULT_MAX_HEIGHT) -> SerreReport:
    """Σ_{c even} and Σ_{c odd} of π^{p(c;i,j;n)} dim 1_𝕜 R (e_{i,c} ⊗ 1_{j^n} ⊗ e_{i,m−c}), shifted, agree."""
    datum = qhsa.datum
    if not datum.is_real(i):
        raise DomainError(f"vertex {datum.name_of(i)} is imaginary")
    if i == j:
        raise DomainError("the Serre relation needs two distinct vertices")
    m = 1 - n*datum.a(i, j)
    if m + n > max_height:
        raise BoundError('height', m + n, max_height)
    nu = [0]*datum.size
    nu[i] += m
    nu[j] += n
    ip, jp = datum.parity(i), datum.parity(j)

    idempotents = {}
    elements = {}
    for c in range(m + 1):
        labels = [(i,)*c, (j,)*n, (i,)*(m - c)]
        parts = [qhsa.e_idempotent(i, c), qhsa.idempotent(labels[1]), qhsa.e_idempotent(i, m - c)]
        idempotents[c] = induced_idempotent(qhsa, parts, labels)
        word = word_element((j,)*n)
        elements[c] = mult(mult(divided_power(datum, i, c), word), divided_power(datum, i, m - c))

    rows = []
    mismatches = []
    for label in words(nu):
        sides = [None, None]
        for c in range(m + 1):
            shift = divided_power_shift(datum, i, c)*divided_power_shift(datum, i, m - c)
            trunc = idempotent_trunc_dim(qhsa, label, idempotents[c], order)*shift
            expected = series_expand(form(datum, word_element(label), elements[c]), order)
            if not _agree(trunc, expected):
                mismatches.append(f"{label}, c={c}: {trunc} != {expected}")
            if parity_exponent(c, ip, jp, n):
                trunc = trunc*Scalar.monomial(1, 0, odd=True)
            side = c % 2
            sides[side] = trunc if sides[side] is None else sides[side] + trunc
        even = sides[0] if sides[0] is not None else DimSeries(order)
        odd = sides[1] if sides[1] is not None else DimSeries(order)
        rows.append((label, *_common(even, odd)))
    report = SerreReport(i, j, n, order, tuple(rows), tuple(mismatches))
    if not report.ok:
        _log.warning("categorified Serre check failed: %s", report.witness())
    return report


## Mackey filtration

@dataclass(frozen=True)
class MackeyReport:
    order: int
    rows: tuple[tuple[tuple[int, ...], tuple[int, ...], DimSeries, DimSeries], ...]

    @property
    def ok(self) -> bool:
        return all(_agree(lhs, rhs) for _, _, lhs, rhs in self.rows)

    def __bool__(self) -> bool:
        return self.ok

    def total(self) -> tuple[DimSeries, DimSeries]:
        lhs = rhs = DimSeries(self.order)
        for _, _, a, b in self.rows:
            lhs, rhs = lhs + a, rhs + b
        return lhs, rhs

    def witness(self) -> Optional[str]:
        for k, l, lhs, rhs in self.rows:
            if not _agree(lhs, rhs):
                return f"{k}|{l}: {lhs} != {rhs}"
        return None

    def to_json(self) -> Json:
        return {
            'order': self.order,
            'rows': [
                {'left': list(k), 'right': list(l), 'lhs': str(lhs), 'rhs': str(rhs)}
                for k, l, lhs, rhs in self.rows
            ],
        }


def _shuffle_twist(datum: Superdatum, seq: Sequence[int], chosen: Sequence[int]) -> Scalar:
    """Degree and parity of the minimal shuffle taking (seq|chosen, seq|rest) to seq."""
    chosen = set(chosen)
    deg = par = 0
    for s, t in itertools.product(range(len(seq)), repeat=2):
        if s in chosen and t not in chosen and s > t:
            deg -= datum.dot(seq[s], seq[t])
            par += datum.parity(seq[s])*datum.parity(seq[t])
    return Scalar.monomial(1, deg, odd=bool(par % 2))

def mackey_dim_check(
        datum: Superdatum,
        nu: Sequence[int],
        nu_prime: Sequence[int],
        left: Sequence[int],
        right: Sequence[int],
        order: int,
) -> MackeyReport:
    """Res_{ν,ν′} Ind (P_left ⊗ P_right) against its Mackey filtration, per 1_𝕜 ⊗ 1_𝕝."""
    left, right = tuple(left), tuple(right)
    mu, mu_prime = weight_of(datum, left), weight_of(datum, right)
    total = [a + b for a, b in zip(mu, mu_prime)]
    if [a + b for a, b in zip(nu, nu_prime)] != total:
        raise DomainError(f"weights {tuple(nu)} + {tuple(nu_prime)} do not match {mu} + {mu_prime}")
    kappa = kappa_power(datum, total)
    size = datum.size
    rows = []
    for k in words(nu):
        for l in words(nu_prime):
            lhs = crossing_polynomial(datum, k + l, left + right)
            rhs = ZERO
            for lam in itertools.product(*(range(c + 1) for c in nu_prime)):
                rest = [a - b for a, b in zip(mu, lam)]
                if min(rest) < 0:
                    continue
                kap = [a - b + c for a, b, c in zip(nu, mu, lam)]
                twist = Scalar.monomial(
                    1, -datum.weight_dot(lam, kap),
                    odd=bool(datum.weight_parity(lam)*datum.weight_parity(kap)),
                )
                for s, s_rest in shuffle_splits(k, rest, size):
                    for t, t_rest in shuffle_splits(l, lam, size):
                        a = tuple(k[p] for p in s) + tuple(l[p] for p in t)
                        b = tuple(k[p] for p in s_rest) + tuple(l[p] for p in t_rest)
                        rhs = rhs + (
                            twist
                            *_shuffle_twist(datum, k, s)
                            *_shuffle_twist(datum, l, t)
                            *crossing_polynomial(datum, a, left)
                            *crossing_polynomial(datum, b, right)
                        )
            rows.append((
                k, l,
                series_expand(RationalScalar(lhs)*kappa, order),
                series_expand(RationalScalar(rhs)*kappa, order),
            ))
    report = MackeyReport(order, tuple(rows))
    if not report.ok:
        _log.warning("Mackey check failed: %s", report.witness())
    return report
