"""Borcherds–Cartan superdata, the Q_ij coefficient tables and the γ_ij constants.

Vertices are referred to by their position in ``Superdatum.vertices``; names
are only used for input and output. The total order on I used by the
default γ table and by the orientation of the graph Λ is this position order.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from borcherds.params import ValidationError, yield_errors, validate_type, validate_range

if TYPE_CHECKING:
    from typing import Any, Optional, Callable
    from collections.abc import Iterable, Iterator, Mapping, Sequence
    from numpy.random import Generator
    from borcherds.json import Json

__all__ = (
    'Vertex',
    'Superdatum',
    'QTable',
    'GammaTable',
    'ValidationReport',
    'validate',
    'default_qtable',
    'default_gamma',
    'q_eval',
    'random_superdatum',
    'AXIOMS',
)


_log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    name: str
    parity: int
    symmetrizer: int = 1

    def validate(self) -> Iterator[ValidationError]:
        yield from yield_errors([
            validate_type(self.name, 'name', str),
            validate_range(self.parity, f'{self.name}.parity', 0, 1),
            validate_type(self.symmetrizer, f'{self.name}.symmetrizer', int),
        ])


@dataclass(frozen=True)
class Superdatum:
    """A Borcherds–Cartan superdatum (I, Ã, ·)."""
    vertices: tuple[Vertex, ...]
    matrix: tuple[tuple[int, ...], ...]
    name: str = field(default='datum', kw_only=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        object.__setattr__(self, 'matrix', tuple(tuple(int(a) for a in row) for row in self.matrix))

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def indices(self) -> range:
        return range(self.size)

    def index(self, name: str) -> int:
        for idx, vertex in enumerate(self.vertices):
            if vertex.name == name:
                return idx
        raise KeyError(f"unknown vertex: {name!r}")

    def name_of(self, i: int) -> str:
        return self.vertices[i].name

    def parity(self, i: int) -> int:
        return self.vertices[i].parity

    def r(self, i: int) -> int:
        """The symmetrizer r_i, also the q-exponent of q_i."""
        return self.vertices[i].symmetrizer

    def a(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def dot(self, i: int, j: int) -> int:
        """i·j = r_i a_ij"""
        return self.r(i)*self.matrix[i][j]

    def is_real(self, i: int) -> bool:
        return self.matrix[i][i] == 2

    def is_imaginary(self, i: int) -> bool:
        return self.matrix[i][i] <= 0

    def precedes(self, i: int, j: int) -> bool:
        """Orientation of Λ: i → j iff i comes first."""
        return i < j

    @property
    def real(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.is_real(i))

    @property
    def imaginary(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.is_imaginary(i))

    @property
    def even(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.parity(i) == 0)

    @property
    def odd(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if self.parity(i) == 1)

    def weight_dot(self, nu: Sequence[int], mu: Sequence[int]) -> int:
        """ν·μ for weights given as multiplicity vectors."""
        return sum(nu[i]*mu[j]*self.dot(i, j) for i in self.indices for j in self.indices)

    def weight_parity(self, nu: Sequence[int]) -> int:
        return sum(nu[i]*self.parity(i) for i in self.indices) % 2

    def to_json(self) -> Json:
        return {
            'name': self.name,
            'vertices': [
                {'name': v.name, 'parity': v.parity, 'symmetrizer': v.symmetrizer}
                for v in self.vertices
            ],
            'matrix': [list(row) for row in self.matrix],
        }

    @classmethod
    def from_json(cls, json: Json) -> Superdatum:
        vertices = tuple(
            Vertex(str(v['name']), int(v['parity']), int(v.get('symmetrizer', 1)))
            for v in json['vertices']
        )
        return cls(vertices, json['matrix'], name=str(json.get('name', 'datum')))

    def __str__(self) -> str:
        names = ",".join(f"{v.name}{'*' if v.parity else ''}" for v in self.vertices)
        return f"{self.name}[{names}]"


## Coefficient tables

class QTable:
    """The coefficients t_{i,j;a,b} of Q_ij(u, v) = Σ t u^a v^b.

    Stored per unordered pair with the smaller index first; looking up the
    reversed pair swaps the exponents, so t_{i,j;a,b} = t_{j,i;b,a} holds
    by construction."""

    def __init__(self, entries: Mapping[tuple[int, int], Iterable[tuple[int, int, int]]]):
        table: dict[tuple[int, int], tuple[tuple[int, int, int], ...]] = {}
        for (i, j), terms in entries.items():
            if i == j:
                raise ValueError(f"Q table entry for the diagonal pair ({i}, {j})")
            terms = tuple(sorted((int(a), int(b), int(t)) for a, b, t in terms if t))
            key, oriented = ((i, j), terms) if i < j else ((j, i), tuple(sorted((b, a, t) for a, b, t in terms)))
            if key in table and table[key] != oriented:
                raise ValueError(f"inconsistent Q table entries for pair {key}")
            table[key] = oriented
        self._table = table

    def pairs(self) -> Iterable[tuple[int, int]]:
        return self._table.keys()

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in self._table

    def terms(self, i: int, j: int) -> tuple[tuple[int, int, int], ...]:
        """(a, b, t) for Q_ij with a the exponent of u (attached to i)."""
        if i < j:
            key = (i, j)
        else:
            key = (j, i)
        if key not in self._table:
            raise KeyError(f"pair ({i}, {j}) is not in the Q table")
        terms = self._table[key]
        if i < j:
            return terms
        return tuple(sorted((b, a, t) for a, b, t in terms))

    def with_terms(self, i: int, j: int, terms: Iterable[tuple[int, int, int]]) -> QTable:
        entries = dict(self._table)
        entries.pop((min(i, j), max(i, j)), None)
        entries[(i, j)] = tuple(terms)
        return QTable(entries)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QTable):
            return NotImplemented
        return self._table == other._table

    def to_json(self, datum: Superdatum) -> Json:
        return [
            {'pair': [datum.name_of(i), datum.name_of(j)], 'terms': [list(term) for term in terms]}
            for (i, j), terms in sorted(self._table.items())
        ]


class GammaTable:
    """The constants γ_ij for ordered pairs i ≠ j."""

    def __init__(self, values: Mapping[tuple[int, int], Fraction | int | str]):
        self._values = {pair: Fraction(value) for pair, value in values.items()}

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        if pair not in self._values:
            raise KeyError(f"no γ for pair {pair}")
        return self._values[pair]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self._values

    def items(self) -> Iterable[tuple[tuple[int, int], Fraction]]:
        return self._values.items()

    def with_value(self, i: int, j: int, value: Fraction | int | str) -> GammaTable:
        values = dict(self._values)
        values[(i, j)] = Fraction(value)
        return GammaTable(values)

    def to_json(self, datum: Superdatum) -> Json:
        return [
            {'pair': [datum.name_of(i), datum.name_of(j)], 'value': str(value)}
            for (i, j), value in sorted(self._values.items())
        ]


def t_set(datum: Superdatum, i: int, j: int) -> list[tuple[int, int]]:
    """T_ij: the (a, b) ≥ 0 with r_i a + r_j b = −i·j, a even for odd i, b even for odd j."""
    target = -datum.dot(i, j)
    result = []
    for a in range(0, target//datum.r(i) + 1):
        rest = target - datum.r(i)*a
        if rest % datum.r(j):
            continue
        b = rest//datum.r(j)
        if datum.parity(i) and a % 2:
            continue
        if datum.parity(j) and b % 2:
            continue
        result.append((a, b))
    return result

def default_qtable(datum: Superdatum) -> QTable:
    """t_{i,j;−a_ij,0} = t_{i,j;0,−a_ji} = 1 and every interior t = 0."""
    entries = {}
    for i, j in itertools.combinations(datum.indices, 2):
        if datum.dot(i, j) == 0:
            entries[(i, j)] = ((0, 0, 1),)
        else:
            entries[(i, j)] = ((-datum.a(i, j), 0, 1), (0, -datum.a(j, i), 1))
    return QTable(entries)

def default_gamma(datum: Superdatum) -> GammaTable:
    values = {}
    for i, j in itertools.permutations(datum.indices, 2):
        if datum.parity(i) and datum.parity(j):
            values[(i, j)] = Fraction(1) if i < j else Fraction(-1, 2)
        else:
            values[(i, j)] = Fraction(1)
    return GammaTable(values)

def q_eval(
        qtable: QTable, i: int, j: int, u: Any, v: Any, one: Any,
        mul: Optional[Callable[[Any, Any], Any]] = None,
) -> Any:
    """Evaluate Q_ij(u, v) as Σ t·u^a·v^b with u-powers before v-powers.

    ``u`` and ``v`` may live in any algebra with ``+`` and integer scaling;
    ``mul`` defaults to ``*``."""
    if mul is None:
        mul = lambda x, y: x*y
    result = None
    for a, b, t in qtable.terms(i, j):
        term = one
        for _ in range(a):
            term = mul(term, u)
        for _ in range(b):
            term = mul(term, v)
        term = term*t
        result = term if result is None else result + term
    if result is None:
        return one*0
    return result


## Validation

AXIOMS = {
    'shape': "the matrix is square and matches the vertex list",
    'vertex': "vertex names are unique strings, parities are bits, symmetrizers are integers",
    'i': "a_ii = 2, 0, -2, -4, ...",
    'ii': "a_ij <= 0 for i != j",
    'iii': "a_ij = 0 if and only if a_ji = 0",
    'iv': "a_ij is even for every odd i",
    'v': "r_i > 0 and r_i a_ij = r_j a_ji",
    'qtable': "Q_ij terms lie in T_ij, t_{i,j;-a_ij,0} != 0, Q_ij = 1 when i.j = 0",
    'gamma': "gamma_ij gamma_ji = -1/2 for odd i, j and gamma_ij = 1 otherwise",
}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    axiom: Optional[str] = None
    indices: tuple[int, ...] = ()
    message: str = ''

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return f"fail, axiom ({self.axiom}) at {self.indices}: {self.message}"


def _fail(axiom: str, indices: tuple[int, ...], message: str) -> ValidationReport:
    return ValidationReport(False, axiom, indices, message)

def validate(
        datum: Superdatum,
        qtable: Optional[QTable] = None,
        gamma: Optional[GammaTable] = None,
) -> ValidationReport:
    """Check the datum axioms in order, each over all pairs, then the tables."""
    n = datum.size
    if len(datum.matrix) != n or any(len(row) != n for row in datum.matrix):
        return _fail('shape', (), f"expected a {n}x{n} matrix")
    names = [v.name for v in datum.vertices]
    if len(set(names)) != n:
        return _fail('vertex', (), "vertex names must be unique")
    for idx, vertex in enumerate(datum.vertices):
        for error in vertex.validate():
            return _fail('vertex', (idx,), str(error))

    I = datum.indices
    pairs = [(i, j) for i in I for j in I if i != j]
    for i in I:
        a = datum.a(i, i)
        if not (a == 2 or (a <= 0 and a % 2 == 0)):
            return _fail('i', (i, i), f"a_ii = {a}")
    for i, j in pairs:
        if datum.a(i, j) > 0:
            return _fail('ii', (i, j), f"a_ij = {datum.a(i, j)} is positive")
    for i, j in pairs:
        if (datum.a(i, j) == 0) != (datum.a(j, i) == 0):
            return _fail('iii', (i, j), f"a_ij = {datum.a(i, j)} but a_ji = {datum.a(j, i)}")
    for i in datum.odd:
        for j in I:
            if datum.a(i, j) % 2:
                return _fail('iv', (i, j), f"odd vertex with a_ij = {datum.a(i, j)}")
    for i in I:
        if datum.r(i) <= 0:
            return _fail('v', (i,), f"r_i = {datum.r(i)} is not positive")
    for i, j in pairs:
        if datum.dot(i, j) != datum.dot(j, i):
            return _fail('v', (i, j), f"r_i a_ij = {datum.dot(i, j)} != r_j a_ji = {datum.dot(j, i)}")

    if qtable is not None:
        report = _validate_qtable(datum, qtable)
        if not report:
            return report
    if gamma is not None:
        report = _validate_gamma(datum, gamma)
        if not report:
            return report
    return ValidationReport(True)

def _validate_qtable(datum: Superdatum, qtable: QTable) -> ValidationReport:
    for i, j in itertools.combinations(datum.indices, 2):
        if (i, j) not in qtable:
            return _fail('qtable', (i, j), "missing pair")
        terms = qtable.terms(i, j)
        if datum.dot(i, j) == 0:
            if terms != ((0, 0, 1),):
                return _fail('qtable', (i, j), "Q_ij must be the constant 1 when i.j = 0")
            continue
        allowed = set(t_set(datum, i, j))
        for a, b, t in terms:
            if (a, b) not in allowed:
                return _fail('qtable', (i, j), f"({a}, {b}) is not in T_ij")
        lookup = {(a, b): t for a, b, t in terms}
        if not lookup.get((-datum.a(i, j), 0)):
            return _fail('qtable', (i, j), "t_{i,j;-a_ij,0} vanishes")
        if not lookup.get((0, -datum.a(j, i))):
            return _fail('qtable', (j, i), "t_{j,i;-a_ji,0} vanishes")
    return ValidationReport(True)

def _validate_gamma(datum: Superdatum, gamma: GammaTable) -> ValidationReport:
    for i, j in itertools.permutations(datum.indices, 2):
        if (i, j) not in gamma or (j, i) not in gamma:
            return _fail('gamma', (i, j), "missing pair")
        if datum.parity(i) and datum.parity(j):
            if gamma[(i, j)]*gamma[(j, i)] != Fraction(-1, 2):
                return _fail('gamma', (i, j), "gamma_ij gamma_ji != -1/2")
        elif gamma[(i, j)] != 1:
            return _fail('gamma', (i, j), f"gamma_ij = {gamma[(i, j)]} but must be 1")
    return ValidationReport(True)


## Random data

def random_superdatum(rng: Generator, max_size: int = 3, max_entry: int = 4, max_r: int = 3) -> Superdatum:
    """A random valid superdatum with |I| <= max_size, |a_ij| <= max_entry, r_i <= max_r."""
    n = int(rng.integers(1, max_size + 1))
    parities = [int(rng.integers(0, 2)) for _ in range(n)]
    rs = [int(rng.integers(1, max_r + 1)) for _ in range(n)]
    matrix = [[0]*n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = int(rng.choice([2, 0, -2, -4]))
    for i, j in itertools.combinations(range(n), 2):
        candidates = []
        for a_ij in range(-max_entry, 0):
            if (rs[i]*a_ij) % rs[j]:
                continue
            a_ji = rs[i]*a_ij//rs[j]
            if a_ji < -max_entry:
                continue
            if parities[i] and a_ij % 2:
                continue
            if parities[j] and a_ji % 2:
                continue
            candidates.append((a_ij, a_ji))
        if candidates and rng.random() < 0.75:
            matrix[i][j], matrix[j][i] = candidates[int(rng.integers(0, len(candidates)))]
    vertices = tuple(Vertex(f"v{k}", parities[k], rs[k]) for k in range(n))
    return Superdatum(vertices, matrix, name='random')
