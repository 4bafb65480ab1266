"""
Suite registry and the shared context handed to every check.
"""
from __future__ import annotations

import itertools
import logging
import threading
import zlib
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar, Iterable, Iterator, Optional, Sequence

import numpy as np

from borcherds.covering import format_weight
from borcherds.datum import GammaTable, QTable, Superdatum
from borcherds.json import Json, encode
from borcherds.qhsa import Qhsa
from borcherds.superpoly import PolynomialRepresentation
from src.config.run_config import RunConfig


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one check; ``table`` rows feed the per-degree CSV output"""
    ok: bool
    witness: Json = None
    table: tuple[dict[str, Any], ...] = field(default=())

    @classmethod
    def of(cls, ok: bool, witness: Any = None, table: Iterable[dict[str, Any]] = ()) -> CheckResult:
        return cls(bool(ok), None if ok else encode(witness), tuple(table))


@dataclass(frozen=True)
class Check:
    check_id: str
    inputs: dict[str, Json]
    func: Callable[[np.random.Generator], CheckResult]

    @property
    def suite_id(self) -> str:
        return self.check_id.split('.', 1)[0]


class SuiteContext:
    """Datum, tables and run options shared by all checks of a run.

    The straightening cache of the shared ``Qhsa`` is thread safe, so one
    instance serves every worker."""

    def __init__(self, datum: Superdatum, qtable: QTable, gamma: GammaTable, config: RunConfig):
        self.datum = datum
        self.qtable = qtable
        self.gamma = gamma
        self.config = config
        self.rep = PolynomialRepresentation(datum, qtable, gamma)
        self._qhsa: Optional[Qhsa] = None
        self._lock = threading.Lock()

    @property
    def qhsa(self) -> Qhsa:
        with self._lock:
            if self._qhsa is None:
                self._qhsa = Qhsa(self.datum, self.qtable)
            return self._qhsa

    @property
    def pi_sign(self) -> Optional[int]:
        return self.config.pi_sign

    def rng(self, check_id: str) -> np.random.Generator:
        """A generator that depends only on the seed and the check id."""
        return np.random.default_rng([self.config.seed, zlib.crc32(check_id.encode('utf-8'))])

    def seq_id(self, seq: Sequence[int]) -> str:
        names = [self.datum.name_of(i) for i in seq]
        if all(len(name) == 1 for name in names):
            return ''.join(names) or '1'
        return '-'.join(names) or '1'

    def weight_id(self, nu: Sequence[int]) -> str:
        return format_weight(self.datum, nu)

    def weights(self, max_height: int, min_height: int = 1) -> list[tuple[int, ...]]:
        """Weights ν with min_height ≤ ht(ν) ≤ max_height, by height then lexicographically."""
        found = [
            nu for nu in itertools.product(range(max_height + 1), repeat=self.datum.size)
            if min_height <= sum(nu) <= max_height
        ]
        return sorted(found, key=lambda nu: (sum(nu), tuple(-c for c in nu)))


class Suite(ABC):
    """A named family of independent checks"""

    _suites: ClassVar[dict[str, type[Suite]]] = {}
    suite_id: ClassVar[str]

    def __init_subclass__(cls, suite_id: str, **kwargs: Any):
        super().__init_subclass__(**kwargs)
        cls.suite_id = suite_id
        Suite._suites[suite_id] = cls

    @staticmethod
    def all_suites() -> Iterator[type[Suite]]:
        """Iterate all currently imported suite types."""
        return iter(Suite._suites.values())

    @staticmethod
    def get(suite_id: str) -> type[Suite]:
        if suite_id not in Suite._suites:
            raise KeyError(f"unknown suite {suite_id!r}")
        return Suite._suites[suite_id]

    def __init__(self, context: SuiteContext):
        self.context = context
        self.logger = logging.getLogger(f"{__name__}.{self.suite_id}")

    @property
    def datum(self) -> Superdatum:
        return self.context.datum

    @property
    def config(self) -> RunConfig:
        return self.context.config

    def make_check(self, name: str, inputs: dict[str, Any], func: Callable[[np.random.Generator], CheckResult]) -> Check:
        return Check(f"{self.suite_id}.{name}", encode(inputs), func)

    @abstractmethod
    def checks(self) -> Iterator[Check]:
        """Yield the checks of this suite for the context's datum."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.datum})'


def suite_ids() -> tuple[str, ...]:
    return tuple(Suite._suites)
