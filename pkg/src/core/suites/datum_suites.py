"""
Validation of the superdatum and its coefficient tables.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import sympy

from borcherds.datum import default_gamma, default_qtable, q_eval, validate
from src.core.suites.base import Check, CheckResult, Suite


class DatumValidateSuite(Suite, suite_id='datum-validate'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        yield self.make_check('axioms', {'datum': self.datum}, lambda rng: self._axioms())
        yield self.make_check('defaults', {'datum': self.datum}, lambda rng: self._defaults())
        for i, j in itertools.combinations(self.datum.indices, 2):
            yield self.make_check(
                f'q-symmetry.{ctx.seq_id((i, j))}',
                {'pair': [self.datum.name_of(i), self.datum.name_of(j)]},
                lambda rng, i=i, j=j: self._q_symmetry(i, j),
            )

    def _axioms(self) -> CheckResult:
        report = validate(self.datum, self.context.qtable, self.context.gamma)
        return CheckResult.of(report.ok, str(report))

    def _defaults(self) -> CheckResult:
        report = validate(self.datum, default_qtable(self.datum), default_gamma(self.datum))
        return CheckResult.of(report.ok, str(report))

    def _q_symmetry(self, i: int, j: int) -> CheckResult:
        u, v = sympy.symbols('u v')
        qtable = self.context.qtable
        forward = q_eval(qtable, i, j, u, v, sympy.Integer(1))
        backward = q_eval(qtable, j, i, v, u, sympy.Integer(1))
        difference = sympy.expand(forward - backward)
        return CheckResult.of(difference == 0, {'Q_ij - Q_ji': str(difference)})
