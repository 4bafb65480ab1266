"""
Identities of the quantum boson superalgebra at π = −1.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from borcherds.boson import (
    binomial_recursion_check, boson_form, boson_nondegeneracy_check, commutation_check, congruence_check,
    default_kappa, identity_B3_check, serre_operator_identity_check,
)
from borcherds.covering import form, specialize, word_element, words
from borcherds.scalar import format_scalar
from src.core.suites.base import Check, CheckResult, Suite

MAX_ALTERNATING_M = 6
FORM_HEIGHT = 4
NONDEGENERACY_HEIGHT = 3


class BosonIdentitiesSuite(Suite, suite_id='boson-identities'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        datum = self.datum
        yield self.make_check(
            'binomial-recursion', {'max_n': 8, 'r': [1, 2]},
            lambda rng: CheckResult.of(binomial_recursion_check(8, (1, 2)), 'recursion fails'),
        )
        yield self.make_check(
            'congruence', {'max_m': 8},
            lambda rng: CheckResult.of(congruence_check(8), 'congruence fails'),
        )
        for pi, pj in itertools.product((0, 1), repeat=2):
            for m in range(1, MAX_ALTERNATING_M + 1):
                # odd p(i) forces odd m = 1 - a_ij
                if pi and m % 2 == 0:
                    continue
                inputs = {'m': m, 'p_i': pi, 'p_j': pj, 'admissible_m': 'odd' if pi else 'all'}
                yield self.make_check(
                    f'alternating-sum.p{pi}{pj}.m{m}', inputs,
                    lambda rng, m=m, pi=pi, pj=pj: self._alternating(m, pi, pj),
                )

        bound = self.config.degree_bound
        for i, j in itertools.product(datum.indices, repeat=2):
            yield self.make_check(
                f'commutation.{ctx.seq_id((i, j))}', {'i': datum.name_of(i), 'j': datum.name_of(j), 'degree_bound': bound},
                lambda rng, i=i, j=j: self._report(commutation_check(datum, i, j, bound)),
            )
        for i in datum.real:
            for j in datum.indices:
                if i == j:
                    continue
                for k in datum.indices:
                    yield self.make_check(
                        f'serre-operator.{ctx.seq_id((i, j))}.{datum.name_of(k)}',
                        {'i': datum.name_of(i), 'j': datum.name_of(j), 'k': datum.name_of(k), 'degree_bound': bound},
                        lambda rng, i=i, j=j, k=k: self._report(serre_operator_identity_check(datum, i, j, k, bound)),
                    )

        for nu in ctx.weights(min(self.config.max_height, FORM_HEIGHT), min_height=0):
            yield self.make_check(
                f'form-agreement.{ctx.weight_id(nu)}', {'nu': ctx.weight_id(nu)},
                lambda rng, nu=nu: self._form_agreement(nu),
            )
        for nu in ctx.weights(min(self.config.max_height, NONDEGENERACY_HEIGHT)):
            yield self.make_check(
                f'nondegeneracy.{ctx.weight_id(nu)}', {'nu': ctx.weight_id(nu)},
                lambda rng, nu=nu: self._report(boson_nondegeneracy_check(datum, nu), word=False),
            )

    def _alternating(self, m: int, pi: int, pj: int) -> CheckResult:
        value = identity_B3_check(m, pi, pj)
        return CheckResult.of(value.is_zero(), {'value': format_scalar(value)})

    def _report(self, report, word: bool = True) -> CheckResult:
        witness = {'checked': report.checked, 'detail': report.detail}
        if word and report.witness is not None:
            witness['word'] = self.context.seq_id(report.witness) if report.witness else '1'
        return CheckResult.of(report.ok, witness)

    def _form_agreement(self, nu: Sequence[int]) -> CheckResult:
        datum = self.datum
        kappas = default_kappa(datum)
        for w in words(nu):
            for v in words(nu):
                x, y = word_element(w), word_element(v)
                boson = boson_form(datum, x, y, kappas)
                covering = specialize(form(datum, x, y), -1)
                if boson != covering:
                    witness = {
                        'x': self.context.seq_id(w),
                        'y': self.context.seq_id(v),
                        'boson': str(boson),
                        'covering': str(covering),
                    }
                    return CheckResult.of(False, witness)
        return CheckResult.of(True)
