"""
Checks on R(ν) and its polynomial representation.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Sequence

import numpy as np

from borcherds.covering import words
from borcherds.qhsa import QhsaElement, act_on_poly, independence_check, tau_omega0_eval, trivial_functional
from borcherds.superpoly import monomials, sigma_identities_check, verify_relations
from src.core.suites.base import Check, CheckResult, Suite

RELATION_HEIGHT = 3
SAMPLE_HEIGHT = 3
MAX_IDEMPOTENT = 4
MAX_STAIRCASE = 5


def _relation_result(report) -> CheckResult:
    witness = report.witness.to_json() if report.witness is not None else None
    return CheckResult.of(report.ok, {'checked': report.checked, 'failure': witness})


class RepVerifySuite(Suite, suite_id='rep-verify'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        bound = self.config.degree_bound
        for nu in ctx.weights(min(self.config.max_height, RELATION_HEIGHT), min_height=2):
            yield self.make_check(
                ctx.weight_id(nu), {'nu': ctx.weight_id(nu), 'degree_bound': bound},
                lambda rng, nu=nu: _relation_result(verify_relations(ctx.rep, nu, bound)),
            )
        for i in self.datum.indices:
            for n in (2, 3):
                if n > self.config.max_height:
                    continue
                label = (i,)*n
                degree = bound if n == 2 else min(bound, 3)
                yield self.make_check(
                    f'sigma.{ctx.seq_id(label)}', {'label': ctx.seq_id(label), 'degree_bound': degree},
                    lambda rng, label=label, degree=degree: _relation_result(
                        sigma_identities_check(label, degree)
                    ),
                )


class QhsaDifferentialSuite(Suite, suite_id='qhsa-differential'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        for nu in ctx.weights(min(self.config.max_height, SAMPLE_HEIGHT)):
            yield self.make_check(
                ctx.weight_id(nu), {'nu': ctx.weight_id(nu), 'samples': self.config.samples},
                lambda rng, nu=nu: self._differential(rng, nu),
            )
        for source in self._independence_sources():
            max_dot = 2 if len(source) <= 2 else 1
            yield self.make_check(
                f'independence.{ctx.seq_id(source)}', {'source': ctx.seq_id(source), 'max_dot': max_dot},
                lambda rng, source=source, max_dot=max_dot: CheckResult.of(
                    independence_check(ctx.qhsa, ctx.rep, source, max_dot), 'dependent symbols',
                ),
            )

    def _independence_sources(self) -> list[tuple[int, ...]]:
        datum = self.datum
        sources = []
        if self.config.max_height >= 2:
            sources.extend((i, i) for i in datum.indices)
            sources.extend((i, j) for i in datum.indices for j in datum.indices if i < j)
        if self.config.max_height >= 3:
            sources.extend((i, i, i) for i in datum.imaginary if datum.parity(i))
        return sources

    def _differential(self, rng: np.random.Generator, nu: Sequence[int]) -> CheckResult:
        ctx = self.context
        qhsa, rep = ctx.qhsa, ctx.rep
        degree = 2 if sum(nu) <= 2 else 1
        polys = [f for label in words(nu) for f in monomials(self.datum, label, degree)]
        for trial in range(self.config.samples):
            a = qhsa.random_element(rng, nu)
            b = qhsa.random_element(rng, nu)
            product = qhsa.mult(a, b)
            for f in polys:
                lhs = act_on_poly(rep, product, f)
                rhs = act_on_poly(rep, a, act_on_poly(rep, b, f))
                if lhs != rhs:
                    witness = {
                        'trial': trial,
                        'a': qhsa.format(a),
                        'b': qhsa.format(b),
                        'poly': str(f),
                        'label': ctx.seq_id(f.label),
                    }
                    return CheckResult.of(False, witness)
        return CheckResult.of(True)


class OnhSuite(Suite, suite_id='onh'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        datum = self.datum
        top = self.config.max_height
        for i in datum.real:
            name = datum.name_of(i)
            for n in range(1, min(MAX_IDEMPOTENT, top) + 1):
                yield self.make_check(
                    f'idempotent.{name}.n{n}', {'vertex': name, 'n': n},
                    lambda rng, i=i, n=n: self._idempotent(i, n),
                )
            if datum.parity(i):
                for n in range(2, min(MAX_STAIRCASE, top) + 1):
                    yield self.make_check(
                        f'tau-omega0.{name}.n{n}', {'vertex': name, 'n': n},
                        lambda rng, i=i, n=n: self._staircase(i, n),
                    )
        for i in datum.indices:
            name = datum.name_of(i)
            for n in range(2, min(3, top) + 1):
                yield self.make_check(
                    f'center.{name}.n{n}', {'vertex': name, 'n': n},
                    lambda rng, i=i, n=n: self._center(i, n),
                )
        for i in datum.imaginary:
            name = datum.name_of(i)
            for n in range(2, min(3, top) + 1):
                yield self.make_check(
                    f'trivial.{name}.n{n}', {'vertex': name, 'n': n, 'samples': self.config.samples},
                    lambda rng, i=i, n=n: self._trivial(rng, i, n),
                )

    def _idempotent(self, i: int, n: int) -> CheckResult:
        qhsa = self.context.qhsa
        e = qhsa.e_idempotent(i, n)
        square = qhsa.mult(e, e)
        return CheckResult.of(square == e, {'e': qhsa.format(e), 'e^2': qhsa.format(square)})

    def _staircase(self, i: int, n: int) -> CheckResult:
        value = tau_omega0_eval(self.context.rep, i, n)
        expected = -1 if comb(n, 3) % 2 else 1
        return CheckResult.of(value == expected, {'value': value, 'expected': expected})

    def _power_sum(self, label: tuple[int, ...], ks: Sequence[int]) -> QhsaElement:
        """x_{k_1}^2 ... x_{k_r}^2 1_label"""
        tokens = tuple(('x', k) for k in ks for _ in range(2))
        return self.context.qhsa.word_element(tokens, label)

    def _center(self, i: int, n: int) -> CheckResult:
        qhsa = self.context.qhsa
        label = (i,)*n
        nu = [0]*self.datum.size
        nu[i] = n
        x1 = qhsa.dot(0, label)
        if qhsa.center_probe(nu, x1):
            return CheckResult.of(False, {'central': qhsa.format(x1)})
        if not self.datum.parity(i):
            return CheckResult.of(True)
        for r in range(1, n + 1):
            candidate = QhsaElement()
            for ks in combinations(range(n), r):
                candidate = candidate + self._power_sum(label, ks)
            if not qhsa.center_probe(nu, candidate):
                return CheckResult.of(False, {'not central': qhsa.format(candidate)})
        return CheckResult.of(True)

    def _trivial(self, rng: np.random.Generator, i: int, n: int) -> CheckResult:
        qhsa = self.context.qhsa
        nu = [0]*self.datum.size
        nu[i] = n
        for trial in range(self.config.samples):
            a = qhsa.random_element(rng, nu)
            b = qhsa.random_element(rng, nu)
            lhs = trivial_functional(qhsa.mult(a, b))
            rhs = trivial_functional(a)*trivial_functional(b)
            if lhs != rhs:
                return CheckResult.of(False, {'trial': trial, 'a': qhsa.format(a), 'b': qhsa.format(b)})
        return CheckResult.of(True)
