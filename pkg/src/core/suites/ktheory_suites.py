"""
Graded-dimension checks: the pairing, the categorified Serre relation,
Mackey filtrations and idempotent truncations.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from borcherds.covering import divided_power, form, kappa, word_element, words
from borcherds.ktheory import (
    divided_power_shift, idempotent_trunc_dim, mackey_dim_check, pairing_check, serre_categorified_check,
    series_agree,
)
from borcherds.qhsa import graded_dim
from borcherds.scalar import DimSeries, series_expand
from src.core.suites.base import Check, CheckResult, Suite

PAIRING_HEIGHT = 3
MACKEY_HEIGHT = 3
TRUNC_HEIGHT = 2
# rank computations grow quickly with the truncation order
SERRE_ORDER = 8
TRUNC_ORDER = 8


def degree_table(lhs: DimSeries, rhs: DimSeries, **labels) -> list[dict]:
    """One row per q-exponent with the even and odd parts of both sides."""
    order = min(lhs.order, rhs.order)
    exponents = sorted({n for n, _ in lhs.items()} | {n for n, _ in rhs.items()})
    rows = []
    for n in exponents:
        if n > order:
            continue
        (la, lb), (ra, rb) = lhs.coefficient(n), rhs.coefficient(n)
        rows.append(dict(labels, degree=n, lhs_even=la, lhs_odd=lb, rhs_even=ra, rhs_odd=rb))
    return rows


class PairingSuite(Suite, suite_id='pairing'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        for i in self.datum.indices:
            name = self.datum.name_of(i)
            yield self.make_check(f'kappa.{name}', {'vertex': name, 'order': self.config.order},
                                  lambda rng, i=i: self._kappa(i))
        for nu in ctx.weights(min(self.config.max_height, PAIRING_HEIGHT)):
            for left, right in itertools.product(words(nu), repeat=2):
                yield self.make_check(
                    f'{ctx.seq_id(left)}.{ctx.seq_id(right)}',
                    {'left': ctx.seq_id(left), 'right': ctx.seq_id(right), 'order': self.config.order},
                    lambda rng, left=left, right=right: self._pair(left, right),
                )

    def _kappa(self, i: int) -> CheckResult:
        order = self.config.order
        lhs = graded_dim(self.datum, (i,), (i,), order)
        rhs = series_expand(kappa(self.datum, i), order)
        ok = series_agree(lhs, rhs, self.context.pi_sign)
        return CheckResult.of(ok, {'dim': str(lhs), 'kappa': str(rhs)}, degree_table(lhs, rhs))

    def _pair(self, left: Sequence[int], right: Sequence[int]) -> CheckResult:
        report = pairing_check(self.datum, left, right, self.config.order, max_height=self.config.max_height)
        ok = series_agree(report.lhs, report.rhs, self.context.pi_sign)
        return CheckResult.of(ok, report, degree_table(report.lhs, report.rhs))


class SerreCatSuite(Suite, suite_id='serre-cat'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        datum = self.datum
        order = min(self.config.order, SERRE_ORDER)
        for i in datum.real:
            for j in datum.indices:
                if i == j:
                    continue
                for n in (1, 2):
                    m = 1 - n*datum.a(i, j)
                    if m + n > self.config.max_height or (n > 1 and datum.a(i, j)):
                        continue
                    yield self.make_check(
                        f'{ctx.seq_id((i, j))}.n{n}',
                        {'i': datum.name_of(i), 'j': datum.name_of(j), 'n': n, 'order': order},
                        lambda rng, i=i, j=j, n=n: self._serre(i, j, n, order),
                    )

    def _serre(self, i: int, j: int, n: int, order: int) -> CheckResult:
        report = serre_categorified_check(self.context.qhsa, i, j, n, order, self.config.max_height)
        sign = self.context.pi_sign
        ok = not report.mismatches and all(series_agree(even, odd, sign) for _, even, odd in report.rows)
        table = [
            row
            for label, even, odd in report.rows
            for row in degree_table(even, odd, label=self.context.seq_id(label))
        ]
        return CheckResult.of(ok, {'witness': report.witness()}, table)


class MackeySuite(Suite, suite_id='mackey'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        for total in ctx.weights(min(self.config.max_height, MACKEY_HEIGHT), min_height=2):
            splits = [
                mu for mu in itertools.product(*(range(c + 1) for c in total))
                if 0 < sum(mu) < sum(total)
            ]
            for mu in splits:
                mu_prime = tuple(t - m for t, m in zip(total, mu))
                left, right = words(mu)[0], words(mu_prime)[0]
                for nu in splits:
                    nu_prime = tuple(t - m for t, m in zip(total, nu))
                    name = f'{ctx.seq_id(left)}.{ctx.seq_id(right)}.{ctx.weight_id(nu)}.{ctx.weight_id(nu_prime)}'
                    inputs = {
                        'left': ctx.seq_id(left), 'right': ctx.seq_id(right),
                        'nu': ctx.weight_id(nu), 'nu_prime': ctx.weight_id(nu_prime),
                        'order': self.config.order,
                    }
                    yield self.make_check(
                        name, inputs,
                        lambda rng, nu=nu, nu_prime=nu_prime, left=left, right=right: self._mackey(nu, nu_prime, left, right),
                    )

    def _mackey(self, nu, nu_prime, left, right) -> CheckResult:
        report = mackey_dim_check(self.datum, nu, nu_prime, left, right, self.config.order)
        sign = self.context.pi_sign
        ok = all(series_agree(lhs, rhs, sign) for _, _, lhs, rhs in report.rows)
        lhs, rhs = report.total()
        ok = ok and series_agree(lhs, rhs, sign)
        table = [
            row
            for k, l, a, b in report.rows
            for row in degree_table(a, b, left=self.context.seq_id(k), right=self.context.seq_id(l))
        ]
        return CheckResult.of(ok, {'witness': report.witness(), 'total': [str(lhs), str(rhs)]}, table)


class TruncDimSuite(Suite, suite_id='trunc-dim'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        datum = self.datum
        order = min(self.config.order, TRUNC_ORDER)
        for nu in ctx.weights(min(self.config.max_height, TRUNC_HEIGHT)):
            for target, source in itertools.product(words(nu), repeat=2):
                yield self.make_check(
                    f'identity.{ctx.seq_id(target)}.{ctx.seq_id(source)}',
                    {'target': ctx.seq_id(target), 'source': ctx.seq_id(source), 'order': order},
                    lambda rng, target=target, source=source: self._identity(target, source, order),
                )
        for i in datum.real:
            for n in range(2, min(3, self.config.max_height) + 1):
                name = datum.name_of(i)
                yield self.make_check(
                    f'divided.{name}.n{n}', {'vertex': name, 'n': n, 'order': order},
                    lambda rng, i=i, n=n: self._divided(i, n, order),
                )

    def _identity(self, target: Sequence[int], source: Sequence[int], order: int) -> CheckResult:
        qhsa = self.context.qhsa
        lhs = idempotent_trunc_dim(qhsa, target, qhsa.idempotent(source), order)
        rhs = graded_dim(self.datum, target, source, order)
        ok = series_agree(lhs, rhs, self.context.pi_sign)
        return CheckResult.of(ok, {'truncated': str(lhs), 'graded': str(rhs)}, degree_table(lhs, rhs))

    def _divided(self, i: int, n: int, order: int) -> CheckResult:
        datum = self.datum
        label = (i,)*n
        lhs = idempotent_trunc_dim(self.context.qhsa, label, self.context.qhsa.e_idempotent(i, n), order)
        lhs = lhs*divided_power_shift(datum, i, n)
        rhs = series_expand(form(datum, word_element(label), divided_power(datum, i, n)), order)
        ok = series_agree(lhs, rhs, self.context.pi_sign)
        return CheckResult.of(ok, {'truncated': str(lhs), 'form': str(rhs)}, degree_table(lhs, rhs))
