"""
Checks on the covering algebra: its form and the Serre relations.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from borcherds.covering import (
    FreeElement, TensorElement, coproduct, form, generator, gram, radical_member, radical_generators,
    specialize, tensor_pairing, word_element,
)
from src.core.suites.base import Check, CheckResult, Suite

# Gram matrices grow with the number of words; heights above this stay with the CLI
GRAM_HEIGHT = 4


class CoveringGramSuite(Suite, suite_id='covering-gram'):

    def checks(self) -> Iterator[Check]:
        ctx = self.context
        for nu in ctx.weights(min(self.config.max_height, GRAM_HEIGHT)):
            yield self.make_check(
                ctx.weight_id(nu), {'nu': ctx.weight_id(nu)},
                lambda rng, nu=nu: self._gram(nu),
            )

    def _equal(self, a, b) -> bool:
        sign = self.context.pi_sign
        if sign is not None:
            a, b = specialize(a, sign), specialize(b, sign)
        return a == b

    def _gram(self, nu: Sequence[int]) -> CheckResult:
        datum = self.datum
        g = gram(datum, nu, self.config.max_height)
        rows = g.rows()
        table = []
        n = len(g.words)
        for a in range(n):
            for b in range(n):
                table.append({
                    'weight': self.context.weight_id(nu),
                    'left': self.context.seq_id(g.words[a]),
                    'right': self.context.seq_id(g.words[b]),
                    'value': str(rows[a][b]),
                })
                if not self._equal(rows[a][b], rows[b][a]):
                    return CheckResult.of(False, {'asymmetric': [table[-1]['left'], table[-1]['right']]}, table)

        for w in g.words:
            rho = coproduct(datum, word_element(w))
            for v in g.words:
                lhs = form(datum, word_element(v), word_element(w))
                for cut in range(len(v) + 1):
                    left, right = v[:cut], v[cut:]
                    rhs = tensor_pairing(datum, TensorElement({(left, right): 1}), rho)
                    if not self._equal(lhs, rhs):
                        witness = {
                            'x': self.context.seq_id(left),
                            'y': self.context.seq_id(right),
                            'z': self.context.seq_id(w),
                            'form': str(lhs),
                            'coproduct pairing': str(rhs),
                        }
                        return CheckResult.of(False, witness, table)
        return CheckResult.of(True, table=table)


class SerreRadicalSuite(Suite, suite_id='serre-radical'):

    def checks(self) -> Iterator[Check]:
        for label, element in radical_generators(self.datum, self.config.max_height):
            yield self.make_check(label, {'element': label}, lambda rng, x=element: self._member(x, True))
        for i in self.datum.indices:
            name = self.datum.name_of(i)
            yield self.make_check(
                f'theta.{name}', {'element': f'theta_{name}'},
                lambda rng, i=i: self._member(generator(i), False),
            )

    def _member(self, x: FreeElement, expected: bool) -> CheckResult:
        certificate = radical_member(self.datum, x, self.config.max_height)
        ok = certificate.member == expected and certificate.rho_agrees
        witness = {
            'member': certificate.member,
            'rho_agrees': certificate.rho_agrees,
            'gram_times_x': [str(p) for p in certificate.product],
        }
        return CheckResult.of(ok, witness)
