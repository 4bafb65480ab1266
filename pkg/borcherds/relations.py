"""Local relations of R(ν) as rewrite rules on generator words.

A generator word is a tuple of tokens ``('x', m)`` and ``('t', k)`` read left
to right and applied to an idempotent 1_𝕔 on the right; positions are
0-based. Every rule takes the label 𝕔 that its rightmost token acts on and
returns the right-hand side as a list of ``(coefficient, tokens)``.

The dot/crossing exchange below is the reading under which the polynomial
representation is a homomorphism; the representation checks and the
straightening multiplication both go through this module.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence
    from borcherds.datum import Superdatum, QTable

__all__ = (
    'Token',
    'Rewrite',
    'LocalRelations',
    'dot',
    'crossing',
)


Token = tuple[str, int]
Rewrite = list[tuple[int, tuple[Token, ...]]]


def dot(m: int) -> Token:
    return ('x', m)

def crossing(k: int) -> Token:
    return ('t', k)


class LocalRelations:
    def __init__(self, datum: Superdatum, qtable: QTable):
        self.datum = datum
        self.qtable = qtable

    def _p(self, vertex: int) -> int:
        return self.datum.parity(vertex)

    def dot_sign(self, label: Sequence[int], k: int, l: int) -> int:
        """x_k x_l = sign · x_l x_k"""
        return -1 if self._p(label[k])*self._p(label[l]) else 1

    def crossing_sign(self, label: Sequence[int], k: int, l: int) -> int:
        """τ_k τ_l 1_𝕔 = sign · τ_l τ_k 1_𝕔 for |k − l| > 1"""
        odd = self._p(label[k])*self._p(label[k + 1])*self._p(label[l])*self._p(label[l + 1])
        return -1 if odd else 1

    def exchange(self, label: Sequence[int], k: int, m: int) -> Rewrite:
        """τ_k x_m 1_𝕔 rewritten with the dot on the left."""
        a, b = label[k], label[k + 1]
        if m not in (k, k + 1):
            sign = -1 if self._p(label[m])*self._p(a)*self._p(b) else 1
            return [(sign, (dot(m), crossing(k)))]
        other = k + 1 if m == k else k
        if a == b and self.datum.is_real(a):
            if self._p(a):
                return [(-1, (dot(other), crossing(k))), (1, ())]
            if m == k:
                return [(1, (dot(other), crossing(k))), (1, ())]
            return [(1, (dot(other), crossing(k))), (-1, ())]
        eps = -1 if self._p(a)*self._p(b) else 1
        return [(eps, (dot(other), crossing(k)))]

    def tau_square(self, label: Sequence[int], k: int) -> Rewrite:
        """τ_k² 1_𝕔: zero on equal strands, else Q_{c_k c_{k+1}}(x_k, x_{k+1})."""
        a, b = label[k], label[k + 1]
        if a == b:
            return []
        return [
            (t, (dot(k),)*alpha + (dot(k + 1),)*beta)
            for alpha, beta, t in self.qtable.terms(a, b)
        ]

    def braid_correction(self, label: Sequence[int], k: int) -> Rewrite:
        """τ_k τ_{k+1} τ_k − τ_{k+1} τ_k τ_{k+1} on 1_𝕔."""
        i, j, i2 = label[k], label[k + 1], label[k + 2]
        if i != i2 or i == j or not self.datum.is_real(i):
            return []
        result: Rewrite = []
        if not self._p(i):
            for alpha, beta, t in self.qtable.terms(i, j):
                for r in range(alpha):
                    s = alpha - 1 - r
                    tokens = (dot(k),)*r + (dot(k + 2),)*s + (dot(k + 1),)*beta
                    result.append((t, tokens))
            return result
        sign = -1 if self._p(j) else 1
        for alpha, beta, t in self.qtable.terms(i, j):
            for r in range(alpha//2):
                s = alpha//2 - 1 - r
                tail = (dot(k),)*(2*r) + (dot(k + 2),)*(2*s) + (dot(k + 1),)*beta
                result.append((sign*t, (dot(k),) + tail))
                result.append((-sign*t, (dot(k + 2),) + tail))
        return result
