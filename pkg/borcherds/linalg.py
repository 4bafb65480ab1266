"""Exact ranks over QQ and QQ(q) through sympy's DomainMatrix."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import TYPE_CHECKING

import sympy
from sympy.polys.matrices import DomainMatrix

if TYPE_CHECKING:
    from collections.abc import Sequence
    from borcherds.scalar import Scalar

__all__ = (
    'rank_rational',
    'rank_laurent',
    'scalar_to_expr',
)


_log = logging.getLogger(__name__)

q = sympy.Symbol('q')


def rank_rational(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank of a matrix of integers or fractions."""
    rows = [list(row) for row in rows if any(row)]
    if not rows:
        return 0
    width = len(rows[0])
    domain = sympy.QQ
    data = [[domain(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    rank = DomainMatrix(data, (len(data), width), domain).rank()
    _log.debug("rank over QQ of a %dx%d matrix: %d", len(data), width, rank)
    return rank

def scalar_to_expr(value: Scalar) -> sympy.Expr:
    """A π-free Scalar as a sympy expression in ``q``."""
    if not value.is_pi_free():
        raise ValueError(f"{value} still depends on pi")
    return sympy.Add(*(a*q**n for n, (a, b) in value.items()))

def rank_laurent(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank over QQ(q) of a matrix of π-free Laurent polynomials.

    Each row is scaled by a power of q to clear negative exponents."""
    rows = [list(row) for row in rows if any(not x.is_zero() for x in row)]
    if not rows:
        return 0
    width = len(rows[0])
    exprs = []
    for row in rows:
        low = min(x.min_exponent for x in row if not x.is_zero())
        exprs.append([scalar_to_expr(x.shift(-low)) if not x.is_zero() else sympy.Integer(0) for x in row])
    matrix = DomainMatrix.from_list_sympy(len(exprs), width, exprs)
    rank = matrix.to_field().rank()
    _log.debug("rank over QQ(q) of a %dx%d matrix: %d", len(exprs), width, rank)
    return rank
