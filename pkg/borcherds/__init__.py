"""Symbolic workbench for quiver Hecke superalgebras of Borcherds-Cartan superdata.

The modules build on each other bottom-up: :mod:`borcherds.scalar` (Laurent
polynomials with π² = 1), :mod:`borcherds.datum`, the covering algebra and its
form (:mod:`borcherds.covering`, :mod:`borcherds.boson`), the polynomial
representation (:mod:`borcherds.superpoly`), the algebra R(ν)
(:mod:`borcherds.qhsa`) and the graded-dimension checks of
:mod:`borcherds.ktheory`.
"""

from __future__ import annotations

from borcherds.params import (
    BorcherdsError,
    ValidationError,
    DomainError,
    BoundError,
    ExpansionError,
    LabelError,
    InexactDivisionError,
    IdempotentError,
    AnomalyError,
)
from borcherds.scalar import Scalar, RationalScalar, DimSeries, ONE, ZERO, PI, Q
from borcherds.datum import (
    Vertex, Superdatum, QTable, GammaTable, default_qtable, default_gamma, validate,
)
from borcherds.superpoly import CliffordPoly, PolynomialRepresentation
from borcherds.qhsa import Qhsa, QhsaElement, BasisSymbol

__all__ = (
    'BorcherdsError',
    'ValidationError',
    'DomainError',
    'BoundError',
    'ExpansionError',
    'LabelError',
    'InexactDivisionError',
    'IdempotentError',
    'AnomalyError',
    'Scalar',
    'RationalScalar',
    'DimSeries',
    'ONE',
    'ZERO',
    'PI',
    'Q',
    'Vertex',
    'Superdatum',
    'QTable',
    'GammaTable',
    'default_qtable',
    'default_gamma',
    'validate',
    'CliffordPoly',
    'PolynomialRepresentation',
    'Qhsa',
    'QhsaElement',
    'BasisSymbol',
)
