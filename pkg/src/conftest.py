"""
shared fixtures: the bundled datum files and their algebras
"""
import os
import sys

import pytest

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, project_root)

from borcherds.datum import Superdatum, Vertex, default_gamma, default_qtable
from borcherds.qhsa import Qhsa
from borcherds.superpoly import PolynomialRepresentation
from src.utils.config_loader import ConfigLoader

TEMPLATES = os.path.join(project_root, 'templates')


def load_bundle(name: str):
    return ConfigLoader().load(os.path.join(TEMPLATES, name))


@pytest.fixture(scope='session')
def rank2_odd():
    """odd real i, odd imaginary j"""
    return load_bundle('rank2_odd.yaml')


@pytest.fixture(scope='session')
def rank2_even():
    return load_bundle('rank2_even.yaml')


@pytest.fixture(scope='session')
def rank3_mixed():
    return load_bundle('rank3_mixed.yaml')


@pytest.fixture(scope='session', params=['rank2_odd.yaml', 'rank2_even.yaml', 'rank3_mixed.yaml'])
def bundle(request):
    return load_bundle(request.param)


@pytest.fixture(scope='session')
def sl2():
    return Superdatum((Vertex('i', 0),), ((2,),), name='sl2')


@pytest.fixture(scope='session')
def odd_sl2():
    return Superdatum((Vertex('i', 1),), ((2,),), name='osp')


@pytest.fixture(scope='session')
def orthogonal():
    """two odd real vertices with i.j = 0"""
    return Superdatum((Vertex('i', 1), Vertex('j', 1)), ((2, 0), (0, 2)), name='orthogonal')


@pytest.fixture(scope='session')
def odd_imaginary():
    return Superdatum((Vertex('k', 1),), ((-2,),), name='odd-imaginary')


@pytest.fixture(scope='session')
def even_imaginary():
    return Superdatum((Vertex('k', 0),), ((0,),), name='even-imaginary')


def rep_of(datum):
    return PolynomialRepresentation(datum, default_qtable(datum), default_gamma(datum))


def qhsa_of(datum):
    return Qhsa(datum, default_qtable(datum))
