"""
configuration loader module, for loading superdata and run options from YAML datum files
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import yaml

from borcherds.datum import GammaTable, QTable, Superdatum, Vertex, default_gamma, default_qtable, validate

DATUM_KEYS = ('name', 'vertices', 'matrix', 'qtable', 'gamma', 'run')
VERTEX_KEYS = ('name', 'parity', 'symmetrizer')
QTABLE_KEYS = ('pair', 'terms')
GAMMA_KEYS = ('pair', 'value')


@dataclass
class DatumBundle:
    """a superdatum with its coefficient tables and the run block of its file"""
    datum: Superdatum
    qtable: QTable
    gamma: GammaTable
    run: Dict[str, Any] = field(default_factory=dict)
    source: Optional[str] = None


def _reject_unknown(mapping: Any, allowed: tuple, where: str) -> None:
    if not isinstance(mapping, dict):
        raise ValueError(f"{where}: expected a mapping, got {type(mapping).__name__}")
    unknown = sorted(set(mapping) - set(allowed))
    if unknown:
        raise ValueError(f"{where}: unknown key(s) {', '.join(map(str, unknown))}")


class ConfigLoader:
    """configuration loader class"""
    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def load(self, file_path: str) -> DatumBundle:
        """load a datum file, filling missing tables with the defaults"""
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
            bundle = self.from_mapping(data)
            bundle.source = file_path
            return bundle
        except (OSError, yaml.YAMLError, ValueError, KeyError) as e:
            self.logger.error(f"failed to load datum file {file_path}: {str(e)}")
            raise

    def from_mapping(self, data: Any) -> DatumBundle:
        """build the bundle from already parsed YAML data"""
        _reject_unknown(data, DATUM_KEYS, 'datum file')
        for key in ('vertices', 'matrix'):
            if key not in data:
                raise ValueError(f"datum file: missing required key {key!r}")

        vertices = []
        for idx, entry in enumerate(data['vertices']):
            _reject_unknown(entry, VERTEX_KEYS, f"vertices[{idx}]")
            if 'name' not in entry or 'parity' not in entry:
                raise ValueError(f"vertices[{idx}]: name and parity are required")
            vertices.append(Vertex(str(entry['name']), int(entry['parity']), int(entry.get('symmetrizer', 1))))

        matrix = data['matrix']
        if not isinstance(matrix, list) or any(not isinstance(row, list) for row in matrix):
            raise ValueError("matrix: expected a list of rows")
        datum = Superdatum(tuple(vertices), matrix, name=str(data.get('name', 'datum')))

        qtable = default_qtable(datum)
        for idx, entry in enumerate(data.get('qtable') or []):
            _reject_unknown(entry, QTABLE_KEYS, f"qtable[{idx}]")
            i, j = self._pair(datum, entry, f"qtable[{idx}]")
            terms = [tuple(int(x) for x in term) for term in entry['terms']]
            if any(len(term) != 3 for term in terms):
                raise ValueError(f"qtable[{idx}]: terms are [a, b, t] triples")
            qtable = qtable.with_terms(i, j, terms)

        gamma = default_gamma(datum)
        for idx, entry in enumerate(data.get('gamma') or []):
            _reject_unknown(entry, GAMMA_KEYS, f"gamma[{idx}]")
            i, j = self._pair(datum, entry, f"gamma[{idx}]")
            gamma = gamma.with_value(i, j, str(entry['value']))

        run = data.get('run') or {}
        if not isinstance(run, dict):
            raise ValueError("run: expected a mapping")
        if 'suites' in run:
            run = dict(run, suites=tuple(run['suites']))

        self.logger.debug(f"loaded datum {datum} with {len(qtable.to_json(datum))} Q entries")
        return DatumBundle(datum, qtable, gamma, run)

    @staticmethod
    def _pair(datum: Superdatum, entry: Dict[str, Any], where: str) -> tuple:
        pair = entry.get('pair')
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"{where}: pair must name two vertices")
        try:
            return datum.index(str(pair[0])), datum.index(str(pair[1]))
        except KeyError as e:
            raise ValueError(f"{where}: {e.args[0]}") from None

    def dump(self, bundle: DatumBundle) -> Dict[str, Any]:
        """the YAML mapping of a bundle, tables written out in full"""
        data = bundle.datum.to_json()
        data['qtable'] = bundle.qtable.to_json(bundle.datum)
        data['gamma'] = bundle.gamma.to_json(bundle.datum)
        if bundle.run:
            run = dict(bundle.run)
            if 'suites' in run:
                run['suites'] = list(run['suites'])
            data['run'] = run
        return data

    def save_template(self, file_path: str) -> None:
        """save a run template: the odd rank-2 datum with a full run block"""
        datum = Superdatum(
            (Vertex('i', 1), Vertex('j', 1)),
            ((2, -2), (-2, -2)),
            name='rank2-odd',
        )
        run = {
            'suites': ['datum-validate', 'rep-verify', 'pairing'],
            'max_height': 3,
            'order': 12,
            'pi_mode': 'generic',
            'seed': 0,
            'jobs': 1,
            'degree_bound': 4,
            'samples': 50,
        }
        bundle = DatumBundle(datum, default_qtable(datum), default_gamma(datum), run)
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(self.dump(bundle), f, sort_keys=False)
        self.logger.info(f"template file saved to: {file_path}")


def validate_bundle(bundle: DatumBundle) -> None:
    """raise ValueError when the datum or its tables break an axiom"""
    report = validate(bundle.datum, bundle.qtable, bundle.gamma)
    if not report:
        raise ValueError(f"invalid datum {bundle.datum}: {report}")


def parse_sequence(datum: Superdatum, text: str) -> tuple:
    """sequences are written 'i j i' or 'i,j,i'"""
    names = text.replace(',', ' ').split()
    try:
        return tuple(datum.index(name) for name in names)
    except KeyError as e:
        raise ValueError(f"sequence {text!r}: {e.args[0]}") from None
