"""
tests for the command line and the datum file loader
"""
import json
import os

import pytest
import yaml

from src.conftest import TEMPLATES
from src.main import DEFAULT_DATUM, main, parse_arguments
from src.utils.config_loader import ConfigLoader, parse_sequence, validate_bundle

RANK2_EVEN = os.path.join(TEMPLATES, 'rank2_even.yaml')


def read_report(path):
    with open(path, encoding='utf-8') as f:
        return [json.loads(line) for line in f.read().splitlines()]


def write_yaml(path, data):
    with open(path, 'w', encoding='utf-8') as f:
        yaml.safe_dump(data, f)
    return str(path)


def test_default_datum_is_bundled():
    assert os.path.exists(DEFAULT_DATUM)
    validate_bundle(ConfigLoader().load(DEFAULT_DATUM))


def test_loader_fills_default_tables(tmp_path):
    path = write_yaml(tmp_path / 'a2.yaml', {
        'name': 'a2',
        'vertices': [{'name': 'i', 'parity': 0}, {'name': 'j', 'parity': 0}],
        'matrix': [[2, -1], [-1, 2]],
        'run': {'suites': ['onh'], 'max_height': 2},
    })
    bundle = ConfigLoader().load(path)
    assert bundle.datum.name == 'a2'
    assert bundle.qtable.terms(0, 1) == ((0, 1, 1), (1, 0, 1))
    assert bundle.run == {'suites': ('onh',), 'max_height': 2}
    assert bundle.source == path
    validate_bundle(bundle)


@pytest.mark.parametrize('data', [
    {'vertices': [{'name': 'i', 'parity': 0}], 'matrix': [[2]], 'colour': 'red'},
    {'vertices': [{'name': 'i', 'parity': 0, 'weight': 1}], 'matrix': [[2]]},
    {'vertices': [{'name': 'i', 'parity': 0}]},
    {'vertices': [{'name': 'i', 'parity': 0}], 'matrix': [[2]], 'gamma': [{'pair': ['i', 'x'], 'value': 1}]},
])
def test_loader_rejects_bad_files(tmp_path, data):
    with pytest.raises(ValueError):
        ConfigLoader().load(write_yaml(tmp_path / 'bad.yaml', data))


def test_invalid_datum_is_rejected(rank2_odd):
    bundle = ConfigLoader().from_mapping(dict(ConfigLoader().dump(rank2_odd), gamma=[
        {'pair': ['j', 'i'], 'value': '1/2'},
    ]))
    with pytest.raises(ValueError):
        validate_bundle(bundle)


def test_dump_round_trip(rank3_mixed):
    loader = ConfigLoader()
    again = loader.from_mapping(loader.dump(rank3_mixed))
    assert again.datum == rank3_mixed.datum
    assert again.run == rank3_mixed.run
    assert again.qtable.terms(0, 1) == rank3_mixed.qtable.terms(0, 1)


def test_parse_sequence(rank2_odd):
    assert parse_sequence(rank2_odd.datum, 'i j i') == (0, 1, 0)
    assert parse_sequence(rank2_odd.datum, 'j,i') == (1, 0)
    with pytest.raises(ValueError):
        parse_sequence(rank2_odd.datum, 'i k')


def test_arguments():
    args = parse_arguments(['-v', 'run', '--suite', 'onh', 'pairing', '--pi', 'minus', '--jobs', '2'])
    assert args.verbose
    assert args.suite == ['onh', 'pairing']
    assert args.pi_mode == 'minus'
    assert args.jobs == 2
    assert parse_arguments(['run', '--suite']).suite == []
    assert parse_arguments(['run']).suite is None
    with pytest.raises(SystemExit):
        parse_arguments(['run', '--suite', 'bogus'])
    with pytest.raises(SystemExit):
        parse_arguments([])


def test_explain(capsys):
    assert main(['explain', 'onh.tau-omega0.i.n3']) == 0
    out = capsys.readouterr().out
    assert out.startswith('onh.tau-omega0.i.n3: ')
    assert main(['explain', 'serre-radical']) == 0
    assert main(['explain', 'no-such-check']) == 2


def test_template(tmp_path):
    path = str(tmp_path / 'out' / 'template.yaml')
    assert main(['template', path]) == 0
    bundle = ConfigLoader().load(path)
    validate_bundle(bundle)
    assert bundle.run['suites'] == ('datum-validate', 'rep-verify', 'pairing')


def test_empty_run(tmp_path):
    out = str(tmp_path / 'empty.jsonl')
    assert main(['run', '--suite', '--out', out]) == 0
    lines = read_report(out)
    assert len(lines) == 1
    assert set(lines[0]) == {'datum', 'seed', 'pi_mode', 'pairing_orientation'}
    assert lines[0]['datum']['name'] == 'rank2-odd'


def test_report_to_stdout(capsys):
    assert main(['run', '--suite', 'datum-validate']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert json.loads(lines[0])['pi_mode'] == 'generic'
    assert [json.loads(line)['verdict'] for line in lines[1:]] == ['pass']*3


def test_run_writes_tables_and_timings(tmp_path):
    out = str(tmp_path / 'pairing.jsonl')
    assert main(['run', '--suite', 'pairing', '--only', 'pairing.kappa', '--order', '4', '--out', out]) == 0
    assert [r['id'] for r in read_report(out)[1:]] == ['pairing.kappa.i', 'pairing.kappa.j']
    assert os.path.exists(out + '.tables.csv')
    assert os.path.exists(out + '.timings.csv')


def test_pair_subcommand(tmp_path):
    out = str(tmp_path / 'pair.jsonl')
    assert main(['pair', '--left', 'i j', '--right', 'j i', '--order', '6', '--pi', 'plus', '--out', out]) == 0
    records = read_report(out)[1:]
    assert [r['id'] for r in records] == ['pairing.ij.ji']
    assert records[0]['inputs'] == {'left': 'ij', 'right': 'ji', 'order': 6}


def test_serre_subcommand(tmp_path):
    out = str(tmp_path / 'serre.jsonl')
    args = ['serre-cat', '--config', RANK2_EVEN, '--i', 'i', '--j', 'j', '--order', '4', '--max-height', '3']
    assert main(args + ['--out', out]) == 0
    assert [r['id'] for r in read_report(out)[1:]] == ['serre-cat.ij.n1']


def test_mackey_subcommand(tmp_path):
    out = str(tmp_path / 'mackey.jsonl')
    assert main(['mackey', '--left', 'i', '--right', 'j', '--order', '4', '--out', out]) == 0
    ids = [r['id'] for r in read_report(out)[1:]]
    assert ids == ['mackey.i.j.i:1.j:1', 'mackey.i.j.j:1.i:1']


def test_trunc_subcommand(tmp_path):
    out = str(tmp_path / 'trunc.jsonl')
    assert main(['trunc-dim', '--max-height', '1', '--order', '4', '--out', out]) == 0
    assert [r['id'] for r in read_report(out)[1:]] == ['trunc-dim.identity.i.i', 'trunc-dim.identity.j.j']


def test_jobs_do_not_change_the_report(tmp_path):
    outs = []
    for jobs in ('1', '4'):
        out = str(tmp_path / f'jobs{jobs}.jsonl')
        args = ['run', '--suite', 'onh', 'trunc-dim', '--max-height', '2', '--order', '4', '--samples', '3']
        assert main(args + ['--seed', '7', '--jobs', jobs, '--out', out]) == 0
        outs.append(out)
    with open(outs[0], 'rb') as a, open(outs[1], 'rb') as b:
        assert a.read() == b.read()


def test_bad_inputs_exit_with_two(tmp_path):
    assert main(['run', '--config', str(tmp_path / 'missing.yaml')]) == 2
    bad = write_yaml(tmp_path / 'bad.yaml', {'vertices': [{'name': 'i', 'parity': 1}], 'matrix': [[1]]})
    assert main(['run', '--config', bad]) == 2
    assert main(['run', '--max-height', '0']) == 2
    assert main(['pair', '--left', 'i x']) == 2
