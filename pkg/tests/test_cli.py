# coding:utf-8
import io
import json
import sys

import pytest

import affmatch
from affmatch._cli import main
from tests.common import EMPTY_CORE, _consistent_market


def _stdin(monkeypatch, text):
    stream = io.TextIOWrapper(io.BytesIO(text.encode('utf-8')),
                              encoding='utf-8')
    monkeypatch.setattr(sys, 'stdin', stream)


def _run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, err = _run(capsys, ['validate', str(EMPTY_CORE)])
    assert code == 0
    assert 'valid market: n=3' in out
    assert 'inconsistent profiles: e1, e2, e3' in out


def test_validate_bad_file(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    raw = json.loads(EMPTY_CORE.read_text(encoding='utf-8'))
    del raw['employer_prefs']['e2'][1]
    path.write_text(json.dumps(raw), encoding='utf-8')
    code, out, err = _run(capsys, ['validate', str(path)])
    assert code == 1
    assert '/employer_prefs/e2' in err
    code, out, err = _run(capsys, ['validate', str(tmp_path / 'none.json')])
    assert code == 1


def test_validate_malformed_label(capsys, tmp_path):
    path = tmp_path / 'malformed.json'
    raw = json.loads(EMPTY_CORE.read_text(encoding='utf-8'))
    raw['applicant_prefs']['a1'][0] = {'x': 1}
    path.write_text(json.dumps(raw), encoding='utf-8')
    code, out, err = _run(capsys, ['validate', str(path)])
    assert code == 1
    assert '/applicant_prefs/a1' in err


def test_stable_greedy_empty_core(capsys):
    code, out, err = _run(capsys, ['stable', '--notion', 'greedy',
                                   '--format', 'json', str(EMPTY_CORE)])
    assert code == 2
    report = json.loads(out)
    assert report['core_empty'] is True
    assert report['stable'] == []
    first = [(m['index'], m['certificates'][0]['applicant'],
              m['certificates'][0]['employer'])
             for m in report['matchings']]
    assert first == [(1, 'a1', 'e2'), (2, 'a1', 'e2'), (3, 'a1', 'e3'),
                     (4, 'a1', 'e3'), (5, 'a3', 'e3'), (6, 'a2', 'e1')]
    assert report['matchings'][0]['pairs'] == [
        ['a1', 'e1'], ['a2', 'e2'], ['a3', 'e3']]


def test_stable_strict(capsys):
    code, out, err = _run(capsys, ['stable', '--notion', 'strict',
                                   '--format', 'json', str(EMPTY_CORE)])
    assert code == 0
    assert 1 in json.loads(out)['stable']


def test_stable_text_and_threads(capsys):
    code, out, err = _run(capsys, ['stable', str(EMPTY_CORE)])
    code_t, out_t, err_t = _run(capsys, ['stable', '--threads', '3',
                                         str(EMPTY_CORE)])
    assert code == code_t == 2
    assert out == out_t
    assert out.startswith('greedy stability: 0 of 6 matchings stable '
                          '(core empty)')


def test_max_n_env(capsys, monkeypatch):
    monkeypatch.setenv('AFFMATCH_MAX_N', '2')
    code, out, err = _run(capsys, ['stable', str(EMPTY_CORE)])
    assert code == 1
    assert 'exceeds' in err


def test_solve_exit_codes(capsys, tmp_path):
    code, out, err = _run(capsys, ['solve', str(EMPTY_CORE)])
    assert code == 2
    assert 'empty_core' in out

    code, out, err = _run(capsys, ['solve', '--node-budget', '2',
                                   str(EMPTY_CORE)])
    assert code == 3

    path = tmp_path / 'consistent.json'
    affmatch.dump(_consistent_market(), path)
    code, out, err = _run(capsys, ['solve', '--objective',
                                   'min_applicant_rank_sum', '--cuts',
                                   'nogood+conditional', '--format', 'json',
                                   str(path)])
    assert code == 0
    report = json.loads(out)
    assert report['status'] == 'stable'
    assert report['matching']['index'] == 5
    assert report['score'] == 5
    assert 'wall_time' not in report['statistics']


def test_solve_is_deterministic(capsys):
    argv = ['solve', '--cuts', 'nogood+conditional', '--format', 'json',
            str(EMPTY_CORE)]
    assert _run(capsys, argv)[1] == _run(capsys, argv)[1]


def test_solve_timings(capsys):
    code, out, err = _run(capsys, ['solve', '--timings', '--format', 'json',
                                   str(EMPTY_CORE)])
    assert 'wall_time' in json.loads(out)['statistics']


def test_reduce(capsys, tmp_path):
    code, out, err = _run(capsys, ['reduce', str(EMPTY_CORE)])
    assert code == 1
    assert 'e1, e2, e3' in err

    path = tmp_path / 'consistent.json'
    affmatch.dump(_consistent_market(), path)
    code, out, err = _run(capsys, ['reduce', '--format', 'json', str(path)])
    assert code == 0
    assert json.loads(out)['matching']['index'] == 5


def test_enumerate(capsys):
    code, out, err = _run(capsys, ['enumerate', str(EMPTY_CORE)])
    assert code == 0
    assert out.splitlines()[0] == '6 matchings of a 3-by-3 market'
    assert out.splitlines()[1] == '  mu1  a1-e1 a2-e2 a3-e3'


def test_generate_then_validate_stdin(capsys, monkeypatch):
    code, out, err = _run(capsys, ['generate', '--seed', '7', '--n', '3',
                                   '--strategy', 'candidate_first'])
    assert code == 0
    _stdin(monkeypatch, out)
    code, out, err = _run(capsys, ['validate', '-'])
    assert code == 0
    assert 'every employer profile is consistent' in out


def test_generate_is_byte_identical(capsys):
    argv = ['generate', '--seed', '7', '--n', '5', '--strategy',
            'uniform_random']
    first = _run(capsys, argv)[1]
    assert first == _run(capsys, argv)[1]
    assert json.loads(first)['generator']['seed'] == 7


def test_generate_weighted_needs_lambda(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['generate', '--seed', '1', '--n', '3', '--strategy', 'weighted'])
    assert excinfo.value.code == 64
    assert '--lambda' in capsys.readouterr().err
    code, out, err = _run(capsys, ['generate', '--seed', '1', '--n', '3',
                                   '--strategy', 'weighted', '--lambda',
                                   '0.5'])
    assert code == 0


def test_report_renders_machine_report(capsys, tmp_path):
    code, out, err = _run(capsys, ['stable', '--format', 'json',
                                   str(EMPTY_CORE)])
    path = tmp_path / 'report.json'
    path.write_text(out, encoding='utf-8')
    code, text, err = _run(capsys, ['report', str(path)])
    assert code == 0
    code, direct, err = _run(capsys, ['stable', str(EMPTY_CORE)])
    assert text == direct

    path.write_text('{"command": "dance"}', encoding='utf-8')
    code, out, err = _run(capsys, ['report', str(path)])
    assert code == 1


def test_experiment(capsys):
    code, out, err = _run(capsys, ['experiment', '--seed', '0', '--n', '3',
                                   '--markets', '4', '--format', 'json'])
    assert code == 0
    report = json.loads(out)
    assert report['markets'] == 4
    assert [row['seed'] for row in report['rows']] == [0, 1, 2, 3]
    assert report['settings']['notion'] == 'greedy'


@pytest.mark.parametrize('argv', [
    [],
    ['bogus'],
    ['solve'],
    ['solve', '--objective', 'nope', 'x.json'],
    ['generate', '--n', '3'],
    ['generate', '--seed', '1', '--n', '0'],
    ['stable', '--threads', 'many', 'x.json'],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 64
    assert 'usage:' in capsys.readouterr().err
