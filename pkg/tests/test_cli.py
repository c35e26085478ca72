# -*- coding: utf-8 -*-
import json

import pytest

from help_psl2.cli import (
    SCHEMA_VERSION, ReportDocument, dumps_report, get_parser, loads_report,
    main, parse_kset, jobs_from_env,
)
from .utils import load_golden, without_timing


@pytest.mark.parametrize(['argv', 'exit_code'], [
    (['table', '--p', '7', '--kmax', '2'], 0),
    (['table', '--p', '2', '--f', '2', '--kmax', '1'], 0),
    (['table', '--p', '4'], 2),
    (['table', '--p', '7', '--kmax', '-1'], 2),
    (['verify', '--p', '7', '--r', '2', '--n', '2'], 0),
    (['verify', '--p', '7', '--r', '2', '--n', '2', '--no-bovdi'], 1),
    (['verify', '--p', '7', '--r', '7', '--n', '1'], 2),
    (['verify', '--p', '7', '--r', '6', '--n', '1'], 2),
    (['verify', '--p', '7', '--r', '2', '--n', '3'], 0),
    (['solve', '--p', '7', '--r', '2', '--n', '2', '--no-bovdi'], 0),
    (['solve', '--p', '7', '--r', '2', '--n', '3'], 0),
    (['solve', '--p', '11', '--r', '5', '--n', '1', '--bound', '0'], 2),
])
def test_exit_codes(argv, exit_code, capsys):
    assert main(argv) == exit_code
    out, err = capsys.readouterr()
    if exit_code == 2:
        assert err.startswith('error: ')
    else:
        assert out


@pytest.mark.parametrize(['argv'], [
    [[]],
    [['verify', '--p', '7']],
    [['verify', '--p', '7', '--r', '2', '--n', '2', '--k', 'a,b']],
    [['unknown']],
])
def test_argparse_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2


def test_table_output(capsys):
    assert main(['table', '--p', '7', '--f', '1', '--kmax', '2']) == 0
    out, _ = capsys.readouterr()
    assert u'1 + 2·ζ_4^2' in out
    assert '-1.0' in out
    assert len([line for line in out.splitlines()
                if line.split() and line.split()[0].isdigit()]) == 6


def test_table_even_characteristic(capsys):
    assert main(['table', '--p', '2', '--f', '2', '--kmax', '1',
                 '--json']) == 0
    doc = loads_report(capsys.readouterr()[0])
    assert doc.command == 'table'
    assert len(doc.classes) == 5
    phi_1 = doc.results['characters'][1]
    assert phi_1['degree'] == 3
    assert phi_1['values']['0'] == {'conductor': 1, 'terms': [[0, 3]]}
    assert set(phi_1['values']) == {'0', '2', '3', '4'}


def test_table_error_message(capsys):
    assert main(['table', '--p', '4', '--f', '1']) == 2
    _, err = capsys.readouterr()
    assert 'p must be prime' in err


def test_r_equals_p_message(capsys):
    assert main(['verify', '--p', '7', '--r', '7', '--n', '1']) == 2
    _, err = capsys.readouterr()
    assert 'r = p' in err


def test_counterexample_is_printed(capsys):
    assert main(['verify', '--p', '7', '--r', '2', '--n', '2',
                 '--no-bovdi']) == 1
    out, _ = capsys.readouterr()
    assert 'verdict: counterexample' in out
    assert 'NOT trivial' in out


def test_solve_nonexistence(capsys):
    assert main(['solve', '--p', '7', '--r', '2', '--n', '3', '--json']) == 0
    doc = loads_report(capsys.readouterr()[0])
    assert doc.results['chains'] == []
    assert doc.results['note'] == 'no elements of this order'
    assert doc.results['verdict'] is None


def test_solve_matches_verify(capsys):
    argv = ['--p', '11', '--r', '5', '--n', '1', '--json']
    main(['solve'] + argv)
    solved = loads_report(capsys.readouterr()[0])
    main(['verify'] + argv)
    verified = loads_report(capsys.readouterr()[0])
    assert solved.results['chains'] == verified.results['chains']


def test_bound_sweep(capsys):
    argv = ['solve', '--p', '17', '--r', '2', '--n', '3', '--json']
    main(argv)
    default = loads_report(capsys.readouterr()[0])
    main(argv + ['--bound', '7'])
    wide = loads_report(capsys.readouterr()[0])
    assert ([c['chain'] for c in default.results['chains']] ==
            [c['chain'] for c in wide.results['chains']])
    assert wide.parameters['bound'] == 7


def test_check_stability(capsys):
    assert main(['verify', '--p', '19', '--r', '3', '--n', '2',
                 '--check-stability', '--json', '-']) == 0
    doc = loads_report(capsys.readouterr()[0])
    assert doc.results['bound_stable'] is True
    assert len(doc.results['chains']) == 3


def test_explicit_kset(capsys):
    assert main(['verify', '--p', '17', '--r', '2', '--n', '3',
                 '--k', '1,2,5', '--json']) == 0
    doc = loads_report(capsys.readouterr()[0])
    assert doc.parameters['chars'] == [1, 2, 5]
    assert [t['k'] for t in doc.results['chains'][0]['tables']] == [1, 2, 5]


@pytest.mark.parametrize(['argv', 'golden'], [
    (['verify', '--p', '7', '--f', '1', '--r', '2', '--n', '2'],
     'verify_psl2_7_r2_n2.json'),
    (['verify', '--p', '11', '--r', '5', '--n', '1'],
     'verify_psl2_11_r5_n1.json'),
])
def test_golden_reports(argv, golden, tmpdir):
    path = str(tmpdir.join('report.json'))
    assert main(argv + ['--json', path]) == 0
    with open(path) as f:
        text = f.read()
    assert text.endswith('}\n')
    doc = loads_report(text)
    assert without_timing(doc.to_dict()) == without_timing(load_golden(golden))
    # canonical form is stable
    assert dumps_report(loads_report(text)) == text
    assert doc.timing['seconds'] >= 0


def test_repeated_runs_agree(tmpdir):
    docs = []
    for idx in range(2):
        path = str(tmpdir.join('report{}.json'.format(idx)))
        main(['verify', '--p', '13', '--r', '7', '--n', '1', '--json', path])
        with open(path) as f:
            docs.append(without_timing(json.load(f)))
    assert docs[0] == docs[1]


@pytest.mark.parametrize(['argv'], [
    [['verify', '--p', '7', '--r', '2', '--n', '2']],
    [['solve', '--p', '7', '--r', '2', '--n', '3']],
    [['table', '--p', '7', '--kmax', '1']],
])
def test_unwritable_report_path(argv, tmpdir, capsys):
    path = str(tmpdir.join('missing_dir', 'report.json'))
    assert main(argv + ['--json', path]) == 2
    _, err = capsys.readouterr()
    assert err.startswith('error: ')
    assert 'report.json' in err
    assert not tmpdir.join('missing_dir').check()


def test_jobs_from_environment(monkeypatch, capsys):
    monkeypatch.setenv('HELP_PSL2_THREADS', '3')
    assert main(['verify', '--p', '17', '--r', '2', '--n', '3']) == 0
    monkeypatch.setenv('HELP_PSL2_THREADS', '0')
    assert main(['verify', '--p', '7', '--r', '2', '--n', '2']) == 0
    monkeypatch.setenv('HELP_PSL2_THREADS', 'many')
    assert main(['verify', '--p', '7', '--r', '2', '--n', '2']) == 2
    _, err = capsys.readouterr()
    assert 'HELP_PSL2_THREADS' in err


def test_jobs_from_env():
    assert jobs_from_env({}) == 1
    assert jobs_from_env({'HELP_PSL2_THREADS': ' 2 '}) == 2
    assert jobs_from_env({'HELP_PSL2_THREADS': '0'}) >= 1
    with pytest.raises(ValueError):
        jobs_from_env({'HELP_PSL2_THREADS': '-1'})


def test_report_document_round_trip():
    doc = ReportDocument(
        command='solve',
        group={'p': 7, 'f': 1, 'q': 7, 'd': 2, 'o_a': 3, 'o_b': 4},
        parameters={'r': 2, 'n': 3},
        classes=[],
        results={'chains': [], 'rejections': {'phi_1': 3}},
        timing={'seconds': 0.25},
    )
    assert doc.schema_version == SCHEMA_VERSION
    text = dumps_report(doc)
    assert loads_report(text) == doc
    assert dumps_report(loads_report(text)) == text
    assert text.index('"classes"') < text.index('"command"')


def test_report_document_schema_version():
    data = ReportDocument('table', {}, {}, [], {}).to_dict()
    del data['schema_version']
    with pytest.raises(ValueError):
        ReportDocument.from_dict(data)
    data['schema_version'] = '0'
    with pytest.raises(ValueError):
        ReportDocument.from_dict(data)


def test_parse_kset():
    assert parse_kset('3') == [3]
    assert parse_kset('1, 2,') == [1, 2]


def test_parser_defaults():
    args = get_parser().parse_args(['verify', '--p', '7', '--r', '2',
                                    '--n', '2'])
    assert args.f == 1
    assert args.bound == 5
    assert args.k is None
    assert args.json is None
    assert not args.no_bovdi
