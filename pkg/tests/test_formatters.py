# -*- coding: utf-8 -*-
from fractions import Fraction
import json

import numpy as np
import pytest

from help_psl2.cyclotomic import make
from help_psl2.formatters import (
    format_as_dict, format_as_text, format_cyclo, format_fraction,
    format_numeric)
from help_psl2.formatters.as_dict import _to_python
from help_psl2.psl2 import brauer_table, build_group
from .utils import format_as_all


def test_to_python():
    x = _to_python({
        'x': np.int32(12),
        'y': [Fraction(1, 2), Fraction(4)],
        'z': {3: make(4, [(2, 2), (0, 1)])},
        'w': (np.bool_(False), np.float64(0.5)),
    })
    assert x == {
        'x': 12,
        'y': ['1/2', '4/1'],
        'z': {'3': {'conductor': 4, 'terms': [[0, 1], [2, 2]]}},
        'w': [False, 0.5],
    }
    json.dumps(x)


def test_format_cyclo():
    assert format_cyclo(make(4, [(0, 1), (2, 2)])) == u'1 + 2·ζ_4^2'
    assert format_cyclo(make(1, [(0, -3)])) == '-3'
    assert format_cyclo(make(9, [(1, 1), (8, 1), (0, 1)])) == (
        u'1 + ζ_9 + ζ_9^8')
    assert format_cyclo(make(5, [(2, -2)])) == u'-2·ζ_5^2'


def test_format_numeric_and_fraction():
    assert format_numeric(make(3, [(0, 1), (1, 1), (2, 1)])) == '0.0'
    assert format_numeric(make(1, [(0, 7)])) == '7.0'
    assert format_fraction(Fraction(-6, 4)) == '-3/2'
    assert format_fraction(Fraction(0)) == '0/1'


def test_brauer_table_text(psl2_7):
    table = brauer_table(psl2_7, 2)
    text, res_dict = format_as_all(table)
    assert 'PSL(2,7) (p=7, f=1, d=2)' in text
    assert u'1 + 2·ζ_4^2' in text
    assert '-1.0' in text
    assert 'phi_2' in text
    for label in ['1a', '7a', '7b', '3a', '4a', '2a']:
        assert label in text
    assert [c['label'] for c in res_dict['classes']] == [
        '1a', '3a', '4a', '2a']
    assert res_dict['characters'] == [
        {'k': 0, 'degree': 1}, {'k': 1, 'degree': 3}, {'k': 2, 'degree': 5}]


def test_even_characteristic_table():
    table = brauer_table(build_group(2, 2), 1)
    text = format_as_text(table)
    assert 'PSL(2,4)' in text
    assert '5b' in text
    # 2a is 2-singular
    assert '2a' in text.split('Brauer characters')[0]
    assert '2a' not in text.split('Brauer characters')[1]


def test_group_text(psl2_17):
    text = format_as_text(psl2_17)
    assert 'nonsplit' in text
    assert '9c' in text


def test_report_text(report_psl2_17):
    text, res_dict = format_as_all(report_psl2_17)
    assert 'PSL(2,17): units of order 8 = 2^3' in text
    assert 'verdict: verified' in text
    assert 'admissible chains: 2' in text
    assert 'chain 1 (trivial)' in text
    assert 'stable at bound 7: yes' in text
    assert 'characters: phi_1, phi_2, phi_3, phi_4, phi_5' in text
    assert res_dict['verdict'] == 'verified'
    assert res_dict['group']['q'] == 17
    chain = res_dict['chains'][0]
    assert chain['trivial'] is True
    assert chain['bovdi_sums'] == {'1': 0, '2': 0}
    assert [v['unit_order'] for v in chain['chain']['vectors']] == [8, 4, 2]
    assert all(isinstance(mu, str) and '/' in mu
               for mu in chain['tables'][0]['values'].values())


def test_report_text_counterexample(report_no_bovdi):
    text = format_as_text(report_no_bovdi)
    assert 'chain 2 (NOT trivial)' in text
    assert 'Bovdi restrictions off' in text
    assert 'verdict' not in text
    assert '2a: 1' in text


def test_unsupported_type():
    with pytest.raises(TypeError):
        format_as_text(42)


def test_format_as_dict_identity():
    assert format_as_dict([Fraction(3, 7), None, 'x']) == ['3/7', None, 'x']
