# -*- coding: utf-8 -*-
from __future__ import print_function
import json
import os
from pprint import pprint

from help_psl2.formatters import format_as_dict, format_as_text


GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def format_as_all(res):
    """ Format a result as text and as a dict, check JSON-encoding,
    print the text, return text and dict.
    """
    res_dict = format_as_dict(res)
    pprint(res_dict)
    json.dumps(res_dict)  # check that it can be serialized to JSON
    res_text = format_as_text(res)
    print(res_text)
    return res_text, res_dict


def load_golden(name):
    with open(os.path.join(GOLDEN_DIR, name)) as f:
        return json.load(f)


def without_timing(doc):
    return {key: value for key, value in doc.items() if key != 'timing'}
