# -*- coding: utf-8 -*-
from __future__ import absolute_import

__version__ = '0.1.0'

from .psl2 import build_group, brauer_char, brauer_table, eigenvalue_multiset
from .helpsolver import (
    enumerate_pa,
    solve,
    verify_theorem1,
    admissibility_check,
    is_trivial_chain,
)
from .formatters import format_as_text, format_as_dict
