# -*- coding: utf-8 -*-
import pytest

from help_psl2.helpsolver import solve, verify_theorem1
from help_psl2.psl2 import build_group


@pytest.fixture(scope="session")
def psl2_7():
    return build_group(7)


@pytest.fixture(scope="session")
def psl2_17():
    return build_group(17)


@pytest.fixture(scope="session")
def report_psl2_17(psl2_17):
    return verify_theorem1(psl2_17, 2, 3, check_stability=True)


@pytest.fixture(scope="session")
def report_no_bovdi(psl2_7):
    return solve(psl2_7, 2, 2, assume_bovdi=False)
