# -*- coding: utf-8 -*-
from math import gcd

import numpy as np
import pytest

from help_psl2.numtheory import (
    divisors, factorize, is_prime, mobius, prime_power, totient, trace_cyclo)


def _numeric_trace(t, e):
    units = np.array([i for i in range(1, t + 1) if gcd(i, t) == 1])
    return np.exp(2j * np.pi * e * units / t).sum()


def test_trace_cyclo_matches_galois_sum():
    for t in range(1, 101):
        for e in range(t):
            assert abs(trace_cyclo(t, e) - _numeric_trace(t, e)) < 1e-6, (t, e)


@pytest.mark.parametrize(['r'], [[2], [3], [5]])
@pytest.mark.parametrize(['n'], [[1], [2], [3], [4]])
def test_trace_cyclo_prime_power(r, n):
    t = r ** n
    for e in range(t):
        s = t // gcd(t, e)
        if s == 1:
            expected = r ** (n - 1) * (r - 1)
        elif s == r:
            expected = -r ** (n - 1)
        else:
            expected = 0
        assert trace_cyclo(t, e) == expected


def test_trace_cyclo_negative_exponent():
    assert trace_cyclo(9, -3) == trace_cyclo(9, 6) == -3
    assert trace_cyclo(1, 5) == 1


def test_trace_cyclo_symmetric():
    for t in range(1, 101):
        for e in range(-t, 2 * t):
            assert trace_cyclo(t, e) == trace_cyclo(t, -e), (t, e)
            assert trace_cyclo(t, e) == trace_cyclo(t, e + t), (t, e)


def test_factorize():
    for n in range(1, 500):
        factors = factorize(n)
        assert [p for p, _ in factors] == sorted(p for p, _ in factors)
        assert all(is_prime(p) for p, _ in factors)
        assert int(np.prod([p ** e for p, e in factors])) == n


@pytest.mark.parametrize(['n'], [[0], [-3]])
def test_factorize_invalid(n):
    with pytest.raises(ValueError):
        factorize(n)


def test_factorize_type():
    with pytest.raises(TypeError):
        factorize(2.0)
    with pytest.raises(TypeError):
        factorize(True)


def test_is_prime():
    brute = [n for n in range(200)
             if n > 1 and all(n % d for d in range(2, n))]
    assert [n for n in range(200) if is_prime(n)] == brute


def test_prime_power():
    assert prime_power(2) == (2, 1)
    assert prime_power(128) == (2, 7)
    assert prime_power(121) == (11, 2)
    assert prime_power(36) is None


def test_divisors():
    for n in range(1, 200):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]


def test_mobius_sum():
    # sum of mobius over divisors vanishes for n > 1
    for n in range(1, 200):
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_totient():
    for n in range(1, 200):
        assert totient(n) == sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)
