# -*- coding: utf-8 -*-
"""
Elementary arithmetic functions and the closed-form trace of a root of unity.

All inputs handled here are small (well below 10^6), so factorization is
plain trial division.
"""
from math import gcd
from typing import List, Optional, Tuple


Factorization = List[Tuple[int, int]]


def _check_positive(n, name='n'):
    # type: (int, str) -> None
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError('{} must be an integer, got {!r}'.format(name, n))
    if n < 1:
        raise ValueError('{} must be a positive integer, got {}'.format(name, n))


def factorize(n):
    # type: (int) -> Factorization
    """ Return the prime factorization of ``n`` as a list of
    ``(prime, exponent)`` pairs in ascending order of primes.

    >>> factorize(1)
    []
    >>> factorize(12)
    [(2, 2), (3, 1)]
    >>> factorize(168)
    [(2, 3), (3, 1), (7, 1)]
    >>> factorize(0)
    Traceback (most recent call last):
    ...
    ValueError: n must be a positive integer, got 0
    """
    _check_positive(n)
    factors = []  # type: Factorization
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def is_prime(n):
    # type: (int) -> bool
    """
    >>> [x for x in range(20) if is_prime(x)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def prime_power(n):
    # type: (int) -> Optional[Tuple[int, int]]
    """ Return ``(r, m)`` with ``n == r ** m`` for a prime ``r``,
    or None if ``n`` is not a prime power.

    >>> prime_power(27)
    (3, 3)
    >>> prime_power(12) is None
    True
    >>> prime_power(1) is None
    True
    """
    factors = factorize(n)
    if len(factors) != 1:
        return None
    return factors[0]


def divisors(n):
    # type: (int) -> List[int]
    """
    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    _check_positive(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def mobius(n):
    # type: (int) -> int
    """
    >>> [mobius(n) for n in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def totient(n):
    # type: (int) -> int
    """
    >>> totient(1), totient(9), totient(100)
    (1, 6, 40)
    """
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def trace_cyclo(t, e):
    # type: (int, int) -> int
    """ Trace from the t-th cyclotomic field down to the rationals
    of ``zeta_t ** e``.

    ``zeta_t ** e`` is a primitive s-th root of unity with
    ``s = t / gcd(t, e)``; its trace is ``mobius(s) * totient(t) / totient(s)``.

    >>> trace_cyclo(9, 0), trace_cyclo(9, 3), trace_cyclo(16, 4)
    (6, -3, 0)
    >>> trace_cyclo(8, 4)
    -4
    >>> trace_cyclo(12, -1) == trace_cyclo(12, 1) == 0
    True
    """
    _check_positive(t, 't')
    s = t // gcd(t, e % t)
    mu = mobius(s)
    if not mu:
        return 0
    return mu * (totient(t) // totient(s))
