# -*- coding: utf-8 -*-
"""
Formal integer combinations of roots of unity.

A :class:`CycloSum` is a formal sum ``sum(c_e * zeta_n ** e)`` for a fixed
conductor ``n``. Two different coefficient maps may represent the same
algebraic number (e.g. ``zeta_3 + zeta_3 ** 2`` and ``-1``), so there is no
semantic equality here: everything downstream only applies linear functionals
(traces), which don't depend on the representation. ``==`` compares
canonical forms.
"""
from math import gcd
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .base_utils import attrs
from .numtheory import trace_cyclo


@attrs
class CycloSum(object):
    """ Formal sum of ``conductor``-th roots of unity. :coefficients: maps
    exponents (reduced modulo conductor) to non-zero integer coefficients.
    Use :func:`make` to build instances in canonical form.
    """
    def __init__(self,
                 conductor,  # type: int
                 coefficients,  # type: Dict[int, int]
                 ):
        # type: (...) -> None
        self.conductor = conductor
        self.coefficients = coefficients

    def terms(self):
        # type: () -> List[Tuple[int, int]]
        """ (exponent, coefficient) pairs sorted by exponent. """
        return sorted(self.coefficients.items())

    def is_zero(self):
        # type: () -> bool
        return not self.coefficients

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __rmul__(self, c):
        if not isinstance(c, int):
            return NotImplemented
        return scale(self, c)


def make(conductor, terms=()):
    # type: (int, Iterable[Tuple[int, int]]) -> CycloSum
    """ Build a sum in canonical form: exponents are reduced modulo
    ``conductor``, like terms are merged and zero coefficients dropped.

    >>> make(4, [(1, 1), (5, 1)]).coefficients
    {1: 2}
    >>> make(4, [(1, 1), (1, -1)]).is_zero()
    True
    >>> make(0, [])
    Traceback (most recent call last):
    ...
    ValueError: conductor must be a positive integer, got 0
    """
    if not isinstance(conductor, int) or conductor < 1:
        raise ValueError(
            'conductor must be a positive integer, got {}'.format(conductor))
    coefficients = {}  # type: Dict[int, int]
    for e, c in terms:
        e %= conductor
        coefficients[e] = coefficients.get(e, 0) + c
    return CycloSum(conductor, {e: c for e, c in sorted(coefficients.items())
                                if c})


def constant(c, conductor=1):
    # type: (int, int) -> CycloSum
    return make(conductor, [(0, c)])


def add(x, y):
    # type: (CycloSum, CycloSum) -> CycloSum
    """
    >>> add(make(8, [(1, 1)]), make(8, [(7, 1)])).coefficients
    {1: 1, 7: 1}
    >>> add(make(3, [(1, 1)]), make(3, [(1, -1)])).is_zero()
    True
    """
    if x.conductor != y.conductor:
        raise ValueError('conductor mismatch: {} != {}'.format(
            x.conductor, y.conductor))
    return make(x.conductor, x.terms() + y.terms())


def scale(x, c):
    # type: (CycloSum, int) -> CycloSum
    return make(x.conductor, [(e, c * coef) for e, coef in x.terms()])


def mul_by_root(x, e):
    # type: (CycloSum, int) -> CycloSum
    """ Multiply by ``zeta ** e``.

    >>> mul_by_root(make(8, [(1, 1), (7, 1)]), 1).coefficients
    {0: 1, 2: 1}
    """
    return make(x.conductor, [(exp + e, c) for exp, c in x.terms()])


def galois_conjugate(x, i):
    # type: (CycloSum, int) -> CycloSum
    """ Apply the automorphism ``zeta -> zeta ** i``; ``i`` must be
    coprime to the conductor.
    """
    if gcd(i, x.conductor) != 1:
        raise ValueError('{} is not coprime to conductor {}'.format(
            i, x.conductor))
    return make(x.conductor, [(exp * i, c) for exp, c in x.terms()])


def conjugate(x):
    # type: (CycloSum) -> CycloSum
    """
    >>> conjugate(make(4, [(1, 1)])).coefficients
    {3: 1}
    """
    return galois_conjugate(x, -1)


def rebase(x, new_conductor):
    # type: (CycloSum, int) -> CycloSum
    """ Represent the same number over a conductor which is a multiple
    of the current one.

    >>> rebase(make(2, [(1, 1)]), 8).coefficients
    {4: 1}
    >>> rebase(make(4, [(1, 1)]), 6)
    Traceback (most recent call last):
    ...
    ValueError: conductor 4 does not divide 6
    """
    if new_conductor < 1 or new_conductor % x.conductor:
        raise ValueError('conductor {} does not divide {}'.format(
            x.conductor, new_conductor))
    factor = new_conductor // x.conductor
    return make(new_conductor, [(e * factor, c) for e, c in x.terms()])


def compress(x):
    # type: (CycloSum) -> CycloSum
    """ Represent the same number over the smallest conductor
    (a divisor of the current one) which holds every exponent.

    >>> compress(make(6, [(0, 1), (2, 1), (4, 1)]))
    CycloSum(conductor=3, coefficients={0: 1, 1: 1, 2: 1})
    >>> compress(make(6, [(0, 5)]))
    CycloSum(conductor=1, coefficients={0: 5})
    """
    g = x.conductor
    for e in x.coefficients:
        g = gcd(g, e)
    return make(x.conductor // g, [(e // g, c) for e, c in x.terms()])


def trace_to_q(x):
    # type: (CycloSum) -> int
    """ Trace from the ``x.conductor``-th cyclotomic field to the rationals.

    >>> trace_to_q(constant(1, 4))
    2
    >>> trace_to_q(make(8, [(1, 1), (7, 1)]))
    0
    >>> trace_to_q(make(8, [(2, 1)]))
    0
    """
    return sum(c * trace_cyclo(x.conductor, e) for e, c in x.terms())


def numeric_embed(x):
    # type: (CycloSum) -> complex
    """ Evaluate the sum with ``zeta = exp(2 pi i / conductor)``.

    >>> z = numeric_embed(make(3, [(1, 1)]))
    >>> abs(z - complex(-0.5, 3 ** 0.5 / 2)) < 1e-9
    True
    """
    if x.is_zero():
        return 0j
    exponents, coefs = zip(*x.terms())
    roots = np.exp(2j * np.pi * np.array(exponents) / x.conductor)
    return complex(np.dot(np.array(coefs, dtype=float), roots))
