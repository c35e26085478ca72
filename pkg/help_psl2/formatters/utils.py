# -*- coding: utf-8 -*-
from fractions import Fraction
from typing import List

from help_psl2.cyclotomic import CycloSum, numeric_embed


_ROOT = u'ζ'
_DOT = u'·'


def format_cyclo(x):
    # type: (CycloSum) -> str
    """ Format a sum of roots of unity as an expression.

    >>> from help_psl2.cyclotomic import make
    >>> format_cyclo(make(4, [(0, 1), (2, 2)]))
    '1 + 2·ζ_4^2'
    >>> format_cyclo(make(8, [(1, -1), (7, 1)]))
    '-ζ_8 + ζ_8^7'
    >>> format_cyclo(make(3))
    '0'
    """
    if x.is_zero():
        return '0'
    parts = []  # type: List[str]
    for e, c in x.terms():
        if e == 0:
            body = str(abs(c))
        else:
            root = u'{}_{}'.format(_ROOT, x.conductor)
            if e != 1:
                root = u'{}^{}'.format(root, e)
            body = root if abs(c) == 1 else u'{}{}{}'.format(abs(c), _DOT, root)
        if not parts:
            parts.append(body if c > 0 else '-' + body)
        else:
            parts.append(u'{} {}'.format('+' if c > 0 else '-', body))
    return u' '.join(parts)


def format_numeric(x):
    # type: (CycloSum) -> str
    """ Real part of the value, rounded; values shown are real.

    >>> from help_psl2.cyclotomic import make
    >>> format_numeric(make(4, [(0, 1), (2, 2)]))
    '-1.0'
    >>> format_numeric(make(5, [(1, 1), (4, 1)]))
    '0.618'
    """
    z = numeric_embed(x)
    return str(round(z.real, 3) + 0.0)


def format_fraction(value):
    # type: (Fraction) -> str
    """ Canonical ``num/den`` form, also for integers.

    >>> format_fraction(Fraction(3)), format_fraction(Fraction(-1, 2))
    ('3/1', '-1/2')
    """
    return '{}/{}'.format(value.numerator, value.denominator)
