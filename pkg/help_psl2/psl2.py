# -*- coding: utf-8 -*-
"""
Conjugacy classes of G = PSL(2, q), q = p^f, and the Brauer characters
phi_k of G in defining characteristic.

Classes are modelled abstractly, following Dickson's description of the
subgroups: up to conjugation there is one cyclic subgroup of order p,
one of order o_a = (q - 1) / d (generated by ``a``) and one of order
o_b = (q + 1) / d (generated by ``b``), d = gcd(2, p - 1), and every element
lies in a conjugate of one of them. A non-identity element of ``<a>`` or
``<b>`` is conjugate to its inverse and to nothing else in that subgroup,
so ``a^i`` ("split" class i) and ``a^(o_a - i)`` are the same class.
"""
from collections import Counter
from math import gcd
import string
from typing import Dict, List

from .base_utils import attrs
from .cyclotomic import CycloSum, constant, make
from .numtheory import is_prime


IDENTITY = 'identity'
UNIPOTENT = 'unipotent'
SPLIT = 'split'
NONSPLIT = 'nonsplit'

FAMILIES = (IDENTITY, UNIPOTENT, SPLIT, NONSPLIT)


@attrs
class ConjClass(object):
    """ A conjugacy class of PSL(2, q).

    :family: is one of ``identity``, ``unipotent``, ``split``, ``nonsplit``;
    :parameter: is the index of the unipotent class (1..d), or the exponent
    ``i`` of ``a^i`` (split) / ``b^i`` (nonsplit), normalized to
    ``min(i, o - i)``. :label: is an ATLAS-style name like ``4a``.
    """
    def __init__(self,
                 id,  # type: int
                 family,  # type: str
                 parameter,  # type: int
                 element_order,  # type: int
                 label='',  # type: str
                 ):
        # type: (...) -> None
        self.id = id
        self.family = family
        self.parameter = parameter
        self.element_order = element_order
        self.label = label

    def sort_key(self):
        """ Solver ordering: by element order, then family, then parameter. """
        return (self.element_order, FAMILIES.index(self.family),
                self.parameter)


@attrs
class GroupData(object):
    """ Class inventory of PSL(2, p^f). Use :func:`build_group`. """
    def __init__(self,
                 p,  # type: int
                 f,  # type: int
                 q,  # type: int
                 d,  # type: int
                 o_a,  # type: int
                 o_b,  # type: int
                 classes,  # type: List[ConjClass]
                 ):
        # type: (...) -> None
        self.p = p
        self.f = f
        self.q = q
        self.d = d
        self.o_a = o_a
        self.o_b = o_b
        self.classes = classes

    @property
    def name(self):
        # type: () -> str
        return 'PSL(2,{})'.format(self.q)

    def class_by_id(self, class_id):
        # type: (int) -> ConjClass
        return self.classes[class_id]

    def find(self, family, parameter):
        # type: (str, int) -> ConjClass
        for c in self.classes:
            if c.family == family and c.parameter == parameter:
                return c
        raise ValueError('{} has no {} class with parameter {}'.format(
            self.name, family, parameter))

    def is_p_regular(self, c):
        # type: (ConjClass) -> bool
        return c.element_order % self.p != 0

    def cyclic_order(self, family):
        # type: (str) -> int
        """ Order of the cyclic subgroup a split/nonsplit class lives in. """
        if family == SPLIT:
            return self.o_a
        if family == NONSPLIT:
            return self.o_b
        raise ValueError('{} classes are not in <a> or <b>'.format(family))


def build_group(p, f=1):
    # type: (int, int) -> GroupData
    """ Return the class inventory of PSL(2, p^f): the identity,
    d unipotent classes, split classes 1..o_a/2 and nonsplit classes 1..o_b/2.

    >>> G = build_group(7)
    >>> [c.element_order for c in G.classes]
    [1, 7, 7, 3, 4, 2]
    >>> [c.label for c in G.classes]
    ['1a', '7a', '7b', '3a', '4a', '2a']
    >>> build_group(4)
    Traceback (most recent call last):
    ...
    ValueError: p must be prime, got 4
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError('p must be prime, got {}'.format(p))
    if not isinstance(f, int) or f < 1:
        raise ValueError('f must be a positive integer, got {}'.format(f))
    q = p ** f
    if q < 4:
        raise ValueError('q = p^f must be at least 4, got {}'.format(q))
    d = gcd(2, p - 1)
    o_a = (q - 1) // d
    o_b = (q + 1) // d

    specs = [(IDENTITY, 0, 1)]
    specs.extend((UNIPOTENT, v, p) for v in range(1, d + 1))
    for family, o in [(SPLIT, o_a), (NONSPLIT, o_b)]:
        if o <= 1:
            continue
        specs.extend((family, i, o // gcd(i, o)) for i in range(1, o // 2 + 1))

    seen = Counter()  # type: Counter
    classes = []
    for idx, (family, parameter, order) in enumerate(specs):
        classes.append(ConjClass(
            id=idx,
            family=family,
            parameter=parameter,
            element_order=order,
            label='{}{}'.format(order, _letters(seen[order])),
        ))
        seen[order] += 1
    return GroupData(p=p, f=f, q=q, d=d, o_a=o_a, o_b=o_b, classes=classes)


def _letters(idx):
    # type: (int) -> str
    """
    >>> _letters(0), _letters(25), _letters(26)
    ('a', 'z', 'ba')
    """
    letters = string.ascii_lowercase
    res = letters[idx % 26]
    idx //= 26
    while idx:
        res = letters[idx % 26] + res
        idx //= 26
    return res


def classes_of_order(G, m):
    # type: (GroupData, int) -> List[ConjClass]
    """
    >>> [c.label for c in classes_of_order(build_group(17), 8)]
    ['8a', '8b']
    >>> classes_of_order(build_group(7), 5)
    []
    """
    return [c for c in G.classes if c.element_order == m]


def p_regular_classes(G):
    # type: (GroupData) -> List[ConjClass]
    return [c for c in G.classes if G.is_p_regular(c)]


def class_by_label(G, label):
    # type: (GroupData, str) -> ConjClass
    for c in G.classes:
        if c.label == label:
            return c
    raise ValueError('{} has no class {!r}'.format(G.name, label))


def power_class(G, c, e):
    # type: (GroupData, ConjClass, int) -> ConjClass
    """ Return the class of ``x ** e`` for ``x`` in class ``c``.

    >>> G = build_group(17)
    >>> power_class(G, G.find(SPLIT, 1), 3).parameter
    3
    >>> power_class(G, G.find(SPLIT, 3), 3).parameter
    1
    >>> power_class(G, G.find(SPLIT, 1), 8).family
    'identity'
    """
    if c.family == IDENTITY or e % c.element_order == 0:
        return G.classes[0]
    if c.family == UNIPOTENT:
        if G.d == 1:
            return c
        # u^e is conjugate to u iff e is a non-zero square in GF(q)
        if pow(e % G.p, (G.q - 1) // 2, G.p) == 1:
            return c
        return G.find(UNIPOTENT, G.d + 1 - c.parameter)
    o = G.cyclic_order(c.family)
    x = (c.parameter * e) % o
    return G.find(c.family, min(x, o - x))


@attrs
class BrauerChar(object):
    """ The Brauer character phi_k of degree 2k + 1, afforded by the action
    of SL(2, q) on homogeneous polynomials of degree 2k in two variables.
    Its values are defined on p-regular classes only.
    """
    def __init__(self,
                 group,  # type: GroupData
                 k,  # type: int
                 ):
        # type: (...) -> None
        self.group = group
        self.k = k

    @property
    def degree(self):
        # type: () -> int
        return 2 * self.k + 1

    def value(self, c):
        # type: (ConjClass) -> CycloSum
        """ Value at class ``c``, at conductor o_a (split classes),
        o_b (nonsplit classes) or 1 (identity).
        """
        if c.family == IDENTITY:
            return constant(self.degree)
        if c.family == UNIPOTENT:
            raise ValueError(
                'phi_{} is not defined at the p-singular class {}'.format(
                    self.k, c.label))
        o = self.group.cyclic_order(c.family)
        terms = [(0, 1)]
        for t in range(1, self.k + 1):
            terms.extend([(c.parameter * t, 1), (-c.parameter * t, 1)])
        return make(o, terms)


def brauer_char(G, k):
    # type: (GroupData, int) -> BrauerChar
    """
    >>> G = build_group(7)
    >>> phi = brauer_char(G, 1)
    >>> phi.value(G.classes[0]).coefficients
    {0: 3}
    >>> phi.value(class_by_label(G, '2a')).coefficients
    {0: 1, 2: 2}
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError('k must be a non-negative integer, got {}'.format(k))
    return BrauerChar(G, k)


def eigenvalue_multiset(G, k, c):
    # type: (GroupData, int, ConjClass) -> Dict[int, int]
    """ Eigenvalues of Theta_k at an element of class ``c`` as a mapping
    from exponents of ``zeta_o`` (o = element order) to multiplicities.

    >>> G = build_group(17)
    >>> eigenvalue_multiset(G, 1, G.find(SPLIT, 1))
    {0: 1, 1: 1, 7: 1}
    >>> eigenvalue_multiset(G, 2, class_by_label(G, '2a'))
    {0: 3, 1: 2}
    """
    if not G.is_p_regular(c):
        raise ValueError(
            'eigenvalues are only defined at p-regular classes, got {}'.format(
                c.label))
    o = c.element_order
    if c.family == IDENTITY:
        return {0: 2 * k + 1}
    step = c.parameter // gcd(c.parameter, G.cyclic_order(c.family))
    counts = Counter([0])  # type: Counter
    for t in range(1, k + 1):
        counts[(step * t) % o] += 1
        counts[(-step * t) % o] += 1
    return dict(sorted(counts.items()))


@attrs
class BrauerTable(object):
    """ Values of phi_0 .. phi_kmax on the p-regular classes of a group. """
    def __init__(self,
                 group,  # type: GroupData
                 characters,  # type: List[BrauerChar]
                 classes,  # type: List[ConjClass]
                 ):
        # type: (...) -> None
        self.group = group
        self.characters = characters
        self.classes = classes

    def values(self, k):
        # type: (int) -> List[CycloSum]
        return [self.characters[k].value(c) for c in self.classes]


def brauer_table(G, kmax):
    # type: (GroupData, int) -> BrauerTable
    if not isinstance(kmax, int) or kmax < 0:
        raise ValueError(
            'kmax must be a non-negative integer, got {}'.format(kmax))
    return BrauerTable(
        group=G,
        characters=[brauer_char(G, k) for k in range(kmax + 1)],
        classes=p_regular_classes(G),
    )

