# -*- coding: utf-8 -*-
"""
HeLP constraints for torsion units of prime power order r^n, r != p,
in the integral group ring of PSL(2, p^f).

For a torsion unit ``u`` of order ``N`` with partial augmentations
``eps_x(u)``, the multiplicity of ``xi = zeta_N ** e`` as an eigenvalue
of ``D(u)`` (``D`` affording the Brauer character phi) is::

    mu(xi, u, phi) = 1/N * sum_{d | N, d != 1} Tr(phi(u^d) xi^-d)
                     + 1/N * sum_x eps_x(u) Tr(phi(x) xi^-1)

and it has to be a non-negative integer. When ``N = r^n`` the first sum is
``mu(xi^r, u^r, phi) / r``. Chains of partial augmentations of
``u, u^r, ..., u^(r^(n-1))`` satisfying these constraints are enumerated
level by level inside a box ``[-bound, bound]``.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import logging
from typing import Dict, List, Optional, Tuple, Any

import numpy as np
from sklearn.utils import check_random_state

from .base_utils import attrs
from .cyclotomic import (
    CycloSum, compress, make, mul_by_root, rebase, scale, trace_to_q)
from .numtheory import is_prime
from .psl2 import (
    ConjClass, GroupData, brauer_char, classes_of_order, eigenvalue_multiset,
    power_class,
)


logger = logging.getLogger(__name__)

DEFAULT_BOUND = 5

VERIFIED = 'verified'
COUNTEREXAMPLE = 'counterexample'
NO_ELEMENTS = 'no elements of this order'
# rejection key for the restrictions imposed with assume_bovdi
BOVDI = 'bovdi'


@attrs
class PAVector(object):
    """ Partial augmentations of a unit of order :unit_order:.
    :entries: maps class ids to integers; it covers every non-identity class
    whose element order divides :unit_order:, in solver order.
    """
    def __init__(self,
                 unit_order,  # type: int
                 entries,  # type: Dict[int, int]
                 ):
        # type: (...) -> None
        self.unit_order = unit_order
        self.entries = entries

    def support(self):
        # type: () -> Dict[int, int]
        return {cid: eps for cid, eps in self.entries.items() if eps}

    def key(self):
        # type: () -> Tuple[int, ...]
        return tuple(self.entries.values())


@attrs
class PAChain(object):
    """ Partial augmentations of ``u, u^r, ..., u^(r^(n-1))``
    for a unit ``u`` of order ``r^n``.
    """
    def __init__(self,
                 r,  # type: int
                 n,  # type: int
                 vectors,  # type: List[PAVector]
                 ):
        # type: (...) -> None
        self.r = r
        self.n = n
        self.vectors = vectors

    @property
    def unit_order(self):
        # type: () -> int
        return self.r ** self.n

    def power(self):
        # type: () -> Optional[PAChain]
        """ Chain of ``u^r``, or None if ``u^r`` is the identity. """
        if self.n == 1:
            return None
        return PAChain(self.r, self.n - 1, self.vectors[1:])

    def key(self):
        # type: () -> Tuple[Tuple[int, ...], ...]
        return tuple(v.key() for v in self.vectors)


@attrs
class MultiplicityTable(object):
    """ Multiplicities ``mu(zeta_N ** e, u, phi_k)`` for ``e = 0 .. N-1``,
    ``N`` = :unit_order:.
    """
    def __init__(self,
                 k,  # type: int
                 unit_order,  # type: int
                 values,  # type: Dict[int, Fraction]
                 ):
        # type: (...) -> None
        self.k = k
        self.unit_order = unit_order
        self.values = values

    def is_admissible(self):
        # type: () -> bool
        return all(mu.denominator == 1 and mu >= 0
                   for mu in self.values.values())

    def total(self):
        # type: () -> Fraction
        return sum(self.values.values(), Fraction(0))


@attrs
class ChainResult(object):
    """ An admissible chain together with its multiplicity tables
    (one per character), its triviality verdict, sums of partial
    augmentations of ``u`` over classes of order ``r^m`` for ``m < n``,
    and whether ``mu(1, u, phi)`` matches a group element of the same order
    (None if there is no such element).
    """
    def __init__(self,
                 chain,  # type: PAChain
                 trivial,  # type: bool
                 tables,  # type: List[MultiplicityTable]
                 bovdi_sums,  # type: Dict[int, int]
                 mu_one_match=None,  # type: Optional[bool]
                 ):
        # type: (...) -> None
        self.chain = chain
        self.trivial = trivial
        self.tables = tables
        self.bovdi_sums = bovdi_sums
        self.mu_one_match = mu_one_match


@attrs
class SolverReport(object):
    """ Result of a search for admissible partial augmentation chains.

    :verdict: is ``verified`` if every admissible chain is trivial,
    ``counterexample`` otherwise, and None when no verdict was requested.
    :rejections: counts candidates by the first constraint which rejected
    them (``phi_k`` or ``bovdi``); :pruned: counts subtrees cut off by interval bounds.
    :bound_stable: is None unless the search was repeated with
    ``bound + 2``; then it tells whether the chain lists agree.
    """
    def __init__(self,
                 group,  # type: GroupData
                 r,  # type: int
                 n,  # type: int
                 chars,  # type: List[int]
                 bound,  # type: int
                 assume_bovdi,  # type: bool
                 chains,  # type: List[ChainResult]
                 verdict=None,  # type: Optional[str]
                 note=None,  # type: Optional[str]
                 rejections=None,  # type: Optional[Dict[str, int]]
                 pruned=0,  # type: int
                 candidates=0,  # type: int
                 bound_stable=None,  # type: Optional[bool]
                 ):
        # type: (...) -> None
        self.group = group
        self.r = r
        self.n = n
        self.chars = chars
        self.bound = bound
        self.assume_bovdi = assume_bovdi
        self.chains = chains
        self.verdict = verdict
        self.note = note
        self.rejections = rejections
        self.pruned = pruned
        self.candidates = candidates
        self.bound_stable = bound_stable


def pa_domain(G, r, m):
    # type: (GroupData, int, int) -> List[ConjClass]
    """ Classes which may carry a non-zero partial augmentation of a unit
    of order ``r^m``: non-identity classes of order dividing ``r^m``.

    >>> from help_psl2.psl2 import build_group
    >>> [c.label for c in pa_domain(build_group(17), 2, 3)]
    ['2a', '4a', '8a', '8b']
    """
    order = r ** m
    domain = [c for c in G.classes
              if c.element_order > 1 and order % c.element_order == 0]
    return sorted(domain, key=ConjClass.sort_key)


def pa_vector(G, unit_order, entries):
    # type: (GroupData, int, Dict[int, int]) -> PAVector
    """ Build a :class:`PAVector` from a (possibly sparse) mapping
    of class ids to partial augmentations, checking that the entries sum
    to 1 and sit on non-identity classes of order dividing ``unit_order``.
    """
    domain = sorted(
        (c for c in G.classes
         if c.element_order > 1 and unit_order % c.element_order == 0),
        key=ConjClass.sort_key)
    domain_ids = {c.id for c in domain}
    for cid in entries:
        if cid not in domain_ids:
            raise ValueError(
                'class {} can not carry a partial augmentation of a unit '
                'of order {}'.format(G.class_by_id(cid).label, unit_order))
    if sum(entries.values()) != 1:
        raise ValueError('partial augmentations must sum to 1, got {}'.format(
            sum(entries.values())))
    return PAVector(unit_order, {c.id: entries.get(c.id, 0) for c in domain})


def chain_of_class(G, r, c):
    # type: (GroupData, int, ConjClass) -> PAChain
    """ The chain of a group element from class ``c`` of order ``r^n``. """
    pp = _exponent_of(r, c.element_order)
    if pp is None or pp == 0:
        raise ValueError('class {} does not have {}-power order'.format(
            c.label, r))
    vectors = []
    x = c
    for j in range(pp):
        vectors.append(pa_vector(G, r ** (pp - j), {x.id: 1}))
        x = power_class(G, x, r)
    return PAChain(r, pp, vectors)


def _exponent_of(r, order):
    # type: (int, int) -> Optional[int]
    m = 0
    while order % r == 0:
        order //= r
        m += 1
    return m if order == 1 else None


def char_value_of_unit(G, k, pa, conductor):
    # type: (GroupData, int, PAVector, int) -> CycloSum
    """ ``phi_k(u) = sum_x eps_x(u) phi_k(x)``, written over ``conductor``. """
    phi = brauer_char(G, k)
    total = make(conductor)
    for cid, eps in pa.support().items():
        c = G.class_by_id(cid)
        if not G.is_p_regular(c):
            raise ValueError('class {} is p-singular'.format(c.label))
        if conductor % c.element_order:
            raise ValueError(
                'conductor {} is not a multiple of the order of {}'.format(
                    conductor, c.label))
        total = total + scale(rebase(compress(phi.value(c)), conductor), eps)
    return total


def identity_table(k):
    # type: (int) -> MultiplicityTable
    """ Multiplicities for the identity: eigenvalue 1 with multiplicity
    ``2k + 1``. """
    return MultiplicityTable(k, 1, {0: Fraction(2 * k + 1)})


def multiplicity_general(G, k, chain, e):
    # type: (GroupData, int, PAChain, int) -> Fraction
    """ ``mu(zeta_N ** e, u, phi_k)`` from the full divisor sum. """
    N = chain.unit_order
    total = 2 * k + 1  # d = N: phi_k(1) over the rationals
    for j, vector in enumerate(chain.vectors):
        M = N // chain.r ** j
        value = char_value_of_unit(G, k, vector, M)
        total += trace_to_q(mul_by_root(value, -e))
    return Fraction(total, N)


def multiplicity_primepower(G, k, chain, e, table_of_ur):
    # type: (GroupData, int, PAChain, int, MultiplicityTable) -> Fraction
    """ ``mu(zeta_N ** e, u, phi_k)`` from the multiplicities of ``u^r``. """
    N = chain.unit_order
    r = chain.r
    if table_of_ur.k != k or table_of_ur.unit_order != N // r:
        raise ValueError(
            'expected a table of phi_{} for a unit of order {}, got phi_{} '
            'for order {}'.format(k, N // r, table_of_ur.k,
                                  table_of_ur.unit_order))
    lower = table_of_ur.values[e % (N // r)]
    value = char_value_of_unit(G, k, chain.vectors[0], N)
    return lower / r + Fraction(trace_to_q(mul_by_root(value, -e)), N)


def multiplicity_table(G, k, chain, table_of_ur=None):
    # type: (GroupData, int, PAChain, Optional[MultiplicityTable]) -> MultiplicityTable
    """ Multiplicity table of ``phi_k`` for the unit described by ``chain``.
    The prime power formula is used if the table of ``u^r``
    is passed, the general formula otherwise.
    """
    N = chain.unit_order
    if table_of_ur is None:
        values = {e: multiplicity_general(G, k, chain, e) for e in range(N)}
    else:
        values = {e: multiplicity_primepower(G, k, chain, e, table_of_ur)
                  for e in range(N)}
    return MultiplicityTable(k, N, values)


def chain_tables(G, chars, chain):
    # type: (GroupData, List[int], PAChain) -> List[List[MultiplicityTable]]
    """ Multiplicity tables for every level of ``chain``, from ``u``
    down to ``u^(r^(n-1))``; ``result[j][i]`` belongs to ``chars[i]``.
    """
    levels = []  # type: List[List[MultiplicityTable]]
    lower = [identity_table(k) for k in chars]
    for j in reversed(range(chain.n)):
        sub = PAChain(chain.r, chain.n - j, chain.vectors[j:])
        lower = [multiplicity_table(G, k, sub, table)
                 for k, table in zip(chars, lower)]
        levels.insert(0, lower)
    return levels


def admissibility_check(G, chars, chain):
    # type: (GroupData, List[int], PAChain) -> Tuple[bool, List[MultiplicityTable]]
    """ Check that all multiplicities of all listed characters are
    non-negative integers, for ``u`` and for all its powers in the chain.
    Return the verdict and the tables of ``u``.
    """
    _check_chars(chars)
    levels = chain_tables(G, chars, chain)
    ok = all(t.is_admissible() for tables in levels for t in tables)
    return ok, levels[0]


def is_trivial_chain(G, chain):
    # type: (GroupData, PAChain) -> bool
    """ True if the chain is the chain of a group element: every level
    has a single partial augmentation 1 (all others 0), and the classes
    are successive r-th powers.
    """
    classes = []
    for vector in chain.vectors:
        support = vector.support()
        if len(support) != 1 or list(support.values()) != [1]:
            return False
        classes.append(G.class_by_id(next(iter(support))))
    return all(power_class(G, x, chain.r).id == y.id
               for x, y in zip(classes, classes[1:]))


def bovdi_sums(G, chain):
    # type: (GroupData, PAChain) -> Dict[int, int]
    """ Sums of the partial augmentations of ``u`` over the classes of
    order ``r^m``, for ``1 <= m < n``. These are expected to vanish.
    """
    support = chain.vectors[0].support()
    return {m: sum(support.get(c.id, 0)
                   for c in classes_of_order(G, chain.r ** m))
            for m in range(1, chain.n)}


def default_chars(G, r, n):
    # type: (GroupData, int, int) -> List[int]
    """ phi_1 .. phi_K with ``K = min(r^(n-1) + 1, max(o_a, o_b) - 1)``.

    >>> from help_psl2.psl2 import build_group
    >>> default_chars(build_group(7), 2, 2)
    [1, 2, 3]
    """
    K = min(r ** (n - 1) + 1, max(G.o_a, G.o_b) - 1)
    return list(range(1, K + 1))


def random_chain(G, r, n, bound=DEFAULT_BOUND, random_state=None):
    # type: (GroupData, int, int, int, Any) -> PAChain
    """ A random chain with partial augmentations summing to 1 at every
    level; all but the last entry of each level are drawn from
    ``[-bound, bound]``. The chain is usually not admissible.
    """
    rng = check_random_state(random_state)
    vectors = []
    for j in range(n):
        domain = pa_domain(G, r, n - j)
        if not domain:
            raise ValueError('{} has no elements of order dividing {}'.format(
                G.name, r ** (n - j)))
        head = [int(x) for x in rng.randint(-bound, bound + 1,
                                            size=len(domain) - 1)]
        values = head + [1 - sum(head)]
        vectors.append(PAVector(r ** (n - j),
                                {c.id: v for c, v in zip(domain, values)}))
    return PAChain(r, n, vectors)


@attrs
class _SearchStats(object):
    def __init__(self,
                 rejections,  # type: Counter
                 pruned=0,  # type: int
                 candidates=0,  # type: int
                 ):
        # type: (...) -> None
        self.rejections = rejections
        self.pruned = pruned
        self.candidates = candidates

    def update(self, other):
        # type: (_SearchStats) -> None
        self.rejections.update(other.rejections)
        self.pruned += other.pruned
        self.candidates += other.candidates


def _as_matrix(rows, n_cols):
    return np.array(rows, dtype=object).reshape(len(rows), n_cols)


def _reach(rows, bound, n_vars, dtype):
    """ ``reach[:, t]``: largest change the variables ``t..`` can cause. """
    reach = np.zeros((rows.shape[0], n_vars + 1), dtype=dtype)
    if n_vars:
        spread = np.abs(rows) * bound
        reach[:, :n_vars] = np.cumsum(spread[:, ::-1], axis=1)[:, ::-1]
    return reach


class _BoxSearch(object):
    """ Integer vectors ``x`` in ``[-bound, bound]^n_vars`` with
    ``sum(x) == 1`` such that every entry of ``consts + rows @ x`` is
    a non-negative multiple of ``modulus`` and ``eq_consts + eq_rows @ x``
    vanishes.

    Each row of ``rows`` is ``N * mu`` for one (character, exponent) pair,
    so it is affine in ``x`` with integer coefficients. A partial assignment
    is dropped as soon as some row can't reach its allowed range even if
    the remaining variables take their most favourable values in the box.
    """
    def __init__(self, rows, consts, labels, eq_rows, eq_consts, eq_labels,
                 modulus, bound):
        self.modulus = modulus
        self.bound = bound
        self.labels = labels
        self.eq_labels = eq_labels
        self.n_vars = rows.shape[1]
        magnitude = max(
            [int(np.abs(m).sum(axis=1).max()) * bound + int(np.abs(c).max())
             for m, c in [(rows, consts), (eq_rows, eq_consts)]
             if m.shape[0] and m.shape[1]] or [0])
        dtype = np.int64 if magnitude < 2 ** 62 else object
        self.rows = rows.astype(dtype)
        self.consts = consts.astype(dtype)
        self.eq_rows = eq_rows.astype(dtype)
        self.eq_consts = eq_consts.astype(dtype)
        self.reach = _reach(self.rows, bound, self.n_vars, dtype)
        self.eq_reach = _reach(self.eq_rows, bound, self.n_vars, dtype)

    def first_values(self):
        # type: () -> List[int]
        if self.n_vars <= 1:
            return [1] if self.n_vars == 1 else []
        lo = max(-self.bound, 1 - (self.n_vars - 1) * self.bound)
        hi = min(self.bound, 1 + (self.n_vars - 1) * self.bound)
        return list(range(lo, hi + 1))

    def run(self, first):
        # type: (int) -> Tuple[List[Tuple[int, ...]], _SearchStats]
        """ Search with the first variable fixed to ``first``. """
        stats = _SearchStats(Counter())
        found = []  # type: List[Tuple[int, ...]]
        if not self.n_vars:
            return found, stats
        x = [0] * self.n_vars
        if self.n_vars == 1:
            self._leaf(x, self.consts, self.eq_consts, 0, first, found, stats)
        else:
            x[0] = first
            self._dfs(1, x,
                      self.consts + self.rows[:, 0] * first,
                      self.eq_consts + self.eq_rows[:, 0] * first,
                      first, found, stats)
        return found, stats

    def _dfs(self, t, x, partial, eq_partial, total, found, stats):
        if ((partial + self.reach[:, t] < 0).any() or
                (abs(eq_partial) > self.eq_reach[:, t]).any()):
            stats.pruned += 1
            return
        remaining = self.n_vars - t
        if remaining == 1:
            self._leaf(x, partial, eq_partial, t, 1 - total, found, stats)
            return
        lo = max(-self.bound, 1 - total - (remaining - 1) * self.bound)
        hi = min(self.bound, 1 - total + (remaining - 1) * self.bound)
        for v in range(lo, hi + 1):
            x[t] = v
            self._dfs(t + 1, x,
                      partial + self.rows[:, t] * v,
                      eq_partial + self.eq_rows[:, t] * v,
                      total + v, found, stats)
        x[t] = 0

    def _leaf(self, x, partial, eq_partial, t, value, found, stats):
        if abs(value) > self.bound:
            return
        x[t] = value
        stats.candidates += 1
        values = partial + self.rows[:, t] * value
        bad = (values < 0) | (values % self.modulus != 0)
        eq_bad = (eq_partial + self.eq_rows[:, t] * value) != 0
        if bad.any():
            stats.rejections[self.labels[int(np.argmax(bad))]] += 1
        elif eq_bad.any():
            stats.rejections[self.eq_labels[int(np.argmax(eq_bad))]] += 1
        else:
            found.append(tuple(x))
        x[t] = 0


def _level_search(G, r, m, chars, lower_tables, bound, assume_bovdi):
    # type: (GroupData, int, int, List[int], List[MultiplicityTable], int, bool) -> Tuple[_BoxSearch, List[ConjClass]]
    """ Set up the integer search for partial augmentations of ``u``
    (order ``N = r^m``) given the multiplicity tables of ``u^r``. """
    N = r ** m
    domain = pa_domain(G, r, m)
    rows, consts, labels = [], [], []
    eq_rows, eq_consts, eq_labels = [], [], []
    targets = classes_of_order(G, N)
    for k, lower in zip(chars, lower_tables):
        phi = brauer_char(G, k)
        values = [rebase(compress(phi.value(c)), N) for c in domain]
        # characters are real, so e and -e give the same constraint
        for e in range(N // 2 + 1):
            mu_lower = lower.values[e % (N // r)]
            assert mu_lower.denominator == 1
            row = [trace_to_q(mul_by_root(v, -e)) for v in values]
            const = (N // r) * mu_lower.numerator
            rows.append(row)
            consts.append(const)
            labels.append('phi_{}'.format(k))
            if e == 0 and assume_bovdi and targets:
                # mu(1, u, phi) = mu(1, g, phi) for g of order N
                mu_one = eigenvalue_multiset(G, k, targets[0]).get(0, 0)
                eq_rows.append(row)
                eq_consts.append(const - N * mu_one)
                eq_labels.append(BOVDI)
    if assume_bovdi:
        # partial augmentations at classes of order r^w, w < m, sum to 0
        for w in range(1, m):
            eq_rows.append([int(c.element_order == r ** w) for c in domain])
            eq_consts.append(0)
            eq_labels.append(BOVDI)
    search = _BoxSearch(
        rows=_as_matrix(rows, len(domain)),
        consts=np.array(consts, dtype=object),
        labels=labels,
        eq_rows=_as_matrix(eq_rows, len(domain)),
        eq_consts=np.array(eq_consts, dtype=object),
        eq_labels=eq_labels,
        modulus=N,
        bound=bound,
    )
    return search, domain


def _run_search(task):
    # type: (Tuple[_BoxSearch, int]) -> Tuple[List[Tuple[int, ...]], _SearchStats]
    search, first = task
    return search.run(first)


def _run_tasks(tasks, n_jobs):
    """ Run box searches, in worker processes if ``n_jobs > 1``.
    Results come back in task order.
    """
    if n_jobs == 1 or len(tasks) <= 1:
        return [_run_search(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=n_jobs) as executor:
        chunksize = max(1, len(tasks) // (4 * n_jobs))
        return list(executor.map(_run_search, tasks, chunksize=chunksize))


def _enumerate(G, r, n, chars, bound, assume_bovdi, n_jobs, stats):
    # type: (...) -> List[Tuple[PAChain, List[MultiplicityTable]]]
    """ Admissible chains of order ``r^n`` with the tables of ``u``. """
    if n == 1:
        lower = [(None, [identity_table(k) for k in chars])]  # type: List[Tuple[Any, List[MultiplicityTable]]]
    else:
        lower = _enumerate(G, r, n - 1, chars, bound, assume_bovdi, n_jobs,
                           stats)
    N = r ** n

    domains = []
    task_idx = []
    tasks = []
    for idx, (_, lower_tables) in enumerate(lower):
        search, domain = _level_search(
            G, r, n, chars, lower_tables, bound, assume_bovdi)
        domains.append(domain)
        for first in search.first_values():
            task_idx.append(idx)
            tasks.append((search, first))

    result = []
    for idx, (found, task_stats) in zip(task_idx, _run_tasks(tasks, n_jobs)):
        stats.update(task_stats)
        lower_chain, lower_tables = lower[idx]
        domain = domains[idx]
        lower_vectors = lower_chain.vectors if lower_chain else []
        for x in found:
            vector = PAVector(N, {c.id: v for c, v in zip(domain, x)})
            chain = PAChain(r, n, [vector] + lower_vectors)
            tables = [multiplicity_table(G, k, chain, table)
                      for k, table in zip(chars, lower_tables)]
            result.append((chain, tables))
    result.sort(key=lambda item: item[0].key())
    logger.info('order %d: %d admissible chains on top of %d of order %d',
                N, len(result), len(lower), N // r)
    return result


def _check_params(G, r, n, bound):
    # type: (GroupData, int, int, int) -> None
    if not isinstance(r, int) or not is_prime(r):
        raise ValueError('r must be prime, got {}'.format(r))
    if r == G.p:
        raise ValueError(
            'r = p = {} is not supported: Brauer characters in defining '
            'characteristic only see p-regular classes, so the method '
            'needs r != p'.format(r))
    if not isinstance(n, int) or n < 1:
        raise ValueError('n must be a positive integer, got {}'.format(n))
    if not isinstance(bound, int) or bound < 1:
        raise ValueError('bound must be at least 1, got {}'.format(bound))


def _check_chars(chars):
    # type: (List[int]) -> None
    if not chars:
        raise ValueError('at least one character is needed')
    for k in chars:
        if not isinstance(k, int) or k < 0:
            raise ValueError(
                'character indices must be non-negative integers, '
                'got {!r}'.format(k))


def _search(G, r, n, chars, bound, assume_bovdi, n_jobs):
    _check_params(G, r, n, bound)
    if chars is None:
        chars = default_chars(G, r, n)
    chars = list(chars)
    _check_chars(chars)
    if n_jobs < 1:
        raise ValueError('n_jobs must be at least 1, got {}'.format(n_jobs))
    stats = _SearchStats(Counter())
    found = _enumerate(G, r, n, chars, bound, assume_bovdi, n_jobs, stats)
    logger.debug('%d candidates evaluated, %d subtrees pruned',
                 stats.candidates, stats.pruned)
    return found, stats, chars


def enumerate_pa(G, r, n, chars=None, bound=DEFAULT_BOUND, assume_bovdi=True,
                 n_jobs=1):
    # type: (GroupData, int, int, Optional[List[int]], int, bool, int) -> List[PAChain]
    """ Return all chains of partial augmentations of units of order
    ``r^n`` with entries in ``[-bound, bound]`` which satisfy the HeLP
    constraints for the Brauer characters ``phi_k``, ``k`` in ``chars``
    (:func:`default_chars` by default), at every level of the chain.
    Chains are sorted lexicographically by their entries.

    With ``assume_bovdi=True`` (default) the chains must also satisfy the
    known restrictions on units of order ``r^m``: partial augmentations
    over the classes of order ``r^w``, ``w < m``, sum to 0, and
    ``mu(1, u, phi) = mu(1, g, phi)`` for a group element ``g`` of
    order ``r^m``. Brauer characters alone can't rule out e.g. a unit of
    order 4 in ZPSL(2, 7) with partial augmentation 1 at the involutions.

    An empty result for an order with no group elements confirms that
    there are no units of that order either.
    """
    found, _, _ = _search(G, r, n, chars, bound, assume_bovdi, n_jobs)
    return [chain for chain, _ in found]


def solve(G, r, n, chars=None, bound=DEFAULT_BOUND, assume_bovdi=True,
          n_jobs=1, check_stability=False):
    # type: (GroupData, int, int, Optional[List[int]], int, bool, int, bool) -> SolverReport
    """ Enumerate admissible chains (see :func:`enumerate_pa`) and describe
    each of them, without a verdict. With ``check_stability=True`` the
    search is repeated with ``bound + 2`` and the outcome stored
    in ``bound_stable``.
    """
    found, stats, chars = _search(G, r, n, chars, bound, assume_bovdi, n_jobs)
    targets = classes_of_order(G, r ** n)
    chains = []
    for chain, tables in found:
        mu_one_match = None
        if targets:
            mu_one_match = all(
                t.values[0] == eigenvalue_multiset(G, t.k, targets[0]).get(0, 0)
                for t in tables)
        chains.append(ChainResult(
            chain=chain,
            trivial=is_trivial_chain(G, chain),
            tables=tables,
            bovdi_sums=bovdi_sums(G, chain),
            mu_one_match=mu_one_match,
        ))
    bound_stable = None
    if check_stability:
        wider = enumerate_pa(G, r, n, chars, bound + 2, assume_bovdi, n_jobs)
        bound_stable = ([c.key() for c in wider] ==
                        [res.chain.key() for res in chains])
    return SolverReport(
        group=G,
        r=r,
        n=n,
        chars=chars,
        bound=bound,
        assume_bovdi=assume_bovdi,
        chains=chains,
        note=None if targets else NO_ELEMENTS,
        rejections=dict(sorted(stats.rejections.items())),
        pruned=stats.pruned,
        candidates=stats.candidates,
        bound_stable=bound_stable,
    )


def verify_theorem1(G, r, n, chars=None, bound=DEFAULT_BOUND,
                    assume_bovdi=True, n_jobs=1, check_stability=False):
    # type: (GroupData, int, int, Optional[List[int]], int, bool, int, bool) -> SolverReport
    """ Check that every unit of order ``r^n`` allowed by the constraints
    (inside the search box) is rationally conjugate to a group element,
    i.e. that all admissible chains are trivial.
    """
    report = solve(G, r, n, chars=chars, bound=bound,
                   assume_bovdi=assume_bovdi, n_jobs=n_jobs,
                   check_stability=check_stability)
    if all(res.trivial for res in report.chains):
        report.verdict = VERIFIED
    else:
        report.verdict = COUNTEREXAMPLE
    return report
