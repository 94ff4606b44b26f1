# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Coefficient extraction from products of geometric series over root lists:
the q-Kostant partition functions, the coefficients b, c, d counting
decompositions into pair vectors, and the generating functions f_q, F_q.
"""

import itertools
import threading
from functools import lru_cache

from .config import check_limit
from .qpoly import LaurentPoly, poly_sum
from .utils import iter_compositions
from .weyl import Weight, check_type, positive_roots

ROOT_LIST_KINDS = ["A", "B", "C", "D", "b", "c", "d", "f", "F"]

_EMPTY = {}


class RootList:
    """
    An ordered list of integer vectors with q-degrees; expands the
    coefficient of x^beta in prod 1/(1 - q^deg x^root).

    Args:
        * name: (str) label used in reprs
        * n: (int) rank
        * roots: (sequence of tuples) the vectors
        * degrees: (sequence of int) q-degree of each vector, default 1
        * height: (tuple) linear form positive on every vector

    Expansions are memoized on (root index, residual); the memo is shared
    by all threads and guarded by a lock.
    """

    def __init__(self, name, n, roots, degrees=None, height=None):
        self.name = name
        self.n = n
        self.roots = tuple(tuple(r) for r in roots)
        if degrees is None:
            degrees = (1,) * len(self.roots)
        self.degrees = tuple(degrees)
        if height is None:
            height = tuple(n - i for i in range(n))
        self.height = tuple(height)
        self._root_heights = tuple(self._height(r) for r in self.roots)
        if any(h <= 0 for h in self._root_heights):
            raise ValueError("roots of %r do not lie in an open half-space" % name)
        # coordinates that the roots from index idx onward can still raise/lower
        self._raise = []
        self._lower = []
        for idx in range(len(self.roots) + 1):
            rest = self.roots[idx:]
            self._raise.append(
                frozenset(c for c in range(n) if any(r[c] > 0 for r in rest))
            )
            self._lower.append(
                frozenset(c for c in range(n) if any(r[c] < 0 for r in rest))
            )
        self._memo = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return "<RootList %s n=%r roots=%r>" % (self.name, self.n, len(self.roots))

    def _height(self, v):
        return sum(a * b for a, b in zip(self.height, v))

    def multiplicity_bound(self, beta):
        """
        An upper bound on the total multiplicity of any decomposition of beta.
        """
        h = self._height(beta)
        if h < 0:
            return -1
        return h // min(self._root_heights) if self.roots else 0

    def check_degree(self, beta):
        """
        Refuse beta when its decompositions may exceed the max_q_degree limit.
        """
        check_limit("max_q_degree", self.multiplicity_bound(beta))

    def expand(self, beta):
        """
        The coefficient of x^beta as a dict {q-degree: count}.
        """
        beta = tuple(beta)
        if len(beta) != self.n:
            raise ValueError("rank mismatch: %r for %r" % (beta, self))
        return self._expand(0, beta)

    def partition_function(self, beta):
        return LaurentPoly(self.expand(beta))

    def _expand(self, idx, residual):
        key = (idx, residual)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        if idx == len(self.roots):
            return {0: 1} if not any(residual) else _EMPTY
        raise_, lower = self._raise[idx], self._lower[idx]
        for c, value in enumerate(residual):
            if (value > 0 and c not in raise_) or (value < 0 and c not in lower):
                return _EMPTY
        h = self._height(residual)
        if h < 0:
            return _EMPTY

        root = self.roots[idx]
        degree = self.degrees[idx]
        step = self._root_heights[idx]
        result = {}
        multiplicity = 0
        current = residual
        while h >= 0:
            for d, count in self._expand(idx + 1, current).items():
                d += multiplicity * degree
                result[d] = result.get(d, 0) + count
            multiplicity += 1
            h -= step
            current = tuple(a - b for a, b in zip(current, root))
        with self._lock:
            self._memo[key] = result
        return result

    def cache_size(self):
        with self._lock:
            return len(self._memo)


def _pair_vectors(n, diagonal):
    vectors = []
    for r in range(n):
        for s in range(r if diagonal else r + 1, n):
            v = [0] * n
            v[r] += 1
            v[s] += 1
            vectors.append(tuple(v))
    return vectors


def _make_root_list(kind, n):
    if kind in ("A", "B", "C", "D"):
        return RootList(kind, n, positive_roots(kind, n))
    elif kind in ("b", "c", "d"):
        vectors = _pair_vectors(n, diagonal=(kind == "c"))
        if kind == "b":
            vectors += [tuple(1 if c == i else 0 for c in range(n)) for i in range(n)]
        return RootList(kind, n, vectors, degrees=(0,) * len(vectors))
    elif kind in ("f", "F"):
        vectors = list(positive_roots("A", n))
        vectors += [
            tuple(-x for x in v) for v in _pair_vectors(n, diagonal=(kind == "F"))
        ]
        return RootList(kind, n, vectors, height=tuple(-(i + 1) for i in range(n)))
    raise ValueError("unknown root list kind: %r" % (kind,))


_ROOT_LISTS = {}
_ROOT_LISTS_LOCK = threading.Lock()


def root_list(kind, n):
    """
    The shared RootList for (kind, n).

    Kinds "A".."D" are positive roots with q-degree 1; "b", "c", "d" are
    the pair generators of the lattices L_B, L_C, L_D with q-degree 0;
    "f" and "F" are the generating products of f_q and F_q.
    """
    if n < 1:
        raise ValueError("rank must be positive: %r" % (n,))
    key = (kind, n)
    with _ROOT_LISTS_LOCK:
        if key not in _ROOT_LISTS:
            _ROOT_LISTS[key] = _make_root_list(kind, n)
        return _ROOT_LISTS[key]


def as_ints(beta):
    if isinstance(beta, Weight):
        return beta.ints()
    return tuple(beta)


def pq(type, n, beta):
    """
    The q-Kostant partition function of type A (A_{n-1}), B, C or D.
    """
    check_type(type)
    beta = as_ints(beta)
    plist = root_list(type, n)
    plist.check_degree(beta)
    return plist.partition_function(beta)


def coeff_bcd(kind, n, delta):
    """
    The number of ways to write delta as a sum of pair vectors e_r + e_s
    (r < s for d, r <= s for c, r < s plus unit vectors for b).
    """
    if kind not in ("b", "c", "d"):
        raise ValueError("unknown coefficient kind: %r" % (kind,))
    return root_list(kind, n).expand(as_ints(delta)).get(0, 0)


@lru_cache(maxsize=None)
def lattice_elements(kind, n, size):
    """
    The (delta, coefficient) pairs with |delta| = size and nonzero coefficient.
    """
    if size < 0 or (kind in ("c", "d") and size % 2):
        return ()
    elements = []
    for delta in iter_compositions(size, n):
        coeff = coeff_bcd(kind, n, delta)
        if coeff:
            elements.append((delta, coeff))
    return tuple(elements)


def in_root_cone_A(eta):
    # necessary condition for eta to be a sum of roots e_i - e_j
    total = 0
    for x in eta:
        total += x
        if total < 0:
            return False
    return total == 0


def pq_via_A(type, n, beta):
    """
    P^C(beta) (or P^D) as sum over delta in L_C (L_D) of
    q^{|delta|/2} c(delta) P^A(beta - delta).
    """
    if type not in ("C", "D"):
        raise ValueError("pq_via_A is defined for types C and D, not %r" % (type,))
    beta = as_ints(beta)
    size = sum(beta)
    pa = root_list("A", n)
    terms = []
    for delta, coeff in lattice_elements(type.lower(), n, size):
        eta = tuple(b - d for b, d in zip(beta, delta))
        if in_root_cone_A(eta):
            terms.append(pa.partition_function(eta).shift(size // 2) * coeff)
    return poly_sum(terms)


def pq_B_via_D(n, beta):
    """
    P^B(beta) as sum over delta in N^n of q^{|delta|} P^D(beta - delta).
    """
    beta = as_ints(beta)
    pd = root_list("D", n)
    terms = []
    for size in range(0, sum(beta) + 1):
        for delta in iter_compositions(size, n):
            eta = tuple(b - d for b, d in zip(beta, delta))
            terms.append(pd.partition_function(eta).shift(size))
    return poly_sum(terms)


def _convolved(kind, n, beta):
    beta = as_ints(beta)
    size = -sum(beta)
    pa = root_list("A", n)
    terms = []
    for delta, coeff in lattice_elements(kind, n, size):
        eta = tuple(b + d for b, d in zip(beta, delta))
        if in_root_cone_A(eta):
            terms.append(pa.partition_function(eta) * coeff)
    if not terms:
        return LaurentPoly.zero()
    return poly_sum(terms).shift(size // 2)


def fq(n, beta):
    """
    The coefficient of x^beta in
    prod_{i<j} 1/(1 - q x_i/x_j) prod_{r<s} 1/(1 - q/(x_r x_s)).
    """
    return _convolved("d", n, beta)


def Fq(n, beta):
    """
    As fq with the second product over r <= s.
    """
    return _convolved("c", n, beta)


def fq_direct(n, beta):
    return root_list("f", n).partition_function(as_ints(beta))


def Fq_direct(n, beta):
    return root_list("F", n).partition_function(as_ints(beta))


def pq_brute_oracle(type, n, beta, qdeg_cap=8):
    """
    Count decompositions of beta by listing every multiset of roots of
    size at most qdeg_cap. Raises ValueError if a decomposition could need
    more roots than the cap allows.

    Args:
        * type: (str) any root list kind ("A".."D", "b", "c", "d", "f", "F")
        * n: (int) rank
        * beta: (tuple or Weight) the target
        * qdeg_cap: (int) maximal total multiplicity enumerated
    """
    if type not in ROOT_LIST_KINDS:
        raise ValueError("unknown root list kind: %r" % (type,))
    beta = as_ints(beta)
    roots = root_list(type, n)
    bound = roots.multiplicity_bound(beta)
    if bound > qdeg_cap:
        raise ValueError(
            "decompositions of %r may use %d roots; cap is %d" % (beta, bound, qdeg_cap)
        )
    result = {}
    for size in range(0, bound + 1):
        for combo in itertools.combinations_with_replacement(range(len(roots.roots)), size):
            total = [0] * n
            degree = 0
            for idx in combo:
                for c, x in enumerate(roots.roots[idx]):
                    total[c] += x
                degree += roots.degrees[idx]
            if tuple(total) == beta:
                result[degree] = result.get(degree, 0) + 1
    return LaurentPoly(result)
