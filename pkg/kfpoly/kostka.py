# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Kostka-Foulkes polynomials as Weyl group alternating sums of
q-partition functions, the charge statistic on tableaux, and the
decompositions of the restricted polynomials into type A ones.
"""

from .config import check_limit
from .partfn import in_root_cone_A, lattice_elements, root_list
from .qpoly import LaurentPoly, poly_sum
from .utils import check_decreasing, check_same_length, is_decreasing
from .weyl import ParityError, Partition, rho, weyl_group


class SemistandardTableau:
    """
    A filling of a Young diagram, rows weakly increasing and columns
    strictly increasing.

    Args:
        * rows: (sequence of sequences of int) rows from top to bottom
    """

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows if len(row) > 0)
        lengths = [len(row) for row in self.rows]
        if not is_decreasing(lengths):
            raise ValueError("row lengths are not a partition: %r" % (lengths,))
        for r, row in enumerate(self.rows):
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise ValueError("row %d is not weakly increasing: %r" % (r, row))
            if any(x < 1 for x in row):
                raise ValueError("entries must be positive: %r" % (row,))
            if r > 0:
                above = self.rows[r - 1]
                if any(above[c] >= row[c] for c in range(len(row))):
                    raise ValueError("column strictness fails in row %d" % r)

    @property
    def shape(self):
        return Partition(len(row) for row in self.rows)

    def weight(self, n=None):
        letters = [x for row in self.rows for x in row]
        if n is None:
            n = max(letters) if letters else 0
        return tuple(letters.count(i) for i in range(1, n + 1))

    def reading_word(self):
        """
        Rows read left to right, from the bottom row up.
        """
        return tuple(x for row in reversed(self.rows) for x in row)

    def is_standard(self):
        letters = sorted(x for row in self.rows for x in row)
        return letters == list(range(1, len(letters) + 1))

    def conjugate(self):
        """
        The transpose; defined for standard tableaux.
        """
        if not self.is_standard():
            raise ValueError("only standard tableaux can be transposed")
        width = len(self.rows[0]) if self.rows else 0
        return SemistandardTableau(
            [row[c] for row in self.rows if len(row) > c] for c in range(width)
        )

    def __eq__(self, other):
        if not isinstance(other, SemistandardTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)

    def __repr__(self):
        return "<SemistandardTableau %s>" % self


def iter_ssyt(shape, weight):
    """
    Yield the semistandard tableaux of the given shape and weight, filling
    cells in row-major order.

    Args:
        * shape: (sequence of int) a partition, trailing zeros ignored
        * weight: (sequence of int) multiplicity of each letter 1, 2, ...
    """
    shape = tuple(p for p in shape if p > 0)
    weight = tuple(weight)
    if sum(shape) != sum(weight) or any(w < 0 for w in weight):
        return
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    rows = [[0] * length for length in shape]
    remaining = list(weight)
    letters = len(weight)

    def _fill(k):
        if k == len(cells):
            yield SemistandardTableau(rows)
            return
        r, c = cells[k]
        low = 1
        if c > 0:
            low = max(low, rows[r][c - 1])
        if r > 0:
            low = max(low, rows[r - 1][c] + 1)
        for value in range(low, letters + 1):
            if remaining[value - 1] == 0:
                continue
            remaining[value - 1] -= 1
            rows[r][c] = value
            for tableau in _fill(k + 1):
                yield tableau
            remaining[value - 1] += 1
        rows[r][c] = 0

    for tableau in _fill(0):
        yield tableau


def kostka_number(lam, mu):
    return sum(1 for _ in iter_ssyt(lam, mu))


def charge_word(word):
    """
    Lascoux-Schutzenberger charge of a word whose content is a partition.

    Standard subwords are extracted by starting at the rightmost 1 and
    scanning leftwards cyclically for 2, 3, ...; the index rises by one
    each time the scan wraps around.
    """
    word = list(word)
    if not word:
        return 0
    content = [word.count(i) for i in range(1, max(word) + 1)]
    if min(word) < 1 or not is_decreasing(content):
        raise ValueError("charge needs a word of partition content: %r" % (word,))
    positions = list(range(len(word)))
    total = 0
    while positions:
        letters = [word[p] for p in positions]
        top = max(letters)
        # index into positions of the rightmost 1
        current = max(i for i, x in enumerate(letters) if x == 1)
        chosen = [current]
        index = 0
        for letter in range(2, top + 1):
            size = len(positions)
            for step in range(1, size):
                candidate = (current - step) % size
                if letters[candidate] == letter:
                    if candidate > current:
                        index += 1
                    current = candidate
                    break
            chosen.append(current)
            total += index
        chosen = set(chosen)
        positions = [p for i, p in enumerate(positions) if i not in chosen]
    return total


def charge(tableau):
    return charge_word(tableau.reading_word())


def kostka_A_charge_oracle(lam, mu):
    """
    Sum of q^charge over the semistandard tableaux of shape lam, weight mu.
    """
    check_decreasing(mu, "mu")
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ: %r and %r" % (tuple(lam), tuple(mu)))
    result = {}
    for tableau in iter_ssyt(lam, tuple(m for m in mu if m > 0)):
        c = charge(tableau)
        result[c] = result.get(c, 0) + 1
    return LaurentPoly(result)


def _shifted(vector, shift):
    return tuple(v + s for v, s in zip(vector, shift))


def _alternating_sum(group_type, plist, top, bottom, dominated=False):
    """
    sum over w of sign(w) * P(w(top) - bottom) with integer vectors.
    """
    check_limit("max_rank", len(top))
    plist.check_degree(tuple(a - b for a, b in zip(top, bottom)))
    result = {}
    for w, sign in weyl_group(group_type, len(top)):
        beta = tuple(a - b for a, b in zip(w.act_tuple(top), bottom))
        if dominated and not in_root_cone_A(beta):
            continue
        for d, count in plist.expand(beta).items():
            result[d] = result.get(d, 0) + sign * count
    return LaurentPoly(result)


def _rho_n(n):
    return tuple(n - i for i in range(n))


def kostka_A(lam, mu):
    """
    K^{A_{n-1}}_{lam,mu}(q) for decreasing integer vectors lam and mu of
    the same length; invariant under adding a constant to both.
    """
    check_same_length(lam, mu)
    check_decreasing(lam, "lambda")
    check_decreasing(mu, "mu")
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    if sum(lam) != sum(mu):
        return LaurentPoly.zero()
    rho_n = _rho_n(n)
    return _alternating_sum(
        "A", root_list("A", n), _shifted(lam, rho_n), _shifted(mu, rho_n), dominated=True
    )


def kostka_full(type, lam, mu):
    """
    K^{X_n}_{lam,mu}(q) for X = B, C or D: the alternating sum over the full
    Weyl group, with the rho of the type on both sides.
    """
    if type not in ("B", "C", "D"):
        raise ValueError("kostka_full is defined for types B, C, D, not %r" % (type,))
    check_same_length(lam, mu)
    lam, mu = Partition(lam), Partition(mu)
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    check_limit("max_rank", n)
    rho2 = rho(type, n).coords2
    top2 = tuple(2 * x + r for x, r in zip(lam, rho2))
    bottom2 = tuple(2 * x + r for x, r in zip(mu, rho2))
    plist = root_list(type, n)
    plist.check_degree(tuple(a - b for a, b in zip(lam, mu)))
    result = {}
    for w, sign in weyl_group("D" if type == "D" else "BC", n):
        beta2 = tuple(a - b for a, b in zip(w.act_tuple(top2), bottom2))
        if any(x % 2 for x in beta2):
            raise ParityError(
                "odd doubled coordinate in %r for w=%r" % (beta2, w)
            )
        for d, count in plist.expand(tuple(x // 2 for x in beta2)).items():
            result[d] = result.get(d, 0) + sign * count
    return LaurentPoly(result)


def kostka_tilde(type, lam, mu):
    """
    The restricted polynomial: the alternating sum over S_n only, with
    rho_n = (n, ..., 1) on both sides. Arguments may be any decreasing
    integer vectors.
    """
    if type not in ("B", "C", "D"):
        raise ValueError("kostka_tilde is defined for types B, C, D, not %r" % (type,))
    check_same_length(lam, mu)
    check_decreasing(lam, "lambda")
    check_decreasing(mu, "mu")
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    rho_n = _rho_n(n)
    return _alternating_sum(
        "A", root_list(type, n), _shifted(lam, rho_n), _shifted(mu, rho_n)
    )


def ktilde_decomposition_terms(type, lam, mu):
    """
    The map gamma -> sum over sigma in S_n of sign(sigma) c(sigma o lam - gamma)
    (d for type D), over decreasing gamma with |gamma| = |mu|.
    """
    if type not in ("C", "D"):
        raise ValueError("decomposition is defined for types C and D, not %r" % (type,))
    check_same_length(lam, mu)
    n = len(lam)
    size = sum(lam) - sum(mu)
    terms = {}
    if size < 0 or size % 2:
        return terms
    rho_n = _rho_n(n)
    top = _shifted(lam, rho_n)
    deltas = lattice_elements(type.lower(), n, size)
    for w, sign in weyl_group("A", n):
        moved = tuple(a - r for a, r in zip(w.act_tuple(top), rho_n))
        for delta, coeff in deltas:
            gamma = tuple(a - d for a, d in zip(moved, delta))
            if is_decreasing(gamma):
                terms[gamma] = terms.get(gamma, 0) + sign * coeff
    return {gamma: coeff for gamma, coeff in terms.items() if coeff != 0}


def ktilde_via_decomposition(type, lam, mu):
    """
    K~^C (or K~^D) as q^{(|lam|-|mu|)/2} times a sum of type A
    polynomials K^A_{gamma,mu} weighted by the decomposition terms.
    """
    terms = ktilde_decomposition_terms(type, lam, mu)
    if not terms:
        return LaurentPoly.zero()
    size = sum(lam) - sum(mu)
    return poly_sum(
        kostka_A(gamma, mu) * coeff for gamma, coeff in sorted(terms.items())
    ).shift(size // 2)


def _interlacing(lam, lowest_size):
    # nu with lam_1 >= nu_1 >= lam_2 >= ... >= lam_n >= nu_n and |nu| >= lowest_size
    n = len(lam)

    def _build(i, prefix):
        if i == n - 1:
            low = lowest_size - sum(prefix)
            for last in range(lam[n - 1], low - 1, -1):
                yield prefix + (last,)
            return
        for value in range(lam[i], lam[i + 1] - 1, -1):
            for nu in _build(i + 1, prefix + (value,)):
                yield nu

    return _build(0, ())


def ktilde_B_via_D_terms(lam, mu):
    """
    The triples (nu, multiplicity, K~^D_{nu,mu}) of the expansion of
    K~^B_{lam,mu} over K~^D; nu runs over vectors interlacing lam, the
    others having zero restriction multiplicity.
    """
    from .lrbranch import restrict_B_to_D

    check_same_length(lam, mu)
    lam, mu = Partition(lam), Partition(mu)
    terms = []
    if sum(lam) < sum(mu) or len(lam) == 0:
        return terms
    for nu in _interlacing(lam, sum(mu)):
        if (sum(nu) - sum(mu)) % 2:
            continue
        k = max(0, -nu[-1])
        multiplicity = restrict_B_to_D(
            Partition(x + k for x in nu), Partition(x + k for x in lam)
        )
        if multiplicity == 0:
            continue
        value = kostka_tilde("D", nu, mu)
        if value:
            terms.append((nu, multiplicity, value))
    return terms


def ktilde_B_via_D(lam, mu):
    """
    K~^B_{lam,mu} = sum over nu of q^{|lam|-|nu|} [D(nu):B(lam)] K~^D_{nu,mu}.
    """
    if len(lam) == 0:
        return LaurentPoly.one()
    return poly_sum(
        value.shift(sum(lam) - sum(nu)) * multiplicity
        for nu, multiplicity, value in ktilde_B_via_D_terms(lam, mu)
    )
