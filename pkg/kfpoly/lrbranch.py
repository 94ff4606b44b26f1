# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Littlewood-Richardson coefficients and branching multiplicities between
GL_n and the groups of types B, C, D.
"""

from .partfn import coeff_bcd
from .utils import check_decreasing, check_same_length, iter_partitions
from .weyl import ParityError, Partition, rho, weyl_group

FAMILIES = {"B": "all", "C": "rows_even", "D": "cols_even"}


def _strip(p):
    return tuple(x for x in p if x > 0)


def lr_coeff(nu, lam, gamma):
    """
    c^nu_{gamma,lam}: the number of skew tableaux of shape nu/lam and
    weight gamma whose reverse reading word is a lattice word.
    """
    nu, lam, gamma = _strip(nu), _strip(lam), _strip(gamma)
    if sum(lam) + sum(gamma) != sum(nu) or len(lam) > len(nu):
        return 0
    lam = lam + (0,) * (len(nu) - len(lam))
    if any(a > b for a, b in zip(lam, nu)):
        return 0
    if not gamma:
        return 1
    # cells in reverse reading order: rows top to bottom, right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling = {}
    used = [0] * (len(gamma) + 1)

    def _count(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        high = len(gamma)
        if (r, c + 1) in filling:
            high = min(high, filling[(r, c + 1)])
        low = 1
        if (r - 1, c) in filling:
            low = filling[(r - 1, c)] + 1
        total = 0
        for value in range(low, high + 1):
            if used[value] >= gamma[value - 1]:
                continue
            if value > 1 and used[value] + 1 > used[value - 1]:
                continue
            used[value] += 1
            filling[(r, c)] = value
            total += _count(k + 1)
            del filling[(r, c)]
            used[value] -= 1
        return total

    return _count(0)


def rows_even(gamma):
    return all(x % 2 == 0 for x in gamma)


def cols_even(gamma):
    parts = _strip(gamma)
    if len(parts) % 2:
        return False
    return all(parts[i] == parts[i + 1] for i in range(0, len(parts), 2))


def in_family(type, gamma):
    if type == "B":
        return True
    elif type == "C":
        return rows_even(gamma)
    elif type == "D":
        return cols_even(gamma)
    raise ValueError("unknown root system type: %r" % (type,))


def branch_stable(type, lam, nu):
    """
    [V^A(lam) : V^X(nu)] as sum of c^nu_{gamma,lam} over gamma in the
    family of the type: all partitions (B), even rows (C), even columns (D).
    """
    check_same_length(lam, nu)
    if type not in FAMILIES:
        raise ValueError("unknown root system type: %r" % (type,))
    size = sum(nu) - sum(lam)
    if size < 0:
        return 0
    n = len(nu)
    first = nu[0] if n else 0
    return sum(
        lr_coeff(nu, lam, gamma)
        for gamma in iter_partitions(size, n, first)
        if in_family(type, gamma)
    )


def branch_alt(type, gamma_pm, lam):
    """
    [V^A(gamma_pm) : V^X(lam)] as the alternating sum over the Weyl group
    of X of the coefficient b, c or d at w o lam - gamma_pm, where the dot
    action uses the rho of X.

    Args:
        * type: (str) "B", "C" or "D"
        * gamma_pm: (tuple) a decreasing integer vector
        * lam: (tuple) a partition of the same length
    """
    if type not in FAMILIES:
        raise ValueError("unknown root system type: %r" % (type,))
    check_same_length(gamma_pm, lam)
    check_decreasing(gamma_pm, "gamma")
    lam = Partition(lam)
    n = len(lam)
    if n == 0:
        return 1
    rho2 = rho(type, n).coords2
    top2 = tuple(2 * x + r for x, r in zip(lam, rho2))
    bottom2 = tuple(2 * g + r for g, r in zip(gamma_pm, rho2))
    kind = type.lower()
    total = 0
    for w, sign in weyl_group("D" if type == "D" else "BC", n):
        delta2 = tuple(a - b for a, b in zip(w.act_tuple(top2), bottom2))
        if any(x % 2 for x in delta2):
            raise ParityError("odd doubled coordinate in %r for w=%r" % (delta2, w))
        if any(x < 0 for x in delta2):
            continue
        total += sign * coeff_bcd(kind, n, tuple(x // 2 for x in delta2))
    return total


def branch_alt_stabilized(type, lam, nu, k=None):
    """
    branch_alt at (lam + k kappa, nu + k kappa); for k large this is
    [V^A(lam) : V^X(nu)] of the stable range.
    """
    check_same_length(lam, nu)
    n = len(lam)
    if k is None:
        k = sum(lam) + sum(nu) + n
    return branch_alt(type, tuple(x + k for x in lam), tuple(x + k for x in nu))


def branching_terms(type, lam, size, method="stable"):
    """
    The pairs (nu, [V^A(lam) : V^X(nu)]) with nu a partition of size of
    the same length as lam and nonzero multiplicity.
    """
    if method == "stable":
        multiplicity = branch_stable
    elif method == "alt":
        multiplicity = branch_alt_stabilized
    else:
        raise ValueError("unknown branching method: %r" % (method,))
    terms = []
    for nu in iter_partitions(size, len(lam)):
        value = multiplicity(type, lam, nu)
        if value:
            terms.append((Partition(nu), value))
    return terms


def restrict_B_to_D(nu, lam):
    """
    [V^D(nu) : V^B(lam)] as the alternating sum over W(B_n) of the
    indicator that w o lam - nu lies in N^n, with rho of type B.
    """
    check_same_length(nu, lam)
    lam = Partition(lam)
    n = len(lam)
    if n == 0:
        return 1
    rho2 = rho("B", n).coords2
    top2 = tuple(2 * x + r for x, r in zip(lam, rho2))
    bottom2 = tuple(2 * v + r for v, r in zip(nu, rho2))
    total = 0
    for w, sign in weyl_group("B", n):
        delta2 = tuple(a - b for a, b in zip(w.act_tuple(top2), bottom2))
        if any(x % 2 for x in delta2):
            raise ParityError("odd doubled coordinate in %r for w=%r" % (delta2, w))
        if all(x >= 0 for x in delta2):
            total += sign
    return total
