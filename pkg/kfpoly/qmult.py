# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
The q-multiplicities u and U, their expansions over type A Kostka-Foulkes
polynomials, the derived families V, K1, K11, K2, and the dualities
relating them to the restricted polynomials.
"""

from .config import check_limit
from .kostka import kostka_A, kostka_tilde
from .lrbranch import branch_alt_stabilized, branch_stable
from .partfn import Fq, fq
from .qpoly import LaurentPoly, poly_sum
from .utils import check_decreasing, check_same_length, iter_partitions, pad
from .weyl import Partition, conjugate, hat, involution_I, weyl_group

FAMILIES = ["u", "U", "V", "K1", "K11", "K2"]


def _check_pair(lam, mu):
    check_same_length(lam, mu)
    check_decreasing(lam, "lambda")
    check_decreasing(mu, "mu")


def _alternating(function, lam, mu):
    _check_pair(lam, mu)
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    check_limit("max_rank", n)
    size = sum(mu) - sum(lam)
    if size < 0 or size % 2:
        return LaurentPoly.zero()
    top = tuple(x + n - i for i, x in enumerate(lam))
    bottom = tuple(x + n - i for i, x in enumerate(mu))
    terms = []
    for w, sign in weyl_group("A", n):
        beta = tuple(a - b for a, b in zip(w.act_tuple(top), bottom))
        value = function(n, beta)
        if value:
            terms.append(value * sign)
    return poly_sum(terms)


def u(lam, mu):
    """
    u_{lam,mu}(q) = sum over sigma in S_n of sign(sigma) f_q(sigma(lam+rho_n) - mu - rho_n).
    Zero when |lam| > |mu|.
    """
    return _alternating(fq, lam, mu)


def U(lam, mu):
    """
    As u with F_q in place of f_q.
    """
    return _alternating(Fq, lam, mu)


def _to_partitions(lam, mu):
    # translate both by k kappa so every entry is nonnegative
    _check_pair(lam, mu)
    low = min(tuple(lam) + tuple(mu) + (0,))
    return Partition(x - low for x in lam), Partition(x - low for x in mu)


def _expansion(type, lam, mu, multiplicity):
    lam, mu = _to_partitions(lam, mu)
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    size = sum(mu) - sum(lam)
    if size < 0 or size % 2:
        return LaurentPoly.zero()
    terms = []
    for nu in iter_partitions(sum(mu), n):
        coeff = multiplicity(type, lam, nu)
        if coeff:
            terms.append(kostka_A(nu, mu) * coeff)
    return poly_sum(terms).shift(size // 2)


def u_via_branch(lam, mu):
    """
    q^{(|mu|-|lam|)/2} sum over nu and gamma with even columns of
    c^nu_{gamma,lam} K^A_{nu,mu}(q).
    """
    return _expansion("D", lam, mu, branch_stable)


def U_via_branch(lam, mu):
    """
    As u_via_branch with gamma running over partitions with even rows.
    """
    return _expansion("C", lam, mu, branch_stable)


def u_via_multiplicities(lam, mu):
    """
    q^{(|mu|-|lam|)/2} sum over nu of [V^A(lam) : V^D(nu)] K^A_{nu,mu}(q), with
    the multiplicities taken from the stabilized alternating sums.
    """
    return _expansion("D", lam, mu, branch_alt_stabilized)


def U_via_multiplicities(lam, mu):
    return _expansion("C", lam, mu, branch_alt_stabilized)


def V(lam, mu):
    """
    V_{lam,mu}(q) = K~^B_{I(lam),I(mu)}(q).
    """
    _check_pair(lam, mu)
    return kostka_tilde("B", involution_I(lam), involution_I(mu))


def K1(lam, mu):
    """
    q^{|mu|-|lam|} sum over nu and all partitions gamma of
    c^nu_{gamma,lam} K^A_{nu,mu}(q^2).
    """
    lam, mu = _to_partitions(lam, mu)
    n = len(lam)
    if n == 0:
        return LaurentPoly.one()
    size = sum(mu) - sum(lam)
    if size < 0:
        return LaurentPoly.zero()
    terms = []
    for nu in iter_partitions(sum(mu), n):
        coeff = branch_stable("B", lam, nu)
        if coeff:
            terms.append(kostka_A(nu, mu).substitute("q^2") * coeff)
    return poly_sum(terms).shift(size)


def K1_via_V_at_one(lam, mu):
    """
    True iff K1 and V agree at q = 1.
    """
    return K1(lam, mu).at_one() == V(lam, mu).at_one()


def K11(lam, mu):
    return u(lam, mu).substitute("q^2")


def K2(lam, mu):
    return U(lam, mu).substitute("q^2")


def compute(family, lam, mu):
    """
    Dispatch on a family name from FAMILIES.
    """
    functions = {"u": u, "U": U, "V": V, "K1": K1, "K11": K11, "K2": K2}
    if family not in functions:
        raise ValueError("unknown family: %r" % (family,))
    return functions[family](lam, mu)


def check_dual_hat(lam, mu):
    """
    True iff u_{lam,mu} = K~^D and U_{lam,mu} = K~^C at the hatted pair.
    """
    lam, mu = Partition(lam), Partition(mu)
    check_same_length(lam, mu)
    lam_hat, mu_hat = hat(lam, mu)
    return u(lam, mu) == kostka_tilde("D", lam_hat, mu_hat) and U(
        lam, mu
    ) == kostka_tilde("C", lam_hat, mu_hat)


def conj_duality_sides(lam, n):
    """
    The four polynomials (U_{lam',1^n}, rhs of (i), u_{lam',1^n}, rhs of (ii))
    where both right-hand sides are q^{n(n-1)/2+n-|lam|} times a value at q^-1.
    """
    lam = Partition(pad(lam, n))
    if sum(lam) > n:
        raise ValueError("need n >= |lambda|, got n=%r and %r" % (n, tuple(lam)))
    ones = (1,) * n
    lam_conj = conjugate(lam, n)
    exponent = n * (n - 1) // 2 + n - sum(lam)
    return (
        U(lam_conj, ones),
        u(lam, ones).substitute("q^-1").shift(exponent),
        u(lam_conj, ones),
        U(lam, ones).substitute("q^-1").shift(exponent),
    )


def check_conj_duality(lam, n):
    first, first_rhs, second, second_rhs = conj_duality_sides(lam, n)
    return first == first_rhs and second == second_rhs


def check_X_hat(lam, n):
    """
    X_{lam,(1^n)}(q) = q^{|lam|-n} K~^C at the hatted pair (lam, 1^n).
    """
    from .crystal import one_dim_sum_X

    lam = Partition(pad(lam, n))
    lam_hat, mu_hat = hat(lam, (1,) * n)
    lhs = one_dim_sum_X(lam, n)
    rhs = kostka_tilde("C", lam_hat, mu_hat).shift(sum(lam) - n)
    return lhs == rhs
