# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import pytest

from kfpoly.kostka import kostka_A
from kfpoly.lrbranch import lr_coeff
from kfpoly.partfn import Fq_direct, fq_direct
from kfpoly.qmult import (
    FAMILIES,
    K1,
    K1_via_V_at_one,
    K2,
    K11,
    U,
    U_via_branch,
    U_via_multiplicities,
    V,
    check_conj_duality,
    check_dual_hat,
    check_X_hat,
    compute,
    conj_duality_sides,
    u,
    u_via_branch,
    u_via_multiplicities,
)
from kfpoly.qpoly import LaurentPoly
from kfpoly.utils import iter_partitions
from kfpoly.weyl import weyl_group


def small_pairs(n, max_size):
    parts = [lam for size in range(max_size + 1) for lam in iter_partitions(size, n)]
    for lam in parts:
        for mu in parts:
            yield lam, mu


def test_diagonal():
    for lam in [(0, 0), (1, 0), (2, 1), (3, 1, 0)]:
        assert u(lam, lam) == LaurentPoly.one()
        assert U(lam, lam) == LaurentPoly.one()


def test_small_values():
    assert u((0, 0), (1, 1)) == LaurentPoly.monomial(1)
    assert U((0, 0), (1, 1)) == LaurentPoly.monomial(2)
    assert u((2, 0), (1, 1)) == LaurentPoly.monomial(1)
    assert K2((0, 0), (1, 1)) == LaurentPoly.monomial(4)
    assert K11((0, 0), (1, 1)) == LaurentPoly.monomial(2)


def test_zero_when_lambda_larger():
    assert u((1, 1), (0, 0)).is_zero()
    assert U((2, 0), (1, 0)).is_zero()
    assert K1((1, 1), (0, 0)).is_zero()
    # odd difference of sizes
    assert u((0, 0), (1, 0)).is_zero()
    assert U((0, 0), (1, 0)).is_zero()


def test_padding():
    assert u((0, 0, 0), (1, 1, 0)) == u((0, 0), (1, 1))
    assert U((0, 0, 0), (1, 1, 0)) == U((0, 0), (1, 1))


def test_worked_example():
    lam, mu = (1, 0, 0), (1, 1, 1)
    k1 = K1(lam, mu)
    v = V(lam, mu)
    assert k1 == LaurentPoly({8: 1, 6: 2, 4: 2, 2: 1})
    assert v.substitute("q^2") == LaurentPoly({10: 1, 8: 1, 6: 2, 4: 1, 2: 1})
    assert k1.at_one() == v.at_one() == 6
    assert k1 != v.substitute("q^2")
    assert K1_via_V_at_one(lam, mu)


def test_expansions():
    for lam, mu in small_pairs(2, 3):
        assert u(lam, mu) == u_via_branch(lam, mu)
        assert U(lam, mu) == U_via_branch(lam, mu)
        assert u(lam, mu) == u_via_multiplicities(lam, mu)
        assert U(lam, mu) == U_via_multiplicities(lam, mu)


def test_nonnegative():
    for lam, mu in small_pairs(3, 3):
        assert u(lam, mu).has_nonnegative_coefficients()
        assert U(lam, mu).has_nonnegative_coefficients()


def test_dual_hat():
    for lam, mu in small_pairs(2, 3):
        assert check_dual_hat(lam, mu)


def test_conj_duality():
    for n in range(1, 4):
        for size in range(n + 1):
            for lam in iter_partitions(size, n):
                assert check_conj_duality(lam, n)
    first, first_rhs, second, second_rhs = conj_duality_sides((1, 1), 2)
    assert first == first_rhs
    assert second == second_rhs


def test_conj_duality_rejects_small_n():
    with pytest.raises(ValueError):
        conj_duality_sides((2, 2, 0), 3)


def test_X_hat():
    for n in range(1, 4):
        for size in range(n + 1):
            for lam in iter_partitions(size, n):
                assert check_X_hat(lam, n)


def test_compute():
    assert FAMILIES == ["u", "U", "V", "K1", "K11", "K2"]
    assert compute("U", (0, 0), (1, 1)) == U((0, 0), (1, 1))
    assert compute("K1", (1, 0, 0), (1, 1, 1)) == K1((1, 0, 0), (1, 1, 1))
    with pytest.raises(ValueError):
        compute("W", (0, 0), (1, 1))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        u((0, 1), (1, 1))
    with pytest.raises(ValueError):
        U((0, 0), (1, 1, 0))


def test_u_below_U_at_one():
    for lam, mu in small_pairs(3, 4):
        assert u(lam, mu).at_one() <= U(lam, mu).at_one()


def test_V_at_one_is_branching_sum():
    for lam, mu in small_pairs(3, 3):
        if sum(lam) > sum(mu):
            continue
        n = len(lam)
        expected = 0
        for nu in iter_partitions(sum(mu), n):
            coeff = sum(lr_coeff(nu, lam, gamma) for gamma in iter_partitions(sum(nu) - sum(lam), n))
            expected += coeff * kostka_A(nu, mu).at_one()
        assert V(lam, mu).at_one() == expected
        assert K1(lam, mu).at_one() == expected


def test_alternating_sum_vanishes_for_odd_size():
    # the full sum over S_n without the parity shortcut
    for n in range(1, 4):
        for lam, mu in small_pairs(n, 4):
            if (sum(mu) - sum(lam)) % 2 == 0:
                continue
            top = tuple(x + n - i for i, x in enumerate(lam))
            bottom = tuple(x + n - i for i, x in enumerate(mu))
            for function in (fq_direct, Fq_direct):
                total = LaurentPoly.zero()
                for w, sign in weyl_group("A", n):
                    beta = tuple(a - b for a, b in zip(w.act_tuple(top), bottom))
                    total = total + function(n, beta) * sign
                assert total.is_zero()
            assert u(lam, mu).is_zero()
            assert U(lam, mu).is_zero()
