# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import pytest

from kfpoly.crystal import (
    BAR,
    CrystalWord,
    OscillatingTableau,
    all_words,
    alphabet,
    check_conjugation_lemmas,
    check_X_conjugation,
    conjugate_word,
    crystal_graph_dot,
    crystal_op,
    energy_H,
    highest_weight_words,
    highest_weight_words_brute,
    is_highest_weight,
    letter_from_rank,
    letter_rank,
    one_dim_sum_X,
    oscillating_tableau,
    parse_letter,
    rsk_P,
    rsk_Q,
    signature,
    xi_class,
)
from kfpoly.kostka import charge, kostka_A
from kfpoly.qpoly import LaurentPoly
from kfpoly.utils import iter_partitions


def word(text, n):
    return CrystalWord.from_string(text, n)


def test_alphabet():
    assert alphabet(2) == (1, 2, -2, -1)
    assert [letter_rank(x, 2) for x in alphabet(2)] == [1, 2, 3, 4]
    for r in range(1, 7):
        assert letter_rank(letter_from_rank(r, 3), 3) == r


def test_parse_and_format():
    assert word("1 2" + BAR, 2).letters == (1, -2)
    assert word("1 -2", 2) == word("1 2" + BAR, 2)
    assert str(word("1 -2", 2)) == "1 2" + BAR
    assert parse_letter(" 3 ") == 3
    with pytest.raises(ValueError):
        parse_letter("x")
    with pytest.raises(ValueError):
        CrystalWord([3], 2)
    with pytest.raises(ValueError):
        CrystalWord([0], 2)


def test_weights():
    b = word("1 1 -2 2 -1", 2)
    assert b.weight_C() == (1, 0)
    assert b.weight_A() == (2, 1, 1, 1)
    assert b.ranks() == (1, 1, 3, 2, 4)


def test_signature():
    # 1 then 1-bar cancel for i = 1
    assert signature("C", 2, 1, (1, -1)) == ([], [])
    assert signature("C", 2, 1, (2, 1)) == ([0], [1])
    assert signature("A", 2, 1, (1, 1, 2)) == ([], [0])


def test_f_and_e():
    assert crystal_op("C", 2, "f", 1, word("1", 2)) == word("2", 2)
    assert crystal_op("C", 1, "f", 1, word("1", 1)) == word("-1", 1)
    assert crystal_op("C", 2, "f", 1, word("-2", 2)) == word("-1", 2)
    assert crystal_op("C", 2, "f", 1, word("2", 2)) is None
    assert crystal_op("C", 2, "f", 2, word("2", 2)) == word("-2", 2)
    assert crystal_op("C", 2, "e", 1, word("1", 2)) is None
    assert crystal_op("A", 2, "f", 2, word("2", 2)) == word("-2", 2)
    assert crystal_op("A", 2, "f", 3, word("-2", 2)) == word("-1", 2)
    # leftmost unmatched "+"
    assert crystal_op("C", 2, "f", 1, word("1 1", 2)) == word("2 1", 2)


def test_f_and_e_inverse():
    for type in ["A", "C"]:
        indices = range(1, 4) if type == "A" else range(1, 3)
        for b in all_words(2, 3):
            for i in indices:
                image = crystal_op(type, 2, "f", i, b)
                if image is not None:
                    assert crystal_op(type, 2, "e", i, image) == b
                image = crystal_op(type, 2, "e", i, b)
                if image is not None:
                    assert crystal_op(type, 2, "f", i, image) == b


def test_f_preserves_xi():
    for type in ["A", "C"]:
        indices = range(1, 4) if type == "A" else range(1, 3)
        for b in all_words(2, 3):
            for i in indices:
                image = crystal_op(type, 2, "f", i, b)
                if image is not None:
                    assert xi_class(image) == xi_class(b)


def test_operator_rejects():
    with pytest.raises(ValueError):
        crystal_op("C", 2, "f", 3, word("1", 2))
    with pytest.raises(ValueError):
        crystal_op("A", 2, "f", 4, word("1", 2))
    with pytest.raises(ValueError):
        crystal_op("B", 2, "f", 1, word("1", 2))
    with pytest.raises(ValueError):
        crystal_op("C", 2, "g", 1, word("1", 2))


def test_highest_weight_words():
    assert [str(b) for b in highest_weight_words("C", 2, (0, 0))] == ["1 1" + BAR]
    assert [str(b) for b in highest_weight_words("C", 2)] == ["1 1", "1 2", "1 1" + BAR]
    assert [str(b) for b in highest_weight_words("C", 2, (1, 1))] == ["1 2"]
    assert len(highest_weight_words("A", 3)) == 4
    assert len(highest_weight_words("A", 3, (1, 1, 1, 0, 0, 0))) == 1
    assert is_highest_weight("C", 2, word("1 1", 2))
    assert not is_highest_weight("C", 2, word("2 1", 2))
    with pytest.raises(ValueError):
        highest_weight_words("D", 2)
    with pytest.raises(ValueError):
        highest_weight_words("C", 2, length=12)
    with pytest.raises(ValueError):
        highest_weight_words("A", 2, length=-1)


def test_highest_weight_search_matches_brute_force():
    for type in ["A", "C"]:
        for n in range(1, 4):
            assert highest_weight_words(type, n) == highest_weight_words_brute(type, n)


def test_energy():
    assert xi_class(word("1 1 1", 3)) == (1, 1)
    assert energy_H(word("1 1 1", 3)) == 3
    assert energy_H(word("1 2 3", 3)) == 0
    assert energy_H(word("1 -1", 2)) == 0
    assert xi_class(word("-1 1", 1)) == (1,)


def test_one_dim_sum():
    assert one_dim_sum_X((0, 0), 2) == LaurentPoly.one()
    assert one_dim_sum_X((1, 0), 2).is_zero()
    for n in range(1, 5):
        lam = (n,) + (0,) * (n - 1)
        assert one_dim_sum_X(lam, n) == LaurentPoly.monomial(n * (n - 1) // 2)
    for n in range(1, 4):
        for lam in iter_partitions(n, n):
            assert one_dim_sum_X(lam, n) == kostka_A(lam, (1,) * n)


def test_oscillating_tableau():
    q = oscillating_tableau(word("1 -1", 2))
    assert q.diagrams == ((1, 0), (0, 0))
    assert q.word() == word("1 -1", 2)
    assert len(q) == 2
    q = oscillating_tableau(word("1 1 1", 3))
    assert q.conjugate().diagrams == ((1, 0, 0), (1, 1, 0), (1, 1, 1))
    with pytest.raises(ValueError):
        oscillating_tableau(word("2 1", 2))


def test_oscillating_tableau_rejects():
    with pytest.raises(ValueError):
        OscillatingTableau([(1, 1)])
    with pytest.raises(ValueError):
        OscillatingTableau([(1, 0), (2, 1)])


def test_conjugate_word():
    assert conjugate_word(word("1 1 1", 3)) == word("1 2 3", 3)
    assert conjugate_word(word("1 -1", 2)) == word("1 -1", 2)
    for n in range(1, 4):
        for b in highest_weight_words("C", n):
            b_conj = conjugate_word(b)
            assert is_highest_weight("C", n, b_conj)
            assert conjugate_word(b_conj) == b


def test_conjugation_lemmas():
    for n in range(1, 5):
        for b in highest_weight_words("C", n):
            assert check_conjugation_lemmas(b)


def test_X_conjugation():
    for n in range(1, 5):
        for size in range(n + 1):
            for lam in iter_partitions(size, n):
                assert check_X_conjugation(lam, n)


def test_rsk():
    assert rsk_Q(word("1 2 3", 3)).shape == (1, 1, 1)
    assert rsk_Q(word("3 2 1", 3)).shape == (3,)
    assert rsk_P(word("2 1", 2)).rows == ((1, 2),)
    assert rsk_Q(word("1 -1 2", 2)).is_standard()
    # rsk_P is over the ranks, so 1-bar is the largest letter
    assert rsk_P(word("-1 1", 2)).rows == ((1, 4),)
    assert rsk_Q(word("1 1 2", 3)).rows == ((1, 2), (3,))
    assert rsk_Q(word("1 2 1", 3)).rows == ((1, 3), (2,))


def test_rsk_shape_is_highest_weight():
    for n in range(1, 5):
        for b in highest_weight_words("A", n):
            p = rsk_P(b)
            assert rsk_Q(b).shape == p.shape
            assert tuple(x for x in p.shape if x) == tuple(x for x in b.weight_A() if x)


def test_energy_is_charge_of_recording_tableau():
    assert energy_H(word("1 1 2", 3)) == charge(rsk_Q(word("1 1 2", 3))) == 2
    assert energy_H(word("1 2 1", 3)) == charge(rsk_Q(word("1 2 1", 3))) == 1
    for n in range(1, 4):
        for b in all_words(n):
            assert energy_H(b) == charge(rsk_Q(b))
    for n in range(1, 5):
        for b in highest_weight_words("A", n):
            assert energy_H(b) == charge(rsk_Q(b))


def test_crystal_graph_dot():
    dot = crystal_graph_dot("C", 1)
    assert dot.startswith('digraph "crystal_C1" {')
    assert '"1" -> "1%s" [label="1"];' % BAR in dot
    assert dot.endswith("}\n")
    dot = crystal_graph_dot("A", 2, length=1)
    assert '"2" -> "2%s" [label="2"];' % BAR in dot
    assert dot.count("->") == 3
    with pytest.raises(ValueError):
        crystal_graph_dot("C", 1, length=12)
