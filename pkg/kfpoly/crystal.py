# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Words in the alphabet 1 < 2 < ... < n < n-bar < ... < 1-bar, carrying the
crystal structures of types A_{2n-1} and C_n; highest weight words, the
energy statistic, one-dimension sums and oscillating tableaux.

A barred letter k-bar is stored as the integer -k.
"""

import itertools
from functools import lru_cache

from .config import check_limit
from .kostka import SemistandardTableau
from .qpoly import LaurentPoly
from .utils import pad
from .weyl import Partition, conjugate

CRYSTAL_TYPES = ["A", "C"]
BAR = "̄"


def alphabet(n):
    """
    The letters in increasing order: 1, ..., n, -n, ..., -1.
    """
    return tuple(range(1, n + 1)) + tuple(-k for k in range(n, 0, -1))


def letter_rank(x, n):
    """
    Position of a letter in the total order, from 1 to 2n.
    """
    return x if x > 0 else 2 * n + 1 + x


def letter_from_rank(r, n):
    return r if r <= n else r - 2 * n - 1


def format_letter(x):
    return str(x) if x > 0 else str(-x) + BAR


def parse_letter(token):
    token = token.strip()
    try:
        if token.endswith(BAR):
            return -int(token[: -len(BAR)])
        return int(token)
    except ValueError:
        raise ValueError("invalid letter: %r" % token)


class CrystalWord:
    """
    A word x_1 x_2 ... x_L, read as the tensor product x_1 (x) ... (x) x_L.

    Args:
        * letters: (sequence of int) letters, -k for k-bar
        * n: (int) rank of the alphabet
    """

    __slots__ = ("letters", "n")

    def __init__(self, letters, n):
        self.letters = tuple(int(x) for x in letters)
        self.n = n
        for x in self.letters:
            if x == 0 or abs(x) > n:
                raise ValueError("letter %r outside the alphabet of rank %d" % (x, n))

    @classmethod
    def from_string(cls, text, n):
        """
        Parse "1 2 2̄" or "1 2 -2".
        """
        return cls([parse_letter(token) for token in text.split()], n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def ranks(self):
        return tuple(letter_rank(x, self.n) for x in self.letters)

    def weight_C(self):
        """
        (#i - #i-bar) for i = 1..n.
        """
        return tuple(
            self.letters.count(i) - self.letters.count(-i) for i in range(1, self.n + 1)
        )

    def weight_A(self):
        """
        Letter multiplicities in the order of the alphabet, a 2n-vector.
        """
        return tuple(self.letters.count(x) for x in alphabet(self.n))

    def __eq__(self, other):
        if not isinstance(other, CrystalWord):
            return NotImplemented
        return self.n == other.n and self.letters == other.letters

    def __hash__(self):
        return hash((self.n, self.letters))

    def __str__(self):
        return " ".join(format_letter(x) for x in self.letters)

    def __repr__(self):
        return "<CrystalWord %s (n=%r)>" % (self, self.n)


def _check_index(type, n, index):
    if type == "A":
        top = 2 * n - 1
    elif type == "C":
        top = n
    else:
        raise ValueError("unknown crystal type: %r" % (type,))
    if not 1 <= index <= top:
        raise ValueError("invalid index %r for type %s with n=%d" % (index, type, n))


def _letter_sign(type, n, i, x):
    # "+" when f_i can act on the letter, "-" when e_i can
    if type == "A":
        r = letter_rank(x, n)
        if r == i:
            return "+"
        elif r == i + 1:
            return "-"
        return None
    if i == n:
        if x == n:
            return "+"
        elif x == -n:
            return "-"
        return None
    if x == i or x == -(i + 1):
        return "+"
    elif x == i + 1 or x == -i:
        return "-"
    return None


def _move_letter(type, n, i, x, op):
    if type == "A":
        r = letter_rank(x, n)
        return letter_from_rank(r + 1 if op == "f" else r - 1, n)
    if i == n:
        return -x
    if op == "f":
        return i + 1 if x == i else -i
    return i if x == i + 1 else -(i + 1)


def signature(type, n, index, letters):
    """
    Bracket the signs of the letters for index i, cancelling each "+"
    with a later "-". Returns (unmatched "-" positions, unmatched "+"
    positions), both left to right.
    """
    pluses = []
    minuses = []
    for pos, x in enumerate(letters):
        sign = _letter_sign(type, n, index, x)
        if sign == "+":
            pluses.append(pos)
        elif sign == "-":
            if pluses:
                pluses.pop()
            else:
                minuses.append(pos)
    return minuses, pluses


def crystal_op(type, n, op, index, b):
    """
    Apply e_i or f_i to a word; None when the operator kills it.

    Args:
        * type: (str) "A" (indices 1..2n-1) or "C" (indices 1..n)
        * n: (int) rank of the alphabet
        * op: (str) "e" or "f"
        * index: (int) i
        * b: (CrystalWord) the vertex
    """
    _check_index(type, n, index)
    if op not in ("e", "f"):
        raise ValueError("unknown crystal operator: %r" % (op,))
    letters = b.letters if isinstance(b, CrystalWord) else tuple(b)
    minuses, pluses = signature(type, n, index, letters)
    if op == "f":
        if not pluses:
            return None
        pos = pluses[0]
    else:
        if not minuses:
            return None
        pos = minuses[-1]
    result = list(letters)
    result[pos] = _move_letter(type, n, index, letters[pos], op)
    return CrystalWord(result, n)


def _indices(type, n):
    return range(1, (2 * n if type == "A" else n + 1))


def is_highest_weight(type, n, b):
    letters = b.letters if isinstance(b, CrystalWord) else tuple(b)
    return all(not signature(type, n, i, letters)[0] for i in _indices(type, n))


@lru_cache(maxsize=None)
def _highest_weight_words(type, n, length):
    letters = alphabet(n)
    found = []

    def _extend(prefix):
        if len(prefix) == length:
            found.append(CrystalWord(prefix, n))
            return
        for x in letters:
            word = prefix + (x,)
            if is_highest_weight(type, n, word):
                _extend(word)

    _extend(())
    return tuple(found)


def check_length(length):
    """
    Reject a negative word length or one above max_crystal_rank.
    """
    if length < 0:
        raise ValueError("word length must be nonnegative: %r" % (length,))
    check_limit("max_crystal_rank", length)


def highest_weight_words(type, n, weight=None, length=None):
    """
    The words of the given length (default n) killed by every e_i, in
    increasing lexicographic order. Every prefix of such a word is again
    highest weight, which prunes the search.

    Args:
        * type: (str) "A" or "C"
        * n: (int) rank of the alphabet
        * weight: (tuple) optional filter, wt^C for type C, wt^A for type A
        * length: (int) word length
    """
    if type not in CRYSTAL_TYPES:
        raise ValueError("unknown crystal type: %r" % (type,))
    check_limit("max_crystal_rank", n)
    if length is None:
        length = n
    check_length(length)
    words = _highest_weight_words(type, n, length)
    if weight is None:
        return list(words)
    weight = tuple(weight)
    if type == "C":
        return [b for b in words if b.weight_C() == weight]
    return [b for b in words if b.weight_A() == weight]


def highest_weight_words_brute(type, n, length=None):
    """
    The same set by filtering all (2n)^length words.
    """
    if length is None:
        length = n
    return [
        CrystalWord(word, n)
        for word in itertools.product(alphabet(n), repeat=length)
        if is_highest_weight(type, n, word)
    ]


def all_words(n, length=None):
    if length is None:
        length = n
    for word in itertools.product(alphabet(n), repeat=length):
        yield CrystalWord(word, n)


def xi_class(b):
    """
    The bits xi_i = 0 if x_i < x_{i+1}, else 1.
    """
    ranks = b.ranks()
    return tuple(0 if ranks[i] < ranks[i + 1] else 1 for i in range(len(ranks) - 1))


def energy_H(b):
    """
    sum over i of (L - i) [x_i >= x_{i+1}] in the order of the alphabet.
    """
    length = len(b)
    return sum((length - i) * bit for i, bit in enumerate(xi_class(b), 1))


def one_dim_sum_X(lam, n):
    """
    X_{lam,(1^n)}(q): sum of q^H over the type C highest weight words of
    length n and weight lam.
    """
    lam = Partition(pad(lam, n))
    result = {}
    for b in highest_weight_words("C", n, weight=lam):
        h = energy_H(b)
        result[h] = result.get(h, 0) + 1
    return LaurentPoly(result)


class OscillatingTableau:
    """
    A sequence of Young diagrams Q_1, ..., Q_L starting from a single box,
    consecutive diagrams differing by one box.

    Args:
        * diagrams: (sequence of partitions) each of length n
    """

    def __init__(self, diagrams):
        self.diagrams = tuple(Partition(q) for q in diagrams)
        previous = None
        for q in self.diagrams:
            if previous is None:
                if sum(q) != 1:
                    raise ValueError("Q_1 must be a single box: %r" % (tuple(q),))
            else:
                difference = [abs(a - b) for a, b in zip(q, previous)]
                if len(q) != len(previous) or sum(difference) != 1:
                    raise ValueError(
                        "diagrams %r and %r do not differ by one box"
                        % (tuple(previous), tuple(q))
                    )
            previous = q

    def __len__(self):
        return len(self.diagrams)

    def conjugate(self):
        return OscillatingTableau(conjugate(q) for q in self.diagrams)

    def word(self):
        """
        The letters read off the steps: adding to row k gives k, removing
        from row k gives k-bar.
        """
        letters = []
        n = len(self.diagrams[0]) if self.diagrams else 0
        previous = (0,) * n
        for q in self.diagrams:
            for row, (a, b) in enumerate(zip(q, previous)):
                if a == b + 1:
                    letters.append(row + 1)
                elif a == b - 1:
                    letters.append(-(row + 1))
            previous = q
        return CrystalWord(letters, n)

    def __eq__(self, other):
        if not isinstance(other, OscillatingTableau):
            return NotImplemented
        return self.diagrams == other.diagrams

    def __hash__(self):
        return hash(self.diagrams)

    def __repr__(self):
        return "<OscillatingTableau %s>" % " ".join(
            "(" + ",".join(str(p) for p in q.nonzero()) + ")" for q in self.diagrams
        )


class StepError(ArithmeticError):
    """
    A letter of a highest weight word that does not give an oscillating
    tableau step.
    """


def oscillating_tableau(b):
    """
    Q(b): start from the empty diagram, add a box in row k for the letter
    k and remove one from row k for k-bar.

    Args:
        * b: (CrystalWord) a type C highest weight word
    """
    if not is_highest_weight("C", b.n, b):
        raise ValueError("not a highest weight word of type C: %s" % b)
    n = b.n
    shape = [0] * n
    diagrams = []
    for pos, x in enumerate(b.letters):
        row = abs(x) - 1
        if x > 0:
            if row > 0 and shape[row - 1] == shape[row]:
                raise StepError("cannot add a box in row %d at step %d of %s" % (row + 1, pos + 1, b))
            shape[row] += 1
        else:
            if shape[row] == 0 or (row + 1 < n and shape[row + 1] == shape[row]):
                raise StepError(
                    "cannot remove a box from row %d at step %d of %s" % (row + 1, pos + 1, b)
                )
            shape[row] -= 1
        diagrams.append(tuple(shape))
    return OscillatingTableau(diagrams)


def conjugate_word(b):
    """
    The highest weight word b' whose oscillating tableau is Q(b) with
    every diagram conjugated.
    """
    return oscillating_tableau(b).conjugate().word()


def _columns_to_rows(columns):
    height = len(columns[0]) if columns else 0
    return [[column[r] for column in columns if len(column) > r] for r in range(height)]


def _rsk(b):
    # column insertion of the ranks, read left to right
    p_columns = []
    q_columns = []
    for step, value in enumerate(b.ranks(), 1):
        col = 0
        while True:
            if col == len(p_columns):
                p_columns.append([value])
                q_columns.append([step])
                break
            current = p_columns[col]
            bumped = None
            for r, entry in enumerate(current):
                if entry >= value:
                    bumped = r
                    break
            if bumped is None:
                current.append(value)
                q_columns[col].append(step)
                break
            value, current[bumped] = current[bumped], value
            col += 1
    return (
        SemistandardTableau(_columns_to_rows(p_columns)),
        SemistandardTableau(_columns_to_rows(q_columns)),
    )


def rsk_P(b):
    """
    Insertion tableau of the letter ranks 1..2n, built by column
    insertion from the left. On a type A highest weight word its shape
    is wt^A(b).
    """
    return _rsk(b)[0]


def rsk_Q(b):
    """
    Recording tableau of the column insertion; standard with entries
    1..len(b), and charge(rsk_Q(b)) = energy_H(b) for every word.
    """
    return _rsk(b)[1]


def _barred(x):
    return x < 0


def check_conjugation_lemmas(b):
    """
    For a type C highest weight word b with conjugate b':
    letters of b and b' are barred at the same positions; the descent
    bit of each adjacent pair flips when the pair is of the same kind and
    is kept otherwise; and the sum over mixed pairs Z_b of
    (L - i)(1 - 2H_i) equals (L - |wt(b)|)/2.
    """
    b_conj = conjugate_word(b)
    if [_barred(x) for x in b] != [_barred(x) for x in b_conj]:
        return False
    bits = xi_class(b)
    bits_conj = xi_class(b_conj)
    length = len(b)
    mixed_sum = 0
    for i in range(length - 1):
        same_kind = _barred(b[i]) == _barred(b[i + 1])
        if same_kind and bits_conj[i] != 1 - bits[i]:
            return False
        if not same_kind:
            if bits_conj[i] != bits[i]:
                return False
            mixed_sum += (length - i - 1) * (1 - 2 * bits[i])
    return 2 * mixed_sum == length - sum(b.weight_C())


def check_X_conjugation(lam, n):
    """
    X_{lam'}(q) = q^{n(n-1)/2 - (n-|lam|)/2} X_lam(q^-1).
    """
    lam = Partition(pad(lam, n))
    lhs = one_dim_sum_X(conjugate(lam, n), n)
    rhs = one_dim_sum_X(lam, n)
    if (n - sum(lam)) % 2:
        return lhs.is_zero() and rhs.is_zero()
    exponent = n * (n - 1) // 2 - (n - sum(lam)) // 2
    return lhs == rhs.substitute("q^-1").shift(exponent)


def crystal_graph_dot(type, n, length=None):
    """
    The crystal graph on all words of the given length (default n) in DOT
    format, with an edge b -> f_i(b) labelled i.
    """
    if type not in CRYSTAL_TYPES:
        raise ValueError("unknown crystal type: %r" % (type,))
    check_limit("max_crystal_rank", n)
    check_length(n if length is None else length)
    lines = ['digraph "crystal_%s%d" {' % (type, n)]
    for b in all_words(n, length):
        lines.append('    "%s";' % b)
    for b in all_words(n, length):
        for i in _indices(type, n):
            target = crystal_op(type, n, "f", i, b)
            if target is not None:
                lines.append('    "%s" -> "%s" [label="%d"];' % (b, target, i))
    lines.append("}")
    return "\n".join(lines) + "\n"
