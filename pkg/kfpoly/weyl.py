# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Root-system data for the classical types: weights, partitions, signed
permutations and the Weyl groups S_n, W(B_n) = W(C_n) and W(D_n).
"""

import itertools
from fractions import Fraction
from functools import lru_cache

from .utils import check_decreasing, check_same_length, format_vector

TYPES = ["A", "B", "C", "D"]
GROUP_TYPES = ["A", "B", "C", "BC", "D"]


class ParityError(ArithmeticError):
    """
    A doubled coordinate was odd where the construction guarantees evenness.
    """


def check_type(type, allowed=TYPES):
    if type not in allowed:
        raise ValueError("unknown root system type: %r" % (type,))


class Weight:
    """
    A weight of rank n stored in doubled coordinates, so that the
    half-integral weights of types B and D are exact.

    Args:
        * coords2: (sequence of int) twice the coordinates
    """

    __slots__ = ("coords2",)

    def __init__(self, coords2):
        self.coords2 = tuple(int(c) for c in coords2)

    @classmethod
    def from_ints(cls, values):
        return cls(2 * v for v in values)

    @classmethod
    def from_string(cls, text):
        """
        Parse "3/2,1/2" or "2,1,0".
        """
        coords2 = []
        for part in text.split(","):
            value = Fraction(part.strip())
            if (2 * value).denominator != 1:
                raise ValueError("coordinate is not a half-integer: %r" % part)
            coords2.append(int(2 * value))
        return cls(coords2)

    @property
    def n(self):
        return len(self.coords2)

    def is_integral(self):
        return all(c % 2 == 0 for c in self.coords2)

    def ints(self):
        """
        The integral coordinates; raises ParityError on a half-integer.
        """
        if not self.is_integral():
            raise ParityError("weight %s is not integral" % self)
        return tuple(c // 2 for c in self.coords2)

    def size2(self):
        """
        Twice |v|, the sum of the coordinates.
        """
        return sum(self.coords2)

    def _check_rank(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch: %s and %s" % (self, other))

    def __add__(self, other):
        self._check_rank(other)
        return Weight(a + b for a, b in zip(self.coords2, other.coords2))

    def __sub__(self, other):
        self._check_rank(other)
        return Weight(a - b for a, b in zip(self.coords2, other.coords2))

    def __neg__(self):
        return Weight(-c for c in self.coords2)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.coords2 == other.coords2

    def __hash__(self):
        return hash(self.coords2)

    def __str__(self):
        parts = []
        for c in self.coords2:
            parts.append(str(c // 2) if c % 2 == 0 else "%d/2" % c)
        return "(" + ",".join(parts) + ")"

    def __repr__(self):
        return "Weight%s" % self


class Partition(tuple):
    """
    A weakly decreasing tuple of nonnegative integers with an explicit
    length; trailing zeros are part of the value.

    Args:
        * parts: (sequence of int) the parts
        * length: (int) optional length to pad to with zeros
    """

    def __new__(cls, parts=(), length=None):
        parts = tuple(int(p) for p in parts)
        if length is not None:
            if len(parts) > length:
                trimmed = parts[length:]
                if any(trimmed):
                    raise ValueError("%r has more than %d nonzero parts" % (parts, length))
                parts = parts[:length]
            parts = parts + (0,) * (length - len(parts))
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative: %r" % (parts,))
        check_decreasing(parts, "partition")
        return tuple.__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def nonzero(self):
        return tuple(p for p in self if p > 0)

    def conjugate(self, length=None):
        return conjugate(self, length)

    def __repr__(self):
        return "Partition(%s)" % format_vector(self)


def conjugate(p, length=None):
    """
    Transpose the Young diagram of p; the result has the given length,
    which defaults to the length of p.
    """
    if length is None:
        length = len(p)
    first = p[0] if len(p) > 0 else 0
    if first > length:
        raise ValueError(
            "conjugate of %r does not fit in length %d" % (tuple(p), length)
        )
    parts = [sum(1 for part in p if part > i) for i in range(length)]
    return Partition(parts)


def kappa(n):
    return (1,) * n


def involution_I(v):
    """
    I(v_1, ..., v_n) = (-v_n, ..., -v_1).
    """
    check_decreasing(v)
    return tuple(-x for x in reversed(tuple(v)))


def hat(lam, mu):
    """
    With m = max(lam_1, mu_1), return (m - lam reversed, m - mu reversed).
    """
    check_same_length(lam, mu)
    if len(lam) == 0:
        return Partition(()), Partition(())
    m = max(lam[0], mu[0])
    return (
        Partition(m - x for x in reversed(tuple(lam))),
        Partition(m - x for x in reversed(tuple(mu))),
    )


def rho(type, n):
    """
    The rho vector of a classical type in doubled coordinates.

    Args:
        * type: (str) "B", "C", "D", or "A"/"n" for rho_n = (n, ..., 1)
        * n: (int) rank
    """
    if n < 1:
        raise ValueError("rank must be positive: %r" % (n,))
    if type in ("A", "C", "n"):
        return Weight(2 * (n - i) for i in range(n))
    elif type == "B":
        return Weight(2 * (n - i) - 1 for i in range(n))
    elif type == "D":
        return Weight(2 * (n - 1 - i) for i in range(n))
    else:
        raise ValueError("unknown root system type: %r" % (type,))


def _unit(n, i, scale=1):
    v = [0] * n
    v[i] = scale
    return v


@lru_cache(maxsize=None)
def positive_roots(type, n):
    """
    The positive roots of A_{n-1}, B_n, C_n or D_n as integer tuples.
    """
    check_type(type)
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            v = _unit(n, i)
            v[j] = -1
            roots.append(tuple(v))
    if type in ("B", "C", "D"):
        for i in range(n):
            for j in range(i + 1, n):
                v = _unit(n, i)
                v[j] = 1
                roots.append(tuple(v))
    if type == "B":
        roots.extend(tuple(_unit(n, i)) for i in range(n))
    elif type == "C":
        roots.extend(tuple(_unit(n, i, 2)) for i in range(n))
    return tuple(roots)


class SignedPerm:
    """
    An element of the hyperoctahedral group, given by the signed images
    w(1), ..., w(n).

    Composition is (uv)(i) = u(v(i)) with u(-j) = -u(j).
    """

    __slots__ = ("image", "_sign")

    def __init__(self, image):
        image = tuple(int(x) for x in image)
        n = len(image)
        if sorted(abs(x) for x in image) != list(range(1, n + 1)):
            raise ValueError("not a signed permutation: %r" % (image,))
        self.image = image
        self._sign = None

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def n(self):
        return len(self.image)

    def __call__(self, i):
        if i < 0:
            return -self.image[-i - 1]
        return self.image[i - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("rank mismatch: %r and %r" % (self, other))
        return SignedPerm(self(other(i)) for i in range(1, self.n + 1))

    def inverse(self):
        result = [0] * self.n
        for i, x in enumerate(self.image, 1):
            result[abs(x) - 1] = i if x > 0 else -i
        return SignedPerm(result)

    def negatives(self):
        return sum(1 for x in self.image if x < 0)

    def sign(self):
        """
        (-1)^l(w), the determinant of the signed permutation matrix.
        """
        if self._sign is None:
            perm = [abs(x) - 1 for x in self.image]
            inversions = sum(
                1
                for i in range(len(perm))
                for j in range(i + 1, len(perm))
                if perm[i] > perm[j]
            )
            self._sign = -1 if (inversions + self.negatives()) % 2 else 1
        return self._sign

    def is_in(self, type):
        if type == "A":
            return self.negatives() == 0
        elif type == "D":
            return self.negatives() % 2 == 0
        elif type in ("B", "C", "BC"):
            return True
        raise ValueError("unknown group type: %r" % (type,))

    def act_tuple(self, v):
        return tuple(v[x - 1] if x > 0 else -v[-x - 1] for x in self.image)

    def act(self, v):
        """
        Coordinate i of the result is v_{w(i)}, negated when w(i) < 0.
        Accepts a Weight or an integer tuple and returns the same kind.
        """
        if len(v.coords2 if isinstance(v, Weight) else v) != self.n:
            raise ValueError("rank mismatch: %r acting on %r" % (self, v))
        if isinstance(v, Weight):
            return Weight(self.act_tuple(v.coords2))
        return self.act_tuple(tuple(v))

    def dot_act(self, v, rho):
        """
        w(v + rho) - rho.
        """
        if not isinstance(v, Weight):
            v = Weight.from_ints(v)
        return self.act(v + rho) - rho

    def __eq__(self, other):
        if not isinstance(other, SignedPerm):
            return NotImplemented
        return self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return "SignedPerm(%s)" % format_vector(self.image)


@lru_cache(maxsize=None)
def weyl_group(type, n):
    """
    The elements of S_n ("A"), W(B_n) ("B", "C" or "BC") or W(D_n) ("D")
    as a tuple of (SignedPerm, sign) pairs; the identity comes first.
    """
    check_type(type, GROUP_TYPES)
    if n < 1:
        raise ValueError("rank must be positive: %r" % (n,))
    elements = []
    for perm in itertools.permutations(range(1, n + 1)):
        if type == "A":
            signs = [(1,) * n]
        else:
            signs = itertools.product((1, -1), repeat=n)
        for pattern in signs:
            w = SignedPerm(s * p for s, p in zip(pattern, perm))
            if type == "D" and w.negatives() % 2:
                continue
            elements.append((w, w.sign()))
    return tuple(elements)


def enumerate_group(type, n):
    """
    Yield every element of the Weyl group exactly once.
    """
    for w, _ in weyl_group(type, n):
        yield w


def sign_char(w):
    return w.sign()


def act(w, v):
    return w.act(v)


def dot_act(w, v, rho):
    return w.dot_act(v, rho)
