# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

"""
Exact Laurent polynomials in one variable q with integer coefficients.
"""

from numbers import Integral

SUBSTITUTIONS = ["q^2", "q^-1", "1"]


class LaurentPoly:
    """
    An immutable Laurent polynomial sum(c * q^e).

    Coefficients are Python integers, so alternating sums never
    overflow. Zero coefficients are never stored.

    Args:
        * coeffs: (dict or int) map from exponent to coefficient, or
          an integer constant
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, Integral):
            coeffs = {0: int(coeffs)}
        elif isinstance(coeffs, LaurentPoly):
            coeffs = coeffs._coeffs
        self._coeffs = {
            int(exp): int(coeff) for exp, coeff in coeffs.items() if coeff != 0
        }
        self._hash = None

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def items(self):
        """
        The (exponent, coefficient) pairs by increasing exponent.
        """
        return sorted(self._coeffs.items())

    def is_zero(self):
        return len(self._coeffs) == 0

    def degree(self):
        if self.is_zero():
            return None
        return max(self._coeffs)

    def low_degree(self):
        if self.is_zero():
            return None
        return min(self._coeffs)

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, 0)

    def has_nonnegative_coefficients(self):
        return all(coeff > 0 for coeff in self._coeffs.values())

    def is_polynomial(self):
        return all(exp >= 0 for exp in self._coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Integral):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, Integral):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            result[exp] = result.get(exp, 0) + coeff
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({exp: -coeff for exp, coeff in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, Integral):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Integral):
            return LaurentPoly(
                {exp: coeff * other for exp, coeff in self._coeffs.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power):
        if not isinstance(power, Integral) or power < 0:
            raise ValueError("invalid power: %r" % (power,))
        result = LaurentPoly.one()
        for _ in range(power):
            result = result * self
        return result

    def shift(self, k):
        """
        Multiply by q^k.
        """
        return LaurentPoly({exp + k: coeff for exp, coeff in self._coeffs.items()})

    def substitute(self, kind):
        """
        Substitute q -> q^2, q -> q^-1 or q -> 1.

        Args:
            * kind: (str) one of SUBSTITUTIONS

        Returns a LaurentPoly, or an int for "1".
        """
        if kind not in SUBSTITUTIONS:
            raise ValueError("unknown substitution: %r" % (kind,))
        if kind == "q^2":
            return LaurentPoly({2 * exp: coeff for exp, coeff in self._coeffs.items()})
        elif kind == "q^-1":
            return LaurentPoly({-exp: coeff for exp, coeff in self._coeffs.items()})
        return sum(self._coeffs.values())

    def at_one(self):
        return self.substitute("1")

    def to_json(self):
        return {str(exp): coeff for exp, coeff in self.items()}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ValueError("expected an object of exponent: coefficient, got %r" % (data,))
        coeffs = {}
        for key, value in data.items():
            try:
                exp = int(key)
            except (TypeError, ValueError):
                raise ValueError("invalid exponent: %r" % (key,))
            if isinstance(value, bool) or not isinstance(value, Integral):
                raise ValueError("invalid coefficient for q^%s: %r" % (key, value))
            if value == 0:
                raise ValueError("zero coefficient for q^%s" % key)
            coeffs[exp] = value
        return cls(coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        text = ""
        for exp, coeff in sorted(self._coeffs.items(), reverse=True):
            magnitude = abs(coeff)
            if exp == 0:
                term = str(magnitude)
            else:
                power = "q" if exp == 1 else "q^%d" % exp
                term = power if magnitude == 1 else "%d%s" % (magnitude, power)
            if text == "":
                text = term if coeff > 0 else "-" + term
            else:
                text += (" + " if coeff > 0 else " - ") + term
        return text

    def __repr__(self):
        return "<LaurentPoly %s>" % self


Q = LaurentPoly.monomial(1)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def substitute(p, kind):
    return p.substitute(kind)


def shift(p, k):
    return p.shift(k)


def poly_sum(polys):
    """
    Sum an iterable of LaurentPolys without building intermediates.
    """
    result = {}
    for poly in polys:
        for exp, coeff in poly._coeffs.items():
            result[exp] = result.get(exp, 0) + coeff
    return LaurentPoly(result)


def from_terms(terms):
    """
    Build a LaurentPoly from (exponent, coefficient) pairs, summing repeats.
    """
    result = {}
    for exp, coeff in terms:
        result[exp] = result.get(exp, 0) + coeff
    return LaurentPoly(result)
