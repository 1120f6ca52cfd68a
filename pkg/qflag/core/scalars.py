"""
Exact Laurent polynomials in q over the rationals.

LaurentScalar is the scalar ring of every module computation. LaurentFraction
only appears transiently, as the coordinate type returned by express.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy
from deal import post, pre

from qflag.core.errors import NonDivisibleError, ZeroDivisionScalarError

Rational = Fraction | int

_Q = sympy.Symbol("q")


def _normalize(pairs: Iterable[tuple[int, Rational]]) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    for exponent, coeff in pairs:
        acc[exponent] = acc.get(exponent, Fraction(0)) + coeff
    return tuple(sorted((e, Fraction(c)) for e, c in acc.items() if c))


@dataclass(frozen=True)
class LaurentScalar:
    """Finite sum Σ c_e q^e, stored as sorted (e, c) pairs with no zero c."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, Rational]) -> LaurentScalar:
        return cls(_normalize(coefficients.items()))

    @classmethod
    def constant(cls, value: Rational) -> LaurentScalar:
        return cls(_normalize([(0, value)]))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Rational = 1) -> LaurentScalar:
        return cls(_normalize([(exponent, coefficient)]))

    @classmethod
    def from_ascending(cls, coeffs: Iterable[Rational], offset: int = 0) -> LaurentScalar:
        return cls(_normalize((offset + k, c) for k, c in enumerate(coeffs)))

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self.terms)

    @property
    def min_exponent(self) -> int:
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        return self.terms[-1][0]

    @property
    def is_monomial(self) -> bool:
        """True for the units c·q^e of the Laurent ring."""
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def ascending(self) -> list[Fraction]:
        """Dense coefficients from q^min_exponent upward."""
        low = self.min_exponent
        dense = [Fraction(0)] * (self.max_exponent - low + 1)
        for exponent, coeff in self.terms:
            dense[exponent - low] = coeff
        return dense

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self.terms[0][1] if self.terms else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: LaurentScalar | Rational) -> LaurentScalar:
        other = _coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        return LaurentScalar(_normalize(self.terms + other.terms))

    __radd__ = __add__

    def __neg__(self) -> LaurentScalar:
        return LaurentScalar(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentScalar | Rational) -> LaurentScalar:
        return self + (-_coerce(other))

    def __rsub__(self, other: Rational) -> LaurentScalar:
        return _coerce(other) - self

    def __mul__(self, other: LaurentScalar | Rational) -> LaurentScalar:
        other = _coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        if len(other.terms) == 1:
            (f, d), = other.terms
            return LaurentScalar(tuple((e + f, c * d) for e, c in self.terms))
        acc: dict[int, Fraction] = {}
        for e, c in self.terms:
            for f, d in other.terms:
                acc[e + f] = acc.get(e + f, Fraction(0)) + c * d
        return LaurentScalar(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __truediv__(self, other: LaurentScalar | Rational) -> LaurentScalar:
        return lp_exact_div(self, _coerce(other))

    def __pow__(self, exponent: int) -> LaurentScalar:
        if exponent < 0:
            if not self.is_monomial:
                raise NonDivisibleError(f"{self} is not a unit of the Laurent ring")
            (e, c), = self.terms
            return LaurentScalar.monomial(e * exponent, Fraction(1) / c ** -exponent)
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, q0: Rational) -> Fraction:
        if q0 == 0:
            raise ZeroDivisionScalarError("cannot evaluate a Laurent polynomial at q = 0")
        q0 = Fraction(q0)
        return sum((c * q0**e for e, c in self.terms), Fraction(0))

    def to_dict(self) -> dict[str, str]:
        """JSON encoding: exponent (string) -> "num/den" string."""
        return {str(e): str(c) for e, c in self.terms}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> LaurentScalar:
        return cls(_normalize((int(e), Fraction(str(c))) for e, c in data.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}·{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _coerce(value: LaurentScalar | Rational) -> LaurentScalar:
    if isinstance(value, LaurentScalar):
        return value
    return LaurentScalar.constant(value)


ZERO = LaurentScalar()
ONE = LaurentScalar.constant(1)
Q = LaurentScalar.monomial(1)
Q_INV = LaurentScalar.monomial(-1)


def q_power(exponent: int) -> LaurentScalar:
    return LaurentScalar.monomial(exponent)


def lp_add(x: LaurentScalar, y: LaurentScalar) -> LaurentScalar:
    return x + y


def lp_neg(x: LaurentScalar) -> LaurentScalar:
    return -x


def lp_mul(x: LaurentScalar, y: LaurentScalar) -> LaurentScalar:
    """
    >>> str(lp_mul(Q, Q_INV))
    '1'
    >>> str(lp_mul(ONE + Q, ONE - Q))
    '-q^2 + 1'
    """
    return x * y


def _divmod_descending(
    num: list[Fraction], den: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Long division of dense polynomials given highest coefficient first."""
    num = list(num)
    if len(num) < len(den):
        return [], num
    lead = den[0]
    quotient: list[Fraction] = []
    for k in range(len(num) - len(den) + 1):
        factor = num[k] / lead
        quotient.append(factor)
        if factor:
            for m, d in enumerate(den):
                num[k + m] -= factor * d
    return quotient, num[len(num) - len(den) + 1 :]


def lp_exact_div(x: LaurentScalar, y: LaurentScalar) -> LaurentScalar:
    """
    The z with y·z = x.

    >>> str(lp_exact_div(Q * Q - Q_INV * Q_INV, Q - Q_INV))
    'q + q^-1'
    >>> str(lp_exact_div(Q * Q + 1, Q))
    'q + q^-1'
    """
    if not y:
        raise ZeroDivisionScalarError("division by the zero Laurent polynomial")
    if not x:
        return ZERO
    if y.is_monomial:
        (f, d), = y.terms
        return LaurentScalar(tuple((e - f, c / d) for e, c in x.terms))
    shift = x.min_exponent - y.min_exponent
    quotient, remainder = _divmod_descending(x.ascending()[::-1], y.ascending()[::-1])
    if any(remainder) or not quotient:
        raise NonDivisibleError(f"({x}) is not divisible by ({y})")
    return LaurentScalar.from_ascending(quotient[::-1], offset=shift)


@pre(lambda x, q0: q0 != 0)
def lp_eval(x: LaurentScalar, q0: Rational) -> Fraction:
    """
    >>> lp_eval(Q + Q_INV, 2)
    Fraction(5, 2)
    >>> lp_eval(Q * Q + 1, Fraction(1, 2))
    Fraction(5, 4)
    """
    return x.evaluate(q0)


def _to_sympy(x: LaurentScalar) -> sympy.Poly:
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(x.ascending())]
    return sympy.Poly(coeffs, _Q, domain="QQ")


def _from_sympy(poly: sympy.Poly) -> LaurentScalar:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return LaurentScalar.from_ascending(coeffs)


@post(lambda result: bool(result))
def lp_gcd(x: LaurentScalar, y: LaurentScalar) -> LaurentScalar:
    """
    Monic gcd with nonzero constant term; units of the Laurent ring are dropped.

    >>> str(lp_gcd(Q * Q - 1, Q * Q + 2 * Q + 1))
    'q + 1'
    """
    if not x and not y:
        return ONE
    if not x:
        x, y = y, x
    if not y:
        return _monic(x)
    return _from_sympy(_to_sympy(x).gcd(_to_sympy(y)))


def _monic(x: LaurentScalar) -> LaurentScalar:
    lead = x.terms[-1][1]
    return LaurentScalar(tuple((e - x.min_exponent, c / lead) for e, c in x.terms))


@dataclass(frozen=True)
class LaurentFraction:
    """Element of the fraction field, kept in lowest terms with a monic denominator."""

    numerator: LaurentScalar
    denominator: LaurentScalar = ONE

    @classmethod
    def reduced(cls, numerator: LaurentScalar, denominator: LaurentScalar) -> LaurentFraction:
        if not denominator:
            raise ZeroDivisionScalarError("zero denominator")
        if not numerator:
            return cls(ZERO, ONE)
        if not denominator.is_monomial:
            g = lp_gcd(numerator, denominator)
            if g != ONE:
                numerator = lp_exact_div(numerator, g)
                denominator = lp_exact_div(denominator, g)
        unit = LaurentScalar.monomial(denominator.min_exponent, denominator.terms[-1][1])
        return cls(lp_exact_div(numerator, unit), lp_exact_div(denominator, unit))

    @classmethod
    def of(cls, value: LaurentScalar | Rational) -> LaurentFraction:
        return cls(_coerce(value), ONE)

    @property
    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def as_laurent(self) -> LaurentScalar:
        if not self.is_laurent:
            raise NonDivisibleError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def __add__(self, other: LaurentFraction) -> LaurentFraction:
        return LaurentFraction.reduced(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> LaurentFraction:
        return LaurentFraction(-self.numerator, self.denominator)

    def __sub__(self, other: LaurentFraction) -> LaurentFraction:
        return self + (-other)

    def __mul__(self, other: LaurentFraction) -> LaurentFraction:
        return LaurentFraction.reduced(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __truediv__(self, other: LaurentFraction) -> LaurentFraction:
        if not other:
            raise ZeroDivisionScalarError("division by the zero fraction")
        return LaurentFraction.reduced(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def evaluate(self, q0: Rational) -> Fraction:
        return self.numerator.evaluate(q0) / self.denominator.evaluate(q0)

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def to_dict(self) -> dict[str, Any]:
        if self.is_laurent:
            return self.numerator.to_dict()
        return {"num": self.numerator.to_dict(), "den": self.denominator.to_dict()}
