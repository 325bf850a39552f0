"""Exact univariate polynomials over the rationals, multinomials, and the
closed-form hook length polynomials.

Rationals are :class:`fractions.Fraction`.  Polynomials store coefficients
densely, constant term first, with no trailing zeros.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .forest import DegreeSequence

Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable polynomial in ``x`` with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "Polynomial":
        """``slope * x + intercept``."""
        return cls((intercept, slope))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"({abs(c)})" if c.denominator != 1 and mono else str(abs(c))
                body = body + ("*" + mono if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(c * a for a in self.coeffs)

    def __call__(self, t: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    evaluate = __call__

    def to_json(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, obj: Sequence[str]) -> "Polynomial":
        return cls(Fraction(s) for s in obj)


X = Polynomial((0, 1))


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Rational)):
        return Polynomial.constant(p)
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


# module-level spellings of the ring operations
def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c: Scalar) -> Polynomial:
    return p.scale(c)


def poly_eval(p: Polynomial, t: Scalar) -> Fraction:
    return p(t)


def poly_product(factors: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial.constant(1)
    for f in factors:
        out = out * f
    return out


def multinomial(top: int, parts: Sequence[int]) -> int:
    """``top! / prod(p! for p in parts)``."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != top:
        raise ValueError(f"parts {list(parts)} do not sum to {top}")
    out = 1
    acc = 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    return out


def _internal_factorials(r: DegreeSequence) -> int:
    return math.prod(math.factorial(c) for c in r.counts[1:])


def closed_hookp(r: DegreeSequence) -> Polynomial:
    """``(ell/r0) * (r0 x)(r0 x - 1)...(r0 x - n + 1) / prod_{d>=1} r_d!``."""
    if r.r0 < 1:
        raise ValueError(f"type {r} has no leaves")
    falling = poly_product(Polynomial.linear(r.r0, -i) for i in range(r.n))
    return falling.scale(Fraction(r.ell, r.r0 * _internal_factorials(r)))


def shifted_product(r0: int, n: int, step: Polynomial) -> Polynomial:
    """``prod_{i=1}^{n-1} (r0 + i * step)`` for ``n >= 1``.

    For ``n = 0`` the range runs backwards and the product is read as the
    reciprocal of the ``i = 0`` factor, ``1/r0``; this keeps
    ``prod_{i=1}^{n-1} = prod_{i=0}^{n-1} / r0`` valid for every ``n``.
    """
    if n == 0:
        return Polynomial.constant(Fraction(1, r0))
    return poly_product(step.scale(i) + r0 for i in range(1, n))


def closed_hookp2(r: DegreeSequence) -> Polynomial:
    """``ell / prod_{d>=1} r_d! * prod_{i=1}^{n-1} (r0 + i(1 + x))``."""
    prod = shifted_product(r.r0, r.n, X + 1)
    return prod.scale(Fraction(r.ell, _internal_factorials(r)))


def binomial_at(r: DegreeSequence, k: int) -> Fraction:
    """``(ell/r0) * multinomial(r0 k; r0 k - n, r_1, r_2, ...)`` by integers.

    An independent route to ``closed_hookp(r)(k)`` for ``r0 k >= n``.
    """
    top = r.r0 * k
    parts = [top - r.n] + list(r.counts[1:])
    return Fraction(r.ell, r.r0) * multinomial(top, parts)

