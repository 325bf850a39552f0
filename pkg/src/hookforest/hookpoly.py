"""Hook length polynomials summed over all forests of a type, and the
binary-tree identities they specialize to."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple

from .algebra import X, Polynomial, closed_hookp, closed_hookp2, poly_product
from .forest import DegreeSequence, enumerate_forests, flatten


def vertex_hook_poly(d: int, h: int) -> Polynomial:
    """``(((d-1) h + 1) x + 1 - h) / (d h)`` for a vertex of degree d, hook h."""
    if d < 1 or h < 1:
        raise ValueError(f"need d >= 1 and h >= 1, got d={d}, h={h}")
    return Polynomial.linear((d - 1) * h + 1, 1 - h).scale(Fraction(1, d * h))


def vertex_hook_poly2(d: int, h: int) -> Polynomial:
    """``((d + x) h - x) / (d h)``."""
    if d < 1 or h < 1:
        raise ValueError(f"need d >= 1 and h >= 1, got d={d}, h={h}")
    return Polynomial.linear(h - 1, d * h).scale(Fraction(1, d * h))


def _brute(r: DegreeSequence, factor: Callable[[int, int], Polynomial]) -> Polynomial:
    # forests sharing a (degree, hook) profile contribute identical products
    profiles: dict = {}
    for forest in enumerate_forests(r):
        flat = flatten(forest)
        key = tuple(sorted(zip(flat.degrees, flat.hooks)))
        profiles[key] = profiles.get(key, 0) + 1
    total = Polynomial()
    for key in sorted(profiles):
        total = total + poly_product(factor(d, h) for d, h in key).scale(profiles[key])
    return total


def brute_hookp(r: DegreeSequence) -> Polynomial:
    return _brute(r, vertex_hook_poly)


def brute_hookp2(r: DegreeSequence) -> Polynomial:
    return _brute(r, vertex_hook_poly2)


@dataclass(frozen=True)
class HookReport:
    r: DegreeSequence
    brute: Polynomial
    closed: Polynomial
    forest_count: int

    @property
    def equal(self) -> bool:
        return self.brute == self.closed

    def to_json(self) -> dict:
        return {
            "r": [str(c) for c in self.r.counts],
            "brute": self.brute.to_json(),
            "closed": self.closed.to_json(),
            "equal": self.equal,
            "count": str(self.forest_count),
        }


def verify_hookp(r: DegreeSequence) -> HookReport:
    return HookReport(r, brute_hookp(r), closed_hookp(r), len(enumerate_forests(r)))


def verify_hookp2(r: DegreeSequence) -> HookReport:
    return HookReport(r, brute_hookp2(r), closed_hookp2(r), len(enumerate_forests(r)))


def transformation_sides(r: DegreeSequence, t: Fraction) -> Tuple[Fraction, Fraction]:
    """Both sides of ``H2(t) = (-(1 + t))^n H(-1/(1 + t))`` for ``t != -1``."""
    t = Fraction(t)
    if t == -1:
        raise ValueError("t = -1 is excluded")
    lhs = brute_hookp2(r)(t)
    rhs = (-(1 + t)) ** r.n * brute_hookp(r)(Fraction(-1) / (1 + t))
    return lhs, rhs


def binary_type(n: int) -> DegreeSequence:
    """Type of complete binary trees with ``n`` internal vertices."""
    return DegreeSequence((n + 1, 0, n))


def postnikov_check(n: int) -> Tuple[Fraction, int, bool]:
    """Sum of ``n!/2^n prod (1 + 1/h_v)`` over complete binary trees against
    ``(n+1)^(n-1)``."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = Fraction(0)
    for tree in enumerate_forests(binary_type(n)):
        term = Fraction(math.factorial(n), 2 ** n)
        for h in flatten(tree).hooks:
            term *= 1 + Fraction(1, h)
        lhs += term
    rhs = (n + 1) ** (n - 1)
    return lhs, rhs, lhs == rhs


def lascoux_check(n: int) -> Tuple[Polynomial, Polynomial, bool]:
    """Sum of ``prod (x + 1/h_v)`` over binary trees against
    ``prod_{i<n} ((n+1+i) x + n+1-i) / (n+1)!``."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = Polynomial()
    for tree in enumerate_forests(binary_type(n)):
        lhs = lhs + poly_product(X + Fraction(1, h) for h in flatten(tree).hooks)
    rhs = poly_product(
        Polynomial.linear(n + 1 + i, n + 1 - i) for i in range(n)
    ).scale(Fraction(1, math.factorial(n + 1)))
    return lhs, rhs, lhs == rhs
