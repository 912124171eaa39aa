"""Shared oracles and generators for the test suite.

The oracles here are deliberately independent of the canonical-form
machinery they check: equality via dense cross-multiplication, and
divisibility certificates via evaluation at points on a form's zero set.
"""

from __future__ import annotations

import random
from fractions import Fraction

from mouldcalc.algebra import LinearForm, Polynomial, RationalFunction
from mouldcalc.verify import random_ari_mould, random_gari_mould

__all__ = [
    "den_polynomial",
    "cross_equal",
    "poly_eval",
    "form_eval",
    "random_ari_mould",
    "random_gari_mould",
    "random_rf",
]


def den_polynomial(r: RationalFunction) -> Polynomial:
    """Expand the denominator multiset into a dense polynomial."""
    out = Polynomial.one()
    for form, mult in r.denominator:
        for _ in range(mult):
            out = out.mul_linear(form)
    return out


def cross_equal(f: RationalFunction, g: RationalFunction) -> bool:
    """Equality by cross multiplication, ignoring canonical forms."""
    lhs = f.numerator * den_polynomial(g)
    rhs = g.numerator * den_polynomial(f)
    a = f.scalar.numerator * g.scalar.denominator
    b = g.scalar.numerator * f.scalar.denominator
    return (a * lhs) == (b * rhs)


def poly_eval(p: Polynomial, values: list[Fraction]) -> Fraction:
    total = Fraction(0)
    for mono, c in p.terms.items():
        term = Fraction(c)
        for i, e in enumerate(mono):
            term *= values[i] ** e
        total += term
    return total


def form_eval(f: LinearForm, values: list[Fraction]) -> Fraction:
    return sum((Fraction(c) * values[i] for i, c in enumerate(f.coeffs)), Fraction(0))


def random_rf(rng: random.Random, nvars: int = 3) -> RationalFunction:
    """Small random rational function with linear-form denominators."""
    terms: dict = {}
    for _ in range(rng.randint(1, 3)):
        mono = [0] * nvars
        for _ in range(rng.randint(0, 2)):
            mono[rng.randrange(nvars)] += 1
        while mono and mono[-1] == 0:
            mono.pop()
        c = rng.randint(-4, 4)
        if c:
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + c
    num = Polynomial.from_dict(terms)
    den = []
    for _ in range(rng.randint(0, 2)):
        coeffs = [rng.randint(-2, 2) for _ in range(nvars)]
        if any(coeffs):
            den.append((LinearForm(coeffs), rng.randint(1, 2)))
    scalar = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    return RationalFunction.make(scalar, num, den)
