"""Exact integer polynomials.

A polynomial is a tuple of Python ints indexed by degree, with trailing zeros
trimmed; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = tuple  # tuple[int, ...], coefficient index = degree


def trim(coeffs: Sequence) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p: Sequence) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> tuple:
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def mul(p: Sequence, q: Sequence) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def product(polys) -> tuple:
    out = (1,)
    for p in polys:
        out = mul(out, p)
    return out


def derivative(p: Sequence) -> tuple:
    return trim(k * c for k, c in enumerate(p) if k > 0)


def reverse(p: Sequence, n: int | None = None) -> tuple:
    """Coefficients of ``z**n * p(1/z)``; ``n`` defaults to ``len(p) - 1``."""
    p = list(trim(p))
    if n is None:
        n = len(p) - 1
    p = p + [0] * (n + 1 - len(p))
    return trim(reversed(p[: n + 1]))


def evaluate(p: Sequence, x):
    """Horner evaluation; works for int, Fraction, float and complex ``x``."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content(p: Sequence) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _divmod_rational(p: Sequence, q: Sequence) -> tuple[list, list]:
    p = [Fraction(c) for c in trim(p)]
    q = [Fraction(c) for c in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        factor = p[-1] / lead
        quot[shift] = factor
        for i, c in enumerate(q):
            p[i + shift] -= factor * c
        while p and p[-1] == 0:
            p.pop()
    return quot, p


def _primitive(coeffs: Sequence[Fraction]) -> tuple:
    """Scale rational coefficients to a primitive integer polynomial."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = content(ints)
    return trim(c // g for c in ints) if g else ()


def poly_gcd(p: Sequence, q: Sequence) -> tuple:
    """Greatest common divisor over the rationals, as a primitive integer polynomial.

    The sign is fixed so that the lowest non-zero coefficient is positive.
    """
    a, b = trim(p), trim(q)
    while b:
        _, r = _divmod_rational(a, b)
        a, b = b, _primitive(r) if r else ()
    if not a:
        return ()
    g = _primitive([Fraction(c) for c in a])
    low = next(c for c in g if c)
    return tuple(-c for c in g) if low < 0 else g


def exact_divide(p: Sequence, q: Sequence) -> tuple:
    """Quotient ``p / q`` when it is an integer polynomial; raises otherwise."""
    quot, rem = _divmod_rational(p, q)
    if rem or any(c.denominator != 1 for c in quot):
        raise ArithmeticError("polynomial division is not exact over the integers")
    return trim(int(c) for c in quot)
