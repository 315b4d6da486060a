"""Exact Artin-Mazur zeta functions of sofic shifts.

``zeta(z) = prod_j det(I - z A_j) ** ((-1) ** j)`` over the signed subset
matrices of a right-resolving presentation, kept as a reduced ratio of integer
polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polynomial as P
from .errors import BudgetError, InputError, NumericalError
from .graph import LabelledGraph, det_identity_minus_z, mat_mul, trace
from .signed_subsets import DEFAULT_MAX_VERTICES, signed_subset_matrices

DEFAULT_MAX_N = 512


@dataclass(frozen=True)
class RationalFn:
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        for poly in (self.numerator, self.denominator):
            if not poly or poly[0] != 1:
                raise InputError("zeta numerator and denominator must have constant term 1")

    def to_dict(self) -> dict:
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

    @classmethod
    def from_dict(cls, d: dict) -> "RationalFn":
        return cls(tuple(d["numerator"]), tuple(d["denominator"]))

    def __call__(self, z):
        return P.evaluate(self.numerator, z) / P.evaluate(self.denominator, z)


def reduce_fraction(num, den) -> RationalFn:
    g = P.poly_gcd(num, den)
    if g[0] < 0:
        g = tuple(-c for c in g)
    return RationalFn(P.exact_divide(num, g), P.exact_divide(den, g))


def zeta_rational(g: LabelledGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> RationalFn:
    factors = [det_identity_minus_z(a) for a in signed_subset_matrices(g, max_vertices)]
    num = P.product(f for j, f in enumerate(factors, 1) if j % 2 == 0)
    den = P.product(f for j, f in enumerate(factors, 1) if j % 2 == 1)
    return reduce_fraction(num, den)


def _check_horizon(n: int, max_n: int) -> None:
    if n < 1:
        raise InputError("horizon must be a positive integer")
    if n > max_n:
        raise BudgetError(f"horizon {n} exceeds the cap {max_n}")


def periodic_point_counts(
    g: LabelledGraph, n: int, max_vertices: int = DEFAULT_MAX_VERTICES, max_n: int = DEFAULT_MAX_N
) -> list:
    """``[F(1), ..., F(n)]`` from ``F(k) = sum_j (-1)**(j+1) tr(A_j**k)``, by exact powering."""
    _check_horizon(n, max_n)
    counts = [0] * n
    for j, a in enumerate(signed_subset_matrices(g, max_vertices), 1):
        sign = 1 if j % 2 else -1
        power = a
        for k in range(n):
            counts[k] += sign * trace(power)
            if k + 1 < n:
                power = mat_mul(power, a)
    return counts


def power_sums(poly, n: int) -> list:
    """``[s_1, ..., s_n]`` with ``s_k = sum mu**k`` where ``poly = prod(1 - mu z)``.

    Newton's identities; exact integer recurrence since ``poly(0) == 1``.
    """
    if not poly or poly[0] != 1:
        raise NumericalError("power sums need a polynomial with constant term 1")
    a = list(poly) + [0] * max(0, n + 1 - len(poly))
    s = []
    for k in range(1, n + 1):
        s.append(-k * a[k] - sum(a[i] * s[k - i - 1] for i in range(1, min(k, len(poly)))))
    return s


def expand_zeta_series(zf: RationalFn, n: int) -> list:
    """``[F(1), ..., F(n)]`` from the coefficients of ``z zeta'(z) / zeta(z)``."""
    if n < 1:
        raise InputError("horizon must be a positive integer")
    return [q - p for p, q in zip(power_sums(zf.numerator, n), power_sums(zf.denominator, n))]


def taylor_coefficients(zf: RationalFn, n: int) -> list:
    """Coefficients ``c_0..c_n`` of ``zeta`` at 0, by exact division (``Q(0) == 1``)."""
    num = list(zf.numerator) + [0] * (n + 1)
    den = zf.denominator
    out = []
    for k in range(n + 1):
        c = num[k] - sum(den[i] * out[k - i] for i in range(1, min(k, len(den) - 1) + 1))
        out.append(c)
    return out
