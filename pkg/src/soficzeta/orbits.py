"""Closed-orbit counts, the prime orbit and Mertens' orbit counting functions,
and their predicted asymptotics.

Orbit counts grow like ``lambda**n``, so every quantity that mixes them with
powers of ``lambda`` is evaluated as ``exp(log(count) - n * log(lambda))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import polynomial as P
from .errors import AssumptionError, InputError, NumericalError
from .graph import LabelledGraph, adjacency_matrix, is_irreducible, period, scc_names, spectral_radius
from .signed_subsets import DEFAULT_MAX_VERTICES
from .zeta import RationalFn, expand_zeta_series, zeta_rational

EULER_GAMMA = 0.5772156649015329
POLE_ORDER = 1


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def orbit_counts(F) -> list:
    """Number of closed orbits of each length from periodic-point counts.

    ``F[k-1]`` is the number of points of period ``k``.
    """
    out = []
    for n in range(1, len(F) + 1):
        total = sum(mobius(n // d) * F[d - 1] for d in range(1, n + 1) if n % d == 0)
        if total % n:
            raise NumericalError(f"Moebius inversion gives a non-integer orbit count at n={n}")
        out.append(total // n)
    return out


def points_from_orbits(O, n: int) -> int:
    return sum(d * O[d - 1] for d in range(1, n + 1) if n % d == 0)


def _scaled(count: int, n: int, log_lam: float) -> float:
    """``count * lambda**(-n)`` without overflow."""
    if count == 0:
        return 0.0
    if count < 0:
        return -_scaled(-count, n, log_lam)
    return math.exp(math.log(count) - n * log_lam)


def prime_orbit_counting(O, N: int) -> int:
    return sum(O[:N])


def mertens_product(O, lam: float, N: int) -> float:
    """Natural log of ``prod_{|tau| <= N} (1 - lambda**-|tau|)``."""
    log_lam = math.log(lam)
    total = 0.0
    for n in range(1, N + 1):
        x = math.exp(-n * log_lam)
        ratio = -math.log1p(-x) / x if x > 0 else 1.0
        total -= _scaled(O[n - 1], n, log_lam) * ratio
    return total


def mertens_sum(O, lam: float, N: int) -> float:
    log_lam = math.log(lam)
    return math.fsum(_scaled(O[n - 1], n, log_lam) for n in range(1, N + 1))


def _log_excess(x: float) -> float:
    """``-log(1 - x) - x``, accurate for small ``x``."""
    if x < 1e-4:
        return x * x / 2 + x ** 3 / 3 + x ** 4 / 4
    return -math.log1p(-x) - x


def c_term(count: int, n: int, lam: float) -> float:
    """Contribution of the ``count`` orbits of length ``n`` to the constant C."""
    if count == 0:
        return 0.0
    x = math.exp(-n * math.log(lam))
    if x == 0:
        return 0.0
    return math.exp(math.log(count) + math.log(_log_excess(x)))


def c_constant(zf: RationalFn, lam: float, tol: float = 1e-9) -> float:
    """``sum over orbits tau of log(1/(1 - lambda**-|tau|)) - lambda**-|tau|``.

    Truncated once the tail bound ``K lambda**-(n+1) / (2 (1 - 1/lambda)**2)``
    drops below ``tol``, where ``K`` is twice the largest ``F(n) lambda**-n``
    seen so far (the terms are at most ``F(n) lambda**-2n / (2 (1 - 1/lambda))``).
    """
    if tol <= 0:
        raise InputError("tolerance must be positive")
    log_lam = math.log(lam)
    limit = int(10 * math.log(1 / tol) / log_lam) + 1
    horizon = 32
    total = 0.0
    n = 0
    while True:
        horizon = min(horizon, limit)
        F = expand_zeta_series(zf, horizon)
        O = orbit_counts(F)
        K = 2 * max(_scaled(f, k, log_lam) for k, f in enumerate(F, 1))
        while n < horizon:
            n += 1
            total += c_term(O[n - 1], n, lam)
            tail = K * math.exp(-(n + 1) * log_lam) / (2 * (1 - 1 / lam) ** 2)
            if tail < tol:
                return total
        if horizon >= limit:
            raise NumericalError(f"C did not converge within {limit} terms")
        horizon *= 2


def _near_zero(poly, z: float, rel: float = 1e-8) -> bool:
    scale = sum(abs(c) * abs(z) ** k for k, c in enumerate(poly))
    return abs(P.evaluate(poly, z)) <= rel * scale


def alpha_constant(zf: RationalFn, lam: float, p: int) -> float:
    """``lim_{z -> 1/lambda} (1 - lambda**p z**p) zeta(z)`` as ``-p lambda P(1/lambda) / Q'(1/lambda)``."""
    z0 = 1 / lam
    den = zf.denominator
    if not _near_zero(den, z0):
        raise AssumptionError("1/lambda is not a pole of the zeta function")
    dden = P.derivative(den)
    if _near_zero(dden, z0):
        raise AssumptionError("the pole at 1/lambda is not simple")
    alpha = -p * lam * P.evaluate(zf.numerator, z0) / P.evaluate(dden, z0)
    if alpha <= 0:
        raise AssumptionError(f"alpha = {alpha} is not positive")
    return alpha


def check_pole_structure(zf: RationalFn, lam: float, p: int, rel: float = 1e-6) -> None:
    """The poles within ``(1 + rel) / lambda`` must be exactly the ``p`` simple
    rotations of ``1/lambda`` by ``p``-th roots of unity."""
    den = zf.denominator
    roots = np.roots([float(c) for c in reversed(den)]) if len(den) > 1 else np.zeros(0)
    inner = [r for r in roots if abs(r) <= (1 + rel) / lam]
    expected = [np.exp(2j * np.pi * k / p) / lam for k in range(p)]
    matched = {min(range(len(inner)), key=lambda i: abs(inner[i] - e)) for e in expected} if inner else set()
    close = all(min(abs(r - e) for r in inner) <= rel / lam for e in expected) if inner else False
    if len(inner) != p or len(matched) != p or not close:
        raise AssumptionError(
            f"zeta poles on |z| = 1/lambda are {[complex(r) for r in inner]}, "
            f"expected {p} simple poles at the {p}-th roots of unity over lambda"
        )


@dataclass
class OrbitCensus:
    F: list
    O: list
    lam: float
    p: int
    alpha: float
    C: float
    m: int = POLE_ORDER
    euler_gamma: float = EULER_GAMMA

    @property
    def entropy(self) -> float:
        return math.log(self.lam)

    def rows(self) -> list:
        """Rows ``(n, F, O, pi, log_mertens_product, mertens_sum)``."""
        out = []
        for n in range(1, len(self.F) + 1):
            out.append((
                n,
                self.F[n - 1],
                self.O[n - 1],
                prime_orbit_counting(self.O, n),
                mertens_product(self.O, self.lam, n),
                mertens_sum(self.O, self.lam, n),
            ))
        return out

    def to_dict(self) -> dict:
        rows = self.rows()
        return {
            "F": list(self.F),
            "O": list(self.O),
            "pi": [r[3] for r in rows],
            "log_mertens_product": [r[4] for r in rows],
            "mertens_sum": [r[5] for r in rows],
            "lambda": self.lam,
            "entropy": self.entropy,
            "p": self.p,
            "m": self.m,
            "alpha": self.alpha,
            "C": self.C,
            "euler_gamma": self.euler_gamma,
        }


def _presentation_constants(g: LabelledGraph, max_vertices: int):
    adj = adjacency_matrix(g)
    if not is_irreducible(adj):
        raise AssumptionError(f"presentation is reducible; strongly connected components: {scc_names(g)}")
    lam = spectral_radius(adj)
    if lam <= 1 + 1e-9:
        raise AssumptionError(f"zero entropy: spectral radius {lam:.12g} is not > 1")
    return lam, period(adj), zeta_rational(g, max_vertices)


def orbit_census(
    g: LabelledGraph, max_n: int, tol: float = 1e-9, max_vertices: int = DEFAULT_MAX_VERTICES
) -> OrbitCensus:
    lam, p, zf = _presentation_constants(g, max_vertices)
    check_pole_structure(zf, lam, p)
    F = expand_zeta_series(zf, max_n)
    return OrbitCensus(F, orbit_counts(F), lam, p, alpha_constant(zf, lam, p), c_constant(zf, lam, tol))


@dataclass
class AsymptoticReport:
    N: int
    pi_value: int
    pi_predicted: float
    pi_ratio: float
    mertens_product_log: float
    product_predicted_log: float
    product_ratio: float
    mertens_sum: float
    sum_predicted: float
    sum_gap: float
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {k: v for k, v in self.__dict__.items() if k != "extras"}
        d.update(self.extras)
        return d


def asymptotic_report(
    g: LabelledGraph, N: int, tol: float = 1e-9, max_vertices: int = DEFAULT_MAX_VERTICES
) -> AsymptoticReport:
    """Compare the counting functions at ``N`` with their predicted asymptotics.

    The predictions use a simple pole (order 1) at each ``p``-th root of unity
    over ``lambda``, where ``p`` is the period of the presentation.
    """
    if N < 1:
        raise InputError("horizon must be a positive integer")
    lam, p, zf = _presentation_constants(g, max_vertices)
    check_pole_structure(zf, lam, p)
    alpha = alpha_constant(zf, lam, p)
    C = c_constant(zf, lam, tol)
    O = orbit_counts(expand_zeta_series(zf, N))
    log_lam = math.log(lam)
    q = N // p

    pi_value = prime_orbit_counting(O, N)
    pi_log_pred = math.log(p) + p * (q + 1) * log_lam - math.log(N) - math.log(lam ** p - 1)
    pi_ratio = math.exp(math.log(pi_value) - pi_log_pred) if pi_value else 0.0

    prod_log = mertens_product(O, lam, N)
    prod_log_pred = math.log(p) - EULER_GAMMA - math.log(alpha) - math.log(N)

    msum = mertens_sum(O, lam, N)
    sum_pred = (math.log(q) if q else -math.inf) + EULER_GAMMA + math.log(alpha) - C

    return AsymptoticReport(
        N=N,
        pi_value=pi_value,
        pi_predicted=math.exp(pi_log_pred) if pi_log_pred < 700 else math.inf,
        pi_ratio=pi_ratio,
        mertens_product_log=prod_log,
        product_predicted_log=prod_log_pred,
        product_ratio=math.exp(prod_log - prod_log_pred),
        mertens_sum=msum,
        sum_predicted=sum_pred,
        sum_gap=msum - sum_pred,
        extras={"lambda": lam, "p": p, "alpha": alpha, "C": C, "pi_predicted_log": pi_log_pred},
    )
