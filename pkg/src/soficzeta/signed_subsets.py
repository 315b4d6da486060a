"""Signed subset graphs and the spectral gap between them and the base graph.

For a right-resolving graph with vertices ``0..S-1`` and ``1 <= j <= S``, the
subset graph on ``j``-element vertex sets has an edge ``s -> t`` labelled ``a``
whenever every vertex of ``s`` has an outgoing ``a``-edge, the targets are
pairwise distinct, and ``t`` is the set of those targets.  The edge is signed
by the parity of the target sequence relative to sorted order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import AssumptionError, BudgetError, InputError
from .graph import (
    LabelledGraph,
    adjacency_matrix,
    det_identity_minus_z,
    is_irreducible,
    nonnegative_spectral_radius,
    period,
    spectral_radius,
    transitions,
)

DEFAULT_MAX_VERTICES = 16
GAP_MARGIN = 1e-9


@dataclass(frozen=True)
class SignedEdge:
    src: int
    dst: int
    label: str
    sign: int


@dataclass(frozen=True)
class SignedLabelledGraph:
    j: int
    subset_vertices: tuple  # lexicographically ordered j-tuples of vertex indices
    edges: tuple


def permutation_sign(seq) -> int:
    """+1 for an even number of inversions, -1 for odd."""
    inversions = sum(1 for i in range(len(seq)) for k in range(i + 1, len(seq)) if seq[i] > seq[k])
    return -1 if inversions % 2 else 1


def check_subset_guard(g: LabelledGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> None:
    if g.order > max_vertices:
        raise BudgetError(
            f"graph has {g.order} vertices; subset matrices need 2**{g.order} states "
            f"(limit {max_vertices}, raise with --max-vertices)"
        )


def build_signed_subset_graph(g: LabelledGraph, j: int) -> SignedLabelledGraph:
    delta = transitions(g)
    if not 1 <= j <= g.order:
        raise InputError(f"subset size j={j} outside 1..{g.order}")
    subsets = list(combinations(range(g.order), j))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for s in subsets:
        for a in g.alphabet:
            if not all((v, a) in delta for v in s):
                continue
            image = [delta[v, a] for v in s]
            if len(set(image)) < j:
                continue
            edges.append(SignedEdge(index[s], index[tuple(sorted(image))], a, permutation_sign(image)))
    return SignedLabelledGraph(j, tuple(subsets), tuple(edges))


def signed_subset_matrix(sg: SignedLabelledGraph):
    n = len(sg.subset_vertices)
    rows = [[0] * n for _ in range(n)]
    for e in sg.edges:
        rows[e.src][e.dst] += e.sign
    return tuple(tuple(r) for r in rows)


def unsigned_subset_matrix(sg: SignedLabelledGraph):
    n = len(sg.subset_vertices)
    rows = [[0] * n for _ in range(n)]
    for e in sg.edges:
        rows[e.src][e.dst] += 1
    return tuple(tuple(r) for r in rows)


def signed_subset_matrices(g: LabelledGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list:
    """``[A_1, ..., A_S]`` for a right-resolving graph."""
    check_subset_guard(g, max_vertices)
    return [signed_subset_matrix(build_signed_subset_graph(g, j)) for j in range(1, g.order + 1)]


def inverse_roots(poly) -> np.ndarray:
    """The non-zero ``mu`` with ``poly(z) = prod(1 - mu z)``, for ``poly(0) == 1``."""
    if len(poly) <= 1:
        return np.zeros(0, dtype=complex)
    return np.roots([float(c) for c in poly]).astype(complex)


@dataclass
class SpectralGapReport:
    lam: float
    rho_tilde: dict = field(default_factory=dict)  # j -> spectral radius of the unsigned matrix
    R: float = math.inf
    pole_positions: list = field(default_factory=list)
    passed: bool = False

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "rho_tilde": {str(j): r for j, r in sorted(self.rho_tilde.items())},
            "R": None if math.isinf(self.R) else self.R,
            "pole_positions": [[z.real, z.imag] for z in self.pole_positions],
            "passed": self.passed,
        }


def spectral_gap_report(g: LabelledGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> SpectralGapReport:
    check_subset_guard(g, max_vertices)
    adj = adjacency_matrix(g)
    if not is_irreducible(adj):
        raise AssumptionError("spectral gap report requires an irreducible presentation")
    lam = spectral_radius(adj)
    if lam <= 1 + GAP_MARGIN:
        raise AssumptionError(f"zero entropy: spectral radius {lam} is not > 1")
    p = period(adj)
    report = SpectralGapReport(lam=lam)
    report.pole_positions = [cmath.exp(-2j * math.pi * k / p) / lam for k in range(p)]
    sub_leading = 0.0
    for j in range(1, g.order + 1):
        sg = build_signed_subset_graph(g, j)
        if j >= 2:
            report.rho_tilde[j] = nonnegative_spectral_radius(unsigned_subset_matrix(sg))
        mus = np.abs(inverse_roots(det_identity_minus_z(signed_subset_matrix(sg))))
        below = mus[mus < lam * (1 - GAP_MARGIN)]
        if below.size:
            sub_leading = max(sub_leading, float(below.max()))
    report.R = lam / sub_leading if sub_leading > 0 else math.inf
    report.passed = all(r < lam - GAP_MARGIN for r in report.rho_tilde.values())
    return report
