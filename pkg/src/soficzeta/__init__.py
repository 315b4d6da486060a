"""Zeta functions and orbit growth of sofic shifts."""

from .errors import AssumptionError, BudgetError, InputError, NumericalError, SoficError
from .graph import LabelledGraph, make_graph, parse_labelled_graph
from .orbits import asymptotic_report, orbit_census
from .presentation import minimal_presentation, minimize_right_resolving, subset_determinize
from .signed_subsets import spectral_gap_report
from .zeta import RationalFn, expand_zeta_series, periodic_point_counts, zeta_rational

__all__ = [
    "AssumptionError",
    "BudgetError",
    "InputError",
    "LabelledGraph",
    "NumericalError",
    "RationalFn",
    "SoficError",
    "asymptotic_report",
    "expand_zeta_series",
    "make_graph",
    "minimal_presentation",
    "minimize_right_resolving",
    "orbit_census",
    "parse_labelled_graph",
    "periodic_point_counts",
    "spectral_gap_report",
    "subset_determinize",
    "zeta_rational",
]
