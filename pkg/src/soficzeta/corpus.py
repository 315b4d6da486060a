"""Hand-built presentations used in tests, docs and the demo files."""

from __future__ import annotations

from .graph import LabelledGraph, make_graph
from .oracle import generate_random_presentation


def even_shift() -> LabelledGraph:
    return make_graph(["1", "2"], [("1", "1", "1"), ("1", "2", "0"), ("2", "1", "0")])


def golden_mean() -> LabelledGraph:
    return make_graph(["1", "2"], [("1", "1", "a"), ("1", "2", "b"), ("2", "1", "a")])


def period_two() -> LabelledGraph:
    """A sofic graph of period 2 whose shift has a fixed point."""
    return make_graph(["1", "2"], [("1", "2", "a"), ("1", "2", "b"), ("2", "1", "a")])


def redundant_even_shift() -> LabelledGraph:
    """A 3-state right-resolving presentation of the even shift (A and C merge)."""
    return make_graph(
        ["A", "B", "C"],
        [("A", "A", "1"), ("A", "B", "0"), ("B", "C", "0"), ("C", "C", "1"), ("C", "B", "0")],
    )


def full_shift(k: int = 2) -> LabelledGraph:
    return make_graph(["1"], [("1", "1", chr(ord("a") + i)) for i in range(k)])


def hand_graphs() -> dict:
    return {
        "even": even_shift(),
        "golden": golden_mean(),
        "period2": period_two(),
        "redundant_even": redundant_even_shift(),
        "full2": full_shift(2),
    }


def random_corpus(count: int = 24, seed: int = 2024) -> list:
    """Seeded random irreducible right-resolving graphs, 1 to 4 vertices and 2 to 3 letters."""
    out = []
    for i in range(count):
        out.append(generate_random_presentation(seed + i, 1 + i % 4, 2 + (i // 4) % 2))
    return out
