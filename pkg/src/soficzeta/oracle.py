"""Brute-force ground truth by word enumeration.

Nothing here uses matrices, determinants or traces; periodic points are found
from the relation "a path labelled w runs from u to v".
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BudgetError, InputError
from .graph import (
    LabelledGraph,
    adjacency_matrix,
    is_irreducible,
    make_graph,
    spectral_radius,
    validate_essential,
)

WORD_BUDGET = 10 ** 7


def _letter_relation(g: LabelledGraph, a: str) -> frozenset:
    return frozenset((e.src, e.dst) for e in g.edges if e.label == a)


def _compose(r: frozenset, s: frozenset) -> frozenset:
    out = set()
    for u, v in r:
        for x, y in s:
            if v == x:
                out.add((u, y))
    return frozenset(out)


def word_path_relation(g: LabelledGraph, w) -> frozenset:
    """Pairs ``(u, v)`` such that some path labelled ``w`` runs from ``u`` to ``v``."""
    rel = frozenset((v, v) for v in range(g.order))
    for a in w:
        rel = _compose(rel, _letter_relation(g, a))
        if not rel:
            break
    return rel


def relation_has_cycle(rel: frozenset, order: int) -> bool:
    """Whether the digraph of ``rel`` on ``order`` vertices has a directed cycle.

    A walk of length ``order`` must revisit a vertex, so it is enough to check
    that the ``order``-fold composition is non-empty.
    """
    power = rel
    for _ in range(order - 1):
        if not power:
            return False
        power = _compose(power, rel)
    return bool(power)


def word_is_periodic_point(g: LabelledGraph, w) -> bool:
    """Whether the periodic point ``...www...`` lies in the shift."""
    if not w:
        raise InputError("word must be non-empty")
    return relation_has_cycle(word_path_relation(g, w), g.order)


def _check_budget(g: LabelledGraph, n: int) -> None:
    if len(g.alphabet) ** n > WORD_BUDGET:
        raise BudgetError(
            f"enumerating {len(g.alphabet)}**{n} words exceeds the budget of {WORD_BUDGET}"
        )


def _words_with_paths(g: LabelledGraph, n: int):
    """All words of length ``n`` labelling at least one path, with their relations.

    Words are produced in lexicographic order of the sorted alphabet.
    """
    letters = [(a, _letter_relation(g, a)) for a in g.alphabet]
    stack = [((), frozenset((v, v) for v in range(g.order)))]
    while stack:
        word, rel = stack.pop()
        if len(word) == n:
            yield word, rel
            continue
        for a, r in reversed(letters):
            nxt = _compose(rel, r)
            if nxt:
                stack.append((word + (a,), nxt))


def brute_force_periodic_counts(g: LabelledGraph, N: int) -> list:
    """``[F(1), ..., F(N)]`` by testing every word of each length."""
    _check_budget(g, N)
    return [
        sum(1 for _, rel in _words_with_paths(g, n) if relation_has_cycle(rel, g.order))
        for n in range(1, N + 1)
    ]


@dataclass(frozen=True, order=True)
class Necklace:
    """A closed orbit, stored as the least rotation of a primitive word."""

    word: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if all(len(a) == 1 for a in self.word):
            return "".join(self.word)
        return " ".join(self.word)


def least_rotation(w: tuple) -> tuple:
    return min(w[i:] + w[:i] for i in range(len(w)))


def is_primitive(w: tuple) -> bool:
    n = len(w)
    return all(w != w[:d] * (n // d) for d in range(1, n) if n % d == 0)


def enumerate_orbit_necklaces(g: LabelledGraph, n: int) -> set:
    """The closed orbits of length exactly ``n``."""
    _check_budget(g, n)
    out = set()
    for w, rel in _words_with_paths(g, n):
        if w == least_rotation(w) and is_primitive(w) and relation_has_cycle(rel, g.order):
            out.add(Necklace(w))
    return out


def brute_force_language(g: LabelledGraph, L: int) -> set:
    """Labels of all paths of length 1..L, as strings when labels are single characters."""
    if L <= 0:
        return set()
    _check_budget(g, L)
    words = set()
    for n in range(1, L + 1):
        for w, _ in _words_with_paths(g, n):
            words.add(w)
    if all(len(a) == 1 for a in g.alphabet):
        return {"".join(w) for w in words}
    return words


def generate_random_presentation(
    seed: int, num_vertices: int, alphabet_size: int, max_tries: int = 10_000
) -> LabelledGraph:
    """A seeded random irreducible right-resolving graph with spectral radius > 1.

    Each (vertex, letter) pair gets at most one target, drawn with
    probability 0.6; graphs failing the checks are redrawn.
    """
    if not (1 <= num_vertices <= 4 and 1 <= alphabet_size <= 3):
        raise InputError("random presentations are limited to 4 vertices and 3 letters")
    if alphabet_size == 1:
        raise InputError("a right-resolving graph over one letter has spectral radius at most 1")
    rng = random.Random(seed)
    names = [str(v + 1) for v in range(num_vertices)]
    letters = "abc"[:alphabet_size]
    for _ in range(max_tries):
        triples = [
            (names[v], names[rng.randrange(num_vertices)], a)
            for v in range(num_vertices)
            for a in letters
            if rng.random() < 0.6
        ]
        if not triples:
            continue
        g = make_graph(names, triples)
        try:
            validate_essential(g)
        except InputError:
            continue
        adj = adjacency_matrix(g)
        if is_irreducible(adj) and spectral_radius(adj) > 1 + 1e-9:
            return g
    raise BudgetError(f"no valid random presentation after {max_tries} draws (seed {seed})")
