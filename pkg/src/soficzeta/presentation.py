"""Right-resolving and minimal right-resolving presentations."""

from __future__ import annotations

from collections import deque

from .errors import AssumptionError, InputError
from .graph import (
    Edge,
    LabelledGraph,
    adjacency_matrix,
    is_irreducible,
    is_right_resolving,
    scc_names,
    transitions,
)


def essential_part(g: LabelledGraph) -> LabelledGraph:
    """Iteratively delete sources and sinks."""
    alive = set(range(g.order))
    edges = list(g.edges)
    while True:
        has_in = {e.dst for e in edges}
        has_out = {e.src for e in edges}
        keep = alive & has_in & has_out
        if keep == alive:
            break
        alive = keep
        edges = [e for e in edges if e.src in alive and e.dst in alive]
    order = sorted(alive)
    index = {v: i for i, v in enumerate(order)}
    return LabelledGraph(
        tuple(g.vertices[v] for v in order),
        tuple(Edge(index[e.src], index[e.dst], e.label) for e in edges),
    )


def _subset_name(g: LabelledGraph, subset) -> str:
    if len(subset) == 1:
        return g.vertices[subset[0]]
    return "{" + ",".join(g.vertices[v] for v in subset) + "}"


def subset_determinize(g: LabelledGraph) -> LabelledGraph:
    """Right-resolving presentation of the same shift by the subset construction.

    States are the vertex sets reachable from the singletons; a singleton keeps
    its original vertex name.  The result is trimmed to its essential part, so
    a right-resolving input comes back unchanged up to vertex order.
    """
    alphabet = g.alphabet
    start = [(v,) for v in range(g.order)]
    index = {s: i for i, s in enumerate(start)}
    states = list(start)
    edges = []
    queue = deque(start)
    while queue:
        s = queue.popleft()
        for a in alphabet:
            image = tuple(sorted({e.dst for e in g.edges if e.src in s and e.label == a}))
            if not image:
                continue
            if image not in index:
                index[image] = len(states)
                states.append(image)
                queue.append(image)
            edges.append(Edge(index[s], index[image], a))
    det = LabelledGraph(tuple(_subset_name(g, s) for s in states), tuple(edges))
    out = essential_part(det)
    if not out.vertices:
        raise AssumptionError("determinized presentation is empty after trimming")
    return out


def follower_partition(g: LabelledGraph) -> list:
    """Blocks of follower-equivalent vertices of a right-resolving graph.

    Moore refinement: start from the sets of defined labels and split on the
    blocks of successors until stable.  Blocks are sorted by smallest member.
    """
    delta = transitions(g)
    alphabet = g.alphabet
    block = [tuple(a for a in alphabet if (v, a) in delta) for v in range(g.order)]
    for _ in range(g.order + 1):
        ids = {sig: i for i, sig in enumerate(sorted(set(block), key=block.index))}
        cls = [ids[b] for b in block]
        sig = [
            (cls[v],) + tuple(cls[delta[v, a]] if (v, a) in delta else None for a in alphabet)
            for v in range(g.order)
        ]
        if len(set(sig)) == len(set(cls)):
            break
        block = sig
    groups = {}
    for v in range(g.order):
        groups.setdefault(cls[v], []).append(v)
    return sorted(groups.values())


def is_follower_separated(g: LabelledGraph) -> bool:
    return all(len(b) == 1 for b in follower_partition(g))


def minimize_right_resolving(g: LabelledGraph) -> LabelledGraph:
    """Merge follower-equivalent states of a right-resolving graph.

    The quotient must be irreducible: an irreducible follower-separated
    right-resolving graph is the minimal right-resolving presentation.  The
    input itself may carry transient states (e.g. a redundant start state) as
    long as they merge into the irreducible core.  Merged vertices are named
    by joining member names with ``+``.
    """
    if not is_right_resolving(g):
        raise AssumptionError("minimization requires a right-resolving graph")
    blocks = follower_partition(g)
    of = {v: i for i, b in enumerate(blocks) for v in b}
    edges = []
    seen = set()
    for e in g.edges:
        key = (of[e.src], e.label)
        if key not in seen:
            seen.add(key)
            edges.append(Edge(of[e.src], of[e.dst], e.label))
    names = tuple("+".join(g.vertices[v] for v in b) for b in blocks)
    out = LabelledGraph(names, tuple(sorted(edges)))
    if not is_irreducible(adjacency_matrix(out)):
        raise AssumptionError(
            "minimization needs a presentation of an irreducible shift; the merged graph "
            f"has strongly connected components {scc_names(out)} (input components: {scc_names(g)})"
        )
    return out


def minimal_presentation(g: LabelledGraph) -> LabelledGraph:
    """Determinize when needed, then minimize."""
    if not is_right_resolving(g):
        g = subset_determinize(g)
    return minimize_right_resolving(g)


def find_synchronizing_word(g: LabelledGraph) -> list:
    """A word whose paths all end at one vertex.

    Greedy: from the current image (initially all of ``V``), breadth-first
    search over non-empty subset images for the shortest word that shrinks it,
    append that word, and repeat until a single vertex remains.  Images are
    restricted to vertices where the whole word is defined, so for a
    right-resolving graph the image of ``S`` under ``a`` is ``{v(a) : v in S}``
    over the vertices where ``v(a)`` exists.
    """
    delta = transitions(g)
    alphabet = g.alphabet

    def step(subset, a):
        return tuple(sorted({delta[v, a] for v in subset if (v, a) in delta}))

    current = tuple(range(g.order))
    word = []
    while len(current) > 1:
        parent = {current: None}
        queue = deque([current])
        found = None
        while queue and found is None:
            s = queue.popleft()
            for a in alphabet:
                t = step(s, a)
                if not t or t in parent:
                    continue
                parent[t] = (s, a)
                if len(t) < len(current):
                    found = t
                    break
                queue.append(t)
        if found is None:
            raise AssumptionError("no synchronizing word: graph is not follower-separated/irreducible")
        piece = []
        t = found
        while parent[t] is not None:
            t, a = parent[t]
            piece.append(a)
        word.extend(reversed(piece))
        current = found
    return word


def canonical_form(g: LabelledGraph) -> tuple:
    """Label-preserving isomorphism invariant of a right-resolving irreducible graph.

    BFS renumbering from each start vertex, following labels in sorted order;
    the lexicographically least encoding wins.
    """
    delta = transitions(g)
    alphabet = g.alphabet
    best = None
    for start in range(g.order):
        number = {start: 0}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for a in alphabet:
                if (v, a) in delta and delta[v, a] not in number:
                    number[delta[v, a]] = len(number)
                    queue.append(delta[v, a])
        if len(number) != g.order:
            continue
        code = tuple(sorted((number[e.src], e.label, number[e.dst]) for e in g.edges))
        if best is None or code < best:
            best = code
    if best is None:
        raise InputError("canonical form needs a vertex reaching every other vertex")
    return (g.order, best)


def is_isomorphic(g: LabelledGraph, h: LabelledGraph) -> bool:
    return canonical_form(g) == canonical_form(h)
