"""Labelled graphs and the exact linear algebra built on them.

Matrices are tuples of row tuples of Python ints, never floats.  Polynomials
follow :mod:`soficzeta.polynomial` (tuples indexed by degree).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

from . import polynomial as P
from .errors import AssumptionError, InputError, NumericalError

Matrix = tuple  # tuple[tuple[int, ...], ...]


class Edge(NamedTuple):
    src: int
    dst: int
    label: str


@dataclass(frozen=True)
class LabelledGraph:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InputError("duplicate vertex name")
        for e in self.edges:
            if not (0 <= e.src < n and 0 <= e.dst < n):
                raise InputError(f"edge {e} references a vertex index out of range")
            if not isinstance(e.label, str) or not e.label:
                raise InputError(f"edge {e} has an empty or non-string label")

    @property
    def alphabet(self) -> tuple:
        return tuple(sorted({e.label for e in self.edges}))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def out_edges(self, v: int):
        return [e for e in self.edges if e.src == v]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"from": self.vertices[e.src], "to": self.vertices[e.dst], "label": e.label}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def make_graph(vertices: Sequence[str], edges: Sequence[tuple]) -> LabelledGraph:
    """Build a graph from vertex names and ``(from_name, to_name, label)`` triples."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise InputError("duplicate vertex name")
    out = []
    seen = set()
    for src, dst, label in edges:
        for name in (src, dst):
            if name not in index:
                raise InputError(f"edge references unknown vertex {name!r}")
        key = (src, dst, label)
        if key in seen:
            raise InputError(f"duplicate edge {src!r} -> {dst!r} labelled {label!r}")
        seen.add(key)
        out.append(Edge(index[src], index[dst], label))
    return LabelledGraph(tuple(vertices), tuple(out))


def parse_labelled_graph(text: str) -> LabelledGraph:
    """Parse the JSON graph format ``{"vertices": [...], "edges": [{"from", "to", "label"}]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed graph document: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("vertices"), list) \
            or not isinstance(doc.get("edges"), list):
        raise InputError("graph document must be an object with 'vertices' and 'edges' arrays")
    vertices = doc["vertices"]
    if not vertices or not all(isinstance(v, str) for v in vertices):
        raise InputError("'vertices' must be a non-empty array of strings")
    if not doc["edges"]:
        raise InputError("graph has no edges")
    triples = []
    for e in doc["edges"]:
        if not isinstance(e, dict) or not all(isinstance(e.get(k), str) for k in ("from", "to", "label")):
            raise InputError(f"malformed edge record: {e!r}")
        triples.append((e["from"], e["to"], e["label"]))
    return make_graph(vertices, triples)


def validate_essential(g: LabelledGraph) -> None:
    """Raise :class:`InputError` unless every vertex has in- and out-edges."""
    outdeg = [0] * g.order
    indeg = [0] * g.order
    for e in g.edges:
        outdeg[e.src] += 1
        indeg[e.dst] += 1
    for v, name in enumerate(g.vertices):
        if indeg[v] == 0:
            raise InputError(f"vertex {name!r} is a source (no incoming edges)")
        if outdeg[v] == 0:
            raise InputError(f"vertex {name!r} is a sink (no outgoing edges)")


def is_right_resolving(g: LabelledGraph) -> bool:
    seen = set()
    for e in g.edges:
        if (e.src, e.label) in seen:
            return False
        seen.add((e.src, e.label))
    return True


def transitions(g: LabelledGraph) -> dict:
    """The partial map ``(vertex, label) -> vertex`` of a right-resolving graph."""
    if not is_right_resolving(g):
        raise AssumptionError("graph is not right-resolving")
    return {(e.src, e.label): e.dst for e in g.edges}


def adjacency_matrix(g: LabelledGraph) -> Matrix:
    rows = [[0] * g.order for _ in range(g.order)]
    for e in g.edges:
        rows[e.src][e.dst] += 1
    return tuple(tuple(r) for r in rows)


# -- matrix helpers ---------------------------------------------------------

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def trace(a: Matrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


def _successors(m: Matrix) -> list:
    return [[j for j, x in enumerate(row) if x > 0] for row in m]


def _check_nonnegative(m: Matrix) -> None:
    if any(x < 0 for row in m for x in row):
        raise InputError("matrix has a negative entry")


def strongly_connected_components(m: Matrix) -> list:
    """Components of the digraph of positive entries, each a sorted list of indices.

    Components are returned ordered by their smallest index.
    """
    n = len(m)
    succ = _successors(m)
    pred = [[] for _ in range(n)]
    for u in range(n):
        for v in succ[u]:
            pred[v].append(u)
    # Kosaraju, iterative
    order, seen = [], [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [(s, iter(succ[s]))]
        while stack:
            u, it = stack[-1]
            for v in it:
                if not seen[v]:
                    seen[v] = True
                    stack.append((v, iter(succ[v])))
                    break
            else:
                stack.pop()
                order.append(u)
    comp = [-1] * n
    comps = []
    for s in reversed(order):
        if comp[s] >= 0:
            continue
        comp[s] = len(comps)
        members, stack = [s], [s]
        while stack:
            u = stack.pop()
            for v in pred[u]:
                if comp[v] < 0:
                    comp[v] = comp[s]
                    members.append(v)
                    stack.append(v)
        comps.append(sorted(members))
    return sorted(comps)


def is_irreducible(m: Matrix) -> bool:
    _check_nonnegative(m)
    return len(strongly_connected_components(m)) == 1


def period(m: Matrix) -> int:
    """Gcd of cycle lengths, via breadth-first levels: gcd of ``level[u] + 1 - level[v]``."""
    if not is_irreducible(m):
        raise AssumptionError("period is only defined for irreducible matrices")
    succ = _successors(m)
    level = {0: 0}
    queue = [0]
    for u in queue:
        for v in succ[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    p = 0
    for u in range(len(m)):
        for v in succ[u]:
            p = gcd(p, level[u] + 1 - level[v])
    if p == 0:
        raise AssumptionError("matrix has no cycles")
    return abs(p)


def det_identity_minus_z(m: Matrix) -> tuple:
    """Exact coefficients of ``det(I - z m)`` by Berkowitz's division-free recurrence."""
    n = len(m)
    if n == 0:
        return (1,)
    # coefficients of det(xI - A) from the highest power down, built from the
    # trailing principal submatrix outwards
    poly = [1, -m[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - 1 - k
        sub = [row[k + 1:] for row in m[k + 1:]]
        row_vec = m[k][k + 1:]
        v = [m[i][k] for i in range(k + 1, n)]
        col = [1, -m[k][k]]
        for _ in range(size):
            col.append(-sum(r * x for r, x in zip(row_vec, v)))
            v = [sum(a * x for a, x in zip(r, v)) for r in sub]
        poly = [sum(col[i - j] * poly[j] for j in range(min(i, size) + 1)) for i in range(size + 2)]
    return P.trim(poly)


def _all_derivatives_positive(derivs: list, num: int, shift: int) -> bool:
    """Whether every polynomial in ``derivs`` is positive at ``num / 2**shift``."""
    for d in derivs:
        n = len(d) - 1
        acc = sum(c * num ** i << (shift * (n - i)) for i, c in enumerate(d))
        if acc <= 0:
            return False
    return True


def perron_root(m: Matrix, bits: int = 52) -> float:
    """Largest real eigenvalue of a non-negative matrix, to about ``2**-bits``.

    Bisection on the monotone predicate "the characteristic polynomial and all
    its derivatives are positive at x", which holds exactly for x above the
    largest real root.  For a non-negative matrix that root is the spectral
    radius.  Evaluation is exact at dyadic points.
    """
    _check_nonnegative(m)
    n = len(m)
    if n == 0:
        return 0.0
    charpoly = P.reverse(det_identity_minus_z(m), n)  # ascending, monic
    derivs = []
    d = charpoly
    while d:
        derivs.append(d)
        d = P.derivative(d)
    upper = max(sum(row) for row in m) + 1
    lo, hi = 0, upper << bits
    if not _all_derivatives_positive(derivs, hi, bits):
        raise NumericalError("spectral radius bisection failed to bracket the Perron root")
    if _all_derivatives_positive(derivs, 0, bits):
        return 0.0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _all_derivatives_positive(derivs, mid, bits):
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2 / (1 << bits)


def spectral_radius(m: Matrix) -> float:
    """Perron root of an irreducible non-negative integer matrix."""
    if not is_irreducible(m):
        raise AssumptionError("spectral_radius requires an irreducible matrix")
    return perron_root(m)


def nonnegative_spectral_radius(m: Matrix) -> float:
    """Spectral radius of a possibly reducible non-negative matrix (0 when acyclic)."""
    _check_nonnegative(m)
    best = 0.0
    for comp in strongly_connected_components(m):
        block = tuple(tuple(m[i][j] for j in comp) for i in comp)
        if len(comp) == 1 and block[0][0] == 0:
            continue
        best = max(best, perron_root(block))
    return best


def scc_names(g: LabelledGraph) -> list:
    """Strongly connected components of ``g`` by vertex name, for diagnostics."""
    return [[g.vertices[i] for i in c] for c in strongly_connected_components(adjacency_matrix(g))]
