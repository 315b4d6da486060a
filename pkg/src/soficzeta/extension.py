"""Finite group extensions: Frobenius classes of closed orbits.

A skew product ``(x, g) -> (shift(x), psi(x) g)`` with ``psi`` depending on
the first two symbols assigns each closed orbit a conjugacy class of the
group.  Orbits are enumerated by brute force, so this module doubles as an
independent check of the orbit counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import AssumptionError, InputError
from .graph import LabelledGraph, adjacency_matrix, is_right_resolving, nonnegative_spectral_radius
from .oracle import Necklace, brute_force_language, enumerate_orbit_necklaces
from .orbits import mertens_product, mertens_sum


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple
    table: tuple
    identity: int
    inverses: tuple = field(init=False)
    classes: tuple = field(init=False)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0 or len(set(self.elements)) != n:
            raise InputError("group needs a non-empty list of distinct element names")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError(f"group table must be {n}x{n}")
        if any(not isinstance(x, int) or not 0 <= x < n for row in self.table for x in row):
            raise InputError("group table entries must be element indices")
        t, e = self.table, self.identity
        if not 0 <= e < n or any(t[e][x] != x or t[x][e] != x for x in range(n)):
            raise InputError(f"{self.elements[e] if 0 <= e < n else e!r} is not an identity")
        inverses = []
        for x in range(n):
            inv = [y for y in range(n) if t[x][y] == e and t[y][x] == e]
            if not inv:
                raise InputError(f"element {self.elements[x]!r} has no inverse")
            inverses.append(inv[0])
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if t[t[x][y]][z] != t[x][t[y][z]]:
                        raise InputError("group table is not associative")
        seen, classes = set(), []
        for x in range(n):
            if x in seen:
                continue
            cls = tuple(sorted({t[t[h][x]][inverses[h]] for h in range(n)}))
            seen.update(cls)
            classes.append(cls)
        object.__setattr__(self, "inverses", tuple(inverses))
        object.__setattr__(self, "classes", tuple(classes))

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def class_of(self, x: int) -> int:
        return next(i for i, c in enumerate(self.classes) if x in c)

    def class_name(self, i: int) -> str:
        return "{" + ",".join(self.elements[x] for x in self.classes[i]) + "}"

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[x][y] == self.table[y][x] for x in range(n) for y in range(n))


def parse_group(text: str) -> FiniteGroup:
    try:
        doc = json.loads(text)
        elements = [str(x) for x in doc["elements"]]
        identity = doc.get("identity", elements[0])
        table = tuple(tuple(row) for row in doc["table"])
    except (json.JSONDecodeError, KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed group document: {exc}") from None
    if identity not in elements:
        raise InputError(f"identity {identity!r} is not an element")
    return FiniteGroup(tuple(elements), table, elements.index(identity))


def cyclic_group(n: int) -> FiniteGroup:
    names = tuple("e" if k == 0 else f"g{k}" for k in range(n))
    return FiniteGroup(names, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)), 0)


def symmetric_group_s3() -> FiniteGroup:
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p * q)(k) = p(q(k))
    table = tuple(tuple(index[tuple(p[q[k]] for k in range(3))] for q in perms) for p in perms)
    names = tuple("".join(map(str, p)) for p in perms)
    return FiniteGroup(names, table, index[(0, 1, 2)])


LabelFunction = dict  # (first label, second label) -> element index


def parse_psi(text: str, group: FiniteGroup) -> LabelFunction:
    """Parse ``{"pairs": [{"first", "second", "value"}, ...]}`` against ``group``."""
    try:
        doc = json.loads(text)
        records = doc["pairs"]
        psi = {}
        for r in records:
            key = (r["first"], r["second"])
            if r["value"] not in group.elements:
                raise InputError(f"psi value {r['value']!r} is not a group element")
            if key in psi:
                raise InputError(f"psi pair {key} given twice")
            psi[key] = group.elements.index(r["value"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"malformed psi document: {exc}") from None
    return psi


def frobenius_element(word, psi: LabelFunction, group: FiniteGroup) -> int:
    """``psi(w[n-1], w[0]) * ... * psi(w[1], w[2]) * psi(w[0], w[1])`` (indices mod n)."""
    n = len(word)
    g = group.identity
    for k in range(n):
        pair = (word[k], word[(k + 1) % n])
        if pair not in psi:
            raise InputError(f"psi is undefined on the pair {pair}")
        g = group.mul(psi[pair], g)
    return g


def frobenius_class(tau: Necklace, psi: LabelFunction, group: FiniteGroup) -> int:
    return group.class_of(frobenius_element(tau.word, psi, group))


@dataclass
class ClassCensus:
    group: FiniteGroup
    lam: float
    N: int
    orbits: dict  # class index -> [O^C(1), ..., O^C(N)]

    def pi(self, c: int, n: int | None = None) -> int:
        return sum(self.orbits[c][: self.N if n is None else n])

    def log_mertens_product(self, c: int) -> float:
        return mertens_product(self.orbits[c], self.lam, self.N)

    def mertens_sum(self, c: int) -> float:
        return mertens_sum(self.orbits[c], self.lam, self.N)

    def total_orbits(self) -> list:
        return [sum(self.orbits[c][n] for c in self.orbits) for n in range(self.N)]

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "lambda": self.lam,
            "classes": [
                {
                    "class": self.group.class_name(c),
                    "size": len(self.group.classes[c]),
                    "O": list(self.orbits[c]),
                    "pi": self.pi(c),
                    "log_mertens_product": self.log_mertens_product(c),
                    "mertens_sum": self.mertens_sum(c),
                }
                for c in sorted(self.orbits)
            ],
        }


def check_psi_domain(g: LabelledGraph, psi: LabelFunction) -> None:
    words = brute_force_language(g, 2)
    missing = sorted(tuple(w) for w in words if len(w) == 2 and tuple(w) not in psi)
    if missing:
        raise InputError(f"psi is undefined on the words {missing}")


def class_orbit_census(g: LabelledGraph, group: FiniteGroup, psi: LabelFunction, N: int) -> ClassCensus:
    if not is_right_resolving(g):
        raise AssumptionError("class census needs a right-resolving presentation for lambda")
    check_psi_domain(g, psi)
    lam = nonnegative_spectral_radius(adjacency_matrix(g))
    orbits = {c: [0] * N for c in range(len(group.classes))}
    for n in range(1, N + 1):
        for tau in enumerate_orbit_necklaces(g, n):
            orbits[frobenius_class(tau, psi, group)][n - 1] += 1
    return ClassCensus(group, lam, N, orbits)


def equidistribution_diagnostic(census: ClassCensus, group: FiniteGroup, N: int | None = None) -> dict:
    """``pi^C(N) |K| / (|C| pi(N))`` per class; near 1 for an equidistributed extension."""
    N = census.N if N is None else N
    total = sum(census.pi(c, N) for c in census.orbits)
    if total == 0:
        raise InputError("no closed orbits up to the horizon")
    return {
        c: census.pi(c, N) * group.order / (len(group.classes[c]) * total)
        for c in sorted(census.orbits)
    }
