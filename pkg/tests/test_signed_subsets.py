import pytest

from soficzeta.errors import AssumptionError, BudgetError, InputError
from soficzeta.graph import LabelledGraph, Edge, adjacency_matrix, make_graph, spectral_radius
from soficzeta.oracle import brute_force_language
from soficzeta.presentation import essential_part
from soficzeta.signed_subsets import (
    build_signed_subset_graph,
    permutation_sign,
    signed_subset_matrices,
    signed_subset_matrix,
    spectral_gap_report,
    unsigned_subset_matrix,
)

PHI = (1 + 5 ** 0.5) / 2


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1)) == -1
    assert permutation_sign((3, 1, 2)) == 1
    assert permutation_sign((1, 3, 2)) == -1


def test_even_shift_pair_graph(hand):
    sg = build_signed_subset_graph(hand["even"], 2)
    assert sg.subset_vertices == ((0, 1),)
    assert len(sg.edges) == 1
    e = sg.edges[0]
    assert (e.label, e.sign) == ("0", -1)
    assert signed_subset_matrix(sg) == ((-1,),)
    assert unsigned_subset_matrix(sg) == ((1,),)


def test_golden_mean_pair_graph(hand):
    sg = build_signed_subset_graph(hand["golden"], 2)
    assert sg.edges == ()
    assert signed_subset_matrix(sg) == ((0,),)
    assert unsigned_subset_matrix(sg) == ((0,),)


def test_j1_is_the_graph(corpus):
    for g in corpus:
        sg = build_signed_subset_graph(g, 1)
        assert all(e.sign == 1 for e in sg.edges)
        assert signed_subset_matrix(sg) == adjacency_matrix(g)
        assert unsigned_subset_matrix(sg) == adjacency_matrix(g)


def test_errors(hand):
    with pytest.raises(InputError):
        build_signed_subset_graph(hand["even"], 3)
    nondet = LabelledGraph(("1",), (Edge(0, 0, "a"), Edge(0, 0, "a")))
    with pytest.raises(AssumptionError):
        build_signed_subset_graph(nondet, 1)
    big = make_graph([str(i) for i in range(17)], [(str(i), str((i + 1) % 17), "a") for i in range(17)])
    with pytest.raises(BudgetError):
        signed_subset_matrices(big)


def test_domination_and_single_edges(corpus):
    for g in corpus:
        for j in range(1, g.order + 1):
            sg = build_signed_subset_graph(g, j)
            a, t = signed_subset_matrix(sg), unsigned_subset_matrix(sg)
            assert all(abs(x) <= y for ra, rt in zip(a, t) for x, y in zip(ra, rt))
            keys = [(e.src, e.label) for e in sg.edges]
            assert len(keys) == len(set(keys))
            assert all(list(s) == sorted(set(s)) and len(s) == j for s in sg.subset_vertices)


def test_spectral_gap_examples(hand):
    r = spectral_gap_report(hand["even"])
    assert r.rho_tilde == {2: pytest.approx(1.0)}
    assert r.R == pytest.approx(PHI, abs=1e-6)
    assert r.passed
    r = spectral_gap_report(hand["golden"])
    assert r.rho_tilde == {2: 0.0}
    assert r.R == pytest.approx(PHI ** 2, abs=1e-6)
    r = spectral_gap_report(hand["period2"])
    assert r.rho_tilde[2] == pytest.approx(1.0)
    assert r.lam == pytest.approx(2 ** 0.5)
    assert len(r.pole_positions) == 2
    assert r.pole_positions[1] == pytest.approx(-1 / 2 ** 0.5)
    assert r.passed and r.R > 1


def test_gap_on_minimal_corpus(minimal_corpus):
    for g in minimal_corpus:
        r = spectral_gap_report(g)
        assert r.passed
        assert r.R > 1
        assert all(rho < r.lam - 1e-9 for rho in r.rho_tilde.values())


def _tilde_graph(g, j):
    sg = build_signed_subset_graph(g, j)
    names = tuple(",".join(map(str, s)) for s in sg.subset_vertices)
    return essential_part(LabelledGraph(names, tuple(Edge(e.src, e.dst, e.label) for e in sg.edges)))


def test_unsigned_subset_shift_is_a_subshift(minimal_corpus):
    for g in minimal_corpus:
        if g.order < 2:
            continue
        t = _tilde_graph(g, 2)
        if not t.vertices:
            continue
        assert brute_force_language(t, 6) <= brute_force_language(g, 6)
