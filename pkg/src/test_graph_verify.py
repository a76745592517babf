from fractions import Fraction

import networkx as nx
import pytest

from exact_arith import RadicalSum
from graph_verify import (AlgebraicEigenvalue, Graph, build_clebsch, build_complete_bipartite, build_cone,
                          build_fano, build_kneser_pairs, build_petersen, candidate_from_graph,
                          certify_three_ev, closed_walk3_check, distinct_spectrum, independence_bound_check,
                          is_equitable, valency_partition)
from refinement import QuotientMatrix
from spectral_enum import LinkageError

ev = AlgebraicEigenvalue.parse


def _spectrum(g: Graph) -> list[tuple[str, int]]:
    return [(str(value), mult) for value, mult in distinct_spectrum(g).eigenvalues]


#  ==========================================
#    EIGENVALUE PARSING AND ORDER
#  ==========================================

@pytest.mark.parametrize("text,p,q,d", [
    ("5", 5, 0, 1),
    ("-2", -2, 0, 1),
    ("3/2", Fraction(3, 2), 0, 1),
    ("sqrt6", 0, 1, 6),
    ("-sqrt(6)", 0, -1, 6),
    ("2sqrt3", 0, 2, 3),
    ("1+2sqrt(5)", 1, 2, 5),
    ("1-sqrt5", 1, -1, 5),
    ("√8", 0, 2, 2),
    ("sqrt9", 3, 0, 1),
])
def test_parse(text, p, q, d):
    assert ev(text) == AlgebraicEigenvalue(Fraction(p), Fraction(q), d)


@pytest.mark.parametrize("text", ["", "abc", "sqrt", "1+"])
def test_parse_rejects_garbage(text):
    with pytest.raises(ValueError):
        ev(text)


def test_exact_ordering():
    assert ev("sqrt2") < ev("3/2")
    assert ev("-sqrt2") > ev("-3/2")
    assert ev("1+sqrt2") > ev("2")
    assert sorted([ev("1"), ev("-sqrt3"), ev("sqrt3")]) == [ev("-sqrt3"), ev("1"), ev("sqrt3")]
    assert ev("2sqrt2").conjugate() == ev("-2sqrt2")


def test_mixed_fields_are_unsupported():
    with pytest.raises(ValueError):
        ev("sqrt2") < ev("sqrt3")


#  ==========================================
#    GRAPH CONTAINER
#  ==========================================

def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(vertex_count=0, edges=frozenset())
    with pytest.raises(ValueError):
        Graph(vertex_count=2, edges=frozenset({(0, 2)}))


def test_networkx_round_trip():
    g = build_petersen()
    assert Graph.from_networkx(g.to_networkx()) == g
    assert g.degrees() == (3,) * 10
    assert len(g.edges_hash) == 64


#  ==========================================
#    KNOWN GRAPHS
#  ==========================================

def test_petersen_cone():
    g = build_cone(build_petersen())
    assert _spectrum(g) == [("5", 1), ("1", 5), ("-2", 5)]
    certificate = certify_three_ev(g, ev("5"), ev("1"), ev("-2"))
    assert certificate.ok
    assert str(certificate.alpha[10]) == "2√2"
    assert all(str(a) == "√2" for a in certificate.alpha[:10])
    assert closed_walk3_check(g, certificate)

    partition = valency_partition(g)
    assert [len(cell) for cell in partition] == [10, 1]
    assert is_equitable(g, partition) == (True, QuotientMatrix(((3, 1), (10, 0))))


def test_fano_graph():
    g = build_fano()
    assert len(g.edges) == 49
    assert _spectrum(g) == [("8", 1), ("1", 6), ("-2", 7)]
    certificate = certify_three_ev(g, ev("8"), ev("1"), ev("-2"))
    assert certificate.ok
    assert {str(a) for a in certificate.alpha[:7]} == {"√2"}
    assert {str(a) for a in certificate.alpha[7:]} == {"2√2"}
    partition = valency_partition(g)
    assert [len(cell) for cell in partition] == [7, 7]
    assert is_equitable(g, partition) == (True, QuotientMatrix(((0, 4), (4, 6))))


@pytest.mark.parametrize("a,b", [(2, 1), (3, 1), (2, 2), (3, 2), (4, 4), (5, 3)])
def test_complete_bipartite(a, b):
    g = build_complete_bipartite(a, b)
    top = AlgebraicEigenvalue.of(0, 1, a * b)
    bottom = AlgebraicEigenvalue.of(0, -1, a * b)
    report = distinct_spectrum(g)
    assert report.is_three_eigenvalue
    assert report.trace_ok
    assert report.eigenvalues == ((top, 1), (AlgebraicEigenvalue.of(0), a + b - 2), (bottom, 1))
    assert certify_three_ev(g, *report.values()).ok


def test_single_edge_has_two_eigenvalues():
    assert not distinct_spectrum(build_complete_bipartite(1, 1)).is_three_eigenvalue


def test_wrong_theta_fails_certificate():
    g = build_cone(build_petersen())
    certificate = certify_three_ev(g, ev("5"), ev("1"), ev("-3"))
    assert not certificate.ok
    assert not closed_walk3_check(g, certificate)


def test_theta_must_decrease():
    with pytest.raises(ValueError):
        certify_three_ev(build_petersen(), ev("1"), ev("3"), ev("-2"))


def test_irrational_alpha_square_is_reported():
    certificate = certify_three_ev(build_petersen(), ev("3"), ev("sqrt2"), ev("-2"))
    assert not certificate.ok
    assert "irrational" in certificate.failures[0]


def test_equitable_partitions_of_paths():
    p4 = Graph.from_networkx(nx.path_graph(4))
    assert is_equitable(p4, valency_partition(p4))[0]
    p5 = Graph.from_networkx(nx.path_graph(5))
    assert is_equitable(p5, valency_partition(p5)) == (False, None)


@pytest.mark.parametrize("builder,spectrum", [
    (lambda: build_kneser_pairs(6), [("6", 1), ("1", 9), ("-3", 5)]),
    (build_clebsch, [("5", 1), ("1", 10), ("-3", 5)]),
])
def test_strongly_regular_spectra(builder, spectrum):
    assert _spectrum(builder()) == spectrum


def test_candidate_from_kneser_graph():
    c = candidate_from_graph(build_kneser_pairs(6))
    assert (c.params.t, c.params.n, c.params.s, c.params.m) == (3, 15, 6, 5)
    assert c.valencies.omega == 3
    assert c.counts.counts == (15,)


def test_candidate_needs_t_at_least_three():
    with pytest.raises(LinkageError):
        candidate_from_graph(build_cone(build_petersen()))


def test_candidate_needs_integral_spectrum():
    with pytest.raises(ValueError):
        candidate_from_graph(build_complete_bipartite(3, 1))


def test_independence_bound():
    size, ok = independence_bound_check(build_cone(build_petersen()), 5)
    assert ok and 1 <= size <= 4


def test_builders_reject_bad_arguments():
    with pytest.raises(ValueError):
        build_kneser_pairs(4)
    with pytest.raises(ValueError):
        build_complete_bipartite(1, 2)


def test_alpha_is_radical_sum():
    certificate = certify_three_ev(build_clebsch(), ev("5"), ev("1"), ev("-3"))
    assert certificate.ok
    assert set(certificate.alpha) == {RadicalSum.sqrt(2)}


@pytest.mark.parametrize("builder", [lambda: build_cone(build_petersen()), build_fano, build_clebsch,
                                     lambda: build_kneser_pairs(7), lambda: build_complete_bipartite(3, 2)])
def test_certificate_agrees_with_minimal_polynomial(builder):
    g = builder()
    report = distinct_spectrum(g)
    assert report.trace_ok
    assert certify_three_ev(g, *report.values()).ok


def test_star_meets_radius_bound_with_equality():
    g = build_complete_bipartite(4, 1)
    top = distinct_spectrum(g).values()[0]
    assert top == ev("2")
    assert g.vertex_count == 2 ** 2 + 1
