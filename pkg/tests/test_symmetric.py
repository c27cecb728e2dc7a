import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csflab import (
    DomainError,
    Graph,
    MPoly,
    Partition,
    ResourceGuardError,
    chromatic_polynomial,
    complete_graph,
    csf,
    csf_coloring_oracle,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    enumerate_partitions,
    multiplicity_factorial,
    path_graph,
    product,
    specialize_ones,
    stable_partition_census,
    star_graph,
)
from csflab.symmetric import mpoly_from_json
from oracles import brute_stable_partitions, chromatic_deletion_contraction, poly_eval
from strategies import graphs


def test_csf_examples():
    assert csf(path_graph(3)).coeffs == {Partition((2, 1)): 1, Partition((1, 1, 1)): 6}
    assert csf(complete_graph(3)).coeffs == {Partition((1, 1, 1)): 6}
    assert csf(empty_graph(2)).coeffs == {Partition((2,)): 1, Partition((1, 1)): 2}
    assert dict(csf(path_graph(4)).coeffs) == {(2, 2): 2, (2, 1, 1): 6, (1, 1, 1, 1): 24}
    assert dict(csf(star_graph(4)).coeffs) == {(3, 1): 1, (2, 1, 1): 6, (1, 1, 1, 1): 24}


@pytest.mark.parametrize("n", range(0, 6))
def test_csf_matches_colouring_oracle(n):
    for g in enumerate_graphs(n):
        assert csf(g) == csf_coloring_oracle(g)


@given(graphs(max_n=7))
def test_census_matches_brute_force_and_bridge_identity(g):
    census = stable_partition_census(g)
    assert dict(census) == {Partition(k): v for k, v in brute_stable_partitions(g).items()}
    f = csf(g)
    for lam in enumerate_partitions(g.n):
        assert f[lam] == multiplicity_factorial(lam) * census.get(lam, 0)


def test_product_examples():
    m1 = MPoly.monomial((1,))
    assert dict((m1 * m1).coeffs) == {(2,): 1, (1, 1): 2}
    m11 = MPoly.monomial((1, 1))
    assert dict((m11 * m11).coeffs) == {(2, 2): 1, (2, 1, 1): 2, (1, 1, 1, 1): 6}
    k2 = csf(complete_graph(2))
    assert k2 * k2 == csf(disjoint_union(complete_graph(2), complete_graph(2)))


@given(graphs(max_n=4), graphs(max_n=4))
def test_csf_is_multiplicative(g, h):
    assert product(csf(g), csf(h)) == csf(g.disjoint_union(h))


def test_arithmetic_and_json():
    f = csf(path_graph(3))
    assert (f - f).is_zero() and f + f == 2 * f and -f == f * -1
    assert f * Fraction(1, 2) == MPoly(3, {(2, 1): Fraction(1, 2), (1, 1, 1): 3})
    assert f.to_json() == {"degree": 3, "basis": "m", "coeffs": {"2,1": "1", "1,1,1": "6"}}
    assert mpoly_from_json(f.to_json()) == f
    assert MPoly(2, {(2,): Fraction(1, 3)}).to_json()["coeffs"] == {"2": "1/3"}
    with pytest.raises(DomainError):
        f + csf(path_graph(2))
    with pytest.raises(DomainError):
        MPoly(3, {(2,): 1})


def test_specialization_gives_proper_colourings():
    f = csf(path_graph(3))
    assert [specialize_ones(f, k) for k in range(4)] == [0, 0, 2, 12]
    assert chromatic_polynomial(path_graph(3)) == [0, 1, -2, 1]
    assert specialize_ones(csf(Graph(0)), 0) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_chromatic_polynomial_matches_deletion_contraction(n):
    for g in enumerate_graphs(n):
        assert chromatic_polynomial(g) == chromatic_deletion_contraction(g)


@given(graphs(max_n=6), st.integers(0, 7))
def test_specialization_matches_deletion_contraction(g, k):
    assert specialize_ones(csf(g), k) == poly_eval(chromatic_deletion_contraction(g), k)


def test_guards():
    with pytest.raises(ResourceGuardError):
        csf_coloring_oracle(path_graph(7))
    with pytest.raises(ResourceGuardError):
        stable_partition_census(empty_graph(13))
    with pytest.raises(DomainError):
        specialize_ones(csf(path_graph(2)), -1)


def test_leading_coefficients():
    # every graph has exactly n! colourings with all colours distinct
    for g in enumerate_graphs(5):
        assert csf(g)[(1,) * 5] == math.factorial(5)
