import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agperfect.aggraph import adjacent, build, complement_adjacent, degree_census, degree_profile
from agperfect.factoring import Factorization, Signature, factor

from oracles import divisibility_matrix, divisors_between


def vec(g, m):
    """Exponent vector of divisor ``m`` in graph ``g``'s own encoding."""
    return next(v for v in g.vertices if g.divisor(v) == m)


def test_adjacent_examples_n12():
    alpha = (2, 1)
    assert adjacent((1, 0), (1, 1), alpha)  # 12 | 2*6
    assert not adjacent((1, 0), (0, 1), alpha)  # 12 does not divide 6
    assert complement_adjacent((1, 0), (0, 1), alpha)
    assert not complement_adjacent((1, 0), (1, 1), alpha)


def test_adjacent_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        adjacent((1, 0), (1,), (2, 1))
    with pytest.raises(ValueError):
        complement_adjacent((1, 0), (1, 0), (2, 1, 1))


def test_four_primes_pair_neighbourhood():
    g = build(210)
    p12 = vec(g, 6)
    nbrs = {g.divisor(v) for v in g.vertices if v != p12 and adjacent(p12, v, g.alpha)}
    assert nbrs == {35, 2 * 5 * 7, 3 * 5 * 7}


def test_build_12_is_a_path():
    g = build(12)
    assert g.vertex_count == 4
    edges = {frozenset((g.divisor(g.vertices[i]), g.divisor(g.vertices[j]))) for i, j in g.edges()}
    assert edges == {frozenset(e) for e in [(2, 6), (3, 4), (4, 6)]}
    # brute-force divisibility over all pairs
    brute = {
        frozenset((a, b))
        for a, b in itertools.combinations(divisors_between(12), 2)
        if a * b % 12 == 0
    }
    assert edges == brute


def test_build_210_census():
    g = build(210)
    assert g.vertex_count == 14
    assert len(g.edges()) == 25
    assert degree_profile(g) == [1] * 4 + [3] * 6 + [7] * 4
    assert degree_census(g) == {1: 4, 3: 6, 7: 4}


@pytest.mark.parametrize("alpha", range(1, 13))
def test_prime_power_threshold_graph(alpha):
    g = build(Factorization(((3, alpha),)))
    assert g.vertex_count == alpha - 1
    ks = [v[0] for v in g.vertices]
    assert ks == list(range(1, alpha))
    for i, j in itertools.combinations(range(g.vertex_count), 2):
        assert g.has_edge(i, j) == (ks[i] + ks[j] >= alpha)


def test_degree_profile_small_examples():
    assert degree_profile(build(12)) == [1, 1, 2, 2]
    assert degree_profile(build(49)) == [0]
    assert degree_profile(build(13)) == []


def test_prime_gives_empty_graph():
    g = build(13)
    assert g.vertex_count == 0 and g.edges() == [] and g.rows == ()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_adjacency_symmetric_irreflexive(exps):
    g = build(Signature(tuple(exps)))
    m = g.adjacency_matrix()
    assert (m == m.T).all()
    assert not m.diagonal().any()
    assert sum(degree_profile(g)) % 2 == 0
    comp = g.complement_rows()
    for i, j in itertools.permutations(range(g.vertex_count), 2):
        assert bool(comp[i] >> j & 1) != bool(m[i, j])
        u, v = g.vertices[i], g.vertices[j]
        assert adjacent(u, v, g.alpha) != complement_adjacent(u, v, g.alpha)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 1), (3, 2), (1, 3), (4, 4)])
def test_signature_invariance_two_primes(a, b):
    g1 = build(Factorization(((2, a), (3, b))))
    g2 = build(Factorization(((101, a), (103, b))))
    assert np.array_equal(g1.adjacency_matrix(), g2.adjacency_matrix())
    assert g1.vertices == g2.vertices


def test_reordered_exponents_give_identical_matrices():
    # 18 = 2 * 3^2 and 12 = 2^2 * 3 share a signature
    assert np.array_equal(build(18).adjacency_matrix(), build(12).adjacency_matrix())
    assert build(18).primes == (3, 2)


def test_signature_build_matches_integer_build():
    assert build(Signature((2, 1, 1))).rows == build(60).rows
    assert build(Signature((2, 1, 1))).factorization is None


def test_divisibility_oracle_equivalence_up_to_50000():
    for n in range(2, 50001):
        g = build(n)
        labels = [g.divisor(v) for v in g.vertices]
        oracle = divisibility_matrix(n, labels)
        for i, row in enumerate(g.rows):
            for j in range(len(labels)):
                if bool(row >> j & 1) != oracle[i][j]:
                    pytest.fail(f"n={n}: {labels[i]} vs {labels[j]}")


def test_dot_export():
    dot = build(12).to_dot()
    assert dot.startswith("graph AG_12 {")
    assert '[label="6"]' in dot and dot.count("--") == 3
    big = build(Signature((2, 1)))
    assert "graph AG_2_1 {" in big.to_dot()
    assert '[label="1.1"]' in big.to_dot()


def test_dot_labels_fall_back_beyond_64_bits():
    f = Factorization(((2, 1), (18446744073709551557, 1)))
    g = build(f)
    assert g.n > 2**64 - 1
    assert {g.label(v) for v in g.vertices} == {"1.0", "0.1"}


def test_json_export():
    g = build(12)
    data = json.loads(g.to_json())
    assert data["signature"] == [2, 1]
    assert len(data["vertices"]) == 4
    for i, j in data["edges"]:
        assert adjacent(data["vertices"][i], data["vertices"][j], data["signature"])
