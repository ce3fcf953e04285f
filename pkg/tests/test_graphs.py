import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labelpack.graphs import (
    circuit_arcs,
    compose,
    cycle_edges,
    edge,
    identity,
    invert,
    is_permutation,
    is_single_circuit,
    is_single_cycle,
    permute_arcs,
    permute_edges,
)


def test_cycle_edges_small_orders():
    assert cycle_edges(3) == frozenset({(0, 1), (1, 2), (0, 2)})
    assert cycle_edges(4) == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    e8 = cycle_edges(8)
    assert len(e8) == 8
    degree = [0] * 8
    for u, v in e8:
        degree[u] += 1
        degree[v] += 1
    assert degree == [2] * 8


def test_cycle_edges_rejects_tiny_orders():
    with pytest.raises(ValueError):
        cycle_edges(2)


def test_circuit_arcs_small_orders():
    assert circuit_arcs(2) == frozenset({(0, 1), (1, 0)})
    assert circuit_arcs(4) == frozenset({(0, 1), (1, 2), (2, 3), (3, 0)})
    assert is_single_circuit(circuit_arcs(6), 6)
    with pytest.raises(ValueError):
        circuit_arcs(1)


def test_edge_canonicalizes_and_rejects_loops():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        edge(3, 3)


def test_is_single_cycle_standard_orders():
    for n in range(3, 65):
        assert is_single_cycle(cycle_edges(n), n)


def test_is_single_cycle_rejects_two_components():
    two_triangles = {(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)}
    assert not is_single_cycle(two_triangles, 6)


def test_is_single_cycle_rejects_wrong_size_and_range():
    assert not is_single_cycle(set(), 3)
    assert not is_single_cycle({(0, 1), (1, 2), (0, 3)}, 3)


def test_is_single_circuit_standard_and_broken():
    assert is_single_circuit(circuit_arcs(7), 7)
    broken = set(circuit_arcs(4)) - {(2, 3)} | {(3, 2)}
    assert not is_single_circuit(broken, 4)
    two_loops = {(0, 1), (1, 0), (2, 3), (3, 2)}
    assert not is_single_circuit(two_loops, 4)


def test_apply_identity_and_rotation():
    assert permute_edges(identity(6), cycle_edges(6)) == cycle_edges(6)
    rotation = tuple((i + 1) % 4 for i in range(4))
    assert permute_arcs(rotation, circuit_arcs(4)) == circuit_arcs(4)


def permutations(n):
    return st.permutations(list(range(n)))


@given(st.integers(min_value=4, max_value=16).flatmap(
    lambda n: st.tuples(st.just(n), permutations(n))))
@settings(max_examples=80, deadline=None)
def test_permuting_preserves_cardinality_and_cycle_shape(data):
    n, pi = data
    edges = cycle_edges(n)
    image = permute_edges(pi, edges)
    assert len(image) == len(edges)
    assert is_single_cycle(image, n)


@given(st.integers(min_value=3, max_value=12).flatmap(
    lambda n: st.tuples(st.just(n), permutations(n), permutations(n))))
@settings(max_examples=80, deadline=None)
def test_composition_of_permutations(data):
    n, pi, rho = data
    edges = cycle_edges(n)
    combined = permute_edges(compose(pi, rho), edges)
    stepwise = permute_edges(pi, permute_edges(rho, edges))
    assert combined == stepwise


@given(st.integers(min_value=3, max_value=12).flatmap(
    lambda n: st.tuples(st.just(n), permutations(n))))
@settings(max_examples=60, deadline=None)
def test_invert_round_trips(data):
    n, pi = data
    pi = tuple(pi)
    assert compose(pi, invert(pi)) == identity(n)
    assert is_permutation(pi, n)


def test_shape_predicate_invariant_under_relabeling():
    rng = random.Random(7)
    for n in range(4, 17):
        edges = cycle_edges(n)
        broken = set(edges)
        broken.discard(edge(0, 1))
        broken.add(edge(0, 2) if n > 4 else edge(1, 3))
        for _ in range(20):
            pi = list(range(n))
            rng.shuffle(pi)
            assert is_single_cycle(permute_edges(pi, edges), n)
            assert is_single_cycle(permute_edges(pi, broken), n) == is_single_cycle(broken, n)
