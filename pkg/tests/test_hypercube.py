import numpy as np
import pytest
from hypothesis import given, strategies as st

from cubetrees.hypercube import (
    CapExceededError,
    Edge,
    MalformedEdgeError,
    check_dimension,
    edge_endpoints,
    edge_from_id,
    edge_id,
    embed,
    num_edges,
    num_vertices,
    squeeze_bit,
    unsqueeze_bit,
)


def brute_force_edges(n):
    """All cube edges as frozen vertex pairs, by scanning every vertex's neighbors."""
    return {
        frozenset((v, v ^ (1 << d))) for v in range(num_vertices(n)) for d in range(n)
    }


@pytest.mark.parametrize("n", range(1, 11))
def test_edge_count_matches_formula(n):
    assert len(brute_force_edges(n)) == num_edges(n) == n * 2 ** (n - 1)


def test_edge_id_examples():
    assert edge_id(Edge(0b00, 0), 2) == 0
    assert edge_id(Edge(0b01, 1), 2) == 3
    assert num_edges(3) == 12


def test_edge_from_id_examples():
    assert edge_from_id(0, 2) == Edge(0b00, 0)
    assert edge_from_id(3, 2) == Edge(0b01, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_edge_id_is_a_bijection(n):
    seen = set()
    for eid in range(num_edges(n)):
        e = edge_from_id(eid, n)
        assert edge_id(e, n) == eid
        pair = frozenset(e.endpoints())
        assert pair not in seen
        seen.add(pair)
    assert seen == brute_force_edges(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_all_ids(n):
    for eid in range(num_edges(n)):
        assert edge_id(edge_from_id(eid, n), n) == eid


def test_malformed_edges_rejected():
    with pytest.raises(MalformedEdgeError):
        edge_id(Edge(0, 2), 2)  # dimension index out of range
    with pytest.raises(MalformedEdgeError):
        edge_id(Edge(0b01, 0), 2)  # bit d already set
    with pytest.raises(MalformedEdgeError):
        edge_id(Edge(4, 0), 2)  # vertex out of range
    with pytest.raises(MalformedEdgeError):
        edge_from_id(4, 2)
    with pytest.raises(MalformedEdgeError):
        edge_from_id(-1, 2)


def test_dimension_cap():
    assert check_dimension(24) == 24
    with pytest.raises(ValueError):
        check_dimension(0)
    with pytest.raises(CapExceededError):
        check_dimension(25)
    assert check_dimension(25, cap=26) == 25


def test_embed_identity_and_placement():
    for v in range(4):
        assert embed(v, 0, 2) == v
    assert embed(0b01, 0b01, 2) == 0b0101
    assert embed(0b11, 0b10, 2) == 0b1011


def test_embed_images_partition_vertices():
    at = 2
    images = [
        {embed(v, bits, at) for v in range(1 << at)} for bits in range(4)
    ]
    union = set().union(*images)
    assert union == set(range(1 << (at + 2)))
    assert sum(len(im) for im in images) == len(union)


@pytest.mark.parametrize("n", range(1, 9))
def test_every_vertex_has_degree_n(n):
    u, v = edge_endpoints(np.arange(num_edges(n)), n)
    degrees = np.bincount(np.concatenate([u, v]), minlength=num_vertices(n))
    assert (degrees == n).all()


@pytest.mark.parametrize("n", range(1, 7))
def test_vectorized_decode_matches_scalar(n):
    ids = np.arange(num_edges(n))
    u, v = edge_endpoints(ids, n)
    for eid in range(num_edges(n)):
        e = edge_from_id(eid, n)
        assert (u[eid], v[eid]) == e.endpoints()


@given(st.integers(1, 16), st.data())
def test_round_trip_random(n, data):
    eid = data.draw(st.integers(0, num_edges(n) - 1))
    e = edge_from_id(eid, n)
    assert edge_id(e, n) == eid
    assert 0 <= e.u < num_vertices(n)
    assert not e.u & (1 << e.d)
    assert e.v == e.u | (1 << e.d)


@given(st.integers(0, 2**20 - 1), st.integers(0, 19))
def test_squeeze_unsqueeze_inverse(value, d):
    squeezed = squeeze_bit(value & ~(1 << d), d)
    assert unsqueeze_bit(squeezed, d) == value & ~(1 << d)
    assert squeezed < 1 << 20
