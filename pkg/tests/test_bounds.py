import pytest

from cubetrees.bounds import bounds_for, inequality_chain
from cubetrees.hypercube import num_edges, num_vertices


@pytest.mark.parametrize(
    "n,packing,arb,tau,edges,leftover",
    [
        (1, 0, 1, 1, 1, 1),
        (2, 1, 2, 2, 4, 1),
        (4, 2, 3, 3, 32, 2),
        (5, 2, 3, 3, 80, 18),
        (9, 4, 5, 5, 2304, 260),
    ],
)
def test_closed_forms(n, packing, arb, tau, edges, leftover):
    report = bounds_for(n)
    assert report.tree_packing == packing
    assert report.arboricity == arb
    assert report.tree_number == tau
    assert report.edges == edges
    assert report.leftover == leftover
    assert report.vertices == 2**n


def test_rejects_nonpositive_dimension():
    with pytest.raises(ValueError):
        bounds_for(0)
    with pytest.raises(ValueError):
        bounds_for(-3)


@pytest.mark.parametrize("n", range(2, 25))
def test_packing_equals_floor_density(n):
    # floor(n * 2^(n-1) / (2^n - 1)) collapses to floor(n/2) for n >= 2,
    # which is the sandwich certifying optimality of the construction
    report = bounds_for(n)
    assert report.tree_packing == report.trivial_upper
    assert report.trivial_upper == num_edges(n) // (num_vertices(n) - 1) == n // 2


def test_degenerate_single_edge_cube():
    # Q_1's lone edge is itself a spanning tree, so the floor-density bound
    # (1) exceeds the formula value floor(1/2) = 0 there; the chain of
    # inequalities still holds
    report = bounds_for(1)
    assert report.tree_packing == 0
    assert report.trivial_upper == 1
    assert report.tree_packing <= report.trivial_upper


@pytest.mark.parametrize("n", range(1, 25))
def test_ceil_density_reaches_arboricity(n):
    report = bounds_for(n)
    ceil_density = -(-num_edges(n) // (num_vertices(n) - 1))
    assert ceil_density >= n // 2 + 1
    assert report.trivial_lower == ceil_density == report.arboricity


@pytest.mark.parametrize("n", range(1, 101))
def test_tree_number_identity(n):
    # ceil((n+1)/2) == floor(n/2) + 1 for every n >= 1
    assert (n + 2) // 2 == n // 2 + 1


@pytest.mark.parametrize("n", range(1, 25))
def test_chain_ordering(n):
    report = bounds_for(n)
    assert report.tree_packing <= report.trivial_upper
    assert report.trivial_upper <= report.trivial_lower
    assert report.trivial_lower <= report.arboricity <= report.tree_number


def test_inequality_chain_examples():
    assert inequality_chain(num_edges(6), num_vertices(6), 3)  # 3 <= floor(192/63)
    assert inequality_chain(num_edges(3), num_vertices(3), 1)  # 1 <= floor(12/7)
    for k in range(1, 9):
        n = 2 * k
        assert inequality_chain(num_edges(n), num_vertices(n), k)
        assert not inequality_chain(num_edges(n), num_vertices(n), k + 1)
    with pytest.raises(ValueError):
        inequality_chain(1, 1, 0)


def test_as_dict_round_trip():
    doc = bounds_for(6).as_dict()
    assert doc["n"] == 6 and doc["tree_packing"] == 3 and doc["leftover"] == 3
