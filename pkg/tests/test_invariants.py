import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sombor.graph import Graph, complete, cycle, disjoint_union, empty, k_n_k, path, star
from sombor.invariants import (
    FIRST_ZAGREB,
    INDICES,
    SECOND_ZAGREB,
    SOMBOR,
    hub_gap,
    index_with,
    shift_gain,
    sombor,
    sombor_knk_closed,
    sombor_path_closed,
    sombor_star_closed,
)

from .test_graph import graphs


def close(a, b):
    # absolute 1e-9 or relative 1e-12, whichever is looser
    return abs(a - b) <= max(1e-9, 1e-12 * max(abs(a), abs(b)))


def brute_sombor(G):
    deg = G.degrees()
    return math.fsum(math.sqrt(deg[u] ** 2 + deg[v] ** 2) for u, v in G.edges())


def test_sombor_examples():
    assert sombor(star(4)) == pytest.approx(3 * math.sqrt(10))
    assert round(sombor(star(4)), 5) == 9.48683
    assert sombor(empty(5)) == 0.0
    assert sombor(complete(4)) == pytest.approx(6 * 3 * math.sqrt(2))
    assert round(sombor(complete(4)), 4) == 25.4558


@pytest.mark.parametrize("n", range(3, 13))
def test_sombor_path(n):
    assert close(sombor(path(n)), 2 * math.sqrt(2) * (n - 3) + 2 * math.sqrt(5))


def test_index_with_examples():
    assert index_with(path(3), FIRST_ZAGREB).total == 6
    assert index_with(complete(3), SECOND_ZAGREB).total == 12
    rep = index_with(cycle(5), SOMBOR)
    assert rep.total == sombor(cycle(5))
    assert [(t.u, t.v) for t in rep.per_edge] == cycle(5).edges()
    assert all(t.du == t.dv == 2 for t in rep.per_edge)
    js = rep.to_json(6)
    assert js["name"] == "sombor" and len(js["edges"]) == 5


@given(graphs())
def test_sombor_matches_index_with_and_fsum(G):
    assert index_with(G, SOMBOR).total == sombor(G)
    assert close(sombor(G), brute_sombor(G))


@given(graphs(6), graphs(6))
def test_indices_additive_over_disjoint_union(G1, G2):
    U = disjoint_union(G1, G2)
    for w in INDICES.values():
        assert close(index_with(U, w).total, index_with(G1, w).total + index_with(G2, w).total)


@given(graphs())
def test_edge_term_bounds(G):
    for t in index_with(G, SOMBOR).per_edge:
        big = max(t.du, t.dv)
        assert big <= t.value <= math.sqrt(2) * big + 1e-12


@given(st.integers(1, 60), st.integers(1, 60))
def test_indices_symmetric(x, y):
    for w in INDICES.values():
        assert w(x, y) == w(y, x)


def test_knk_closed_matches_direct_sum():
    for n in range(2, 13):
        for k in range(1, n):
            assert close(sombor_knk_closed(n, k), sombor(k_n_k(n, k))), (n, k)
        assert close(sombor_knk_closed(n, n - 1), sombor(complete(n)))


def test_knk_closed_small_value():
    # 2*sqrt(20) + 4*sqrt(25) + (sqrt2/2)*2*4 + (sqrt2/2)*2*3, summed term by term
    direct = 2 * math.sqrt(20) + 2 * 2 * 5 + math.sqrt(2) / 2 * 8 + math.sqrt(2) / 2 * 6
    assert close(sombor_knk_closed(5, 2), direct)
    assert round(sombor_knk_closed(5, 2), 6) == 38.843767
    with pytest.raises(ValueError):
        sombor_knk_closed(5, 5)


def test_path_and_star_closed():
    assert sombor_path_closed(2) == math.sqrt(2)
    assert close(sombor_path_closed(3), 2 * math.sqrt(5))
    assert close(sombor_path_closed(10), 14 * math.sqrt(2) + 2 * math.sqrt(5))
    assert close(sombor_star_closed(4), 3 * math.sqrt(10))
    for n in range(2, 13):
        assert close(sombor_path_closed(n), sombor(path(n)))
        assert close(sombor_star_closed(n), sombor(star(n)))
    with pytest.raises(ValueError):
        sombor_path_closed(1)
    with pytest.raises(ValueError):
        sombor_star_closed(1)


def test_shift_gain():
    assert close(shift_gain(3, 1, 1), math.sqrt(10) - math.sqrt(5))
    assert round(shift_gain(3, 1, 1), 5) == 0.92621
    assert shift_gain(4, 1, 1) > shift_gain(3, 1, 1)
    assert shift_gain(3, 2, 1) < shift_gain(3, 1, 1)
    for bad in [(1, 1, 1), (3, 0, 1), (3, 1, 0.5)]:
        with pytest.raises(ValueError):
            shift_gain(*bad)


def test_shift_gain_monotone_on_grid():
    step = 0.25
    for a in (1, 1.5, 2, 3, 5):
        xs = [a + step * i for i in range(1, 60)]
        ys = [step * i for i in range(1, 60)]
        for y in ys:
            vals = [shift_gain(x, y, a) for x in xs]
            assert all(v > 0 for v in vals)
            assert all(q > p for p, q in zip(vals, vals[1:]))
        for x in xs[::7]:
            vals = [shift_gain(x, y, a) for y in ys]
            assert all(q < p for p, q in zip(vals, vals[1:]))


def test_hub_gap():
    assert close(hub_gap(2, 2), -2 * math.sqrt(2))
    assert hub_gap(9, 8) < hub_gap(8, 8)
    with pytest.raises(ValueError):
        hub_gap(1, 5)


def test_hub_gap_decreasing_on_grid():
    for y in range(3, 51):
        vals = [hub_gap(x, y) for x in range(2, 51)]
        assert all(q < p for p, q in zip(vals, vals[1:]))
        assert all(close(hub_gap(y, x), v) for x, v in zip(range(2, 51), vals))


def test_hub_gap_flat_along_degree_two():
    # the x-derivative x/sqrt(x^2+y^2) - x/sqrt(x^2+4) vanishes at y = 2
    assert {hub_gap(x, 2) for x in range(2, 51)} == {-math.sqrt(8)}


def test_edge_addition_raises_sombor_random(rng):
    from .conftest import random_graphs

    for G in random_graphs(rng, 200, n_min=2, n_max=10):
        base = sombor(G)
        for u, v in G.non_edges():
            assert sombor(G.add_edge(u, v)) > base


def test_single_edge():
    assert sombor(Graph.from_edges(3, [(0, 2)])) == math.sqrt(2)
