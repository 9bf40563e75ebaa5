import math
import random

import pytest

from sombor.graph import Graph, complete, cut_vertices, empty, g_split, path
from sombor.invariants import hub_gap, sombor
from sombor.transforms import (
    SwitchError,
    SwitchSpec,
    alpha_family,
    alpha_switch_search,
    build_alpha_pair,
    check_edge_addition,
    check_split_join,
    donor_loss,
    neighbor_switch,
    random_switch_case,
)


def test_switch_on_path():
    G = path(4)
    H = neighbor_switch(G, SwitchSpec(1, 3, frozenset({0})))
    assert H.edges() == [(0, 3), (1, 2), (2, 3)]
    assert H.degrees() == [1, 1, 2, 2]


def test_switch_moves_every_private_neighbour():
    # u = 0 with private neighbours 2, 3 and the path neighbour 1
    G = Graph.from_edges(5, [(0, 1), (1, 4), (0, 2), (0, 3)])
    spec = SwitchSpec(0, 4, frozenset({2, 3}))
    H = neighbor_switch(G, spec)
    assert H.degree(0) == 1 and H.degree(4) == 3
    assert sombor(H) > sombor(G)


@pytest.mark.parametrize("spec", [
    SwitchSpec(1, 2, frozenset({0})),         # u, v adjacent
    SwitchSpec(1, 3, frozenset({2})),         # moved vertex on the path
    SwitchSpec(1, 3, frozenset()),            # nothing moved
    SwitchSpec(0, 3, frozenset({2})),         # 2 is not a neighbour of 0
    SwitchSpec(1, 3, frozenset({0}), (1, 3)),  # path uses a missing edge
    SwitchSpec(1, 1, frozenset({0})),
])
def test_switch_rejects_invalid(spec):
    with pytest.raises(SwitchError):
        neighbor_switch(path(4), spec)


def test_switch_rejects_common_neighbour():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (0, 3), (2, 3)])
    with pytest.raises(SwitchError):
        neighbor_switch(G, SwitchSpec(0, 2, frozenset({3}), (0, 1, 2)))


def test_switch_needs_a_path():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(SwitchError):
        neighbor_switch(G, SwitchSpec(0, 2, frozenset({1})))


def test_random_switch_cases_preserve_size_and_raise_sombor():
    rng = random.Random(11)
    for _ in range(500):
        G, spec = random_switch_case(rng)
        H = neighbor_switch(G, spec)
        assert H.num_edges == G.num_edges
        assert sum(H.degrees()) == sum(G.degrees())
        t = len(spec.moved)
        assert H.degree(spec.u) == G.degree(spec.u) - t
        assert H.degree(spec.v) == G.degree(spec.v) + t
        others = [w for w in range(G.n) if w not in (spec.u, spec.v)]
        assert [H.degree(w) for w in others] == [G.degree(w) for w in others]
        assert G.degree(spec.u) <= G.degree(spec.v)
        assert sombor(H) - sombor(G) > 1e-9


def test_edge_addition_on_path5():
    rep = check_edge_addition(path(5))
    assert len(rep.margins) == 6
    assert rep.holds and rep.min_margin > 0
    # one direct value: closing the path into C5 turns both end terms into sqrt(8)
    gain = 5 * math.sqrt(8) - (2 * math.sqrt(2) * 2 + 2 * math.sqrt(5))
    assert rep.margins[(0, 4)] == pytest.approx(gain)


def test_edge_addition_vacuous_for_complete():
    rep = check_edge_addition(complete(4))
    assert rep.margins == {} and rep.min_margin is None and rep.holds


def test_split_join_examples():
    r = check_split_join(2, complete(2), 2)
    assert r.n == 6 and r.holds
    assert r.so_lopsided == sombor(g_split(1, complete(2), 3))
    assert check_split_join(2, empty(3), 2).holds
    with pytest.raises(ValueError):
        check_split_join(1, complete(2), 3)
    with pytest.raises(ValueError):
        check_split_join(3, complete(2), 2)


def test_alpha_pair_structure():
    for dx, dy, m in [(2, 2, 3), (3, 5, 4), (8, 8, 3), (6, 9, 5)]:
        p = build_alpha_pair(dx, dy, m)
        G, H = p.gamma, p.gamma_alpha
        assert G.n == H.n and G.num_edges == H.num_edges
        assert (G.degree(0), G.degree(1)) == (dx, dy) == (H.degree(0), H.degree(1))
        assert G.has_edge(0, 1) and not H.has_edge(0, 1)
        assert len(cut_vertices(G)) == len(cut_vertices(H))
        assert p.so_gamma == sombor(G) and p.so_gamma_alpha == sombor(H)


def test_alpha_gain_decomposes():
    # direct edge sums versus the local bookkeeping of the three changed regions
    for m in (3, 4, 5):
        for dx in range(2, 13):
            for dy in range(dx, 13):
                p = build_alpha_pair(dx, dy, m)
                assert p.gain == pytest.approx(-hub_gap(dx, dy) - donor_loss(m), abs=1e-9)


def test_alpha_search():
    assert alpha_switch_search(2, 3) == []
    hits = alpha_switch_search(2, 8)
    assert any(p.hub_degrees == (8, 8) for p in hits)
    assert all(p.so_gamma_alpha > p.so_gamma for p in hits)
    assert all(sombor(p.gamma_alpha) == p.so_gamma_alpha for p in hits)
    assert len(alpha_family(2, 4, (3,))) == 6
    with pytest.raises(ValueError):
        alpha_family(1, 4)
    with pytest.raises(ValueError):
        build_alpha_pair(3, 3, 2)
