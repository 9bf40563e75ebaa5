import io
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sombor.graph import (
    Graph,
    Graph6Error,
    GraphError,
    add_edge,
    complete,
    component_count,
    cut_vertices,
    cycle,
    degree,
    disjoint_union,
    empty,
    g_split,
    is_connected,
    join,
    k_n_k,
    parse_graph6,
    path,
    read_edge_csv,
    remove_edge,
    shortest_path,
    star,
    write_edge_csv,
    write_graph6,
)

from .conftest import random_graphs, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_mask(n, mask)


def test_empty():
    assert empty(0).n == 0 and empty(0).edges() == []
    assert empty(3).degrees() == [0, 0, 0]
    assert empty(1) == complete(1)


def test_add_remove_edge():
    p2 = add_edge(empty(2), 0, 1)
    assert p2 == path(2)
    assert remove_edge(p2, 0, 1) == empty(2)
    with pytest.raises(GraphError):
        add_edge(p2, 0, 1)
    with pytest.raises(GraphError):
        remove_edge(empty(2), 0, 1)
    with pytest.raises(GraphError):
        add_edge(empty(2), 1, 1)
    with pytest.raises(GraphError):
        add_edge(empty(2), 0, 2)


def test_add_edge_touches_only_endpoints():
    G = path(5)
    H = G.add_edge(0, 3)
    assert [b - a for a, b in zip(G.degrees(), H.degrees())] == [1, 0, 0, 1, 0]


def test_degree():
    assert degree(star(5), 0) == 4
    assert set(complete(6).degrees()) == {5}
    assert set(cycle(7).degrees()) == {2}
    with pytest.raises(GraphError):
        degree(star(3), 3)


def test_families():
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert star(4).degrees() == [3, 1, 1, 1]
    assert complete(4).num_edges == 6
    assert cycle(5).num_edges == 5
    with pytest.raises(GraphError):
        cycle(2)


def test_union_and_join():
    assert disjoint_union(complete(1), complete(1)) == empty(2)
    assert component_count(disjoint_union(path(2), path(2))) == 2
    assert disjoint_union(empty(0), path(3)) == path(3)
    assert join(complete(1), complete(1)) == complete(2)
    assert join(complete(1), empty(4)) == star(5)
    assert join(complete(2), complete(3)) == complete(5)


@given(graphs(6), graphs(6))
def test_join_edge_count_and_commutativity(G1, G2):
    J = join(G1, G2)
    assert J.num_edges == G1.num_edges + G2.num_edges + G1.n * G2.n
    assert nx.is_isomorphic(to_nx(J), to_nx(join(G2, G1)))


@given(graphs())
def test_handshake(G):
    assert sum(G.degrees()) == 2 * G.num_edges == 2 * len(G.edges())


def test_k_n_k_structure():
    G = k_n_k(5, 2)
    # hub K_2 has degree n-1, the lone vertex k, the big clique n-2
    assert G.degrees() == [4, 4, 2, 3, 3]
    assert G.num_edges == 8
    assert k_n_k(6, 5) == complete(6)
    with pytest.raises(GraphError):
        k_n_k(5, 5)
    with pytest.raises(GraphError):
        k_n_k(5, 0)


@pytest.mark.parametrize("n", range(2, 11))
def test_k_n_k_edge_count(n):
    for k in range(1, n):
        r = n - k - 1
        assert k_n_k(n, k).num_edges == k + k * (k - 1) // 2 + k * r + r * (r - 1) // 2


def test_g_split():
    assert g_split(1, complete(3), 4) == k_n_k(8, 3)
    G = g_split(2, complete(1), 2)
    assert G.n == 5
    # hub vertex sees everything; K_2 sides see their partner and the hub
    assert G.degrees() == [4, 2, 2, 2, 2]


def test_components():
    assert is_connected(path(5)) and component_count(path(5)) == 1
    assert component_count(disjoint_union(complete(3), complete(2))) == 2
    assert component_count(empty(4)) == 4
    assert component_count(empty(0)) == 0 and not is_connected(empty(0))


def test_components_against_networkx(rng):
    for G in random_graphs(rng, 300):
        H = to_nx(G)
        assert component_count(G) == nx.number_connected_components(H)
        assert sorted(cut_vertices(G)) == sorted(nx.articulation_points(H))


def test_shortest_path():
    assert shortest_path(cycle(6), 0, 3) == [0, 1, 2, 3]
    assert shortest_path(empty(2), 0, 1) is None


def test_mask_round_trip():
    for mask in range(1 << 10):
        assert Graph.from_mask(5, mask).to_mask() == mask
    with pytest.raises(GraphError):
        Graph.from_mask(3, 1 << 3)


def test_invalid_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(GraphError):
        Graph(1, (0b10,))


def test_graph6_example_decodes_like_networkx():
    G = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert G.n == 5
    assert sorted(G.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    assert G == star(5).relabel([4, 0, 1, 2, 3])


def test_graph6_against_networkx_encoder(rng):
    for G in random_graphs(rng, 500, n_max=70):
        ref = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
        assert write_graph6(G) == ref
        assert parse_graph6(ref) == G


def test_graph6_round_trip_many():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(0, 30)
        mask = rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0
        G = Graph.from_mask(n, mask)
        s = write_graph6(G)
        assert parse_graph6(s) == G
        assert write_graph6(parse_graph6(s)) == s


def test_graph6_header_and_large_n():
    assert parse_graph6(">>graph6<<A_") == path(2)
    G = path(100)
    assert write_graph6(G)[0] == "~"
    assert parse_graph6(write_graph6(G)) == G


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("D?", 2),
    ("D?{?", 3),
    ("D?|", 2),
    ("D?\x10", 2),
    ("~??", 3),
])
def test_graph6_errors(text, offset):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(text)
    assert err.value.offset == offset


def test_edge_csv(tmp_path):
    text = "u,v\n# comment\n0,1\n1,2\n\n2,3\n"
    assert read_edge_csv(io.StringIO(text)) == path(4)
    f = tmp_path / "g.csv"
    f.write_text(write_edge_csv(cycle(5)))
    assert read_edge_csv(f) == cycle(5)
    assert read_edge_csv(io.StringIO("0,1\n"), n=4) == Graph.from_edges(4, [(0, 1)])
    with pytest.raises(GraphError):
        read_edge_csv(io.StringIO("0,1\n1,x\n"))
    with pytest.raises(GraphError):
        read_edge_csv(io.StringIO("0,1,2\n"))


@settings(max_examples=200)
@given(graphs(8), st.randoms())
def test_relabel_preserves_structure(G, r):
    perm = list(range(G.n))
    r.shuffle(perm)
    H = G.relabel(perm)
    assert sorted(H.degrees()) == sorted(G.degrees())
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges())
