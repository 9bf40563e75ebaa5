"""Graph surgeries and the Sombor comparisons attached to them.

* :func:`neighbor_switch` moves ``t`` private neighbours of ``u`` over to a
  non-adjacent vertex ``v``. When ``d(u) <= d(v)`` this strictly raises the
  Sombor index.
* :func:`check_edge_addition` measures the Sombor gain of every missing edge.
* :func:`check_split_join` compares ``K_i v H v K_m`` against the lopsided
  ``K_1 v H v K_{i+m-1}``.
* :func:`alpha_switch_search` scans a two-hub family in which subdividing the
  hub-hub edge raises the Sombor index once both hubs are large.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graph import Graph, complete, g_split, iter_bits, random_connected_graph, shortest_path
from .invariants import sombor

STRICT = 1e-9


class SwitchError(ValueError):
    pass


@dataclass(frozen=True)
class SwitchSpec:
    u: int
    v: int
    moved: frozenset[int]
    avoided_path: tuple[int, ...] | None = None


def resolve_path(G: Graph, spec: SwitchSpec) -> tuple[int, ...]:
    if spec.avoided_path is not None:
        return spec.avoided_path
    p = shortest_path(G, spec.u, spec.v)
    if p is None:
        raise SwitchError(f"no path between {spec.u} and {spec.v}")
    return tuple(p)


def validate_switch(G: Graph, spec: SwitchSpec) -> tuple[int, ...]:
    """Check ``spec`` against ``G``; returns the u-v path actually used."""
    u, v = spec.u, spec.v
    if u == v:
        raise SwitchError("u and v must differ")
    if G.has_edge(u, v):
        raise SwitchError(f"u={u} and v={v} are adjacent")
    if not spec.moved:
        raise SwitchError("at least one neighbour must move")
    p = resolve_path(G, spec)
    if len(p) < 2 or p[0] != u or p[-1] != v:
        raise SwitchError(f"path {p} does not run from {u} to {v}")
    for a, b in zip(p, p[1:]):
        if not G.has_edge(a, b):
            raise SwitchError(f"path {p} uses missing edge ({a}, {b})")
    on_path = set(p)
    for w in spec.moved:
        if not G.has_edge(u, w):
            raise SwitchError(f"moved vertex {w} is not a neighbour of u={u}")
        if G.has_edge(v, w):
            raise SwitchError(f"moved vertex {w} is already a neighbour of v={v}")
        if w in on_path:
            raise SwitchError(f"moved vertex {w} lies on the u-v path {p}")
    return p


def neighbor_switch(G: Graph, spec: SwitchSpec) -> Graph:
    """``G - {u w : w in moved} + {v w : w in moved}``."""
    validate_switch(G, spec)
    rows = list(G.rows)
    for w in spec.moved:
        rows[spec.u] &= ~(1 << w)
        rows[w] &= ~(1 << spec.u)
        rows[spec.v] |= 1 << w
        rows[w] |= 1 << spec.v
    return Graph(G.n, tuple(rows))


def random_switch_case(rng: random.Random, n_min: int = 3, n_max: int = 10,
                       max_tries: int = 10_000) -> tuple[Graph, SwitchSpec]:
    """A connected graph with a valid switch spec satisfying ``d(u) <= d(v)``.

    The moved set is a uniformly random non-empty subset of the eligible
    neighbours of ``u`` (those off ``N(v)`` and off the shortest u-v path).
    """
    for _ in range(max_tries):
        G = random_connected_graph(rng.randint(n_min, n_max), rng)
        pairs = [(a, b) for a, b in G.non_edges()]
        if not pairs:
            continue
        a, b = rng.choice(pairs)
        u, v = (a, b) if G.degree(a) <= G.degree(b) else (b, a)
        if G.degree(u) == G.degree(v) and rng.random() < 0.5:
            u, v = v, u
        p = shortest_path(G, u, v)
        eligible = [w for w in iter_bits(G.rows[u] & ~G.rows[v]) if w not in p]
        if not eligible:
            continue
        t = rng.randint(1, len(eligible))
        moved = frozenset(rng.sample(eligible, t))
        return G, SwitchSpec(u, v, moved, tuple(p))
    raise RuntimeError("could not draw a valid switch case")


@dataclass(frozen=True)
class EdgeAdditionReport:
    margins: dict[tuple[int, int], float]

    @property
    def min_margin(self) -> float | None:
        return min(self.margins.values(), default=None)

    @property
    def holds(self) -> bool:
        return all(m > STRICT for m in self.margins.values())


def check_edge_addition(G: Graph) -> EdgeAdditionReport:
    """Sombor gain ``SO(G+uv) - SO(G)`` for every non-edge ``uv``.

    Complete graphs give an empty (vacuously holding) report.
    """
    base = sombor(G)
    return EdgeAdditionReport({(u, v): sombor(G.add_edge(u, v)) - base for u, v in G.non_edges()})


@dataclass(frozen=True)
class SplitJoinReport:
    i: int
    k: int
    m: int
    so_split: float
    so_lopsided: float

    @property
    def n(self) -> int:
        return self.i + self.k + self.m

    @property
    def margin(self) -> float:
        return self.so_lopsided - self.so_split

    @property
    def holds(self) -> bool:
        return self.margin > STRICT


def check_split_join(i: int, hub: Graph, m: int) -> SplitJoinReport:
    """Compare ``K_i v hub v K_m`` with ``K_1 v hub v K_{i+m-1}`` for ``2 <= i <= m``."""
    if not 2 <= i <= m:
        raise ValueError(f"need 2 <= i <= m, got i={i}, m={m}")
    split = g_split(i, hub, m)
    lopsided = g_split(1, hub, i + m - 1)
    return SplitJoinReport(i, hub.n, m, sombor(split), sombor(lopsided))


# two-hub subdivision family


@dataclass(frozen=True)
class AlphaPair:
    hub_degrees: tuple[int, int]
    clique_size: int
    gamma: Graph
    gamma_alpha: Graph
    so_gamma: float
    so_gamma_alpha: float

    @property
    def gain(self) -> float:
        return self.so_gamma_alpha - self.so_gamma

    @property
    def reversed(self) -> bool:
        return self.gain > STRICT


def build_alpha_pair(dx: int, dy: int, clique_size: int = 3) -> AlphaPair:
    """Build the pair ``(Gamma, Gamma_alpha)`` for hub degrees ``dx, dy``.

    ``Gamma``: hubs ``x = 0`` and ``y = 1`` are adjacent. ``x`` carries
    ``dx - 1`` pendant paths of length 2 and ``y`` carries ``dy - 1``. The
    first path on ``x`` ends in a vertex ``c`` of a clique ``K_m``
    (``m = clique_size``); another clique vertex ``z`` has a pendant leaf
    ``w``.

    ``Gamma_alpha``: the leaf ``w`` is unhooked from ``z`` and used to
    subdivide the hub edge, giving ``x - w - y``.

    Both graphs have the same order, the same hub degrees and the same number
    of cut vertices (``w`` becomes one, ``z`` stops being one). The Sombor
    difference is ``-hub_gap(dx, dy)`` minus a loss that depends only on
    ``m``, so it turns positive once the hubs are large enough.
    """
    if dx < 2 or dy < 2:
        raise ValueError("hub degrees must be at least 2")
    if clique_size < 3:
        raise ValueError("clique_size must be at least 3")
    x, y = 0, 1
    edges = [(x, y)]
    nxt = 2

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    a0 = fresh()
    clique = [fresh() for _ in range(clique_size)]
    c, z = clique[0], clique[1]
    w = fresh()
    edges += [(x, a0), (a0, c), (z, w)]
    edges += [(p, q) for i, p in enumerate(clique) for q in clique[i + 1:]]
    for hub, count in ((x, dx - 2), (y, dy - 1)):
        for _ in range(count):
            a, b = fresh(), fresh()
            edges += [(hub, a), (a, b)]
    gamma = Graph.from_edges(nxt, edges)
    gamma_alpha = gamma.remove_edge(x, y).remove_edge(z, w).add_edge(x, w).add_edge(w, y)
    return AlphaPair((dx, dy), clique_size, gamma, gamma_alpha,
                     sombor(gamma), sombor(gamma_alpha))


def donor_loss(clique_size: int) -> float:
    """Sombor lost inside the clique when ``z`` gives up its pendant leaf."""
    m = clique_size

    def t(a: int, b: int) -> float:
        return math.sqrt(a * a + b * b)

    # z: degree m -> m-1; c: degree m (fixed); other clique vertices: m-1
    return (t(m, 1)
            + (t(m, m) - t(m - 1, m))
            + (m - 2) * (t(m, m - 1) - t(m - 1, m - 1)))


def alpha_family(degree_min: int, degree_max: int,
                 clique_sizes=(3, 4, 5)) -> list[AlphaPair]:
    if not 2 <= degree_min <= degree_max:
        raise ValueError("need 2 <= degree_min <= degree_max")
    return [build_alpha_pair(dx, dy, m)
            for m in clique_sizes
            for dx in range(degree_min, degree_max + 1)
            for dy in range(dx, degree_max + 1)]


def alpha_switch_search(degree_min: int, degree_max: int,
                        clique_sizes=(3, 4, 5)) -> list[AlphaPair]:
    """Members of the family where subdividing the hub edge raises the index."""
    return [p for p in alpha_family(degree_min, degree_max, clique_sizes) if p.reversed]
