"""Vertex and edge connectivity with cut certificates.

The exact values come from Menger's theorem on unit-capacity flow networks:

* vertex connectivity: minimum over non-adjacent pairs ``(s, t)`` of the
  number of internally vertex-disjoint ``s-t`` paths, computed on the
  vertex-split network (``v_in -> v_out`` with capacity 1);
* edge connectivity: minimum over ``t != 0`` of the number of edge-disjoint
  ``0-t`` paths.

The complete graph ``K_n`` has vertex connectivity ``n-1`` and no vertex cut;
its certificate is ``None``. Disconnected graphs get ``0`` with an empty cut.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, iter_bits

INF = 1 << 30


@dataclass(frozen=True)
class CutCertificate:
    kind: str  # "vertex" or "edge"
    members: frozenset
    separated_pair: tuple[int, int]

    def to_json(self) -> dict:
        members = sorted(self.members)
        return {
            "kind": self.kind,
            "members": [list(m) for m in members] if self.kind == "edge" else members,
            "separated_pair": list(self.separated_pair),
        }

    def separates(self, G: Graph) -> bool:
        """True iff deleting the members leaves ``s`` and ``t`` in different components."""
        s, t = self.separated_pair
        if self.kind == "vertex":
            if s in self.members or t in self.members:
                return False
            rows = [r if v not in self.members else 0 for v, r in enumerate(G.rows)]
            drop = sum(1 << v for v in self.members)
            rows = [r & ~drop for r in rows]
        else:
            rows = list(G.rows)
            for u, v in self.members:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
        reach = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~reach
            reach |= frontier
        return not (reach >> t) & 1


class _FlowNetwork:
    """Residual capacities as dict-of-dicts; augmenting paths by BFS."""

    def __init__(self, size: int):
        self.cap = [dict() for _ in range(size)]

    def add_arc(self, a: int, b: int, c: int) -> None:
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, s: int, t: int, limit: int = INF) -> int:
        flow = 0
        while flow < limit:
            parent = {s: None}
            queue = deque([s])
            while queue and t not in parent:
                a = queue.popleft()
                for b, c in self.cap[a].items():
                    if c > 0 and b not in parent:
                        parent[b] = a
                        queue.append(b)
            if t not in parent:
                break
            b = t
            while parent[b] is not None:
                a = parent[b]
                self.cap[a][b] -= 1
                self.cap[b][a] += 1
                b = a
            flow += 1
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen


def local_vertex_connectivity(G: Graph, s: int, t: int) -> tuple[int, frozenset]:
    """Max number of internally disjoint ``s-t`` paths for non-adjacent ``s, t``,
    with a minimum separating vertex set."""
    if G.has_edge(s, t):
        raise ValueError("local vertex connectivity needs a non-adjacent pair")
    net = _FlowNetwork(2 * G.n)
    for v in range(G.n):
        net.add_arc(2 * v, 2 * v + 1, INF if v in (s, t) else 1)
    for u, v in G.edges():
        net.add_arc(2 * u + 1, 2 * v, INF)
        net.add_arc(2 * v + 1, 2 * u, INF)
    value = net.max_flow(2 * s + 1, 2 * t)
    side = net.reachable(2 * s + 1)
    cut = frozenset(v for v in range(G.n) if 2 * v in side and 2 * v + 1 not in side)
    return value, cut


def local_edge_connectivity(G: Graph, s: int, t: int) -> tuple[int, frozenset]:
    net = _FlowNetwork(G.n)
    for u, v in G.edges():
        net.add_arc(u, v, 1)
        net.add_arc(v, u, 1)
    value = net.max_flow(s, t)
    side = net.reachable(s)
    cut = frozenset((u, v) for u, v in G.edges() if (u in side) != (v in side))
    return value, cut


def _disconnected_pair(G: Graph) -> tuple[int, int] | None:
    comps = components(G)
    if len(comps) < 2:
        return None
    return (comps[0] & -comps[0]).bit_length() - 1, (comps[1] & -comps[1]).bit_length() - 1


def vertex_connectivity(G: Graph) -> tuple[int, CutCertificate | None]:
    """Exact vertex connectivity and a minimum vertex cut (``None`` for ``K_n``)."""
    if G.n == 0:
        return 0, None
    pair = _disconnected_pair(G)
    if pair is not None:
        return 0, CutCertificate("vertex", frozenset(), pair)
    if G.is_complete():
        return G.n - 1, None
    best = None
    for s, t in G.non_edges():
        value, cut = local_vertex_connectivity(G, s, t)
        if best is None or value < best[0]:
            best = (value, cut, (s, t))
    value, cut, pair = best
    return value, CutCertificate("vertex", cut, pair)


def edge_connectivity(G: Graph) -> tuple[int, CutCertificate | None]:
    """Exact edge connectivity and a minimum edge cut (``None`` when ``n <= 1``)."""
    if G.n <= 1:
        return 0, None
    pair = _disconnected_pair(G)
    if pair is not None:
        return 0, CutCertificate("edge", frozenset(), pair)
    best = None
    for t in range(1, G.n):
        value, cut = local_edge_connectivity(G, 0, t)
        if best is None or value < best[0]:
            best = (value, cut, (0, t))
    value, cut, pair = best
    return value, CutCertificate("edge", cut, pair)


def kappa(G: Graph) -> int:
    return vertex_connectivity(G)[0]


def kappa_edge(G: Graph) -> int:
    return edge_connectivity(G)[0]


def _split(rows: list[int]) -> bool:
    """Whether the vertices with non-negative rows form a disconnected graph."""
    alive = sum(1 << v for v, r in enumerate(rows) if r >= 0)
    if alive == 0:
        return False
    reach = frontier = alive & -alive
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & alive & ~reach
        reach |= frontier
    return reach != alive


def brute_force_kappa(G: Graph, max_n: int = 12) -> int:
    """Smallest vertex subset whose deletion disconnects ``G``, by enumeration."""
    if G.n > max_n:
        raise ValueError(f"brute-force vertex connectivity limited to n <= {max_n}")
    if G.n == 0:
        return 0
    for size in range(0, G.n - 1):
        for removed in combinations(range(G.n), size):
            drop = sum(1 << v for v in removed)
            rows = [-1 if (drop >> v) & 1 else r & ~drop for v, r in enumerate(G.rows)]
            if _split(rows):
                return size
    return G.n - 1


def brute_force_kappa_edge(G: Graph, max_edges: int = 20, max_n: int = 16) -> int:
    """Smallest edge subset whose deletion disconnects ``G``.

    Up to ``max_edges`` edges the edge subsets themselves are enumerated by
    increasing size. Larger graphs fall back to enumerating every vertex set
    ``S`` containing vertex 0 and taking the smallest ``|E(S, V-S)|``, which
    is the same minimum (any minimal disconnecting edge set is such a cut).
    """
    if G.n <= 1:
        return 0
    edges = G.edges()
    if len(edges) <= max_edges:
        for size in range(0, len(edges) + 1):
            for removed in combinations(edges, size):
                rows = list(G.rows)
                for u, v in removed:
                    rows[u] &= ~(1 << v)
                    rows[v] &= ~(1 << u)
                if _split(rows):
                    return size
        raise AssertionError("unreachable: removing every edge disconnects n >= 2")
    if G.n > max_n:
        raise ValueError(f"brute-force edge connectivity limited to n <= {max_n} "
                         f"beyond {max_edges} edges")
    full = (1 << G.n) - 1
    best = len(edges)
    for side in range(1, full, 2):
        cut = sum((G.rows[v] & ~side).bit_count() for v in iter_bits(side))
        best = min(best, cut)
    return best


def in_class_v(G: Graph, k: int) -> bool:
    """Membership of the class of ``n``-vertex graphs with vertex connectivity ``<= k``."""
    if not 1 <= k <= G.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={G.n}, k={k}")
    return kappa(G) <= k


def in_class_e(G: Graph, k: int) -> bool:
    if not 1 <= k <= G.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={G.n}, k={k}")
    return kappa_edge(G) <= k
