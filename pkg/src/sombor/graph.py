"""Simple undirected graphs stored as per-vertex neighbour bitsets.

Vertices are ``0..n-1``. A :class:`Graph` is immutable; every editing
operation returns a new instance. Row ``v`` of the adjacency is a Python
``int`` whose bit ``u`` is set iff ``uv`` is an edge.

Canonical labelings of the named families:

* ``path(n)``: edges ``(i, i+1)``.
* ``star(n)``: centre ``0``, leaves ``1..n-1``.
* ``cycle(n)``: path plus ``(0, n-1)``.
* ``join`` / ``disjoint_union``: the second operand is shifted by ``G1.n``.
* ``k_n_k(n, k)``: the hub clique ``K_k`` is ``0..k-1``, the lone vertex is
  ``k`` and the big clique ``K_{n-k-1}`` is ``k+1..n-1``.
"""

from __future__ import annotations

import csv
import io
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path


class GraphError(ValueError):
    """Invalid graph operation (bad index, self-loop, duplicate edge...)."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Inverse of :meth:`to_mask`; bit ``b`` is the ``b``-th pair in graph6 order."""
        rows = [0] * n
        b = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> b) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                b += 1
        if mask >> b:
            raise GraphError(f"mask has bits beyond the {b} vertex pairs of n={n}")
        return cls(n, tuple(rows))

    def to_mask(self) -> int:
        mask = 0
        b = 0
        for j in range(1, self.n):
            row = self.rows[j]
            for i in range(j):
                if (row >> i) & 1:
                    mask |= 1 << b
                b += 1
        return mask

    # queries

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def non_edges(self) -> list[tuple[int, int]]:
        full = (1 << self.n) - 1
        out = []
        for u, row in enumerate(self.rows):
            missing = (full & ~row) >> (u + 1)
            for v in iter_bits(missing):
                out.append((u, u + 1 + v))
        return out

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    # editing (returns new graphs)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def delete_vertices(self, removed: Iterable[int]) -> Graph:
        """Induced subgraph on the remaining vertices, relabelled in order."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def add_edge(G: Graph, u: int, v: int) -> Graph:
    return G.add_edge(u, v)


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    return G.remove_edge(u, v)


def degree(G: Graph, v: int) -> int:
    return G.degree(v)


# named families


def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    return Graph(G1.n + G2.n, G1.rows + tuple(r << shift for r in G2.rows))


def join(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    left = ((1 << G2.n) - 1) << shift
    right = (1 << G1.n) - 1
    rows = tuple(r | left for r in G1.rows) + tuple((r << shift) | right for r in G2.rows)
    return Graph(G1.n + G2.n, rows)


def k_n_k(n: int, k: int) -> Graph:
    """``K_k`` joined to the disjoint union of ``K_1`` and ``K_{n-k-1}``.

    The lone vertex has degree ``k``, the hub clique vertices ``n-1`` and the
    big clique vertices ``n-2``. For ``k = n-1`` this is ``K_n``.
    """
    if not 1 <= k <= n - 1:
        raise GraphError(f"k_n_k needs 1 <= k <= n-1, got n={n}, k={k}")
    return g_split(1, complete(k), n - k - 1)


def g_split(i: int, hub: Graph, m: int) -> Graph:
    """``K_i`` and ``K_m`` side by side, both joined to every vertex of ``hub``.

    Labels: hub vertices first, then ``K_i``, then ``K_m``. ``m = 0`` is
    allowed so that ``k_n_k(n, n-1)`` is expressible.
    """
    if i < 1 or m < 0 or hub.n < 1:
        raise GraphError(f"g_split needs i >= 1, m >= 0 and a non-empty hub (i={i}, m={m})")
    sides = complete(i) if m == 0 else disjoint_union(complete(i), complete(m))
    return join(hub, sides)


# reachability


def components(G: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by lowest vertex."""
    out = []
    unseen = (1 << G.n) - 1
    while unseen:
        seed = unseen & -unseen
        reach = frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.rows[v]
            frontier = nxt & ~reach
            reach |= frontier
        out.append(reach)
        unseen &= ~reach
    return out


def component_count(G: Graph) -> int:
    return len(components(G))


def is_connected(G: Graph) -> bool:
    """True iff exactly one component. The empty graph (n=0) is not connected."""
    return component_count(G) == 1


def shortest_path(G: Graph, s: int, t: int) -> list[int] | None:
    """BFS path from ``s`` to ``t``; ties broken by lowest vertex index."""
    parent = {s: s}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            out = [t]
            while out[-1] != s:
                out.append(parent[out[-1]])
            return out[::-1]
        for w in iter_bits(G.rows[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def cut_vertices(G: Graph) -> list[int]:
    """Vertices whose deletion increases the number of components."""
    base = component_count(G)
    return [v for v in range(G.n) if component_count(G.delete_vertices([v])) > base]


# graph6


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def write_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for c in range(0, len(bits), 6):
        val = 0
        for bit in bits[c:c + 6]:
            val = (val << 1) | bit
        body.append(chr(val + 63))
    return _encode_size(G.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = 10
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", start + pos)

    def num(off: int, count: int) -> int:
        if len(data) < off + count:
            raise Graph6Error("truncated size header", start + len(data))
        val = 0
        for ch in data[off:off + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if data[0] != "~":
        n, body_at = ord(data[0]) - 63, 1
    elif len(data) > 1 and data[1] == "~":
        n, body_at = num(2, 6), 8
    else:
        n, body_at = num(1, 3), 4

    npairs = n * (n - 1) // 2
    need = -(-npairs // 6)
    body = data[body_at:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}",
            start + body_at + min(len(body), need),
        )
    rows = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[b // 6]) - 63
            if (byte >> (5 - b % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            b += 1
    if need:
        pad = 6 * need - npairs
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", start + body_at + need - 1)
    return Graph(n, tuple(rows))


# edge-list CSV


def read_edge_csv(source: str | Path | io.TextIOBase, n: int | None = None) -> Graph:
    """Read ``u,v`` lines. Blank lines and ``#`` comments are skipped; a
    non-numeric first row is taken as a header. ``n`` defaults to the
    largest index plus one."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    edges = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise GraphError(f"line {lineno}: expected 'u,v', got {row!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            if not edges and lineno == 1:
                continue
            raise GraphError(f"line {lineno}: non-integer vertex in {row!r}") from None
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def write_edge_csv(G: Graph) -> str:
    return "".join(f"{u},{v}\n" for u, v in G.edges())


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn with ``rng`` (a ``random.Random``)."""
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, rng, p: float | None = None, max_tries: int = 1000) -> Graph:
    """Rejection-sample a connected ``G(n, p)``; ``p`` drawn uniformly when omitted."""
    for _ in range(max_tries):
        q = rng.uniform(0.2, 1.0) if p is None else p
        G = random_graph(n, q, rng)
        if is_connected(G):
            return G
    raise RuntimeError(f"no connected sample for n={n} after {max_tries} tries")
