"""Degree-based edge-additive indices, the Sombor index first among them."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

from .graph import Graph

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class EdgeFunction:
    """Symmetric weight ``w(d(u), d(v))`` summed over the edges of a graph."""

    name: str
    func: Callable[[int, int], float] = field(compare=False)

    def __call__(self, x: int, y: int) -> float:
        return self.func(x, y)


def _sombor_term(x: int, y: int) -> float:
    # integer sum of squares is exact; a single correctly rounded sqrt keeps
    # this bit-identical to the scan kernels
    return math.sqrt(x * x + y * y)


SOMBOR = EdgeFunction("sombor", _sombor_term)
FIRST_ZAGREB = EdgeFunction("first_zagreb", lambda x, y: float(x + y))
SECOND_ZAGREB = EdgeFunction("second_zagreb", lambda x, y: float(x * y))
RANDIC = EdgeFunction("randic", lambda x, y: 1.0 / math.sqrt(x * y))
HARMONIC = EdgeFunction("harmonic", lambda x, y: 2.0 / (x + y))
ABC = EdgeFunction("abc", lambda x, y: math.sqrt((x + y - 2) / (x * y)))

# Sombor plus the comparison set used by the QSPR table.
INDICES: dict[str, EdgeFunction] = {
    f.name: f for f in (SOMBOR, FIRST_ZAGREB, SECOND_ZAGREB, RANDIC, HARMONIC, ABC)
}


@dataclass(frozen=True)
class EdgeTerm:
    u: int
    v: int
    du: int
    dv: int
    value: float


@dataclass(frozen=True)
class IndexReport:
    index_name: str
    per_edge: tuple[EdgeTerm, ...]
    total: float

    def to_json(self, precision: int | None = None) -> dict:
        def fmt(x: float):
            return x if precision is None else round(x, precision)

        return {
            "name": self.index_name,
            "total": fmt(self.total),
            "edges": [
                {"u": t.u, "v": t.v, "du": t.du, "dv": t.dv, "term": fmt(t.value)}
                for t in self.per_edge
            ],
        }


def index_with(G: Graph, w: EdgeFunction) -> IndexReport:
    """Edge-by-edge evaluation of ``w``; summation follows ``G.edges()`` order."""
    deg = G.degrees()
    terms = []
    total = 0.0
    for u, v in G.edges():
        val = w(deg[u], deg[v])
        terms.append(EdgeTerm(u, v, deg[u], deg[v], val))
        total += val
    return IndexReport(w.name, tuple(terms), total)


def sombor(G: Graph) -> float:
    deg = G.degrees()
    total = 0.0
    for u, v in G.edges():
        total += _sombor_term(deg[u], deg[v])
    return total


def sombor_knk_closed(n: int, k: int) -> float:
    """Sombor index of ``k_n_k(n, k)`` without building the graph."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    h = SQRT2 / 2
    r = n - k - 1
    return (
        k * math.sqrt(k * k + (n - 1) ** 2)
        + k * r * math.sqrt((n - 1) ** 2 + (n - 2) ** 2)
        + h * k * (k - 1) * (n - 1)
        + h * r * (r - 1) * (n - 2)
    )


def sombor_path_closed(n: int) -> float:
    if n < 2:
        raise ValueError("path closed form needs n >= 2")
    if n == 2:
        return SQRT2
    return 2 * SQRT2 * (n - 3) + 2 * math.sqrt(5.0)


def sombor_star_closed(n: int) -> float:
    """``(n-1) * sqrt((n-1)^2 + 1)``, derived directly from the edge sum."""
    if n < 2:
        raise ValueError("star closed form needs n >= 2")
    return (n - 1) * math.sqrt((n - 1) ** 2 + 1)


def shift_gain(x: float, y: float, a: float) -> float:
    """``sqrt(x^2+y^2) - sqrt((x-a)^2+y^2)``: what an edge term gains when one
    endpoint degree rises from ``x-a`` to ``x`` against a partner of degree ``y``.
    Increasing in x, decreasing in y."""
    if not (x > a >= 1 and y > 0):
        raise ValueError(f"need x > a >= 1 and y > 0, got x={x}, y={y}, a={a}")
    return math.sqrt(x * x + y * y) - math.sqrt((x - a) ** 2 + y * y)


def hub_gap(x: float, y: float) -> float:
    """``sqrt(x^2+y^2) - sqrt(x^2+4) - sqrt(y^2+4)`` for hub degrees ``x, y >= 2``.

    The Sombor mass of an edge between hubs of degrees ``x`` and ``y`` minus
    that of the two edges left after subdividing it with a degree-2 vertex.
    It decreases in both arguments, so subdividing an edge between big hubs
    gains more and more as the hubs grow.
    """
    if x < 2 or y < 2:
        raise ValueError(f"need x, y >= 2, got x={x}, y={y}")
    return math.sqrt(x * x + y * y) - math.sqrt(x * x + 4) - math.sqrt(y * y + 4)
