"""Graph isomorphism for small graphs: degree prefilter, colour refinement,
then backtracking over colour-compatible vertex assignments."""

from __future__ import annotations

from collections import Counter

from .graph import Graph, iter_bits


def _refine(G1: Graph, G2: Graph) -> tuple[list[int], list[int]]:
    """Joint colour refinement so colours are comparable across both graphs."""
    c1 = G1.degrees()
    c2 = G2.degrees()
    ncolors = len(set(c1) | set(c2))
    while True:
        sig1 = [(c1[v], tuple(sorted(c1[u] for u in iter_bits(G1.rows[v])))) for v in range(G1.n)]
        sig2 = [(c2[v], tuple(sorted(c2[u] for u in iter_bits(G2.rows[v])))) for v in range(G2.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        c1 = [palette[s] for s in sig1]
        c2 = [palette[s] for s in sig2]
        if len(palette) == ncolors:
            return c1, c2
        ncolors = len(palette)


def find_isomorphism(G1: Graph, G2: Graph) -> list[int] | None:
    """A bijection ``f`` with ``uv in E(G1) <=> f(u)f(v) in E(G2)``, or ``None``."""
    if G1.n != G2.n or G1.num_edges != G2.num_edges:
        return None
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    c1, c2 = _refine(G1, G2)
    if Counter(c1) != Counter(c2):
        return None

    size = Counter(c1)
    order: list[int] = []
    placed = 0
    remaining = set(range(G1.n))
    while remaining:
        # prefer vertices tied to those already ordered, then rare colours
        v = min(remaining, key=lambda x: (-(G1.rows[x] & placed).bit_count(), size[c1[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for w in range(G2.n):
        by_color.setdefault(c2[w], []).append(w)

    mapping = [-1] * G1.n
    used = [False] * G2.n

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for w in by_color[c1[v]]:
            if used[w]:
                continue
            ok = True
            for x in order[:depth]:
                if ((G1.rows[v] >> x) & 1) != ((G2.rows[w] >> mapping[x]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return mapping if extend(0) else None


def isomorphic(G1: Graph, G2: Graph) -> bool:
    return find_isomorphism(G1, G2) is not None


def dedup_isomorphic(graphs) -> list[Graph]:
    """One representative per isomorphism class, in first-seen order."""
    reps: dict[tuple, list[Graph]] = {}
    out = []
    for G in graphs:
        key = (G.n, G.num_edges, tuple(sorted(G.degrees())))
        bucket = reps.setdefault(key, [])
        if not any(isomorphic(G, H) for H in bucket):
            bucket.append(G)
            out.append(G)
    return out
