"""Exhaustive extremal search over connected graphs of bounded connectivity.

Everything here sits on :func:`sombor.kernels.cached_scan`, which evaluates
every labelled graph on ``n`` vertices once. Class membership, the Sombor
optimum and the set of optimal graphs are then array selections; only the
optimal graphs are materialised and reduced up to isomorphism.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph import Graph, k_n_k, path, star, write_graph6
from .invariants import sombor_knk_closed, sombor_path_closed, sombor_star_closed
from .isomorphism import dedup_isomorphic, isomorphic
from .transforms import STRICT, check_split_join, neighbor_switch, random_switch_case

TOL = 1e-9
MAX_ENUM_N = 8
MAX_EXTREMAL_N = 7


def enumerate_connected(n: int, backend: str | None = None) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices, by ascending edge mask."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration limited to 1 <= n <= {MAX_ENUM_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    step = 1 << 16
    for lo in range(0, total, step):
        chunk = kernels.scan_range(n, lo, min(lo + step, total), backend)
        for mask in np.flatnonzero(chunk.connected):
            yield Graph.from_mask(n, lo + int(mask))


@dataclass
class ExtremalReport:
    n: int
    k: int
    mode: str
    objective: str
    best_value: float
    argbest: list[str]
    theorem_value: float
    agrees: bool
    class_size: int = 0
    optimal_labelled: int = 0
    runner_up: float | None = None

    @property
    def gap(self) -> float | None:
        if self.runner_up is None:
            return None
        return abs(self.best_value - self.runner_up)

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "mode": self.mode, "objective": self.objective,
            "best_value": self.best_value, "theorem_value": self.theorem_value,
            "agrees": self.agrees, "argbest": self.argbest,
            "class_size": self.class_size, "optimal_labelled": self.optimal_labelled,
            "runner_up": self.runner_up,
        }


def class_selector(scan: kernels.ScanResult, k: int, mode: str) -> np.ndarray:
    if mode == "vertex":
        return scan.connected & (scan.kappa <= k)
    if mode == "edge":
        return scan.connected & (scan.kappa_edge <= k)
    raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def extremal_in_class(n: int, k: int, mode: str = "vertex", objective: str = "max",
                      backend: str | None = None) -> ExtremalReport:
    """Largest or smallest Sombor index over connected ``n``-vertex graphs with
    vertex (or edge) connectivity at most ``k``.

    ``agrees`` is true when the optimum matches the closed form (``K_n^k`` for
    ``max``, the path for ``min``) within ``1e-9`` and every optimal graph is
    isomorphic to that extremal graph.
    """
    if not 2 <= n <= MAX_EXTREMAL_N:
        raise ValueError(f"exhaustive extremal search needs 2 <= n <= {MAX_EXTREMAL_N}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    scan = kernels.cached_scan(n, backend)
    sel = np.flatnonzero(class_selector(scan, k, mode))
    values = scan.so[sel]
    best = values.max() if objective == "max" else values.min()
    tied = np.abs(values - best) <= TOL
    rest = values[~tied]
    runner_up = None
    if rest.size:
        runner_up = float(rest.max() if objective == "max" else rest.min())
    optima = dedup_isomorphic(Graph.from_mask(n, int(m)) for m in sel[tied])
    if objective == "max":
        expected_graph, theorem_value = k_n_k(n, k), sombor_knk_closed(n, k)
    else:
        expected_graph, theorem_value = path(n), sombor_path_closed(n)
    agrees = (abs(best - theorem_value) <= TOL
              and len(optima) == 1 and isomorphic(optima[0], expected_graph))
    return ExtremalReport(n, k, mode, objective, float(best), [write_graph6(G) for G in optima],
                          theorem_value, agrees, int(sel.size), int(tied.sum()), runner_up)


# claim harness


@dataclass
class ClaimResult:
    claim: str
    scope: str
    passed: bool
    margin: float | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"claim": self.claim, "scope": self.scope, "passed": self.passed,
                "margin": self.margin, "detail": self.detail}


def check_tree_bounds(n: int, backend: str | None = None) -> ClaimResult:
    """Path is the unique minimum and star the unique maximum among trees."""
    scan = kernels.cached_scan(n, backend)
    trees = np.flatnonzero(scan.connected & (scan.edges == n - 1))
    values = scan.so[trees]
    lo, hi = sombor_path_closed(n), sombor_star_closed(n)
    ok = bool(values.min() >= lo - TOL and values.max() <= hi + TOL)
    at_lo = [Graph.from_mask(n, int(m)) for m in trees[np.abs(values - lo) <= TOL]]
    at_hi = [Graph.from_mask(n, int(m)) for m in trees[np.abs(values - hi) <= TOL]]
    ok &= all(isomorphic(G, path(n)) for G in at_lo) and bool(at_lo)
    ok &= all(isomorphic(G, star(n)) for G in at_hi) and bool(at_hi)
    inner = values[(np.abs(values - lo) > TOL) & (np.abs(values - hi) > TOL)]
    margin = None
    if inner.size:
        margin = float(min(inner.min() - lo, hi - inner.max()))
    return ClaimResult("tree bounds: SO(P_n) <= SO(T) <= SO(S_n)", f"n={n}, {trees.size} labelled trees",
                       ok, margin)


def edge_addition_margin(n: int, backend: str | None = None) -> float | None:
    """Smallest ``SO(G+uv) - SO(G)`` over connected ``G`` on ``n`` vertices and non-edges ``uv``."""
    scan = kernels.cached_scan(n, backend)
    masks = scan.masks
    best = None
    for b in range(n * (n - 1) // 2):
        sel = scan.connected & (((masks >> b) & 1) == 0)
        if not sel.any():
            continue
        gain = scan.so[masks[sel] | (1 << b)] - scan.so[sel]
        low = float(gain.min())
        best = low if best is None else min(best, low)
    return best


def check_neighbor_switch(samples: int, seed: int = 0, n_max: int = 10) -> ClaimResult:
    """Random switch cases with ``d(u) <= d(v)`` must strictly raise the index."""
    from .invariants import sombor

    rng = random.Random(seed)
    worst = None
    failures = 0
    for _ in range(samples):
        G, spec = random_switch_case(rng, n_max=n_max)
        gain = sombor(neighbor_switch(G, spec)) - sombor(G)
        worst = gain if worst is None else min(worst, gain)
        failures += gain <= STRICT
    return ClaimResult("neighbour switch toward higher degree raises SO",
                       f"{samples} random cases, n <= {n_max}, seed {seed}",
                       failures == 0, worst, f"{failures} failures")


def split_join_sweep(k_max: int = 3, n_max: int = 8) -> ClaimResult:
    worst = None
    count = 0
    for k in range(1, k_max + 1):
        npairs = k * (k - 1) // 2
        for mask in range(1 << npairs):
            hub = Graph.from_mask(k, mask)
            for i in range(2, n_max):
                for m in range(i, n_max - i - k + 1):
                    r = check_split_join(i, hub, m)
                    count += 1
                    worst = r.margin if worst is None else min(worst, r.margin)
    return ClaimResult("balanced split join below lopsided join",
                       f"{count} cases, hub order <= {k_max}, n <= {n_max}",
                       worst is not None and worst > STRICT, worst)


def verify_all(n_max: int = 7, switch_samples: int = 10_000, seed: int = 0,
               backend: str | None = None) -> list[ClaimResult]:
    """Run every extremal and monotonicity claim exhaustively up to ``n_max``."""
    if not 4 <= n_max <= MAX_EXTREMAL_N:
        raise ValueError(f"n_max must be in [4, {MAX_EXTREMAL_N}]")
    out = []
    for n in range(4, n_max + 1):
        out.append(check_tree_bounds(n, backend))
    for n in range(3, min(n_max, 6) + 1):
        m = edge_addition_margin(n, backend)
        out.append(ClaimResult("adding an edge raises SO", f"connected graphs, n={n}",
                               m is not None and m > STRICT, m))
    out.append(check_neighbor_switch(switch_samples, seed))
    out.append(split_join_sweep(3, 8))
    for n in range(4, n_max + 1):
        for mode, label in (("vertex", "vertex connectivity"), ("edge", "edge connectivity")):
            prev = None
            monotone = True
            for k in range(1, n):
                hi = extremal_in_class(n, k, mode, "max", backend)
                out.append(ClaimResult(f"max SO over {label} <= k is K_n^k",
                                       f"n={n}, k={k}", hi.agrees, hi.gap,
                                       f"best={hi.best_value:.9f}, closed={hi.theorem_value:.9f}"))
                lo = extremal_in_class(n, k, mode, "min", backend)
                out.append(ClaimResult(f"min SO over {label} <= k is P_n",
                                       f"n={n}, k={k}", lo.agrees, lo.gap,
                                       f"best={lo.best_value:.9f}, closed={lo.theorem_value:.9f}"))
                if prev is not None and hi.best_value < prev - TOL:
                    monotone = False
                prev = hi.best_value
            out.append(ClaimResult(f"max SO non-decreasing in k ({label})", f"n={n}", monotone))
    return out
