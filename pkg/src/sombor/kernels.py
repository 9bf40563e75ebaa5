"""Exhaustive scan over labelled graphs encoded as edge masks.

A mask on ``n`` vertices has one bit per vertex pair, in graph6 order
``(0,1), (0,2), (1,2), (0,3), ...``. For every mask in a range the scan
produces the Sombor index, connectedness, vertex connectivity, edge
connectivity and edge count.

Both backends compute the same quantities the same way:

* Sombor terms are summed in lexicographic edge order, matching
  :func:`sombor.invariants.sombor`, so totals are bit-identical.
* Vertex connectivity is the smallest vertex subset whose deletion
  disconnects the rest (``n-1`` for complete graphs).
* Edge connectivity is the smallest cut ``|E(S, V-S)|`` over vertex sets
  ``S`` containing vertex 0.

The numba kernel walks masks one at a time; the numpy kernel processes a
block of masks with vectorised bit operations.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._accel import HAVE_NUMBA, default_backend, njit

MAX_SCAN_N = 8
NUMPY_BLOCK = 1 << 16


@dataclass(frozen=True)
class Tables:
    n: int
    pu: np.ndarray
    pv: np.ndarray
    order: np.ndarray
    subsets: np.ndarray
    sub_ptr: np.ndarray
    sides: np.ndarray
    popc: np.ndarray


@lru_cache(maxsize=None)
def tables(n: int) -> Tables:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    pu = np.array([p[0] for p in pairs], dtype=np.int64)
    pv = np.array([p[1] for p in pairs], dtype=np.int64)
    order = np.array(sorted(range(len(pairs)), key=lambda b: pairs[b]), dtype=np.int64)
    full = (1 << n) - 1
    popc = np.array([bin(x).count("1") for x in range(1 << n)], dtype=np.int64)
    subsets = []
    sub_ptr = [0]
    for size in range(1, max(n - 1, 1)):
        subsets.extend(s for s in range(1 << n) if popc[s] == size)
        sub_ptr.append(len(subsets))
    sides = [s for s in range(1, full) if s & 1]
    return Tables(
        n, pu, pv, order,
        np.array(subsets, dtype=np.int64),
        np.array(sub_ptr, dtype=np.int64),
        np.array(sides, dtype=np.int64),
        popc,
    )


@dataclass
class ScanResult:
    n: int
    lo: int
    so: np.ndarray
    connected: np.ndarray
    kappa: np.ndarray
    kappa_edge: np.ndarray
    edges: np.ndarray

    @property
    def masks(self) -> np.ndarray:
        return np.arange(self.lo, self.lo + len(self.so), dtype=np.int64)


# numba backend


@njit
def _reach(rows, n, allowed, start):
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= rows[v]
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


@njit
def _scan_numba(n, lo, hi, pu, pv, order, subsets, sub_ptr, sides, popc,
                so, conn, kap, kape, ne):
    full = (1 << n) - 1
    npairs = pu.shape[0]
    rows = np.zeros(max(n, 1), dtype=np.int64)
    deg = np.zeros(max(n, 1), dtype=np.int64)
    for idx in range(hi - lo):
        mask = lo + idx
        for v in range(n):
            rows[v] = 0
        cnt = 0
        for b in range(npairs):
            if (mask >> b) & 1:
                rows[pu[b]] |= 1 << pv[b]
                rows[pv[b]] |= 1 << pu[b]
                cnt += 1
        ne[idx] = cnt
        for v in range(n):
            deg[v] = popc[rows[v]]
        total = 0.0
        for e in range(npairs):
            b = order[e]
            if (mask >> b) & 1:
                du = deg[pu[b]]
                dv = deg[pv[b]]
                total += math.sqrt(float(du * du + dv * dv))
        so[idx] = total

        connected = n >= 1 and _reach(rows, n, full, 1) == full
        conn[idx] = connected
        if not connected:
            kap[idx] = 0
            kape[idx] = 0
            continue
        if cnt == n * (n - 1) // 2:
            kap[idx] = n - 1
        else:
            best = n - 1
            for size in range(1, n - 1):
                found = False
                for p in range(sub_ptr[size - 1], sub_ptr[size]):
                    allowed = full & ~subsets[p]
                    start = allowed & -allowed
                    if _reach(rows, n, allowed, start) != allowed:
                        found = True
                        break
                if found:
                    best = size
                    break
            kap[idx] = best
        if n == 1:
            kape[idx] = 0
        else:
            best = n * n
            for p in range(sides.shape[0]):
                s = sides[p]
                cut = 0
                for v in range(n):
                    if (s >> v) & 1:
                        cut += popc[rows[v] & ~s & full]
                if cut < best:
                    best = cut
            kape[idx] = best


# numpy backend


def _np_reach(rows, n, allowed, start):
    reach = start.copy()
    frontier = start.copy()
    for _ in range(n):
        if not frontier.any():
            break
        nxt = np.zeros_like(reach)
        for v in range(n):
            hit = ((frontier >> v) & 1).astype(bool)
            nxt[hit] |= rows[v][hit]
        frontier = nxt & allowed & ~reach
        reach |= frontier
    return reach


def _scan_numpy(n, lo, hi, t: Tables):
    full = (1 << n) - 1
    masks = np.arange(lo, hi, dtype=np.int64)
    m = len(masks)
    rows = np.zeros((max(n, 1), m), dtype=np.int64)
    for b in range(len(t.pu)):
        bit = (masks >> b) & 1
        rows[t.pu[b]] |= bit << t.pv[b]
        rows[t.pv[b]] |= bit << t.pu[b]
    deg = t.popc[rows[:n]] if n else rows[:0]
    ne = np.zeros(m, dtype=np.int64)
    so = np.zeros(m, dtype=np.float64)
    for b in t.order:
        bit = ((masks >> b) & 1).astype(bool)
        ne += bit
        du = deg[t.pu[b]]
        dv = deg[t.pv[b]]
        term = np.sqrt((du * du + dv * dv).astype(np.float64))
        so = np.where(bit, so + term, so)

    kap = np.zeros(m, dtype=np.int8)
    kape = np.zeros(m, dtype=np.int8)
    if n == 0:
        return so, np.zeros(m, dtype=bool), kap, kape, ne.astype(np.int8)
    conn = _np_reach(rows, n, np.int64(full), np.ones(m, dtype=np.int64)) == full
    complete = ne == n * (n - 1) // 2
    kap[conn & complete] = n - 1

    pending = np.flatnonzero(conn & ~complete)
    sub_rows = rows[:, pending]
    for size in range(1, n - 1):
        if len(pending) == 0:
            break
        cut_found = np.zeros(len(pending), dtype=bool)
        for p in range(t.sub_ptr[size - 1], t.sub_ptr[size]):
            allowed = full & ~int(t.subsets[p])
            start = allowed & -allowed
            reach = _np_reach(sub_rows, n, np.int64(allowed),
                              np.full(len(pending), start, dtype=np.int64))
            cut_found |= reach != allowed
        kap[pending[cut_found]] = size
        pending = pending[~cut_found]
        sub_rows = sub_rows[:, ~cut_found]

    if n > 1:
        best = np.full(m, n * n, dtype=np.int64)
        for s in t.sides:
            s = int(s)
            cut = np.zeros(m, dtype=np.int64)
            for v in range(n):
                if (s >> v) & 1:
                    cut += t.popc[rows[v] & ~s & full]
            np.minimum(best, cut, out=best)
        kape[conn] = best[conn]
    return so, conn, kap, kape, ne.astype(np.int8)


def scan_range(n: int, lo: int, hi: int, backend: str | None = None) -> ScanResult:
    """Scan masks ``lo <= mask < hi`` on ``n`` vertices."""
    if not 0 <= n <= MAX_SCAN_N:
        raise ValueError(f"scan supports 0 <= n <= {MAX_SCAN_N}, got {n}")
    limit = 1 << (n * (n - 1) // 2)
    if not 0 <= lo <= hi <= limit:
        raise ValueError(f"mask range [{lo}, {hi}) outside [0, {limit})")
    backend = backend or default_backend()
    t = tables(n)
    m = hi - lo
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        so = np.zeros(m, dtype=np.float64)
        conn = np.zeros(m, dtype=np.bool_)
        kap = np.zeros(m, dtype=np.int8)
        kape = np.zeros(m, dtype=np.int8)
        ne = np.zeros(m, dtype=np.int8)
        _scan_numba(n, lo, hi, t.pu, t.pv, t.order, t.subsets, t.sub_ptr, t.sides,
                    t.popc, so, conn, kap, kape, ne)
        return ScanResult(n, lo, so, conn, kap, kape, ne)
    if backend == "numpy":
        parts = [_scan_numpy(n, a, min(a + NUMPY_BLOCK, hi), t)
                 for a in range(lo, hi, NUMPY_BLOCK)]
        if not parts:
            empty = np.zeros(0)
            return ScanResult(n, lo, empty, empty.astype(bool), empty.astype(np.int8),
                              empty.astype(np.int8), empty.astype(np.int8))
        cols = [np.concatenate(c) for c in zip(*parts)]
        return ScanResult(n, lo, *cols)
    raise ValueError(f"unknown backend {backend!r}")


def scan_all(n: int, backend: str | None = None, threads: int = 1) -> ScanResult:
    """Scan every mask on ``n`` vertices.

    With ``threads > 1`` the mask space is cut into contiguous ranges that
    are scanned concurrently and concatenated in range order, so the result
    does not depend on the thread count.
    """
    total = 1 << (n * (n - 1) // 2)
    if threads <= 1 or total < 4096:
        return scan_range(n, 0, total, backend)
    step = -(-total // (threads * 4))
    bounds = [(a, min(a + step, total)) for a in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda r: scan_range(n, r[0], r[1], backend), bounds))
    return ScanResult(
        n, 0,
        np.concatenate([p.so for p in parts]),
        np.concatenate([p.connected for p in parts]),
        np.concatenate([p.kappa for p in parts]),
        np.concatenate([p.kappa_edge for p in parts]),
        np.concatenate([p.edges for p in parts]),
    )


@lru_cache(maxsize=8)
def cached_scan(n: int, backend: str | None = None) -> ScanResult:
    from ._accel import default_threads

    return scan_all(n, backend, default_threads())
