"""Pure numpy / stdlib fallback for the JIT kernels.

Same contracts and tie-breaking as the numba backend: heap entries
compare by (key, vertex index), DP ties keep the lowest predecessor.
The subset DP is vectorized one popcount level at a time so it stays
usable at n = 20 without compiled code.
"""

import heapq
import math

import numpy as np

INF = np.inf


def dijkstra_csr(indptr, targets, weights, source):
    n = indptr.size - 1
    dist = np.full(n, INF)
    pred = np.full(n, -1, np.int64)
    dist[source] = 0.0
    heap = [(0.0, int(source))]
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue  # stale entry, a cheaper one was pushed later
        for e in range(indptr[u], indptr[u + 1]):
            v = int(targets[e])
            nd = d + weights[e]
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (float(nd), v))
    return dist, pred


def astar_csr(indptr, targets, weights, xs, ys, source, target, hkind):
    n = indptr.size - 1
    g = np.full(n, INF)
    pred = np.full(n, -1, np.int64)
    tx = xs[target]
    ty = ys[target]

    def h(v):
        dx = xs[v] - tx
        dy = ys[v] - ty
        if hkind == 1:
            return math.hypot(dx, dy)
        if hkind == 2:
            return abs(dx) + abs(dy)
        return 0.0

    g[source] = 0.0
    heap = [(h(source), int(source), 0.0)]
    while heap:
        _, u, gu = heapq.heappop(heap)
        if gu != g[u]:
            continue
        if u == target:
            break
        for e in range(indptr[u], indptr[u + 1]):
            v = int(targets[e])
            ng = gu + weights[e]
            if ng < g[v]:
                g[v] = ng
                pred[v] = u
                heapq.heappush(heap, (float(ng + h(v)), v, float(ng)))
    return g[target], pred


def held_karp(dist):
    n = dist.shape[0]
    full = 1 << n
    dp = np.full((full, n), INF)
    parent = np.full((full, n), -1, np.int8)
    dp[1, 0] = 0.0
    masks = np.arange(full, dtype=np.int64)
    popcount = np.zeros(full, np.int64)
    for b in range(n):
        popcount += (masks >> b) & 1
    for level in range(2, n + 1):
        level_masks = masks[((masks & 1) == 1) & (popcount == level)]
        for j in range(1, n):
            sel = level_masks[((level_masks >> j) & 1) == 1]
            if sel.size == 0:
                continue
            prev = sel ^ (1 << j)
            # dp[m, k] is inf whenever k is outside m, so no extra masking
            cand = dp[prev] + dist[:, j]
            best_k = np.argmin(cand, axis=1)
            dp[sel, j] = cand[np.arange(sel.size), best_k]
            parent[sel, j] = best_k
    last = full - 1
    totals = dp[last, 1:] + dist[1:, 0]
    best_j = int(np.argmin(totals)) + 1
    best = float(totals[best_j - 1])
    order = np.empty(n + 1, np.int64)
    order[0] = 0
    order[n] = 0
    mask = last
    j = best_j
    for pos in range(n - 1, 0, -1):
        order[pos] = j
        pj = int(parent[mask, j])
        mask ^= 1 << j
        j = pj
    return best, order, dp.size
