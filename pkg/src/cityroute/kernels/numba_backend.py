"""JIT-compiled kernels for the shortest-path and subset-DP hot loops.

All kernels work on flat CSR arrays so numba sees nothing but numpy
scalars.  The binary heap orders entries by (key, vertex index), so
equal keys pop with the lowest vertex first; both backends follow the
same rule to keep results reproducible.
"""

import numpy as np
from numba import njit

INF = np.inf


@njit(cache=True)
def _heap_push(keys, vals, gs, size, key, val, g):
    keys[size] = key
    vals[size] = val
    gs[size] = g
    i = size
    while i > 0:
        p = (i - 1) >> 1
        if keys[p] > keys[i] or (keys[p] == keys[i] and vals[p] > vals[i]):
            keys[p], keys[i] = keys[i], keys[p]
            vals[p], vals[i] = vals[i], vals[p]
            gs[p], gs[i] = gs[i], gs[p]
            i = p
        else:
            break
    return size + 1


@njit(cache=True)
def _heap_pop(keys, vals, gs, size):
    key = keys[0]
    val = vals[0]
    g = gs[0]
    size -= 1
    keys[0] = keys[size]
    vals[0] = vals[size]
    gs[0] = gs[size]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= size:
            break
        best = left
        right = left + 1
        if right < size and (
            keys[right] < keys[left]
            or (keys[right] == keys[left] and vals[right] < vals[left])
        ):
            best = right
        if keys[best] < keys[i] or (keys[best] == keys[i] and vals[best] < vals[i]):
            keys[best], keys[i] = keys[i], keys[best]
            vals[best], vals[i] = vals[i], vals[best]
            gs[best], gs[i] = gs[i], gs[best]
            i = best
        else:
            break
    return key, val, g, size


@njit(cache=True)
def dijkstra_csr(indptr, targets, weights, source):
    n = indptr.size - 1
    m = targets.size
    dist = np.full(n, INF)
    pred = np.full(n, -1, np.int64)
    # Each push follows a strict improvement, so m + 1 slots suffice.
    hkeys = np.empty(m + 1, np.float64)
    hvals = np.empty(m + 1, np.int64)
    hgs = np.empty(m + 1, np.float64)
    size = 0
    dist[source] = 0.0
    size = _heap_push(hkeys, hvals, hgs, size, 0.0, source, 0.0)
    while size > 0:
        d, u, _, size = _heap_pop(hkeys, hvals, hgs, size)
        if d != dist[u]:
            continue  # stale entry, a cheaper one was pushed later
        for e in range(indptr[u], indptr[u + 1]):
            v = targets[e]
            nd = d + weights[e]
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                size = _heap_push(hkeys, hvals, hgs, size, nd, v, nd)
    return dist, pred


@njit(cache=True)
def astar_csr(indptr, targets, weights, xs, ys, source, target, hkind):
    n = indptr.size - 1
    m = targets.size
    g = np.full(n, INF)
    pred = np.full(n, -1, np.int64)
    hkeys = np.empty(m + 1, np.float64)
    hvals = np.empty(m + 1, np.int64)
    hgs = np.empty(m + 1, np.float64)
    tx = xs[target]
    ty = ys[target]
    size = 0
    g[source] = 0.0
    dx = xs[source] - tx
    dy = ys[source] - ty
    if hkind == 1:
        h0 = np.hypot(dx, dy)
    elif hkind == 2:
        h0 = abs(dx) + abs(dy)
    else:
        h0 = 0.0
    size = _heap_push(hkeys, hvals, hgs, size, h0, source, 0.0)
    while size > 0:
        _, u, gu, size = _heap_pop(hkeys, hvals, hgs, size)
        if gu != g[u]:
            continue
        if u == target:
            break  # settled; with an admissible heuristic this is optimal
        for e in range(indptr[u], indptr[u + 1]):
            v = targets[e]
            ng = gu + weights[e]
            if ng < g[v]:
                g[v] = ng
                pred[v] = u
                dx = xs[v] - tx
                dy = ys[v] - ty
                if hkind == 1:
                    hv = np.hypot(dx, dy)
                elif hkind == 2:
                    hv = abs(dx) + abs(dy)
                else:
                    hv = 0.0
                size = _heap_push(hkeys, hvals, hgs, size, ng + hv, v, ng)
    return g[target], pred


@njit(cache=True)
def held_karp(dist):
    n = dist.shape[0]
    full = 1 << n
    dp = np.full((full, n), INF)
    parent = np.full((full, n), -1, np.int8)
    dp[1, 0] = 0.0
    for mask in range(1, full, 2):  # every reachable state contains the start
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            dj = dp[mask, j]
            if dj == INF:
                continue
            for k in range(n):
                if (mask >> k) & 1:
                    continue
                nd = dj + dist[j, k]
                nm = mask | (1 << k)
                if nd < dp[nm, k]:
                    dp[nm, k] = nd
                    parent[nm, k] = j
    last = full - 1
    best = INF
    best_j = 1
    for j in range(1, n):
        t = dp[last, j] + dist[j, 0]
        if t < best:
            best = t
            best_j = j
    order = np.empty(n + 1, np.int64)
    order[0] = 0
    order[n] = 0
    mask = last
    j = best_j
    for pos in range(n - 1, 0, -1):
        order[pos] = j
        pj = parent[mask, j]
        mask ^= 1 << j
        j = pj
    return best, order, dp.size
