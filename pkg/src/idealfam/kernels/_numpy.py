"""Vectorised numpy implementations of the cube-mask kernels.

Same signatures and output order as the numba versions.  DFS enumeration is
replaced by a frontier that is expanded one position at a time, children
placed include-first next to their parent, which reproduces the DFS leaf
order exactly.
"""

import numpy as np

_U1 = np.uint64(1)
_U0 = np.uint64(0)


def _popcount(x):
    return np.bitwise_count(x).astype(np.int64)


def _tsh(m, col):
    s = np.zeros(m.shape, dtype=np.int64)
    for c in col:
        s += _popcount(m & c)
    return s


def _expand(can):
    """Gather index that replaces each frontier entry by [include, exclude]
    children (exclude only where ``can`` is False), plus the include slots."""
    reps = 1 + can.astype(np.int64)
    idx = np.repeat(np.arange(can.shape[0]), reps)
    starts = np.cumsum(reps) - reps
    return idx, starts[can]


def downsets_dfs(covers, lo, hi, base, top, out):
    frontier = np.array([base], dtype=np.uint64)
    for p in range(lo, hi):
        cov = covers[p]
        can = (frontier & cov) == cov
        idx, inc = _expand(can)
        frontier = frontier[idx]
        frontier[inc] |= _U1 << np.uint64(p)
    frontier |= top
    k = min(out.shape[0], frontier.shape[0])
    out[:k] = frontier[:k]
    return frontier.shape[0]


def antichains_dfs(down, npos, top, out):
    hi = npos - 1
    chosen = np.zeros(1, dtype=np.uint64)
    covered = np.zeros(1, dtype=np.uint64)
    for p in range(hi - 1, -1, -1):
        can = ((covered >> np.uint64(p)) & _U1) == _U0
        idx, starts = _expand(can)
        chosen = chosen[idx]
        covered = covered[idx]
        chosen[starts] |= _U1 << np.uint64(p)
        covered[starts] |= down[p]
    leaves = covered[chosen != _U0] | top
    k = min(out.shape[0], leaves.shape[0])
    out[:k] = leaves[:k]
    return leaves.shape[0]


def nds_batch(masks, n, col):
    return 2 * _tsh(masks, col) - n * _popcount(masks)


def _ideal_on(m, gpos, col, down, n):
    gbit = _U1 << np.uint64(gpos)
    ok = (m & ~down[gpos]) == _U0
    ok &= (m & _U1) != _U0
    ok &= (m & gbit) != _U0
    rest = m & ~gbit
    for j in range(n):
        if (gpos >> j) & 1:
            lower = (rest & col[j]) >> np.uint64(1 << j)
            ok &= (lower & ~m) == _U0
    return ok


def ideal_batch(masks, n, col, down):
    return _ideal_on(masks, (1 << n) - 1, col, down, n)


def _lowest_index(x):
    low = x & (~x + _U1)
    return _popcount(low - _U1)


def injection_batch(masks, n, col):
    npos = 1 << n
    g = np.uint64(npos - 1)
    ubit = _U1 << g
    nonu = masks & ~ubit
    has_up = np.zeros_like(masks)
    for j in range(n):
        has_up |= ((nonu & col[j]) >> np.uint64(1 << j)) & ~col[j]
    maximal = nonu & ~has_up
    M = np.where(maximal != _U0, _lowest_index(maximal), 0).astype(np.uint64)
    verts = _lowest_index(~M & g)
    vpos = (_U1 << verts.astype(np.uint64)).astype(np.uint64)
    colv = np.asarray(col)[verts]
    src = masks & colv & ~ubit
    img = src >> vpos
    mbit = _U1 << M
    deg = _popcount(masks & colv)
    ok = maximal != _U0
    ok &= (img & ~masks) == _U0
    ok &= (img & colv) == _U0
    ok &= (masks & mbit) != _U0
    ok &= (mbit & colv) == _U0
    ok &= (img & mbit) == _U0
    ok &= 2 * deg - _popcount(masks) <= 0
    return verts, ok


def minors_batch(masks, n, col, down):
    npos = 1 << n
    g = npos - 1
    good = np.full(masks.shape, n >= 2)
    if n < 2:
        return good
    size = _popcount(masks)
    total = _tsh(masks, col)
    for v in range(n):
        vb = np.uint64(1 << v)
        cv = col[v]
        dele = masks & ~cv
        con = (masks & cv) >> vb
        uv = g ^ (1 << v)
        uvbit = _U1 << np.uint64(uv)
        delp = dele | uvbit
        tr = dele | con
        deg = _popcount(masks & cv)
        has_uv = (masks & uvbit) != _U0
        has_single = (masks & (_U1 << vb)) != _U0
        good &= size == _popcount(con) + _popcount(dele)
        good &= total == _tsh(con, col) + _tsh(dele, col) + deg
        bridge_with = (_popcount(dele) == _popcount(delp)) & (_tsh(dele, col) == _tsh(delp, col))
        bridge_without = (_popcount(dele) == _popcount(delp) - 1) & (_tsh(dele, col) == _tsh(delp, col) - n + 1)
        good &= np.where(has_uv, bridge_with, bridge_without)
        good &= _ideal_on(delp, uv, col, down, n) & _ideal_on(tr, uv, col, down, n)
        good &= ~has_single | _ideal_on(con, uv, col, down, n)
        good &= (~has_single) == (deg == 1)
    return good


def intersection_closed_batch(masks, npos):
    good = np.ones(masks.shape, dtype=bool)
    for a in range(npos):
        ha = (masks >> np.uint64(a)) & _U1
        for b in range(a + 1, npos):
            c = a & b
            if c == a:
                continue
            hb = (masks >> np.uint64(b)) & _U1
            hc = (masks >> np.uint64(c)) & _U1
            good &= (ha & hb & ~hc) == _U0
    return good


def has_rare_batch(masks, n, col):
    size = _popcount(masks)
    found = np.zeros(masks.shape, dtype=bool)
    for j in range(n):
        found |= 2 * _popcount(masks & col[j]) - size <= 0
    return found


def canonical_batch(masks, T):
    canon = np.ones(masks.shape, dtype=bool)
    for k in range(1, T.shape[0]):
        img = np.zeros_like(masks)
        for b in range(T.shape[1]):
            img |= T[k, b][((masks >> np.uint64(8 * b)) & np.uint64(255)).astype(np.intp)]
        canon &= img >= masks
    return canon
