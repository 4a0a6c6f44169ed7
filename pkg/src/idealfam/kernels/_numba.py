"""numba implementations of the cube-mask kernels."""

import numpy as np
from numba import njit

_U0 = np.uint64(0)
_U1 = np.uint64(1)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True)
def _tsh(m, col):
    s = 0
    for j in range(col.shape[0]):
        s += _popcount(m & col[j])
    return s


@njit(cache=True)
def downsets_dfs(covers, lo, hi, base, top, out):
    """Include-first DFS over positions lo..hi-1.

    A position may be included once all its lower covers are.  Each leaf
    ``m`` is written as ``m | top`` to ``out`` if ``out`` is large enough;
    returns the number of leaves either way.
    """
    depth_max = hi - lo
    masks = np.empty(depth_max + 1, dtype=np.uint64)
    choice = np.zeros(depth_max + 1, dtype=np.int8)
    masks[0] = base
    count = 0
    cap = out.shape[0]
    depth = 0
    while depth >= 0:
        if depth == depth_max:
            if count < cap:
                out[count] = masks[depth] | top
            count += 1
            depth -= 1
            continue
        c = choice[depth]
        if c == 2:
            choice[depth] = 0
            depth -= 1
            continue
        p = lo + depth
        m = masks[depth]
        if c == 0:
            choice[depth] = 1
            cov = covers[p]
            if (m & cov) == cov:
                masks[depth + 1] = m | (_U1 << np.uint64(p))
                depth += 1
                continue
        choice[depth] = 2
        masks[depth + 1] = m
        depth += 1
    return count


@njit(cache=True)
def antichains_dfs(down, npos, top, out):
    """Include-first DFS over the proper subsets in descending position order,
    keeping the chosen sets pairwise incomparable.

    Leaves with a nonempty antichain are written as ``downset | top``.
    """
    hi = npos - 1
    chosen = np.zeros(hi + 1, dtype=np.uint64)
    covered = np.zeros(hi + 1, dtype=np.uint64)
    choice = np.zeros(hi + 1, dtype=np.int8)
    count = 0
    cap = out.shape[0]
    depth = 0
    while depth >= 0:
        if depth == hi:
            if chosen[depth] != _U0:
                if count < cap:
                    out[count] = covered[depth] | top
                count += 1
            depth -= 1
            continue
        c = choice[depth]
        if c == 2:
            choice[depth] = 0
            depth -= 1
            continue
        p = hi - 1 - depth
        if c == 0:
            choice[depth] = 1
            if (covered[depth] >> np.uint64(p)) & _U1 == _U0:
                chosen[depth + 1] = chosen[depth] | (_U1 << np.uint64(p))
                covered[depth + 1] = covered[depth] | down[p]
                depth += 1
                continue
        choice[depth] = 2
        chosen[depth + 1] = chosen[depth]
        covered[depth + 1] = covered[depth]
        depth += 1
    return count


@njit(cache=True)
def nds_batch(masks, n, col):
    out = np.empty(masks.shape[0], dtype=np.int64)
    for i in range(masks.shape[0]):
        m = masks[i]
        out[i] = 2 * _tsh(m, col) - n * _popcount(m)
    return out


@njit(cache=True)
def _ideal_on(m, gpos, col, down, n):
    # ideal on the sub-cube of subsets of gpos (a position index)
    if m & ~down[gpos] != _U0:
        return False
    if m & _U1 == _U0:
        return False
    gbit = _U1 << np.uint64(gpos)
    if m & gbit == _U0:
        return False
    rest = m & ~gbit
    for j in range(n):
        if (gpos >> j) & 1:
            lower = (rest & col[j]) >> np.uint64(1 << j)
            if lower & ~m != _U0:
                return False
    return True


@njit(cache=True)
def ideal_batch(masks, n, col, down):
    out = np.empty(masks.shape[0], dtype=np.bool_)
    g = (1 << n) - 1
    for i in range(masks.shape[0]):
        out[i] = _ideal_on(masks[i], g, col, down, n)
    return out


@njit(cache=True)
def injection_batch(masks, n, col):
    """Rare vertex from the smallest maximal non-ground edge, and whether its
    injection checks out (targets present, avoid v, no collisions, rare)."""
    npos = 1 << n
    g = npos - 1
    verts = np.empty(masks.shape[0], dtype=np.int64)
    ok = np.empty(masks.shape[0], dtype=np.bool_)
    for i in range(masks.shape[0]):
        m = masks[i]
        M = -1
        for p in range(npos - 1):
            if (m >> np.uint64(p)) & _U1 == _U0:
                continue
            maximal = True
            for j in range(n):
                q = p | (1 << j)
                if q != p and q != g and (m >> np.uint64(q)) & _U1 != _U0:
                    maximal = False
                    break
            if maximal:
                M = p
                break
        good = M >= 0
        v = 0
        if good:
            while (M >> v) & 1:
                v += 1
            seen = _U0
            deg = 0
            for h in range(npos):
                if (m >> np.uint64(h)) & _U1 == _U0 or not (h >> v) & 1:
                    continue
                deg += 1
                t = M if h == g else h ^ (1 << v)
                tb = _U1 << np.uint64(t)
                if m & tb == _U0 or (t >> v) & 1 or seen & tb != _U0:
                    good = False
                seen |= tb
            if 2 * deg - _popcount(m) > 0:
                good = False
        verts[i] = v
        ok[i] = good
    return verts, ok


@njit(cache=True)
def minors_batch(masks, n, col, down):
    """Per family: every vertex satisfies the size/TSH splits, the plain vs
    ideal deletion bridge, and the ideal-preservation of ideal deletion,
    trace, and (when {v} is an edge) contraction."""
    npos = 1 << n
    g = npos - 1
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for i in range(masks.shape[0]):
        m = masks[i]
        good = n >= 2
        size = _popcount(m)
        total = _tsh(m, col)
        for v in range(n):
            if not good:
                break
            vb = np.uint64(1 << v)
            cv = col[v]
            dele = m & ~cv
            con = (m & cv) >> vb
            uv = g ^ (1 << v)
            uvbit = _U1 << np.uint64(uv)
            delp = dele | uvbit
            tr = dele | con
            deg = _popcount(m & cv)
            if size != _popcount(con) + _popcount(dele):
                good = False
            if total != _tsh(con, col) + _tsh(dele, col) + deg:
                good = False
            if m & uvbit != _U0:
                if _popcount(dele) != _popcount(delp) or _tsh(dele, col) != _tsh(delp, col):
                    good = False
            else:
                if _popcount(dele) != _popcount(delp) - 1 or _tsh(dele, col) != _tsh(delp, col) - n + 1:
                    good = False
            if not _ideal_on(delp, uv, col, down, n) or not _ideal_on(tr, uv, col, down, n):
                good = False
            if m & (_U1 << vb) != _U0 and not _ideal_on(con, uv, col, down, n):
                good = False
            # {v} missing exactly when deg(v) = 1
            if (m & (_U1 << vb) == _U0) != (deg == 1):
                good = False
        out[i] = good
    return out


@njit(cache=True)
def intersection_closed_batch(masks, npos):
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for i in range(masks.shape[0]):
        m = masks[i]
        good = True
        for a in range(npos):
            if not good:
                break
            if (m >> np.uint64(a)) & _U1 == _U0:
                continue
            for b in range(a + 1, npos):
                if (m >> np.uint64(b)) & _U1 != _U0 and (m >> np.uint64(a & b)) & _U1 == _U0:
                    good = False
                    break
        out[i] = good
    return out


@njit(cache=True)
def has_rare_batch(masks, n, col):
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for i in range(masks.shape[0]):
        m = masks[i]
        size = _popcount(m)
        found = False
        for j in range(n):
            if 2 * _popcount(m & col[j]) - size <= 0:
                found = True
                break
        out[i] = found
    return out


@njit(cache=True)
def canonical_batch(masks, T):
    """True where a mask is the minimum of its images under all permutations."""
    nperm, nbytes = T.shape[0], T.shape[1]
    out = np.empty(masks.shape[0], dtype=np.bool_)
    for i in range(masks.shape[0]):
        m = masks[i]
        canon = True
        for k in range(1, nperm):
            img = _U0
            for b in range(nbytes):
                img |= T[k, b, (m >> np.uint64(8 * b)) & np.uint64(255)]
            if img < m:
                canon = False
                break
        out[i] = canon
    return out
