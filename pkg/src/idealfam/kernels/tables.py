"""Lookup tables for cube masks.

A cube mask is a uint64 whose bit ``p`` says whether the subset with
bitmask ``p`` of an ``n``-vertex ground set (``n <= 6``) is in the family.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

MAX_CUBE_N = 6


def check_n(n: int) -> None:
    if not 1 <= n <= MAX_CUBE_N:
        raise ValueError(f"cube kernels support 1 <= n <= {MAX_CUBE_N}, got {n}")


@lru_cache(maxsize=None)
def cube_tables(n: int) -> dict:
    """Per-``n`` constants, all uint64.

    col[j]    positions of subsets containing vertex j
    covers[p] positions of the lower covers p - {j}
    down[p]   positions of all subsets of p
    """
    check_n(n)
    npos = 1 << n
    col = np.zeros(n, dtype=np.uint64)
    covers = np.zeros(npos, dtype=np.uint64)
    down = np.zeros(npos, dtype=np.uint64)
    for p in range(npos):
        for j in range(n):
            if (p >> j) & 1:
                col[j] |= np.uint64(1 << p)
                covers[p] |= np.uint64(1 << (p ^ (1 << j)))
        for q in range(p + 1):
            if q & p == q:
                down[p] |= np.uint64(1 << q)
    return {
        "npos": npos,
        "col": col,
        "covers": covers,
        "down": down,
        "ubit": np.uint64(1 << (npos - 1)),
    }


@lru_cache(maxsize=None)
def permutation_tables(n: int) -> np.ndarray:
    """Byte-wise images of cube masks under every vertex permutation.

    ``T[k, b, byte]`` is the image of the positions ``8b .. 8b+7`` selected by
    ``byte`` under permutation ``k``.  The identity is permutation 0.
    """
    check_n(n)
    npos = 1 << n
    nbytes = (npos + 7) // 8
    perms = list(permutations(range(n)))
    T = np.zeros((len(perms), nbytes, 256), dtype=np.uint64)
    for k, perm in enumerate(perms):
        image = []
        for p in range(npos):
            q = 0
            for j in range(n):
                if (p >> j) & 1:
                    q |= 1 << perm[j]
            image.append(q)
        for b in range(nbytes):
            for byte in range(256):
                m = 0
                for i in range(8):
                    p = 8 * b + i
                    if (byte >> i) & 1 and p < npos:
                        m |= 1 << image[p]
                T[k, b, byte] = m
    return T
