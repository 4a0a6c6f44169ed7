"""Batch kernels over cube masks (families on at most six vertices).

Two interchangeable backends exist: numba-compiled loops and vectorised
numpy.  The default is numba when it imports; set ``IDEALFAM_KERNELS=numpy``
(or ``NUMBA_DISABLE_JIT=1``) to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

from . import _numpy
from .tables import MAX_CUBE_N, check_n, cube_tables, permutation_tables

try:
    if os.environ.get("NUMBA_DISABLE_JIT"):
        raise ImportError("numba disabled by environment")
    from . import _numba
except ImportError:  # pragma: no cover
    _numba = None

HAVE_NUMBA = _numba is not None

_EMPTY = np.zeros(0, dtype=np.uint64)


class Kernels:
    """Cube-mask operations bound to one backend module."""

    def __init__(self, impl, name: str):
        self.impl = impl
        self.name = name

    def __repr__(self) -> str:
        return f"Kernels({self.name!r})"

    def _downsets(self, n: int, lo: int, hi: int, base, top, fill: bool):
        t = cube_tables(n)
        base, top = np.uint64(base), np.uint64(top)
        count = self.impl.downsets_dfs(t["covers"], lo, hi, base, top, _EMPTY)
        if not fill:
            return count
        out = np.empty(count, dtype=np.uint64)
        self.impl.downsets_dfs(t["covers"], lo, hi, base, top, out)
        return out

    def ideal_masks(self, n: int, strategy: str = "downset") -> np.ndarray:
        """Every ideal family on ``n`` vertices, in DFS order of the strategy.

        ``downset`` grows the family position by position; ``antichain`` picks
        the maximal non-ground edges and closes downward.
        """
        check_n(n)
        t = cube_tables(n)
        if strategy == "downset":
            return self._downsets(n, 1, t["npos"] - 1, 1, t["ubit"], True)
        if strategy == "antichain":
            count = self.impl.antichains_dfs(t["down"], t["npos"], t["ubit"], _EMPTY)
            out = np.empty(count, dtype=np.uint64)
            self.impl.antichains_dfs(t["down"], t["npos"], t["ubit"], out)
            return out
        raise ValueError(f"unknown strategy {strategy!r}")

    def count_ideal(self, n: int, strategy: str = "downset") -> int:
        check_n(n)
        t = cube_tables(n)
        if strategy == "downset":
            return int(self._downsets(n, 1, t["npos"] - 1, 1, t["ubit"], False))
        if strategy == "antichain":
            return int(self.impl.antichains_dfs(t["down"], t["npos"], t["ubit"], _EMPTY))
        raise ValueError(f"unknown strategy {strategy!r}")

    def count_downsets(self, n: int) -> int:
        """Downward-closed subfamilies of the n-cube, the empty family included."""
        check_n(n)
        return int(self._downsets(n, 0, cube_tables(n)["npos"], 0, 0, False))

    def nds(self, masks: np.ndarray, n: int) -> np.ndarray:
        return self.impl.nds_batch(masks, n, cube_tables(n)["col"])

    def is_ideal(self, masks: np.ndarray, n: int) -> np.ndarray:
        t = cube_tables(n)
        return self.impl.ideal_batch(masks, n, t["col"], t["down"])

    def injection(self, masks: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
        """(rare vertex, certificate valid) per ideal family."""
        return self.impl.injection_batch(masks, n, cube_tables(n)["col"])

    def minors_ok(self, masks: np.ndarray, n: int) -> np.ndarray:
        t = cube_tables(n)
        return self.impl.minors_batch(masks, n, t["col"], t["down"])

    def intersection_closed(self, masks: np.ndarray, n: int) -> np.ndarray:
        return self.impl.intersection_closed_batch(masks, cube_tables(n)["npos"])

    def has_rare(self, masks: np.ndarray, n: int) -> np.ndarray:
        return self.impl.has_rare_batch(masks, n, cube_tables(n)["col"])

    def canonical(self, masks: np.ndarray, n: int) -> np.ndarray:
        return self.impl.canonical_batch(masks, permutation_tables(n))


numpy_kernels = Kernels(_numpy, "numpy")
numba_kernels = Kernels(_numba, "numba") if HAVE_NUMBA else None


def get_kernels(name: str | None = None) -> Kernels:
    name = name or os.environ.get("IDEALFAM_KERNELS") or ("numba" if HAVE_NUMBA else "numpy")
    if name == "numpy":
        return numpy_kernels
    if name == "numba":
        if numba_kernels is None:
            raise RuntimeError("numba backend requested but numba is unavailable")
        return numba_kernels
    raise ValueError(f"unknown kernel backend {name!r}")


def masks_to_edges(mask: int) -> tuple[int, ...]:
    """Edge bitmasks (ascending) selected by a cube mask."""
    mask = int(mask)
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def edges_to_mask(edges) -> int:
    m = 0
    for e in edges:
        m |= 1 << e
    return m


__all__ = [
    "HAVE_NUMBA", "Kernels", "MAX_CUBE_N", "edges_to_mask", "get_kernels",
    "masks_to_edges", "numba_kernels", "numpy_kernels",
]
