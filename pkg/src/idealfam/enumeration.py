"""Exhaustive and sampled generation of set families on small ground sets.

Ideal families on ``n`` vertices correspond one-to-one with downward-closed
families that contain the empty set but not the ground set (adjoin ``U``).
Enumeration runs on cube masks through :mod:`idealfam.kernels`; families
are only materialised as :class:`SetFamily` objects when a caller iterates.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Callable, Iterator, Optional

import numpy as np

from .core import (
    DomainError,
    IdealFamily,
    SetFamily,
    full_ground,
    ideal_from_antichain,
    intersection_closure,
    nds,
)
from .kernels import Kernels, get_kernels, masks_to_edges

MAX_ENUM_N = 6
MAX_SEARCH_N = 5
MAX_EXHAUSTIVE_SEARCH_N = 4
MAX_CONJECTURE_N = 4


def _check_range(n: int, hi: int, what: str) -> None:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= hi:
        raise DomainError(f"{what} needs 1 <= n <= {hi}, got {n}")


def ideal_family_masks(n: int, strategy: str = "downset", kernels: Optional[Kernels] = None) -> np.ndarray:
    _check_range(n, MAX_ENUM_N, "enumeration")
    return (kernels or get_kernels()).ideal_masks(n, strategy)


def mask_to_family(mask: int, n: int, cls=SetFamily) -> SetFamily:
    return cls(full_ground(n), masks_to_edges(mask))


def enumerate_ideal_families(n: int, strategy: str = "downset") -> Iterator[IdealFamily]:
    """Yield every ideal family on ``{0..n-1}`` once, in deterministic order."""
    for m in ideal_family_masks(n, strategy):
        yield mask_to_family(m, n, IdealFamily)


def count_ideal_families(n: int, strategy: str = "downset", kernels: Optional[Kernels] = None) -> int:
    _check_range(n, MAX_ENUM_N, "enumeration")
    return (kernels or get_kernels()).count_ideal(n, strategy)


def count_downward_closed(n: int, kernels: Optional[Kernels] = None) -> int:
    """Number of downward-closed subfamilies of the n-cube (empty family included)."""
    _check_range(n, MAX_ENUM_N, "enumeration")
    return (kernels or get_kernels()).count_downsets(n)


@dataclass
class EnumerationStats:
    """Aggregated outcome of a campaign.  ``merge`` is associative and commutative."""

    n: int
    families_visited: int = 0
    nds_max: Optional[int] = None
    violations: int = 0
    wall_time: float = 0.0
    ideal_failures: int = 0
    injection_failures: int = 0
    identity_failures: int = 0
    classes: Optional[int] = None
    checks: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.violations or self.ideal_failures or self.injection_failures or self.identity_failures)

    def merge(self, other: "EnumerationStats") -> "EnumerationStats":
        if other.n != self.n:
            raise ValueError("cannot merge stats for different n")
        maxes = [x for x in (self.nds_max, other.nds_max) if x is not None]
        classes = None
        if self.classes is not None or other.classes is not None:
            classes = (self.classes or 0) + (other.classes or 0)
        return EnumerationStats(
            n=self.n,
            families_visited=self.families_visited + other.families_visited,
            nds_max=max(maxes) if maxes else None,
            violations=self.violations + other.violations,
            wall_time=max(self.wall_time, other.wall_time),
            ideal_failures=self.ideal_failures + other.ideal_failures,
            injection_failures=self.injection_failures + other.injection_failures,
            identity_failures=self.identity_failures + other.identity_failures,
            classes=classes,
            checks=sorted(set(self.checks) | set(other.checks)),
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["wall_time_ms"] = round(d.pop("wall_time") * 1000, 3)
        d["ok"] = self.ok
        if d["classes"] is None:
            del d["classes"]
        return d


def verify_masks(
    masks: np.ndarray,
    n: int,
    *,
    verify_nds: bool = True,
    verify_injection: bool = False,
    verify_identities: bool = False,
    up_to_iso: bool = False,
    kernels: Optional[Kernels] = None,
) -> EnumerationStats:
    """Run the requested checks over one chunk of ideal-family masks."""
    k = kernels or get_kernels()
    st = EnumerationStats(n=n, families_visited=int(masks.shape[0]))
    if verify_nds:
        st.checks.append("nds")
        vals = k.nds(masks, n)
        if vals.size:
            st.nds_max = int(vals.max())
        st.violations = int((vals > 0).sum())
        st.ideal_failures = int((~k.is_ideal(masks, n)).sum())
    if verify_injection:
        st.checks.append("injection")
        st.injection_failures = int((~k.injection(masks, n)[1]).sum())
    if verify_identities and n >= 2:
        st.checks.append("identities")
        st.identity_failures = int((~k.minors_ok(masks, n)).sum())
    if up_to_iso:
        st.classes = int(k.canonical(masks, n).sum())
    return st


def run_campaign(
    n: int,
    *,
    verify_nds: bool = True,
    verify_injection: bool = False,
    verify_identities: bool = False,
    up_to_iso: bool = False,
    deep: bool = False,
    chunk: int = 1 << 20,
    progress: Optional[Callable[[int, int], None]] = None,
    kernels: Optional[Kernels] = None,
) -> EnumerationStats:
    """Enumerate all ideal families on ``n`` vertices and check each one.

    ``n = 6`` (about 7.8 million families) requires ``deep=True``.
    """
    _check_range(n, MAX_ENUM_N, "enumeration")
    if n == MAX_ENUM_N and not deep:
        raise DomainError("n = 6 is a long run; pass deep=True (--deep)")
    k = kernels or get_kernels()
    start = time.perf_counter()
    masks = k.ideal_masks(n)
    total = EnumerationStats(n=n)
    for lo in range(0, max(masks.shape[0], 1), chunk):
        part = verify_masks(
            masks[lo:lo + chunk], n,
            verify_nds=verify_nds, verify_injection=verify_injection,
            verify_identities=verify_identities, up_to_iso=up_to_iso, kernels=k,
        )
        total = total.merge(part) if total.families_visited else part
        if progress is not None:
            progress(total.families_visited, masks.shape[0])
    total.wall_time = time.perf_counter() - start
    return total


# -- intersection-closed families ------------------------------------------

def _forced_bits(n: int, require_empty: bool, require_ground: bool) -> int:
    bits = 0
    if require_empty:
        bits |= 1
    if require_ground:
        bits |= 1 << ((1 << n) - 1)
    return bits


def intersection_closed_masks(
    n: int, require_empty: bool = True, require_ground: bool = True, kernels: Optional[Kernels] = None
) -> np.ndarray:
    """All intersection-closed families on ``n <= 4`` vertices (as cube masks, ascending)."""
    _check_range(n, MAX_EXHAUSTIVE_SEARCH_N, "exhaustive search")
    k = kernels or get_kernels()
    forced = _forced_bits(n, require_empty, require_ground)
    cand = np.arange(1 << (1 << n), dtype=np.uint64)
    cand = cand[(cand & np.uint64(forced)) == np.uint64(forced)]
    return cand[k.intersection_closed(cand, n)]


def search_intersection_closed_violations(
    n: int,
    require_empty: bool = True,
    require_ground: bool = True,
    *,
    samples: int = 20000,
    seed: int = 0,
    kernels: Optional[Kernels] = None,
) -> Iterator[SetFamily]:
    """Yield intersection-closed families with NDS > 0.

    Exhaustive (ascending cube-mask order) for ``n <= 4``.  For ``n = 5`` the
    families are intersection closures of ``samples`` random generator sets,
    so coverage is partial; duplicates are suppressed.
    """
    _check_range(n, MAX_SEARCH_N, "search")
    if n <= MAX_EXHAUSTIVE_SEARCH_N:
        k = kernels or get_kernels()
        masks = intersection_closed_masks(n, require_empty, require_ground, k)
        for m in masks[k.nds(masks, n) > 0]:
            yield mask_to_family(m, n)
        return
    rng = np.random.default_rng(seed)
    ground = full_ground(n)
    forced = [0] * require_empty + [ground] * require_ground
    seen = set()
    for _ in range(samples):
        size = int(rng.integers(1, 2 * n + 1))
        gens = [int(x) for x in rng.integers(0, ground + 1, size=size)]
        F = intersection_closure(SetFamily(ground, tuple(gens + forced)))
        if F.edges in seen:
            continue
        seen.add(F.edges)
        if nds(F) > 0:
            yield F


def search_is_exhaustive(n: int) -> bool:
    return n <= MAX_EXHAUSTIVE_SEARCH_N


@dataclass
class ConjectureReport:
    n: int
    families_checked: int
    failures: int
    nds_positive: int
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["wall_time_ms"] = round(d.pop("wall_time") * 1000, 3)
        d["ok"] = self.ok
        return d


def verify_rare_vertex_conjecture(n: int, kernels: Optional[Kernels] = None) -> ConjectureReport:
    """Check that every intersection-closed family containing the empty and
    ground sets on ``n <= 4`` vertices has a rare vertex."""
    _check_range(n, MAX_CONJECTURE_N, "conjecture check")
    k = kernels or get_kernels()
    start = time.perf_counter()
    masks = intersection_closed_masks(n, True, True, k)
    failures = int((~k.has_rare(masks, n)).sum())
    positive = int((k.nds(masks, n) > 0).sum())
    return ConjectureReport(n, int(masks.shape[0]), failures, positive, time.perf_counter() - start)


# -- random families ----------------------------------------------------------

def random_antichain(n: int, rng: np.random.Generator) -> list[int]:
    """Between 1 and n distinct proper subsets of ``{0..n-1}``, dominated ones dropped."""
    proper = (1 << n) - 1
    k = min(int(rng.integers(1, n + 1)), proper)
    picks = [int(x) for x in rng.choice(proper, size=k, replace=False)]
    return sorted(a for a in picks if not any(a != b and a & b == a for b in picks))


def random_ideal_family(n: int, seed: int) -> IdealFamily:
    """Deterministic in ``(n, seed)``; uses numpy's PCG64 generator."""
    if not 1 <= n:
        raise DomainError("n must be positive")
    rng = np.random.default_rng(seed)
    return ideal_from_antichain(full_ground(n), random_antichain(n, rng))


def random_set_family(n: int, seed: int, max_edges: int = 64) -> SetFamily:
    """Uniformly chosen distinct subsets; no structural constraints."""
    rng = np.random.default_rng(seed)
    universe = 1 << n
    k = int(rng.integers(1, min(universe, max_edges) + 1))
    return SetFamily(full_ground(n), tuple(int(x) for x in rng.choice(universe, size=k, replace=False)))


# -- isomorph rejection -------------------------------------------------------

def _relabel(e: int, perm: tuple[int, ...], labels: list[int]) -> int:
    out = 0
    for i, v in enumerate(labels):
        if (e >> v) & 1:
            out |= 1 << perm[i]
    return out


def canonical_form(F: SetFamily) -> SetFamily:
    """Minimum image of ``F`` over all relabellings of its ground set to
    ``0..n-1``, comparing families by their cube masks."""
    labels = F.vertices
    best = None
    for perm in permutations(range(len(labels))):
        key = sum(1 << _relabel(e, perm, labels) for e in F.edges)
        if best is None or key < best:
            best = key
    return SetFamily(full_ground(len(labels)), masks_to_edges(best))


def is_canonical(F: SetFamily) -> bool:
    return canonical_form(F).edges == F.edges and F.ground == full_ground(F.n)
