"""Set families on a labelled ground set, with degree / NDS / rarity calculus.

Hyperedges are plain Python ints used as bitsets: bit ``j`` set means vertex
``j`` is a member.  A family keeps its edges as a sorted, duplicate-free
tuple, so two families are equal exactly when their ground masks and edge
tuples are equal.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

MAX_WIDTH = int(os.environ.get("IDEALFAM_MAX_WIDTH", "20"))

Vertex = int
Hyperedge = int


class FamilyError(ValueError):
    """Base class for invalid inputs to family operations."""


class DomainError(FamilyError):
    """An argument lies outside the operation's domain (e.g. a foreign vertex)."""


class PreconditionError(FamilyError):
    """A documented precondition of an operation does not hold."""


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def edge(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, descending, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def full_ground(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, eq=False)
class SetFamily:
    """A duplicate-free collection of hyperedges over a nonempty ground mask.

    ``edges`` is normalised on construction to ascending unsigned order.
    """

    ground: int
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ground <= 0:
            raise DomainError("ground set must be nonempty")
        if self.ground >> MAX_WIDTH:
            raise DomainError(f"ground set exceeds universe width {MAX_WIDTH}")
        edges = tuple(sorted(set(self.edges)))
        for e in edges:
            if e < 0 or e & ~self.ground:
                raise DomainError(f"edge {members(e)} is not a subset of the ground set")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_sets(cls, ground: Iterable[int], sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(edge(ground), tuple(edge(s) for s in sets))

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return self.ground.bit_count()

    @property
    def vertices(self) -> list[int]:
        return members(self.ground)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        return e in self.edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground == other.ground and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.ground, self.edges))

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(map(str, members(e))) + "}" for e in self.edges)
        return f"{type(self).__name__}(ground={self.vertices}, edges=[{sets}])"

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(members(e)) for e in self.edges]


def _check_vertex(F: SetFamily, v: int) -> None:
    if v < 0 or not (F.ground >> v) & 1:
        raise DomainError(f"vertex {v} is not in the ground set {F.vertices}")


def degree(F: SetFamily, v: Vertex) -> int:
    """Number of hyperedges of ``F`` containing ``v``."""
    _check_vertex(F, v)
    return sum((e >> v) & 1 for e in F.edges)


def degrees(F: SetFamily) -> list[int]:
    """Degrees of every ground vertex, in ascending vertex order."""
    return [degree(F, v) for v in F.vertices]


def tsh(F: SetFamily) -> int:
    """Total size of the hyperedges."""
    return sum(e.bit_count() for e in F.edges)


def nds(F: SetFamily) -> int:
    """Normalised degree sum ``2*tsh(F) - |U|*|F|``."""
    return 2 * tsh(F) - F.n * len(F)


def is_rare(F: SetFamily, v: Vertex) -> bool:
    return 2 * degree(F, v) - len(F) <= 0


def rare_vertices(F: SetFamily) -> list[int]:
    return [v for v in F.vertices if is_rare(F, v)]


def is_average_rare(F: SetFamily) -> bool:
    return nds(F) <= 0


def intersection_witness(F: SetFamily) -> Optional[tuple[int, int]]:
    """First pair ``(A, B)`` (canonical order) whose intersection is missing, else None."""
    edges = F.edges
    have = F.edge_set
    for i, a in enumerate(edges):
        for b in edges[i + 1:]:
            if (a & b) not in have:
                return a, b
    return None


def is_intersection_closed(F: SetFamily) -> bool:
    return intersection_witness(F) is None


def intersection_closure(F: SetFamily) -> SetFamily:
    """Smallest intersection-closed family containing the edges of ``F``."""
    closed = set(F.edges)
    pending = list(F.edges)
    while pending:
        a = pending.pop()
        new = {a & b for b in closed} - closed
        closed |= new
        pending.extend(new)
    return SetFamily(F.ground, tuple(closed))


class IdealViolation(NamedTuple):
    """Which ideal-family axiom fails, with a witness.

    For axiom 3 the witness is ``(A, B)``: ``B`` is a non-ground edge and
    ``A`` a missing subset of it.
    """

    axiom: int
    message: str
    witness: tuple[int, ...]


class NotIdealError(FamilyError):
    def __init__(self, violation: IdealViolation):
        super().__init__(violation.message)
        self.violation = violation


_VECTOR_MIN_EDGES = 128


def _lower_covers_present(F: SetFamily) -> bool:
    g = F.ground
    if len(F.edges) < _VECTOR_MIN_EDGES:
        have = F.edge_set
        return all({b ^ bit for b in F.edges if b & bit and b != g} <= have
                   for bit in (1 << j for j in members(g)))
    arr = np.fromiter(F.edges, dtype=np.int64, count=len(F.edges))
    inner = arr[arr != g]
    for j in members(g):
        bit = 1 << j
        lower = inner[(inner & bit) != 0] ^ bit
        pos = np.searchsorted(arr, lower)
        if lower.size and not np.array_equal(arr[np.minimum(pos, arr.size - 1)], lower):
            return False
    return True


def ideal_violation(F: SetFamily) -> Optional[IdealViolation]:
    """Return the first failed ideal-family axiom, or None if ``F`` is ideal.

    Downward closure is tested on lower covers only: a family in which every
    non-ground edge has all its ``B - {j}`` present is closed under all
    subsets, by induction on size.
    """
    have = F.edge_set
    if 0 not in have:
        return IdealViolation(1, "family does not contain the empty set", ())
    if F.ground not in have:
        return IdealViolation(2, "family does not contain the ground set", ())
    if _lower_covers_present(F):
        return None
    # slow path only to report the canonical first witness
    for b in F.edges:
        if b == F.ground:
            continue
        for j in members(b):
            a = b ^ (1 << j)
            if a not in have:
                return IdealViolation(
                    3,
                    f"edge {members(b)} is not the ground set but its subset {members(a)} is missing",
                    (a, b),
                )
    return None


def is_ideal(F: SetFamily) -> bool:
    return ideal_violation(F) is None


@dataclass(frozen=True, eq=False, repr=False)
class IdealFamily(SetFamily):
    """A SetFamily known to satisfy the three ideal-family axioms.

    Construction validates; a violation raises :class:`NotIdealError`.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        bad = ideal_violation(self)
        if bad is not None:
            raise NotIdealError(bad)


def validate_ideal(F: SetFamily) -> IdealFamily:
    if isinstance(F, IdealFamily):
        return F
    return IdealFamily(F.ground, F.edges)


def maximal_proper_edges(F: IdealFamily) -> list[int]:
    """Edges other than the ground set not strictly contained in another such edge.

    Relies on downward closure: an edge with a larger non-ground superset in
    ``F`` also has an upper cover in ``F``.
    """
    have = F.edge_set
    out = []
    for b in F.edges:
        if b == F.ground:
            continue
        if all((b | (1 << j)) == F.ground or (b | (1 << j)) not in have
               for j in members(F.ground & ~b)):
            out.append(b)
    return out


@dataclass(frozen=True)
class RareVertexCertificate:
    """A rare vertex plus an explicit injection from the edges containing it
    into the edges avoiding it."""

    vertex: int
    maximal_edge: int
    mapping: tuple[tuple[int, int], ...]

    def problems(self, F: SetFamily) -> list[str]:
        """Everything wrong with this certificate for ``F`` (empty when valid)."""
        v = self.vertex
        errs = []
        sources = [h for h in F.edges if (h >> v) & 1]
        if sorted(s for s, _ in self.mapping) != sources:
            errs.append("mapping domain differs from the edges containing the vertex")
        targets = [t for _, t in self.mapping]
        for t in targets:
            if t not in F:
                errs.append(f"target {members(t)} is not an edge")
            if (t >> v) & 1:
                errs.append(f"target {members(t)} contains the vertex")
        if len(set(targets)) != len(targets):
            errs.append("mapping is not injective")
        if 2 * len(sources) - len(F) > 0:
            errs.append("vertex is not rare")
        return errs


def rare_vertex_certificate(F: IdealFamily) -> RareVertexCertificate:
    """Build the rare-vertex injection for an ideal family.

    ``M`` is the smallest (canonical order) maximal edge other than the
    ground set and ``v`` the smallest vertex outside it.  Each non-ground
    ``H`` containing ``v`` maps to ``H - {v}``; the ground set maps to ``M``.
    """
    F = validate_ideal(F)
    m = maximal_proper_edges(F)[0]
    outside = F.ground & ~m
    v = (outside & -outside).bit_length() - 1
    bit = 1 << v
    mapping = tuple((h, m if h == F.ground else h ^ bit) for h in F.edges if h & bit)
    cert = RareVertexCertificate(v, m, mapping)
    errs = cert.problems(F)
    if errs:
        raise AssertionError("rare-vertex certificate failed: " + "; ".join(errs))
    return cert


def family_report(F: SetFamily) -> dict:
    """Summary in the JSON report schema; vertex labels are ground-set labels."""
    return {
        "n": F.n,
        "num_edges": len(F),
        "tsh": tsh(F),
        "nds": nds(F),
        "degrees": degrees(F),
        "rare_vertices": rare_vertices(F),
        "is_intersection_closed": is_intersection_closed(F),
        "is_ideal": is_ideal(F),
    }


# Families used throughout the worked examples and tests.

def power_set(n: int) -> IdealFamily:
    g = full_ground(n)
    return IdealFamily(g, tuple(range(g + 1)))


def degree_one_family(n: int, v: Optional[int] = None) -> IdealFamily:
    """All subsets of ``U - {v}`` plus ``U``; ``v`` defaults to the last vertex."""
    g = full_ground(n)
    v = n - 1 if v is None else v
    rest = g & ~(1 << v)
    return IdealFamily(g, tuple(submasks(rest)) + (g,))


def ideal_from_antichain(ground: int, antichain: Sequence[int]) -> IdealFamily:
    """Downward closure of ``antichain`` together with the empty and ground sets."""
    edges = {0, ground}
    for a in antichain:
        edges.update(submasks(a))
    return IdealFamily(ground, tuple(edges))
