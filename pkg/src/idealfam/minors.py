"""Single-vertex minors: deletion, ideal deletion, contraction and trace.

Every minor keeps the parent's vertex labels and drops ``v`` from the
ground mask.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import (
    DomainError,
    IdealFamily,
    PreconditionError,
    SetFamily,
    _check_vertex,
    degree,
    nds,
    tsh,
    validate_ideal,
)


def _shrink(F: SetFamily, v: int) -> int:
    _check_vertex(F, v)
    if F.n < 2:
        raise DomainError("minors need a ground set of size at least two")
    return F.ground & ~(1 << v)


def deletion(F: SetFamily, v: int) -> SetFamily:
    """Edges of ``F`` avoiding ``v``."""
    ground = _shrink(F, v)
    return SetFamily(ground, tuple(e for e in F.edges if not (e >> v) & 1))


def ideal_deletion(F: IdealFamily, v: int) -> IdealFamily:
    """Deletion with the smaller ground set ``U - {v}`` re-adjoined."""
    F = validate_ideal(F)
    ground = _shrink(F, v)
    edges = tuple(e for e in F.edges if not (e >> v) & 1) + (ground,)
    return IdealFamily(ground, edges)


def contraction(F: SetFamily, v: int) -> SetFamily:
    """Edges containing ``v``, with ``v`` removed."""
    ground = _shrink(F, v)
    bit = 1 << v
    edges = tuple(e ^ bit for e in F.edges if e & bit)
    if not edges:
        raise DomainError(f"vertex {v} has degree 0; contraction would be empty")
    return SetFamily(ground, edges)


def contraction_ideal(F: IdealFamily, v: int) -> IdealFamily:
    """Contraction of an ideal family; requires ``{v}`` to be an edge."""
    _check_vertex(F, v)
    if (1 << v) not in F:
        raise PreconditionError(f"{{{v}}} is not an edge, so the contraction lacks the empty set")
    return validate_ideal(contraction(F, v))


def trace(F: SetFamily, v: int) -> SetFamily:
    ground = _shrink(F, v)
    mask = ~(1 << v)
    return SetFamily(ground, tuple({e & mask for e in F.edges}))


def trace_ideal(F: IdealFamily, v: int) -> IdealFamily:
    return validate_ideal(trace(F, v))


def degree_one_characterization(F: IdealFamily, v: int) -> bool:
    """Return whether ``{v}`` is an edge, checking it is so exactly when deg(v) >= 2."""
    F = validate_ideal(F)
    _shrink(F, v)
    singleton = (1 << v) in F
    if singleton == (degree(F, v) == 1):
        raise AssertionError(f"singleton/degree-one equivalence fails at vertex {v}")
    return singleton


class MinorKind(enum.Enum):
    DELETION = "del"
    IDEAL_DELETION = "delp"
    CONTRACTION = "con"
    TRACE = "trace"

    def apply(self, F: SetFamily, v: int) -> SetFamily:
        if self is MinorKind.DELETION:
            return deletion(F, v)
        if self is MinorKind.IDEAL_DELETION:
            return ideal_deletion(validate_ideal(F), v)
        if self is MinorKind.CONTRACTION:
            return contraction(F, v)
        return trace(F, v)


@dataclass
class IdentityReport:
    """Exact integer checks of one decomposition; each entry is ``(name, lhs, rhs)``."""

    vertex: int
    checks: list[tuple[str, int, int]] = field(default_factory=list)

    def add(self, name: str, lhs: int, rhs: int) -> None:
        self.checks.append((name, lhs, rhs))

    @property
    def failures(self) -> list[str]:
        return [name for name, lhs, rhs in self.checks if lhs != rhs]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "ok": self.ok,
            "checks": [{"identity": n, "lhs": a, "rhs": b, "holds": a == b} for n, a, b in self.checks],
        }


def check_decomposition_identities(F: IdealFamily, v: int) -> IdentityReport:
    """Size and TSH splits of ``F`` over the deletion/contraction at ``v``,
    plus the bridge between plain and ideal deletion."""
    F = validate_ideal(F)
    n = F.n
    d = degree(F, v)
    if d < 1:
        raise DomainError(f"vertex {v} has degree 0")
    dele = deletion(F, v)
    con = contraction(F, v)
    delp = ideal_deletion(F, v)
    rep = IdentityReport(v)
    rep.add("|F| = |con| + |del|", len(F), len(con) + len(dele))
    rep.add("tsh(F) = tsh(con) + tsh(del) + deg(v)", tsh(F), tsh(con) + tsh(dele) + d)
    if (F.ground & ~(1 << v)) in F:
        rep.add("|del| = |delp|", len(dele), len(delp))
        rep.add("tsh(del) = tsh(delp)", tsh(dele), tsh(delp))
    else:
        rep.add("|del| = |delp| - 1", len(dele), len(delp) - 1)
        rep.add("tsh(del) = tsh(delp) - n + 1", tsh(dele), tsh(delp) - n + 1)
        rep.add("nds(del) = nds(delp) - n + 1", nds(dele), nds(delp) - n + 1)
    return rep
