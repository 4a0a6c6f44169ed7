"""Executable replay of the inductive argument that ideal families have NDS <= 0.

Each node picks the injection vertex of its family, classifies the case,
checks the case's exact NDS identity, and recurses into the minors the case
reduces to.  Leaves are single-vertex families and the closed-form
degree-one family.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterator

from .core import (
    IdealFamily,
    PreconditionError,
    degree,
    is_rare,
    members,
    nds,
    rare_vertex_certificate,
    submasks,
    tsh,
    validate_ideal,
)
from .minors import contraction_ideal, ideal_deletion


class CaseTag(enum.Enum):
    BASE = "Base"
    DEG1_WITH_UV = "Deg1WithUV"
    DEG1_NO_UV = "Deg1NoUV"
    DEG_GE2_WITH_UV = "DegGe2WithUV"
    DEG_GE2_NO_UV = "DegGe2NoUV"


class IdentityMismatch(RuntimeError):
    """A replayed identity or bound failed; always a bug or a counterexample."""

    def __init__(self, message: str, family: IdealFamily, vertex: int, case: CaseTag | None = None):
        super().__init__(message)
        self.family = family
        self.vertex = vertex
        self.case = case


def classify_case(F: IdealFamily, v: int) -> CaseTag:
    F = validate_ideal(F)
    if not is_rare(F, v):
        raise PreconditionError(f"vertex {v} is not rare")
    if F.n == 1:
        return CaseTag.BASE
    with_uv = (F.ground & ~(1 << v)) in F
    if degree(F, v) == 1:
        return CaseTag.DEG1_WITH_UV if with_uv else CaseTag.DEG1_NO_UV
    return CaseTag.DEG_GE2_WITH_UV if with_uv else CaseTag.DEG_GE2_NO_UV


def check_case_identity(F: IdealFamily, v: int, tag: CaseTag) -> tuple[int, int]:
    """Return ``(nds(F), case formula)``; raises :class:`IdentityMismatch` if they differ."""
    F = validate_ideal(F)
    actual = classify_case(F, v)
    if actual is not tag:
        raise PreconditionError(f"vertex {v} falls in case {actual.value}, not {tag.value}")
    n = F.n
    lhs = nds(F)

    def fail(msg: str):
        return IdentityMismatch(f"{tag.value} at vertex {v}: {msg}", F, v, tag)

    if tag is CaseTag.BASE:
        rhs = 0
    elif tag is CaseTag.DEG1_WITH_UV:
        rest = F.ground & ~(1 << v)
        expected = set(submasks(rest)) | {F.ground}
        if F.edge_set != expected:
            raise fail("family is not all subsets of U - {v} plus U")
        rhs = n - 2 ** (n - 1)
    elif tag is CaseTag.DEG1_NO_UV:
        delp = ideal_deletion(F, v)
        if len(delp) < 2:
            raise fail("ideal deletion has fewer than two edges")
        rhs = nds(delp) + 2 - len(delp)
    else:
        delp = ideal_deletion(F, v)
        con = contraction_ideal(F, v)
        rhs = nds(delp) + nds(con) + 2 * degree(F, v) - len(F)
        if tag is CaseTag.DEG_GE2_NO_UV:
            rhs += -n + 1
    if lhs != rhs:
        raise fail(f"nds = {lhs} but the case formula gives {rhs}")
    return lhs, rhs


@dataclass(frozen=True)
class InductionCertificate:
    family: IdealFamily
    vertex: int
    case: CaseTag
    identity_lhs: int
    identity_rhs: int
    children: tuple["InductionCertificate", ...] = field(default=())

    @property
    def nds(self) -> int:
        return self.identity_lhs

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def nodes(self) -> Iterator["InductionCertificate"]:
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_dict(self) -> dict:
        F = self.family
        return {
            "ground": F.vertices,
            "edges": [members(e) for e in F.edges],
            "num_edges": len(F),
            "tsh": tsh(F),
            "nds": self.identity_lhs,
            "vertex": self.vertex,
            "degree": degree(F, self.vertex),
            "case": self.case.value,
            "identity_lhs": self.identity_lhs,
            "identity_rhs": self.identity_rhs,
            "children": [c.to_dict() for c in self.children],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render(self) -> str:
        lines: list[str] = []
        self._render(lines, 0)
        return "\n".join(lines)

    def _render(self, lines: list[str], level: int) -> None:
        F = self.family
        lines.append(
            f"{'  ' * level}{self.case.value} ground={F.vertices} |F|={len(F)} "
            f"v={self.vertex} deg={degree(F, self.vertex)} nds={self.identity_lhs} "
            f"identity: {self.identity_lhs} = {self.identity_rhs}"
        )
        for c in self.children:
            c._render(lines, level + 1)


def replay_induction(F: IdealFamily) -> InductionCertificate:
    """Build and check the full certificate tree rooted at ``F``."""
    F = validate_ideal(F)
    v = rare_vertex_certificate(F).vertex
    tag = classify_case(F, v)
    lhs, rhs = check_case_identity(F, v, tag)
    children: tuple[InductionCertificate, ...] = ()
    if tag is CaseTag.DEG1_NO_UV:
        children = (replay_induction(ideal_deletion(F, v)),)
    elif tag in (CaseTag.DEG_GE2_WITH_UV, CaseTag.DEG_GE2_NO_UV):
        children = (replay_induction(ideal_deletion(F, v)), replay_induction(contraction_ideal(F, v)))
    # Every term of the case formula must be non-positive for the bound to follow.
    slack = 2 * degree(F, v) - len(F)
    if slack > 0 or any(c.nds > 0 for c in children):
        raise IdentityMismatch("a term of the inductive bound is positive", F, v, tag)
    if tag is CaseTag.DEG1_WITH_UV:
        n = F.n
        if len(F) != 2 ** (n - 1) + 1 or tsh(F) != (n - 1) * 2 ** (n - 2) + n:
            raise IdentityMismatch("closed-form size or TSH mismatch", F, v, tag)
    if lhs > 0:
        raise IdentityMismatch(f"nds = {lhs} > 0", F, v, tag)
    return InductionCertificate(F, v, tag, lhs, rhs, children)
