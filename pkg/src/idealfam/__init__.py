"""Ideal set families: degree calculus, minors, exhaustive enumeration and
a checked replay of the NDS <= 0 induction."""

from .core import (
    DomainError,
    FamilyError,
    IdealFamily,
    IdealViolation,
    NotIdealError,
    PreconditionError,
    RareVertexCertificate,
    SetFamily,
    degree,
    degrees,
    family_report,
    intersection_closure,
    intersection_witness,
    is_average_rare,
    is_ideal,
    is_intersection_closed,
    is_rare,
    nds,
    rare_vertex_certificate,
    rare_vertices,
    tsh,
    validate_ideal,
)
from .minors import (
    MinorKind,
    check_decomposition_identities,
    contraction,
    contraction_ideal,
    degree_one_characterization,
    deletion,
    ideal_deletion,
    trace,
)
from .replay import CaseTag, InductionCertificate, classify_case, check_case_identity, replay_induction

__version__ = "0.1.0"
