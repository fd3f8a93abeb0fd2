"""hkforge: exact Hilbert-Kunz, linkage and invariant-ring computations
over prime fields."""

from .errors import (
    DivisionByZero,
    DoubleLinkFailed,
    EmptyVariety,
    HKForgeError,
    IdentityViolation,
    InternalError,
    ModularCase,
    NoetherBoundViolated,
    NotAPowerOfP,
    ParseError,
    PreconditionViolated,
    ResourceCap,
    RingMismatch,
    UnknownVariable,
)
from .groebner import GroebnerBasis, INFINITE, buchberger, normal_form, s_polynomial
from .ideals import Ideal, QuotientPresentation, RIdeal
from .invariants import (
    MatrixGroup,
    group_closure,
    invariant_basis,
    noether_bound_value,
    noether_ideal,
    reynolds,
)
from .linkage import (
    LinkageDatum,
    ReciprocityReport,
    corner_power,
    deviation,
    gorenstein_parity_check,
    hk_table,
    link,
    pd_finite_probe,
    reciprocity_report,
)
from .oracle import colength_bruteforce, colength_truncated, membership_bruteforce
from .parsing import parse_polynomial
from .poly import MonomialOrder, Polynomial, PolyRing
from .problem import ProblemFile, load_problem, problem_from_dict
from .scalar import FpElement, PrimeField, rational, render_rational

__version__ = "0.1.0"

__all__ = [
    "DivisionByZero",
    "DoubleLinkFailed",
    "EmptyVariety",
    "FpElement",
    "GroebnerBasis",
    "HKForgeError",
    "INFINITE",
    "IdentityViolation",
    "Ideal",
    "InternalError",
    "LinkageDatum",
    "MatrixGroup",
    "ModularCase",
    "MonomialOrder",
    "NoetherBoundViolated",
    "NotAPowerOfP",
    "ParseError",
    "Polynomial",
    "PolyRing",
    "PreconditionViolated",
    "PrimeField",
    "ProblemFile",
    "QuotientPresentation",
    "RIdeal",
    "ReciprocityReport",
    "ResourceCap",
    "RingMismatch",
    "UnknownVariable",
    "buchberger",
    "colength_bruteforce",
    "colength_truncated",
    "corner_power",
    "deviation",
    "gorenstein_parity_check",
    "group_closure",
    "hk_table",
    "invariant_basis",
    "link",
    "load_problem",
    "membership_bruteforce",
    "noether_bound_value",
    "noether_ideal",
    "normal_form",
    "parse_polynomial",
    "pd_finite_probe",
    "problem_from_dict",
    "rational",
    "reciprocity_report",
    "render_rational",
    "reynolds",
    "s_polynomial",
]
