"""Linkage, corner powers, Hilbert-Kunz tables and reciprocity reports.

Given an m-primary ideal I and a full complete-intersection ideal a inside
it, the link is J = (a : I) and the corner power at q is

    corner(q) = (a^[q] : J^[q])

which always contains I^[q].  The deviation colength(I^[q]) - colength(corner)
is nonnegative, vanishes for all q exactly when I has finite projective
dimension over a CI presentation, and ties the four lengths together through
an identity that is asserted, not assumed: a violation raises an internal
error because it would be an engine bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    DoubleLinkFailed,
    IdentityViolation,
    PreconditionViolated,
    ResourceCap,
)
from .groebner import INFINITE
from .ideals import QuotientPresentation, RIdeal
from .scalar import rational

FINITE = "finite"
INFINITE_PD = "infinite"


@dataclass
class LinkageDatum:
    presentation: QuotientPresentation
    I: RIdeal
    a: RIdeal
    J: RIdeal
    a_inside_i: bool
    m_primary: bool
    double_link: bool
    degenerate: bool

    @property
    def self_linked(self) -> bool:
        return self.I.equals(self.J)


def link(I: RIdeal, a: RIdeal) -> LinkageDatum:
    """J = (a : I), with every linkage precondition checked and recorded."""
    P = I.presentation
    if a.presentation.ring != P.ring or a.presentation.ci_gens != P.ci_gens:
        raise PreconditionViolated("I and a live over different presentations")
    if not P.is_full_ci(a.gens):
        raise PreconditionViolated(
            f"a must be {P.dim} elements generating an m-primary ideal"
        )
    if not I.contains_ideal(a):
        raise PreconditionViolated("a is not contained in I")
    if not I.is_m_primary():
        raise PreconditionViolated("I is not m-primary")
    J = a.colon(I)
    degenerate = J.is_unit()
    back = a.colon(J)
    if not back.equals(I):
        raise DoubleLinkFailed(f"(a : J) != I for I = {I!r}, a = {a!r}")
    return LinkageDatum(
        presentation=P,
        I=I,
        a=a,
        J=J,
        a_inside_i=True,
        m_primary=True,
        double_link=True,
        degenerate=degenerate,
    )


def corner_power(L: LinkageDatum, q: int) -> RIdeal:
    """(a^[q] : J^[q]); q = 1 returns I itself by double linkage."""
    return L.a.bracket_power(q).colon(L.J.bracket_power(q))


def deviation(L: LinkageDatum, q: int) -> int:
    """colength(I^[q]) - colength(corner(q)), always >= 0."""
    len_bracket = L.I.bracket_power(q).colength()
    len_corner = corner_power(L, q).colength()
    value = len_bracket - len_corner
    if value < 0:
        raise IdentityViolation(
            f"corner power smaller than bracket power at q = {q}: "
            f"{len_bracket} < {len_corner}"
        )
    return value


def pd_finite_probe(L: LinkageDatum, q: Optional[int] = None) -> str:
    """Single-q projective-dimension certificate, valid over CI presentations.

    q = 1 is vacuous (the corner power at 1 is I), so the default probe
    level is p^2.
    """
    p = L.presentation.ring.p
    if q is None:
        q = p * p
    if q <= 1:
        raise PreconditionViolated("probe level must be at least p")
    L.presentation.ring.bracket_level(q)
    return FINITE if deviation(L, q) == 0 else INFINITE_PD


@dataclass
class HKRow:
    n: int
    q: int
    len_i: int
    len_j: int
    len_a: int
    len_corner: int
    deviation: int
    vraciu_ok: bool
    smith_ok: bool
    normalized_i: Fraction
    normalized_j: Fraction
    normalized_a: Fraction


@dataclass
class ReciprocityReport:
    rows: list[HKRow]
    dim: int
    smith_identity_at_1: bool
    reciprocity_all_q: bool
    pd_probe: str
    isolated_singularity: bool
    full_ci: bool
    m_primary: bool
    degenerate: bool
    self_linked: bool


def hk_table(I: RIdeal, n_max: int) -> list[tuple[int, int, int, Fraction]]:
    """Rows (n, q, colength of I^[q], colength/q^dim) for n = 0..n_max."""
    if n_max < 0:
        raise PreconditionViolated("n_max must be >= 0")
    if not I.is_m_primary():
        raise PreconditionViolated("Hilbert-Kunz table needs an m-primary ideal")
    p = I.presentation.ring.p
    d = I.presentation.dim
    rows = []
    for n in range(n_max + 1):
        q = p**n
        try:
            length = I.bracket_power(q).colength()
        except ResourceCap as exc:
            exc.completed = n - 1
            raise
        rows.append((n, q, length, rational(length, q**d)))
    return rows


def reciprocity_report(I: RIdeal, a: RIdeal, n_max: int) -> ReciprocityReport:
    """One row per q = p^n with all four lengths and both identities.

    The corner identity len_corner + len_J = len_a must hold on every row
    and the q = 1 row must satisfy len_I + len_J = len_a; violations raise
    IdentityViolation.  Reciprocity at higher q is recorded, not enforced:
    its failure is exactly the infinite-projective-dimension signal.
    """
    P = I.presentation
    if P.dim < 1:
        raise PreconditionViolated("reciprocity needs a positive-dimensional ring")
    if n_max < 0:
        raise PreconditionViolated("n_max must be >= 0")
    L = link(I, a)
    p = P.ring.p
    rows = []
    for n in range(n_max + 1):
        q = p**n
        len_i = L.I.bracket_power(q).colength()
        len_j = L.J.bracket_power(q).colength()
        len_a = L.a.bracket_power(q).colength()
        len_corner = corner_power(L, q).colength()
        dev = len_i - len_corner
        if dev < 0:
            raise IdentityViolation(f"negative deviation {dev} at q = {q}")
        vraciu_ok = len_corner + len_j == len_a
        if not vraciu_ok:
            raise IdentityViolation(
                f"corner identity fails at q = {q}: {len_corner} + {len_j} != {len_a}"
            )
        smith_ok = len_i + len_j == len_a
        if n == 0 and not smith_ok:
            raise IdentityViolation(
                f"length identity fails at q = 1: {len_i} + {len_j} != {len_a}"
            )
        scale = q**P.dim
        rows.append(
            HKRow(
                n=n,
                q=q,
                len_i=len_i,
                len_j=len_j,
                len_a=len_a,
                len_corner=len_corner,
                deviation=dev,
                vraciu_ok=vraciu_ok,
                smith_ok=smith_ok,
                normalized_i=rational(len_i, scale),
                normalized_j=rational(len_j, scale),
                normalized_a=rational(len_a, scale),
            )
        )
    if n_max >= 1:
        probe = FINITE if rows[-1].deviation == 0 else INFINITE_PD
    else:
        probe = pd_finite_probe(L)
    return ReciprocityReport(
        rows=rows,
        dim=P.dim,
        smith_identity_at_1=rows[0].smith_ok,
        reciprocity_all_q=all(r.smith_ok for r in rows),
        pd_probe=probe,
        isolated_singularity=P.is_isolated_singularity(),
        full_ci=True,
        m_primary=True,
        degenerate=L.degenerate,
        self_linked=L.self_linked,
    )


@dataclass
class ParityReport:
    self_linked: bool
    even_certified: bool
    total_length: int


def gorenstein_parity_check(P: QuotientPresentation, I: RIdeal) -> ParityReport:
    """Over a zero-dimensional CI quotient: if (0 : I) = I then len(R) is even.

    A non-self-linked I is reported, not errored; an odd length for a
    self-linked I contradicts the duality pairing len(R) = 2*len(R/I) and
    raises IdentityViolation.
    """
    if P.dim != 0:
        raise PreconditionViolated("parity check needs a zero-dimensional ring")
    total = P.zero_ideal().colength()
    if total == INFINITE:
        raise PreconditionViolated("quotient ring is not finite length")
    annihilator = P.zero_ideal().colon(I)
    self_linked = annihilator.equals(I)
    if self_linked and total % 2 != 0:
        raise IdentityViolation(
            f"self-linked ideal in a ring of odd length {total}"
        )
    return ParityReport(
        self_linked=self_linked,
        even_certified=self_linked and total % 2 == 0,
        total_length=int(total),
    )
