"""Ideal-level calculus and complete-intersection quotient presentations.

Ideals in a quotient ring R = S/C are never reduced mod C; they are carried
as lifts in S that contain the presentation generators.  Colengths, colons,
brackets and equality tests all happen on lifts, which is exact for the
m-primary ideals this package accepts.
"""

from __future__ import annotations

import itertools
import threading
from typing import Optional, Sequence

from .errors import EmptyVariety, InternalError, PreconditionViolated
from .groebner import GroebnerBasis, INFINITE, buchberger
from .poly import MonomialOrder, Polynomial, PolyRing, exponents_divide, exponents_sub


class Ideal:
    """An ideal of a polynomial ring, with a per-order Groebner cache."""

    __slots__ = ("ring", "gens", "_cache", "_lock")

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial]):
        for g in gens:
            ring.check_same(g.ring)
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        self._cache: dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def of(cls, *gens: Polynomial) -> "Ideal":
        if not gens:
            raise PreconditionViolated("Ideal.of needs at least one generator")
        return cls(gens[0].ring, gens)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    def groebner(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        order = order if order is not None else self.ring.order
        with self._lock:
            cached = self._cache.get(order)
        if cached is not None:
            return cached
        ring = self.ring.with_order(order)
        basis = buchberger(ring, [ring.convert(g) for g in self.gens])
        with self._lock:
            self._cache.setdefault(order, basis)
        return basis

    # -- boolean queries ------------------------------------------------------

    def contains(self, f: Polynomial) -> bool:
        G = self.groebner()
        return G.contains(G.ring.convert(f))

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        self.ring.check_same(other.ring)
        return self.groebner().basis == other.groebner().basis

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner().is_unit_ideal()

    def is_m_primary(self) -> bool:
        if self.is_unit():
            raise EmptyVariety("the unit ideal is not proper")
        return self.colength() != INFINITE

    # -- numeric queries ------------------------------------------------------

    def colength(self):
        return self.groebner().colength()

    def krull_dim(self) -> int:
        return self.groebner().krull_dim()

    # -- constructions --------------------------------------------------------

    def plus(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.gens + other.gens)

    def times(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(self.ring, tuple(f * g for f in self.gens for g in other.gens))

    def bracket_power(self, q: int) -> "Ideal":
        self.ring.bracket_level(q)
        return Ideal(self.ring, tuple(g.frobenius_power(q) for g in self.gens))

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J: eliminate t from t*I + (1-t)*J in S[t]."""
        self.ring.check_same(other.ring)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        ring = self.ring
        aux = "t"
        while aux in ring.names:
            aux += "_"
        ext = PolyRing(ring.field, (aux,) + ring.names, MonomialOrder.elim(1))

        def embed(f: Polynomial) -> Polynomial:
            return ext.from_terms(((0,) + e, c) for e, c in f.terms)

        t = ext.variable(0)
        one_minus_t = ext.one() - t
        gens = [t * embed(g) for g in self.gens]
        gens += [one_minus_t * embed(g) for g in other.gens]
        G = buchberger(ext, gens)
        kept = []
        for g in G.basis:
            if all(e[0] == 0 for e, _ in g.terms):
                kept.append(ring.from_terms((e[1:], c) for e, c in g.terms))
        return Ideal(ring, kept)

    def colon(self, other: "Ideal") -> "Ideal":
        """(I : J) as the intersection over generators g of (I cap (g))/g."""
        self.ring.check_same(other.ring)
        if other.is_zero():
            raise PreconditionViolated("colon by the zero ideal")
        result: Optional[Ideal] = None
        for g in other.gens:
            part = Ideal(
                self.ring,
                [_exact_divide(h, g) for h in self.intersect(Ideal(self.ring, [g])).groebner().basis],
            )
            result = part if result is None else result.intersect(part)
        return result

    def reduced_generators(self) -> list[str]:
        return [str(g) for g in self.groebner().basis]


def _exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; anything else is an engine bug."""
    if g.is_zero():
        raise InternalError("exact division by zero")
    ring = f.ring
    inv_lc = ring.field.inv(g.leading_coefficient())
    lt = g.leading_exponents()
    quotient = []
    work = f
    while not work.is_zero():
        e, c = work.terms[0]
        if not exponents_divide(lt, e):
            raise InternalError(f"exact division failed: {f} by {g}")
        mono, coeff = exponents_sub(e, lt), c * inv_lc % ring.p
        quotient.append((mono, coeff))
        work = work - g.multiply_monomial(mono, coeff)
    return ring.from_terms(quotient)


class QuotientPresentation:
    """R = S/C for a complete intersection C = (g_1..g_c); c = 0 means R = S."""

    __slots__ = ("ring", "ci_gens", "dim")

    def __init__(self, ring: PolyRing, ci_gens: Sequence[Polynomial] = ()):
        for g in ci_gens:
            ring.check_same(g.ring)
        self.ring = ring
        self.ci_gens = tuple(g for g in ci_gens if not g.is_zero())
        expected = ring.n - len(self.ci_gens)
        if expected < 0:
            raise PreconditionViolated("more quotient relations than variables")
        if self.ci_gens:
            actual = Ideal(ring, self.ci_gens).krull_dim()
            if actual != expected:
                raise PreconditionViolated(
                    f"not a complete intersection: dim {actual}, expected {expected}"
                )
        self.dim = expected

    def __repr__(self):
        rel = ", ".join(str(g) for g in self.ci_gens)
        return f"{self.ring!r}/({rel})" if rel else f"{self.ring!r}"

    def ideal(self, gens: Sequence[Polynomial]) -> "RIdeal":
        return RIdeal(self, tuple(gens))

    def zero_ideal(self) -> "RIdeal":
        return RIdeal(self, ())

    def is_isolated_singularity(self) -> bool:
        """Jacobian criterion: C + (c x c minors) has finite colength or is (1)."""
        c = len(self.ci_gens)
        if c == 0:
            return True
        jac = [
            [g.partial_derivative(j) for j in range(self.ring.n)] for g in self.ci_gens
        ]
        minors = []
        for cols in itertools.combinations(range(self.ring.n), c):
            minors.append(_determinant([[row[j] for j in cols] for row in jac]))
        sing = Ideal(self.ring, self.ci_gens + tuple(minors))
        G = sing.groebner()
        return G.is_unit_ideal() or G.colength() != INFINITE

    def is_full_ci(self, gens: Sequence[Polynomial]) -> bool:
        """dim-R many elements generating an m-primary R-ideal."""
        if not gens:
            return False
        if len(gens) != self.dim:
            return False
        lift = self.ideal(gens)
        return lift.colength() != INFINITE and not lift.is_unit()


def _determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    """Cofactor expansion; the Jacobian blocks here are tiny (c <= n <= 16)."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    ring = matrix[0][0].ring
    result = ring.zero()
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [[row[k] for k in range(size) if k != j] for row in matrix[1:]]
        term = entry * _determinant(minor)
        result = result + (term if j % 2 == 0 else -term)
    return result


class RIdeal:
    """An ideal of R = S/C stored as its lift gens + C in the ambient ring."""

    __slots__ = ("presentation", "gens", "lift")

    def __init__(self, presentation: QuotientPresentation, gens: Sequence[Polynomial]):
        self.presentation = presentation
        self.gens = tuple(g for g in gens if not g.is_zero())
        self.lift = Ideal(presentation.ring, self.gens + presentation.ci_gens)

    def __repr__(self):
        return f"RIdeal({', '.join(str(g) for g in self.gens) or '0'})"

    def colength(self):
        """Length of R over the quotient: counted on the lift."""
        return self.lift.colength()

    def is_unit(self) -> bool:
        return self.lift.is_unit()

    def is_m_primary(self) -> bool:
        if self.is_unit():
            raise EmptyVariety("the unit ideal is not proper")
        return self.colength() != INFINITE

    def contains(self, f: Polynomial) -> bool:
        return self.lift.contains(f)

    def contains_ideal(self, other: "RIdeal") -> bool:
        return all(self.lift.contains(g) for g in other.gens)

    def equals(self, other: "RIdeal") -> bool:
        return self.lift.equals(other.lift)

    def bracket_power(self, q: int) -> "RIdeal":
        """Lift of the R-bracket power: {g^q} + C, independent of chosen lifts."""
        self.presentation.ring.bracket_level(q)
        return RIdeal(self.presentation, tuple(g.frobenius_power(q) for g in self.gens))

    def colon(self, other: "RIdeal") -> "RIdeal":
        """(self : other) over R, computed as the colon of lifts."""
        result = self.lift.colon(other.lift)
        return RIdeal(self.presentation, result.groebner().basis)

    def reduced_generators(self) -> list[str]:
        return self.lift.reduced_generators()
