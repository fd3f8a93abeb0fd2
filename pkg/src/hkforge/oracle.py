"""Brute-force linear-algebra verifiers, independent of the Groebner engine.

Everything here works in the finite-dimensional space S_{<D} of polynomials
truncated below total degree D.  Dropping the terms of degree >= D is exact
modulo m^D because those monomials span m^D, so the frame row space is the
image of I + m^D and

    colength_truncated(gens, D) = dim_k S/(I + m^D).

Running D upward until two consecutive values agree, with every pure power
x_i^(D-1) already a member, certifies the stable value as dim_k S/I.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import PreconditionViolated, ResourceCap
from .poly import Exponents, Polynomial, PolyRing, monomials_below_degree

MAX_COLUMNS = 20000
DEFAULT_D_MAX = 64


class MacaulayFrame:
    """Row-reduced span of truncated monomial multiples of the generators."""

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial], bound: int):
        if bound < 1:
            raise PreconditionViolated("degree bound must be >= 1")
        for g in gens:
            ring.check_same(g.ring)
        self.ring = ring
        self.bound = bound
        self.basis = monomials_below_degree(ring.n, bound)
        if len(self.basis) > MAX_COLUMNS:
            raise ResourceCap(
                f"{len(self.basis)} truncation columns exceed {MAX_COLUMNS}"
            )
        # Columns sorted by the ring order, biggest monomial first, so the
        # leading entry of a reduced row is its leading monomial.
        self.basis.sort(key=ring.order.key, reverse=True)
        self.column: dict[Exponents, int] = {e: i for i, e in enumerate(self.basis)}
        self.pivots: dict[int, np.ndarray] = {}
        for g in gens:
            if g.is_zero():
                continue
            low = min(sum(e) for e, _ in g.terms)
            for m in monomials_below_degree(ring.n, max(bound - low, 0)):
                self.add_row(g.multiply_monomial(m, 1))

    def vector(self, f: Polynomial) -> np.ndarray:
        """Truncated coordinate vector of f in the monomial basis."""
        v = np.zeros(len(self.basis), dtype=np.int64)
        for e, c in f.terms:
            col = self.column.get(e)
            if col is not None:
                v[col] = c
        return v

    def reduce(self, v: np.ndarray) -> np.ndarray:
        p = self.ring.p
        while True:
            nz = np.nonzero(v)[0]
            if len(nz) == 0:
                return v
            j = int(nz[0])
            row = self.pivots.get(j)
            if row is None:
                return v
            v = (v - int(v[j]) * row) % p

    def add_row(self, f: Polynomial) -> bool:
        """Reduce a polynomial row into the frame; True if the rank grew."""
        v = self.reduce(self.vector(f) % self.ring.p)
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        j = int(nz[0])
        v = v * self.ring.field.inv(int(v[j])) % self.ring.p
        self.pivots[j] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, f: Polynomial) -> bool:
        """Membership of f in I + m^D, decided inside the truncation."""
        return not np.any(self.reduce(self.vector(f) % self.ring.p))


def colength_truncated(ring: PolyRing, gens: Sequence[Polynomial], bound: int) -> int:
    frame = MacaulayFrame(ring, gens, bound)
    return len(frame.basis) - frame.rank


def colength_bruteforce(
    ring: PolyRing,
    gens: Iterable[Polynomial],
    d_start: int = 2,
    d_max: int = DEFAULT_D_MAX,
) -> Optional[int]:
    """Stabilized brute-force colength; None when not certified by d_max.

    Certificate: values at D and D+1 agree and every pure power x_i^(D-1)
    lies in the frame, which forces I + m^D = I and hence finiteness.
    """
    gens = list(gens)
    prev: Optional[int] = None
    prev_pure = False
    for bound in range(max(d_start, 2), d_max + 1):
        frame = MacaulayFrame(ring, gens, bound)
        value = len(frame.basis) - frame.rank
        if prev is not None and value == prev and prev_pure:
            return value
        prev = value
        prev_pure = all(
            frame.contains(ring.variable(i) ** (bound - 1)) for i in range(ring.n)
        )
    return None


def membership_bruteforce(
    f: Polynomial, ring: PolyRing, gens: Sequence[Polynomial], bound: int
) -> bool:
    """True iff f lies in I + m^bound; callers pick a stabilized bound."""
    if f.total_degree() >= bound:
        raise PreconditionViolated("membership bound must exceed deg f")
    return MacaulayFrame(ring, gens, bound).contains(f)
