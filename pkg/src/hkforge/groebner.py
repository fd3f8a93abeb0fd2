"""Buchberger's algorithm, reduced Groebner bases, colength and dimension.

Pair selection uses the normal strategy: smallest lcm total degree first,
ties broken by pair index, so runs are deterministic.  Every basis element
is kept monic and the final basis is interreduced, which makes reduced
bases canonical and ideal equality a tuple comparison.
"""

from __future__ import annotations

import heapq
import os
from typing import Optional, Sequence

from .errors import EmptyVariety, PreconditionViolated, ResourceCap, RingMismatch
from .poly import (
    Exponents,
    Polynomial,
    PolyRing,
    exponents_divide,
    exponents_lcm,
    exponents_sub,
)

DEFAULT_MAX_PAIRS = 50_000
DEFAULT_MAX_TERMS = 1_000_000

INFINITE = float("inf")

_cap_overrides: dict[str, Optional[int]] = {"pairs": None, "terms": None}


def configure_caps(max_pairs: Optional[int] = None, max_terms: Optional[int] = None):
    """Process-wide cap overrides, used by the CLI flags."""
    _cap_overrides["pairs"] = max_pairs
    _cap_overrides["terms"] = max_terms


def default_max_pairs() -> int:
    if _cap_overrides["pairs"] is not None:
        return _cap_overrides["pairs"]
    return int(os.environ.get("HKFORGE_MAX_PAIRS", DEFAULT_MAX_PAIRS))


def default_max_terms() -> int:
    if _cap_overrides["terms"] is not None:
        return _cap_overrides["terms"]
    return DEFAULT_MAX_TERMS


class _Budget:
    """Counts terms touched during reductions; trips ResourceCap when spent."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int):
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise ResourceCap(f"term budget {self.limit} exhausted")


def normal_form(
    f: Polynomial,
    basis: Sequence[Polynomial],
    budget: Optional[_Budget] = None,
) -> Polynomial:
    """Fully reduce f: no term of the result is divisible by any basis LT.

    Deterministic: the greatest reducible term is rewritten by the first
    matching element of the basis sequence.  Basis elements must be monic.
    """
    for g in basis:
        if g.ring != f.ring:
            raise RingMismatch(f"{g.ring!r} vs {f.ring!r}")
    lts = [g.leading_exponents() for g in basis]
    tail: list[tuple[Exponents, int]] = []
    work = f
    while not work.is_zero():
        e, c = work.terms[0]
        reducer = None
        for lt, g in zip(lts, basis):
            if exponents_divide(lt, e):
                reducer = g
                break
        if reducer is None:
            tail.append((e, c))
            work = Polynomial(work.ring, work.terms[1:])
        else:
            step = reducer.multiply_monomial(exponents_sub(e, reducer.leading_exponents()), c)
            if budget is not None:
                budget.charge(len(step.terms))
            work = work - step
    return f.ring.from_terms(tail)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials in the same ring."""
    f.ring.check_same(g.ring)
    gamma = exponents_lcm(f.leading_exponents(), g.leading_exponents())
    return f.multiply_monomial(exponents_sub(gamma, f.leading_exponents()), 1) - g.multiply_monomial(
        exponents_sub(gamma, g.leading_exponents()), 1
    )


def _interreduce(ring: PolyRing, basis: list[Polynomial]) -> tuple[Polynomial, ...]:
    """Minimalize then tail-reduce: the unique reduced basis, sorted by LT."""
    basis = sorted(
        {g.monic() for g in basis if not g.is_zero()},
        key=lambda g: ring.order.key(g.leading_exponents()),
    )
    minimal: list[Polynomial] = []
    for i, g in enumerate(basis):
        lt = g.leading_exponents()
        if any(
            exponents_divide(h.leading_exponents(), lt)
            for j, h in enumerate(basis)
            if j != i and (j < i or h.leading_exponents() != lt)
        ):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: ring.order.key(g.leading_exponents()), reverse=True)
    return tuple(reduced)


def buchberger(
    ring: PolyRing,
    gens: Sequence[Polynomial],
    max_pairs: Optional[int] = None,
    max_terms: Optional[int] = None,
    chain_criterion: bool = False,
) -> "GroebnerBasis":
    """Reduced Groebner basis of the ideal generated by gens.

    Budget overruns (processed pairs past max_pairs, or reduction work past
    max_terms) raise ResourceCap rather than hang.
    """
    if max_pairs is None:
        max_pairs = default_max_pairs()
    if max_terms is None:
        max_terms = default_max_terms()
    for g in gens:
        ring.check_same(g.ring)
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis(ring, (), reduced=True)
    budget = _Budget(max_terms)
    seen = set()
    work: list[Polynomial] = []
    for g in basis:
        if g not in seen:
            seen.add(g)
            work.append(g)
    basis = work
    lts = [g.leading_exponents() for g in basis]

    heap: list[tuple[int, int, int]] = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int):
        for i in range(j):
            gamma = exponents_lcm(lts[i], lts[j])
            heapq.heappush(heap, (sum(gamma), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise ResourceCap(f"pair budget {max_pairs} exhausted")
        a, b = lts[i], lts[j]
        gamma = exponents_lcm(a, b)
        # Coprime leading terms: the S-polynomial always reduces to zero.
        if all(min(x, y) == 0 for x, y in zip(a, b)):
            continue
        if chain_criterion and any(
            k != i
            and k != j
            and exponents_divide(lts[k], gamma)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis, budget)
        if remainder.is_zero():
            continue
        remainder = remainder.monic()
        basis.append(remainder)
        lts.append(remainder.leading_exponents())
        push_pairs(len(basis) - 1)

    return GroebnerBasis(ring, _interreduce(ring, basis), reduced=True)


class GroebnerBasis:
    """A reduced Groebner basis with staircase combinatorics on top."""

    __slots__ = ("ring", "basis", "reduced", "_colength", "_dim")

    def __init__(self, ring: PolyRing, basis: tuple[Polynomial, ...], reduced: bool = False):
        self.ring = ring
        self.basis = tuple(basis)
        self.reduced = reduced
        self._colength = None
        self._dim = None

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring.signature(), self.basis))

    def __repr__(self):
        return f"GroebnerBasis[{'; '.join(str(g) for g in self.basis)}]"

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def leading_exponents(self) -> list[Exponents]:
        return [g.leading_exponents() for g in self.basis]

    def staircase(self) -> list[Exponents]:
        """Minimal generators of the leading-term ideal (an antichain)."""
        lts = self.leading_exponents()
        return [
            e
            for i, e in enumerate(lts)
            if not any(exponents_divide(o, e) for j, o in enumerate(lts) if j != i)
        ]

    def normal_form(self, f: Polynomial) -> Polynomial:
        self.ring.check_same(f.ring)
        return normal_form(f, self.basis)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def verify(self) -> bool:
        """S-polynomial criterion: every pair reduces to zero."""
        for i in range(len(self.basis)):
            for j in range(i):
                if not normal_form(s_polynomial(self.basis[i], self.basis[j]), self.basis).is_zero():
                    return False
        return True

    def colength(self):
        """Number of standard monomials; inf when the quotient has positive dim."""
        if self._colength is None:
            self._colength = self._compute_colength()
        return self._colength

    def _compute_colength(self):
        if self.is_unit_ideal():
            return 0
        n = self.ring.n
        lts = self.staircase()
        for i in range(n):
            if not any(sum(e) == e[i] and e[i] > 0 for e in lts):
                return INFINITE
        return _count_standard(frozenset(lts), n, {})

    def krull_dim(self) -> int:
        if self._dim is None:
            if self.is_unit_ideal():
                raise EmptyVariety("the unit ideal has empty vanishing locus")
            self._dim = self._compute_dim()
        return self._dim

    def _compute_dim(self) -> int:
        n = self.ring.n
        supports = []
        for e in self.staircase():
            supports.append(sum(1 << i for i in range(n) if e[i]))
        full = (1 << n) - 1
        best = 0
        for mask in range(full + 1):
            size = bin(mask).count("1")
            if size <= best:
                continue
            if all(s & ~mask for s in supports):
                best = size
        return best


def _count_standard(lts: frozenset, n: int, memo: dict) -> int:
    """Monomials outside the monomial ideal generated by lts (finite case).

    Splits on a mixed generator g and a variable i with k = g_i:
    count(M) = count(M + (x_i^k)) + count(M : x_i^k); pure-power boxes are
    counted directly as the product of minimal exponents.
    """
    cached = memo.get(lts)
    if cached is not None:
        return cached
    mixed = None
    box = [None] * n
    for e in lts:
        support = [i for i in range(n) if e[i]]
        if len(support) == 1:
            i = support[0]
            if box[i] is None or e[i] < box[i]:
                box[i] = e[i]
        elif mixed is None or sum(e) < sum(mixed):
            mixed = e
    if mixed is None:
        result = 1
        for a in box:
            result *= a
    else:
        i = max(range(n), key=lambda v: mixed[v])
        k = mixed[i]
        cap = tuple(k if v == i else 0 for v in range(n))
        plus = _minimalize({e for e in lts if not exponents_divide(cap, e)} | {cap})
        colon = _minimalize(
            {tuple(max(x - k, 0) if v == i else x for v, x in enumerate(e)) for e in lts}
        )
        result = _count_standard(plus, n, memo) + _count_standard(colon, n, memo)
    memo[lts] = result
    return result


def _minimalize(exps: set) -> frozenset:
    out = set()
    for e in exps:
        if not any(o != e and exponents_divide(o, e) for o in exps):
            out.add(e)
    return frozenset(out)
