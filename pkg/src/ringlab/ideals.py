"""Ideal generation, full lattice enumeration, spectrum, radicals, content.

The main lattice path closes the set of principal ideals under pairwise sum
(every ideal of a finite ring is a finite sum of principal ideals); an
independent brute-force oracle filters all additive subgroups and is kept
for carriers of at most ``bruteforce_lattice_max`` elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .budget import Budget, DEFAULT_BUDGET
from .errors import BudgetExceededError, CrossRingError, RingConstructionError
from .rings import FiniteRing, Poly


class Ideal:
    """An ideal as a membership set plus a generator list.

    Membership is verified at construction: contains zero, closed under
    addition, absorbs ambient multiplication.
    """

    __slots__ = ("ring", "members", "generators", "_sorted")

    def __init__(self, ring: FiniteRing, members: Iterable[int],
                 generators: Sequence[int] = (), *, validate: bool = True):
        self.ring = ring
        self.members = frozenset(int(m) for m in members)
        self.generators = tuple(int(g) for g in generators)
        self._sorted: Optional[tuple] = None
        if validate:
            self._validate()

    def _validate(self) -> None:
        R = self.ring
        if not self.members <= set(range(R.size)):
            raise RingConstructionError("ideal member out of range")
        if R.zero not in self.members:
            raise RingConstructionError("ideal must contain zero")
        idx = np.fromiter(self.members, dtype=np.int64)
        if not np.isin(R.add_table[np.ix_(idx, idx)], idx).all():
            raise RingConstructionError("ideal not closed under addition")
        if not np.isin(R.mul_table[:, idx], idx).all():
            raise RingConstructionError("ideal not closed under ambient multiplication")
        for g in self.generators:
            if g not in self.members:
                raise RingConstructionError("generator outside the ideal")

    @staticmethod
    def from_members(ring: FiniteRing, members: Iterable[int]) -> "Ideal":
        mem = frozenset(int(m) for m in members)
        return Ideal(ring, mem, recover_generators(ring, mem))

    @property
    def sorted_members(self) -> tuple:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members))
        return self._sorted

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_zero(self) -> bool:
        return self.members == {self.ring.zero}

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.members) == self.ring.size

    @property
    def is_proper(self) -> bool:
        return not self.is_unit_ideal

    def contains(self, a: int) -> bool:
        return a in self.members

    def member_names(self) -> tuple:
        return tuple(self.ring.names[m] for m in self.sorted_members)

    def generator_names(self) -> tuple:
        return tuple(self.ring.names[g] for g in self.generators)

    def __le__(self, other: "Ideal") -> bool:
        self._same_ring(other)
        return self.members <= other.members

    def __lt__(self, other: "Ideal") -> bool:
        self._same_ring(other)
        return self.members < other.members

    def _same_ring(self, other: "Ideal") -> None:
        if self.ring is not other.ring:
            raise CrossRingError("ideals live in different rings")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Ideal) and self.ring is other.ring
                and self.members == other.members)

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __repr__(self) -> str:
        gens = ",".join(self.generator_names()) or "0"
        return f"Ideal(({gens}) of {self.ring.provenance}, size={self.size})"


def _additive_closure(R: FiniteRing, seed: np.ndarray) -> np.ndarray:
    mask = np.zeros(R.size, dtype=bool)
    mask[seed] = True
    mask[R.zero] = True
    while True:
        idx = np.nonzero(mask)[0]
        new = np.zeros(R.size, dtype=bool)
        new[R.add_table[np.ix_(idx, idx)].ravel()] = True
        if (new & ~mask).any():
            mask |= new
        else:
            return mask


def ideal_generate(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing the generators: all multiples of the
    generators, closed under addition to a fixpoint."""
    gens = [int(g) for g in gens]
    seed = [R.zero]
    for g in gens:
        seed.extend(R.mul_table[:, g].tolist())
    mask = _additive_closure(R, np.array(sorted(set(seed)), dtype=np.int64))
    return Ideal(R, np.nonzero(mask)[0].tolist(), gens)


def recover_generators(R: FiniteRing, members: frozenset) -> tuple:
    """Greedy smallest-index-first generating set for a member set."""
    gens: list = []
    span = {R.zero}
    for m in sorted(members):
        if m in span:
            continue
        gens.append(m)
        span = set(np.nonzero(_additive_closure(
            R, np.array(sorted({x for g in gens for x in R.mul_table[:, g].tolist()}),
                        dtype=np.int64)))[0].tolist())
    return tuple(gens)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, {R.zero}, ())


def unit_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, range(R.size), (R.one,))


def principal_ideal(R: FiniteRing, a: int) -> Ideal:
    return Ideal(R, np.unique(R.mul_table[:, a]).tolist(), (a,))


# -- ideal arithmetic ----------------------------------------------------------


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    I._same_ring(J)
    R = I.ring
    a = np.fromiter(I.members, dtype=np.int64)
    b = np.fromiter(J.members, dtype=np.int64)
    members = frozenset(np.unique(R.add_table[np.ix_(a, b)]).tolist())
    return Ideal(R, members, recover_generators(R, members))

def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    I._same_ring(J)
    R = I.ring
    a = np.fromiter(I.members, dtype=np.int64)
    b = np.fromiter(J.members, dtype=np.int64)
    prods = np.unique(R.mul_table[np.ix_(a, b)])
    members = frozenset(np.nonzero(_additive_closure(R, prods))[0].tolist())
    return Ideal(R, members, recover_generators(R, members))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    I._same_ring(J)
    members = I.members & J.members
    return Ideal(I.ring, members, recover_generators(I.ring, members))


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {x : x*J <= I}."""
    I._same_ring(J)
    R = I.ring
    j = np.fromiter(J.members, dtype=np.int64)
    in_I = np.zeros(R.size, dtype=bool)
    in_I[list(I.members)] = True
    ok = in_I[R.mul_table[:, j]].all(axis=1)
    members = frozenset(np.nonzero(ok)[0].tolist())
    return Ideal(R, members, recover_generators(R, members))


@dataclass(frozen=True)
class IdealArith:
    sum: Ideal
    product: Ideal
    intersection: Ideal
    colon: Ideal


def ideal_arith(I: Ideal, J: Ideal) -> IdealArith:
    return IdealArith(ideal_sum(I, J), ideal_product(I, J),
                      ideal_intersection(I, J), ideal_colon(I, J))


# -- the full lattice ----------------------------------------------------------


def all_ideals(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET) -> list:
    """Every ideal of R exactly once, sorted by (size, member tuple).

    Computed as the closure of the principal ideals under pairwise sum.
    """
    if R.size > budget.max_lattice_size:
        raise BudgetExceededError(
            f"ring of size {R.size} exceeds the lattice budget {budget.max_lattice_size}")
    cached = R._cache.get("lattice")
    if cached is not None:
        return list(cached)
    principals = {}
    for a in range(R.size):
        mem = frozenset(np.unique(R.mul_table[:, a]).tolist())
        principals.setdefault(mem, a)
    found = dict(principals)
    worklist = list(principals)
    while worklist:
        nxt = []
        for m1 in worklist:
            a1 = np.fromiter(m1, dtype=np.int64)
            for m2 in list(found):
                if m1 <= m2 or m2 <= m1:
                    continue
                a2 = np.fromiter(m2, dtype=np.int64)
                s = frozenset(np.unique(R.add_table[np.ix_(a1, a2)]).tolist())
                if s not in found:
                    found[s] = None
                    nxt.append(s)
        worklist = nxt
    out = [Ideal(R, mem, recover_generators(R, mem)) for mem in found]
    out.sort(key=lambda I: (I.size, I.sorted_members))
    R._cache["lattice"] = tuple(out)
    return out


def _all_subgroups(R: FiniteRing) -> set:
    """All additive subgroups, as member frozensets (join-closure of the
    cyclic subgroups)."""
    cyclics = set()
    for a in range(R.size):
        cur = {R.zero}
        x = a
        while x not in cur:
            cur.add(x)
            x = R.add(x, a)
        cyclics.add(frozenset(cur))
    found = set(cyclics)
    worklist = list(cyclics)
    while worklist:
        h = worklist.pop()
        for c in cyclics:
            if c <= h:
                continue
            joined = frozenset(np.nonzero(_additive_closure(
                R, np.fromiter(h | c, dtype=np.int64)))[0].tolist())
            if joined not in found:
                found.add(joined)
                worklist.append(joined)
    return found


def all_ideals_bruteforce(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET) -> list:
    """Independent lattice oracle: filter every additive subgroup for
    closure under ambient multiplication.  Only for small carriers."""
    if R.size > budget.bruteforce_lattice_max:
        raise BudgetExceededError(
            f"ring of size {R.size} exceeds the brute-force lattice cap")
    out = []
    for mem in _all_subgroups(R):
        idx = np.fromiter(mem, dtype=np.int64)
        if np.isin(R.mul_table[:, idx], idx).all():
            out.append(Ideal(R, mem, recover_generators(R, mem)))
    out.sort(key=lambda I: (I.size, I.sorted_members))
    return out


def is_regular_ideal(R: FiniteRing, I: Ideal):
    """True iff I contains a regular element; returns (verdict, witness).

    Finite-ring law (asserted): a regular ideal is the unit ideal.
    """
    reg = R.regular_elements()
    hit = sorted(I.members & reg)
    verdict = bool(hit)
    if verdict != I.is_unit_ideal:
        raise RingConstructionError(
            "finite-ring law violated: regular ideal that is not the unit ideal")
    return verdict, (hit[0] if hit else None)


# -- spectrum ------------------------------------------------------------------


def primality_witness(R: FiniteRing, I: Ideal):
    """None if I is prime; otherwise a witness.

    A proper ideal P is prime iff the product of any two elements outside P
    stays outside P (equivalently R/P is a nonzero ring without zero
    divisors).  The witness is "unit ideal" or a pair (a, b) with a, b
    outside I and a*b inside.
    """
    if I.is_unit_ideal:
        return "unit ideal"
    outside = np.array([a for a in range(R.size) if a not in I.members], dtype=np.int64)
    in_I = np.zeros(R.size, dtype=bool)
    in_I[list(I.members)] = True
    bad = in_I[R.mul_table[np.ix_(outside, outside)]]
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return (int(outside[i]), int(outside[j]))
    return None


def is_prime_ideal(R: FiniteRing, I: Ideal) -> bool:
    return primality_witness(R, I) is None


def is_maximal_ideal(R: FiniteRing, I: Ideal) -> bool:
    """Direct maximality test: proper, and adjoining any outside element
    generates the unit ideal."""
    if I.is_unit_ideal:
        return False
    for x in range(R.size):
        if x in I.members:
            continue
        grown = ideal_sum(I, principal_ideal(R, x))
        if grown.is_proper:
            return False
    return True


@dataclass(frozen=True)
class SpectrumView:
    """Primes and maximals of a ring with their containment poset."""

    ring: FiniteRing
    primes: tuple
    maximals: tuple
    order: np.ndarray  # order[i, j] iff primes[i] <= primes[j]

    def v_of(self, I: Ideal) -> tuple:
        """V(I): primes containing I."""
        return tuple(p for p in self.primes if I.members <= p.members)

    def index_of(self, members: frozenset) -> int:
        for i, p in enumerate(self.primes):
            if p.members == members:
                return i
        raise KeyError("not a listed prime")


def spectrum(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET) -> SpectrumView:
    """Primes via the quotient-domain criterion, maximals via lattice
    maximality; for a finite ring the two lists must coincide (asserted)."""
    cached = R._cache.get("spectrum")
    if cached is not None:
        return cached
    lattice = all_ideals(R, budget=budget)
    primes = tuple(I for I in lattice if primality_witness(R, I) is None)
    proper = [I for I in lattice if I.is_proper]
    maximals = tuple(I for I in proper
                     if not any(I < J for J in proper))
    if set(primes) != set(maximals):
        raise RingConstructionError(
            "finite-ring law violated: primes differ from maximals")
    k = len(primes)
    order = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(k):
            order[i, j] = primes[i].members <= primes[j].members
    order.setflags(write=False)
    view = SpectrumView(R, primes, maximals, order)
    R._cache["spectrum"] = view
    return view


def radicals(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET):
    """(nilradical, Jacobson radical).  The nilradical is computed by direct
    nilpotency scan, the Jacobson radical as the intersection of maximals
    (the whole ring when there are none)."""
    nil_members = frozenset(R.nilpotents()) | {R.zero}
    nil = Ideal(R, nil_members, recover_generators(R, nil_members))
    spec = spectrum(R, budget=budget)
    jac_members = frozenset(range(R.size))
    for m in spec.maximals:
        jac_members &= m.members
    jac = Ideal(R, jac_members, recover_generators(R, jac_members))
    return nil, jac


def content(p: Poly) -> Ideal:
    """Ideal generated by the coefficients of a polynomial."""
    return ideal_generate(p.ring, set(p.coeffs))


def ideals_totally_ordered(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET):
    """(True, None) if the ideal lattice is a chain, else (False, witness
    pair of incomparable ideals)."""
    lattice = all_ideals(R, budget=budget)  # sorted by size
    for a, b in zip(lattice, lattice[1:]):
        if not a.members <= b.members:
            return False, (a, b)
    return True, None


# -- interned lattice tables (joins, meets, products) -------------------------


@dataclass(frozen=True)
class LatticeTables:
    """The ideal lattice with interned join / meet / product tables, plus
    per-ideal regularity and the principal-ideal index of every element."""

    ring: FiniteRing
    ideals: tuple
    index: dict          # member frozenset -> lattice position
    join: np.ndarray
    meet: np.ndarray
    product: np.ndarray
    principal: np.ndarray  # element index -> lattice position of (a)
    regular: np.ndarray    # lattice position -> bool
    unit_pos: int
    zero_pos: int

    def pos(self, I: Ideal) -> int:
        return self.index[I.members]


def lattice_tables(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET) -> LatticeTables:
    cached = R._cache.get("lattice_tables")
    if cached is not None:
        return cached
    ideals = tuple(all_ideals(R, budget=budget))
    index = {I.members: i for i, I in enumerate(ideals)}
    k = len(ideals)
    join = np.zeros((k, k), dtype=np.int32)
    meet = np.zeros((k, k), dtype=np.int32)
    prod = np.zeros((k, k), dtype=np.int32)
    for i in range(k):
        for j in range(i, k):
            join[i, j] = join[j, i] = index[ideal_sum(ideals[i], ideals[j]).members]
            meet[i, j] = meet[j, i] = index[(ideals[i].members & ideals[j].members)]
            prod[i, j] = prod[j, i] = index[ideal_product(ideals[i], ideals[j]).members]
    principal = np.array(
        [index[frozenset(np.unique(R.mul_table[:, a]).tolist())] for a in range(R.size)],
        dtype=np.int32)
    regular = np.array([is_regular_ideal(R, I)[0] for I in ideals], dtype=bool)
    for arr in (join, meet, prod, principal, regular):
        arr.setflags(write=False)
    tables = LatticeTables(R, ideals, index, join, meet, prod, principal, regular,
                           index[frozenset(range(R.size))], index[frozenset({R.zero})])
    R._cache["lattice_tables"] = tables
    return tables
