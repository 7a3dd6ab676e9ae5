"""Dense-table finite commutative rings.

Carriers are index sets 0..size-1 with full addition and multiplication
tables.  Every constructor validates the complete ring axioms by exhaustive
enumeration, every homomorphism is checked on all pairs, and localization is
computed on raw fraction classes.  All values are immutable once built.

Canonical element orderings (one per constructor) make equal construction
expressions produce bit-identical rings:

* ``mk_zmod``            residues ascending;
* ``mk_poly_quot``       coefficient vectors, base-|R| little-endian;
* ``mk_truncated_poly``  coefficient vectors over graded-lex monomials;
* ``mk_product``         row-major pairs;
* ``mk_quotient``        cosets by least member index;
* ``localize``           fraction classes by least (numerator, denominator
                         position) code;
* ``subring_of``         ambient index ascending.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .budget import Budget, DEFAULT_BUDGET
from .errors import (
    BudgetExceededError,
    CrossRingError,
    HomomorphismError,
    RingConstructionError,
)


def _as_table(rows, n: int) -> np.ndarray:
    t = np.asarray(rows, dtype=np.int32)
    if t.shape != (n, n):
        raise RingConstructionError(f"operation table has shape {t.shape}, expected ({n}, {n})")
    if n and (int(t.min()) < 0 or int(t.max()) >= n):
        raise RingConstructionError("operation table entry out of range")
    t = np.ascontiguousarray(t)
    t.setflags(write=False)
    return t


class FiniteRing:
    """A finite commutative unital ring on element indices ``0..size-1``.

    The zero ring (size 1, ``zero == one``) is a first-class value and is
    flagged by :attr:`is_zero_ring`.
    """

    __slots__ = ("size", "add_table", "mul_table", "zero", "one", "names",
                 "provenance", "meta", "_cache")

    def __init__(self, add_table, mul_table, zero: int, one: int,
                 names: Sequence[str], provenance: str = "?", *,
                 meta: Optional[dict] = None, validate: bool = True,
                 budget: Budget = DEFAULT_BUDGET):
        names = tuple(str(s) for s in names)
        n = len(names)
        if n == 0:
            raise RingConstructionError("empty carrier")
        if n > budget.max_ring_size:
            raise BudgetExceededError(f"ring size {n} exceeds budget {budget.max_ring_size}")
        if len(set(names)) != n:
            raise RingConstructionError("element names are not unique")
        self.size = n
        self.add_table = _as_table(add_table, n)
        self.mul_table = _as_table(mul_table, n)
        self.zero = int(zero)
        self.one = int(one)
        self.names = names
        self.provenance = provenance
        self.meta = dict(meta or {})
        self._cache: dict = {}
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingConstructionError("zero/one index out of range")
        if self.zero == self.one and n != 1:
            raise RingConstructionError("zero == one in a ring of size > 1")
        if validate:
            self._validate()

    # -- construction-time exhaustive axiom check --------------------------

    def _validate(self) -> None:
        n, A, M = self.size, self.add_table, self.mul_table
        if not np.array_equal(A, A.T):
            a, b = np.argwhere(A != A.T)[0]
            raise RingConstructionError(f"addition not commutative at ({a}, {b})")
        if not np.array_equal(A[self.zero], np.arange(n, dtype=np.int32)):
            raise RingConstructionError("zero is not an additive identity")
        # each row must reach zero (inverses); with associativity this makes
        # (carrier, +, 0) an abelian group
        if not (A == self.zero).any(axis=1).all():
            a = int(np.argwhere(~(A == self.zero).any(axis=1))[0][0])
            raise RingConstructionError(f"element {a} has no additive inverse")
        if not np.array_equal(M, M.T):
            a, b = np.argwhere(M != M.T)[0]
            raise RingConstructionError(f"multiplication not commutative at ({a}, {b})")
        if not np.array_equal(M[self.one], np.arange(n, dtype=np.int32)):
            a = int(np.argwhere(M[self.one] != np.arange(n))[0][0])
            raise RingConstructionError(f"one is not a multiplicative identity at {a}")
        for a in range(n):
            if not np.array_equal(A[A[a]], A[a][A]):
                b, c = np.argwhere(A[A[a]] != A[a][A])[0]
                raise RingConstructionError(f"addition not associative at ({a}, {b}, {c})")
            if not np.array_equal(M[M[a]], M[a][M]):
                b, c = np.argwhere(M[M[a]] != M[a][M])[0]
                raise RingConstructionError(f"multiplication not associative at ({a}, {b}, {c})")
            row = M[a]
            if not np.array_equal(row[A], A[np.ix_(row, row)]):
                b, c = np.argwhere(row[A] != A[np.ix_(row, row)])[0]
                raise RingConstructionError(f"distributivity fails at ({a}, {b}, {c})")

    # -- arithmetic on indices ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(np.argwhere(self.add_table[a] == self.zero)[0][0])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        acc = self.one
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    # -- queries -------------------------------------------------------------

    @property
    def is_zero_ring(self) -> bool:
        return self.size == 1

    def elements(self) -> range:
        return range(self.size)

    def element(self, i: int) -> "Element":
        if not 0 <= i < self.size:
            raise IndexError(f"element index {i} out of range")
        return Element(self, i)

    def by_name(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r} in {self}") from None

    def units(self) -> frozenset:
        got = self._cache.get("units")
        if got is None:
            got = frozenset(np.nonzero((self.mul_table == self.one).any(axis=1))[0].tolist())
            self._cache["units"] = got
        return got

    def zerodivisors(self) -> frozenset:
        got = self._cache.get("zerodivisors")
        if got is None:
            M = self.mul_table
            nonzero = np.arange(self.size) != self.zero
            kills = (M[:, nonzero] == self.zero).any(axis=1)
            got = frozenset(np.nonzero(kills)[0].tolist())
            self._cache["zerodivisors"] = got
        return got

    def regular_elements(self) -> frozenset:
        return frozenset(self.elements()) - self.zerodivisors()

    def nilpotency_index(self, a: int) -> int:
        """Least k >= 1 with a^k = 0, or 0 if a is not nilpotent."""
        seen = set()
        x, k = a, 1
        while x not in seen:
            if x == self.zero:
                return k
            seen.add(x)
            x = self.mul(x, a)
            k += 1
        return 0

    def nilpotents(self) -> frozenset:
        got = self._cache.get("nilpotents")
        if got is None:
            got = frozenset(a for a in self.elements() if self.nilpotency_index(a))
            self._cache["nilpotents"] = got
        return got

    def additive_order(self, a: int) -> int:
        x, k = a, 1
        while x != self.zero:
            x = self.add(x, a)
            k += 1
        return k

    def characteristic(self) -> int:
        return self.additive_order(self.one)

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.size).encode())
        h.update(bytes([0]))
        h.update(np.ascontiguousarray(self.add_table).tobytes())
        h.update(np.ascontiguousarray(self.mul_table).tobytes())
        h.update(f"{self.zero},{self.one}".encode())
        h.update("\x1f".join(self.names).encode())
        return h.hexdigest()

    def same_tables(self, other: "FiniteRing") -> bool:
        return (self.size == other.size and self.zero == other.zero
                and self.one == other.one and self.names == other.names
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table))

    def __repr__(self) -> str:
        return f"FiniteRing(size={self.size}, provenance={self.provenance!r})"


@dataclass(frozen=True)
class Element:
    """An element of a specific ring; cross-ring arithmetic is rejected."""

    ring: FiniteRing
    index: int

    def _peer(self, other) -> int:
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise CrossRingError("elements belong to different rings")
            return other.index
        raise TypeError(f"cannot combine Element with {type(other).__name__}")

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.index, self._peer(other)))

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.index, self._peer(other)))

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul(self.index, self._peer(other)))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        return Element(self.ring, self.ring.power(self.index, k))

    @property
    def name(self) -> str:
        return self.ring.names[self.index]

    def __repr__(self) -> str:
        return f"<{self.name}>"


class RingHom:
    """A unital ring homomorphism given by a total index map.

    Every axiom (unit, zero, additivity, multiplicativity) is verified on
    all element pairs at construction; the first violated axiom is reported
    with a witness pair.
    """

    __slots__ = ("source", "target", "map", "label")

    def __init__(self, source: FiniteRing, target: FiniteRing,
                 images: Sequence[int], label: str = "", *, validate: bool = True):
        self.source = source
        self.target = target
        m = np.asarray(images, dtype=np.int32)
        if m.shape != (source.size,):
            raise HomomorphismError(f"map must list {source.size} images, got shape {m.shape}")
        if m.size and (int(m.min()) < 0 or int(m.max()) >= target.size):
            raise HomomorphismError("image index out of range")
        m = np.ascontiguousarray(m)
        m.setflags(write=False)
        self.map = m
        self.label = label
        if validate:
            self._validate()

    def _validate(self) -> None:
        s, t, m = self.source, self.target, self.map
        if m[s.zero] != t.zero:
            raise HomomorphismError("zero is not preserved", witness=(s.zero,))
        if m[s.one] != t.one:
            raise HomomorphismError(
                f"unit not preserved: 1 maps to {t.names[m[s.one]]!r}", witness=(s.one,))
        add_ok = t.add_table[np.ix_(m, m)] == m[s.add_table]
        if not add_ok.all():
            a, b = np.argwhere(~add_ok)[0]
            raise HomomorphismError(
                f"additivity fails at ({s.names[a]}, {s.names[b]})", witness=(int(a), int(b)))
        mul_ok = t.mul_table[np.ix_(m, m)] == m[s.mul_table]
        if not mul_ok.all():
            a, b = np.argwhere(~mul_ok)[0]
            raise HomomorphismError(
                f"multiplicativity fails at ({s.names[a]}, {s.names[b]})", witness=(int(a), int(b)))

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def apply(self, x: Element) -> Element:
        if x.ring is not self.source:
            raise CrossRingError("element not in the source ring")
        return Element(self.target, int(self.map[x.index]))

    def kernel_members(self) -> frozenset:
        return frozenset(np.nonzero(self.map == self.target.zero)[0].tolist())

    def image_members(self) -> frozenset:
        return frozenset(np.unique(self.map).tolist())

    def preimage_members(self, subset: Iterable[int]) -> frozenset:
        sub = set(int(x) for x in subset)
        return frozenset(a for a in self.source.elements() if int(self.map[a]) in sub)

    def kernel(self):
        from .ideals import Ideal
        return Ideal.from_members(self.source, self.kernel_members())

    def preimage_ideal(self, J):
        from .ideals import Ideal
        if J.ring is not self.target:
            raise CrossRingError("ideal does not live in the target ring")
        return Ideal.from_members(self.source, self.preimage_members(J.members))

    def image_subring(self):
        return subring_of(self.target, self.image_members(),
                          provenance=f"(image {self.label or '?'})")

    @property
    def is_injective(self) -> bool:
        return len(set(self.map.tolist())) == self.source.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.target.size

    @property
    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and self.is_injective

    def compose(self, inner: "RingHom") -> "RingHom":
        """self after inner."""
        if inner.target is not self.source:
            raise HomomorphismError("composition mismatch")
        return RingHom(inner.source, self.target, self.map[inner.map],
                       label=f"{self.label}*{inner.label}", validate=False)

    def __repr__(self) -> str:
        return (f"RingHom({self.source.provenance} -> {self.target.provenance}"
                f"{', ' + self.label if self.label else ''})")


def mk_hom(source: FiniteRing, target: FiniteRing, images: Sequence[int],
           label: str = "") -> RingHom:
    """Validate a total element map as a unital ring homomorphism."""
    return RingHom(source, target, images, label)


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, np.arange(R.size), label="identity", validate=False)


# -- constructors ------------------------------------------------------------


def mk_zmod(n: int, *, budget: Budget = DEFAULT_BUDGET) -> FiniteRing:
    """Ring of integers mod n; element i is the residue i."""
    if n < 1:
        raise RingConstructionError("modulus must be >= 1")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    one = 1 % n
    return FiniteRing(add, mul, 0, one, [str(i) for i in range(n)],
                      provenance=f"(zmod {n})",
                      meta={"kind": "zmod", "modulus": n}, budget=budget)


@dataclass(frozen=True)
class Poly:
    """Polynomial over a FiniteRing: coefficient indices, constant term first,
    trailing zeros trimmed (canonical form)."""

    ring: FiniteRing
    coeffs: tuple

    @staticmethod
    def make(ring: FiniteRing, coeffs: Sequence[int]) -> "Poly":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == ring.zero:
            cs.pop()
        return Poly(ring, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def __repr__(self) -> str:
        return f"Poly({poly_name(self)})"


def poly_name(p: Poly, var: str = "T") -> str:
    R = p.ring
    if p.is_zero:
        return R.names[R.zero]
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == R.zero:
            continue
        cn = R.names[c]
        if k == 0:
            terms.append(cn)
        else:
            head = "" if c == R.one else f"{cn}*"
            terms.append(f"{head}{var}" + (f"^{k}" if k > 1 else ""))
    return "+".join(terms)


def poly_add(p: Poly, q: Poly) -> Poly:
    if p.ring is not q.ring:
        raise CrossRingError("polynomials over different rings")
    R = p.ring
    out = [R.add(p.coeff(i), q.coeff(i)) for i in range(max(len(p.coeffs), len(q.coeffs)))]
    return Poly.make(R, out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.ring is not q.ring:
        raise CrossRingError("polynomials over different rings")
    R = p.ring
    if p.is_zero or q.is_zero:
        return Poly.make(R, [])
    out = [R.zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == R.zero:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = R.add(out[i + j], R.mul(a, b))
    return Poly.make(R, out)


def mk_poly_quot(R: FiniteRing, modulus: Poly, *,
                 budget: Budget = DEFAULT_BUDGET) -> FiniteRing:
    """Quotient of R[x] by a monic modulus of degree >= 1.

    Elements are coefficient vectors of length deg(modulus); the index of a
    vector (c_0, ..., c_{d-1}) is sum(c_i * |R|^i).
    """
    if modulus.ring is not R:
        raise CrossRingError("modulus not over the given ring")
    d = modulus.degree
    if d < 1:
        raise RingConstructionError("modulus must have degree >= 1")
    if modulus.coeffs[-1] != R.one:
        raise RingConstructionError("modulus must be monic (division would be ambiguous)")
    n = R.size ** d
    if n > budget.max_ring_size:
        raise BudgetExceededError(f"polynomial quotient of size {n} exceeds budget")

    vectors = [tuple(reversed(v)) for v in itertools.product(range(R.size), repeat=d)]
    vectors.sort(key=lambda v: sum(c * R.size ** i for i, c in enumerate(v)))
    index_of = {v: i for i, v in enumerate(vectors)}

    def reduce_mod(cs):
        cs = list(cs)
        for k in range(len(cs) - 1, d - 1, -1):
            lead = cs[k]
            if lead != R.zero:
                for i in range(d):
                    cs[k - d + i] = R.sub(cs[k - d + i], R.mul(lead, modulus.coeffs[i]))
                cs[k] = R.zero
        return tuple(cs[:d]) + (R.zero,) * (d - len(cs[:d]))

    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, v in enumerate(vectors):
        for j in range(i, n):
            w = vectors[j]
            s = tuple(R.add(a, b) for a, b in zip(v, w))
            add[i, j] = add[j, i] = index_of[s]
            prod = [R.zero] * (2 * d - 1)
            for a_pos, a in enumerate(v):
                if a == R.zero:
                    continue
                for b_pos, b in enumerate(w):
                    prod[a_pos + b_pos] = R.add(prod[a_pos + b_pos], R.mul(a, b))
            mul[i, j] = mul[j, i] = index_of[reduce_mod(prod)]

    def vec_name(v):
        p = Poly.make(R, v)
        return poly_name(p, var="x")

    zero = index_of[(R.zero,) * d]
    one = index_of[(R.one,) + (R.zero,) * (d - 1)]
    names = [vec_name(v) for v in vectors]
    mod_name = poly_name(modulus, var="x")
    return FiniteRing(add, mul, zero, one, names,
                      provenance=f"(polyquot {R.provenance} {mod_name})",
                      meta={"kind": "polyquot", "base": R, "degree": d,
                            "modulus": modulus, "vectors": tuple(vectors)},
                      budget=budget)


def _monomials(k: int, d: int):
    """Exponent tuples of total degree < d, graded-lex ascending
    (degree first, then lexicographically descending exponents, so x1 sorts
    before x2 inside each degree)."""
    out = [e for e in itertools.product(range(d), repeat=k) if sum(e) < d]
    out.sort(key=lambda e: (sum(e), tuple(-c for c in e)))
    return out


def _monomial_name(e) -> str:
    parts = []
    for i, c in enumerate(e, start=1):
        if c == 1:
            parts.append(f"x{i}")
        elif c > 1:
            parts.append(f"x{i}^{c}")
    return "*".join(parts) if parts else "1"


def mk_truncated_poly(p: int, k: int, d: int, *,
                      budget: Budget = DEFAULT_BUDGET) -> FiniteRing:
    """(Z/p)[x1..xk] truncated past total degree d-1 (all monomials of total
    degree >= d vanish).  p must be prime."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise RingConstructionError("coefficient modulus must be prime")
    if k < 1 or d < 1:
        raise RingConstructionError("need at least one variable and degree cap >= 1")
    monos = _monomials(k, d)
    m = len(monos)
    n = p ** m
    if n > budget.max_ring_size:
        raise BudgetExceededError(f"truncated polynomial ring of size {n} exceeds budget")
    pos = {e: i for i, e in enumerate(monos)}

    vectors = [tuple(reversed(v)) for v in itertools.product(range(p), repeat=m)]
    vectors.sort(key=lambda v: sum(c * p ** i for i, c in enumerate(v)))
    index_of = {v: i for i, v in enumerate(vectors)}

    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i, v in enumerate(vectors):
        for j in range(i, n):
            w = vectors[j]
            s = tuple((a + b) % p for a, b in zip(v, w))
            add[i, j] = add[j, i] = index_of[s]
            acc = [0] * m
            for ia, ca in enumerate(v):
                if ca == 0:
                    continue
                ea = monos[ia]
                for ib, cb in enumerate(w):
                    if cb == 0:
                        continue
                    e = tuple(x + y for x, y in zip(ea, monos[ib]))
                    if sum(e) < d:
                        t = pos[e]
                        acc[t] = (acc[t] + ca * cb) % p
            mul[i, j] = mul[j, i] = index_of[tuple(acc)]

    def vec_name(v):
        terms = []
        for i in range(m - 1, -1, -1):
            c = v[i]
            if c == 0:
                continue
            mn = _monomial_name(monos[i])
            if mn == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(mn)
            else:
                terms.append(f"{c}*{mn}")
        return "+".join(terms) if terms else "0"

    zero = index_of[(0,) * m]
    one_vec = [0] * m
    one_vec[pos[(0,) * k]] = 1
    names = [vec_name(v) for v in vectors]
    return FiniteRing(add, mul, zero, index_of[tuple(one_vec)], names,
                      provenance=f"(truncpoly {p} {k} {d})",
                      meta={"kind": "truncpoly", "p": p, "k": k, "d": d,
                            "monomials": tuple(monos), "vectors": tuple(vectors)},
                      budget=budget)


def mk_product(R1: FiniteRing, R2: FiniteRing, *, budget: Budget = DEFAULT_BUDGET):
    """Componentwise product ring; returns (ring, proj1, proj2).

    The pair (i, j) sits at index i*|R2| + j.
    """
    n1, n2 = R1.size, R2.size
    n = n1 * n2
    if n > budget.max_ring_size:
        raise BudgetExceededError(f"product of size {n} exceeds budget")
    a1 = R1.add_table.astype(np.int64)
    a2 = R2.add_table.astype(np.int64)
    m1 = R1.mul_table.astype(np.int64)
    m2 = R2.mul_table.astype(np.int64)
    # index arithmetic: (i1, j1) x (i2, j2) -> table[i1*n2+j1, i2*n2+j2]
    add = (np.kron(a1, np.ones((n2, n2), dtype=np.int64)) * n2
           + np.tile(a2, (n1, n1)))
    mul = (np.kron(m1, np.ones((n2, n2), dtype=np.int64)) * n2
           + np.tile(m2, (n1, n1)))
    names = [f"{R1.names[i]},{R2.names[j]}" for i in range(n1) for j in range(n2)]
    P = FiniteRing(add, mul, R1.zero * n2 + R2.zero, R1.one * n2 + R2.one, names,
                   provenance=f"(product {R1.provenance} {R2.provenance})",
                   meta={"kind": "product", "factors": (R1, R2)}, budget=budget)
    p1 = RingHom(P, R1, np.arange(n) // n2, label="proj1")
    p2 = RingHom(P, R2, np.arange(n) % n2, label="proj2")
    P.meta["proj1"] = p1
    P.meta["proj2"] = p2
    return P, p1, p2


def product_pair_index(R1: FiniteRing, R2: FiniteRing, i: int, j: int) -> int:
    return i * R2.size + j


def _check_ideal_members(R: FiniteRing, members: frozenset) -> None:
    if R.zero not in members:
        raise RingConstructionError("subset does not contain zero")
    idx = np.fromiter(members, dtype=np.int64)
    if not np.isin(R.add_table[np.ix_(idx, idx)], idx).all():
        raise RingConstructionError("subset not closed under addition")
    if not np.isin(R.mul_table[:, idx], idx).all():
        raise RingConstructionError("subset not closed under ambient multiplication")


def mk_quotient(R: FiniteRing, ideal_members, *, budget: Budget = DEFAULT_BUDGET):
    """Quotient by an ideal; returns (ring, projection hom).

    Cosets are ordered by their smallest member index.  ``ideal_members`` may
    be an Ideal or a raw member set; ideal-ness is verified either way.
    """
    members = frozenset(getattr(ideal_members, "members", ideal_members))
    ring_of = getattr(ideal_members, "ring", R)
    if ring_of is not R:
        raise CrossRingError("ideal does not live in the ring being quotiented")
    _check_ideal_members(R, members)
    idx = np.array(sorted(members), dtype=np.int64)
    coset_of = np.full(R.size, -1, dtype=np.int64)
    reps = []
    for a in range(R.size):
        if coset_of[a] >= 0:
            continue
        c = len(reps)
        reps.append(a)
        coset_of[R.add_table[a, idx]] = c
    k = len(reps)
    reps_arr = np.array(reps, dtype=np.int64)
    add = coset_of[R.add_table[np.ix_(reps_arr, reps_arr)]]
    mul = coset_of[R.mul_table[np.ix_(reps_arr, reps_arr)]]
    names = [R.names[r] for r in reps]
    gen_names = ",".join(sorted(R.names[m] for m in members))
    Q = FiniteRing(add, mul, int(coset_of[R.zero]), int(coset_of[R.one]), names,
                   provenance=f"(quot {R.provenance} {{{gen_names}}})",
                   meta={"kind": "quotient", "base": R, "reps": tuple(reps),
                         "coset_of": coset_of.copy()}, budget=budget)
    proj = RingHom(R, Q, coset_of, label="reduction")
    Q.meta["projection"] = proj
    if proj.kernel_members() != members:
        raise RingConstructionError("projection kernel differs from the ideal")
    return Q, proj


def subring_of(R: FiniteRing, members: Iterable[int], provenance: str = ""):
    """Subring on a subset (must contain 0, 1 and be closed); returns
    (ring, inclusion hom).  Elements keep their ambient order and names."""
    mem = sorted(set(int(x) for x in members))
    pos = {m: i for i, m in enumerate(mem)}
    if R.zero not in pos or R.one not in pos:
        raise RingConstructionError("subset must contain 0 and 1")
    idx = np.array(mem, dtype=np.int64)
    sub_add = R.add_table[np.ix_(idx, idx)]
    sub_mul = R.mul_table[np.ix_(idx, idx)]
    if not np.isin(sub_add, idx).all() or not np.isin(sub_mul, idx).all():
        raise RingConstructionError("subset is not closed under the ring operations")
    relabel = np.full(R.size, -1, dtype=np.int64)
    relabel[idx] = np.arange(len(mem))
    S = FiniteRing(relabel[sub_add], relabel[sub_mul], pos[R.zero], pos[R.one],
                   [R.names[m] for m in mem],
                   provenance=provenance or f"(subring-of {R.provenance})",
                   meta={"kind": "subring", "ambient": R, "ambient_index": tuple(mem)})
    incl = RingHom(S, R, idx, label="inclusion")
    return S, incl


# -- regularity and localization ----------------------------------------------


def regularity_scan(R: FiniteRing):
    """Partition the carrier into units / zerodivisors and return
    (units, zerodivisors, regular).  In a finite ring the regular elements
    are exactly the units; this law is asserted."""
    units = R.units()
    zd = R.zerodivisors()
    reg = R.regular_elements()
    if reg != units:
        raise RingConstructionError("finite-ring law violated: regular != units")
    if not R.is_zero_ring and (units & zd):
        raise RingConstructionError("unit classified as zerodivisor")
    return units, zd, reg


@dataclass(frozen=True)
class MultiplicativeSet:
    """A multiplicatively closed subset containing 1."""

    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        R = self.ring
        if R.one not in self.members:
            raise RingConstructionError("multiplicative set must contain 1")
        idx = np.fromiter(self.members, dtype=np.int64)
        if not np.isin(R.mul_table[np.ix_(idx, idx)], idx).all():
            raise RingConstructionError("set not closed under multiplication")

    @staticmethod
    def generated(R: FiniteRing, gens: Iterable[int]) -> "MultiplicativeSet":
        mem = {R.one} | {int(g) for g in gens}
        while True:
            new = {R.mul(a, b) for a in mem for b in mem} | mem
            if new == mem:
                break
            mem = new
        return MultiplicativeSet(R, frozenset(mem))

    @staticmethod
    def complement_of_prime(R: FiniteRing, prime_members: frozenset) -> "MultiplicativeSet":
        return MultiplicativeSet(R, frozenset(R.elements()) - frozenset(prime_members))

    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))


class LocalizedRing:
    """Fraction classes of a ring at a multiplicative set.

    (a, s) ~ (a', s') iff u*(a*s' - a'*s) = 0 for some u in S.  Classes are
    ordered by their least (numerator index * |S| + denominator position)
    code.  The kernel of the canonical map equals {a : s*a = 0 for some s}
    and the carrier is the zero ring iff 0 lies in S; both facts are
    asserted at construction.
    """

    __slots__ = ("base", "mult_set", "carrier", "canonical", "class_table", "denoms")

    def __init__(self, base: FiniteRing, mult_set: MultiplicativeSet,
                 carrier: FiniteRing, canonical: RingHom,
                 class_table: np.ndarray, denoms: tuple):
        self.base = base
        self.mult_set = mult_set
        self.carrier = carrier
        self.canonical = canonical
        self.class_table = class_table
        self.denoms = denoms

    def frac(self, a: int, s: int) -> int:
        """Carrier index of the fraction a/s (s must be a member)."""
        try:
            pos = self.denoms.index(s)
        except ValueError:
            raise KeyError(f"{s} is not in the multiplicative set") from None
        return int(self.class_table[a, pos])


def localize(R: FiniteRing, S: MultiplicativeSet, *,
             budget: Budget = DEFAULT_BUDGET) -> LocalizedRing:
    """Localization of R at S, built from raw fraction classes."""
    if S.ring is not R:
        raise CrossRingError("multiplicative set lives in a different ring")
    denoms = S.sorted_members()
    ns = len(denoms)
    s_idx = np.array(denoms, dtype=np.int64)
    # killable = {x : u x = 0 for some u in S}; fraction equality reduces to
    # a s' - a' s being killable
    killable_mask = (R.mul_table[np.ix_(s_idx, np.arange(R.size))] == R.zero).any(axis=0)

    neg = np.array([R.neg(a) for a in range(R.size)], dtype=np.int64)

    def same(a, s, a2, s2) -> bool:
        d = R.add(R.mul(a, s2), int(neg[R.mul(a2, s)]))
        return bool(killable_mask[d])

    reps: list = []  # (a, s) per class, first-seen in code order
    class_table = np.full((R.size, ns), -1, dtype=np.int32)
    for a in range(R.size):
        for p in range(ns):
            s = denoms[p]
            hits = [c for c, (ra, rs) in enumerate(reps) if same(a, s, ra, rs)]
            if len(hits) > 1:
                raise RingConstructionError(
                    "fraction relation failed transitivity (not an equivalence)")
            if hits:
                class_table[a, p] = hits[0]
            else:
                class_table[a, p] = len(reps)
                reps.append((a, s))

    k = len(reps)
    pos_of = {s: p for p, s in enumerate(denoms)}

    def cls(a, s):
        return int(class_table[a, pos_of[s]])

    add = np.empty((k, k), dtype=np.int32)
    mul = np.empty((k, k), dtype=np.int32)
    for i, (a, s) in enumerate(reps):
        for j in range(i, k):
            b, t = reps[j]
            num = R.add(R.mul(a, t), R.mul(b, s))
            den = R.mul(s, t)
            add[i, j] = add[j, i] = cls(num, den)
            mul[i, j] = mul[j, i] = cls(R.mul(a, b), den)
    names = [f"{R.names[a]}/{R.names[s]}" for a, s in reps]
    carrier = FiniteRing(add, mul, cls(R.zero, R.one), cls(R.one, R.one), names,
                         provenance=(f"(localization {R.provenance} "
                                     f"{{{','.join(R.names[s] for s in denoms)}}})"),
                         budget=budget)
    canonical = RingHom(R, carrier, class_table[:, pos_of[R.one]], label="canonical")

    expected_kernel = frozenset(np.nonzero(killable_mask)[0].tolist())
    if canonical.kernel_members() != expected_kernel:
        raise RingConstructionError(
            "localization kernel differs from the elements killed by S")
    if carrier.is_zero_ring != (R.zero in S.members):
        raise RingConstructionError("zero-ring criterion violated: 0 in S iff carrier is zero")
    return LocalizedRing(R, S, carrier, canonical, class_table, denoms)


def total_quotient_ring(R: FiniteRing, *, budget: Budget = DEFAULT_BUDGET) -> LocalizedRing:
    """Localization at the regular elements.  For a finite ring the canonical
    map is an isomorphism (regular = unit); asserted."""
    units, _, reg = regularity_scan(R)
    loc = localize(R, MultiplicativeSet(R, reg), budget=budget)
    if not loc.canonical.is_bijective:
        raise RingConstructionError(
            "finite-ring law violated: total quotient ring differs from the ring")
    return loc


# -- exhaustive isomorphism search ---------------------------------------------


def _element_signature(R: FiniteRing, a: int, units: frozenset) -> tuple:
    ann = int((R.mul_table[a] == R.zero).sum())
    return (R.additive_order(a), a in units, R.nilpotency_index(a),
            ann, R.mul(a, a) == a)


def _ring_invariants(R: FiniteRing) -> tuple:
    units = R.units()
    sigs = sorted(_element_signature(R, a, units) for a in R.elements())
    return (R.size, len(units), len(R.nilpotents()), R.characteristic(), tuple(sigs))


def _greedy_generators(R: FiniteRing) -> list:
    known = {R.zero, R.one}
    frontier = True
    while frontier:
        frontier = False
        for a in list(known):
            for b in list(known):
                for t in (R.add(a, b), R.mul(a, b)):
                    if t not in known:
                        known.add(t)
                        frontier = True
    gens = []
    while len(known) < R.size:
        g = min(a for a in R.elements() if a not in known)
        gens.append(g)
        stack = [g]
        known.add(g)
        while stack:
            x = stack.pop()
            for y in list(known):
                for t in (R.add(x, y), R.mul(x, y)):
                    if t not in known:
                        known.add(t)
                        stack.append(t)
    return gens


def find_isomorphism(R1: FiniteRing, R2: FiniteRing, *,
                     budget: Budget = DEFAULT_BUDGET) -> Optional[RingHom]:
    """Search for a ring isomorphism R1 -> R2.

    Prunes by structural invariants (size, unit and nilpotent counts,
    characteristic, additive-order multiset) and anchors a greedy generating
    set; returns a validated bijective RingHom, or None after verified
    exhaustion of the pruned search space.
    """
    if _ring_invariants(R1) != _ring_invariants(R2):
        return None
    n = R1.size
    units2 = R2.units()
    sig1 = {a: _element_signature(R1, a, R1.units()) for a in R1.elements()}
    sig2: dict = {}
    for b in R2.elements():
        sig2.setdefault(_element_signature(R2, b, units2), []).append(b)

    gens = _greedy_generators(R1)
    nodes = 0

    def close(assignment: dict) -> Optional[dict]:
        nonlocal nodes
        m = dict(assignment)
        queue = list(m.keys())
        while queue:
            nodes += 1
            if nodes > budget.iso_search_nodes:
                raise BudgetExceededError("isomorphism search budget exceeded")
            x = queue.pop()
            for y in list(m.keys()):
                for T1, T2 in ((R1.add_table, R2.add_table), (R1.mul_table, R2.mul_table)):
                    z = int(T1[x, y])
                    w = int(T2[m[x], m[y]])
                    if z in m:
                        if m[z] != w:
                            return None
                    else:
                        m[z] = w
                        queue.append(z)
        return m

    def extend(m: dict) -> Optional[RingHom]:
        if len(m) == n:
            if len(set(m.values())) != n:
                return None
            images = [m[a] for a in range(n)]
            try:
                return RingHom(R1, R2, images, label="isomorphism")
            except HomomorphismError:
                return None
        g = min(a for a in range(n) if a not in m)
        used = set(m.values())
        for h in sig2.get(sig1[g], []):
            if h in used:
                continue
            m2 = close({**m, g: h})
            if m2 is None:
                continue
            got = extend(m2)
            if got is not None:
                return got
        return None

    base = close({R1.zero: R2.zero, R1.one: R2.one})
    if base is None:
        return None
    return extend(base)
