"""Amalgamation of a ring with another along an ideal, and fiber products.

Given a homomorphism f: A -> B and an ideal b of B, the amalgamation is the
subring {(a, f(a)+b) : a in A, b in b} of A x B.  Construction verifies the
whole structural package exhaustively: carrier closure and cardinality, the
embedding/retraction pair, both projection kernels, the conductor, the three
quotient isomorphisms, the fiber-product identity, the transfer description
of the spectrum, the locality criterion, and the localization isomorphisms
at every prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .budget import Budget, DEFAULT_BUDGET
from .errors import HomomorphismError, RingConstructionError
from .ideals import (
    Ideal,
    all_ideals,
    ideal_generate,
    ideal_sum,
    is_maximal_ideal,
    is_prime_ideal,
    primality_witness,
    radicals,
    recover_generators,
    spectrum,
)
from .rings import (
    FiniteRing,
    LocalizedRing,
    MultiplicativeSet,
    RingHom,
    find_isomorphism,
    localize,
    mk_product,
    mk_quotient,
    subring_of,
)


@dataclass(frozen=True)
class AmalgSpec:
    """The input data (A, B, f, b) of an amalgamation."""

    A: FiniteRing
    B: FiniteRing
    f: RingHom
    b: Ideal

    def __post_init__(self):
        if self.f.source is not self.A or self.f.target is not self.B:
            raise HomomorphismError("hom does not map A into B")
        if self.b.ring is not self.B:
            raise RingConstructionError("ideal does not live in B")


class AmalgamatedRing:
    """Carrier of {(a, f(a)+b)} plus all the attached bookkeeping."""

    __slots__ = ("spec", "carrier", "pair_of", "index_of_pair", "iota", "pA", "pB",
                 "gamma", "gamma_target", "b0", "f_inv_b", "product_ring",
                 "conductor", "conductor_in_carrier", "fab", "fab_include", "_cache")

    def __init__(self, spec: AmalgSpec, *, budget: Budget = DEFAULT_BUDGET):
        self.spec = spec
        self._cache = {}
        A, B, f, b = spec.A, spec.B, spec.f, spec.b
        pairs = sorted({(a, B.add(f(a), bb)) for a in A.elements() for bb in b.members},
                       key=lambda p: p[0] * B.size + p[1])
        if len(pairs) != A.size * len(b.members):
            raise RingConstructionError("carrier cardinality differs from |A|*|b|")
        index_of = {p: i for i, p in enumerate(pairs)}
        n = len(pairs)
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for i, (a1, b1) in enumerate(pairs):
            for j in range(i, n):
                a2, b2 = pairs[j]
                try:
                    add[i, j] = add[j, i] = index_of[(A.add(a1, a2), B.add(b1, b2))]
                    mul[i, j] = mul[j, i] = index_of[(A.mul(a1, a2), B.mul(b1, b2))]
                except KeyError:
                    raise RingConstructionError(
                        "carrier not closed under the product operations") from None
        names = [f"{A.names[a]},{B.names[bb]}" for a, bb in pairs]
        gens = ",".join(b.generator_names()) or B.names[B.zero]
        self.carrier = FiniteRing(
            add, mul, index_of[(A.zero, B.zero)], index_of[(A.one, B.one)], names,
            provenance=f"(amalg {A.provenance} {B.provenance} {f.label or 'f'} ({gens}))",
            budget=budget)
        self.pair_of = tuple(pairs)
        self.index_of_pair = index_of

        self.iota = RingHom(A, self.carrier,
                            [index_of[(a, f(a))] for a in A.elements()], label="iota")
        self.pA = RingHom(self.carrier, A, [p[0] for p in pairs], label="pA")
        self.pB = RingHom(self.carrier, B, [p[1] for p in pairs], label="pB")
        if not self.iota.is_injective:
            raise RingConstructionError("iota is not injective")
        if any(self.pA(self.iota(a)) != a for a in A.elements()):
            raise RingConstructionError("pA is not a retraction of iota")

        b0_members = frozenset(index_of[(A.zero, bb)] for bb in b.members)
        if self.pA.kernel_members() != b0_members:
            raise RingConstructionError("Ker(pA) differs from {0} x b")
        self.b0 = Ideal(self.carrier, b0_members,
                        recover_generators(self.carrier, b0_members))

        self.f_inv_b = f.preimage_ideal(b)
        kerB = frozenset(index_of[(x, B.zero)] for x in self.f_inv_b.members)
        if self.pB.kernel_members() != kerB:
            raise RingConstructionError("Ker(pB) differs from f^-1(b) x {0}")
        fab_members = frozenset(int(x) for x in self.pB.image_members())
        if fab_members != {B.add(f(a), bb) for a in A.elements() for bb in b.members}:
            raise RingConstructionError("image of pB differs from f(A)+b")
        self.fab, self.fab_include = subring_of(
            B, fab_members, provenance=f"(image-plus-ideal {B.provenance})")

        # gamma: (a, f(a)+b) -> f(a) mod b, valued in (f(A)+b)/b
        fab_pos = {m: i for i, m in enumerate(sorted(fab_members))}
        b_in_fab = frozenset(fab_pos[bb] for bb in b.members)
        self.gamma_target, fab_proj = mk_quotient(self.fab, b_in_fab, budget=budget)
        self.gamma = RingHom(self.carrier, self.gamma_target,
                             [fab_proj(fab_pos[B.add(f(a), B.zero)])
                              for a, _ in pairs],
                             label="gamma")
        conductor_carrier = frozenset(index_of[(x, bb)]
                                      for x in self.f_inv_b.members for bb in b.members)
        if self.gamma.kernel_members() != conductor_carrier:
            raise RingConstructionError("Ker(gamma) differs from f^-1(b) x b")
        self.conductor_in_carrier = Ideal(
            self.carrier, conductor_carrier,
            recover_generators(self.carrier, conductor_carrier))

        self.product_ring, _, _ = mk_product(A, B, budget=budget)
        cond_members = frozenset(x * B.size + bb
                                 for x in self.f_inv_b.members for bb in b.members)
        self.conductor = Ideal(self.product_ring, cond_members,
                               recover_generators(self.product_ring, cond_members))

    # -- conveniences -------------------------------------------------------

    @property
    def A(self) -> FiniteRing:
        return self.spec.A

    @property
    def B(self) -> FiniteRing:
        return self.spec.B

    @property
    def f(self) -> RingHom:
        return self.spec.f

    @property
    def b(self) -> Ideal:
        return self.spec.b

    def __repr__(self) -> str:
        return f"AmalgamatedRing({self.carrier.provenance}, size={self.carrier.size})"


def build_amalgamation(spec: AmalgSpec, *, budget: Budget = DEFAULT_BUDGET) -> AmalgamatedRing:
    return AmalgamatedRing(spec, budget=budget)


def duplication(A: FiniteRing, a: Ideal, *, budget: Budget = DEFAULT_BUDGET) -> AmalgamatedRing:
    """Amalgamated duplication: B = A and f the identity."""
    ident = RingHom(A, A, np.arange(A.size), label="identity", validate=False)
    return AmalgamatedRing(AmalgSpec(A, A, ident, a), budget=budget)


# -- canonical-isomorphism helpers --------------------------------------------


def induced_quotient_iso(R: FiniteRing, ideal_members, target: FiniteRing,
                         image_of: Callable[[int], int], *,
                         budget: Budget = DEFAULT_BUDGET) -> Optional[RingHom]:
    """The isomorphism R/ideal -> target induced by ``image_of`` (a map on R
    that must be constant on cosets), or None if it is not well defined, not
    a homomorphism, or not bijective."""
    Q, proj = mk_quotient(R, ideal_members, budget=budget)
    images: list = [None] * Q.size
    for x in range(R.size):
        c = proj(x)
        v = image_of(x)
        if images[c] is None:
            images[c] = v
        elif images[c] != v:
            return None
    try:
        h = RingHom(Q, target, images, label="canonical")
    except HomomorphismError:
        return None
    return h if h.is_bijective else None


@dataclass
class IsoCheck:
    """Outcome of one isomorphism claim."""

    name: str
    ok: bool
    method: str                     # "canonical" or "search"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "method": self.method,
                "detail": self.detail}


def _iso_with_fallback(name: str, R: FiniteRing, ideal_members, target: FiniteRing,
                       image_of, budget: Budget) -> IsoCheck:
    h = induced_quotient_iso(R, ideal_members, target, image_of, budget=budget)
    if h is not None:
        return IsoCheck(name, True, "canonical")
    Q, _ = mk_quotient(R, ideal_members, budget=budget)
    found = find_isomorphism(Q, target, budget=budget)
    if found is not None:
        return IsoCheck(name, True, "search", "canonical map failed; search succeeded")
    return IsoCheck(name, False, "search",
                    f"no isomorphism: quotient size {Q.size}, target size {target.size}")


@dataclass
class QuotientIsoReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def quotient_isos_check(am: AmalgamatedRing, *,
                        budget: Budget = DEFAULT_BUDGET) -> QuotientIsoReport:
    """Verify the three structural quotient isomorphisms of the carrier:
    carrier/({0} x b) = A,  carrier/(f^-1(b) x {0}) = f(A)+b,  and
    carrier/(f^-1(b) x b) = (f(A)+b)/b = A/f^-1(b); plus carrier mod the
    conductor = B/b when f is surjective."""
    A, B, f = am.A, am.B, am.f
    fab_pos = {m: i for i, m in enumerate(am.fab_include.map.tolist())}
    checks = [
        _iso_with_fallback("carrier_mod_b0_is_A", am.carrier, am.b0.members, A,
                           lambda x: am.pA(x), budget),
        _iso_with_fallback("carrier_mod_kerpB_is_image", am.carrier,
                           am.pB.kernel_members(), am.fab,
                           lambda x: fab_pos[am.pB(x)], budget),
    ]
    AmodF, projA = mk_quotient(A, am.f_inv_b.members, budget=budget)
    checks.append(_iso_with_fallback(
        "carrier_mod_conductor_is_A_mod_preimage", am.carrier,
        am.conductor_in_carrier.members, AmodF,
        lambda x: projA(am.pA(x)), budget))
    checks.append(_iso_with_fallback(
        "carrier_mod_conductor_is_gamma_target", am.carrier,
        am.conductor_in_carrier.members, am.gamma_target,
        lambda x: am.gamma(x), budget))
    if am.f.is_surjective:
        BmodI, projB = mk_quotient(B, am.b.members, budget=budget)
        checks.append(_iso_with_fallback(
            "carrier_mod_conductor_is_B_mod_b", am.carrier,
            am.conductor_in_carrier.members, BmodI,
            lambda x: projB(am.pB(x)), budget))
    return QuotientIsoReport(checks)


def ideal_join(am: AmalgamatedRing, a: Ideal, *,
               budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """The ideal {(x, f(x)+b) : x in a, b in b} of the carrier; asserts
    carrier/ideal = A/a via the canonical map."""
    if a.ring is not am.A:
        raise RingConstructionError("ideal does not live in A")
    A, B, f = am.A, am.B, am.f
    members = frozenset(am.index_of_pair[(x, B.add(f(x), bb))]
                        for x in a.members for bb in am.b.members)
    J = Ideal(am.carrier, members, recover_generators(am.carrier, members))
    Amoda, projA = mk_quotient(A, a.members, budget=budget)
    h = induced_quotient_iso(am.carrier, members, Amoda,
                             lambda x: projA(am.pA(x)), budget=budget)
    if h is None:
        raise RingConstructionError("carrier mod joined ideal is not A mod the ideal")
    return J


# -- fiber products ------------------------------------------------------------


class FiberProduct:
    """Subring {(a, b) : rho(a) = sigma(b)} of A x B for homs into a common
    target, with its two projections."""

    __slots__ = ("rho", "sigma", "carrier", "pair_of", "index_of_pair", "pA", "pB")

    def __init__(self, rho: RingHom, sigma: RingHom, *, budget: Budget = DEFAULT_BUDGET):
        if rho.target is not sigma.target:
            raise HomomorphismError("fiber product requires a shared target")
        A, B = rho.source, sigma.source
        pairs = [(a, bb) for a in A.elements() for bb in B.elements()
                 if rho(a) == sigma(bb)]
        pairs.sort(key=lambda p: p[0] * B.size + p[1])
        index_of = {p: i for i, p in enumerate(pairs)}
        n = len(pairs)
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for i, (a1, b1) in enumerate(pairs):
            for j in range(i, n):
                a2, b2 = pairs[j]
                add[i, j] = add[j, i] = index_of[(A.add(a1, a2), B.add(b1, b2))]
                mul[i, j] = mul[j, i] = index_of[(A.mul(a1, a2), B.mul(b1, b2))]
        names = [f"{A.names[a]},{B.names[bb]}" for a, bb in pairs]
        self.carrier = FiniteRing(
            add, mul, index_of[(A.zero, B.zero)], index_of[(A.one, B.one)], names,
            provenance=f"(fiber {rho.label or 'rho'} {sigma.label or 'sigma'})",
            budget=budget)
        self.rho, self.sigma = rho, sigma
        self.pair_of = tuple(pairs)
        self.index_of_pair = index_of
        self.pA = RingHom(self.carrier, A, [p[0] for p in pairs], label="pA")
        self.pB = RingHom(self.carrier, B, [p[1] for p in pairs], label="pB")
        if self.pA.kernel_members() != frozenset(
                index_of[(A.zero, bb)] for bb in sigma.kernel_members()):
            raise RingConstructionError("Ker(pA) differs from {0} x Ker(sigma)")
        if self.pB.kernel_members() != frozenset(
                index_of[(a, B.zero)] for a in rho.kernel_members()):
            raise RingConstructionError("Ker(pB) differs from Ker(rho) x {0}")

    def __repr__(self) -> str:
        return f"FiberProduct(size={self.carrier.size})"


def build_fiber_product(rho: RingHom, sigma: RingHom, *,
                        budget: Budget = DEFAULT_BUDGET) -> FiberProduct:
    return FiberProduct(rho, sigma, budget=budget)


def fiberproduct_identity_check(am: AmalgamatedRing, *,
                                budget: Budget = DEFAULT_BUDGET) -> bool:
    """The carrier equals, element for element, the fiber product of
    (projection B -> B/b) o f with the projection itself."""
    B = am.B
    Q, pi = mk_quotient(B, am.b.members, budget=budget)
    f_check = pi.compose(am.f)
    fp = FiberProduct(f_check, pi, budget=budget)
    return (fp.pair_of == am.pair_of
            and np.array_equal(fp.carrier.add_table, am.carrier.add_table)
            and np.array_equal(fp.carrier.mul_table, am.carrier.mul_table))


# -- spectrum transfer ---------------------------------------------------------


def prime_lift(am: AmalgamatedRing, p: Ideal) -> Ideal:
    """The prime {(x, f(x)+b) : x in p, b in b} of the carrier attached to a
    prime p of A; primality and the maximality equivalence are asserted."""
    if p.ring is not am.A:
        raise RingConstructionError("prime does not live in A")
    if not is_prime_ideal(am.A, p):
        raise RingConstructionError("ideal of A is not prime")
    A, B, f = am.A, am.B, am.f
    members = frozenset(am.index_of_pair[(x, B.add(f(x), bb))]
                        for x in p.members for bb in am.b.members)
    lifted = Ideal(am.carrier, members, recover_generators(am.carrier, members))
    w = primality_witness(am.carrier, lifted)
    if w is not None:
        raise RingConstructionError(f"lift of a prime is not prime (witness {w})")
    if is_maximal_ideal(am.carrier, lifted) != is_maximal_ideal(A, p):
        raise RingConstructionError("maximality is not equivalent along the lift")
    return lifted


def prime_bar(am: AmalgamatedRing, q: Ideal) -> Ideal:
    """The prime {(a, f(a)+b) : f(a)+b in q} attached to a prime q of B not
    containing b; rejected if q contains b."""
    if q.ring is not am.B:
        raise RingConstructionError("prime does not live in B")
    if not is_prime_ideal(am.B, q):
        raise RingConstructionError("ideal of B is not prime")
    if am.b.members <= q.members:
        raise ValueError("prime contains the amalgamation ideal; no transferred prime")
    members = frozenset(i for i, (_, bb) in enumerate(am.pair_of) if bb in q.members)
    barred = Ideal(am.carrier, members, recover_generators(am.carrier, members))
    w = primality_witness(am.carrier, barred)
    if w is not None:
        raise RingConstructionError(f"transferred prime is not prime (witness {w})")
    if is_maximal_ideal(am.carrier, barred) != is_maximal_ideal(am.B, q):
        raise RingConstructionError("maximality is not equivalent along the transfer")
    return barred


@dataclass
class TransferReport:
    ok: bool
    direct_count: int
    lift_count: int
    bar_count: int
    max_partition: dict
    problems: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "direct_count": self.direct_count,
                "lift_count": self.lift_count, "bar_count": self.bar_count,
                "max_partition": dict(self.max_partition), "problems": list(self.problems)}


def spectrum_transfer(am: AmalgamatedRing, *,
                      budget: Budget = DEFAULT_BUDGET):
    """Compute Spec(carrier) directly and again through the transfer maps
    (lifts of primes of A; transfers of primes of B off V(b)), and check:
    set equality, injectivity and order preservation of both maps (with
    order-preserving inverses on their images), lift image = V({0} x b),
    and the exact maximal-ideal partition.

    Returns (direct SpectrumView, TransferReport).
    """
    direct = spectrum(am.carrier, budget=budget)
    specA = spectrum(am.A, budget=budget)
    specB = spectrum(am.B, budget=budget)
    problems: list = []

    lifts = [(p, prime_lift(am, p)) for p in specA.primes]
    bars = [(q, prime_bar(am, q)) for q in specB.primes
            if not am.b.members <= q.members]

    transfer_sets = {L.members for _, L in lifts} | {Bq.members for _, Bq in bars}
    direct_sets = {P.members for P in direct.primes}
    if transfer_sets != direct_sets:
        problems.append({"kind": "set_mismatch",
                         "missing": [sorted(s) for s in direct_sets - transfer_sets],
                         "extra": [sorted(s) for s in transfer_sets - direct_sets]})
    if len({L.members for _, L in lifts}) != len(lifts):
        problems.append({"kind": "lift_not_injective"})
    if len({Bq.members for _, Bq in bars}) != len(bars):
        problems.append({"kind": "bar_not_injective"})
    for (p1, L1) in lifts:
        for (p2, L2) in lifts:
            if (p1.members <= p2.members) != (L1.members <= L2.members):
                problems.append({"kind": "lift_order_mismatch",
                                 "pair": [p1.member_names(), p2.member_names()]})
    for (q1, B1) in bars:
        for (q2, B2) in bars:
            if (q1.members <= q2.members) != (B1.members <= B2.members):
                problems.append({"kind": "bar_order_mismatch",
                                 "pair": [q1.member_names(), q2.member_names()]})
    v_b0 = {P.members for P in direct.primes if am.b0.members <= P.members}
    if {L.members for _, L in lifts} != v_b0:
        problems.append({"kind": "lift_image_not_V_b0"})
    if {Bq.members for _, Bq in bars} != direct_sets - v_b0:
        problems.append({"kind": "bar_image_not_complement"})

    expected_max = ({prime_lift(am, p).members for p in specA.maximals}
                    | {prime_bar(am, q).members for q in specB.maximals
                       if not am.b.members <= q.members})
    direct_max = {M.members for M in direct.maximals}
    if expected_max != direct_max:
        problems.append({"kind": "max_partition_mismatch"})
    partition = {
        "lift": sum(1 for p in specA.maximals),
        "bar": sum(1 for q in specB.maximals if not am.b.members <= q.members),
    }
    return direct, TransferReport(not problems, len(direct.primes),
                                  len(lifts), len(bars), partition, problems)


def is_local_amalg(am: AmalgamatedRing, *, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Locality of the carrier, computed directly (one maximal ideal) and via
    the criterion (A local and b inside Jac(B)); the two must agree, and in
    the local case the unique maximal must be the lift of A's maximal."""
    direct = len(spectrum(am.carrier, budget=budget).maximals) == 1
    maxA = spectrum(am.A, budget=budget).maximals
    _, jacB = radicals(am.B, budget=budget)
    criterion = len(maxA) == 1 and am.b.members <= jacB.members
    if direct != criterion:
        raise RingConstructionError(
            f"locality criterion disagreement: direct={direct}, criterion={criterion}")
    if direct:
        unique = spectrum(am.carrier, budget=budget).maximals[0]
        if prime_lift(am, maxA[0]).members != unique.members:
            raise RingConstructionError("maximal ideal is not the lift of A's maximal")
    return direct


# -- localization data ---------------------------------------------------------


@dataclass
class LocalizedAmalgData:
    """Localized picture at a prime p of A: the multiplicative set
    f(A \\ p) + b of B, both localizations, the induced hom between them,
    and the extension of b."""

    prime: Ideal
    s_p: MultiplicativeSet
    a_loc: LocalizedRing
    b_loc: LocalizedRing
    f_p: RingHom
    b_sp: Ideal


def localized_data(am: AmalgamatedRing, p: Ideal, *,
                   budget: Budget = DEFAULT_BUDGET) -> LocalizedAmalgData:
    """Build and verify the localized data at a prime p of A.

    Asserted identities: the induced hom is well defined on fraction
    classes; its preimage of the extension of b equals the extension of
    f^-1(b); the target is the zero ring iff f^-1(b) meets A \\ p; and for
    every ideal d of B, the extension of d is the unit ideal iff
    f^-1(b + d) meets A \\ p.
    """
    cached = am._cache.get(("localized_data", p.members))
    if cached is not None:
        return cached
    A, B, f = am.A, am.B, am.f
    if p.ring is not A or not is_prime_ideal(A, p):
        raise RingConstructionError("localization point must be a prime of A")
    sA = MultiplicativeSet.complement_of_prime(A, p.members)
    a_loc = localize(A, sA, budget=budget)
    sp_members = frozenset(B.add(f(s), bb) for s in sA.members for bb in am.b.members)
    s_p = MultiplicativeSet(B, sp_members)
    b_loc = localize(B, s_p, budget=budget)

    images: list = [None] * a_loc.carrier.size
    for a in A.elements():
        for pos, s in enumerate(a_loc.denoms):
            c = int(a_loc.class_table[a, pos])
            v = b_loc.frac(f(a), f(s))
            if images[c] is None:
                images[c] = v
            elif images[c] != v:
                raise RingConstructionError("induced hom is not well defined on classes")
    f_p = RingHom(a_loc.carrier, b_loc.carrier, images, label="induced")

    b_sp = ideal_generate(b_loc.carrier,
                          {b_loc.frac(bb, B.one) for bb in am.b.members})
    ext_f_inv = ideal_generate(a_loc.carrier,
                               {a_loc.frac(x, A.one) for x in am.f_inv_b.members})
    if f_p.preimage_ideal(b_sp).members != ext_f_inv.members:
        raise RingConstructionError(
            "preimage of the extended ideal differs from the extended preimage")
    if b_loc.carrier.is_zero_ring != bool(am.f_inv_b.members & sA.members):
        raise RingConstructionError("zero-ring criterion violated at this prime")
    if B.size <= budget.max_lattice_size:
        for d in all_ideals(B, budget=budget):
            ext_d = ideal_generate(b_loc.carrier,
                                   {b_loc.frac(x, B.one) for x in d.members})
            lhs = ext_d.is_unit_ideal
            rhs = bool(f.preimage_members(ideal_sum(am.b, d).members) & sA.members)
            if lhs != rhs:
                raise RingConstructionError(
                    "unit-extension criterion violated for an ideal of B")
    data = LocalizedAmalgData(p, s_p, a_loc, b_loc, f_p, b_sp)
    am._cache[("localized_data", p.members)] = data
    return data


@dataclass
class LocalizationCheck:
    """Outcome of verifying the localization of the carrier at one prime."""

    prime_names: tuple
    kind: str                 # "lift" or "bar"
    ok: bool
    method: str
    degenerate_zero_branch: bool = False
    detail: str = ""

    def to_json(self) -> dict:
        return {"prime": list(self.prime_names), "kind": self.kind, "ok": self.ok,
                "method": self.method,
                "degenerate_zero_branch": self.degenerate_zero_branch,
                "detail": self.detail}


def _class_map_iso(loc: LocalizedRing, target: FiniteRing,
                   image_of_pair: Callable[[int, int], Optional[int]]
                   ) -> Optional[RingHom]:
    """A hom out of a localization defined on representatives: every (a, s)
    pair must give the same image inside its class (well-definedness is part
    of the check).  Returns a bijective validated hom or None."""
    images: list = [None] * loc.carrier.size
    for a in range(loc.base.size):
        for pos, s in enumerate(loc.denoms):
            c = int(loc.class_table[a, pos])
            v = image_of_pair(a, s)
            if v is None:
                return None
            if images[c] is None:
                images[c] = v
            elif images[c] != v:
                return None
    try:
        h = RingHom(loc.carrier, target, images, label="canonical")
    except HomomorphismError:
        return None
    return h if h.is_bijective else None


def localize_amalg_at_prime(am: AmalgamatedRing, P: Ideal, *,
                            budget: Budget = DEFAULT_BUDGET) -> LocalizationCheck:
    """Verify the structure of the carrier localized at one of its primes.

    For a transferred prime of B the localization is isomorphic to the
    localization of B there; for a lifted prime of A it is isomorphic to the
    amalgamation of the localized data (and when p does not contain
    f^-1(b), the second factor collapses to the zero ring and the carrier
    localization is just the localization of A).  Canonical maps are used
    first; exhaustive search is the recorded fallback.
    """
    if P.ring is not am.carrier or not is_prime_ideal(am.carrier, P):
        raise RingConstructionError("localization point must be a prime of the carrier")
    A, B, f = am.A, am.B, am.f
    carrier_loc = localize(am.carrier,
                           MultiplicativeSet.complement_of_prime(am.carrier, P.members),
                           budget=budget)

    if am.b0.members <= P.members:
        p = Ideal.from_members(A, {am.pA(x) for x in P.members})
        if prime_lift(am, p).members != P.members:
            raise RingConstructionError("prime over {0} x b is not a lift")
        data = localized_data(am, p, budget=budget)
        Dspec = AmalgSpec(data.a_loc.carrier, data.b_loc.carrier, data.f_p, data.b_sp)
        D = AmalgamatedRing(Dspec, budget=budget)

        def img(x, s):
            a_cls = data.a_loc.frac(am.pA(x), am.pA(s))
            b_cls = data.b_loc.frac(am.pB(x), am.pB(s))
            return D.index_of_pair.get((a_cls, b_cls))

        h = _class_map_iso(carrier_loc, D.carrier, img)
        method = "canonical"
        if h is None:
            h = find_isomorphism(carrier_loc.carrier, D.carrier, budget=budget)
            method = "search"
        ok = h is not None
        degenerate = not (am.f_inv_b.members <= p.members)
        detail = ""
        if degenerate:
            if not data.b_loc.carrier.is_zero_ring:
                ok = False
                detail = "expected zero localization of B off V(f^-1(b))"
            h2 = _class_map_iso(carrier_loc, data.a_loc.carrier,
                                lambda x, s: data.a_loc.frac(am.pA(x), am.pA(s)))
            if h2 is None:
                ok = False
                detail = detail or "carrier localization is not the localization of A"
        return LocalizationCheck(p.member_names(), "lift", ok, method,
                                 degenerate_zero_branch=degenerate, detail=detail)

    for q in spectrum(B, budget=budget).primes:
        if am.b.members <= q.members:
            continue
        if prime_bar(am, q).members == P.members:
            b_at_q = localize(B, MultiplicativeSet.complement_of_prime(B, q.members),
                              budget=budget)
            h = _class_map_iso(carrier_loc, b_at_q.carrier,
                               lambda x, s: b_at_q.frac(am.pB(x), am.pB(s)))
            method = "canonical"
            if h is None:
                h = find_isomorphism(carrier_loc.carrier, b_at_q.carrier, budget=budget)
                method = "search"
            return LocalizationCheck(q.member_names(), "bar", h is not None, method)
    raise RingConstructionError("prime matches neither a lift nor a transfer")
