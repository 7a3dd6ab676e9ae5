"""Size and search budgets that keep every exhaustive check desk-scale."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Budget:
    """Hard caps for constructions and enumerations.

    max_ring_size:        largest carrier that may be constructed.
    max_lattice_size:     largest carrier admitted to full ideal-lattice
                          enumeration (spectrum, radicals, chain tests).
    bruteforce_lattice_max: largest carrier for the additive-subgroup-filter
                          lattice oracle.
    iso_search_nodes:     node cap for the exhaustive isomorphism search.
    gauss_pair_budget:    cap on (f, g) polynomial pairs a full confirmation
                          sweep of the content-multiplicativity oracle may
                          enumerate; above it the sweep degree is reduced.
    gauss_degree:         default degree bound for the polynomial oracle.
    """

    max_ring_size: int = 4096
    max_lattice_size: int = 512
    bruteforce_lattice_max: int = 64
    iso_search_nodes: int = 1_000_000
    gauss_pair_budget: int = 40_000_000
    gauss_degree: int = 2

    def with_overrides(self, **kw) -> "Budget":
        return replace(self, **kw)


DEFAULT_BUDGET = Budget()

# CLI override keys -> Budget field names.
BUDGET_KEYS = {
    "ring": "max_ring_size",
    "lattice": "max_lattice_size",
    "bruteforce": "bruteforce_lattice_max",
    "iso": "iso_search_nodes",
    "gauss-pairs": "gauss_pair_budget",
}
