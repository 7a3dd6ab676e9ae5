"""The versioned example catalog: default entries and expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .budget import Budget, DEFAULT_BUDGET
from .specfile import BuiltValue, SpecFile, Builder, parse_spec

CATALOG_SCHEMA_VERSION = "1"

# Desk-scale catalog.  Ring entries cover the whole classification
# hierarchy; the amalgamations include both designed positive instances and
# the two negative controls; the fiber products exercise the chain
# criterion in its true, false, and degenerate shapes.
DEFAULT_CATALOG = """\
; rings
(def Z1 (zmod 1))
(def Z2 (zmod 2))
(def Z3 (zmod 3))
(def Z4 (zmod 4))
(def Z6 (zmod 6))
(def Z8 (zmod 8))
(def Z9 (zmod 9))
(def F4 (polyquot Z2 (poly 1 1 1)))
(def D2 (polyquot Z2 (poly 0 0 1)))
(def R63 (truncpoly 2 2 3))
(def Z2xZ2 (product Z2 Z2))
(def Z2xZ3 (product Z2 Z3))
(def Z4xZ2 (product Z4 Z2))

; ideals
(def IB2 (ideal Z2 1))
(def IX (ideal D2 x))
(def I2Z4 (ideal Z4 2))
(def I0Z4 (ideal Z4))
(def I2Z6 (ideal Z6 2))
(def IE8 (ideal Z2xZ2 0,1))

; homomorphisms
(def FE1 (hom Z4 Z2 reduction))
(def FE2 (hom Z2 D2 inclusion))
(def FE8 (hom Z2 Z2xZ2 diagonal))
(def HZ6Z1 (hom Z6 Z1 (images 0 0 0 0 0 0)))

; amalgamations
(def E1 (amalg Z4 Z2 FE1 IB2))
(def E2 (amalg Z2 D2 FE2 IX))
(def E8 (amalg Z2 Z2xZ2 FE8 IE8))
(def DUPZ4 (dup Z4 I2Z4))
(def DUPZ6 (dup Z6 I2Z6))
(def DUPZ2U (dup Z2 IB2))
(def DUPZ40 (dup Z4 I0Z4))

; fiber products
(def QD2X (quot D2 IX))
(def PID2 (hom D2 QD2X reduction))
(def FCHK (hom Z2 QD2X (images 0 1)))
(def FIBE2 (fiber FCHK PID2))
(def HZ4Z1 (hom Z4 Z1 (images 0 0 0 0)))
(def HZ2Z1 (hom Z2 Z1 (images 0 0)))
(def FIBPROD (fiber HZ4Z1 HZ2Z1))
(def IDZ3 (hom Z3 Z3 identity))
(def FIBDIAG (fiber IDZ3 IDZ3))
"""

# Pre-registered verdicts.  Each entry pins the classification facts the
# catalog is designed to witness; run_catalog fails if a computed verdict
# ever drifts from a pinned one.
EXPECTED_VERDICTS = {
    "Z6": {
        "tag": "every hierarchy condition holds on a product of two fields",
        "verdicts": {"semihereditary": True, "wgd_at_most_1": True,
                     "arithmetical": True, "gauss": True, "prufer": True,
                     "locally_prufer": True, "total_ring_of_fractions": True,
                     "coherent": True, "local": False, "chain_ring": False},
    },
    "Z4": {
        "tag": "chain ring separating arithmetical from wgd <= 1",
        "verdicts": {"semihereditary": False, "wgd_at_most_1": False,
                     "arithmetical": True, "gauss": True, "prufer": True,
                     "locally_prufer": True, "total_ring_of_fractions": True,
                     "local": True, "chain_ring": True, "coherent": True},
    },
    "DUPZ4": {
        "tag": "local square-zero carrier separating gauss from arithmetical",
        "verdicts": {"arithmetical": False, "gauss": True},
    },
    "R63": {
        "tag": "local total ring of fractions separating locally-prufer from gauss",
        "verdicts": {"semihereditary": False, "wgd_at_most_1": False,
                     "arithmetical": False, "gauss": False, "prufer": True,
                     "locally_prufer": True, "total_ring_of_fractions": True,
                     "local": True},
    },
    "Z1": {
        "tag": "zero ring, every verdict vacuous",
        "verdicts": {k: True for k in
                     ("semihereditary", "wgd_at_most_1", "arithmetical", "gauss",
                      "prufer", "locally_prufer", "total_ring_of_fractions",
                      "local", "chain_ring", "coherent")},
    },
}


@dataclass
class CatalogEntry:
    """One built catalog definition with its optional pinned verdicts."""

    id: str
    kind: str            # ring | ideal | hom | amalgamation | fiber
    expression: str
    value: BuiltValue
    expected: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"id": self.id, "kind": self.kind, "expression": self.expression}
        if self.kind in ("ring", "amalgamation", "fiber"):
            out["size"] = self.value.carrier.size
        if self.expected:
            out["expected"] = {"tag": self.expected["tag"],
                               "verdicts": dict(sorted(self.expected["verdicts"].items()))}
        return out


@dataclass
class BuiltCatalog:
    """All catalog entries, grouped by kind, in definition order."""

    spec: SpecFile
    entries: list

    def by_kind(self, kind: str) -> list:
        return [e for e in self.entries if e.kind == kind]

    @property
    def rings(self) -> list:
        return self.by_kind("ring")

    @property
    def amalgamations(self) -> list:
        return self.by_kind("amalgamation")

    @property
    def fibers(self) -> list:
        return self.by_kind("fiber")

    @property
    def homs(self) -> list:
        return self.by_kind("hom")

    def classified_rings(self) -> list:
        """(entry id, ring) pairs for every carrier the suite classifies:
        ring entries plus amalgamation and fiber-product carriers."""
        out = [(e.id, e.value.value) for e in self.rings]
        out += [(e.id, e.value.carrier) for e in self.amalgamations]
        out += [(e.id, e.value.carrier) for e in self.fibers]
        return out


def build_catalog(text: Optional[str] = None, *,
                  budget: Budget = DEFAULT_BUDGET) -> BuiltCatalog:
    """Parse and build a catalog (the default one when no text is given)."""
    spec = parse_spec(DEFAULT_CATALOG if text is None else text)
    values = Builder(budget).build_spec(spec)
    entries = []
    from .specfile import _print_node
    for name, expr in spec.defs.items():
        entries.append(CatalogEntry(name, values[name].kind, _print_node(expr),
                                    values[name], EXPECTED_VERDICTS.get(name)))
    return BuiltCatalog(spec, entries)
