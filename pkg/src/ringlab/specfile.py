"""S-expression spec files: parser, serializer, and builder.

Grammar (one definition per form, ``;`` comments):

    (def NAME EXPR)

    EXPR := (zmod n)
          | (polyquot RING (poly c0 c1 ... ck))      ; ci element names
          | (truncpoly p k d)
          | (product RING RING)
          | (quot RING IDEAL)
          | (ideal RING g1 g2 ...)                   ; gi element names
          | (hom RING RING (images i1 ... in))       ; ii element names
          | (hom RING RING NAMEDHOM)
          | (amalg RING RING HOM IDEAL)
          | (dup RING IDEAL)
          | (fiber HOM HOM)

    NAMEDHOM := reduction | inclusion | identity | proj1 | proj2 | diagonal

Names must be unique, references must resolve to earlier definitions (which
also keeps the file acyclic).  Serialization emits the same grammar, so a
parse -> build -> serialize -> parse -> build round trip reproduces every
carrier bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .amalgam import AmalgSpec, AmalgamatedRing, FiberProduct, build_fiber_product, duplication
from .budget import Budget, DEFAULT_BUDGET
from .errors import RingLabError, SpecParseError
from .ideals import Ideal, ideal_generate
from .rings import (
    FiniteRing,
    Poly,
    RingHom,
    mk_hom,
    mk_poly_quot,
    mk_product,
    mk_quotient,
    mk_truncated_poly,
    mk_zmod,
)

NAMED_HOMS = ("reduction", "inclusion", "identity", "proj1", "proj2", "diagonal")


@dataclass(frozen=True)
class Node:
    """Parse-tree node: an atom or a list, with its source position."""

    kind: str          # "atom" | "list"
    value: object      # str for atoms, tuple of Node for lists
    line: int
    col: int

    def atom(self) -> str:
        if self.kind != "atom":
            raise SpecParseError("expected an atom", self.line, self.col)
        return str(self.value)

    def items(self) -> tuple:
        if self.kind != "list":
            raise SpecParseError("expected a list", self.line, self.col)
        return tuple(self.value)


def _tokenize(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
        elif ch in " \t\r":
            col += 1
            i += 1
        elif ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
        elif ch in "()":
            yield (ch, line, col)
            col += 1
            i += 1
        else:
            start, scol = i, col
            while i < len(text) and text[i] not in " \t\r\n();":
                i += 1
                col += 1
            yield (text[start:i], line, scol)
    yield (None, line, col)


def parse_nodes(text: str) -> tuple:
    """Parse a spec file into top-level nodes."""
    stack: list = [[]]
    positions: list = []
    for tok, line, col in _tokenize(text):
        if tok is None:
            if len(stack) > 1:
                l, c = positions[-1]
                raise SpecParseError("unclosed parenthesis", l, c)
            return tuple(stack[0])
        if tok == "(":
            stack.append([])
            positions.append((line, col))
        elif tok == ")":
            if len(stack) == 1:
                raise SpecParseError("unmatched close parenthesis", line, col)
            children = stack.pop()
            l, c = positions.pop()
            stack[-1].append(Node("list", tuple(children), l, c))
        else:
            stack[-1].append(Node("atom", tok, line, col))
    raise AssertionError("unreachable")


@dataclass
class SpecFile:
    """Ordered named definitions; names unique, references resolve."""

    defs: dict  # name -> Node (the defining expression)

    @staticmethod
    def parse(text: str) -> "SpecFile":
        defs: dict = {}
        for node in parse_nodes(text):
            items = node.items()
            if len(items) != 3 or items[0].atom() != "def":
                raise SpecParseError("expected (def NAME EXPR)", node.line, node.col)
            name = items[1].atom()
            if name in defs:
                raise SpecParseError(f"duplicate definition {name!r}",
                                     items[1].line, items[1].col)
            _check_refs(items[2], defs)
            defs[name] = items[2]
        return SpecFile(defs)

    def serialize(self) -> str:
        return "".join(f"(def {name} {_print_node(expr)})\n"
                       for name, expr in self.defs.items())


def _check_refs(node: Node, defs: dict) -> None:
    """References (capitalized atoms in reference positions) must resolve to
    earlier definitions.  Positional knowledge lives in the builder; here we
    only verify list nesting and leave resolution errors to build time."""
    if node.kind == "list":
        for child in node.items():
            _check_refs(child, defs)


def _print_node(node: Node) -> str:
    if node.kind == "atom":
        return str(node.value)
    return "(" + " ".join(_print_node(c) for c in node.items()) + ")"


@dataclass
class BuiltValue:
    kind: str      # "ring" | "ideal" | "hom" | "amalgamation" | "fiber"
    value: object

    @property
    def carrier(self) -> FiniteRing:
        if self.kind == "ring":
            return self.value
        if self.kind in ("amalgamation", "fiber"):
            return self.value.carrier
        raise RingLabError(f"{self.kind} entry has no ring carrier")


class Builder:
    """Builds values from parsed definitions, sequentially."""

    def __init__(self, budget: Budget = DEFAULT_BUDGET):
        self.budget = budget
        self.values: dict = {}

    def build_spec(self, spec: SpecFile) -> dict:
        for name, expr in spec.defs.items():
            try:
                self.values[name] = self.build_expr(expr)
            except SpecParseError:
                raise
            except RingLabError as e:
                raise SpecParseError(f"while building {name!r}: {e}",
                                     expr.line, expr.col) from e
        return self.values

    # -- helpers -----------------------------------------------------------

    def _ref(self, node: Node, want: str) -> BuiltValue:
        name = node.atom()
        got = self.values.get(name)
        if got is None:
            raise SpecParseError(f"unresolved reference {name!r}", node.line, node.col)
        if got.kind != want:
            raise SpecParseError(f"{name!r} is a {got.kind}, expected {want}",
                                 node.line, node.col)
        return got

    def _ring(self, node: Node) -> FiniteRing:
        return self._ref(node, "ring").value

    def _ideal(self, node: Node) -> Ideal:
        return self._ref(node, "ideal").value

    def _hom(self, node: Node) -> RingHom:
        return self._ref(node, "hom").value

    @staticmethod
    def _int(node: Node) -> int:
        try:
            return int(node.atom())
        except ValueError:
            raise SpecParseError(f"expected an integer, got {node.atom()!r}",
                                 node.line, node.col) from None

    def _element(self, R: FiniteRing, node: Node) -> int:
        name = node.atom()
        try:
            return R.by_name(name)
        except KeyError:
            raise SpecParseError(f"no element named {name!r}", node.line, node.col) from None

    # -- constructors --------------------------------------------------------

    def build_expr(self, node: Node) -> BuiltValue:
        items = node.items()
        if not items:
            raise SpecParseError("empty expression", node.line, node.col)
        head = items[0].atom()
        fn = getattr(self, f"_build_{head}", None)
        if fn is None:
            raise SpecParseError(f"unknown constructor {head!r}",
                                 items[0].line, items[0].col)
        return fn(node, items[1:])

    def _arity(self, node: Node, args, n: int, what: str):
        if len(args) != n:
            raise SpecParseError(f"{what} takes {n} arguments", node.line, node.col)

    def _build_zmod(self, node, args):
        self._arity(node, args, 1, "zmod")
        return BuiltValue("ring", mk_zmod(self._int(args[0]), budget=self.budget))

    def _build_truncpoly(self, node, args):
        self._arity(node, args, 3, "truncpoly")
        p, k, d = (self._int(a) for a in args)
        return BuiltValue("ring", mk_truncated_poly(p, k, d, budget=self.budget))

    def _build_polyquot(self, node, args):
        self._arity(node, args, 2, "polyquot")
        R = self._ring(args[0])
        poly_items = args[1].items()
        if not poly_items or poly_items[0].atom() != "poly":
            raise SpecParseError("expected (poly c0 c1 ...)", args[1].line, args[1].col)
        coeffs = [self._element(R, c) for c in poly_items[1:]]
        return BuiltValue("ring", mk_poly_quot(R, Poly.make(R, coeffs), budget=self.budget))

    def _build_product(self, node, args):
        self._arity(node, args, 2, "product")
        P, _, _ = mk_product(self._ring(args[0]), self._ring(args[1]), budget=self.budget)
        return BuiltValue("ring", P)

    def _build_ideal(self, node, args):
        if not args:
            raise SpecParseError("ideal needs a ring", node.line, node.col)
        R = self._ring(args[0])
        gens = [self._element(R, g) for g in args[1:]]
        return BuiltValue("ideal", ideal_generate(R, gens))

    def _build_quot(self, node, args):
        self._arity(node, args, 2, "quot")
        R = self._ring(args[0])
        I = self._ideal(args[1])
        if I.ring is not R:
            raise SpecParseError("ideal lives in a different ring", args[1].line, args[1].col)
        Q, _ = mk_quotient(R, I, budget=self.budget)
        return BuiltValue("ring", Q)

    def _build_hom(self, node, args):
        self._arity(node, args, 3, "hom")
        S = self._ring(args[0])
        T = self._ring(args[1])
        spec = args[2]
        if spec.kind == "list":
            items = spec.items()
            if not items or items[0].atom() != "images":
                raise SpecParseError("expected (images ...) or a named hom",
                                     spec.line, spec.col)
            images = [self._element(T, i) for i in items[1:]]
            if len(images) != S.size:
                raise SpecParseError(f"need {S.size} images, got {len(images)}",
                                     spec.line, spec.col)
            return BuiltValue("hom", mk_hom(S, T, images, label="images"))
        name = spec.atom()
        if name not in NAMED_HOMS:
            raise SpecParseError(f"unknown named hom {name!r}", spec.line, spec.col)
        return BuiltValue("hom", self._named_hom(name, S, T, spec))

    def _named_hom(self, name: str, S: FiniteRing, T: FiniteRing, node: Node) -> RingHom:
        if name == "identity":
            if S is not T:
                raise SpecParseError("identity requires the same ring on both sides",
                                     node.line, node.col)
            return RingHom(S, T, np.arange(S.size), label="identity")
        if name == "reduction":
            if T.meta.get("kind") == "quotient" and T.meta.get("base") is S:
                return T.meta["projection"]
            if S.meta.get("kind") == "zmod" and T.meta.get("kind") == "zmod":
                m, n = S.meta["modulus"], T.meta["modulus"]
                if m % n == 0:
                    return RingHom(S, T, [i % n for i in range(m)], label="reduction")
            raise SpecParseError("no canonical reduction between these rings",
                                 node.line, node.col)
        if name == "inclusion":
            if T.meta.get("kind") == "polyquot" and T.meta.get("base") is S:
                return RingHom(S, T, np.arange(S.size), label="inclusion")
            if (T.meta.get("kind") == "truncpoly" and S.meta.get("kind") == "zmod"
                    and S.meta["modulus"] == T.meta["p"]):
                return RingHom(S, T, np.arange(S.size), label="inclusion")
            raise SpecParseError("no canonical inclusion between these rings",
                                 node.line, node.col)
        if name in ("proj1", "proj2"):
            if S.meta.get("kind") == "product" and S.meta["factors"][name == "proj2"] is T:
                return S.meta[name]
            raise SpecParseError(f"{name} requires a product source with that factor",
                                 node.line, node.col)
        if name == "diagonal":
            if T.meta.get("kind") == "product" and T.meta["factors"] == (S, S):
                n2 = S.size
                return RingHom(S, T, [i * n2 + i for i in range(S.size)], label="diagonal")
            raise SpecParseError("diagonal requires the square product as target",
                                 node.line, node.col)
        raise AssertionError(name)

    def _build_amalg(self, node, args):
        self._arity(node, args, 4, "amalg")
        A = self._ring(args[0])
        B = self._ring(args[1])
        f = self._hom(args[2])
        b = self._ideal(args[3])
        if f.source is not A or f.target is not B:
            raise SpecParseError("hom does not map the first ring into the second",
                                 args[2].line, args[2].col)
        if b.ring is not B:
            raise SpecParseError("ideal does not live in the second ring",
                                 args[3].line, args[3].col)
        return BuiltValue("amalgamation",
                          AmalgamatedRing(AmalgSpec(A, B, f, b), budget=self.budget))

    def _build_dup(self, node, args):
        self._arity(node, args, 2, "dup")
        A = self._ring(args[0])
        a = self._ideal(args[1])
        if a.ring is not A:
            raise SpecParseError("ideal does not live in the ring", args[1].line, args[1].col)
        return BuiltValue("amalgamation", duplication(A, a, budget=self.budget))

    def _build_fiber(self, node, args):
        self._arity(node, args, 2, "fiber")
        rho = self._hom(args[0])
        sigma = self._hom(args[1])
        if rho.target is not sigma.target:
            raise SpecParseError("fiber product needs homs with the same target",
                                 node.line, node.col)
        return BuiltValue("fiber", build_fiber_product(rho, sigma, budget=self.budget))


def parse_spec(text: str) -> SpecFile:
    """Parse a spec file; positioned errors on failure."""
    return SpecFile.parse(text)


def build_spec(text: str, *, budget: Budget = DEFAULT_BUDGET) -> dict:
    """Parse and build a spec file; returns name -> BuiltValue."""
    return Builder(budget).build_spec(parse_spec(text))
