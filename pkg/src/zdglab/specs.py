"""Recursive-descent parser and canonical formatter for ring specs.

Grammar (whitespace between tokens is ignored):

    spec := "Zn:" INT
          | "prod(" spec "," spec ")"
          | "polyq:" INT ":" INT ("," INT)*
          | "quot(" spec ";" INT ("," INT)* ")"

``polyq`` coefficients are constant-term first and must already be reduced
mod p with leading coefficient 1. ``quot`` generators are element indices
of the base ring (products index row-major, polynomial quotients by base-p
digits). Error positions are byte offsets into the original string.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ImproperIdealError, InvalidElementError, SpecParseError
from .ideals import generate_ideal, quotient_ring
from .rings import (
    DEFAULT_MAX_ORDER,
    FiniteRing,
    _is_prime,
    build_poly_quotient,
    build_zn,
    direct_product,
)


@dataclass(frozen=True)
class ZnNode:
    n: int


@dataclass(frozen=True)
class ProdNode:
    left: "SpecNode"
    right: "SpecNode"


@dataclass(frozen=True)
class PolyqNode:
    p: int
    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class QuotNode:
    base: "SpecNode"
    generators: tuple[int, ...]


SpecNode = Union[ZnNode, ProdNode, PolyqNode, QuotNode]


@dataclass(frozen=True)
class RingSpec:
    raw: str
    node: SpecNode

    @property
    def canonical(self) -> str:
        return format_spec(self.node)


def format_spec(node: SpecNode) -> str:
    """Canonical text for a spec tree (no whitespace)."""
    if isinstance(node, ZnNode):
        return f"Zn:{node.n}"
    if isinstance(node, ProdNode):
        return f"prod({format_spec(node.left)},{format_spec(node.right)})"
    if isinstance(node, PolyqNode):
        return f"polyq:{node.p}:{','.join(str(c) for c in node.coeffs)}"
    if isinstance(node, QuotNode):
        gens = ",".join(str(g) for g in node.generators)
        return f"quot({format_spec(node.base)};{gens})"
    raise TypeError(f"not a spec node: {node!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def literal(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.literal(token):
            raise SpecParseError(f"expected {token!r}", self.pos)

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SpecParseError("expected an integer", start)
        return int(self.text[start : self.pos]), start

    def int_list(self, sep: str = ",") -> list[tuple[int, int]]:
        items = [self.integer()]
        while self.literal(sep):
            items.append(self.integer())
        return items

    def spec(self) -> SpecNode:
        self.skip_ws()
        if self.literal("Zn:"):
            n, at = self.integer()
            if n < 2:
                raise SpecParseError("ring order must be at least 2", at)
            return ZnNode(n)
        if self.literal("prod("):
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return ProdNode(left, right)
        if self.literal("polyq:"):
            p, p_at = self.integer()
            if not _is_prime(p):
                raise SpecParseError("polynomial modulus must be prime", p_at)
            self.expect(":")
            coeffs = self.int_list()
            if len(coeffs) < 2:
                raise SpecParseError("quotient polynomial must have degree at least 1", coeffs[0][1])
            for c, at in coeffs:
                if c >= p:
                    raise SpecParseError(f"coefficient out of range 0..{p - 1}", at)
            if coeffs[-1][0] != 1:
                raise SpecParseError("quotient polynomial must be monic (leading coefficient 1)", coeffs[-1][1])
            return PolyqNode(p, tuple(c for c, _ in coeffs))
        if self.literal("quot("):
            base = self.spec()
            self.expect(";")
            gens = self.int_list()
            self.expect(")")
            return QuotNode(base, tuple(g for g, _ in gens))
        raise SpecParseError("expected a ring spec: Zn:<n>, prod(...), polyq:..., or quot(...)", self.pos)


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a spec string; raises SpecParseError with a byte offset."""
    parser = _Parser(text)
    node = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        raise SpecParseError("unexpected trailing input", parser.pos)
    return RingSpec(raw=text, node=node)


def build_ring(spec: RingSpec | SpecNode | str, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Construct the ring a spec describes.

    ``quot`` nodes build the base ring, generate the ideal from the listed
    element indices, and return the quotient.
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    node = spec.node if isinstance(spec, RingSpec) else spec
    if isinstance(node, ZnNode):
        return build_zn(node.n, max_order=max_order)
    if isinstance(node, PolyqNode):
        return build_poly_quotient(node.p, list(node.coeffs), max_order=max_order)
    if isinstance(node, ProdNode):
        left = build_ring(node.left, max_order=max_order)
        right = build_ring(node.right, max_order=max_order)
        return direct_product(left, right, max_order=max_order)
    if isinstance(node, QuotNode):
        base = build_ring(node.base, max_order=max_order)
        for g in node.generators:
            if not (0 <= g < base.order):
                raise InvalidElementError(
                    f"generator {g} out of range for ring {base.spec} of order {base.order}"
                )
        ideal = generate_ideal(base, node.generators)
        if not ideal.is_proper:
            raise ImproperIdealError(f"generators {node.generators} generate the whole ring {base.spec}")
        quotient, _ = quotient_ring(base, ideal)
        return quotient
    raise TypeError(f"not a spec node: {node!r}")
