"""Ring-spec grammar: parsing, canonical formatting, build semantics."""

import pytest

from zdglab import (
    CapExceededError,
    ImproperIdealError,
    InvalidElementError,
    SpecParseError,
    build_ring,
    build_zn,
    format_spec,
    is_isomorphic_small,
    parse_ring_spec,
    zero_divisors,
)
from zdglab.specs import PolyqNode, ProdNode, QuotNode, ZnNode

ROUND_TRIP_CORPUS = [
    "Zn:2",
    "Zn:100",
    "prod(Zn:2,Zn:3)",
    "prod(prod(Zn:2,Zn:2),Zn:3)",
    "polyq:2:0,0,1",
    "polyq:5:3,2,1",
    "quot(Zn:12;6)",
    "quot(prod(Zn:4,Zn:2);4,1)",
    "quot(polyq:2:0,0,1;2)",
]


def test_parse_zn():
    spec = parse_ring_spec("Zn:12")
    assert spec.node == ZnNode(12)
    assert spec.canonical == "Zn:12"


def test_parse_is_whitespace_insensitive():
    spec = parse_ring_spec(" prod( Zn:2 , Zn:3 ) ")
    assert spec.node == ProdNode(ZnNode(2), ZnNode(3))
    assert spec.canonical == "prod(Zn:2,Zn:3)"
    assert parse_ring_spec("quot( Zn:12 ; 6 )").canonical == "quot(Zn:12;6)"
    assert parse_ring_spec("polyq:2: 1 , 1 , 1").node == PolyqNode(2, (1, 1, 1))


def test_round_trip_is_a_fixpoint():
    for text in ROUND_TRIP_CORPUS:
        spec = parse_ring_spec(text)
        canonical = spec.canonical
        again = parse_ring_spec(canonical)
        assert again.node == spec.node
        assert again.canonical == canonical
        assert format_spec(again.node) == canonical


def test_parse_quot_node():
    spec = parse_ring_spec("quot(Zn:12;6)")
    assert spec.node == QuotNode(ZnNode(12), (6,))
    ring = build_ring(spec)
    assert ring.order == 6
    assert ring.spec == "quot(Zn:12;6)"
    assert zero_divisors(ring).members == {0, 2, 3, 4}


def test_parse_errors_carry_positions():
    cases = [
        ("Zn:1", 3, "at least 2"),
        ("Zn:x", 3, "integer"),
        ("polyq:4:1,1", 6, "prime"),
        ("polyq:2:1,2", 10, "out of range"),
        ("polyq:2:1", 8, "degree"),
        ("polyq:2:1,0", 10, "monic"),
        ("prod(Zn:2;Zn:3)", 9, "','"),
        ("Zn:6x", 4, "trailing"),
        ("", 0, "ring spec"),
        ("quot(Zn:8;)", 10, "integer"),
    ]
    for text, pos, fragment in cases:
        with pytest.raises(SpecParseError) as err:
            parse_ring_spec(text)
        assert err.value.position == pos, text
        assert fragment in str(err.value), text


def test_build_nested_quotient_of_product():
    ring = build_ring("quot(prod(Zn:4,Zn:2);4,1)")
    # the ideal generated by (2,0) and (0,1) has four elements
    assert ring.order == 2


def test_build_quotient_ring_isomorphic_to_z4():
    ring = build_ring("quot(Zn:8;4)")
    assert is_isomorphic_small(ring, build_zn(4))


def test_build_errors():
    with pytest.raises(ImproperIdealError):
        build_ring("quot(Zn:6;1)")
    with pytest.raises(InvalidElementError):
        build_ring("quot(Zn:6;7)")
    with pytest.raises(CapExceededError):
        build_ring("Zn:9999")
    build_ring("Zn:9999", max_order=10000)


def test_ring_spec_field_is_canonical():
    for text in ROUND_TRIP_CORPUS:
        ring = build_ring(text)
        assert ring.spec == parse_ring_spec(text).canonical


def test_quotient_by_zero_ideal_collapses_to_base_spec():
    # R/{0} is R itself, so the built ring keeps the base spec
    assert build_ring("quot(Zn:12;0)").spec == "Zn:12"
