"""Quotient-ring builder: parser, stabilization, and verified emission."""

import numpy as np
import pytest

from finring.errors import PresentationError
from finring.iso import is_isomorphic
from finring.presentation import (
    build_from_text,
    build_ring,
    parse_presentation,
)
from finring.properties import is_reversible, is_symmetric
from finring.table import ideal_generated, quotient


# -- relation parser ----------------------------------------------------------


def test_juxtaposition_and_caret_binding():
    # ^ binds to the letter immediately before it, not the whole word
    P = parse_presentation("F2<u,v>/(uv^2)")
    assert P.relations == ((((0, 1, 1), 1),),)


def test_parenthesized_power():
    P = parse_presentation("F2<u,v>/((uv)^2)")
    assert P.relations == ((((0, 1, 0, 1), 1),),)


def test_integer_coefficients_and_unary_minus():
    P = parse_presentation("Z4<u,v>/(2-uv,-u)")
    assert P.relations == (
        (((), 2), ((0, 1), 3)),
        (((0,), 3),),
    )


def test_coefficients_reduce_mod_base():
    # 2u + 2u = 4u = 0 in Z4: the relation cancels away entirely
    P = parse_presentation("Z4<u>/(2u+2u,u^2)")
    assert P.relations == ((((0, 0), 1),),)


def test_max_degree_and_expected_order_fields():
    P = parse_presentation("F2<u,v>/(u^3,v^2)", expected_order=32)
    assert P.max_degree() == 3
    assert P.expected_order == 32
    assert P.gens == ("u", "v")


@pytest.mark.parametrize(
    "text",
    [
        "Z6<x>/(x^2)",  # unsupported coefficient ring
        "F2(x)/(x)",  # missing generator list
        "F2<u,u>/(u)",  # duplicate generator
        "F2<u1>/(u1)",  # non-alphabetic generator name
        "F2<u>/(w)",  # relation mentions unknown name
        "F2<u>/(u^2)x",  # trailing junk
    ],
)
def test_parser_rejects_malformed_input(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


# -- builds at known orders ---------------------------------------------------

KNOWN_ORDERS = [
    ("F2<x>/(x^2)", 4),
    ("F2<u,v>/(u^3,v^3,vu,u^2-uv,v^2-uv)", 16),
    ("Z4<u,v>/(u^3,v^2,vu,u^2-uv,2-uv,2u,2v)", 16),
    ("F2<u,v>/(u^4,uv,vu-u^3,v^2-u^3)", 32),  # rewriting raises word degree
    ("Z4<u,v>/(u^4,uv,vu-u^3,v^2,u^2-2-2u)", 32),
    ("F2<u,v>/(u^3,v^2,u^2+uv+vu,uvu)", 32),
    ("F2<u,v>/(u^2,v^2,uvu-vuv)", 64),
]


@pytest.mark.parametrize("text,order", KNOWN_ORDERS)
def test_builds_at_cross_checked_order(text, order):
    R = build_from_text(text, expected_order=order)
    assert R.order == order


def test_build_metadata_cached():
    R = build_from_text("F2<u,v>/(u^3,v^2,u^2+uv+vu,uvu)")
    pb = R._cache["presentation_build"]
    assert pb.degree == 2
    assert pb.basis_words == ((), (0,), (1,), (0, 0), (0, 1))
    assert 2 ** len(pb.basis_words) == R.order
    gens = R._cache["generator_elements"]
    assert len(gens) == 2
    assert len(set(gens)) == 2
    assert all(g != R.zero and g != R.one for g in gens)


def test_rebuild_at_higher_degree_gives_isomorphic_ring():
    text = "F2<u,v>/(u^3,v^2,u^2+uv+vu,uvu)"
    R1 = build_from_text(text)
    d = R1._cache["presentation_build"].degree
    R2 = build_ring(parse_presentation(text), min_degree=d + 2)
    assert R2._cache["presentation_build"].degree >= d + 2
    assert R2.order == R1.order
    assert is_isomorphic(R1, R2).isomorphic is True


# -- the two-generator order-256 family --------------------------------------

FOUR_REL = "F2<u,v>/(u^3,v^3,u^2+v^2+vu,vu^2+uvu+vuv)"
FIVE_REL = "F2<u,v>/(u^3,v^3,u^2+v^2+vu,vu^2+uvu+vuv,u^2vu)"


@pytest.fixture(scope="module")
def four_rel_ring():
    return build_from_text(FOUR_REL)


def test_four_relation_quotient_has_order_512(four_rel_ring):
    assert four_rel_ring.order == 512


def test_four_relation_quotient_is_not_reversible(four_rel_ring):
    R = four_rel_ring
    # independent witness scan: some ab = 0 with ba != 0
    zero_prod = R.mul == R.zero
    assert bool((zero_prod & ~zero_prod.T).any())
    assert is_reversible(R) is False


def test_socle_relation_cuts_512_down_to_the_reversible_256(four_rel_ring):
    R = four_rel_ring
    u, v = R._cache["generator_elements"]
    w = R.mul[R.mul[R.mul[u, u], v], u]  # the word u^2vu
    assert w != R.zero
    I = ideal_generated(R, [w])
    assert len(I) == 2
    Q = quotient(R, I)
    assert Q.order == 256
    assert is_reversible(Q) is True
    assert is_symmetric(Q) is False


def test_five_relation_text_builds_the_256_ring_directly():
    R = build_from_text(FIVE_REL, expected_order=256)
    assert R.order == 256
    assert is_reversible(R) is True


# -- failure modes ------------------------------------------------------------


def test_free_algebra_is_reported_as_possibly_infinite():
    with pytest.raises(PresentationError, match="possibly infinite"):
        build_from_text("F2<u>/()")


def test_relation_degree_beyond_engine_bound():
    with pytest.raises(PresentationError, match="beyond engine bound"):
        build_from_text("F2<u>/(u^11)")


def test_declared_order_mismatch_is_an_error():
    with pytest.raises(PresentationError, match="declared expected order"):
        build_from_text("F2<x>/(x^2)", expected_order=8)
