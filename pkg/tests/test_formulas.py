"""Closed product formulas against small independent computations."""

from fractions import Fraction

import pytest

from aztecgf.engine import matching_genfun
from aztecgf.errors import NegativeExponent
from aztecgf.formulas import (
    aztec_diamond_genfun,
    count_product,
    cspp_genfun_product,
    prefactor_exponent,
    rectangle_genfun,
    relation_check,
    shifted_content_exponent,
    weighted_rectangle_matching_genfun,
)
from aztecgf.poly import LaurentPoly2
from aztecgf.regions import weighted_ar_graph
from aztecgf.stats import genfun_bruteforce

TQ = LaurentPoly2.term(1, q=1, t=1)
TQ3 = LaurentPoly2.term(1, q=3, t=1)


def test_diamond_product():
    assert aztec_diamond_genfun(1) == 1 + TQ
    assert aztec_diamond_genfun(2) == (1 + TQ) ** 2 * (1 + TQ3)
    for n in range(1, 7):
        assert aztec_diamond_genfun(n).evaluate(1, 1) == 2 ** (n * (n + 1) // 2)


def test_rectangle_genfun_examples():
    assert rectangle_genfun(1, 1, (1,)) == 1 + TQ
    for m in range(1, 5):
        assert rectangle_genfun(m, m, tuple(range(1, m + 1))) == aztec_diamond_genfun(m)
    assert rectangle_genfun(3, 6, (1, 4, 6)).evaluate(1, 1) == 960


def test_rectangle_genfun_is_polynomial_and_matches_bruteforce():
    for m, n, s in ((1, 3, (2,)), (2, 3, (1, 3)), (2, 4, (2, 4)), (3, 4, (1, 3, 4))):
        closed = rectangle_genfun(m, n, s)
        assert closed.is_polynomial()
        assert closed == genfun_bruteforce(m, n, s)
        assert closed.coefficient(0, 0) == 1  # the minimal tiling alone has rank 0


def test_prefactor_exponent():
    assert prefactor_exponent(1, (1,)) == 0
    for m in range(1, 5):
        assert prefactor_exponent(m, tuple(range(1, m + 1))) == 0
    assert prefactor_exponent(2, (1, 3)) <= 0
    assert shifted_content_exponent(3, (1, 4, 6)) == 30


def test_weighted_product_examples():
    a, b, c, d = Fraction(2), Fraction(1), Fraction(3), Fraction(5)
    assert weighted_rectangle_matching_genfun(1, 1, (1,), a, b, c, d) == LaurentPoly2.const(
        a * d + b * c
    )
    assert weighted_rectangle_matching_genfun(2, 3, (1, 3), a, b, c, d) == matching_genfun(
        weighted_ar_graph(2, 3, (1, 3), a, b, c, d)
    )
    # all-ones specialization at q = 1 gives the remark count
    for m, n, s in ((2, 4, (1, 3)), (3, 5, (2, 3, 5))):
        p = weighted_rectangle_matching_genfun(m, n, s, 1, 1, 1, 1)
        assert p.evaluate(1, 1) == count_product(m, s)


def test_cspp_product_examples():
    for m in range(1, 4):
        assert cspp_genfun_product(tuple(range(1, m + 1)), m) == LaurentPoly2.one()
    q = LaurentPoly2.term(1, q=1)
    assert cspp_genfun_product((1, 3), 2) == q + q * q
    assert cspp_genfun_product((2,), 1) == q


def test_relation_examples():
    rc = relation_check(3, 6, (1, 4, 6))
    assert rc.holds() and rc.lhs == 960 == 64 * 15
    rc = relation_check(1, 1, (1,))
    assert rc.holds() and rc.lhs == 2
    assert relation_check(2, 4, (1, 3)).holds()


def test_negative_exponent_guard():
    with pytest.raises(NegativeExponent):
        LaurentPoly2.term(1, q=-1).require_polynomial()
