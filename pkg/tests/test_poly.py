"""Exact polynomial arithmetic: ring axioms, division, the q-ratio product."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from aztecgf.errors import InexactDivision, PoleAtZero
from aztecgf.poly import LaurentPoly2, falling_ratio, q_power, q_ratio_product, t_power

Q = q_power(1)
T = t_power(1)
TQ = LaurentPoly2.term(1, q=1, t=1)


def rand_poly(rng, terms=4, allow_negative=True):
    lo = -3 if allow_negative else 0
    return LaurentPoly2(
        {
            (rng.randint(lo, 4), rng.randint(lo, 4)): Fraction(
                rng.randint(-6, 6), rng.randint(1, 4)
            )
            for _ in range(terms)
        }
    )


def test_additive_identity_and_inverse():
    p = 1 + TQ
    assert p + LaurentPoly2.zero() == p
    assert p + (-p) == LaurentPoly2.zero()
    assert (p + TQ) == LaurentPoly2({(0, 0): 1, (1, 1): 2})


def test_multiplicative_identity_and_binomial_square():
    p = 1 + TQ
    assert p * LaurentPoly2.one() == p
    assert p * p == LaurentPoly2({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_product_expansion_matches_term_convolution():
    # independent oracle: convolve term lists by hand
    p = (1 + TQ) ** 2
    r = 1 + LaurentPoly2.term(1, q=3, t=1)
    expected = {}
    for (aq, at), ac in p.sorted_terms():
        for (bq, bt), bc in r.sorted_terms():
            key = (aq + bq, at + bt)
            expected[key] = expected.get(key, 0) + ac * bc
    assert p * r == LaurentPoly2(expected)
    assert (p * r).to_text() == "1 + 2*t*q + t^2*q^2 + t*q^3 + 2*t^2*q^4 + t^3*q^5"


def test_ring_axioms_randomized():
    rng = random.Random(1234)
    for _ in range(60):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_exact_div_examples():
    assert (q_power(3) - Q).exact_div(q_power(2) - Q) == Q + 1
    p = (1 + TQ) ** 3
    assert p.exact_div(p) == LaurentPoly2.one()
    with pytest.raises(InexactDivision):
        (q_power(2) - 1).exact_div(Q + 2)


def test_exact_div_roundtrip_randomized():
    rng = random.Random(77)
    for _ in range(60):
        p = rand_poly(rng)
        d = rand_poly(rng, terms=3)
        if d.is_zero:
            continue
        assert (p * d).exact_div(d) == p


def test_eval():
    assert (1 + TQ).evaluate(1, 1) == 2
    assert ((1 + TQ) ** 2 * (1 + LaurentPoly2.term(1, q=3, t=1))).evaluate(1, 1) == 8
    assert LaurentPoly2.term(1, q=-1).evaluate(2, 1) == Fraction(1, 2)
    with pytest.raises(PoleAtZero):
        LaurentPoly2.term(1, q=-1).evaluate(0, 1)


def test_q_ratio_product():
    for m in range(1, 5):
        assert q_ratio_product(tuple(range(1, m + 1)), 2) == LaurentPoly2.one()
    assert q_ratio_product((1, 3), 1) == Q + 1
    assert q_ratio_product((1, 4, 6), 2).evaluate(1, 1) == 15


def test_q_ratio_product_always_divides_with_integer_coefficients():
    for length in range(1, 5):
        for s in combinations(range(1, 9), length):
            for alpha in (1, 2):
                p = q_ratio_product(s, alpha)  # raises InexactDivision on failure
                assert p.is_polynomial()
                assert all(
                    c.denominator == 1 and c.numerator >= 0 for _, c in p.sorted_terms()
                )
                assert p.evaluate(1, 1) == falling_ratio(s)


def test_q_ratio_product_rejects_bad_input():
    with pytest.raises(ValueError):
        q_ratio_product((2, 1), 1)
    with pytest.raises(ValueError):
        q_ratio_product((1, 2, 2), 1)


def test_laurent_flags_and_shifts():
    p = LaurentPoly2.term(1, q=-2, t=1)
    assert not p.is_polynomial()
    assert p.shift(dq=2).is_polynomial()
    assert (1 + TQ).invert_t() == 1 + LaurentPoly2.term(1, q=1, t=-1)


def test_serialization():
    p = LaurentPoly2({(0, 0): 1, (3, 1): Fraction(1, 2), (1, 1): -2})
    assert p.to_text() == "1 - 2*t*q + 1/2*t*q^3"
    obj = p.to_json_obj()
    assert obj == {
        "terms": [
            {"q": 0, "t": 0, "coeff": "1"},
            {"q": 1, "t": 1, "coeff": "-2"},
            {"q": 3, "t": 1, "coeff": "1/2"},
        ]
    }
    assert LaurentPoly2.from_json_obj(obj) == p
    assert LaurentPoly2.zero().to_text() == "0"


def test_coefficients_always_reduced_fractions():
    p = LaurentPoly2({(0, 0): Fraction(2, 4)})
    ((e, c),) = p.sorted_terms()
    assert c == Fraction(1, 2) and c.denominator == 2
