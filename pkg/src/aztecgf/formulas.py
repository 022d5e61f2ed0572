"""Closed-form product formulas, returned as exact polynomials.

Each function here has an independent computational counterpart elsewhere in
the package (brute-force enumeration, the weighted DP, or the plane-partition
enumerator); the verification suites assert exact equality between the two
routes at desk scale.  Nothing in this module enumerates anything.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidHoles
from .poly import LaurentPoly2, as_poly, falling_ratio, q_ratio_product


def shifted_content_exponent(m: int, s) -> int:
    """sum over 1 <= i <= j <= m of 2*(s_i + j - i - 1).

    This is the q-exponent of the weight of the minimal tiling's path family;
    the rank statistic measures the distance above it.
    """
    s = tuple(s)
    return sum(2 * (s[i - 1] + j - i - 1) for j in range(1, m + 1) for i in range(1, j + 1))


def displacement(s) -> int:
    """sum of (s_i - i), the total shift of the kept positions."""
    return sum(x - i for i, x in enumerate(tuple(s), start=1))


def prefactor_exponent(m: int, s) -> int:
    """q-exponent of the monomial prefactor in the rectangle generating function.

    Equals 2(m-1)m(m+1)/3 + 2*sum(s_i - i) - shifted_content_exponent(m, s);
    the cubic term is an integer because (m-1)m(m+1) is divisible by 3.
    Always <= 0, and exactly cancelled by the lowest term of the q-ratio
    product so the assembled generating function is a genuine polynomial.
    """
    cubic = 2 * (m - 1) * m * (m + 1)
    assert cubic % 3 == 0
    return cubic // 3 + 2 * displacement(s) - shifted_content_exponent(m, s)


def aztec_diamond_genfun(n: int) -> LaurentPoly2:
    """prod_{k=0}^{n-1} (1 + t*q^(2k+1))^(n-k), the order-n diamond's F(q, t).

    At q = t = 1 this is 2^(n(n+1)/2), the plain tiling count.
    """
    out = LaurentPoly2.one()
    for k in range(n):
        out = out * (1 + LaurentPoly2.term(1, q=2 * k + 1, t=1)) ** (n - k)
    return out


def rectangle_genfun(m: int, n: int, s) -> LaurentPoly2:
    """Closed form of F(q, t) = sum over tilings of q^rank * t^vstat.

    Assembled as a single monomial prefactor times the diamond-style product
    times the alpha=2 q-ratio product; checked to be a polynomial (a negative
    exponent surviving would mean a transcription bug, and raises).
    """
    s = tuple(s)
    if len(s) != m or any(x >= y for x, y in zip(s, s[1:])) or not all(1 <= x <= n for x in s):
        raise InvalidHoles(f"bad kept positions {s} for m={m}, n={n}")
    out = LaurentPoly2.term(1, q=prefactor_exponent(m, s))
    for k in range(m):
        out = out * (1 + LaurentPoly2.term(1, q=2 * k + 1, t=1)) ** (m - k)
    out = out * q_ratio_product(s, 2)
    return out.require_polynomial()


def weighted_rectangle_matching_genfun(m: int, n: int, s, a, b, c, d) -> LaurentPoly2:
    """Closed form of the matching generating function of the weighted
    rectangle graph with holes removed, q symbolic and a, b, c, d rational.

    q^((m-1)m(m+1)/3 + D) * a^D * b^(m(n-m) - D) * prod_k Delta_k^(m-k+1)
    * prod_{i<j} (q^s_j - q^s_i)/(q^j - q^i),   with D = sum(s_i - i) and
    Delta_k = a*d*q^(k-1) + b*c.
    """
    s = tuple(s)
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    dsp = displacement(s)
    exp = (m - 1) * m * (m + 1) // 3 + dsp
    coeff = a**dsp * b ** (m * (n - m) - dsp)
    out = LaurentPoly2.term(coeff, q=exp)
    for k in range(1, m + 1):
        delta_k = LaurentPoly2.term(a * d, q=k - 1) + as_poly(b * c)
        out = out * delta_k ** (m - k + 1)
    return (out * q_ratio_product(s, 1)).require_polynomial()


def cspp_genfun_product(s, m: int) -> LaurentPoly2:
    """Closed form of sum over column-strict plane partitions of q^|pi|.

    The partitions range over shape (s_m - m, ..., s_1 - 1) with positive
    entries at most m; the product form is q^D * prod (q^s_j - q^s_i)/(q^j -
    q^i) with D = sum(s_i - i).
    """
    s = tuple(s)
    if len(s) != m:
        raise ValueError(f"need exactly m={m} positions, got {s}")
    return (LaurentPoly2.term(1, q=displacement(s)) * q_ratio_product(s, 1)).require_polynomial()


def count_product(m: int, s) -> int:
    """2^(m(m+1)/2) * prod (s_j - s_i)/(j - i): the rectangle tiling count."""
    val = Fraction(2) ** (m * (m + 1) // 2) * falling_ratio(s)
    assert val.denominator == 1
    return int(val)


class RelationCheck:
    """Both sides of the domino/lozenge count relation, brute forced."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: int, rhs: int):
        self.lhs = lhs
        self.rhs = rhs

    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __repr__(self):
        return f"RelationCheck(lhs={self.lhs}, rhs={self.rhs})"


def relation_check(m: int, n: int, s) -> RelationCheck:
    """Count both sides of
    |domino tilings of the holey rectangle| =
    2^(m(m+1)/2) * |lozenge tilings of the dented semihexagon|,
    each by exhaustive enumeration (no product formulas involved).
    """
    from .engine import count_tilings
    from .regions import aztec_rectangle_with_holes, semihexagon_with_dents

    s = tuple(s)
    lhs = count_tilings(aztec_rectangle_with_holes(m, n, s))
    rhs_count = count_tilings(semihexagon_with_dents(m, n - m, s))
    return RelationCheck(lhs, 2 ** (m * (m + 1) // 2) * rhs_count)
