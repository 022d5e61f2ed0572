"""Lozenge tilings, the plane-partition bijection, and the q-weighting."""

from fractions import Fraction

import pytest

from aztecgf.engine import count_tilings
from aztecgf.errors import BijectionViolation
from aztecgf.formulas import cspp_genfun_product
from aztecgf.lozenge import (
    LEFT,
    RIGHT,
    VERTICAL,
    ColumnStrictPlanePartition,
    classify_lozenge,
    cspp_shape,
    cspp_to_tiling,
    enumerate_cspp,
    enumerate_lozenge_tilings,
    semihex_q_genfun,
    tiling_to_cspp,
    top_bottom_paths,
    weighted_sh_genfun,
)
from aztecgf.poly import LaurentPoly2, falling_ratio
from aztecgf.regions import semihexagon_with_dents


def test_counts():
    assert count_tilings(semihexagon_with_dents(3, 2, (2, 3, 5))) == 3
    for a in range(1, 4):
        assert count_tilings(semihexagon_with_dents(a, 0, tuple(range(1, a + 1)))) == 1
    assert count_tilings(semihexagon_with_dents(2, 1, (1, 3))) == 2


def test_counts_match_ratio_product():
    for m, n, s in ((2, 5, (2, 4)), (3, 6, (1, 4, 6)), (4, 6, (1, 2, 5, 6))):
        region = semihexagon_with_dents(m, n - m, s)
        assert count_tilings(region) == falling_ratio(s)


def test_enumerate_cspp_small():
    pis = list(enumerate_cspp((1,), 2))
    assert sorted(pi.rows for pi in pis) == [((1,),), ((2,),)]
    assert len(list(enumerate_cspp((0, 0), 5))) == 1
    with pytest.raises(ValueError):
        list(enumerate_cspp((1, 2), 3))


def test_cspp_sum_matches_product():
    # (2, 4) has shape (2, 1) with entries at most 2
    assert cspp_shape(2, (2, 4)) == (2, 1)
    for s, m in (((1, 3), 2), ((2,), 1), ((2, 4), 2), ((2, 3, 5), 3), ((1, 4, 6), 3)):
        total = LaurentPoly2.zero()
        for pi in enumerate_cspp(cspp_shape(m, s), m):
            total = total + pi.q_weight()
        assert total == cspp_genfun_product(s, m)


def test_dent_complete_region_has_empty_partition():
    region = semihexagon_with_dents(3, 2, (1, 2, 3))
    (tiling,) = list(enumerate_lozenge_tilings(region))
    pi = tiling_to_cspp(tiling)
    assert pi.shape == (0, 0, 0) and pi.size == 0
    assert cspp_to_tiling(pi, region) == tiling


def test_bijection_roundtrip_exhaustive():
    for m, b, s in ((3, 2, (2, 3, 5)), (3, 3, (1, 4, 6)), (2, 1, (1, 3)), (4, 2, (2, 3, 5, 6))):
        region = semihexagon_with_dents(m, b, s)
        seen = set()
        for tiling in enumerate_lozenge_tilings(region):
            pi = tiling_to_cspp(tiling)
            seen.add(pi.rows)
            assert cspp_to_tiling(pi, region) == tiling
            # the weight is preserved: q^|pi| = product of left-lozenge weights
            left_total = sum(
                level + 1
                for pair in tiling.dominoes
                if classify_lozenge(pair, m)[0] == LEFT
                for level in (classify_lozenge(pair, m)[1],)
            )
            assert left_total == pi.size
        assert len(seen) == count_tilings(region)


def test_shape_of_large_instance():
    region = semihexagon_with_dents(6, 4, (1, 3, 6, 7, 8, 10))
    assert cspp_shape(6, (1, 3, 6, 7, 8, 10)) == (4, 3, 3, 3, 1, 0)
    tiling = next(iter(enumerate_lozenge_tilings(region)))
    pi = tiling_to_cspp(tiling)
    assert pi.shape == (4, 3, 3, 3, 1, 0)
    assert pi.max_entry == 6
    assert cspp_to_tiling(pi, region) == tiling


def test_weighted_genfun():
    region = semihexagon_with_dents(2, 1, (1, 3))
    assert weighted_sh_genfun(region, 1, 1, 1) == LaurentPoly2.const(2)
    assert semihex_q_genfun(region) == cspp_genfun_product((1, 3), 2)
    # a/b-weighted: each tiling has sum(s_i - i) left lozenges in total
    a, b = Fraction(3), Fraction(5)
    weighted = weighted_sh_genfun(region, lambda k: LaurentPoly2.const(a), LaurentPoly2.const(b), 1)
    assert weighted == LaurentPoly2.const(2 * a * b)  # one left, one right per tiling


def test_top_bottom_path_counts():
    m, n, s = 3, 6, (1, 4, 6)
    region = semihexagon_with_dents(m, n - m, s)
    holes = [h for h in range(1, n + 1) if h not in set(s)]
    for tiling in enumerate_lozenge_tilings(region):
        decomp = top_bottom_paths(tiling)
        assert [exit for _, _, exit in decomp] == holes
        for j, (lefts, rights, _) in enumerate(decomp, start=1):
            assert rights == holes[j - 1] - j
            assert lefts == m - (holes[j - 1] - j)
        assert sum(l for l, _, _ in decomp) == sum(x - i for i, x in enumerate(s, start=1))


def test_classify():
    from aztecgf.regions import dw, up

    assert classify_lozenge((dw(2, 3), up(2, 3)), 4) == (LEFT, 1)
    assert classify_lozenge((dw(1, 3), up(2, 3)), 4) == (RIGHT, 1)
    assert classify_lozenge((dw(2, 4), up(2, 3)), 4) == (VERTICAL, 1)


def test_cspp_validation():
    with pytest.raises(BijectionViolation):
        ColumnStrictPlanePartition((2, 1), ((1, 2), (1,)), 3).validate()
    with pytest.raises(BijectionViolation):
        ColumnStrictPlanePartition((1, 1), ((1,), (1,)), 3).validate()
    pi = ColumnStrictPlanePartition((2, 1), ((3, 2), (1,)), 3).validate()
    assert pi.size == 6
