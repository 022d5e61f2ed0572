"""Minimal tilings, flips, rank, the path bijection, and the two F(q,t) routes."""

from fractions import Fraction

import pytest

from aztecgf.engine import Tiling, enumerate_tilings
from aztecgf.errors import OddVerticalCount
from aztecgf.formulas import aztec_diamond_genfun, shifted_content_exponent
from aztecgf.poly import LaurentPoly2
from aztecgf.regions import aztec_rectangle_with_holes, sq
from aztecgf.stats import (
    elementary_moves,
    genfun_bruteforce,
    genfun_via_weights,
    minimal_path_family,
    minimal_tiling,
    path_stats,
    paths_to_tiling,
    rank_bfs,
    rank_via_paths,
    tiling_to_paths,
    vstat,
)

TQ = LaurentPoly2.term(1, q=1, t=1)


def vertical_count(tiling):
    return sum(1 for c1, c2 in tiling.dominoes if c1.x == c2.x)


def test_minimal_tiling_strips():
    t0 = minimal_tiling(3, 6, (1, 4, 6))
    assert t0.is_valid()
    # holes at 2, 3, 5 get strips of lengths 2, 2, 1
    assert vertical_count(t0) == 5
    assert (sq(1, 1), sq(1, 2)) in t0.dominoes
    assert (sq(0, 2), sq(0, 3)) in t0.dominoes
    assert (sq(2, 2), sq(2, 3)) in t0.dominoes
    assert (sq(1, 3), sq(1, 4)) in t0.dominoes
    assert (sq(4, 4), sq(4, 5)) in t0.dominoes
    assert rank_bfs(t0.region, t0) == 0


def test_minimal_tiling_of_diamond_is_all_horizontal():
    for n in (1, 2, 3):
        t0 = minimal_tiling(n, n, tuple(range(1, n + 1)))
        assert vertical_count(t0) == 0
        assert vstat(t0) == 0


def test_vstat():
    region = aztec_rectangle_with_holes(1, 1, (1,))
    all_v = Tiling.from_dominoes(
        region, [(sq(0, 0), sq(0, 1)), (sq(1, 0), sq(1, 1))]
    )
    assert vstat(all_v) == 1
    assert genfun_bruteforce(2, 2, (1, 2)).evaluate(1, Fraction(1)) == 8


def test_vstat_sum_at_q1():
    f = genfun_bruteforce(2, 2, (1, 2))
    by_t = {}
    for (eq, et), c in f.sorted_terms():
        by_t[et] = by_t.get(et, 0) + c
    # (1+t)^2 (1+t) = 1 + 3t + 3t^2 + t^3
    assert by_t == {0: 1, 1: 3, 2: 3, 3: 1}


def test_vstat_guard_fires_on_garbage():
    region = aztec_rectangle_with_holes(1, 1, (1,))
    fake = Tiling.from_dominoes(region, [(sq(0, 0), sq(0, 1))])
    with pytest.raises(OddVerticalCount):
        vstat(fake)


def test_elementary_moves():
    t0 = minimal_tiling(1, 1, (1,))
    moves = elementary_moves(t0)
    assert len(moves) == 1
    assert vertical_count(moves[0]) == 2
    # involution
    assert t0 in elementary_moves(moves[0])


def test_flip_graph_of_order_two_diamond():
    region = aztec_rectangle_with_holes(2, 2, (1, 2))
    tilings = list(enumerate_tilings(region))
    assert len(tilings) == 8
    ranks = sorted(rank_bfs(region, t) for t in tilings)
    assert ranks == [0, 1, 1, 2, 3, 4, 4, 5]


def test_paths_of_tiny_tilings():
    region = aztec_rectangle_with_holes(1, 1, (1,))
    t0 = minimal_tiling(1, 1, (1,))
    fam = tiling_to_paths(t0)
    assert [st.kind for st in fam.paths[0]] == ["level"]
    assert path_stats(fam).beta == 0
    all_v = Tiling.from_dominoes(region, [(sq(0, 0), sq(0, 1)), (sq(1, 0), sq(1, 1))])
    fam_v = tiling_to_paths(all_v)
    assert [st.kind for st in fam_v.paths[0]] == ["up", "down"]
    assert path_stats(fam_v).beta == 1
    assert rank_via_paths(all_v) == 1


def test_minimal_path_family_weight_exponent():
    fam = minimal_path_family(3, 6, (1, 4, 6))
    assert path_stats(fam).beta == 30
    assert shifted_content_exponent(3, (1, 4, 6)) == 30
    # the family reproduces the minimal tiling, and extraction recovers it
    region = aztec_rectangle_with_holes(3, 6, (1, 4, 6))
    t0 = minimal_tiling(3, 6, (1, 4, 6))
    assert paths_to_tiling(fam, region) == t0
    assert tiling_to_paths(t0) == fam


def test_degenerate_paths_allowed():
    # s_i = i gives the diamond: path i has no up steps, i level steps
    fam = minimal_path_family(2, 2, (1, 2))
    st = path_stats(fam)
    assert st.up == (0, 0) and st.level == (1, 2)


def test_roundtrip_exhaustive():
    for m, n, s in ((2, 2, (1, 2)), (2, 4, (1, 3)), (1, 2, (2,))):
        region = aztec_rectangle_with_holes(m, n, s)
        for tiling in enumerate_tilings(region):
            fam = tiling_to_paths(tiling)
            assert paths_to_tiling(fam, region) == tiling


def test_rank_agreement_small():
    for m, n, s in ((2, 3, (1, 3)), (3, 4, (1, 2, 4)), (2, 4, (2, 3))):
        region = aztec_rectangle_with_holes(m, n, s)
        for tiling in enumerate_tilings(region):
            assert rank_bfs(region, tiling) == rank_via_paths(tiling)


def test_genfun_bruteforce_examples():
    assert genfun_bruteforce(1, 1, (1,)) == 1 + TQ
    assert genfun_bruteforce(1, 2, (2,)) == 1 + TQ
    assert genfun_bruteforce(2, 2, (1, 2)) == aztec_diamond_genfun(2)


def test_genfun_via_weights_matches_bruteforce():
    for m, n, s in ((1, 1, (1,)), (1, 3, (2,)), (2, 3, (1, 3)), (3, 3, (1, 2, 3)), (2, 4, (2, 4))):
        assert genfun_via_weights(m, n, s) == genfun_bruteforce(m, n, s)


def test_minimal_weight_of_minimal_tiling():
    # wt(T0) as a path product: t^(m(m+1)/2) * q^(shifted content)
    m, n, s = 3, 6, (1, 4, 6)
    st = path_stats(tiling_to_paths(minimal_tiling(m, n, s)))
    assert st.level_total == m * (m + 1) // 2
    assert st.beta == shifted_content_exponent(m, s)
    assert st.down == (0, 0, 0)
