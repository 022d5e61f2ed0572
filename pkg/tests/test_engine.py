"""The two enumeration kernels and their exact agreement."""

import random
from fractions import Fraction

import pytest

from aztecgf.engine import (
    Tiling,
    count_matchings,
    count_tilings,
    enumerate_matchings,
    enumerate_tilings,
    matching_genfun,
    tiling_genfun_dp,
)
from aztecgf.errors import RegionTooWide
from aztecgf.poly import LaurentPoly2
from aztecgf.regions import (
    WeightedGraph,
    aztec_diamond,
    aztec_rectangle_with_holes,
    dual_graph,
    semihexagon_with_dents,
)


def four_cycle(weights=(1, 1, 1, 1)):
    a, b, c, d = (LaurentPoly2.const(w) for w in weights)
    return WeightedGraph(
        [0, 1, 2, 3], {(0, 1): a, (1, 2): b, (2, 3): c, (3, 0): d}
    )


def test_enumerate_matchings_four_cycle():
    assert sum(1 for _ in enumerate_matchings(four_cycle())) == 2


def test_matching_genfun_basics():
    single = WeightedGraph([0, 1], {(0, 1): LaurentPoly2.term(3, q=2)})
    assert matching_genfun(single) == LaurentPoly2.term(3, q=2)
    # weights a, b, d, c clockwise from northwest, as on the one-face graph
    g = four_cycle((2, 3, 5, 7))
    assert matching_genfun(g) == LaurentPoly2.const(2 * 5 + 3 * 7)
    no_matching = WeightedGraph([0, 1, 2], {(0, 1): LaurentPoly2.one()})
    assert matching_genfun(no_matching) == LaurentPoly2.zero()


def test_tiling_counts():
    assert sum(1 for _ in enumerate_tilings(aztec_diamond(2))) == 8
    assert count_tilings(aztec_rectangle_with_holes(3, 6, (1, 4, 6))) == 960
    assert count_tilings(semihexagon_with_dents(3, 2, (2, 3, 5))) == 3
    # an untileable region: the full rectangle with m < n has no matchings
    full_cells_odd = aztec_rectangle_with_holes(2, 3, (1, 2))
    assert count_tilings(full_cells_odd) == 8  # sanity: holes restore tileability


def test_full_rectangle_without_holes_has_no_matchings():
    from aztecgf.rewrite import full_weighted_rectangle

    # the full rectangle with m < n is untileable before holes are cut
    g = full_weighted_rectangle(3, 6, 1, 1, 1, 1)
    assert count_matchings(g) == 0
    assert sum(1 for _ in enumerate_matchings(g)) == 0


def test_enumeration_is_deterministic_and_matches_dual_graph():
    region = aztec_rectangle_with_holes(2, 4, (2, 4))
    first = [t.mask for t in enumerate_tilings(region)]
    second = [t.mask for t in enumerate_tilings(region)]
    assert first == second
    by_masks = [t.dominoes for t in enumerate_tilings(region)]
    by_graph = [
        frozenset(tuple(sorted(e)) for e in matching)
        for matching in enumerate_matchings(dual_graph(region))
    ]
    assert by_masks == by_graph  # same tilings in the same order


def test_dp_equals_oracle_with_weights():
    rng = random.Random(2024)
    for region in (
        aztec_diamond(2),
        aztec_rectangle_with_holes(2, 4, (1, 3)),
        aztec_rectangle_with_holes(3, 4, (1, 2, 4)),
    ):
        weights = {
            d: LaurentPoly2.term(Fraction(rng.randint(1, 5)), q=rng.randint(0, 2), t=rng.randint(0, 1))
            for d in region.all_dominoes
        }
        dp = tiling_genfun_dp(region, lambda dom: weights[dom])
        g = dual_graph(region)
        weighted = WeightedGraph(
            g.vertices, {e: weights[tuple(sorted(e))] for e in g.edge_dict()}
        )
        assert dp == matching_genfun(weighted)


def test_dp_counts_diamonds():
    assert tiling_genfun_dp(aztec_diamond(1)) == 2
    assert tiling_genfun_dp(aztec_diamond(4)) == 2**10
    assert tiling_genfun_dp(aztec_diamond(8)) == 2**36


def test_dp_frontier_bound():
    with pytest.raises(RegionTooWide):
        tiling_genfun_dp(aztec_diamond(6), max_frontier=4)


def test_threaded_reduction_identical():
    region = aztec_rectangle_with_holes(3, 4, (1, 3, 4))
    g = dual_graph(region)
    sequential = matching_genfun(g)
    assert matching_genfun(g, threads=4) == sequential
    assert matching_genfun(g, threads=2) == sequential


def test_tiling_object_roundtrip():
    region = aztec_diamond(1)
    t = next(iter(enumerate_tilings(region)))
    again = Tiling.from_dominoes(region, t.dominoes)
    assert again == t and again.is_valid()


def test_dp_equals_oracle_on_random_ragged_regions():
    # the DP makes no shape assumptions beyond the lattice; throw random
    # subsets of a 4x4 box at it (holes, dents, disconnections included)
    from aztecgf.regions import Region, sq

    rng = random.Random(8128)
    for case in range(40):
        cells = frozenset(
            sq(x, y) for x in range(4) for y in range(4) if rng.random() < 0.7
        )
        region = Region("square", ("ragged", case), cells)
        dp = tiling_genfun_dp(region)
        oracle = sum(1 for _ in enumerate_tilings(region))
        assert dp == oracle
