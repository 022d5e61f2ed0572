"""Named verification suites: every closed form against its independent oracle.

Each suite is a generator of (label, ok) pairs with deterministic labels and
ordering, so `verify --suite all` output is byte-stable across runs.  The
suites are exactly the acceptance checks; the CLI and the test suite both
run them from here.

Corpus bounds (exact equality everywhere, no tolerances):

* main:     F(q,t) brute force == closed product, all 1<=m<=n<=5, all kept
            sets; plus the q=t=1 count against 2^(m(m+1)/2) * prod ratio.
* rank:     both rank computations and the path-statistic identities on
            every tiling, m<=3, n<=5, all kept sets; bijection round trips.
* diamond:  the weighted-DP route against the diamond product for n<=6,
            DP counts 2^(n(n+1)/2) for n<=12, and DP == matching oracle on
            every corpus region (kernel equivalence).
* weighted: weighted closed form == matching generating function, m<=3,
            n<=5, all kept sets, three seeded rational draws each.
* lozenge:  semihexagon counts, the plane-partition bijection (round trip,
            weight preservation, bijectivity), the q-product, and the
            path-decomposition counts, m<=4, n<=8.
* relation: domino count == 2^(m(m+1)/2) * lozenge count, m<=4, n<=7.
* rewrite:  the three local rewrites against brute force on 50 seeded random
            graphs each; the row-reduction identity; the full peeling
            pipeline factor and endpoint.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from . import formulas, lozenge, rewrite, stats
from .engine import enumerate_tilings, matching_genfun, tiling_genfun_dp
from .poly import LaurentPoly2, falling_ratio, q_ratio_product
from .regions import (
    WeightedGraph,
    aztec_diamond,
    aztec_rectangle_with_holes,
    dual_graph,
    semihexagon_with_dents,
    weighted_ar_graph,
)

SUITES = ("main", "diamond", "weighted", "lozenge", "relation", "rewrite")


def kept_sets(n, m):
    return combinations(range(1, n + 1), m)


def _ar_corpus(max_m, max_n):
    for m in range(1, max_m + 1):
        for n in range(m, max_n + 1):
            for s in kept_sets(n, m):
                yield m, n, s


# ---------------------------------------------------------------------------


def suite_main():
    yield from main_formula_cases()
    yield from suite_rank()


def main_formula_cases():
    """All three F(q,t) routes agree, plus the count specialization."""
    for m, n, s in _ar_corpus(5, 5):
        brute = stats.genfun_bruteforce(m, n, s)
        closed = formulas.rectangle_genfun(m, n, s)
        via = stats.genfun_via_weights(m, n, s)
        ok = (
            brute == closed
            and via == closed
            and closed.evaluate(1, 1) == formulas.count_product(m, s)
        )
        yield f"main F(q,t) m={m} n={n} s={s}", ok


def suite_rank():
    """Rank equivalence and path identities on every tiling, m<=3, n<=5."""
    for m, n, s in _ar_corpus(3, 5):
        region = aztec_rectangle_with_holes(m, n, s)
        t0 = stats.minimal_tiling(m, n, s)
        ok = stats.rank_bfs(region, t0) == 0
        min_area = None
        zero_rank = 0
        for tiling in enumerate_tilings(region):
            family = stats.tiling_to_paths(tiling)
            st = stats.path_stats(family)
            r_bfs = stats.rank_bfs(region, tiling)
            r_paths = stats.rank_via_paths(tiling)
            if r_bfs == 0:
                zero_rank += 1
            ok = ok and r_bfs == r_paths
            ok = ok and stats.vstat(tiling) + st.level_total == m * (m + 1) // 2
            ok = ok and all(
                st.up[i] - st.down[i] == s[i] - (i + 1) for i in range(m)
            )
            ok = ok and all(st.down[i] + st.level[i] == i + 1 for i in range(m))
            ok = ok and stats.paths_to_tiling(family, region) == tiling
            if min_area is None or st.area < min_area:
                min_area = st.area
        t0_area = stats.path_stats(stats.tiling_to_paths(t0)).area
        ok = ok and zero_rank == 1 and t0_area == min_area
        yield f"rank m={m} n={n} s={s}", ok


def suite_diamond():
    """The weighted-DP route, plain DP counts, and kernel equivalence."""
    yield from diamond_genfun_cases()
    yield from diamond_count_cases()
    yield from kernel_cases()


def diamond_genfun_cases(max_order: int = 6):
    for n in range(1, max_order + 1):
        s = tuple(range(1, n + 1))
        via = stats.genfun_via_weights(n, n, s)
        ok = via == formulas.aztec_diamond_genfun(n)
        if n <= 4:
            ok = ok and via == stats.genfun_bruteforce(n, n, s)
        yield f"diamond genfun order {n}", ok


def diamond_count_cases(max_order: int = 12):
    for n in range(1, max_order + 1):
        count = tiling_genfun_dp(aztec_diamond(n))
        yield f"diamond count order {n}", count == 2 ** (n * (n + 1) // 2)


def kernel_cases():
    """tiling_genfun_dp == matching_genfun(dual graph) on every corpus region."""
    rng = random.Random(424243)
    regions = [aztec_diamond(n) for n in range(1, 5)]
    regions += [
        aztec_rectangle_with_holes(m, n, s) for m, n, s in _ar_corpus(3, 5)
    ]
    for region in regions:
        if len(region.cells) > 60:
            continue
        graph = dual_graph(region)
        ok = tiling_genfun_dp(region) == matching_genfun(graph).evaluate(1, 1)
        dp_w = tiling_genfun_dp(region, stats.domino_weight)
        edges = {e: stats.domino_weight(tuple(sorted(e))) for e in graph.edge_dict()}
        ok = ok and dp_w == matching_genfun(WeightedGraph(graph.vertices, edges, graph.marked))
        rand_w = {
            d: LaurentPoly2.term(Fraction(rng.randint(1, 9)), q=rng.randint(0, 2), t=rng.randint(0, 1))
            for d in region.all_dominoes
        }
        dp_r = tiling_genfun_dp(region, lambda dom: rand_w[dom])
        ok = ok and dp_r == matching_genfun(
            WeightedGraph(graph.vertices, {e: rand_w[tuple(sorted(e))] for e in graph.edge_dict()})
        )
        yield f"kernel {region.key}", ok


def suite_weighted():
    """Closed weighted product == matching generating function, seeded draws."""
    rng = random.Random(57721566)
    for m, n, s in _ar_corpus(3, 5):
        ok = True
        for _ in range(3):
            a, b, c, d = (
                Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(4)
            )
            closed = formulas.weighted_rectangle_matching_genfun(m, n, s, a, b, c, d)
            direct = matching_genfun(weighted_ar_graph(m, n, s, a, b, c, d))
            ok = ok and closed == direct
        yield f"weighted m={m} n={n} s={s}", ok


def suite_lozenge():
    """Counts, bijection round trips, weight preservation, and the q-product."""
    for m in range(1, 5):
        for n in range(m, 9):
            for s in kept_sets(n, m):
                region = semihexagon_with_dents(m, n - m, s)
                tilings = list(lozenge.enumerate_lozenge_tilings(region))
                ratio = falling_ratio(s)
                ok = len(tilings) == ratio == q_ratio_product(s, 1).evaluate(1, 1)
                holes = [h for h in range(1, n + 1) if h not in set(s)]
                seen_pis = set()
                for tiling in tilings:
                    pi = lozenge.tiling_to_cspp(tiling)
                    seen_pis.add(pi.rows)
                    ok = ok and lozenge.cspp_to_tiling(pi, region) == tiling
                    left_weight = sum(
                        level + 1
                        for pair in tiling.dominoes
                        for kind, level in (lozenge.classify_lozenge(pair, m),)
                        if kind == lozenge.LEFT
                    )
                    ok = ok and left_weight == pi.size
                    decomp = lozenge.top_bottom_paths(tiling)
                    ok = ok and [e for _, _, e in decomp] == holes
                    ok = ok and all(
                        lefts == m - (holes[j] - (j + 1)) and rights == holes[j] - (j + 1)
                        for j, (lefts, rights, _) in enumerate(decomp)
                    )
                shape = lozenge.cspp_shape(m, s)
                all_pis = list(lozenge.enumerate_cspp(shape, m))
                ok = ok and len(all_pis) == len(tilings)
                ok = ok and {pi.rows for pi in all_pis} == seen_pis
                q_sum = LaurentPoly2.zero()
                for pi in all_pis:
                    q_sum = q_sum + pi.q_weight()
                product = formulas.cspp_genfun_product(s, m)
                ok = ok and q_sum == product
                ok = ok and lozenge.semihex_q_genfun(region) == product
                yield f"lozenge m={m} n={n} s={s}", ok


def suite_relation():
    """Domino count == 2^(m(m+1)/2) * lozenge count, both sides brute forced."""
    for m in range(1, 5):
        for n in range(m, 8):
            for s in kept_sets(n, m):
                rc = formulas.relation_check(m, n, s)
                ok = rc.holds() and rc.lhs == formulas.count_product(m, s)
                yield f"relation m={m} n={n} s={s}", ok


# ---------------------------------------------------------------------------
# rewrites


def _random_weight(rng):
    return LaurentPoly2.term(
        Fraction(rng.randint(1, 12), rng.randint(1, 6)), q=rng.randint(0, 2)
    )


def _random_graph(rng, nverts):
    """Random weighted graph with a guaranteed perfect matching skeleton."""
    verts = list(range(nverts))
    edges = {}
    for k in range(0, nverts, 2):
        edges[(k, k + 1)] = _random_weight(rng)
    for u in range(nverts):
        for v in range(u + 1, nverts):
            if (u, v) not in edges and rng.random() < 0.35:
                edges[(u, v)] = _random_weight(rng)
    return WeightedGraph(verts, edges)


def suite_rewrite(cases: int = 50):
    rng = random.Random(16180339)

    ok_all = True
    for case in range(cases):
        g = _random_graph(rng, rng.randrange(6, 13, 2))
        v = rng.choice(g.vertices)
        nbrs = sorted(g.neighbors(v))
        half = {u for u in nbrs if rng.random() < 0.5}
        split = rewrite.vertex_split(g, v, half, set(nbrs) - half)
        ok = matching_genfun(split) == matching_genfun(g)
        ok_all = ok_all and ok
        yield f"rewrite vertex_split case {case:02d}", ok
    for case in range(cases):
        g = _random_graph(rng, rng.randrange(6, 13, 2))
        v = rng.choice(g.vertices)
        factor = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = rewrite.star_scale(g, v, factor)
        yield (
            f"rewrite star_scale case {case:02d}",
            matching_genfun(scaled) == matching_genfun(g) * factor,
        )
    for case in range(cases):
        g, pattern = _random_spider_host(rng)
        replaced, delta = rewrite.spider_replace(g, pattern)
        yield (
            f"rewrite spider case {case:02d}",
            matching_genfun(g) == delta * matching_genfun(replaced),
        )
    for m in (1, 2):
        for n in (2, 3):
            ok = True
            for _ in range(2):
                a, b, c, d = (Fraction(rng.randint(1, 9), rng.randint(1, 5)) for _ in range(4))
                ok = ok and rewrite.row_reduction_check(m, n, a, b, c, d).holds()
            yield f"rewrite row_reduction m={m} n={n}", ok
    yield from suite_pipeline()


def _random_spider_host(rng):
    """A random graph with an urban-renewal site glued onto four of its vertices.

    Edges between cyclically consecutive plugs are dropped so the replacement
    never collides with an existing edge.
    """
    base = _random_graph(rng, rng.randrange(6, 11, 2))
    outer = rng.sample(base.vertices, 4)
    inner = [("inner", k) for k in range(4)]
    verts = list(base.vertices) + inner
    edges = base.edge_dict()
    for k in range(4):
        u, v = outer[k], outer[(k + 1) % 4]
        edges.pop((u, v), None)
        edges.pop((v, u), None)
    for o, i in zip(outer, inner):
        edges[(o, i)] = LaurentPoly2.one()
    for k in range(4):
        edges[(inner[k], inner[(k + 1) % 4])] = _random_weight(rng)
    return WeightedGraph(verts, edges), rewrite.SpiderPattern(tuple(outer), tuple(inner))


def suite_pipeline():
    """The peeling pipeline: factor closed form and semihexagon endpoint."""
    rng = random.Random(31415926)
    for m in (1, 2):
        for n in range(m, 4):
            for s in kept_sets(n, m):
                ok = True
                draws = [(Fraction(1), Fraction(1), Fraction(1), Fraction(1))]
                draws.append(tuple(Fraction(rng.randint(1, 7), rng.randint(1, 4)) for _ in range(4)))
                for a, b, c, d in draws:
                    res = rewrite.reduce_rectangle_to_semihexagon(m, n, s, a, b, c, d)
                    ok = ok and res.factor_matches()
                    start = matching_genfun(weighted_ar_graph(m, n, s, a, b, c, d))
                    final = matching_genfun(res.graph)
                    ok = ok and start == res.factor * final
                    sh = semihexagon_with_dents(m, n - m, s)
                    m_tilde = lozenge.weighted_sh_genfun(
                        sh,
                        lambda k, a=a: LaurentPoly2.term(a, q=k + 1),
                        LaurentPoly2.const(b),
                        LaurentPoly2.one(),
                    )
                    ok = ok and final == m_tilde
                    ok = ok and start == res.target_factor * m_tilde
                yield f"rewrite pipeline m={m} n={n} s={s}", ok


ALL_SUITES = {
    "main": suite_main,
    "diamond": suite_diamond,
    "weighted": suite_weighted,
    "lozenge": suite_lozenge,
    "relation": suite_relation,
    "rewrite": suite_rewrite,
}


def run_suite(name, out):
    """Print one PASS/FAIL line per case; return the number of failures."""
    if name == "all":
        fails = 0
        for sub in SUITES:
            fails += run_suite(sub, out)
        return fails
    failures = 0
    for label, ok in ALL_SUITES[name]():
        out.write(f"{'PASS' if ok else 'FAIL'}  {label}\n")
        if not ok:
            failures += 1
    return failures
