"""Enumeration kernels: exhaustive backtracking and a frontier-profile DP.

The backtracking enumerators are the oracles: they branch on the
lowest-indexed uncovered vertex and try partners in ascending index order,
so repeated runs produce identical streams.  The dynamic program is the fast
path; it must agree with the oracle exactly, and the test suite holds it to
bit-identical polynomial equality.

The DP sweeps square-lattice cells in rotated column-major order (sorted by
x + y, then y).  Every domino joins two consecutive antidiagonals, so the
pending-vertex frontier stays at most one antidiagonal wide: about n + 1
bits on an order-n Aztec diamond, which is what makes order 12 instant.  A
bounding-box column sweep would be correct too, but its profile is as wide
as the region is tall (24 bits at order 12), which is out of reach for an
exact big-number DP.  The frontier width is still guarded by a configurable
bound, default 24 bits.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import RegionTooWide
from .poly import LaurentPoly2
from .regions import Region, WeightedGraph, cell_neighbors


class Tiling:
    """A perfect tiling of a region, stored as a bitmask over its domino pool.

    The mask representation keeps flip-graph search and hashing cheap; the
    ``dominoes`` property decodes to explicit sorted cell pairs on demand.
    """

    __slots__ = ("region", "mask", "_dominoes")

    def __init__(self, region: Region, mask: int):
        self.region = region
        self.mask = mask
        self._dominoes = None

    @classmethod
    def from_dominoes(cls, region: Region, dominoes) -> "Tiling":
        index = region.domino_index
        mask = 0
        for d in dominoes:
            d = tuple(sorted(d))
            mask |= 1 << index[d]
        return cls(region, mask)

    @property
    def dominoes(self) -> frozenset:
        if self._dominoes is None:
            pool = self.region.all_dominoes
            mask = self.mask
            out = []
            while mask:
                low = mask & -mask
                out.append(pool[low.bit_length() - 1])
                mask ^= low
            self._dominoes = frozenset(out)
        return self._dominoes

    def is_valid(self) -> bool:
        seen = set()
        for c1, c2 in self.dominoes:
            if c1 in seen or c2 in seen:
                return False
            seen.add(c1)
            seen.add(c2)
        return seen == set(self.region.cells)

    def __eq__(self, other):
        return (
            isinstance(other, Tiling)
            and self.mask == other.mask
            and self.region.key == other.region.key
        )

    def __hash__(self):
        return hash((self.region.key, self.mask))

    def __repr__(self):
        return f"Tiling({self.region.key}, {len(self.dominoes)} tiles)"


# ---------------------------------------------------------------------------
# region-level enumeration


@lru_cache(maxsize=None)
def _region_adjacency(key_region):
    """For each cell index, the sorted list of (neighbor index, domino index)."""
    region = key_region
    pool = region.all_dominoes
    cindex = region.cell_index
    adj = [[] for _ in region.sorted_cells]
    for di, (c1, c2) in enumerate(pool):
        i, j = cindex[c1], cindex[c2]
        adj[i].append((j, di))
        adj[j].append((i, di))
    for row in adj:
        row.sort()
    return adj


def enumerate_tilings(region: Region):
    """Yield every tiling exactly once, in deterministic order.

    Branches on the lowest-indexed uncovered cell, partners ascending; this
    is the image of :func:`enumerate_matchings` on the dual graph under the
    tiles-to-edges bijection, which the tests check directly.
    """
    ncells = len(region.sorted_cells)
    if ncells % 2:
        return
    adj = _region_adjacency(region)
    covered = bytearray(ncells)

    def rec(start, mask):
        while start < ncells and covered[start]:
            start += 1
        if start == ncells:
            yield mask
            return
        covered[start] = 1
        for j, di in adj[start]:
            if not covered[j]:
                covered[j] = 1
                yield from rec(start + 1, mask | (1 << di))
                covered[j] = 0
        covered[start] = 0

    for mask in rec(0, 0):
        yield Tiling(region, mask)


def count_tilings(region: Region) -> int:
    """Exact tiling count by exhaustive backtracking (no closed forms).

    Degree-1 cells are forced without branching, and branching picks a cell
    of minimum remaining degree, which prunes hard on thin regions.
    """
    adj = [[j for j, _ in row] for row in _region_adjacency(region)]
    return _count_matchings_indexed(adj)


def _count_matchings_indexed(adj) -> int:
    n = len(adj)
    if n % 2:
        return 0
    deg = [len(a) for a in adj]
    alive = bytearray([1] * n)

    def kill(v):
        alive[v] = 0
        touched = []
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                touched.append(u)
        return touched

    def revive(v, touched):
        alive[v] = 1
        for u in touched:
            deg[u] += 1

    def rec(remaining):
        if remaining == 0:
            return 1
        # forced moves: any alive degree-0 vertex kills the branch, degree-1
        # vertices have a unique partner
        pivot = -1
        pivot_deg = 1 << 30
        for v in range(n):
            if alive[v]:
                d = deg[v]
                if d == 0:
                    return 0
                if d < pivot_deg:
                    pivot, pivot_deg = v, d
                    if d == 1:
                        break
        total = 0
        tv = kill(pivot)
        for u in adj[pivot]:
            if alive[u]:
                tu = kill(u)
                total += rec(remaining - 2)
                revive(u, tu)
        revive(pivot, tv)
        return total

    return rec(n)


# ---------------------------------------------------------------------------
# weighted-graph enumeration (the oracle side)


def enumerate_matchings(graph: WeightedGraph):
    """Yield each perfect matching of ``graph`` exactly once.

    A matching is a frozenset of vertex-label pairs, each pair ordered by
    vertex index.  Branching is on the lowest-indexed uncovered vertex with
    partners in ascending index order, so the stream is deterministic.
    """
    n = graph.n
    if n % 2:
        return
    verts = graph.vertices
    adj = [[j for j, _ in row] for row in graph.adjacency_indexed()]
    covered = bytearray(n)
    chosen = []

    def rec(start):
        while start < n and covered[start]:
            start += 1
        if start == n:
            yield frozenset(chosen)
            return
        covered[start] = 1
        for j in adj[start]:
            if not covered[j]:
                covered[j] = 1
                chosen.append((verts[start], verts[j]))
                yield from rec(start + 1)
                chosen.pop()
                covered[j] = 0
        covered[start] = 0

    yield from rec(0)


def matching_genfun(graph: WeightedGraph, threads: int = 1):
    """Sum over perfect matchings of the product of edge weights, exact.

    With ``threads > 1`` the branches at the first vertex are evaluated as
    independent subtree sums and merged in branch order; exact addition is
    commutative and associative, so the result is identical to sequential.
    """
    n = graph.n
    if n == 0:
        return LaurentPoly2.one()
    if n % 2:
        return LaurentPoly2.zero()
    adj = graph.adjacency_indexed()

    def subtree(start, covered, acc):
        while start < n and covered[start]:
            start += 1
        if start == n:
            return acc
        total = LaurentPoly2.zero()
        covered[start] = 1
        for j, w in adj[start]:
            if not covered[j]:
                covered[j] = 1
                total = total + subtree(start + 1, covered, acc * w)
                covered[j] = 0
        covered[start] = 0
        return total

    if threads <= 1:
        return subtree(0, bytearray(n), LaurentPoly2.one())

    from concurrent.futures import ThreadPoolExecutor

    first = 0
    jobs = []
    for j, w in adj[first]:
        def job(j=j, w=w):
            covered = bytearray(n)
            covered[first] = 1
            covered[j] = 1
            return subtree(first + 1, covered, LaurentPoly2.one() * w)
        jobs.append(job)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(lambda f: f(), jobs))
    total = LaurentPoly2.zero()
    for p in partials:
        total = total + p
    return total


def count_matchings(graph: WeightedGraph) -> int:
    adj = [[j for j, _ in row] for row in graph.adjacency_indexed()]
    return _count_matchings_indexed(adj)


# ---------------------------------------------------------------------------
# frontier-profile dynamic programming


def tiling_genfun_dp(region: Region, weight=None, max_frontier: int = 24):
    """Generating function of all tilings with per-domino weights, by DP.

    ``weight`` maps a domino (an ordered cell pair from the region's pool)
    to a weight; ``None`` counts tilings with integer arithmetic.  The state
    is the set of swept cells still awaiting a partner, encoded as a bit
    profile; cells outside the region never enter the sweep, which is how
    ragged boundaries are handled.  Raises :class:`RegionTooWide` when the
    profile would exceed ``max_frontier`` bits.

    The result is exactly ``matching_genfun(dual_graph(region))`` with the
    matching edge weights; the acceptance suite asserts that equality.
    """
    if region.lattice != "square":
        raise ValueError("the profile DP sweeps square-lattice regions only")
    cells = sorted(region.cells, key=lambda c: (c.x + c.y, c.y))
    n = len(cells)
    if n == 0:
        return 1 if weight is None else LaurentPoly2.one()
    if n % 2:
        return 0 if weight is None else LaurentPoly2.zero()
    pos = {c: k for k, c in enumerate(cells)}

    nbr_earlier = [[] for _ in range(n)]  # (earlier position, weight)
    max_nbr = [-1] * n
    cellset = region.cells
    for k, c in enumerate(cells):
        for d in cell_neighbors(c):
            if d in cellset:
                p = pos[d]
                if p > max_nbr[k]:
                    max_nbr[k] = p
                if p < k:
                    if weight is None:
                        w = 1
                    else:
                        dom = tuple(sorted((c, d)))
                        w = weight(dom)
                    nbr_earlier[k].append((p, w))
        nbr_earlier[k].sort(key=lambda t: t[0])

    last_mask = [0] * n  # bits of vertices whose final chance to match is cell k
    for p in range(n):
        if 0 <= max_nbr[p] < n and max_nbr[p] > p:
            last_mask[max_nbr[p]] |= 1 << p

    states = {0: 1 if weight is None else LaurentPoly2.one()}
    for k in range(n):
        if not states:
            break
        nxt = {}
        lm = last_mask[k]
        bit_k = 1 << k
        can_defer = max_nbr[k] > k
        for s, val in states.items():
            req = s & lm
            if req:
                if req & (req - 1):
                    continue  # two pending cells both need k: dead branch
                p = req.bit_length() - 1
                for pp, w in nbr_earlier[k]:
                    if pp == p:
                        _acc(nxt, s ^ req, val * w)
                        break
            else:
                for p, w in nbr_earlier[k]:
                    pb = 1 << p
                    if s & pb:
                        _acc(nxt, s ^ pb, val * w)
                if can_defer:
                    ns = s | bit_k
                    if ns.bit_count() > max_frontier:
                        raise RegionTooWide(
                            f"DP frontier exceeded {max_frontier} bits at cell {cells[k]}"
                        )
                    _acc(nxt, ns, val)
        states = nxt

    out = states.get(0)
    if out is None:
        return 0 if weight is None else LaurentPoly2.zero()
    return out


def _acc(d, key, val):
    cur = d.get(key)
    d[key] = val if cur is None else cur + val


def tiling_count_dp(region: Region, max_frontier: int = 24) -> int:
    return tiling_genfun_dp(region, None, max_frontier)
