"""Lozenge tilings of dented semihexagons and the plane-partition bijection.

A lozenge is a pair of edge-sharing triangles; with rows counted 1..a top to
bottom there are three kinds (levels count from the base, so row y sits at
level a - y):

* ``left``:     up(x, y) + dw(x, y)   — the weighted kind; at level k it
                carries q^(k+1) in the pure q-weighting (and a*q^(k+1) in the
                four-parameter reduction of the rectangle graph);
* ``right``:    up(x, y) + dw(x-1, y) — the other in-row kind;
* ``vertical``: up(x, y) + dw(x, y+1) — spans two rows, never weighted.

Two path systems read a tiling:

* b = n - m disjoint top-to-bottom paths enter through the top edges and
  exit through the un-dented base triangles; each crosses one in-row lozenge
  per row, and crossing a ``right`` lozenge shifts it one position to the
  right.  Path j therefore exits at position j + (number of rights), and
  carries m - (h_j - j) ``left`` lozenges, h being the sorted non-dent
  positions.

* m disjoint dent-to-northwest paths (possibly empty) cross lozenges through
  their northeast-to-southwest slanted edges.  Reading off level + 1 at each
  ``left`` crossing of the path from dent s_k gives, reversed, row m + 1 - k
  of a column-strict plane partition of shape (s_m - m, ..., s_1 - 1) with
  entries in [1, m].  This correspondence is a weight-preserving bijection:
  q^|partition| is exactly the product of the q^(level+1) weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Tiling, enumerate_matchings, enumerate_tilings
from .errors import BijectionViolation
from .poly import LaurentPoly2, as_poly
from .regions import Region, WeightedGraph, cell_neighbors, dw, up

LEFT = "left"
RIGHT = "right"
VERTICAL = "vertical"


def classify_lozenge(pair, a: int):
    """(kind, level) of a lozenge in an a-row semihexagon."""
    c1, c2 = pair
    u = c1 if c1.kind == "up" else c2
    d = c2 if c1.kind == "up" else c1
    if u.y == d.y:
        kind = LEFT if u.x == d.x else RIGHT
    else:
        kind = VERTICAL
    return kind, a - u.y


def enumerate_lozenge_tilings(region: Region):
    """Deterministic stream of all lozenge tilings (see engine for the order)."""
    if region.lattice != "triangular":
        raise ValueError("expected a triangular-lattice region")
    return enumerate_tilings(region)


def weighted_sh_genfun(region: Region, left_weight, right_weight, vertical_weight):
    """Sum over tilings of the product of per-lozenge weights, exact.

    Each weight argument is either a constant or a callable level -> weight.
    """
    a, b, s = region.semihex_params

    def norm(w):
        return w if callable(w) else (lambda _k, w=w: w)

    wl, wr, wv = norm(left_weight), norm(right_weight), norm(vertical_weight)
    total = LaurentPoly2.zero()
    for tiling in enumerate_lozenge_tilings(region):
        prod = LaurentPoly2.one()
        for pair in tiling.dominoes:
            kind, level = classify_lozenge(pair, a)
            w = {LEFT: wl, RIGHT: wr, VERTICAL: wv}[kind](level)
            prod = prod * as_poly(w)
        total = total + prod
    return total


def semihex_q_genfun(region: Region) -> LaurentPoly2:
    """Sum over tilings of q^(sum of (level+1) over left lozenges)."""
    return weighted_sh_genfun(
        region,
        lambda k: LaurentPoly2.term(1, q=k + 1),
        LaurentPoly2.one(),
        LaurentPoly2.one(),
    )


def top_bottom_paths(tiling: Tiling):
    """Decompose a tiling into its b top-to-bottom paths.

    Returns one (lefts, rights, exit_position) triple per path, in order of
    the starting top edge.  Raises BijectionViolation if a walk meets a
    vertical lozenge, which the geometry forbids.
    """
    region = tiling.region
    a, b, s = region.semihex_params
    partner = {}
    for pair in tiling.dominoes:
        partner[pair[0]] = pair[1]
        partner[pair[1]] = pair[0]
    out = []
    for j in range(1, b + 1):
        r, x = 1, j
        lefts = rights = 0
        while r <= a:
            mate = partner.get(dw(x, r))
            if mate == up(x, r):
                lefts += 1
            elif mate == up(x + 1, r):
                rights += 1
                x += 1
            else:
                raise BijectionViolation(f"top-bottom path hit a vertical lozenge at {(x, r)}")
            r += 1
        out.append((lefts, rights, x))
    return out


# ---------------------------------------------------------------------------
# column-strict plane partitions


@dataclass(frozen=True)
class ColumnStrictPlanePartition:
    """Rows weakly decrease; columns strictly decrease; entries in [1, max_entry]."""

    shape: tuple
    rows: tuple
    max_entry: int

    def validate(self):
        if tuple(len(r) for r in self.rows) != self.shape:
            raise BijectionViolation(f"row lengths {self.rows} do not match shape {self.shape}")
        if any(x < y for x, y in zip(self.shape, self.shape[1:])):
            raise BijectionViolation(f"shape {self.shape} is not weakly decreasing")
        for row in self.rows:
            if any(row[k] < row[k + 1] for k in range(len(row) - 1)):
                raise BijectionViolation(f"row {row} not weakly decreasing")
            if row and not all(1 <= v <= self.max_entry for v in row):
                raise BijectionViolation(f"entries out of range in {row}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            for k in range(len(lower)):
                if upper[k] <= lower[k]:
                    raise BijectionViolation("columns must strictly decrease")
        return self

    @property
    def size(self) -> int:
        return sum(sum(r) for r in self.rows)

    def q_weight(self) -> LaurentPoly2:
        return LaurentPoly2.term(1, q=self.size)


def cspp_shape(m: int, s) -> tuple:
    """(s_m - m, s_{m-1} - (m-1), ..., s_1 - 1)."""
    s = tuple(s)
    return tuple(s[j] - (j + 1) for j in range(m - 1, -1, -1))


def enumerate_cspp(shape, max_entry: int):
    """All column-strict plane partitions of the given shape, exactly once.

    Rows are generated top-down, entries left-to-right and descending, which
    fixes the stream order.  This enumerator is independent of the lozenge
    bijection and serves as its oracle.
    """
    shape = tuple(shape)
    if any(x < 0 for x in shape) or any(x < y for x, y in zip(shape, shape[1:])):
        raise ValueError(f"shape must be weakly decreasing and non-negative: {shape}")

    def gen_row(length, above):
        def rec(j, prev):
            if j == length:
                yield ()
                return
            hi = min(prev, above[j] - 1 if above is not None else max_entry)
            for v in range(hi, 0, -1):
                for rest in rec(j + 1, v):
                    yield (v,) + rest

        yield from rec(0, max_entry)

    def rows_from(i, above):
        if i == len(shape):
            yield ()
            return
        for row in gen_row(shape[i], above):
            for rest in rows_from(i + 1, row):
                yield (row,) + rest

    for rows in rows_from(0, None):
        yield ColumnStrictPlanePartition(shape, rows, max_entry).validate()


def tiling_to_cspp(tiling: Tiling) -> ColumnStrictPlanePartition:
    """Read the plane partition off the dent-to-northwest path system."""
    region = tiling.region
    a, b, s = region.semihex_params
    m = a
    partner = {}
    for pair in tiling.dominoes:
        partner[pair[0]] = pair[1]
        partner[pair[1]] = pair[0]
    rows = []
    for i in range(1, m + 1):  # row i of the partition belongs to dent s_{m+1-i}
        k = m + 1 - i
        dent = s[k - 1]
        r, x = a, dent - 1
        entries = []
        while x >= 1:
            mate = partner.get(dw(x, r))
            if mate == up(x, r):
                entries.append(a - r + 1)
                x -= 1
            elif mate == up(x, r - 1):
                r -= 1
                x -= 1
            else:
                raise BijectionViolation(
                    f"dent path from {dent} met an impossible pairing at {(x, r)}"
                )
        if r != i:
            raise BijectionViolation(f"dent path from {dent} exited in row {r}, expected {i}")
        if len(entries) != s[k - 1] - k:
            raise BijectionViolation(f"dent path from {dent} has {len(entries)} entries")
        rows.append(tuple(reversed(entries)))
    return ColumnStrictPlanePartition(cspp_shape(m, s), tuple(rows), m).validate()


def cspp_to_tiling(pi: ColumnStrictPlanePartition, region: Region) -> Tiling:
    """Inverse reading: replay the dent paths, then fill the forced remainder."""
    a, b, s = region.semihex_params
    m = a
    pi.validate()
    if pi.shape != cspp_shape(m, s) or pi.max_entry != m:
        raise BijectionViolation("partition shape does not match the region's dents")
    used = set()
    pairs = []

    def place(c1, c2):
        if c1 not in region.cells or c2 not in region.cells or c1 in used or c2 in used:
            raise BijectionViolation(f"cannot place lozenge {(c1, c2)}")
        used.update((c1, c2))
        pairs.append(tuple(sorted((c1, c2))))

    for i in range(1, m + 1):
        k = m + 1 - i
        dent = s[k - 1]
        ascending = tuple(reversed(pi.rows[i - 1]))
        ptr = 0
        r, x = a, dent - 1
        while x >= 1:
            want = a - r + 1
            if ptr < len(ascending) and ascending[ptr] == want:
                place(up(x, r), dw(x, r))
                ptr += 1
                x -= 1
            elif ptr < len(ascending) and ascending[ptr] < want:
                raise BijectionViolation(f"entry {ascending[ptr]} too small on dent path {dent}")
            else:
                place(up(x, r - 1), dw(x, r))
                r -= 1
                x -= 1
        if ptr != len(ascending) or r != i:
            raise BijectionViolation(f"dent path {dent} could not be replayed")

    remaining = sorted(region.cells - used)
    if remaining:
        sub = WeightedGraph(
            remaining,
            {
                (c1, c2): LaurentPoly2.one()
                for k1, c1 in enumerate(remaining)
                for c2 in remaining[k1 + 1:]
                if _tri_adjacent(c1, c2)
            },
        )
        completions = []
        for matching in enumerate_matchings(sub):
            completions.append(matching)
            if len(completions) > 1:
                break
        if len(completions) != 1:
            raise BijectionViolation(
                f"remainder admits {len(completions)} completions, expected exactly 1"
            )
        pairs.extend(tuple(sorted(e)) for e in completions[0])
    tiling = Tiling.from_dominoes(region, pairs)
    if not tiling.is_valid():
        raise BijectionViolation("replayed lozenges do not tile the region")
    return tiling


def _tri_adjacent(c1, c2):
    return c2 in cell_neighbors(c1)
