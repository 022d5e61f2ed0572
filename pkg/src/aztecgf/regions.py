"""Regions (Aztec diamonds, Aztec rectangles with holes, dented semihexagons)
and their dual graphs.

Coordinate conventions
----------------------

Square lattice: the cell ``(x, y)`` is the unit square [x, x+1] x [y, y+1].

An Aztec rectangle with m squares on the southwest side and n on the
northwest side is built from m*n overlapping 2x2 blocks: block (i, j), with
i = 1..m counted bottom-up and j = 1..n left-right, has its lower-left cell
at ``(j - i, i + j - 2)``.  This pins the otherwise-drawing-dependent region
to explicit integers; every boundary identification below is derived from it:

* southeast side: position h holds cell ``(h, h-1)`` for h = 1..n (these are
  the "bottommost vertices" of the dual graph once the picture is rotated 45
  degrees clockwise);
* southwest side: cell ``(1-i, i-1)`` for i = 1..m;
* northwest side: cell ``(j-m, m+j-1)`` for j = 1..n.

Keeping the squares at southeast positions ``s_1 < ... < s_m`` and removing
the rest ("holes") gives the tileable region with 2mn + m + n - (n - m)
cells.

Triangular lattice: the cell ``(x, y)`` with kind ``up``/``dw`` is the x-th
up/down-pointing unit triangle of row y (rows counted 1..a top to bottom, so
the base row is y = a).  Row y holds b+y up-triangles and b+y-1
down-triangles, each row shifted half a unit left of the one above.  The
resulting adjacency is::

    up(y, x) ~ dw(y, x)      (shared right edge of the up-triangle)
    up(y, x) ~ dw(y, x-1)    (shared left edge)
    up(y, x) ~ dw(y+1, x)    (shared bottom edge)

A dented semihexagon removes ``a`` up-triangles from the base row at
positions ``s_1 < ... < s_a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import InconsistentBoundary, InvalidDents, InvalidHoles
from .poly import LaurentPoly2, as_poly

SQUARE = "sq"
TRI_UP = "up"
TRI_DOWN = "dw"


class Cell(NamedTuple):
    x: int
    y: int
    kind: str = SQUARE


def sq(x: int, y: int) -> Cell:
    return Cell(x, y, SQUARE)


def up(x: int, y: int) -> Cell:
    return Cell(x, y, TRI_UP)


def dw(x: int, y: int) -> Cell:
    return Cell(x, y, TRI_DOWN)


@dataclass(frozen=True)
class Region:
    """A finite cell set plus construction metadata.

    ``key`` identifies the construction (used as a cache key and for cheap
    hashing of tilings), ``se_side``/``nw_side``/``sw_side`` record the
    ordered boundary cells that the statistics layer needs.
    """

    lattice: str
    key: tuple
    cells: frozenset
    se_side: tuple = ()
    nw_side: tuple = ()
    sw_side: tuple = ()

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, Region) and self.key == other.key

    @cached_property
    def sorted_cells(self) -> tuple:
        return tuple(sorted(self.cells))

    @cached_property
    def cell_index(self) -> dict:
        return {c: i for i, c in enumerate(self.sorted_cells)}

    @property
    def kind(self) -> str:
        return self.key[0]

    # -- accessors for Aztec-rectangle metadata ---------------------------

    @property
    def rect_params(self):
        """(m, n, s) of an Aztec rectangle with holes."""
        if self.key[0] == "aztec_rectangle":
            return self.key[1], self.key[2], self.key[3]
        if self.key[0] == "aztec_diamond":
            raise ValueError("construct Aztec diamonds as aztec_rectangle_with_holes(n, n, 1..n) "
                             "when rectangle coordinates are needed")
        raise ValueError(f"not an Aztec rectangle: {self.key}")

    @property
    def semihex_params(self):
        """(a, b, s) of a dented semihexagon."""
        if self.key[0] != "semihexagon":
            raise ValueError(f"not a semihexagon: {self.key}")
        return self.key[1], self.key[2], self.key[3]

    @cached_property
    def all_dominoes(self) -> tuple:
        """Every side-adjacent cell pair inside the region, canonically ordered.

        This is the domino pool: a tiling is a subset of it, and the fast
        enumeration kernels address dominoes by their index here.
        """
        cells = self.cells
        out = []
        for c in self.sorted_cells:
            for d in cell_neighbors(c):
                if d in cells and c < d:
                    out.append((c, d))
        return tuple(sorted(out))

    @cached_property
    def domino_index(self) -> dict:
        return {d: i for i, d in enumerate(self.all_dominoes)}

    def rows(self) -> dict:
        """Square-lattice rows: y -> sorted list of x values present."""
        if self.lattice != "square":
            raise ValueError("rows() is defined for square-lattice regions")
        out = {}
        for c in self.sorted_cells:
            out.setdefault(c.y, []).append(c.x)
        for xs in out.values():
            xs.sort()
        return out

    def to_json_obj(self) -> dict:
        return {
            "kind": self.key[0],
            "params": [list(p) if isinstance(p, tuple) else p for p in self.key[1:]],
            "lattice": self.lattice,
            "cells": [{"x": c.x, "y": c.y, "cell": c.kind} for c in self.sorted_cells],
        }


def region_from_json(obj) -> Region:
    kind = obj["kind"]
    params = [tuple(p) if isinstance(p, list) else p for p in obj["params"]]
    if kind == "aztec_diamond":
        return aztec_diamond(*params)
    if kind == "aztec_rectangle":
        return aztec_rectangle_with_holes(*params)
    if kind == "semihexagon":
        return semihexagon_with_dents(*params)
    raise ValueError(f"unknown region kind {kind!r}")


def cell_neighbors(c: Cell):
    """All potential side-sharing neighbors of a cell (lattice geometry only)."""
    if c.kind == SQUARE:
        return (sq(c.x - 1, c.y), sq(c.x + 1, c.y), sq(c.x, c.y - 1), sq(c.x, c.y + 1))
    if c.kind == TRI_UP:
        return (dw(c.x - 1, c.y), dw(c.x, c.y), dw(c.x, c.y + 1))
    return (up(c.x, c.y), up(c.x + 1, c.y), up(c.x, c.y - 1))


def aztec_diamond(n: int) -> Region:
    """The Aztec diamond of order n: unit squares inside |x| + |y| = n + 1.

    Centered so the cells are those with |x + 1/2| + |y + 1/2| <= n; the cell
    count is 2n(n+1).  Coincides with ``aztec_rectangle_with_holes(n, n,
    (1, ..., n))`` up to translation.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    cells = frozenset(
        sq(x, y)
        for x in range(-n, n)
        for y in range(-n, n)
        if abs(2 * x + 1) + abs(2 * y + 1) <= 2 * n
    )
    se = tuple(sq(k, -(n - k)) for k in range(n))
    nw = tuple(sq(-k - 1, n - 1 - k) for k in range(n - 1, -1, -1))
    sw = tuple(sq(-k - 1, -(n - k)) for k in range(n))
    return Region("square", ("aztec_diamond", n), cells, se_side=se, nw_side=nw, sw_side=sw)


def aztec_rectangle_with_holes(m: int, n: int, s) -> Region:
    """Aztec rectangle AR_{m,n} keeping only the southeast squares at positions s.

    The full rectangle has 2mn + m + n cells; each of the n - m removed
    southeast squares ("holes") drops one.
    """
    s = tuple(s)
    if not (1 <= m <= n):
        raise InvalidHoles(f"need 1 <= m <= n, got m={m}, n={n}")
    if len(s) != m or any(a >= b for a, b in zip(s, s[1:])) or not all(1 <= x <= n for x in s):
        raise InvalidHoles(f"s must be strictly increasing in [1, {n}] with {m} entries, got {s}")
    cells = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            x0, y0 = j - i, i + j - 2
            cells.update((sq(x0, y0), sq(x0 + 1, y0), sq(x0, y0 + 1), sq(x0 + 1, y0 + 1)))
    kept = set(s)
    for h in range(1, n + 1):
        if h not in kept:
            cells.discard(sq(h, h - 1))
    se = tuple(sq(h, h - 1) for h in s)
    nw = tuple(sq(j - m, m + j - 1) for j in range(1, n + 1))
    sw = tuple(sq(1 - i, i - 1) for i in range(1, m + 1))
    return Region(
        "square", ("aztec_rectangle", m, n, s), frozenset(cells),
        se_side=se, nw_side=nw, sw_side=sw,
    )


def semihexagon_with_dents(a: int, b: int, s) -> Region:
    """Upper half of the a,b,b,a,b,b semi-regular hexagon with dents at s.

    Row y (1 = top) has b+y up-triangles and b+y-1 down-triangles; the a
    up-triangles at base positions s are removed.  The remaining cell count
    is always even.
    """
    s = tuple(s)
    if a < 1 or b < 0:
        raise InvalidDents(f"need a >= 1 and b >= 0, got a={a}, b={b}")
    if len(s) != a or any(x >= y for x, y in zip(s, s[1:])) or not all(1 <= x <= a + b for x in s):
        raise InvalidDents(f"s must be strictly increasing in [1, {a + b}] with {a} entries, got {s}")
    cells = set()
    for y in range(1, a + 1):
        for x in range(1, b + y + 1):
            cells.add(up(x, y))
        for x in range(1, b + y):
            cells.add(dw(x, y))
    for x in s:
        cells.remove(up(x, a))
    base = tuple(up(x, a) for x in range(1, a + b + 1) if x not in set(s))
    nw = tuple(up(1, y) for y in range(1, a + 1) if up(1, y) in cells)
    return Region(
        "triangular", ("semihexagon", a, b, s), frozenset(cells),
        se_side=base, nw_side=nw,
    )


# ---------------------------------------------------------------------------
# weighted graphs


class WeightedGraph:
    """Undirected graph with nonzero edge weights and an ordered marked list.

    Vertex labels are arbitrary hashable values; the vertex tuple order fixes
    the "lowest-indexed vertex" rule that makes matching enumeration
    deterministic.  Instances are treated as immutable: every transformation
    builds a new graph.
    """

    __slots__ = ("vertices", "index", "_adj", "marked")

    def __init__(self, vertices, edges, marked=()):
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        self._adj = {v: {} for v in self.vertices}
        for (u, v), w in edges.items():
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in self.index or v not in self.index:
                raise ValueError(f"edge endpoint not a vertex: {(u, v)!r}")
            if v in self._adj[u]:
                raise ValueError(f"duplicate edge {(u, v)!r}")
            if not w:
                raise ValueError(f"zero weight on edge {(u, v)!r}")
            self._adj[u][v] = w
            self._adj[v][u] = w
        self.marked = tuple(marked)

    @property
    def n(self):
        return len(self.vertices)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def weight(self, u, v):
        return self._adj[u][v]

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def edge_items(self):
        """Each undirected edge once, as ((u, v), w), deterministic order."""
        for u in self.vertices:
            iu = self.index[u]
            for v, w in self._adj[u].items():
                if self.index[v] > iu:
                    yield (u, v), w

    def edge_count(self):
        return sum(len(d) for d in self._adj.values()) // 2

    def edge_dict(self):
        return {(u, v): w for (u, v), w in self.edge_items()}

    def adjacency_indexed(self):
        """Adjacency as index lists: for each vertex i, sorted [(j, w), ...]."""
        out = []
        for u in self.vertices:
            row = sorted((self.index[v], w) for v, w in self._adj[u].items())
            out.append(row)
        return out

    def map_weights(self, f):
        return WeightedGraph(self.vertices, {e: f(w) for e, w in self.edge_dict().items()}, self.marked)

    def without_vertices(self, drop):
        drop = set(drop)
        verts = [v for v in self.vertices if v not in drop]
        edges = {
            (u, v): w for (u, v), w in self.edge_items() if u not in drop and v not in drop
        }
        marked = tuple(v for v in self.marked if v not in drop)
        return WeightedGraph(verts, edges, marked)

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and self._canonical_edges() == other._canonical_edges()
        )

    def _canonical_edges(self):
        return {frozenset(e): w for e, w in self.edge_dict().items()}

    def __repr__(self):
        return f"WeightedGraph({self.n} vertices, {self.edge_count()} edges)"


def dual_graph(region: Region) -> WeightedGraph:
    """One vertex per cell, one weight-1 edge per side-sharing pair.

    For Aztec regions the ordered southeast-side cells are recorded as the
    marked list (the bottommost vertices of the rotated drawing).
    """
    cells = region.cells
    edges = {}
    for c in region.sorted_cells:
        for d in cell_neighbors(c):
            if d in cells and c < d:
                edges[(c, d)] = LaurentPoly2.one()
    return WeightedGraph(region.sorted_cells, edges, marked=region.se_side)


def ar_face_cells(m: int, n: int):
    """The diamond faces of AR_{m,n}: (i, j) -> (W, S, E, N) cells.

    Face (i, j) is the 2x2 block with lower-left cell (j-i, i+j-2); after the
    45-degree clockwise rotation its lower-left/lower-right/upper-right/
    upper-left cells sit west/south/east/north, in that order.
    """
    faces = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            x0, y0 = j - i, i + j - 2
            faces[(i, j)] = (sq(x0, y0), sq(x0 + 1, y0), sq(x0 + 1, y0 + 1), sq(x0, y0 + 1))
    return faces


def weighted_ar_graph(m: int, n: int, s, a, b, c, d) -> WeightedGraph:
    """Dual graph of AR_{m,n} with the four-parameter face weights, holes removed.

    The diamond face in row i, column j carries edge weights a (northwest
    edge), b (northeast), d*q^(i+j-2) (southeast), c*q^(i+j-2) (southwest),
    with q symbolic.  Hole removal happens at graph level: the southeast-side
    vertices whose positions are not in s are deleted with their edges.
    """
    s = tuple(s)
    if not 1 <= m <= n:
        raise InvalidHoles(f"need 1 <= m <= n, got m={m}, n={n}")
    if len(s) != m or any(x >= y for x, y in zip(s, s[1:])) or not all(1 <= x <= n for x in s):
        raise InvalidHoles(f"bad hole positions {s}")
    for name, val in (("a", a), ("b", b), ("c", c), ("d", d)):
        if not as_poly(val):
            raise ValueError(f"weight {name} must be nonzero")
    edges = {}
    for (i, j), (w_cell, s_cell, e_cell, n_cell) in ar_face_cells(m, n).items():
        qshift = i + j - 2
        edges[_edge(w_cell, n_cell)] = as_poly(a)                      # northwest
        edges[_edge(n_cell, e_cell)] = as_poly(b)                      # northeast
        edges[_edge(s_cell, e_cell)] = as_poly(d).shift(dq=qshift)     # southeast
        edges[_edge(w_cell, s_cell)] = as_poly(c).shift(dq=qshift)     # southwest
    cells = sorted({cell for quad in ar_face_cells(m, n).values() for cell in quad})
    graph = WeightedGraph(cells, edges, marked=tuple(sq(h, h - 1) for h in range(1, n + 1)))
    holes = [sq(h, h - 1) for h in range(1, n + 1) if h not in set(s)]
    graph = graph.without_vertices(holes)
    return WeightedGraph(graph.vertices, graph.edge_dict(), marked=tuple(sq(h, h - 1) for h in s))


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def checkerboard_coloring(region: Region) -> dict:
    """Cell -> "black"/"white" so neighbors differ and the NW side is white.

    On both Aztec conventions used here the northwest-side cells all have odd
    x + y, so white is the odd parity class.  The parity check on the NW side
    is asserted rather than assumed.
    """
    if region.lattice != "square":
        raise ValueError("checkerboard coloring applies to square-lattice regions")
    for c in region.nw_side:
        if (c.x + c.y) % 2 == 0:
            raise InconsistentBoundary(f"northwest cell {c} has even parity")
    return {c: ("white" if (c.x + c.y) % 2 else "black") for c in region.sorted_cells}


def is_white(cell: Cell) -> bool:
    """White cells are the odd-parity class (northwest side is white)."""
    return (cell.x + cell.y) % 2 == 1
