"""Constructors for the seed families the engine works with.

Four families: rank-2 seeds with a multiple arrow, the unitriangular-minor
seed for upper unitriangular matrices in SL(n+1), the level-ell grid
quivers over a bipartite Dynkin orientation, and plain Dynkin orientations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadBipartition, BadOrientation, UnsupportedRank
from .seed import Quiver, Seed, initial_seed, quiver_from_arrows

# -- Dynkin diagrams ---------------------------------------------------------

_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]


def parse_dynkin(spec) -> tuple[str, int]:
    """Accept 'A3' / ('A', 3) and validate the simply-laced type."""
    if isinstance(spec, str):
        letter, rank_s = spec[:1].upper(), spec[1:]
        if not rank_s.isdigit():
            raise ValueError(f"bad Dynkin type {spec!r}")
        letter, rank = letter, int(rank_s)
    else:
        letter, rank = str(spec[0]).upper(), int(spec[1])
    if letter == "A" and rank >= 1:
        return letter, rank
    if letter == "D" and rank >= 4:
        return letter, rank
    if letter == "E" and rank in (6, 7, 8):
        return letter, rank
    raise ValueError(f"unsupported Dynkin type {letter}{rank}")


def dynkin_edges(letter: str, rank: int) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, 1-based vertex pairs."""
    if letter == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if letter == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    edges = list(_E_EDGES)
    if rank >= 7:
        edges.append((6, 7))
    if rank == 8:
        edges.append((7, 8))
    return edges


def bipartition(rank: int, edges: list[tuple[int, int]],
                i0=None) -> tuple[frozenset[int], frozenset[int]]:
    """Proper 2-coloring of the diagram; vertex 1 sits in I0 by default."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, rank + 1)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    if i0 is not None:
        part0 = frozenset(i0)
        part1 = frozenset(range(1, rank + 1)) - part0
        for i, j in edges:
            if (i in part0) == (j in part0):
                raise BadBipartition(f"edge {i}-{j} does not cross the bipartition")
        return part0, part1
    color = {}
    for start in range(1, rank + 1):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
    return (frozenset(v for v, c in color.items() if c == 0),
            frozenset(v for v, c in color.items() if c == 1))


# -- rank 2 ------------------------------------------------------------------

def build_rank2(a: int) -> Seed:
    """Two mutable vertices with a arrows 1 -> 2 and variables (x1, x2)."""
    if a < 1:
        raise ValueError("arrow multiplicity must be >= 1")
    quiver = quiver_from_arrows(2, [(0, 1, a)])
    return initial_seed(quiver)


# -- unitriangular minors ----------------------------------------------------

@dataclass(frozen=True)
class MinorLabel:
    """Row/column sets of a matrix minor, e.g. D_{12,23}."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("row and column sets must be nonempty and equal-sized")
        if tuple(sorted(self.rows)) != self.rows or tuple(sorted(self.cols)) != self.cols:
            raise ValueError("row and column sets must be sorted")

    @property
    def display(self) -> str:
        return "D_{%s,%s}" % ("".join(map(str, self.rows)),
                              "".join(map(str, self.cols)))


def build_unitriangular_seed(n: int) -> Seed:
    """Initial minor seed for the upper unitriangular subgroup of SL(n+1).

    Vertices are pairs (k, j) with k, j >= 1 and k + j <= n + 1, carrying
    the minor with rows 1..k and columns j+1..j+k; a vertex is frozen
    exactly when k + j = n + 1.  Arrows go (k,j) -> (k,j+1),
    (k,j) -> (k+1,j-1) when j >= 2, and (k,j) -> (k-1,j) when k >= 2,
    whenever the target exists.
    """
    if not 2 <= n <= 6:
        raise UnsupportedRank(f"unitriangular seed supported for 2 <= n <= 6, got {n}")
    verts = sorted(((k, j) for k in range(1, n + 1) for j in range(1, n + 1)
                    if k + j <= n + 1), key=lambda kj: (kj[0] + kj[1], kj[0]))
    pos = {kj: i for i, kj in enumerate(verts)}
    arrows = []
    for (k, j) in verts:
        for tgt in ((k, j + 1), (k + 1, j - 1) if j >= 2 else None,
                    (k - 1, j) if k >= 2 else None):
            if tgt in pos:
                arrows.append((pos[(k, j)], pos[tgt], 1))
    frozen = [pos[kj] for kj in verts if kj[0] + kj[1] == n + 1]
    minors = tuple(MinorLabel(tuple(range(1, k + 1)), tuple(range(j + 1, j + k + 1)))
                   for (k, j) in verts)
    labels = [m.display for m in minors]
    layout = [(j + (n + 1 - k - j) / 2.0, float(k + j)) for (k, j) in verts]
    quiver = quiver_from_arrows(len(verts), arrows, frozen, labels, layout)
    return initial_seed(quiver, minor_labels=minors)


# -- level-ell grid quivers ----------------------------------------------------

def build_gamma_ell(dynkin, ell: int, i0=None) -> Seed:
    """Grid seed over a bipartite Dynkin orientation at level ell.

    Vertices (i, k) for each diagram vertex i and 1 <= k <= ell + 1, with
    the top level k = ell + 1 frozen.  Writing i -> j for the orientation
    with all of I0 as sources, the arrows are

      (a)  (i,k) -> (j,k)     for 1 <= k <= ell + 1,
      (b)  (j,k) -> (i,k+1)   for 1 <= k <= ell,
      (c)  (i,k+1) -> (i,k)   for 1 <= k <= ell and every vertex i.
    """
    letter, rank = parse_dynkin(dynkin)
    if ell < 0:
        raise ValueError("level must be >= 0")
    edges = dynkin_edges(letter, rank)
    part0, part1 = bipartition(rank, edges, i0)
    oriented = [(i, j) if i in part0 else (j, i) for i, j in edges]

    def vid(i: int, k: int) -> int:
        return (k - 1) * rank + (i - 1)

    arrows = []
    for i, j in oriented:
        for k in range(1, ell + 2):
            arrows.append((vid(i, k), vid(j, k), 1))
        for k in range(1, ell + 1):
            arrows.append((vid(j, k), vid(i, k + 1), 1))
    for i in range(1, rank + 1):
        for k in range(1, ell + 1):
            arrows.append((vid(i, k + 1), vid(i, k), 1))
    n_verts = rank * (ell + 1)
    frozen = [vid(i, ell + 1) for i in range(1, rank + 1)]
    labels = [None] * n_verts
    layout = [None] * n_verts
    for k in range(1, ell + 2):
        for i in range(1, rank + 1):
            labels[vid(i, k)] = f"x({i},{k})"
            layout[vid(i, k)] = (2.0 * k + (0.0 if i in part0 else 1.0), float(i))
    quiver = quiver_from_arrows(n_verts, arrows, frozen, labels, layout)
    return initial_seed(quiver)


# -- Dynkin orientations -------------------------------------------------------

def build_dynkin_quiver(dynkin, orientation="bipartite") -> Quiver:
    """Orientation of a Dynkin diagram as a quiver (no frozen vertices).

    orientation is either "bipartite" (all of I0 sources) or a list of
    directed (src, dst) pairs covering every diagram edge exactly once.
    """
    letter, rank = parse_dynkin(dynkin)
    edges = dynkin_edges(letter, rank)
    if orientation == "bipartite":
        part0, _ = bipartition(rank, edges)
        oriented = [(i, j) if i in part0 else (j, i) for i, j in edges]
    else:
        oriented = [(int(i), int(j)) for i, j in orientation]
        want = sorted(tuple(sorted(e)) for e in edges)
        got = sorted(tuple(sorted(e)) for e in oriented)
        if want != got:
            raise BadOrientation(
                f"orientation does not cover the {letter}{rank} diagram exactly")
    return quiver_from_arrows(rank, [(i - 1, j - 1, 1) for i, j in oriented])


# -- family dispatch (shared by CLI and service) -------------------------------

def build_family(name: str, **params) -> Seed:
    """Build a seed family by name; used by the CLI and the HTTP service."""
    if name == "rank2":
        return build_rank2(int(params.get("a", 1)))
    if name == "unitriangular":
        return build_unitriangular_seed(int(params["n"]))
    if name == "gamma":
        i0 = params.get("i0")
        return build_gamma_ell(params["type"], int(params["ell"]),
                               frozenset(int(v) for v in i0) if i0 else None)
    if name == "dynkin":
        quiver = build_dynkin_quiver(params["type"],
                                     params.get("orientation", "bipartite"))
        return initial_seed(quiver)
    raise ValueError(f"unknown family {name!r}")
