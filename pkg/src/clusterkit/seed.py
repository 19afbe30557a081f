"""Quivers, seeds, and mutation.

A quiver is a finite directed multigraph without loops or 2-cycles,
encoded as a skew-symmetric integer matrix b where b[i][j] > 0 means
b[i][j] arrows from i to j.  The matrix encoding makes loops and 2-cycles
unrepresentable by construction; validate() reports violations of the
encoding itself (skew-symmetry, zero diagonal).

A seed pairs one Laurent polynomial per vertex with a quiver.  Mutation at
a mutable vertex k replaces the variable at k by the exchange quotient

    (prod over arrows into k + prod over arrows out of k) / old variable

with arrow multiplicities as exponents and empty products equal to 1, and
transforms the quiver by the standard matrix rule.  Both types are
immutable values: mutation returns new objects, so histories can be kept
and workers can share seeds freely.

Vertex ids are 0-based internally.  The JSON form (and every other
user-facing surface) is 1-based, matching the usual labelling of quiver
diagrams.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Optional, Sequence

from .errors import FrozenVertex, TooLarge
from .laurent import Context, LaurentPoly, default_context


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Quiver:
    b: tuple[tuple[int, ...], ...]
    frozen: frozenset[int] = frozenset()
    labels: Optional[tuple[str, ...]] = None
    layout: Optional[tuple[tuple[float, float], ...]] = None

    @property
    def n(self) -> int:
        return len(self.b)

    def mutable(self) -> list[int]:
        return [i for i in range(self.n) if i not in self.frozen]

    def arrows(self) -> Iterator[tuple[int, int, int]]:
        """Yield (src, dst, multiplicity) for every positive entry."""
        for i, row in enumerate(self.b):
            for j, v in enumerate(row):
                if v > 0:
                    yield i, j, v

    def validate(self) -> list[str]:
        """Report violations of the matrix encoding; empty list means ok."""
        problems = []
        n = self.n
        for row in self.b:
            if len(row) != n:
                problems.append("matrix is not square")
                return problems
        for i in range(n):
            for j in range(n):
                if not isinstance(self.b[i][j], int):
                    problems.append(f"non-integer entry at ({i + 1},{j + 1})")
        if problems:
            return problems
        for i in range(n):
            if self.b[i][i] != 0:
                problems.append(f"loop at vertex {i + 1}")
            for j in range(i + 1, n):
                if self.b[i][j] != -self.b[j][i]:
                    problems.append(f"skew-symmetry broken at ({i + 1},{j + 1})")
        for i in self.frozen:
            if not 0 <= i < n:
                problems.append(f"frozen vertex {i + 1} out of range")
        if self.labels is not None and len(self.labels) != n:
            problems.append("label count differs from vertex count")
        return problems

    def mutate(self, k: int) -> "Quiver":
        """Return the quiver mutated at vertex k (must be mutable)."""
        if k in self.frozen:
            raise FrozenVertex(f"vertex {k + 1} is frozen")
        b = self.b
        n = self.n
        new = [list(row) for row in b]
        for i in range(n):
            for j in range(n):
                if i == k or j == k:
                    new[i][j] = -b[i][j]
                else:
                    t = b[i][k] * b[k][j]
                    if t > 0:
                        new[i][j] = b[i][j] + _sign(b[i][k]) * t
        return Quiver(tuple(tuple(row) for row in new), self.frozen,
                      self.labels, self.layout)

    # -- structure helpers -------------------------------------------------

    def max_multiplicity(self) -> int:
        return max((abs(v) for row in self.b for v in row), default=0)

    def subquiver(self, vertices: Sequence[int]) -> "Quiver":
        """Induced quiver on the given vertices (in the given order)."""
        idx = list(vertices)
        b = tuple(tuple(self.b[i][j] for j in idx) for i in idx)
        frozen = frozenset(p for p, i in enumerate(idx) if i in self.frozen)
        labels = tuple(self.labels[i] for i in idx) if self.labels else None
        layout = tuple(self.layout[i] for i in idx) if self.layout else None
        return Quiver(b, frozen, labels, layout)

    def principal_part(self) -> "Quiver":
        """Quiver with frozen vertices and their arrows removed."""
        return self.subquiver(self.mutable())

    def components(self) -> list[list[int]]:
        """Weakly connected components, each a sorted vertex list."""
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack = [start]
            comp = []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in range(self.n):
                    if w not in seen and (self.b[v][w] or self.b[w][v]):
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    # -- canonical form ----------------------------------------------------

    def canonical_key(self, bound: int = 12, perm_cap: int = 2_000_000) -> bytes:
        """Canonical encoding up to vertex relabelings that preserve the
        frozen/mutable partition.

        Vertices are first split into cells by iterated neighborhood
        refinement (an isomorphism invariant); the encoding is then
        minimized over all orderings that respect the cells.  Exhaustive
        within cells, so keys are exact: equal keys iff isomorphic.
        """
        n = self.n
        if n > bound:
            raise TooLarge(f"canonical form limited to {bound} vertices, got {n}")
        if n == 0:
            return b"0|"
        colors: list = [(v in self.frozen,) for v in range(n)]
        while True:
            sigs = []
            for v in range(n):
                nbrs = tuple(sorted(
                    (self.b[v][w], colors[w]) for w in range(n)
                    if w != v and (self.b[v][w] or self.b[w][v])))
                sigs.append((colors[v], nbrs))
            ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new_colors = [(ranking[s],) for s in sigs]
            if len(set(new_colors)) == len(set(colors)):
                colors = new_colors
                break
            colors = new_colors
        cells: dict = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        ordered_cells = [cells[c] for c in sorted(cells)]
        total = 1
        for cell in ordered_cells:
            total *= factorial(len(cell))
            if total > perm_cap:
                raise TooLarge("too many candidate orderings for canonical form")
        best = None
        for combo in itertools.product(*(itertools.permutations(c) for c in ordered_cells)):
            order = [v for cell in combo for v in cell]
            enc = tuple(self.b[i][j] for i in order for j in order)
            if best is None or enc < best:
                best = enc
        flags = tuple(1 if v in self.frozen else 0
                      for cell in ordered_cells for v in cell)
        return (",".join(map(str, flags)) + "|" + ",".join(map(str, best))).encode()

    def to_dot(self, name: str = "quiver") -> str:
        """Graphviz DOT form; frozen vertices are rendered as boxes."""
        lines = [f"digraph {name} {{"]
        for v in range(self.n):
            label = self.labels[v] if self.labels else f"x{v + 1}"
            shape = "box" if v in self.frozen else "ellipse"
            lines.append(f'  v{v + 1} [label="{label}" shape={shape}];')
        for i, j, m in self.arrows():
            attr = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  v{i + 1} -> v{j + 1}{attr};")
        lines.append("}")
        return "\n".join(lines)


def quiver_from_arrows(n: int, arrows: Sequence[tuple[int, int, int]],
                       frozen: Sequence[int] = (),
                       labels: Optional[Sequence[str]] = None,
                       layout: Optional[Sequence[tuple[float, float]]] = None) -> Quiver:
    """Build a quiver from 0-based (src, dst, multiplicity) triples."""
    b = [[0] * n for _ in range(n)]
    for i, j, m in arrows:
        if i == j:
            raise ValueError(f"loop at vertex {i + 1}")
        b[i][j] += m
        b[j][i] -= m
    return Quiver(tuple(tuple(row) for row in b), frozenset(frozen),
                  tuple(labels) if labels else None,
                  tuple(tuple(p) for p in layout) if layout else None)


@dataclass(frozen=True)
class Seed:
    """Cluster variables paired with a quiver; the unit of mutation."""

    vars: tuple[LaurentPoly, ...]
    quiver: Quiver
    minor_labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.vars) != self.quiver.n:
            raise ValueError("variable count differs from vertex count")

    @property
    def ctx(self) -> Context:
        return self.vars[0].ctx

    @property
    def n(self) -> int:
        return len(self.vars)

    def cluster(self) -> frozenset[LaurentPoly]:
        return frozenset(self.vars)

    def mutate(self, k: int) -> "Seed":
        """Mutation at vertex k: new variable at k, quiver transformed."""
        if k in self.quiver.frozen:
            raise FrozenVertex(f"vertex {k + 1} is frozen")
        b = self.quiver.b
        ctx = self.ctx
        inc = ctx.one()
        out = ctx.one()
        for i in range(self.n):
            if b[i][k] > 0:
                inc = inc * self.vars[i] ** b[i][k]
            elif b[i][k] < 0:
                out = out * self.vars[i] ** (-b[i][k])
        new_var = (inc + out).exact_div(self.vars[k])
        new_vars = self.vars[:k] + (new_var,) + self.vars[k + 1:]
        return Seed(new_vars, self.quiver.mutate(k))

    def mutate_sequence(self, ks: Sequence[int]) -> "Seed":
        s = self
        for k in ks:
            s = s.mutate(k)
        return s


def initial_seed(quiver: Quiver, ctx: Optional[Context] = None,
                 minor_labels=None) -> Seed:
    """Seed whose variables are the ambient generators, one per vertex."""
    if ctx is None:
        ctx = Context(quiver.labels) if quiver.labels else default_context(quiver.n)
    if ctx.n != quiver.n:
        raise ValueError("context size differs from vertex count")
    return Seed(ctx.gens(), quiver, minor_labels)


# -- JSON serialization ----------------------------------------------------
#
# Seed JSON (all vertex ids 1-based):
#   {"n": int, "frozen": [int], "arrows": [[src, dst, mult]],
#    "labels": [str], "vars": [polynomial text], "layout": [[x, y]]?}
#
# The labels double as the names of the ambient generators, so the "vars"
# texts are written in terms of them and the format round-trips through
# mutation.

def seed_to_json(seed: Seed) -> dict:
    q = seed.quiver
    labels = list(q.labels) if q.labels else list(seed.ctx.names)
    data = {
        "n": q.n,
        "frozen": sorted(v + 1 for v in q.frozen),
        "arrows": sorted([i + 1, j + 1, m] for i, j, m in q.arrows()),
        "labels": labels,
        "vars": [str(v) for v in seed.vars],
    }
    if q.layout is not None:
        data["layout"] = [list(p) for p in q.layout]
    return data


def seed_from_json(data: dict) -> Seed:
    try:
        n = int(data["n"])
        frozen = [int(v) - 1 for v in data.get("frozen", [])]
        arrows = [(int(i) - 1, int(j) - 1, int(m)) for i, j, m in data.get("arrows", [])]
        labels = data.get("labels") or [f"x{i + 1}" for i in range(n)]
        var_texts = data["vars"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed seed JSON: {exc}") from exc
    if len(var_texts) != n or len(labels) != n:
        raise ValueError("malformed seed JSON: length mismatch")
    if any(not 0 <= v < n for v in frozen):
        raise ValueError("malformed seed JSON: frozen vertex out of range")
    if any(not (0 <= i < n and 0 <= j < n and m > 0) for i, j, m in arrows):
        raise ValueError("malformed seed JSON: bad arrow")
    layout = data.get("layout")
    if layout is not None:
        layout = [(float(x), float(y)) for x, y in layout]
        if len(layout) != n:
            raise ValueError("malformed seed JSON: layout length mismatch")
    quiver = quiver_from_arrows(n, arrows, frozen, labels, layout)
    problems = quiver.validate()
    if problems:
        raise ValueError("malformed seed JSON: " + "; ".join(problems))
    ctx = Context(labels)
    vars_ = tuple(ctx.parse(t) for t in var_texts)
    if any(v.is_zero() for v in vars_):
        raise ValueError("malformed seed JSON: zero cluster variable")
    return Seed(vars_, quiver)
