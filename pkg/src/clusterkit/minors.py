"""Symbolic minors of a generic unitriangular matrix, used as an oracle.

A generic upper unitriangular m x m matrix has 1 on the diagonal, 0 below,
and an independent polynomial generator a_ij for every pair i < j.  Minors
of such a matrix are exact polynomials in the a_ij, and seeds built from
minor labels can be checked against them: every exchange relation along a
mutation walk must hold as a polynomial identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadIndex, IdentityFailed, NotDivisible
from .laurent import Context, LaurentPoly
from .seed import Seed


def minor_context(m: int) -> Context:
    """Context with one generator a_ij per pair 1 <= i < j <= m."""
    return Context(f"a{i}{j}" for i in range(1, m + 1) for j in range(i + 1, m + 1))


def _entry_table(m: int, ctx: Context) -> list[list[LaurentPoly]]:
    table = [[ctx.zero() for _ in range(m + 1)] for _ in range(m + 1)]
    gid = 0
    for i in range(1, m + 1):
        table[i][i] = ctx.one()
        for j in range(i + 1, m + 1):
            table[i][j] = ctx.gen(gid)
            gid += 1
    return table


def _det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by expansion along the first row, skipping zero entries."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    ctx = rows[0][0].ctx
    acc = ctx.zero()
    for c, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [[row[j] for j in range(size) if j != c] for row in rows[1:]]
        term = entry * _det(minor)
        acc = acc + (term if c % 2 == 0 else -term)
    return acc


def minor_symbolic(m: int, rows, cols, ctx: Context | None = None) -> LaurentPoly:
    """Exact determinant of the minor with the given row and column sets."""
    rows = tuple(sorted(rows))
    cols = tuple(sorted(cols))
    if len(rows) != len(cols) or not rows:
        raise BadIndex("row and column sets must be nonempty and equal-sized")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise BadIndex("row and column sets must not repeat indices")
    if rows[0] < 1 or rows[-1] > m or cols[0] < 1 or cols[-1] > m:
        raise BadIndex(f"indices must lie in 1..{m}")
    if ctx is None:
        ctx = minor_context(m)
    table = _entry_table(m, ctx)
    sub = [[table[i][j] for j in cols] for i in rows]
    return _det(sub)


def random_unitriangular_eval(m: int, rng_seed: int) -> dict[int, int]:
    """Deterministic random integer assignment a_ij -> [-5, 5]."""
    rng = random.Random(rng_seed)
    n_gens = m * (m - 1) // 2
    return {i: rng.randint(-5, 5) for i in range(n_gens)}


@dataclass(frozen=True)
class MinorCheckReport:
    checked: int
    clusters_seen: int
    minor_matches: tuple[tuple[tuple[int, ...], int, str], ...]
    all_polynomial: bool

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "failed": 0,
            "witnesses": [],
            "clusters_seen": self.clusters_seen,
            "minor_matches": [
                {"path": [k + 1 for k in path], "vertex": v + 1, "minor": name}
                for path, v, name in self.minor_matches],
            "all_polynomial": self.all_polynomial,
        }


def _minor_table(m: int, ctx: Context, max_size: int) -> dict[LaurentPoly, str]:
    """Nonzero minors of the generic matrix up to the given size, mapped to
    a display name.  Quadratically many determinants, so callers cap the
    size for large m."""
    from itertools import combinations

    table: dict[LaurentPoly, str] = {}
    for size in range(1, max_size + 1):
        for rows in combinations(range(1, m + 1), size):
            for cols in combinations(range(1, m + 1), size):
                p = minor_symbolic(m, rows, cols, ctx)
                if not p.is_zero() and p not in table:
                    name = "D_{%s,%s}" % ("".join(map(str, rows)),
                                          "".join(map(str, cols)))
                    table[p] = name
    return table


def verify_exchange_identities(seed: Seed, depth: int = 16,
                               max_clusters: int = 10_000,
                               match_size: int | None = None) -> MinorCheckReport:
    """Substitute symbolic minors for the initial variables and check every
    exchange relation in a breadth-first walk of the class.

    For each mutation the product of old and new variable must equal the
    exchange sum exactly; a failure raises IdentityFailed with the mutation
    path.  Mutated variables that equal a single minor of size up to
    match_size (default: all of them for m <= 5, size 2 beyond) are
    reported.
    """
    if seed.minor_labels is None:
        raise ValueError("seed carries no minor labels")
    m = max(max(lbl.rows[-1], lbl.cols[-1]) for lbl in seed.minor_labels)
    ctx = minor_context(m)
    start_vars = tuple(minor_symbolic(m, lbl.rows, lbl.cols, ctx)
                       for lbl in seed.minor_labels)
    if match_size is None:
        match_size = m if m <= 5 else 2
    table = _minor_table(m, ctx, match_size)
    start = Seed(start_vars, seed.quiver)
    mutable = seed.quiver.mutable()

    checked = 0
    matches: list[tuple[tuple[int, ...], int, str]] = []
    all_polynomial = all(v.is_polynomial() for v in start_vars)
    visited = {start.cluster()}
    frontier: list[tuple[Seed, tuple[int, ...]]] = [(start, ())]
    for _ in range(depth):
        next_frontier: list[tuple[Seed, tuple[int, ...]]] = []
        for s, path in frontier:
            for k in mutable:
                b = s.quiver.b
                inc = ctx.one()
                out = ctx.one()
                for i in range(s.n):
                    if b[i][k] > 0:
                        inc = inc * s.vars[i] ** b[i][k]
                    elif b[i][k] < 0:
                        out = out * s.vars[i] ** (-b[i][k])
                exchange = inc + out
                try:
                    new_var = exchange.exact_div(s.vars[k])
                except NotDivisible as exc:
                    raise IdentityFailed(
                        f"exchange at vertex {k + 1} after path "
                        f"{[p + 1 for p in path]}: {exc}", path + (k,)) from exc
                if s.vars[k] * new_var - exchange:
                    raise IdentityFailed(
                        f"identity failed at vertex {k + 1} after path "
                        f"{[p + 1 for p in path]}", path + (k,))
                checked += 1
                if not new_var.is_polynomial():
                    all_polynomial = False
                name = table.get(new_var)
                if name is not None:
                    matches.append((path, k, name))
                new_seed = Seed(s.vars[:k] + (new_var,) + s.vars[k + 1:],
                                s.quiver.mutate(k))
                key = new_seed.cluster()
                if key not in visited and len(visited) < max_clusters:
                    visited.add(key)
                    next_frontier.append((new_seed, path + (k,)))
        if not next_frontier:
            break
        frontier = next_frontier
    return MinorCheckReport(checked, len(visited), tuple(matches), all_polynomial)
