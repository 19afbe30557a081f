"""Exchange-graph enumeration and classification.

Enumeration walks the mutation class breadth-first, deduplicating by the
cluster: the unordered set of variable canonical forms, frozen variables
included.  That is the right unit because a cluster determines its seed in
the geometric setting, and matches how finite classes are usually counted.

Classification works on the principal part (frozen vertices dropped) and
uses the standard two-sided criterion for skew-symmetric exchange
matrices: a class is of finite type iff no quiver in it carries a multiple
arrow, in which case some member is an orientation of an ADE diagram whose
type names the verdict.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .laurent import LaurentPoly
from .seed import Quiver, Seed, initial_seed

DEFAULT_MAX_CLUSTERS = 100_000
DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class MutationClassReport:
    clusters: tuple[frozenset[LaurentPoly], ...]
    edges: frozenset[tuple[int, int]]
    variables: frozenset[LaurentPoly]
    frozen_variables: frozenset[LaurentPoly]
    truncated: bool
    seeds_visited: int
    wall_time: float

    @property
    def n_clusters(self) -> int:
        return len(self.clusters)

    @property
    def n_variables(self) -> int:
        return len(self.variables)

    @property
    def n_frozen(self) -> int:
        return len(self.frozen_variables)

    def neighbor_counts(self) -> list[int]:
        counts = [0] * len(self.clusters)
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return counts

    def sorted_variables(self) -> list[LaurentPoly]:
        return sorted(self.variables, key=lambda p: p.terms)

    def to_json(self, include_variables: bool = False) -> dict:
        # wall_time stays off the wire: identical invocations must emit
        # byte-identical JSON.
        data = {
            "clusters": self.n_clusters,
            "variables": self.n_variables,
            "frozen": self.n_frozen,
            "edges": len(self.edges),
            "truncated": self.truncated,
            "seeds_visited": self.seeds_visited,
        }
        if include_variables:
            data["variable_list"] = [str(v) for v in self.sorted_variables()]
        return data

    def exchange_dot(self) -> str:
        lines = ["graph exchange {"]
        for i in range(self.n_clusters):
            lines.append(f"  c{i};")
        for i, j in sorted(self.edges):
            lines.append(f"  c{i} -- c{j};")
        lines.append("}")
        return "\n".join(lines)


def enumerate_exchange_graph(seed: Seed,
                             max_clusters: int = DEFAULT_MAX_CLUSTERS,
                             max_depth: int = DEFAULT_MAX_DEPTH,
                             workers: int = 1) -> MutationClassReport:
    """Breadth-first enumeration of the mutation class of a seed.

    Levels are processed synchronously; within a level the expansion of
    the frontier seeds may be farmed out to worker threads, but results
    are merged in frontier order, so the report is identical for any
    worker count.  Hitting a limit sets truncated instead of failing.
    """
    t0 = time.perf_counter()
    mutable = seed.quiver.mutable()
    index: dict[frozenset, int] = {seed.cluster(): 0}
    reps: list[Seed] = [seed]
    edges: set[tuple[int, int]] = set()
    truncated = False
    expansions = 0

    def expand(item: tuple[int, Seed]) -> list[tuple[int, int, Seed]]:
        i, s = item
        return [(i, k, s.mutate(k)) for k in mutable]

    frontier: list[tuple[int, Seed]] = [(0, seed)]
    depth = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            if depth >= max_depth:
                truncated = True
                break
            if pool is not None:
                batches = list(pool.map(expand, frontier))
            else:
                batches = [expand(item) for item in frontier]
            expansions += len(frontier)
            next_frontier: list[tuple[int, Seed]] = []
            for batch in batches:
                for parent, _k, new_seed in batch:
                    key = new_seed.cluster()
                    j = index.get(key)
                    if j is None:
                        if len(index) >= max_clusters:
                            truncated = True
                            continue
                        j = len(index)
                        index[key] = j
                        reps.append(new_seed)
                        next_frontier.append((j, new_seed))
                    if j != parent:
                        edges.add((min(parent, j), max(parent, j)))
            frontier = next_frontier
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()

    clusters = tuple(sorted(index, key=index.get))
    variables = frozenset(v for c in clusters for v in c)
    frozen_vars = frozenset(seed.vars[i] for i in seed.quiver.frozen)
    return MutationClassReport(clusters, frozenset(edges), variables,
                               frozen_vars, truncated, expansions,
                               time.perf_counter() - t0)


# -- finite-type classification ---------------------------------------------

@dataclass(frozen=True)
class TypeVerdict:
    kind: str  # "finite" | "infinite" | "inconclusive"
    components: tuple[tuple[str, int], ...] = ()
    witness: Optional[Quiver] = None
    reason: str = ""
    quivers_seen: int = 0

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def describe(self) -> str:
        if self.kind == "finite":
            if not self.components:
                return "finite type: (empty)"
            return "finite type: " + " x ".join(f"{l}{r}" for l, r in self.components)
        if self.kind == "infinite":
            return "infinite type (multiple arrow reached)"
        return f"inconclusive: {self.reason}"


def recognize_ade(quiver: Quiver) -> Optional[tuple[str, int]]:
    """Name the ADE type when the underlying graph is a Dynkin tree."""
    n = quiver.n
    adj = [set() for _ in range(n)]
    n_edges = 0
    for i, j, m in quiver.arrows():
        if m != 1:
            return None
        adj[i].add(j)
        adj[j].add(i)
        n_edges += 1
    if n_edges != n - 1:
        return None  # not a tree (components are connected by construction)
    degs = sorted(len(a) for a in adj)
    if degs and degs[-1] <= 2:
        return ("A", n)
    if degs[-1] > 3 or degs.count(3) > 1:
        return None
    center = next(v for v in range(n) if len(adj[v]) == 3)
    branches = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        branches.append(length)
    branches.sort()
    a, b, c = branches
    if a == 1 and b == 1:
        return ("D", n)
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return ("E", n)
    return None


def classify_finite_type(quiver: Quiver,
                         max_quivers: int = DEFAULT_MAX_CLUSTERS,
                         canonical_bound: int = 12) -> TypeVerdict:
    """Decide finite/infinite cluster type of the principal part.

    Per connected component, the quiver mutation class is searched up to
    isomorphism.  Any multiple arrow proves infinite type immediately;
    exhausting the class proves finite type, and the verdict names the
    ADE orientation found in it.
    """
    principal = quiver.principal_part()
    components: list[tuple[str, int]] = []
    seen_total = 0
    for comp in principal.components():
        sub = principal.subquiver(comp)
        found: Optional[tuple[str, int]] = None
        visited = {sub.canonical_key(canonical_bound)}
        queue = [sub]
        while queue:
            q = queue.pop()
            seen_total += 1
            if q.max_multiplicity() >= 2:
                return TypeVerdict("infinite", witness=q, quivers_seen=seen_total)
            if found is None:
                found = recognize_ade(q)
            for k in range(q.n):
                nq = q.mutate(k)
                key = nq.canonical_key(canonical_bound)
                if key not in visited:
                    if len(visited) >= max_quivers:
                        return TypeVerdict("inconclusive",
                                           reason="quiver budget exhausted",
                                           quivers_seen=seen_total)
                    visited.add(key)
                    queue.append(nq)
        if found is None:
            return TypeVerdict("inconclusive",
                               reason="finite class without a Dynkin member",
                               quivers_seen=seen_total)
        components.append(found)
    components.sort()
    return TypeVerdict("finite", components=tuple(components),
                       quivers_seen=seen_total)


# -- coefficient polynomials ---------------------------------------------------

def principal_extension(seed: Seed) -> tuple[Seed, list[int], list[int]]:
    """Seed extended by one frozen coefficient vertex per mutable vertex.

    Returns (extended seed, original variable ids, coefficient ids).  The
    coefficient vertex for mutable vertex i carries a fresh generator and
    a single arrow into i.
    """
    quiver = seed.quiver
    n = quiver.n
    ctx = seed.ctx
    if tuple(seed.vars) != ctx.gens():
        raise ValueError("coefficient extension needs an unmutated initial seed")
    mutable = quiver.mutable()
    coeff_names = [f"y{t + 1}" for t in range(len(mutable))]
    if set(coeff_names) & set(ctx.names):
        raise ValueError("seed already carries coefficient variables y1..")
    ext_ctx = ctx.extend(coeff_names)
    m = len(mutable)
    size = n + m
    b = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            b[i][j] = quiver.b[i][j]
    for t, i in enumerate(mutable):
        b[n + t][i] = 1
        b[i][n + t] = -1
    labels = list(quiver.labels) if quiver.labels else list(ctx.names)
    ext_quiver = Quiver(tuple(tuple(row) for row in b),
                        frozenset(quiver.frozen) | frozenset(range(n, size)),
                        tuple(labels + coeff_names))
    ext_seed = initial_seed(ext_quiver, ext_ctx)
    return ext_seed, list(range(n)), list(range(n, size))


def f_polynomials(seed: Seed,
                  max_clusters: int = DEFAULT_MAX_CLUSTERS,
                  max_depth: int = DEFAULT_MAX_DEPTH) -> dict[LaurentPoly, LaurentPoly]:
    """Coefficient polynomials of every cluster variable in the class.

    Enumerates the coefficient-extended class and maps each ordinary
    cluster variable (coefficients specialized to 1) to its polynomial in
    the coefficient variables (cluster variables specialized to 1).
    """
    ext_seed, x_ids, y_ids = principal_extension(seed)
    report = enumerate_exchange_graph(ext_seed, max_clusters, max_depth)
    y_gens = {ext_seed.ctx.gen(i) for i in y_ids}
    out: dict[LaurentPoly, LaurentPoly] = {}
    for v in report.sorted_variables():
        if v in y_gens:
            continue
        ordinary = v.specialize_ones(y_ids)
        out[ordinary] = v.specialize_ones(x_ids)
    return out


# -- verification passes -------------------------------------------------------

def verify_positivity(report: MutationClassReport) -> list[LaurentPoly]:
    """Every enumerated variable with a nonpositive coefficient (empty = ok)."""
    return [v for v in report.sorted_variables() if not v.is_positive()]


@dataclass(frozen=True)
class WalkResult:
    ok: bool
    trace: tuple[int, ...]
    error: str = ""


def random_walk_laurent_check(seed: Seed, depth: int, rng_seed: int) -> WalkResult:
    """Random mutable-vertex walk; ok iff every exchange divided exactly."""
    from .errors import NotDivisible

    rng = random.Random(rng_seed)
    mutable = seed.quiver.mutable()
    s = seed
    trace: list[int] = []
    for _ in range(depth):
        k = rng.choice(mutable)
        trace.append(k)
        try:
            s = s.mutate(k)
        except NotDivisible as exc:
            return WalkResult(False, tuple(trace), str(exc))
    return WalkResult(True, tuple(trace))
