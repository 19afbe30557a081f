"""Euler characteristics of composition-flag varieties by point counting.

A graded module is a representation of a doubled Dynkin diagram: a
dimension vector plus one integer matrix per directed edge pair, subject
to the preprojective relation at every vertex.  Flags of submodules with
one-dimensional subquotients of prescribed vertex types are counted over
small finite fields; the counts are interpolated as a polynomial in q and
evaluated at q = 1, which is the Euler characteristic for varieties whose
point counts are polynomial.

Fields GF(q) are supported for every prime power q <= 9; elements are
integers 0..q-1 encoding polynomial coefficient digits in base p, with
precomputed operation tables.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from .builders import dynkin_edges, parse_dynkin
from .errors import NotPolynomial, ShapeMismatch, TooLarge

MAX_TOTAL_DIM = 6
SAMPLE_PRIMES = (2, 3, 5, 7)
VERIFY_SAMPLE = 9

# Prime, degree, and reduction rule x^k = -(digits) for the non-prime sizes.
_REDUCERS = {4: (2, 2, (1, 1)), 8: (2, 3, (1, 1, 0)), 9: (3, 2, (1, 0))}


class GF:
    """Finite field with q <= 9 elements, all operations table-driven."""

    def __init__(self, q: int):
        if q in (2, 3, 5, 7):
            p, k = q, 1
        elif q in _REDUCERS:
            p, k = _REDUCERS[q][0], _REDUCERS[q][1]
        else:
            raise ValueError(f"unsupported field size {q}")
        self.q, self.p, self.k = q, p, k
        self.add_t = [[self._poly_add(a, b) for b in range(q)] for a in range(q)]
        self.mul_t = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]
        self.neg_t = [self._poly_neg(a) for a in range(q)]
        self.inv_t = [0] * q
        for a in range(1, q):
            self.inv_t[a] = next(b for b in range(1, q) if self.mul_t[a][b] == 1)

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _undigits(self, ds: Sequence[int]) -> int:
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def _poly_add(self, a: int, b: int) -> int:
        return self._undigits([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _poly_neg(self, a: int) -> int:
        return self._undigits([-x for x in self._digits(a)])

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        if self.k > 1:
            red = _REDUCERS[self.q][2]
            for i in range(len(prod) - 1, self.k - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j, r in enumerate(red):
                        prod[i - self.k + j] = (prod[i - self.k + j] - c * r) % self.p
        return self._undigits(prod[:self.k])

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_t[a]

    def embed(self, z: int) -> int:
        """Reduce an integer into the prime subfield."""
        return z % self.p


# -- linear algebra over GF ---------------------------------------------------

def rref(rows: list[list[int]], field: GF) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    n_cols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def reduce_mod(vec: Sequence[int], basis: tuple[tuple[int, ...], ...],
               pivots: tuple[int, ...], field: GF) -> tuple[int, ...]:
    """Canonical coset representative of vec modulo the row space."""
    v = list(vec)
    for row, p in zip(basis, pivots):
        c = v[p]
        if c:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def mat_vec(mat: Sequence[Sequence[int]], vec: Sequence[int], field: GF) -> list[int]:
    out = []
    for row in mat:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def nullspace(rows: list[list[int]], n_cols: int, field: GF) -> list[tuple[int, ...]]:
    """Basis of the right nullspace of the stacked constraint rows."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(n_cols)) for j in range(n_cols)]
    basis, pivots = rref(rows, field)
    free = [c for c in range(n_cols) if c not in pivots]
    out = []
    for f in free:
        v = [0] * n_cols
        v[f] = 1
        for row, p in zip(basis, pivots):
            v[p] = field.neg_t[row[f]]
        out.append(tuple(v))
    return out


# -- graded modules ------------------------------------------------------------

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows, n_rows: int, n_cols: int, name: str) -> Matrix:
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if len(mat) != n_rows or any(len(r) != n_cols for r in mat):
        raise ShapeMismatch(f"map {name} must be {n_rows}x{n_cols}")
    return mat


@dataclass(frozen=True)
class GradedModule:
    """Dimension vector plus one integer matrix per doubled-diagram arrow.

    maps is keyed by 1-based (src, dst) vertex pairs; both directions of
    every diagram edge must be present, with shape dims[dst] x dims[src].
    A missing dimension is 0 and the matrix is the empty one.
    """

    dynkin: tuple[str, int]
    dims: tuple[int, ...]
    maps: Mapping[tuple[int, int], Matrix]

    @staticmethod
    def create(dynkin, dims: Sequence[int], maps: Mapping) -> "GradedModule":
        letter, rank = parse_dynkin(dynkin)
        dims = tuple(int(d) for d in dims)
        if len(dims) != rank or any(d < 0 for d in dims):
            raise ShapeMismatch(f"dimension vector must have {rank} entries >= 0")
        edges = dynkin_edges(letter, rank)
        full = {}
        for i, j in edges:
            for src, dst in ((i, j), (j, i)):
                raw = maps.get((src, dst), [[0] * dims[src - 1] for _ in range(dims[dst - 1])])
                full[(src, dst)] = _as_matrix(raw, dims[dst - 1], dims[src - 1],
                                              f"{src}->{dst}")
        return GradedModule((letter, rank), dims, full)

    @property
    def rank(self) -> int:
        return self.dynkin[1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def arrows_from(self, v: int) -> list[tuple[int, Matrix]]:
        """All (target, matrix) pairs for stored maps with source v."""
        return [(dst, m) for (src, dst), m in sorted(self.maps.items()) if src == v]


def validate_preprojective(module: GradedModule) -> dict[int, Matrix]:
    """Check the defining relation at every vertex over the integers.

    For each diagram edge the arrow oriented low-to-high index is the
    unstarred one; at a vertex v the sum of out-and-back composites
    through each neighbor, signed + when the unstarred arrow points into
    v and - when it points out, must vanish.  Returns the nonzero
    relation matrices per vertex; an empty dict means the module is valid.
    """
    letter, rank = module.dynkin
    edges = dynkin_edges(letter, rank)
    violations: dict[int, Matrix] = {}
    for v in range(1, rank + 1):
        d = module.dims[v - 1]
        acc = [[0] * d for _ in range(d)]
        for i, j in edges:
            if v not in (i, j):
                continue
            w = j if v == i else i
            sign = 1 if w < v else -1
            back = module.maps[(w, v)]
            out = module.maps[(v, w)]
            for r in range(d):
                for c in range(d):
                    acc[r][c] += sign * sum(back[r][t] * out[t][c]
                                            for t in range(module.dims[w - 1]))
        if any(x for row in acc for x in row):
            violations[v] = tuple(tuple(row) for row in acc)
    return violations


# -- flag counting -------------------------------------------------------------

def _check_flag_inputs(module: GradedModule, ftype: Sequence[int]) -> bool:
    """Shared preconditions; returns False when the type multiset is off."""
    if module.total_dim > MAX_TOTAL_DIM:
        raise TooLarge(f"total dimension capped at {MAX_TOTAL_DIM}")
    bad = validate_preprojective(module)
    if bad:
        raise ValueError(f"module violates the preprojective relation at "
                         f"vertices {sorted(bad)}")
    counts = [0] * module.rank
    for i in ftype:
        if not 1 <= i <= module.rank:
            raise ValueError(f"type entry {i} out of range")
        counts[i - 1] += 1
    if tuple(counts) != module.dims:
        warnings.warn("flag type multiset does not match the dimension vector; "
                      "count is 0", stacklevel=3)
        return False
    return True


def count_flags(module: GradedModule, ftype: Sequence[int], q: int) -> int:
    """Number of graded stable flags with the given composition type over GF(q).

    Works level by level: a partial flag is a tuple of per-vertex
    subspaces in reduced row-echelon form, and adding a subquotient at
    vertex i means extending that component by one line whose image under
    every arrow out of i already lies inside the current state.  States
    reached by different chains are merged with multiplicity.
    """
    if not _check_flag_inputs(module, ftype):
        return 0
    field = GF(q)
    maps = {key: tuple(tuple(field.embed(x) for x in row) for row in m)
            for key, m in module.maps.items()}
    dims = module.dims
    empty_state = tuple(((), ()) for _ in dims)  # (rref rows, pivots) per vertex
    states: dict[tuple, int] = {empty_state: 1}
    for step in ftype:
        v = step - 1
        d = dims[v]
        new_states: dict[tuple, int] = {}
        for state, mult in states.items():
            basis_v, pivots_v = state[v]
            # Solve for vectors at v whose images land inside the state.
            constraints: list[list[int]] = []
            for (src, dst), mat in sorted(maps.items()):
                if src != step:
                    continue
                tb, tp = state[dst - 1]
                cols = [[mat[r][c] for r in range(dims[dst - 1])] for c in range(d)]
                reduced = [reduce_mod(col_img, tb, tp, field) for col_img in cols]
                for r in range(dims[dst - 1]):
                    row = [reduced[c][r] for c in range(d)]
                    if any(row):
                        constraints.append(row)
            space = nullspace(constraints, d, field)
            # Coset section of the solution space modulo the current subspace.
            reduced_basis = [reduce_mod(w, basis_v, pivots_v, field) for w in space]
            section, _ = rref([list(r) for r in reduced_basis if any(r)], field) \
                if any(any(r) for r in reduced_basis) else ((), ())
            r_free = len(section)
            for lead in range(r_free):
                tail = r_free - lead - 1
                for combo in range(field.q ** tail):
                    vec = list(section[lead])
                    rest = combo
                    for t in range(tail):
                        c = rest % field.q
                        rest //= field.q
                        if c:
                            vec = [field.add(x, field.mul(c, y))
                                   for x, y in zip(vec, section[lead + 1 + t])]
                    rows = [list(r) for r in basis_v] + [vec]
                    nb, np_ = rref(rows, field)
                    new_state = state[:v] + ((nb, np_),) + state[v + 1:]
                    new_states[new_state] = new_states.get(new_state, 0) + mult
        states = new_states
        if not states:
            return 0
    return sum(states.values())


@dataclass(frozen=True)
class FlagCount:
    """Point counts over the sampled fields plus the fitted polynomial."""

    counts: tuple[tuple[int, int], ...]  # (q, count) pairs, verification included
    coefficients: tuple[int, ...]        # ascending powers of q
    euler: int

    def poly_str(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients):
            if c:
                parts.append(f"{c}" if i == 0 else (f"{c}*q^{i}" if i > 1 else f"{c}*q"))
        return " + ".join(parts) if parts else "0"


def _interpolate(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (ascending) of the unique interpolating polynomial."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # Lagrange basis polynomial for node i, expanded into coefficients.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis[:]
            low = [Fraction(-xj) * c for c in basis[1:]] + [Fraction(0)]
            basis = [a + b for a, b in zip(basis, low + [Fraction(0)] * (len(basis) - len(low)))]
            denom *= Fraction(xi - xj)
        for k in range(len(basis)):
            coeffs[k] += Fraction(yi) * basis[k] / denom
    return coeffs


def flag_count_details(module: GradedModule, ftype: Sequence[int]) -> FlagCount:
    """Counts at q in {2,3,5,7}, polynomial fit, held-out check at q = 9.

    Counting is a pure function of (module, type, q), so the samples run
    concurrently.
    """
    with ThreadPoolExecutor(max_workers=len(SAMPLE_PRIMES)) as pool:
        counted = list(pool.map(lambda q: count_flags(module, ftype, q),
                                SAMPLE_PRIMES))
    samples = list(zip(SAMPLE_PRIMES, counted))
    coeffs = _interpolate([(q, c) for q, c in samples])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise NotPolynomial("interpolated point counts are not an integer polynomial")
    int_coeffs = tuple(int(c) for c in coeffs)

    def evaluate(x: int) -> int:
        return sum(c * x ** i for i, c in enumerate(int_coeffs))

    check = count_flags(module, ftype, VERIFY_SAMPLE)
    if evaluate(VERIFY_SAMPLE) != check:
        raise NotPolynomial(
            f"fit predicts {evaluate(VERIFY_SAMPLE)} points over GF({VERIFY_SAMPLE}), "
            f"counted {check}")
    counts = tuple(samples) + ((VERIFY_SAMPLE, check),)
    return FlagCount(counts, int_coeffs, evaluate(1))


def euler_characteristic(module: GradedModule, ftype: Sequence[int]) -> int:
    """Euler characteristic of the composition-flag variety."""
    return flag_count_details(module, ftype).euler


def enumerate_types(module: GradedModule) -> list[tuple[int, ...]]:
    """All composition types with at least one flag over GF(2)."""
    if module.total_dim > MAX_TOTAL_DIM:
        raise TooLarge(f"total dimension capped at {MAX_TOTAL_DIM}")
    multiset = tuple(v for v in range(1, module.rank + 1)
                     for _ in range(module.dims[v - 1]))
    out = []
    for ftype in sorted(set(permutations(multiset))):
        if count_flags(module, ftype, 2) > 0:
            out.append(ftype)
    return out


# -- JSON ----------------------------------------------------------------------

def module_from_json(data: dict) -> GradedModule:
    """Parse {"dynkin": "A3", "dims": [...], "maps": {"1->2": [[...]], ...}}."""
    maps = {}
    for key, rows in data.get("maps", {}).items():
        src, _, dst = key.partition("->")
        maps[(int(src), int(dst))] = rows
    return GradedModule.create(data["dynkin"], data["dims"], maps)


def module_to_json(module: GradedModule) -> dict:
    letter, rank = module.dynkin
    return {
        "dynkin": f"{letter}{rank}",
        "dims": list(module.dims),
        "maps": {f"{s}->{d}": [list(r) for r in m]
                 for (s, d), m in sorted(module.maps.items())},
    }
