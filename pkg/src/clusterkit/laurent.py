"""Exact sparse multivariate Laurent polynomials over Python's big integers.

Representation:

  Monomial     = tuple of (variable id, exponent) pairs, sorted by variable
                 id, zero exponents omitted.  Exponents may be negative.
  LaurentPoly  = immutable sorted tuple of (Monomial, coefficient) terms,
                 zero coefficients omitted.  The zero polynomial has no
                 terms.

Variable ids are dense indices 0..n-1 into a Context, which fixes the
variable count and display names.  Two polynomials are equal exactly when
their term tuples are equal; the Context only matters for printing and
parsing.  Terms are kept sorted by the monomial's pair tuple, which makes
the representation canonical: any construction order of the same
polynomial yields the same term tuple, the same hash and the same printed
string.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotDivisible, ZeroAtPole

Monomial = tuple[tuple[int, int], ...]

_INT_RE = re.compile(r"^[+-]?[0-9]+$")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Product of two monomials: merge the exponent maps, dropping zeros."""
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        t = exps.get(v, 0) + e
        if t:
            exps[v] = t
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


class Context:
    """Ambient variable context: fixes the variable count and display names.

    Names may not contain whitespace, '+', '*' or '^' and may not look like
    integers, so that the text form of a polynomial parses unambiguously.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for name in names:
            if not name or any(c in name for c in "+*^") or name.split() != [name]:
                raise ValueError(f"invalid variable name {name!r}")
            if _INT_RE.match(name):
                raise ValueError(f"variable name {name!r} looks like an integer")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Context) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Context({list(self.names)!r})"

    def extend(self, extra: Iterable[str]) -> "Context":
        """New context with additional variables appended (ids preserved)."""
        return Context(self.names + tuple(extra))

    def poly(self, terms: Mapping[Monomial, int]) -> "LaurentPoly":
        """Build a polynomial from a monomial -> coefficient mapping."""
        cleaned = tuple(sorted((m, c) for m, c in terms.items() if c))
        return LaurentPoly(self, cleaned)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, ())

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, (((), int(c)),)) if c else LaurentPoly(self, ())

    def gen(self, i: int) -> "LaurentPoly":
        if not 0 <= i < self.n:
            raise ValueError(f"variable index {i} out of range for {self!r}")
        return LaurentPoly(self, ((((i, 1),), 1),))

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(i) for i in range(self.n))

    def parse(self, text: str) -> "LaurentPoly":
        """Parse the canonical text form (see LaurentPoly.__str__)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return self.zero()
        terms: dict[Monomial, int] = {}
        for chunk in s.split("+"):
            if not chunk:
                raise ValueError(f"empty term in {text!r}")
            coeff = 1
            exps: dict[int, int] = {}
            factors = chunk.split("*")
            # A leading bare "-" means coefficient -1 on the first factor.
            if factors[0].startswith("-") and not _INT_RE.match(factors[0].split("^")[0]):
                coeff = -1
                factors[0] = factors[0][1:]
            for pos, factor in enumerate(factors):
                base, _, exp_s = factor.partition("^")
                if _INT_RE.match(base):
                    if pos != 0 or exp_s:
                        raise ValueError(f"misplaced integer in term {chunk!r}")
                    coeff *= int(base)
                    continue
                if base not in self._index:
                    raise ValueError(f"unknown variable {base!r} in {text!r}")
                e = int(exp_s) if exp_s else 1
                exps[self._index[base]] = exps.get(self._index[base], 0) + e
            mono = tuple(sorted((v, e) for v, e in exps.items() if e))
            terms[mono] = terms.get(mono, 0) + coeff
        return self.poly(terms)


def default_context(n: int) -> Context:
    """Context with generators named x1..xn."""
    return Context(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable exact Laurent polynomial; see the module docstring."""

    ctx: Context = field(compare=False)
    terms: tuple[tuple[Monomial, int], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ctx != self.ctx:
                raise ValueError("operands belong to different contexts")
            return other
        if isinstance(other, int):
            return self.ctx.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms:
            t = acc.get(m, 0) + c
            if t:
                acc[m] = t
            else:
                acc.pop(m, None)
        return self.ctx.poly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ctx, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                t = acc.get(m, 0) + ca * cb
                if t:
                    acc[m] = t
                else:
                    del acc[m]
        return LaurentPoly(self.ctx, tuple(sorted(acc.items())))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def variables(self) -> set[int]:
        return {v for m, _ in self.terms for v, _ in m}

    def is_polynomial(self) -> bool:
        """True when no variable occurs with a negative exponent."""
        return all(e >= 0 for m, _ in self.terms for _, e in m)

    def is_positive(self) -> bool:
        """True iff the polynomial is nonzero and every coefficient is > 0."""
        return bool(self.terms) and all(c > 0 for _, c in self.terms)

    def constant_term(self) -> int:
        for m, c in self.terms:
            if not m:
                return c
        return 0

    # -- exact division ---------------------------------------------------

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / den in the Laurent ring.

        Raises NotDivisible when no Laurent-polynomial quotient exists.
        Both operands are shifted by monomials so every variable has
        minimum exponent zero; divisibility of the shifted ordinary
        polynomials is then equivalent to divisibility in the Laurent ring
        (monomials are units), and is decided by leading-term division
        under the lexicographic order.
        """
        den = self._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        n = self.ctx.n
        num_d, num_shift = _shifted_dense(self, n)
        den_d, den_shift = _shifted_dense(den, n)

        den_lead = max(den_d)
        den_lc = den_d[den_lead]
        rem = dict(num_d)
        quo: dict[tuple[int, ...], int] = {}
        while rem:
            lead = max(rem)
            lc = rem[lead]
            t = tuple(a - b for a, b in zip(lead, den_lead))
            if any(e < 0 for e in t) or lc % den_lc:
                raise NotDivisible("no exact Laurent quotient")
            c = lc // den_lc
            quo[t] = c
            for m, cm in den_d.items():
                key = tuple(a + b for a, b in zip(t, m))
                v = rem.get(key, 0) - c * cm
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        shift = tuple(a - b for a, b in zip(num_shift, den_shift))
        out: dict[Monomial, int] = {}
        for m, c in quo.items():
            mono = tuple((v, e) for v, e in enumerate(
                (a + b for a, b in zip(m, shift))) if e)
            out[mono] = c
        return self.ctx.poly(out)

    # -- evaluation and specialization ------------------------------------

    def evaluate(self, assignment: Mapping[int, int | Fraction]) -> Fraction:
        """Exact rational value at a full assignment of the variables used.

        Raises ZeroAtPole when a variable carrying a negative exponent is
        assigned zero.
        """
        total = Fraction(0)
        for m, c in self.terms:
            val = Fraction(c)
            for v, e in m:
                if v not in assignment:
                    raise ValueError(f"no value assigned to variable {v}")
                x = Fraction(assignment[v])
                if x == 0:
                    if e < 0:
                        raise ZeroAtPole(f"variable {self.ctx.names[v]} is zero "
                                         "but occurs with a negative exponent")
                    val = Fraction(0)
                    break
                val *= x ** e
            total += val
        return total

    def specialize_ones(self, var_ids: Iterable[int]) -> "LaurentPoly":
        """Substitute 1 for the given variables (exact for any exponent)."""
        drop = set(var_ids)
        acc: dict[Monomial, int] = {}
        for m, c in self.terms:
            kept = tuple(p for p in m if p[0] not in drop)
            t = acc.get(kept, 0) + c
            if t:
                acc[kept] = t
            else:
                del acc[kept]
        return self.ctx.poly(acc)

    # -- printing ----------------------------------------------------------

    def _mono_str(self, m: Monomial) -> str:
        parts = []
        for v, e in m:
            name = self.ctx.names[v]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for m, c in self.terms:
            if not m:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(self._mono_str(m))
            elif c == -1:
                chunks.append("-" + self._mono_str(m))
            else:
                chunks.append(f"{c}*{self._mono_str(m)}")
        return " + ".join(chunks)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _shifted_dense(p: LaurentPoly, n: int) -> tuple[dict[tuple[int, ...], int], tuple[int, ...]]:
    """Dense exponent-vector form of p times the monomial making all
    exponents nonnegative with per-variable minimum zero.  Returns the
    dense term map and the applied shift (the original minimum exponents).
    """
    lows: dict[int, int] = {}
    hits: dict[int, int] = {}
    for m, _ in p.terms:
        for v, e in m:
            hits[v] = hits.get(v, 0) + 1
            if v not in lows or e < lows[v]:
                lows[v] = e
    nterms = len(p.terms)
    mins = [0] * n
    for v, low in lows.items():
        # A variable absent from some monomial occurs there with exponent 0.
        mins[v] = low if hits[v] == nterms else min(low, 0)
    dense = {}
    for m, c in p.terms:
        vec = [0] * n
        for v, e in m:
            vec[v] = e
        dense[tuple(vec[v] - mins[v] for v in range(n))] = c
    return dense, tuple(mins)
