"""Commutative polynomials with a Poisson bracket given on generators.

`CPoly` is a commutative polynomial over the rationals in a fixed variable
list (default e, f, h), stored as a map from exponent vectors to nonzero
coefficients.  A `PoissonAlgebra` adds a bracket table b_ij = {x_i, x_j} for
i < j; the bracket of two polynomials is the biderivation extension

    {a, b} = sum_{i<j} (da/dx_i db/dx_j - da/dx_j db/dx_i) b_ij,

which is antisymmetric and Leibniz by construction.  Whether the Jacobi
identity holds is a property of the table; it is checked on generator triples
at construction and the residuals are kept as a certificate.

`semiclassical_limit` extracts such a bracket table from a parametric PBW
presentation: each generator commutator must vanish at parameter value 1, is
divided exactly by (par - 1), and is then evaluated at 1.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from .arith import Rational, Scalar, _as_rational
from .errors import NotCommutativeAtOne, PoleAtPoint
from .pbw import PBWPresentation, _format_terms, commutator

Exponents = tuple[int, ...]

DEFAULT_VARIABLES = ("e", "f", "h")


class CPoly:
    """Commutative polynomial with exact rational coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[Exponents, int | Rational] = ()):
        self.variables = tuple(variables)
        clean: dict[Exponents, Rational] = {}
        for exps, c in dict(terms).items():
            c = _as_rational(c)
            if c != 0:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, variables: Sequence[str] = DEFAULT_VARIABLES) -> "CPoly":
        return cls(variables)

    @classmethod
    def const(cls, value, variables: Sequence[str] = DEFAULT_VARIABLES) -> "CPoly":
        return cls(variables, {(0,) * len(variables): _as_rational(value)})

    @classmethod
    def variable(cls, name: str,
                 variables: Sequence[str] = DEFAULT_VARIABLES) -> "CPoly":
        idx = tuple(variables).index(name)
        exps = tuple(1 if k == idx else 0 for k in range(len(variables)))
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1,
                 variables: Sequence[str] = DEFAULT_VARIABLES) -> "CPoly":
        return cls(variables, {tuple(exps): _as_rational(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check_compatible(self, other: "CPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"mixed variable lists {self.variables} and {other.variables}")

    def _coerce(self, other) -> "CPoly | None":
        if isinstance(other, CPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return CPoly.const(other, self.variables)
        return None

    def __add__(self, other) -> "CPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check_compatible(o)
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return CPoly(self.variables, out)

    __radd__ = __add__

    def __sub__(self, other) -> "CPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "CPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "CPoly":
        return CPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponents, Rational] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, Fraction(0)) + ca * cb
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        return CPoly(self.variables, out)

    def __rmul__(self, other) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> "CPoly":
        f = _as_rational(factor)
        return CPoly(self.variables, {e: c * f for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "CPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        out = CPoly.const(1, self.variables)
        for _ in range(exponent):
            out = out * self
        return out

    def partial(self, index: int) -> "CPoly":
        """Partial derivative with respect to the index-th variable."""
        out: dict[Exponents, Rational] = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            key = exps[:index] + (e - 1,) + exps[index + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
        return CPoly(self.variables, out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CPoly.const(other, self.variables)
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        def coeff_str(c: Rational) -> tuple[str, bool]:
            return str(c), False

        return _format_terms(self.terms, self.variables, coeff_str)

    def __repr__(self) -> str:
        return f"CPoly({self})"


class PoissonAlgebra:
    """Polynomial ring plus a bracket table on generator pairs.

    The table stores b_ij = {x_i, x_j} for i < j only; antisymmetry is
    structural.  Jacobi residuals for all generator triples are computed at
    construction and kept in `jacobi_certificate`; the bracket is honest
    (a Lie bracket) iff they are all zero.
    """

    def __init__(self, variables: Sequence[str],
                 table: Mapping[tuple[str, str], CPoly]):
        self.variables = tuple(variables)
        index = {v: k for k, v in enumerate(self.variables)}
        self._table: dict[tuple[int, int], CPoly] = {}
        for (a, b), poly in table.items():
            i, j = index[a], index[b]
            if i >= j:
                raise ValueError(f"bracket key ({a},{b}) must be an ordered pair")
            if poly.variables != self.variables:
                raise ValueError("bracket entry over the wrong variable list")
            self._table[(i, j)] = poly
        zero = CPoly.zero(self.variables)
        for i in range(len(self.variables)):
            for j in range(i + 1, len(self.variables)):
                self._table.setdefault((i, j), zero)
        self.jacobi_certificate = tuple(jacobi_residuals(self))

    @property
    def is_jacobi(self) -> bool:
        return all(r.is_zero() for r in self.jacobi_certificate)

    def var(self, name: str) -> CPoly:
        return CPoly.variable(name, self.variables)

    def zero(self) -> CPoly:
        return CPoly.zero(self.variables)

    def bracket_entry(self, i: int, j: int) -> CPoly:
        """{x_i, x_j} for any pair of generator indices."""
        if i == j:
            return CPoly.zero(self.variables)
        if i < j:
            return self._table[(i, j)]
        return -self._table[(j, i)]

    def bracket_of(self, a: str, b: str) -> CPoly:
        index = {v: k for k, v in enumerate(self.variables)}
        return self.bracket_entry(index[a], index[b])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoissonAlgebra):
            return NotImplemented
        return self.variables == other.variables and self._table == other._table

    __hash__ = None

    def __repr__(self) -> str:
        entries = ", ".join(
            f"{{{self.variables[i]},{self.variables[j]}}}={poly}"
            for (i, j), poly in sorted(self._table.items()))
        return f"PoissonAlgebra({', '.join(self.variables)}; {entries})"

    def to_json(self) -> dict:
        brackets = {}
        for (i, j) in sorted(self._table):
            key = f"{self.variables[i]},{self.variables[j]}"
            brackets[key] = str(self._table[(i, j)])
        return {"vars": list(self.variables), "brackets": brackets}


def poisson_bracket(algebra: PoissonAlgebra, a: CPoly, b: CPoly) -> CPoly:
    """Biderivation extension of the generator table to polynomials."""
    if a.variables != algebra.variables or b.variables != algebra.variables:
        raise ValueError("operands are not over this algebra's variables")
    out = CPoly.zero(algebra.variables)
    n = len(algebra.variables)
    partials_a = [a.partial(k) for k in range(n)]
    partials_b = [b.partial(k) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            entry = algebra.bracket_entry(i, j)
            if entry.is_zero():
                continue
            piece = partials_a[i] * partials_b[j] - partials_a[j] * partials_b[i]
            out = out + piece * entry
    return out


def jacobi_residuals(algebra: PoissonAlgebra) -> list[CPoly]:
    """{x,{y,z}} + {y,{z,x}} + {z,{x,y}} for each generator triple."""
    out = []
    gens = [algebra.var(v) for v in algebra.variables]
    for i, j, k in itertools.combinations(range(len(gens)), 3):
        x, y, z = gens[i], gens[j], gens[k]
        residual = (poisson_bracket(algebra, x, poisson_bracket(algebra, y, z))
                    + poisson_bracket(algebra, y, poisson_bracket(algebra, z, x))
                    + poisson_bracket(algebra, z, poisson_bracket(algebra, x, y)))
        out.append(residual)
    return out


def semiclassical_limit(p: PBWPresentation) -> PoissonAlgebra:
    """Bracket table of the commutative fiber at parameter value 1.

    For each generator pair computes the commutator, checks that every
    coefficient vanishes at 1 (else `NotCommutativeAtOne`), divides exactly
    by (par - 1) and evaluates at 1.
    """
    if not p.has_symbolic_parameter():
        raise ValueError(f"{p.name} has no symbolic parameter")
    if not p.is_confluent:
        raise ValueError(f"{p.name}: overlap check failed")
    shift = Scalar.variable(p.coeff_var) - 1
    table: dict[tuple[str, str], CPoly] = {}
    n = len(p.generators)
    for i in range(n):
        for j in range(i + 1, n):
            cm = commutator(p.generator(i), p.generator(j))
            entry = CPoly.zero(p.generators)
            for exps, c in cm.terms.items():
                try:
                    at_one = c.evaluate(1)
                except PoleAtPoint as exc:
                    raise NotCommutativeAtOne(
                        f"[{p.generators[i]},{p.generators[j]}] has a pole at 1") from exc
                if at_one != 0:
                    raise NotCommutativeAtOne(
                        f"[{p.generators[i]},{p.generators[j]}] does not vanish at 1: "
                        f"coefficient {c} of {exps}")
                value = (c / shift).evaluate(1)
                entry = entry + CPoly.monomial(exps, value, p.generators)
            table[(p.generators[i], p.generators[j])] = entry
    return PoissonAlgebra(p.generators, table)
