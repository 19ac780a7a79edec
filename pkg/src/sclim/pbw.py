"""Noncommutative algebras with ordered generators and swap-rule rewriting.

An algebra is given by a `PBWPresentation`: an ordered list of generators and,
for every out-of-order pair j > i, a rule

    x_j * x_i  =  c * x_i * x_j  +  tail

with `c` a nonzero scalar and `tail` a normal-form combination of total degree
at most two.  Elements (`NCPoly`) are stored in normal form: a map from
exponent vectors to scalars, the exponent vector (i, j, k) standing for the
ordered monomial x_0^i x_1^j x_2^k.

Multiplication rewrites words by repeatedly swapping the leftmost out-of-order
adjacent pair.  The rules are degree-compatible (rewriting never raises total
degree), so the loop terminates and normal forms are well defined whenever the
overlap check below passes.

`check_pbw_overlaps` is the confluence certificate: for every generator triple
k > j > i it reduces x_k x_j x_i along both association orders and compares
the results.  If all triples agree, the ordered monomials are a basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from .arith import Rational, Scalar, ScalarMatrix, UniPoly, _as_rational
from .errors import MixedPresentations

Exponents = tuple[int, ...]

# Safety valve against a non-terminating rule set slipping past validation.
_MAX_REWRITE_STEPS = 2_000_000


class SwapRule:
    """x_j * x_i  ->  coeff * x_i * x_j + tail  (tail: exponents -> Scalar)."""

    __slots__ = ("coeff", "tail")

    def __init__(self, coeff: Scalar, tail: Mapping[Exponents, Scalar]):
        if coeff.is_zero():
            raise ValueError("swap coefficient must be nonzero")
        self.coeff = coeff
        self.tail = {exps: c for exps, c in tail.items() if not c.is_zero()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SwapRule):
            return NotImplemented
        return self.coeff == other.coeff and self.tail == other.tail

    __hash__ = None


class PBWPresentation:
    """Ordered generators plus swap rules; immutable once constructed."""

    def __init__(self, name: str, generators: Sequence[str],
                 swap_rules: Mapping[tuple[int, int], SwapRule],
                 parameter: Optional[str] = None,
                 parameter_value: Optional[Rational] = None):
        self.name = name
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        self.parameter = parameter
        self.parameter_value = (None if parameter_value is None
                                else _as_rational(parameter_value))
        self.coeff_var = parameter if parameter is not None else "t"
        n = len(self.generators)
        expected = {(j, i) for j in range(n) for i in range(j)}
        if set(swap_rules) != expected:
            raise ValueError("need exactly one swap rule per pair j > i")
        self.swap_rules = dict(swap_rules)
        for (j, i), rule in self.swap_rules.items():
            self._validate_tail(j, i, rule)
        self._prod_cache: dict[tuple[Exponents, Exponents], dict[Exponents, Scalar]] = {}
        # Confluence certificate, computed once here so shared presentations
        # never race on it.
        self._overlap_report = check_pbw_overlaps(self)

    def _validate_tail(self, j: int, i: int, rule: SwapRule) -> None:
        for exps, _ in rule.tail.items():
            if len(exps) != len(self.generators) or any(e < 0 for e in exps):
                raise ValueError(f"bad tail monomial {exps} in rule ({j},{i})")
            deg = sum(exps)
            if deg > 2:
                raise ValueError("tail degree must be at most 2")
            if deg == 2:
                # Degree-compatible rewriting needs degree-2 tail monomials to
                # sit strictly below the pair (i, j) lexicographically.
                support = [k for k, e in enumerate(exps) for _ in range(e)]
                a, b = support[0], support[-1]
                if (a, b) >= (i, j):
                    raise ValueError(
                        f"degree-2 tail monomial {exps} not below pair ({i},{j})")

    # -- symbolic parameter ------------------------------------------------

    def has_symbolic_parameter(self) -> bool:
        return self.parameter is not None and self.parameter_value is None

    # -- element constructors ----------------------------------------------

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return self.scalar(1)

    def scalar(self, value) -> "NCPoly":
        s = value if isinstance(value, Scalar) else Scalar.of(value, self.coeff_var)
        unit = (0,) * len(self.generators)
        return NCPoly(self, {unit: s})

    def parameter_scalar(self) -> Scalar:
        if self.parameter is None:
            raise ValueError(f"{self.name} has no parameter")
        if self.parameter_value is not None:
            return Scalar.of(self.parameter_value, self.coeff_var)
        return Scalar.variable(self.coeff_var)

    def gen(self, name: str) -> "NCPoly":
        idx = self.generators.index(name)
        return self.generator(idx)

    def generator(self, index: int) -> "NCPoly":
        exps = tuple(1 if k == index else 0 for k in range(len(self.generators)))
        return NCPoly(self, {exps: Scalar.of(1, self.coeff_var)})

    def monomial(self, exps: Sequence[int], coeff=1) -> "NCPoly":
        exps = tuple(exps)
        if len(exps) != len(self.generators) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = coeff if isinstance(coeff, Scalar) else Scalar.of(coeff, self.coeff_var)
        if c.is_zero():
            return self.zero()
        return NCPoly(self, {exps: c})

    # -- structural identity -------------------------------------------------

    def _signature(self):
        rules = tuple(sorted(
            (pair, rule.coeff, tuple(sorted(rule.tail.items())))
            for pair, rule in self.swap_rules.items()))
        return (self.generators, self.parameter_value, rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWPresentation):
            return NotImplemented
        if self is other:
            return True
        return self._signature() == other._signature()

    __hash__ = None

    def __repr__(self) -> str:
        tag = ""
        if self.parameter is not None:
            tag = f", {self.parameter}" + (
                f"={self.parameter_value}" if self.parameter_value is not None else "")
        return f"PBWPresentation({self.name}: {' < '.join(self.generators)}{tag})"

    # -- confluence ----------------------------------------------------------

    @property
    def is_confluent(self) -> bool:
        return self._overlap_report.passed

    def overlap_report(self) -> "OverlapReport":
        return self._overlap_report

    # -- rewriting engine ----------------------------------------------------

    def _word_normal_form(self, word: tuple[int, ...]) -> dict[Exponents, Scalar]:
        """Normal form of a single word as exponents -> Scalar."""
        one = Scalar.of(1, self.coeff_var)
        pending: dict[tuple[int, ...], Scalar] = {word: one}
        out: dict[Exponents, Scalar] = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            pos = _first_inversion(w)
            if pos is None:
                exps = _word_to_exponents(w, len(self.generators))
                _accumulate(out, exps, c)
                continue
            steps += 1
            if steps > _MAX_REWRITE_STEPS:
                raise RuntimeError("rewriting did not terminate; rules are invalid")
            j, i = w[pos], w[pos + 1]
            rule = self.swap_rules[(j, i)]
            swapped = w[:pos] + (i, j) + w[pos + 2:]
            _accumulate(pending, swapped, c * rule.coeff)
            for texps, tc in rule.tail.items():
                tword = w[:pos] + _exponents_to_word(texps) + w[pos + 2:]
                _accumulate(pending, tword, c * tc)
        return out

    def _monomial_product(self, a: Exponents, b: Exponents) -> dict[Exponents, Scalar]:
        key = (a, b)
        cached = self._prod_cache.get(key)
        if cached is None:
            word = _exponents_to_word(a) + _exponents_to_word(b)
            cached = self._word_normal_form(word)
            self._prod_cache[key] = cached
        return cached


def _first_inversion(word: tuple[int, ...]) -> Optional[int]:
    for k in range(len(word) - 1):
        if word[k] > word[k + 1]:
            return k
    return None


def _word_to_exponents(word: tuple[int, ...], n: int) -> Exponents:
    exps = [0] * n
    for g in word:
        exps[g] += 1
    return tuple(exps)


def _exponents_to_word(exps: Exponents) -> tuple[int, ...]:
    return tuple(g for g, e in enumerate(exps) for _ in range(e))


def _accumulate(table: dict, key, value: Scalar) -> None:
    cur = table.get(key)
    total = value if cur is None else cur + value
    if total.is_zero():
        table.pop(key, None)
    else:
        table[key] = total


class NCPoly:
    """Element of a PBW algebra, stored in normal form."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: PBWPresentation,
                 terms: Mapping[Exponents, Scalar]):
        self.presentation = presentation
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def leading_monomial(self) -> Exponents:
        """Highest monomial in degree-then-lex order."""
        if not self.terms:
            raise ValueError("zero element has no leading monomial")
        return max(self.terms, key=lambda e: (sum(e), e))

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps),
                              Scalar.of(0, self.presentation.coeff_var))

    def _check_compatible(self, other: "NCPoly") -> None:
        if self.presentation is not other.presentation and \
                self.presentation != other.presentation:
            raise MixedPresentations(
                f"{self.presentation.name} vs {other.presentation.name}")

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.presentation.scalar(other)
        return None

    def __add__(self, other) -> "NCPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        self._check_compatible(o)
        out = dict(self.terms)
        for e, c in o.terms.items():
            _accumulate(out, e, c)
        return NCPoly(self.presentation, out)

    __radd__ = __add__

    def __sub__(self, other) -> "NCPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "NCPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.presentation, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if isinstance(other, NCPoly):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> "NCPoly":
        f = factor if isinstance(factor, Scalar) else \
            Scalar.of(factor, self.presentation.coeff_var)
        return NCPoly(self.presentation,
                      {e: c * f for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "NCPoly":
        if exponent < 0:
            raise ValueError("negative power of an algebra element")
        result = self.presentation.one()
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.presentation.scalar(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        return _format_terms(self.terms, self.presentation.generators,
                             coeff_str=_scalar_coeff_str)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def _scalar_coeff_str(c: Scalar) -> tuple[str, bool]:
    """Render a coefficient; second value says whether it needs parentheses."""
    s = str(c)
    atomic = c.is_polynomial() and len([x for x in c.num.coeffs if x != 0]) <= 1
    return s, not atomic


def _format_terms(terms: Mapping[Exponents, object], names: Sequence[str],
                  coeff_str) -> str:
    if not terms:
        return "0"
    parts = []
    for exps in sorted(terms, key=lambda e: (sum(e), e), reverse=True):
        c = terms[exps]
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps) if e > 0)
        body, wrap = coeff_str(c)
        if not mono:
            parts.append(f"({body})" if wrap else body)
        elif body == "1":
            parts.append(mono)
        elif body == "-1":
            parts.append(f"-{mono}")
        elif wrap:
            parts.append(f"({body})*{mono}")
        else:
            parts.append(f"{body}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def multiply(a: NCPoly, b: NCPoly) -> NCPoly:
    """Normal form of the product a * b."""
    a._check_compatible(b)
    p = a.presentation
    out: dict[Exponents, Scalar] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            factor = ca * cb
            for em, cm in p._monomial_product(ea, eb).items():
                _accumulate(out, em, factor * cm)
    return NCPoly(p, out)


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    """a*b - b*a."""
    return multiply(a, b) - multiply(b, a)


def is_central(z: NCPoly) -> bool:
    """True iff z commutes with every generator."""
    p = z.presentation
    return all(commutator(z, p.generator(i)).is_zero()
               for i in range(len(p.generators)))


# -- diamond-lemma overlap check ---------------------------------------------


@dataclass(frozen=True)
class OverlapCheck:
    triple: tuple[int, int, int]        # generator indices k > j > i
    ok: bool
    left: "NCPoly"
    right: "NCPoly"


@dataclass(frozen=True)
class OverlapReport:
    presentation_name: str
    checks: tuple[OverlapCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[OverlapCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation_name,
            "passed": self.passed,
            "triples": [
                {"triple": list(c.triple), "ok": c.ok,
                 "left": str(c.left), "right": str(c.right)}
                for c in self.checks
            ],
        }


def check_pbw_overlaps(p: PBWPresentation) -> OverlapReport:
    """Reduce x_k x_j x_i both ways for every triple k > j > i and compare.

    The word x_k x_j x_i can be rewritten first at the left pair (k, j) or
    first at the right pair (j, i); agreement of the two reductions for all
    triples certifies that normal forms are unique and the ordered monomials
    form a basis.
    """
    n = len(p.generators)
    checks = []
    for k, j, i in itertools.combinations(range(n - 1, -1, -1), 3):
        left = _reduce_after_first_step(p, (k, j, i), left_first=True)
        right = _reduce_after_first_step(p, (k, j, i), left_first=False)
        checks.append(OverlapCheck((k, j, i), left == right, left, right))
    return OverlapReport(p.name, tuple(checks))


def _reduce_after_first_step(p: PBWPresentation, word: tuple[int, int, int],
                             left_first: bool) -> NCPoly:
    k, j, i = word
    if left_first:
        rule = p.swap_rules[(k, j)]
        seeds = [((j, k, i), rule.coeff)]
        seeds += [(_exponents_to_word(te) + (i,), tc) for te, tc in rule.tail.items()]
    else:
        rule = p.swap_rules[(j, i)]
        seeds = [((k, i, j), rule.coeff)]
        seeds += [((k,) + _exponents_to_word(te), tc) for te, tc in rule.tail.items()]
    out: dict[Exponents, Scalar] = {}
    for w, c in seeds:
        for em, cm in p._word_normal_form(w).items():
            _accumulate(out, em, c * cm)
    return NCPoly(p, out)


# -- growth -------------------------------------------------------------------


def growth_dimensions(p: PBWPresentation, d_max: int) -> list[int]:
    """Dimension of the span of all products of at most d generators, d=0..d_max.

    With a passing overlap check and degree-compatible rules this equals the
    number of ordered monomials of total degree at most d.
    """
    if not p.is_confluent:
        raise ValueError(f"{p.name}: overlap check failed; dimensions undefined")
    n = len(p.generators)
    # counts[d] = number of exponent vectors in n variables with sum == d
    counts = [1] + [0] * d_max
    for _ in range(n):
        acc = 0
        new = []
        for d in range(d_max + 1):
            acc += counts[d]
            new.append(acc)
        counts = new  # running sums: one more variable
    dims = []
    total = 0
    for d in range(d_max + 1):
        total += counts[d]
        dims.append(total)
    return dims


def growth_slope(dims: Sequence[int], d_lo: int, d_hi: int) -> Fraction:
    """Discrete log-log slope of the dimension sequence over [d_lo, d_hi].

    Uses the elasticity form d * (V_d - V_{d-1}) / V_{d-1}, the local slope of
    log(dim) against log(d), averaged over the window; exact over rationals.
    """
    if not 0 <= d_lo < d_hi < len(dims):
        raise ValueError("window out of range")
    samples = [Fraction(d * (dims[d] - dims[d - 1]), dims[d - 1])
               for d in range(d_lo + 1, d_hi + 1)]
    return sum(samples, Fraction(0)) / len(samples)


# -- morphisms ----------------------------------------------------------------


class AlgebraMorphism:
    """Generator images defining a map between two presentations.

    The verification result (`holds`) is computed once at construction:
    the map is an algebra morphism iff every defining relation of the
    source, with generators replaced by their images, reduces to zero in
    the target.
    """

    def __init__(self, source: PBWPresentation, target: PBWPresentation,
                 images: Mapping[str, NCPoly],
                 parameter_image: Optional[Scalar] = None):
        if set(images) != set(source.generators):
            raise ValueError("need exactly one image per source generator")
        for img in images.values():
            if img.presentation != target:
                raise MixedPresentations("image lies outside the target algebra")
        if source.has_symbolic_parameter() and parameter_image is None:
            raise ValueError("source parameter needs an image")
        self.source = source
        self.target = target
        self.images = dict(images)
        self.parameter_image = parameter_image
        self.holds = check_morphism(self)

    def apply_scalar(self, c: Scalar) -> Scalar:
        if self.parameter_image is not None:
            return c.compose(self.parameter_image)
        return Scalar.of(c.constant_value(), self.target.coeff_var)

    def apply_monomial(self, exps: Exponents) -> NCPoly:
        out = self.target.one()
        for idx, e in enumerate(exps):
            if e:
                out = multiply(out, self.images[self.source.generators[idx]] ** e)
        return out

    def __call__(self, z: NCPoly) -> NCPoly:
        if z.presentation != self.source:
            raise MixedPresentations("element is not over the source algebra")
        out = self.target.zero()
        for exps, c in z.terms.items():
            out = out + self.apply_monomial(exps).scale(self.apply_scalar(c))
        return out


def check_morphism(m: AlgebraMorphism) -> bool:
    """True iff every source swap relation maps to zero in the target."""
    if not m.target.is_confluent:
        raise ValueError("target presentation is not confluent")
    src = m.source
    for (j, i), rule in src.swap_rules.items():
        xj = m.images[src.generators[j]]
        xi = m.images[src.generators[i]]
        lhs = multiply(xj, xi)
        rhs = multiply(xi, xj).scale(m.apply_scalar(rule.coeff))
        for texps, tc in rule.tail.items():
            rhs = rhs + m.apply_monomial(texps).scale(m.apply_scalar(tc))
        if lhs != rhs:
            return False
    return True


def identity_morphism(p: PBWPresentation) -> AlgebraMorphism:
    images = {g: p.gen(g) for g in p.generators}
    param = None
    if p.parameter is not None:
        param = p.parameter_scalar()
    return AlgebraMorphism(p, p, images, param)


# -- finite-dimensional representations ----------------------------------------


class Representation:
    """Matrices for the generators satisfying all defining relations.

    Construction verifies every swap relation on the matrices and raises
    `ValueError` if any fails, so an instance is always a genuine module.
    """

    def __init__(self, presentation: PBWPresentation, dimension: int,
                 matrices: Mapping[str, ScalarMatrix]):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        if set(matrices) != set(presentation.generators):
            raise ValueError("need exactly one matrix per generator")
        for mat in matrices.values():
            if mat.rows != dimension or mat.cols != dimension:
                raise ValueError("matrix sizes must equal the dimension")
        self.presentation = presentation
        self.dimension = dimension
        self.matrices = dict(matrices)
        bad = self._failing_relation()
        if bad is not None:
            raise ValueError(f"relation for pair {bad} fails on the matrices")

    def _failing_relation(self) -> Optional[tuple[int, int]]:
        p = self.presentation
        for (j, i), rule in p.swap_rules.items():
            mj = self.matrices[p.generators[j]]
            mi = self.matrices[p.generators[i]]
            rhs = (mi * mj).scale(rule.coeff)
            for texps, tc in rule.tail.items():
                rhs = rhs + self._monomial_matrix(texps).scale(tc)
            if not (mj * mi - rhs).is_zero():
                return (j, i)
        return None

    def _monomial_matrix(self, exps: Exponents) -> ScalarMatrix:
        var = self.presentation.coeff_var
        out = ScalarMatrix.identity(self.dimension, var)
        for idx, e in enumerate(exps):
            if e:
                out = out * (self.matrices[self.presentation.generators[idx]] ** e)
        return out

    def act(self, z: NCPoly) -> ScalarMatrix:
        """Matrix by which z acts."""
        if z.presentation != self.presentation:
            raise MixedPresentations("element is not over this representation's algebra")
        var = self.presentation.coeff_var
        out = ScalarMatrix.zeros(self.dimension, var)
        for exps, c in z.terms.items():
            out = out + self._monomial_matrix(exps).scale(c)
        return out


def annihilates(r: Representation, z: NCPoly) -> bool:
    """True iff z acts as the zero matrix."""
    return r.act(z).is_zero()


def sl2_representation(n: int) -> Representation:
    """The n-dimensional weight module of the symbolic deformation algebra.

    On the weight basis v_0..v_{n-1}: H = diag(n-1-2i), F the subdiagonal
    shift, E with i(n-i) on the superdiagonal; the algebra generators act as
    e = (q-1)E, f = (q-1)F, h = (q-1)H.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    p = B_q()
    var = p.coeff_var
    zero = Scalar.of(0, var)

    def build(entry) -> ScalarMatrix:
        return ScalarMatrix(n, n, [entry(r, c) for r in range(n) for c in range(n)])

    E = build(lambda r, c: Scalar.of(c * (n - c), var) if r == c - 1 else zero)
    F = build(lambda r, c: Scalar.of(1, var) if r == c + 1 else zero)
    H = build(lambda r, c: Scalar.of(n - 1 - 2 * r, var) if r == c else zero)
    qm1 = Scalar.variable(var) - 1
    return Representation(p, n, {"e": E.scale(qm1),
                                 "f": F.scale(qm1),
                                 "h": H.scale(qm1)})


# -- built-in presentations -----------------------------------------------------


def _deformation_rules(var: str, value: Optional[Rational]) -> dict[tuple[int, int], SwapRule]:
    """Swap rules for generators e < f < h with commutators scaled by (par-1)."""
    if value is None:
        scale = Scalar(UniPoly([-1, 1], var))          # par - 1
    else:
        scale = Scalar.of(_as_rational(value) - 1, var)
    one = Scalar.of(1, var)
    return {
        # f*e = e*f - (par-1) h
        (1, 0): SwapRule(one, {(0, 0, 1): -scale}),
        # h*e = e*h + 2 (par-1) e
        (2, 0): SwapRule(one, {(1, 0, 0): scale * 2}),
        # h*f = f*h - 2 (par-1) f
        (2, 1): SwapRule(one, {(0, 1, 0): -(scale * 2)}),
    }


@lru_cache(maxsize=None)
def B() -> PBWPresentation:
    """The parametric algebra on e < f < h over the Laurent ring in t."""
    return PBWPresentation("B", ("e", "f", "h"), _deformation_rules("t", None),
                           parameter="t")


@lru_cache(maxsize=None)
def B_q() -> PBWPresentation:
    """The same family with symbolic parameter q."""
    return PBWPresentation("B_q", ("e", "f", "h"), _deformation_rules("q", None),
                           parameter="q")


def B_lambda(lam) -> PBWPresentation:
    """The fiber at a fixed numeric parameter value."""
    return _b_lambda_cached(_as_rational(lam))


@lru_cache(maxsize=None)
def _b_lambda_cached(lam: Rational) -> PBWPresentation:
    return PBWPresentation("B_lambda", ("e", "f", "h"),
                           _deformation_rules("t", lam),
                           parameter="t", parameter_value=lam)


@lru_cache(maxsize=None)
def Usl2() -> PBWPresentation:
    """The enveloping algebra of sl2 on E < F < H."""
    one = Scalar.of(1, "t")
    rules = {
        (1, 0): SwapRule(one, {(0, 0, 1): Scalar.of(-1, "t")}),
        (2, 0): SwapRule(one, {(1, 0, 0): Scalar.of(2, "t")}),
        (2, 1): SwapRule(one, {(0, 1, 0): Scalar.of(-2, "t")}),
    }
    return PBWPresentation("Usl2", ("E", "F", "H"), rules)


def casimir(p: PBWPresentation) -> NCPoly:
    """The central element 4ef + h^2 - 2(par-1)h of a deformation algebra."""
    if p.parameter is None:
        raise ValueError("casimir needs a parametric presentation")
    e, f, h = (p.generator(i) for i in range(3))
    pm1 = p.parameter_scalar() - 1
    return multiply(e, f).scale(4) + multiply(h, h) - h.scale(pm1 * 2)


# -- presentation files ----------------------------------------------------------


def presentation_to_json(p: PBWPresentation) -> dict:
    """Documented JSON form of a presentation (see README for the schema)."""
    relations = []
    for (j, i) in sorted(p.swap_rules):
        rule = p.swap_rules[(j, i)]
        rhs = []
        for exps in sorted(rule.tail, key=lambda e: (sum(e), e), reverse=True):
            mono = {p.generators[k]: e for k, e in enumerate(exps) if e}
            rhs.append({"coeff": str(rule.tail[exps]), "monomial": mono})
        relations.append({
            "lhs": [p.generators[j], p.generators[i]],
            "coeff": str(rule.coeff),
            "rhs": rhs,
        })
    parameter = None
    if p.parameter is not None:
        value = None if p.parameter_value is None else str(p.parameter_value)
        parameter = {"symbol": p.parameter, "value": value}
    return {
        "name": p.name,
        "generators": list(p.generators),
        "parameter": parameter,
        "relations": relations,
    }


def presentation_from_json(data: dict) -> PBWPresentation:
    """Inverse of `presentation_to_json`; validates the schema."""
    from .exprs import parse_scalar  # local import to avoid a cycle
    from .errors import ParseError

    try:
        name = data["name"]
        generators = list(data["generators"])
        parameter = data.get("parameter")
        relations = data["relations"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"presentation file missing field: {exc}") from exc
    symbol = None
    value = None
    if parameter is not None:
        symbol = parameter["symbol"]
        raw = parameter.get("value")
        value = None if raw is None else Fraction(raw)
    var = symbol if symbol is not None else "t"
    index = {g: k for k, g in enumerate(generators)}
    rules: dict[tuple[int, int], SwapRule] = {}
    for rel in relations:
        try:
            gj, gi = rel["lhs"]
            j, i = index[gj], index[gi]
            coeff = parse_scalar(rel["coeff"], var)
            tail: dict[Exponents, Scalar] = {}
            for term in rel["rhs"]:
                exps = [0] * len(generators)
                for gen_name, e in term["monomial"].items():
                    exps[index[gen_name]] += int(e)
                tail[tuple(exps)] = parse_scalar(term["coeff"], var)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad relation entry: {exc}") from exc
        if j <= i:
            raise ParseError(f"relation lhs [{gj}, {gi}] is not an out-of-order pair")
        if (j, i) in rules:
            raise ParseError(f"duplicate relation for pair [{gj}, {gi}]")
        rules[(j, i)] = SwapRule(coeff, tail)
    try:
        return PBWPresentation(name, generators, rules,
                               parameter=symbol, parameter_value=value)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
