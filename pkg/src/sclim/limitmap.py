"""The natural maps between the parametric algebra, its fibers, and the limit.

Four maps are implemented, all exact:

* `gamma_eval` evaluates an element of the parametric algebra at finitely many
  sample nodes, giving one element of each fiber (a `FamilyElement`).
* `gamma_inverse` reconstructs the unique preimage whose coefficients are
  Laurent polynomials inside a caller-supplied band, by per-monomial
  interpolation; surplus nodes re-verify the fit and turn a wrong band or a
  tampered family into an explicit `InconsistentFamily` error.
* `specialize_at_one` (alias `gamma_hat`) evaluates every coefficient at 1 and
  reads the ordered monomials as commutative ones, landing in the limit ring.
  Its domain is the set of elements whose coefficients are regular at 1.
* `gamma_hat_via_family` is the composite sample-evaluate / reconstruct /
  specialize route to the same value, used by the verification pipeline to
  exercise the construction end to end.

`verify_counterexample` runs the full certificate chain for a given n: the
central element, the properness of the pair of ideal generators under the
n-dimensional module, the images in the limit, the Poisson closure, and the
nilpotent non-primeness witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import Rational, Scalar, _as_rational, interpolate_band
from .errors import (InconsistentFamily, InsufficientSamples, PoleAtOne,
                     PoleAtPoint, PoleAtSample)
from .ideals import (CommIdeal, is_poisson_ideal, membership,
                     nilpotent_nonprime_witness, poisson_closure)
from .pbw import (B, B_q, NCPoly, PBWPresentation, SwapRule, casimir,
                  commutator, is_central, multiply, sl2_representation,
                  annihilates)
from .poisson import CPoly, semiclassical_limit


class SampleSet:
    """Strictly increasing sample nodes, all valid parameter values.

    Nodes may be arbitrary rationals outside {0, 1, -1}; the default
    constructor takes consecutive integers from 2 up, which are never roots
    of unity.
    """

    def __init__(self, nodes: Sequence[int | Rational]):
        vals = [_as_rational(x) for x in nodes]
        if not vals:
            raise ValueError("need at least one node")
        if any(vals[k] >= vals[k + 1] for k in range(len(vals) - 1)):
            raise ValueError("nodes must be strictly increasing")
        if any(v in (0, 1, -1) for v in vals):
            raise ValueError("nodes 0, 1, -1 are not valid parameter values")
        self.nodes = tuple(vals)

    @classmethod
    def integers(cls, count: int, start: int = 2) -> "SampleSet":
        if start < 2:
            raise ValueError("integer nodes start at 2")
        return cls(range(start, start + count))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __repr__(self) -> str:
        return f"SampleSet({', '.join(str(x) for x in self.nodes)})"


@dataclass(frozen=True)
class FamilyElement:
    """One fiber element per sample node."""

    nodes: tuple[Rational, ...]
    fibers: tuple[NCPoly, ...]

    def __post_init__(self):
        if len(self.nodes) != len(self.fibers):
            raise ValueError("one fiber element per node")

    def fiber(self, node: int | Rational) -> NCPoly:
        return self.fibers[self.nodes.index(_as_rational(node))]

    def __mul__(self, other: "FamilyElement") -> "FamilyElement":
        if self.nodes != other.nodes:
            raise ValueError("families over different node sets")
        return FamilyElement(self.nodes, tuple(
            multiply(a, b) for a, b in zip(self.fibers, other.fibers)))

    def support(self) -> set[tuple[int, ...]]:
        out: set[tuple[int, ...]] = set()
        for fib in self.fibers:
            out.update(fib.terms)
        return out


def specialize_presentation(p: PBWPresentation, value: Rational) -> PBWPresentation:
    """Fiber of a parametric presentation at a fixed parameter value."""
    if not p.has_symbolic_parameter():
        raise ValueError(f"{p.name} has no symbolic parameter")
    value = _as_rational(value)
    rules = {}
    for pair, rule in p.swap_rules.items():
        coeff = Scalar.of(rule.coeff.evaluate(value), p.coeff_var)
        tail = {exps: Scalar.of(c.evaluate(value), p.coeff_var)
                for exps, c in rule.tail.items()}
        rules[pair] = SwapRule(coeff, tail)
    return PBWPresentation(f"{p.name}_fiber", p.generators, rules,
                           parameter=p.parameter, parameter_value=value)


def gamma_eval(b: NCPoly, samples: SampleSet) -> FamilyElement:
    """Coefficientwise evaluation at every node, one fiber element each."""
    p = b.presentation
    if not p.has_symbolic_parameter():
        raise ValueError(f"{p.name} has no symbolic parameter")
    fibers = []
    for node in samples:
        fiber_presentation = specialize_presentation(p, node)
        terms = {}
        for exps, c in b.terms.items():
            if not c.is_regular_at(node):
                raise PoleAtSample(f"coefficient {c} has a pole at node {node}")
            terms[exps] = Scalar.of(c.evaluate(node), p.coeff_var)
        fibers.append(NCPoly(fiber_presentation, terms))
    return FamilyElement(samples.nodes, tuple(fibers))


def gamma_inverse(family: FamilyElement, band: tuple[int, int],
                  parent: Optional[PBWPresentation] = None) -> NCPoly:
    """Reconstruct the unique preimage with coefficients in the Laurent band.

    `band` = (m_min, m_max) bounds the exponent range of each coefficient.
    Interpolation uses the first m_max - m_min + 1 nodes; every node is then
    re-checked, so families outside the image at this band raise
    `InconsistentFamily`.
    """
    m_min, m_max = band
    if m_max < m_min:
        raise ValueError("empty coefficient band")
    width = m_max - m_min + 1
    if len(family.nodes) < width:
        raise InsufficientSamples(
            f"band of width {width} needs at least {width} nodes, "
            f"got {len(family.nodes)}")
    parent = parent or B()
    var = parent.coeff_var
    terms = {}
    for exps in sorted(family.support()):
        samples = [(node, fib.coefficient(exps).constant_value())
                   for node, fib in zip(family.nodes, family.fibers)]
        coeff = interpolate_band(samples[:width], m_min, var)
        for node, value in samples:
            if coeff.evaluate(node) != value:
                raise InconsistentFamily(
                    f"monomial {exps}: samples do not lie in the band "
                    f"[{m_min}, {m_max}]")
        if not coeff.is_zero():
            terms[exps] = coeff
    return NCPoly(parent, terms)


def specialize_at_one(b: NCPoly) -> CPoly:
    """Evaluate every coefficient at 1 and drop to the commutative limit.

    Defined exactly on elements whose coefficients are regular at 1; a pole
    raises `PoleAtOne`.
    """
    p = b.presentation
    if not p.has_symbolic_parameter():
        raise ValueError(f"{p.name} has no symbolic parameter")
    out = CPoly.zero(p.generators)
    for exps, c in b.terms.items():
        try:
            value = c.evaluate(1)
        except PoleAtPoint as exc:
            raise PoleAtOne(f"coefficient {c} of {exps} has a pole at 1") from exc
        out = out + CPoly.monomial(exps, value, p.generators)
    return out


# The natural map into the limit: evaluate the parameter at 1.
gamma_hat = specialize_at_one


def gamma_hat_via_family(z: NCPoly, samples: SampleSet,
                         band: Optional[tuple[int, int]] = None) -> CPoly:
    """The same value as `gamma_hat`, via the sample/reconstruct/project route.

    When `band` is omitted the coefficients must be polynomial in the
    parameter and the band is [0, max degree].
    """
    if band is None:
        degrees = []
        for c in z.terms.values():
            if not c.is_polynomial():
                raise ValueError(
                    "band required for non-polynomial coefficients")
            degrees.append(max(c.num.degree, 0))
        band = (0, max(degrees, default=0))
    family = gamma_eval(z, samples)
    reconstructed = gamma_inverse(family, band, parent=B())
    return specialize_at_one(reconstructed)


# -- the end-to-end certificate -------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass(frozen=True)
class CounterexampleReport:
    n: int
    nodes: tuple[Rational, ...]
    checks: tuple[CheckResult, ...]
    witness: Optional[tuple[str, int]]
    closure_basis: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [str(x) for x in self.nodes],
            "checks": [c.to_json() for c in self.checks],
            "witness": None if self.witness is None else
                       {"element": self.witness[0], "power": self.witness[1]},
            "closure_basis": list(self.closure_basis),
            "passed": self.passed,
        }


def verify_counterexample(n: int, samples: SampleSet) -> CounterexampleReport:
    """Run every certificate for the prime ideal with nilpotent limit image.

    Checks, in order: (a) the quadratic element is central; (b) the two ideal
    generators annihilate the n-dimensional module, so the ideal is proper;
    (c) their images at 1 are e^n and 4ef + h^2, by both the direct and the
    sampled route; (d) the Poisson closure of those images is bracket-stable;
    (e) images of further ideal elements land in the closure; (f) the
    closure admits the nilpotent witness (e, n), hence is not prime.

    Sub-check failures are recorded in the report, never skipped.
    """
    if n < 2:
        raise ValueError("the construction needs n >= 2")
    if len(samples) < 3:
        raise ValueError("need at least 3 sample nodes")

    bq = B_q()
    e, f, h = (bq.generator(k) for k in range(3))
    q = bq.parameter_scalar()
    omega = casimir(bq)
    gen_power = e ** n
    gen_central = omega - bq.scalar((q - 1) ** 2 * (n * n - 1))

    checks: list[CheckResult] = []

    # (a) centrality
    central = is_central(omega)
    checks.append(CheckResult(
        "central_element", central,
        "4ef + h^2 - 2(q-1)h commutes with e, f, h" if central else
        "quadratic element is not central"))

    # (b) properness via the n-dimensional module
    try:
        rep = sl2_representation(n)
        kills_power = annihilates(rep, gen_power)
        kills_central = annihilates(rep, gen_central)
        ok = kills_power and kills_central
        detail = (f"{n}-dimensional module satisfies the relations; "
                  f"annihilates e^{n}: {kills_power}, "
                  f"annihilates the shifted central element: {kills_central}")
    except ValueError as exc:
        ok, detail = False, str(exc)
    checks.append(CheckResult("ideal_proper", ok, detail))

    # (c) images in the limit, direct and via sampling
    b1 = semiclassical_limit(B())
    expected_power = CPoly.monomial((n, 0, 0), 1, b1.variables)
    expected_central = (CPoly.monomial((1, 1, 0), 4, b1.variables)
                        + CPoly.monomial((0, 0, 2), 1, b1.variables))
    image_power = gamma_hat(gen_power)
    image_central = gamma_hat(gen_central)
    sampled_power = gamma_hat_via_family(gen_power, samples)
    sampled_central = gamma_hat_via_family(gen_central, samples)
    ok = (image_power == expected_power and image_central == expected_central
          and sampled_power == image_power and sampled_central == image_central)
    checks.append(CheckResult(
        "generator_images", ok,
        f"images at 1: {image_power}; {image_central} "
        f"(sampled route agrees: {sampled_power == image_power and sampled_central == image_central})"))

    # (d) Poisson closure of the image ideal
    plain = CommIdeal(b1, [image_power, image_central])
    closure = poisson_closure(plain, b1)
    plain_stable = is_poisson_ideal(plain, b1)
    closure_stable = is_poisson_ideal(closure, b1)
    checks.append(CheckResult(
        "poisson_closure", closure_stable and not closure.is_trivial(),
        f"plain ideal bracket-stable: {plain_stable}; "
        f"closure bracket-stable: {closure_stable}; "
        f"closure basis: {closure.basis_strings()}"))

    # (e) sampled ideal elements land in the closure
    qm1 = q - 1
    ideal_elements = [
        ("e^n", gen_power),
        ("central generator", gen_central),
        ("(q-1)^-1 [e^n, f]", commutator(gen_power, f).scale(qm1.inverse())),
        ("(q-1)^-1 [e^n, h]", commutator(gen_power, h).scale(qm1.inverse())),
        ("(q-1)^-1 [central, f]", commutator(gen_central, f).scale(qm1.inverse())),
    ]
    element_reports = []
    all_in = True
    for label, element in ideal_elements:
        image = gamma_hat(element)
        sampled = gamma_hat_via_family(element, samples)
        inside, _ = membership(image, closure)
        agrees = sampled == image
        all_in = all_in and inside and agrees
        element_reports.append(f"{label} -> {image}: member={inside}")
    checks.append(CheckResult(
        "image_elements_in_closure", all_in, "; ".join(element_reports)))

    # (f) nilpotent witness
    e_limit = b1.var("e")
    certificate = nilpotent_nonprime_witness(closure, e_limit, n)
    ok = certificate.verdict == "NotPrime"
    witness = None
    if ok:
        witness = (str(certificate.witness), certificate.power)
        detail = (f"e^{certificate.power} lies in the closure, e does not: "
                  f"not prime")
    else:
        detail = "no nilpotent witness found"
    checks.append(CheckResult("nilpotent_witness", ok, detail))

    return CounterexampleReport(
        n=n,
        nodes=samples.nodes,
        checks=tuple(checks),
        witness=witness,
        closure_basis=tuple(closure.basis_strings()),
    )
