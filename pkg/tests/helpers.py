"""Shared fixtures: seeded random generators and independent oracles."""

import itertools
from fractions import Fraction

from sclim.arith import Scalar, UniPoly
from sclim.pbw import B, NCPoly, PBWPresentation, SwapRule
from sclim.poisson import CPoly, poisson_bracket


def random_fraction(rng, lo=-6, hi=6):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_unipoly(rng, max_degree=2, var="t"):
    return UniPoly([random_fraction(rng) for _ in range(rng.randint(0, max_degree) + 1)],
                   var)


def random_scalar(rng, max_degree=2, var="t"):
    """Random polynomial scalar (denominator 1)."""
    return Scalar(random_unipoly(rng, max_degree, var))


def nonzero(rng, make):
    while True:
        value = make(rng)
        if not value.is_zero():
            return value


def random_exponents(rng, n_vars, max_degree):
    exps = [0] * n_vars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(n_vars)] += 1
    return tuple(exps)


def random_ncpoly(rng, presentation, max_degree=3, max_terms=3, coeff_degree=1):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = random_exponents(rng, len(presentation.generators), max_degree)
        coeff = random_scalar(rng, coeff_degree, presentation.coeff_var)
        cur = terms.get(exps)
        terms[exps] = coeff if cur is None else cur + coeff
    return NCPoly(presentation, terms)


def random_cpoly(rng, variables=("e", "f", "h"), max_degree=2, max_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = random_exponents(rng, len(variables), max_degree)
        terms[exps] = terms.get(exps, Fraction(0)) + random_fraction(rng)
    return CPoly(variables, terms)


def corrupted_b() -> PBWPresentation:
    """B with the h*e rule damaged: the tail lands on f instead of e."""
    shift = Scalar(UniPoly([-1, 1], "t"))
    rules = dict(B().swap_rules)
    rules[(2, 0)] = SwapRule(Scalar.of(1, "t"), {(0, 1, 0): shift * 2})
    return PBWPresentation("B_corrupted", ("e", "f", "h"), rules, parameter="t")


def degree_slice_basis(generators, algebra, cap, variables=("e", "f", "h")):
    """Membership test for the degree-<=cap slice of the Poisson closure.

    Saturates the span of the generators under multiplication by variables
    (when the product stays under the cap) and brackets with variables, using
    exact Gaussian elimination; independent of the Buchberger machinery.
    """
    monomials = sorted(
        exps for exps in itertools.product(range(cap + 1), repeat=len(variables))
        if sum(exps) <= cap)
    index = {m: i for i, m in enumerate(monomials)}

    def vectorize(p):
        vec = [Fraction(0)] * len(monomials)
        for exps, c in p.terms.items():
            vec[index[exps]] = c
        return vec

    pivots: dict[int, list[Fraction]] = {}

    def reduce_vec(vec):
        vec = vec[:]
        for pivot, row in sorted(pivots.items()):
            if vec[pivot] != 0:
                factor = vec[pivot]
                vec = [a - factor * b for a, b in zip(vec, row)]
        return vec

    def insert(p):
        vec = reduce_vec(vectorize(p))
        lead = next((k for k, a in enumerate(vec) if a != 0), None)
        if lead is None:
            return False
        pivots[lead] = [a / vec[lead] for a in vec]
        return True

    gens = [algebra.var(name) for name in variables]
    frontier = [g for g in generators if insert(g)]
    while frontier:
        new_frontier = []
        for p in frontier:
            for x in gens:
                for candidate in (p * x, poisson_bracket(algebra, p, x)):
                    if candidate.is_zero() or candidate.total_degree() > cap:
                        continue
                    if insert(candidate):
                        new_frontier.append(candidate)
        frontier = new_frontier

    def contains(p):
        return all(a == 0 for a in reduce_vec(vectorize(p)))

    return contains
