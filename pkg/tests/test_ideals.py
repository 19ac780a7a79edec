"""Tests for the Groebner engine and the Poisson ideal operations."""

import itertools
import random
from fractions import Fraction

import pytest

from helpers import degree_slice_basis, random_cpoly
from sclim.ideals import (CommIdeal, MonomialOrder, groebner, ideal_equal,
                          is_poisson_ideal, leading_term, membership,
                          nilpotent_nonprime_witness, poisson_closure,
                          reduce_poly, s_polynomial)
from sclim.pbw import B
from sclim.poisson import CPoly, poisson_bracket, semiclassical_limit

VARS = ("e", "f", "h")


def v(name):
    return CPoly.variable(name, VARS)


def mono(exps, coeff=1):
    return CPoly.monomial(exps, coeff, VARS)


def b1():
    return semiclassical_limit(B())


DEG2_MONOMIALS = [mono(e) for e in
                  [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]]


class TestOrder:
    def test_degrevlex_on_quadratics(self):
        key = MonomialOrder(precedence=VARS).key_for(VARS)
        ranked = sorted([(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0),
                         (0, 1, 1), (0, 0, 2)], key=key, reverse=True)
        assert ranked == [(2, 0, 0), (1, 1, 0), (0, 2, 0),
                          (1, 0, 1), (0, 1, 1), (0, 0, 2)]

    def test_lex(self):
        key = MonomialOrder(kind="lex", precedence=VARS).key_for(VARS)
        assert key((1, 0, 0)) > key((0, 9, 9))

    def test_degree_dominates_in_degrevlex(self):
        key = MonomialOrder(precedence=VARS).key_for(VARS)
        assert key((0, 0, 3)) > key((1, 1, 0))


class TestGroebner:
    def test_principal(self):
        assert groebner([v("e")], variables=VARS) == [v("e")]

    def test_monomial_ideal_is_its_own_basis(self):
        key = MonomialOrder(precedence=VARS).key_for(VARS)
        gb = groebner(DEG2_MONOMIALS, variables=VARS)
        expected = sorted(DEG2_MONOMIALS,
                          key=lambda g: key(leading_term(g, key)[0]))
        assert gb == expected

    def test_frozen_golden_value(self):
        # Computed by an independent hand trace before the build: a single
        # S-polynomial chain from (e^2, ef + h^2/4) yields eh^2, then h^4.
        gb = groebner([mono((2, 0, 0)), 4 * mono((1, 1, 0)) + mono((0, 0, 2))],
                      variables=VARS)
        expected = [mono((1, 1, 0)) + mono((0, 0, 2), Fraction(1, 4)),
                    mono((2, 0, 0)), mono((1, 0, 2)), mono((0, 0, 4))]
        assert gb == expected

    def test_uniqueness_under_generator_shuffle(self):
        rng = random.Random(401)
        for _ in range(100):
            gens = [random_cpoly(rng, VARS, max_degree=2) for _ in
                    range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_zero()]
            if not gens:
                continue
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert groebner(gens, variables=VARS) == \
                groebner(shuffled, variables=VARS)

    def test_buchberger_criterion_on_output(self):
        rng = random.Random(402)
        key = MonomialOrder(precedence=VARS).key_for(VARS)
        for _ in range(100):
            gens = [random_cpoly(rng, VARS, max_degree=2) for _ in range(2)]
            gb = groebner(gens, variables=VARS)
            for f, g in itertools.combinations(gb, 2):
                s = s_polynomial(f, g, key)
                assert reduce_poly(s, gb, key).is_zero()

    def test_every_generator_reduces_to_zero(self):
        rng = random.Random(403)
        for _ in range(50):
            gens = [random_cpoly(rng, VARS, max_degree=2) for _ in range(2)]
            ideal = CommIdeal(VARS, gens)
            for g in gens:
                assert ideal.contains(g)


class TestMembership:
    def test_degree_one_not_in_quadratic_monomials(self):
        ideal = CommIdeal(VARS, DEG2_MONOMIALS)
        inside, remainder = membership(v("e"), ideal)
        assert not inside
        assert remainder == v("e")

    def test_generator_is_member(self):
        for n in (2, 3, 4):
            ideal = CommIdeal(VARS, [mono((n, 0, 0)),
                                     4 * mono((1, 1, 0)) + mono((0, 0, 2))])
            assert ideal.contains(mono((n, 0, 0)))

    def test_h_squared_in_closure(self):
        closure = poisson_closure(
            CommIdeal(VARS, [mono((2, 0, 0)),
                             4 * mono((1, 1, 0)) + mono((0, 0, 2))]), b1())
        assert closure.contains(mono((0, 0, 2)))

    def test_products_stay_inside(self):
        rng = random.Random(404)
        ideal = CommIdeal(VARS, [mono((2, 0, 0)),
                                 4 * mono((1, 1, 0)) + mono((0, 0, 2))])
        for _ in range(100):
            p = random_cpoly(rng, VARS)
            q = random_cpoly(rng, VARS)
            member = ideal.generators[rng.randrange(2)] * p
            assert ideal.contains(member * q + member)


class TestPoissonIdeal:
    def test_quadratic_invariant_is_stable(self):
        ideal = CommIdeal(VARS, [4 * mono((1, 1, 0)) + mono((0, 0, 2))])
        assert is_poisson_ideal(ideal, b1())

    def test_pair_is_not_stable(self):
        # {e^2, f} = 2eh falls outside the plain ideal.
        ideal = CommIdeal(VARS, [mono((2, 0, 0)),
                                 4 * mono((1, 1, 0)) + mono((0, 0, 2))])
        algebra = b1()
        assert not is_poisson_ideal(ideal, algebra)
        bracket = poisson_bracket(algebra, mono((2, 0, 0)), v("f"))
        assert bracket == 2 * mono((1, 0, 1))
        assert not ideal.contains(bracket)

    def test_trivial_ideals_are_stable(self):
        algebra = b1()
        assert is_poisson_ideal(CommIdeal(VARS, []), algebra)
        assert is_poisson_ideal(CommIdeal(VARS, [CPoly.const(1, VARS)]), algebra)


class TestClosure:
    def test_golden_closure(self):
        closure = poisson_closure(
            CommIdeal(VARS, [mono((2, 0, 0)),
                             4 * mono((1, 1, 0)) + mono((0, 0, 2))]), b1())
        assert ideal_equal(closure, CommIdeal(VARS, DEG2_MONOMIALS))

    def test_stable_ideal_is_a_fixpoint(self):
        ideal = CommIdeal(VARS, [4 * mono((1, 1, 0)) + mono((0, 0, 2))])
        closure = poisson_closure(ideal, b1())
        assert ideal_equal(closure, ideal)

    def test_unit_ideal(self):
        ideal = CommIdeal(VARS, [CPoly.const(1, VARS)])
        assert ideal_equal(poisson_closure(ideal, b1()), ideal)

    def test_closure_properties_random(self):
        rng = random.Random(405)
        algebra = b1()
        for _ in range(100):
            gens = [random_cpoly(rng, VARS, max_degree=2, max_terms=2)
                    for _ in range(rng.randint(1, 2))]
            ideal = CommIdeal(VARS, gens)
            closure = poisson_closure(ideal, algebra)
            for g in gens:
                assert closure.contains(g)
            assert is_poisson_ideal(closure, algebra)
            assert ideal_equal(poisson_closure(closure, algebra), closure)
            if is_poisson_ideal(ideal, algebra):
                assert ideal_equal(closure, ideal)


class TestWitness:
    def test_golden_witness(self):
        closure = poisson_closure(
            CommIdeal(VARS, [mono((2, 0, 0)),
                             4 * mono((1, 1, 0)) + mono((0, 0, 2))]), b1())
        cert = nilpotent_nonprime_witness(closure, v("e"), 4)
        assert cert.verdict == "NotPrime"
        assert (cert.witness, cert.power) == (v("e"), 2)

    def test_member_is_inconclusive(self):
        cert = nilpotent_nonprime_witness(CommIdeal(VARS, [v("e")]), v("e"), 4)
        assert cert.verdict == "Inconclusive"
        assert cert.witness is None

    def test_no_power_lands_inside(self):
        ideal = CommIdeal(VARS, [4 * mono((1, 1, 0)) + mono((0, 0, 2))])
        cert = nilpotent_nonprime_witness(ideal, v("e"), 6)
        assert cert.verdict == "Inconclusive"

    def test_certificates_reverify(self):
        from sclim.ideals import PrimalityCertificate
        ideal = CommIdeal(VARS, [v("e")])
        with pytest.raises(ValueError):
            PrimalityCertificate("NotPrime", ideal, v("e"), 2)  # e is a member
        with pytest.raises(ValueError):
            PrimalityCertificate("NotPrime", ideal, v("f"), 2)  # f^2 is not


class TestIdealEqual:
    def test_order_of_generators_is_irrelevant(self):
        assert ideal_equal(CommIdeal(VARS, [v("e"), v("f")]),
                           CommIdeal(VARS, [v("f"), v("e")]))

    def test_different_ideals(self):
        assert not ideal_equal(CommIdeal(VARS, [v("e")]),
                               CommIdeal(VARS, [v("e") ** 2]))

    def test_scaling_is_irrelevant(self):
        assert ideal_equal(CommIdeal(VARS, [2 * v("e")]),
                           CommIdeal(VARS, [v("e")]))


# -- independent linear-algebra oracle ------------------------------------------


class TestClosureOracle:
    def test_degree_two_slice_matches_buchberger_route(self):
        algebra = b1()
        contains = degree_slice_basis(
            [mono((2, 0, 0)), 4 * mono((1, 1, 0)) + mono((0, 0, 2))],
            algebra, cap=2)
        for m in DEG2_MONOMIALS:
            assert contains(m)
        assert not contains(v("e"))
        assert not contains(CPoly.const(1, VARS))
