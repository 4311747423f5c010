from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reducibility.arith import Polynomial, parse_polynomial
from reducibility.errors import RingMismatch, ZeroDivisorError
from reducibility.ideals import (
    Ideal,
    RingPresentation,
    colon_element,
    colon_ideal,
    eliminate,
    ideal_sum,
    intersect,
    saturate,
)

from strategies import monomial_exponents

Q3 = RingPresentation(("x", "y", "z"))


def ideal(R, *gens):
    return R.ideal(*gens)


def test_ring_validation():
    with pytest.raises(ValueError):
        RingPresentation(("x", "x"))
    with pytest.raises(ValueError):
        RingPresentation(("x",), [parse_polynomial("1", ("x",))])
    R = RingPresentation(("x", "y"), [parse_polynomial("x*y", ("x", "y"))])
    assert R == RingPresentation(("x", "y"), [parse_polynomial("x*y", ("x", "y"))])
    assert R.is_zero(R.parse("x^2*y"))
    assert R.dimension == 1
    assert Q3.dimension == 3


def test_membership_and_equality():
    I = ideal(Q3, "x^2", "x*y")
    assert I.contains(Q3.parse("x^3 + x*y*z"))
    assert Q3.parse("y") not in I
    assert I == ideal(Q3, "x*y", "x^2", "x^2 + x*y")
    assert I != ideal(Q3, "x")
    assert I.witness_not_contained(ideal(Q3, "x")) == Q3.parse("x")
    assert ideal(Q3, "x").witness_not_contained(I) is None


def test_quotient_ring_ideal_calculus():
    R = RingPresentation(("x", "y"), [parse_polynomial(s, ("x", "y")) for s in ("x^2", "x*y")])
    zero = R.zero_ideal()
    assert zero.is_zero()
    assert ideal(R, "x^3", "x*y").is_zero()
    # (0 : x) = (x, y) and (0 : y) = (x)
    assert colon_element(zero, R.parse("x")) == ideal(R, "x", "y")
    assert colon_element(zero, R.parse("y")) == ideal(R, "x")
    with pytest.raises(ZeroDivisorError):
        colon_element(zero, R.parse("x*y"))
    sat, e = saturate(zero, R.maximal_ideal)
    assert sat == ideal(R, "x") and e == 1


def test_examples():
    I, J = ideal(Q3, "x^2", "y"), ideal(Q3, "x", "y^2")
    assert intersect(I, J) == ideal(Q3, "x^2", "x*y", "y^2")
    assert colon_ideal(ideal(Q3, "x^2*y", "x*y^2"), ideal(Q3, "x*y")) == ideal(Q3, "x", "y")
    assert colon_ideal(ideal(Q3, "x^3", "y"), ideal(Q3, "x", "y")) == ideal(Q3, "x^2", "y")
    assert colon_ideal(ideal(Q3, "x^3"), ideal(Q3, "x", "y")) == ideal(Q3, "x^3")
    sat, e = saturate(ideal(Q3, "x^3*y", "x^2*z"), ideal(Q3, "x"))
    assert sat == ideal(Q3, "y", "z") and e == 3
    assert ideal_sum(I, J, ideal(Q3, "z")) == ideal(Q3, "x", "y", "z")
    assert (ideal(Q3, "x") * ideal(Q3, "y")) == ideal(Q3, "x*y")
    assert ideal(Q3, "x", "y") ** 2 == ideal(Q3, "x^2", "x*y", "y^2")
    # non-monomial
    assert intersect(ideal(Q3, "x - y"), ideal(Q3, "x + y")) == ideal(Q3, "x^2 - y^2")
    assert colon_element(ideal(Q3, "x^2 - y^2"), Q3.parse("x - y")) == ideal(Q3, "x + y")


def test_colon_by_unit_and_zero():
    I = ideal(Q3, "x*y")
    assert colon_ideal(I, Q3.unit_ideal()) == I
    with pytest.raises(ZeroDivisorError):
        colon_ideal(I, Q3.zero_ideal())
    assert intersect(I, Q3.zero_ideal()).is_zero()


def test_ring_mismatch():
    other = RingPresentation(("x", "y", "w"))
    with pytest.raises(RingMismatch):
        intersect(ideal(Q3, "x"), ideal(other, "x"))


def test_eliminate():
    names = ("t", "x", "y")
    R = RingPresentation(names)
    I = Ideal(R, [parse_polynomial(s, names) for s in ("x - t^2", "y - t^3")])
    E = eliminate(I, [0])
    assert E.ring.names == ("x", "y")
    assert E == E.ring.ideal("x^3 - y^2")


def test_minimalized():
    I = ideal(Q3, "x^2", "x^2*y", "x*y", "x^2 + x*y")
    assert sorted(str(g) for g in I.minimalized().generators) == sorted(str(g) for g in ideal(Q3, "x^2", "x*y").generators)


def _mono(R, exps):
    return Ideal(R, [Polynomial.monomial(e) for e in exps])


def _brute_colon(I_exps, J_exps, bound=6):
    """Monomials of degree <= bound whose products with every generator of J land in I."""
    def in_ideal(m):
        return any(all(a >= b for a, b in zip(m, g)) for g in I_exps)

    return {m for m in product(range(bound + 1), repeat=3)
            if all(in_ideal(tuple(a + b for a, b in zip(m, j))) for j in J_exps)}


@settings(max_examples=25)
@given(monomial_exponents(3, 3), monomial_exponents(3, 2, max_size=2))
def test_monomial_colon_matches_brute_force(I_exps, J_exps):
    I, J = _mono(Q3, I_exps), _mono(Q3, J_exps)
    C = colon_ideal(I, J)
    members = _brute_colon(I_exps, J_exps)
    for m in product(range(4), repeat=3):
        assert C.contains(Polynomial.monomial(m)) == (m in members)


@settings(max_examples=25)
@given(monomial_exponents(3, 3), monomial_exponents(3, 3), st.booleans())
def test_colon_and_intersection_properties(I_exps, J_exps, twist):
    I, J = _mono(Q3, I_exps), _mono(Q3, J_exps)
    if twist:
        I = I + Ideal(Q3, [Q3.parse("x*y - z^2")])
    M = intersect(I, J)
    assert I.contains_ideal(M) and J.contains_ideal(M)
    assert M.contains_ideal(I * J)
    C = colon_ideal(I, J)
    assert C.contains_ideal(I)
    assert I.contains_ideal(C * J)
    sat, e = saturate(I, J)
    assert sat.contains_ideal(C)
    assert colon_ideal(sat, J) == sat
    assert e >= 0
