import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from reducibility.arith import Polynomial, parse_polynomial
from reducibility.errors import CeilingExceeded, NotInSemigroup, ZeroDivisorError
from reducibility.ideals import Ideal, colon_ideal
from reducibility.semigroup import (
    MonomialSubalgebra,
    colon_monomial_fastpath,
    membership,
    toric_presentation,
    transport_ideal,
)

GENS41 = [(5, 0), (4, 1), (1, 4), (0, 5)]
A41 = MonomialSubalgebra(GENS41)
VERONESE = MonomialSubalgebra([(2, 0), (1, 1), (0, 2)])
NUMERICAL = MonomialSubalgebra([(3,), (4,), (5,)], ("t",))
POINTS41 = oracles.semigroup_points(GENS41, 60)


def test_validation():
    with pytest.raises(ValueError):
        MonomialSubalgebra([(1, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        MonomialSubalgebra([(1, 1), (2, 2)])
    with pytest.raises(ValueError):
        MonomialSubalgebra([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        MonomialSubalgebra([(1, 0, 0), (0, 1)])
    assert A41.arity == 2 and A41.dimension == 2
    assert A41.pure_powers() == [(5, 0), (0, 5)]
    with pytest.raises(ValueError):
        MonomialSubalgebra([(1, 1), (2, 1)]).pure_powers()


def test_membership_matches_enumeration():
    for a in range(0, 45):
        for b in range(0, 45 - a):
            assert A41.contains((a, b)) == ((a, b) in POINTS41)
    assert not A41.contains((-1, 6))
    assert (3, 12) in A41 and (1, 1) not in A41


@settings(max_examples=60)
@given(st.integers(0, 40), st.integers(0, 40))
def test_membership_witness_is_sound(a, b):
    w = membership(A41, (a, b))
    assert w.found == ((a, b) in oracles.semigroup_points(GENS41, a + b))
    if w.found:
        counts = w.counts(len(GENS41))
        total = tuple(sum(c * g[j] for c, g in zip(counts, GENS41)) for j in range(2))
        assert total == (a, b)
        assert len(w.decomposition) == sum(counts)


def test_numerical_semigroup_gaps():
    assert [t for t in range(12) if not NUMERICAL.contains((t,))] == [1, 2]


def test_divides_and_minimalize():
    assert A41.divides((5, 0), (13, 2))
    assert not A41.divides((10, 0), (13, 2))
    assert A41.minimalize([(10, 0), (15, 0), (13, 2), (12, 3), (18, 2)]) == [(10, 0), (13, 2), (12, 3)]


def test_toric_presentation_of_example():
    R = A41.presentation
    names = R.names
    expected = [parse_polynomial(s, names) for s in
                ("a2*a3 - a1*a4", "a3^4 - a2*a4^3", "a1*a3^3 - a2^2*a4^2", "a1^2*a3^2 - a2^3*a4", "a2^4 - a1^3*a3")]
    assert Ideal(R.ambient(), R.relations) == Ideal(R.ambient(), expected)
    assert R.dimension == 2


@pytest.mark.parametrize("A", [A41, VERONESE, NUMERICAL, MonomialSubalgebra([(2, 0), (0, 3), (1, 1)])],
                         ids=["ex41", "veronese", "numerical", "mixed"])
def test_toric_relations_against_lattice_enumeration(A):
    R = toric_presentation(A)
    amb = Ideal(R.ambient(), R.relations)
    for r in R.relations:
        images = {tuple(sum(e * g[j] for e, g in zip(m, A.generators)) for j in range(A.arity)) for m in r.monomials()}
        assert len(images) == 1 and len(r) == 2
    for u, v in oracles.lattice_relations(A.generators, 6):
        assert amb.contains(Polynomial.monomial(u) - Polynomial.monomial(v))


def test_ambient_and_presentation_maps():
    f = A41.parse_ambient("s^13*t^2 - 3*s^10")
    g = A41.to_presentation(f)
    assert A41.to_ambient(g) == f
    with pytest.raises(NotInSemigroup):
        A41.to_presentation(A41.parse_ambient("s*t"))
    I = transport_ideal(A41, ["s^10", "t^10"])
    assert A41.monomial_generators(I) == [(10, 0), (0, 10)]
    assert A41.monomial_generators(transport_ideal(A41, ["s^5 + t^5"])) is None


def test_points_up_to():
    pts = A41.points_up_to(10)
    assert set(pts) == {p for p in POINTS41 if sum(p) <= 10}


def test_fastpath_paper_colons():
    assert colon_monomial_fastpath(A41, [(10, 0)], [(0, 20)]) == [(10, 0), (13, 2), (12, 3)]
    assert colon_monomial_fastpath(A41, [(20, 0)], [(0, 20)]) == [(20, 0), (23, 2), (22, 3)]
    assert colon_monomial_fastpath(A41, [(10, 0)], GENS41) == [(10, 0), (17, 3), (13, 7)]


def test_fastpath_errors():
    with pytest.raises(NotInSemigroup):
        colon_monomial_fastpath(A41, [(1, 1)], [(5, 0)])
    with pytest.raises(ZeroDivisorError):
        colon_monomial_fastpath(A41, [(5, 0)], [])
    assert colon_monomial_fastpath(A41, [], [(5, 0)]) == []
    with pytest.raises(CeilingExceeded):
        colon_monomial_fastpath(A41, [(10, 0)], [(0, 20)], ceiling=30)


MONOS41 = sorted(p for p in POINTS41 if 0 < sum(p) <= 25)


@settings(max_examples=12)
@given(st.lists(st.sampled_from(MONOS41), min_size=1, max_size=2), st.sampled_from(MONOS41))
def test_three_colon_paths_agree(I, j):
    # lattice fast path, Groebner colon on the toric presentation, and the brute-force oracle
    fast = colon_monomial_fastpath(A41, I, [j])
    oracle = A41.minimalize(oracles.lattice_colon(GENS41, I, [j], 80))
    R = A41.presentation
    gb = colon_ideal(Ideal(R, [A41.to_presentation(Polynomial.monomial(m)) for m in I]),
                     Ideal(R, [A41.to_presentation(Polynomial.monomial(j))]))
    assert fast == oracle == A41.monomial_generators(gb)
