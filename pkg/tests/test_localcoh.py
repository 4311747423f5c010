import pytest

import oracles
from reducibility.arith import parse_polynomial
from reducibility.errors import CeilingExceeded, HypothesisViolation
from reducibility.ideals import Ideal, RingPresentation
from reducibility.localcoh import (
    LaurentClass,
    StabilizationTable,
    cohomology_report,
    goto_suzuki_bound,
    h0_socdim,
    hd_socle_cech,
    hr_socdim_via_unmixed,
    is_regular_sequence,
    power_family,
    regular_sequence_failure,
    stabilization_experiment,
    torsion_submodule,
    unmixed_component,
)
from reducibility.semigroup import MonomialSubalgebra

A41 = MonomialSubalgebra([(5, 0), (4, 1), (1, 4), (0, 5)])


def ring(names, *rels):
    return RingPresentation(names, [parse_polynomial(r, names) for r in rels])


def sop41():
    return [A41.to_presentation(A41.parse_ambient(s)) for s in ("s^10", "t^10")]


def test_laurent_formatting():
    assert LaurentClass((-1, -4)).format() == "1/s*t^4"
    assert LaurentClass((3, -2)).format() == "s^3/t^2"
    assert LaurentClass((2, 0)).format() == "s^2"


def test_h0_of_embedded_point():
    R = ring(("x", "y"), "x^2", "x*y")
    socdim, e = h0_socdim(R)
    assert socdim == 1 == sum(oracles.graded_socle_dims(2, [oracles.poly("x^2", ["x", "y"]), oracles.poly("x*y", ["x", "y"])], 6))
    assert e == 1
    assert torsion_submodule(R) == R.ideal("x")
    assert h0_socdim(RingPresentation(("x", "y")))[0] == 0


def test_regular_sequences():
    R = ring(("x", "y"), "x^2", "x*y")
    assert not is_regular_sequence(R, [R.parse("y")])
    i, w = regular_sequence_failure(R, [R.parse("y")])
    assert i == 0 and R.format(w) == "x"
    assert is_regular_sequence(RingPresentation(("x", "y")), [parse_polynomial(s, ("x", "y")) for s in ("x", "y")])
    # a sequence generating the unit ideal is not regular
    assert regular_sequence_failure(RingPresentation(("x",)), [parse_polynomial("2", ("x",))])[0] == 0


def test_unmixed_component_and_h1():
    R = A41.presentation
    x, y = sop41()
    U = unmixed_component(Ideal(R, [x]), y)
    assert A41.monomial_generators(U) == [(10, 0), (13, 2), (12, 3)]
    assert hr_socdim_via_unmixed(R, [x]) == 2
    with pytest.raises(ValueError):
        hr_socdim_via_unmixed(R, [x, y])
    # (xy : y) = (x) but (xy) is already m-saturated
    E = RingPresentation(("x", "y"))
    with pytest.raises(HypothesisViolation):
        unmixed_component(E.ideal("x*y"), E.parse("y"))


@pytest.mark.parametrize("gens,expected", [
    ([(5, 0), (4, 1), (1, 4), (0, 5)], [(-1, -4), (-2, -3), (-3, -2), (-4, -1)]),
    ([(2, 0), (1, 1), (0, 2)], [(-1, -1)]),
    ([(1, 0), (0, 1)], [(-1, -1)]),
    ([(3, 0), (2, 1), (0, 3)], None),
], ids=["ex41", "veronese", "polynomial", "non-normal"])
def test_cech_socle_matches_bruteforce(gens, expected):
    A = MonomialSubalgebra(gens)
    res = hd_socle_cech(A)
    found = [c.exponents for c in res.socle]
    units = A.pure_powers()
    brute = oracles.cech_socle_bruteforce(gens, units, 2 * max(sum(g) for g in gens) + 4, 12 * max(sum(g) for g in gens))
    assert found == brute
    if expected is not None:
        assert found == expected
    assert res.window == 2 * res.previous_window


def test_cech_arity_one_gives_pseudo_frobenius():
    assert [c.exponents for c in hd_socle_cech(MonomialSubalgebra([(3,), (4,), (5,)], ("t",))).socle] == [(2,), (1,)]
    assert [c.exponents for c in hd_socle_cech(MonomialSubalgebra([(2,), (3,)], ("t",))).socle] == [(1,)]


def test_cech_ceiling():
    with pytest.raises(CeilingExceeded):
        hd_socle_cech(A41, ceiling=30)
    with pytest.raises(ValueError):
        hd_socle_cech(MonomialSubalgebra([(1, 0, 0), (0, 1, 0), (0, 0, 1)], ("a", "b", "c")))


def test_goto_suzuki_bound():
    assert goto_suzuki_bound(2, [0, 2, 4]) == 8
    assert goto_suzuki_bound(3, [1, 1, 1, 1]) == 8
    with pytest.raises(ValueError):
        goto_suzuki_bound(2, [0, 2])
    with pytest.raises(ValueError):
        goto_suzuki_bound(2, [0, None, 1])


def test_cohomology_report_example():
    rep = cohomology_report(A41.presentation, sop41(), A41, label="A")
    assert rep.socdims() == [0, 2, 4]
    assert rep.goto_suzuki_bound == 8
    assert [e.method for e in rep.entries] == ["saturation", "unmixed-quotient", "cech-lattice"]
    assert rep.entries[1].stabilization_exponent == 2
    assert rep.to_dict()["cech_socle"] == ["1/s*t^4", "1/s^2*t^3", "1/s^3*t^2", "1/s^4*t"]
    assert not rep.ceiling_hit


def test_cohomology_report_cm_and_missing():
    names = ("a", "b", "c", "d")
    segre = ring(names, "a*d - b*c")
    sop = [segre.parse(s) for s in ("a", "d", "b - c")]
    rep = cohomology_report(segre, sop)
    assert rep.socdims() == [0, 0, 0, 1] and rep.entries[-1].method == "cm-type"
    bare = cohomology_report(segre)
    assert bare.goto_suzuki_bound is None
    capped = cohomology_report(A41.presentation, sop41(), A41, cech_ceiling=30)
    assert capped.ceiling_hit and capped.socdims()[2] is None


def test_non_standard_sop_blocks_middle_cohomology():
    names = ("x", "y1", "y2")
    R = ring(names, "x*y1", "x*y2")
    rep = cohomology_report(R, [R.parse("y1 - x"), R.parse("y2")])
    assert rep.socdims()[0] == 0
    assert rep.socdims()[1] is None
    assert "not standard" in rep.entries[1].note


def test_stabilization_table():
    R = A41.presentation
    fam = power_family(R, [A41.to_presentation(A41.parse_ambient(s)) for s in ("s^5", "t^5")], [1, 2, 3, 4, 5])
    table = stabilization_experiment(fam, bound=8)
    assert [v for _, v in table.rows] == [2, 4, 8, 8, 8]
    assert table.stable and table.stable_value == 8 and table.matches_bound
    assert table.to_dict()["matches_bound"] is True
    short = StabilizationTable([(1, 2), (2, 4)], False, None, 8)
    assert not short.matches_bound
