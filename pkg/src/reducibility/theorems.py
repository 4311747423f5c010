"""Mechanical checks of the unmixed-component identities on concrete rings.

Every checker returns a :class:`Verdict`. A ``fail`` carries a polynomial
witness together with the ideal it lies outside of, so the failure can be
replayed with a single membership test. Hypotheses that cannot be confirmed
by computation give ``skipped``, never a guess.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Sequence

from .arith import Polynomial
from .errors import AlgebraError, HypothesisViolation
from .ideals import Ideal, RingPresentation, colon_element, colon_ideal, intersect, saturate
from .localcoh import (
    goto_suzuki_bound,
    h0_socdim,
    hr_socdim_via_unmixed,
    regular_sequence_failure,
    stabilization_experiment,
)
from .quotient import index_of_reducibility, is_parameter_ideal

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
PERMUTATION_SAMPLES = 24


@dataclass
class Verdict:
    name: str
    status: str
    detail: str = ""
    witness: Polynomial | None = None
    outside: Ideal | None = None
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def reproduce(self) -> bool:
        """Re-run the membership test behind a failure; True when it still fails."""
        if self.witness is None or self.outside is None:
            return False
        return not self.outside.contains(self.witness)

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail, "data": self.data}
        if self.witness is not None:
            out["witness"] = self.outside.ring.format(self.witness)
            out["outside"] = self.outside.minimalized().format()
        return out


@dataclass
class SopWitness:
    """A system of parameters ``x_1..x_d`` and a claimed standard ideal containing it."""

    ring: RingPresentation
    elements: tuple
    standard_ideal: tuple = ()
    seed: int = 0

    def __post_init__(self):
        self.elements = tuple(self.elements)
        self.standard_ideal = tuple(self.standard_ideal) or self.elements

    @property
    def d(self) -> int:
        return len(self.elements)

    @cached_property
    def a(self) -> Ideal:
        return Ideal(self.ring, self.standard_ideal)

    def ideal(self, indices: Sequence[int] | None = None) -> Ideal:
        if indices is None:
            return Ideal(self.ring, self.elements)
        return Ideal(self.ring, [self.elements[i] for i in indices])

    def validate(self) -> list[str]:
        problems = []
        if not is_parameter_ideal(self.ideal(), self.ring):
            problems.append("elements do not generate a parameter ideal")
        for x in self.elements:
            if not self.a.contains(x):
                problems.append(f"{self.ring.format(x)} is not in the standard ideal")
        return problems

    @cached_property
    def standard_verdict(self) -> Verdict:
        return check_standard_sop(self, seed=self.seed)

    def unmixed(self, indices: Sequence[int]) -> Ideal:
        """``U((x_i : i in indices))`` as the m-saturation."""
        return _unmixed(self.ring, tuple(self.elements[i] for i in indices))


@lru_cache(maxsize=256)
def _unmixed(R: RingPresentation, gens: tuple) -> Ideal:
    return saturate(Ideal(R, gens), R.maximal_ideal)[0]


def _compare(name: str, lhs: Ideal, rhs: Ideal, label: str, data: dict | None = None) -> Verdict:
    w = rhs.witness_not_contained(lhs)
    if w is not None:
        return Verdict(name, FAIL, f"{label}: left side has an element outside the right side", w, rhs, data or {})
    w = lhs.witness_not_contained(rhs)
    if w is not None:
        return Verdict(name, FAIL, f"{label}: right side has an element outside the left side", w, lhs, data or {})
    return Verdict(name, PASS, label, data=data or {})


def _hypothesis(w: SopWitness, name: str) -> Verdict | None:
    problems = w.validate()
    if problems:
        return Verdict(name, SKIPPED, "hypothesis unverified: " + "; ".join(problems))
    if not w.standard_verdict.passed:
        return Verdict(name, SKIPPED, "hypothesis unverified: standard system of parameters")
    return None


# ---------- standard systems of parameters ----------

def _weak_sequence_checks(w: SopWitness, seq: Sequence[Polynomial], label: str, cache: dict):
    R = w.ring
    for i, x in enumerate(seq):
        prefix = tuple(seq[:i])
        P = Ideal(R, prefix)
        lhs = colon_element(P, x)
        if prefix not in cache:
            cache[prefix] = colon_ideal(P, w.a)
        yield f"{label} i={i + 1}", lhs, cache[prefix]


def check_standard_sop(w: SopWitness, samples: int = PERMUTATION_SAMPLES, seed: int = 0) -> Verdict:
    """Colon equalities ``((x_1..x_{i-1}) : x_i) = ((x_1..x_{i-1}) : a)``.

    With ``d = 2`` the sequences ``{x^a, y^b}``, ``a, b in {1, 2}``, are
    tested in both orders; otherwise every permutation of the sequence is
    tested (a seeded sample of ``samples`` permutations when ``d > 4``).
    """
    name = "standard_sop"
    if w.d < 1:
        raise ValueError("a system of parameters needs at least one element")
    problems = w.validate()
    if problems:
        return Verdict(name, SKIPPED, "hypothesis unverified: " + "; ".join(problems))
    R, xs = w.ring, w.elements
    sequences = []
    if w.d == 2:
        x, y = xs
        for a, b in ((1, 1), (2, 1), (1, 2), (2, 2)):
            sequences.append((f"(x^{a}, y^{b})", (x**a, y**b)))
        for a, b in ((1, 1), (2, 1), (1, 2), (2, 2)):
            sequences.append((f"(y^{b}, x^{a})", (y**b, x**a)))
    else:
        perms = list(permutations(range(w.d))) if w.d <= 4 else None
        if perms is None:
            rng = random.Random(seed)
            perms = [tuple(rng.sample(range(w.d), w.d)) for _ in range(samples)]
        for p in perms:
            sequences.append((f"perm{p}", tuple(xs[i] for i in p)))
    cache: dict = {}
    checked = []
    for label, seq in sequences:
        for sub, lhs, rhs in _weak_sequence_checks(w, seq, label, cache):
            v = _compare(name, lhs, rhs, sub)
            checked.append(sub)
            if not v.passed:
                v.data = {"checked": checked}
                return v
    return Verdict(name, PASS, f"{len(checked)} colon equalities hold", data={"checked": checked})


def four_sequence_colons(w: SopWitness) -> list[tuple[str, Ideal, Ideal]]:
    """The colons ``(x^a : y^b)`` and ``(x^a : a)`` for ``a, b in {1, 2}`` (``d = 2``)."""
    if w.d != 2:
        raise ValueError("the four-sequence criterion needs d = 2")
    x, y = w.elements
    out = []
    for a, b in ((1, 1), (2, 1), (1, 2), (2, 2)):
        P = Ideal(w.ring, [x**a])
        out.append((f"(x^{a} : y^{b})", colon_element(P, y**b), colon_ideal(P, w.a)))
    return out


# ---------- unmixed components ----------

def check_unmixed_equals_colon(w: SopWitness, r: int) -> Verdict:
    """``U((x_1..x_{r-1})) = ((x_1..x_{r-1}) : x_r)``."""
    name = f"unmixed_equals_colon[r={r}]"
    if not 1 <= r <= w.d:
        raise ValueError(f"r must lie in [1, {w.d}]")
    skip = _hypothesis(w, name)
    if skip:
        return skip
    N = w.ideal(range(r - 1))
    return _compare(name, w.unmixed(range(r - 1)), colon_element(N, w.elements[r - 1]), "saturation vs colon")


def check_colon_to_unmixeds(w: SopWitness, r: int, exponents: Sequence[int]) -> Verdict:
    """``((x_i^(n_i+1)) : prod x_i^n_i) = (x_1..x_r) + sum_i U(x_1..^x_i..x_r)``."""
    name = f"colon_to_unmixeds[r={r},n={tuple(exponents)}]"
    if len(exponents) != r or not 1 <= r <= w.d or min(exponents) < 1:
        raise ValueError("need r exponents, each at least 1, with 1 <= r <= d")
    skip = _hypothesis(w, name)
    if skip:
        return skip
    R, xs = w.ring, w.elements[:r]
    powers = Ideal(R, [x ** (n + 1) for x, n in zip(xs, exponents)])
    product = R.one()
    for x, n in zip(xs, exponents):
        product = product * x**n
    lhs = colon_element(powers, product)
    rhs = w.ideal(range(r))
    for i in range(r):
        rhs = rhs + w.unmixed([j for j in range(r) if j != i])
    return _compare(name, lhs, rhs, "colon vs sum of unmixed components")


def check_bust_up_unmixed(w: SopWitness, r: int) -> Verdict:
    """``U((x_1..x_r)) = (x_1..x_r) + sum_i U(x_1..^x_i..x_r)`` when ``H^r = 0``."""
    name = f"bust_up_unmixed[r={r}]"
    if not 1 <= r <= w.d - 1:
        raise ValueError(f"r must lie in [1, {w.d - 1}]")
    skip = _hypothesis(w, name)
    if skip:
        return skip
    try:
        socdim = hr_socdim_via_unmixed(w.ring, w.elements[:r])
    except (HypothesisViolation, AlgebraError) as exc:
        return Verdict(name, SKIPPED, f"hypothesis unverified: H^{r} = 0 ({exc})")
    if socdim != 0:
        return Verdict(name, SKIPPED, f"hypothesis fails: socdim H^{r} = {socdim}", data={"socdim": socdim})
    rhs = w.ideal(range(r))
    for i in range(r):
        rhs = rhs + w.unmixed([j for j in range(r) if j != i])
    return _compare(name, w.unmixed(range(r)), rhs, "unmixed component vs busted-up sum")


def check_unmixed_intersect(w: SopWitness, r: int, n: int) -> Verdict:
    """``U((x_1..x_r)) ∩ (x_1..x_{r+n}) = (x_1..x_r)``."""
    name = f"unmixed_intersect[r={r},n={n}]"
    if not (0 <= r < w.d and n >= 0 and r + n <= w.d):
        raise ValueError("need 0 <= r < d and r + n <= d")
    skip = _hypothesis(w, name)
    if skip:
        return skip
    lhs = intersect(w.unmixed(range(r)), w.ideal(range(r + n)))
    return _compare(name, lhs, w.ideal(range(r)), "intersection vs parameter ideal")


def check_sum_direct(w: SopWitness, r: int) -> Verdict:
    """``U((x_1..x_r)) ∩ sum_{i<=r} U(x_1..^x_i..x_d)`` lies in ``(x_1..x_r)``."""
    name = f"sum_direct[r={r}]"
    if not 1 <= r <= w.d:
        raise ValueError(f"r must lie in [1, {w.d}]")
    skip = _hypothesis(w, name)
    if skip:
        return skip
    R = w.ring
    h0, _ = h0_socdim(R)
    if h0 != 0:
        return Verdict(name, SKIPPED, "hypothesis fails: depth is zero", data={"h0_socdim": h0})
    failure = regular_sequence_failure(R, w.elements[:r])
    if failure is not None:
        return Verdict(name, SKIPPED, f"hypothesis unverified: depth >= {r}")
    total = None
    for i in range(r):
        U = w.unmixed([j for j in range(w.d) if j != i])
        total = U if total is None else total + U
    lhs = intersect(w.unmixed(range(r)), total)
    target = w.ideal(range(r))
    witness = target.witness_not_contained(lhs)
    if witness is not None:
        return Verdict(name, FAIL, "intersection not contained in the parameter ideal", witness, target)
    return Verdict(name, PASS, "intersection contained in the parameter ideal")


def check_positive_depth_reduction(R: RingPresentation, q: Ideal) -> Verdict:
    """``index(q; R) = socdim R + index(q; R/W)`` with ``W = H^0_m(R)``."""
    name = "positive_depth_reduction"
    if not is_parameter_ideal(q, R):
        raise ValueError(f"{q.format()} is not a parameter ideal")
    W, _ = saturate(R.zero_ideal(), R.maximal_ideal)
    socdim_R, _ = h0_socdim(R)
    reduced = R.quotient(W.generators)
    lhs = index_of_reducibility(q)
    rhs_index = index_of_reducibility(Ideal(reduced, q.generators))
    data = {"index": lhs, "socdim": socdim_R, "index_mod_torsion": rhs_index}
    if lhs == socdim_R + rhs_index:
        return Verdict(name, PASS, f"{lhs} = {socdim_R} + {rhs_index}", data=data)
    return Verdict(name, FAIL, f"{lhs} != {socdim_R} + {rhs_index}", data=data)


def positive_depth_threshold(R: RingPresentation, family: Sequence[tuple[int, Ideal]]) -> tuple[int | None, list[Verdict]]:
    """Smallest sampled power from which the positive-depth identity holds for the rest of the family."""
    verdicts = [check_positive_depth_reduction(R, q) for _, q in family]
    threshold = None
    for (k, _), v in reversed(list(zip(family, verdicts))):
        if not v.passed:
            break
        threshold = k
    return threshold, verdicts


def check_main_theorem(
    R: RingPresentation,
    family: Sequence[tuple[int, Ideal]],
    socdims: Sequence[int | None],
    witness: SopWitness | None = None,
) -> Verdict:
    """Compare the eventual index along ``family`` with ``sum C(d,i) socdim H^i``."""
    name = "main_theorem"
    d = R.dimension
    table = stabilization_experiment(family)
    data = {"table": [list(r) for r in table.rows], "stable": table.stable, "stable_value": table.stable_value}
    reasons = []
    if d >= 2:
        if witness is None or not witness.standard_verdict.passed:
            reasons.append("finite local cohomologies not confirmed by a standard system of parameters")
    if len(socdims) != d + 1 or any(s is None for s in socdims):
        reasons.append("local cohomology socle dimensions incomplete")
    else:
        middle = [i for i in range(1, d) if socdims[i]]
        if len(middle) > 1:
            reasons.append(f"more than one nonvanishing middle local cohomology: {middle}")
    if reasons:
        return Verdict(name, SKIPPED, "hypothesis unverified: " + "; ".join(reasons) + "; observation recorded", data=data)
    bound = goto_suzuki_bound(d, socdims)
    data["bound"] = bound
    if table.stable and table.stable_value == bound:
        return Verdict(name, PASS, f"stable index {table.stable_value} equals bound {bound}", data=data)
    return Verdict(name, FAIL, f"stable={table.stable} value={table.stable_value} bound={bound}", data=data)


# ---------- suite ----------

SUITE_NAMES = (
    "standard_sop",
    "unmixed_equals_colon",
    "colon_to_unmixeds",
    "bust_up_unmixed",
    "unmixed_intersect",
    "sum_direct",
    "positive_depth_reduction",
    "main_theorem",
)


def run_suite(
    w: SopWitness,
    names: Sequence[str] = SUITE_NAMES,
    socdims: Sequence[int | None] | None = None,
    family_powers: Sequence[int] = (1, 2, 3, 4),
) -> list[Verdict]:
    """Run the named checkers with default parameters; results sorted by verdict name."""
    unknown = set(names) - set(SUITE_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    R, d = w.ring, w.d
    out: list[Verdict] = []
    if "standard_sop" in names:
        out.append(w.standard_verdict)
    if "unmixed_equals_colon" in names:
        out += [check_unmixed_equals_colon(w, r) for r in range(1, d + 1)]
    if "colon_to_unmixeds" in names:
        if d >= 2:
            out += [check_colon_to_unmixeds(w, 2, n) for n in ((1, 1), (2, 1))]
        out.append(check_colon_to_unmixeds(w, 1, (1,)))
    if "bust_up_unmixed" in names:
        out += [check_bust_up_unmixed(w, r) for r in range(1, d)]
    if "unmixed_intersect" in names:
        out += [check_unmixed_intersect(w, r, n) for r in range(d) for n in (0, 1) if r + n <= d]
    if "sum_direct" in names:
        out += [check_sum_direct(w, r) for r in range(1, d)]
    family = [(k, Ideal(R, [x**k for x in w.elements])) for k in family_powers]
    if "positive_depth_reduction" in names:
        out += [check_positive_depth_reduction(R, family[-1][1])]
    if "main_theorem" in names:
        out.append(check_main_theorem(R, family, socdims or [None] * (d + 1), w))
    return sorted(out, key=lambda v: v.name)
