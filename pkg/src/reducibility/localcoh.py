"""Socle dimensions of local cohomology modules of graded rings.

* ``H^0``: the ``m``-torsion ``(0 : m^inf)``, found by saturation.
* ``H^r`` (``0 < r < d``): ``Soc(R/(x_1..x_r))`` for a regular prefix of a
  system of parameters inside a standard ideal.
* ``H^d``: the top Cech cohomology of a monomial subalgebra, scanned over
  Laurent lattice points.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Sequence

from .arith import Polynomial, format_monomial
from .errors import AlgebraError, CeilingExceeded, HypothesisViolation
from .ideals import Ideal, RingPresentation, colon_element, colon_ideal, saturate
from .quotient import finite_length_submodule_dim, index_of_reducibility
from .semigroup import MonomialSubalgebra

DEFAULT_CECH_CEILING = 640


@dataclass(frozen=True)
class LaurentClass:
    """A Laurent monomial ``s^a t^b`` (signed exponents) in a localization of a subalgebra."""

    exponents: tuple
    localization: str = "uv"

    def format(self, names: Sequence[str] = ("s", "t")) -> str:
        num = tuple(max(e, 0) for e in self.exponents)
        den = tuple(max(-e, 0) for e in self.exponents)
        top = format_monomial(num, names)
        if not any(den):
            return top
        bottom = format_monomial(den, names)
        return f"{top}/{bottom}" if any(num) else f"1/{bottom}"


@dataclass
class CohomologyEntry:
    index: int
    socdim: int | None
    method: str
    bound: int | None = None
    stabilization_exponent: int | None = None
    note: str = ""


@dataclass
class CohomologyReport:
    ring: str
    dimension: int
    entries: list = field(default_factory=list)
    goto_suzuki_bound: int | None = None
    cech_socle: list = field(default_factory=list)

    def socdims(self) -> list:
        return [e.socdim for e in self.entries]

    @property
    def ceiling_hit(self) -> bool:
        return any(e.note.startswith("ceiling exceeded") for e in self.entries)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["cech_socle"] = [c.format() if isinstance(c, LaurentClass) else c for c in self.cech_socle]
        return out


def h0_socdim(R: RingPresentation) -> tuple[int, int]:
    """Socle dimension of ``H^0_m(R)`` and the saturation exponent of ``(0 : m^inf)``."""
    zero, m = R.zero_ideal(), R.maximal_ideal
    torsion, exponent = saturate(zero, m)
    socle = colon_ideal(zero, m)
    if not torsion.contains_ideal(socle):
        raise HypothesisViolation("socle of R is not inside its m-torsion")
    return finite_length_submodule_dim(zero, socle), exponent


def torsion_submodule(R: RingPresentation) -> Ideal:
    return saturate(R.zero_ideal(), R.maximal_ideal)[0]


def unmixed_component(N: Ideal, x: Polynomial) -> Ideal:
    """``U(N)`` as ``(N : x)``, cross-checked against the saturation ``(N : m^inf)``."""
    colon = colon_element(N, x)
    sat, _ = saturate(N, N.ring.maximal_ideal)
    if not colon.equals(sat):
        raise HypothesisViolation(
            f"(N : x) = {colon.minimalized().format()} differs from the m-saturation "
            f"{sat.minimalized().format()}"
        )
    return colon


def regular_sequence_failure(R: RingPresentation, seq: Sequence[Polynomial]) -> tuple[int, Polynomial] | None:
    """First index ``i`` with ``((x_1..x_{i-1}) : x_i) != (x_1..x_{i-1})`` and a witness, or None."""
    for i, x in enumerate(seq):
        prefix = Ideal(R, seq[:i])
        colon = colon_element(prefix, x)
        witness = prefix.witness_not_contained(colon)
        if witness is not None:
            return i, witness
        if Ideal(R, seq[: i + 1]).is_unit():
            return i, R.one()
    return None


def is_regular_sequence(R: RingPresentation, seq: Sequence[Polynomial]) -> bool:
    return regular_sequence_failure(R, seq) is None


def hr_socdim_via_unmixed(R: RingPresentation, prefix: Sequence[Polynomial]) -> int:
    """``dim_k ((x_1..x_r) : m)/(x_1..x_r)``, the socle dimension of ``H^r_m(R)``.

    Valid when the prefix is a regular sequence inside a standard ideal; the
    regular-sequence part is checked here.
    """
    r = len(prefix)
    if not 1 <= r < R.dimension:
        raise ValueError(f"prefix length {r} must lie in [1, {R.dimension - 1}]")
    failure = regular_sequence_failure(R, prefix)
    if failure is not None:
        i, w = failure
        raise HypothesisViolation(f"element {i + 1} of the prefix is a zero divisor modulo the earlier ones (witness {R.format(w)})")
    q = Ideal(R, prefix)
    return finite_length_submodule_dim(q, colon_ideal(q, R.maximal_ideal))


# ---------- Cech lattice search ----------

class _CechLattice:
    def __init__(self, A: MonomialSubalgebra):
        self.A = A
        self.units = A.pure_powers()
        self.n = A.arity

    def in_localization(self, p: tuple, inverted: frozenset, shift: int) -> bool:
        """``p`` in the log-set of ``A[1/prod u_i, i in inverted]``, tested at two shift counts."""
        for N in (shift, 2 * shift):
            q = list(p)
            for i in inverted:
                q = [a + N * b for a, b in zip(q, self.units[i])]
            if self.A.contains(tuple(q)):
                return True
        return False

    def nonzero(self, p: tuple, shift: int) -> bool:
        everything = frozenset(range(self.n))
        if not self.in_localization(p, everything, shift):
            return False
        return not any(self.in_localization(p, everything - {i}, shift) for i in range(self.n))

    def socle(self, bound: int) -> list[tuple]:
        out = []
        for p in _box(self.n, bound):
            if not self.nonzero(p, bound):
                continue
            if all(not self.nonzero(tuple(a + b for a, b in zip(p, g)), bound) for g in self.A.generators):
                out.append(p)
        return sorted(out, key=lambda p: tuple(-e for e in p))


def _box(n: int, bound: int):
    if n == 0:
        yield ()
        return
    for head in range(-bound, bound + 1):
        for rest in _box(n - 1, bound):
            yield (head,) + rest


@dataclass(frozen=True)
class CechResult:
    socle: tuple
    window: int
    previous_window: int

    @property
    def socdim(self) -> int:
        return len(self.socle)


def hd_socle_cech(A: MonomialSubalgebra, ceiling: int | None = None) -> CechResult:
    """Socle of ``H^d_m(A)`` as Laurent classes, from the top Cech cohomology.

    For ``d = 2`` this is ``A[1/uv] / (A[1/u] + A[1/v])`` with ``u, v`` the
    pure-power generators. The window ``[-B, B]^d`` doubles until two rounds
    return the same socle.
    """
    ceiling = ceiling or DEFAULT_CECH_CEILING
    if A.arity not in (1, 2):
        raise ValueError("Cech lattice search supports ambient arity 1 or 2")
    lattice = _CechLattice(A)
    label = "".join("uv"[i] for i in range(A.arity))
    bound = 4 * A.max_generator_degree()
    previous = lattice.socle(bound)
    while True:
        if 2 * bound > ceiling:
            raise CeilingExceeded(f"Cech window exceeded {ceiling}")
        current = lattice.socle(2 * bound)
        if current == previous:
            return CechResult(tuple(LaurentClass(p, label) for p in current), 2 * bound, bound)
        previous, bound = current, 2 * bound


def hd_socdim_cech(A: MonomialSubalgebra, ceiling: int | None = None) -> int:
    return hd_socle_cech(A, ceiling).socdim


def goto_suzuki_bound(d: int, socdims: Sequence[int | None]) -> int:
    """``sum_i C(d, i) * socdim H^i``."""
    if len(socdims) != d + 1:
        raise ValueError(f"expected {d + 1} socle dimensions, got {len(socdims)}")
    if any(s is None for s in socdims):
        raise ValueError("a local cohomology socle dimension is missing")
    return sum(comb(d, i) * s for i, s in enumerate(socdims))


def cohomology_report(
    R: RingPresentation,
    sop: Sequence[Polynomial] | None = None,
    subalgebra: MonomialSubalgebra | None = None,
    label: str = "",
    cech_ceiling: int | None = None,
) -> CohomologyReport:
    d = R.dimension
    report = CohomologyReport(label or repr(R), d)
    try:
        h0, exponent = h0_socdim(R)
        report.entries.append(CohomologyEntry(0, h0, "saturation", stabilization_exponent=exponent))
    except CeilingExceeded as exc:
        report.entries.append(CohomologyEntry(0, None, "saturation", note=f"ceiling exceeded: {exc}"))
    standard = None
    if sop is not None and d >= 2:
        from .theorems import SopWitness, check_standard_sop

        standard = check_standard_sop(SopWitness(R, tuple(sop)))
    for r in range(1, d):
        if sop is None or len(sop) < r:
            report.entries.append(CohomologyEntry(r, None, "unmixed-quotient", note="not computed: no system of parameters"))
            continue
        if not standard.passed:
            report.entries.append(CohomologyEntry(r, None, "unmixed-quotient", note="not computed: system of parameters is not standard"))
            continue
        try:
            value = hr_socdim_via_unmixed(R, sop[:r])
            q = Ideal(R, sop[:r])
            _, e = saturate(q, R.maximal_ideal)
            report.entries.append(CohomologyEntry(r, value, "unmixed-quotient", stabilization_exponent=e))
        except HypothesisViolation as exc:
            report.entries.append(CohomologyEntry(r, None, "unmixed-quotient", note=f"not computed: {exc}"))
        except CeilingExceeded as exc:
            report.entries.append(CohomologyEntry(r, None, "unmixed-quotient", note=f"ceiling exceeded: {exc}"))
    if subalgebra is not None and subalgebra.arity == d:
        try:
            res = hd_socle_cech(subalgebra, cech_ceiling)
            report.entries.append(CohomologyEntry(d, res.socdim, "cech-lattice", bound=res.window))
            report.cech_socle = list(res.socle)
        except CeilingExceeded as exc:
            report.entries.append(CohomologyEntry(d, None, "cech-lattice", note=f"ceiling exceeded: {exc}"))
        except ValueError as exc:
            report.entries.append(CohomologyEntry(d, None, "cech-lattice", note=f"not computed: {exc}"))
    elif sop is not None and len(sop) == d and all(e.socdim == 0 for e in report.entries):
        # Cohen-Macaulay: Soc H^d has the dimension of Soc(R/q) for any parameter ideal q
        try:
            value = index_of_reducibility(Ideal(R, sop))
            report.entries.append(CohomologyEntry(d, value, "cm-type"))
        except AlgebraError as exc:
            report.entries.append(CohomologyEntry(d, None, "cm-type", note=f"not computed: {exc}"))
    else:
        report.entries.append(CohomologyEntry(d, None, "none", note="not computed: needs a monomial subalgebra or a Cohen-Macaulay witness"))
    socdims = report.socdims()
    if all(s is not None for s in socdims):
        report.goto_suzuki_bound = goto_suzuki_bound(d, socdims)
    return report


@dataclass
class StabilizationTable:
    rows: list  # (k, index)
    stable: bool
    stable_value: int | None
    bound: int | None

    @property
    def matches_bound(self) -> bool:
        return self.stable and self.bound is not None and self.stable_value == self.bound

    def to_dict(self) -> dict:
        return {
            "rows": [list(r) for r in self.rows],
            "stable": self.stable,
            "stable_value": self.stable_value,
            "bound": self.bound,
            "matches_bound": self.matches_bound,
        }


def power_family(R: RingPresentation, sop: Sequence[Polynomial], ks: Sequence[int]) -> list[tuple[int, Ideal]]:
    """The parameter ideals ``(x_1^k, ..., x_d^k)`` for ``k`` in ``ks``."""
    return [(k, Ideal(R, [x**k for x in sop])) for k in ks]


def stabilization_experiment(family: Sequence[tuple[int, Ideal]], bound: int | None = None) -> StabilizationTable:
    """Index of reducibility along a family; stable when the last three values agree."""
    rows = [(k, index_of_reducibility(q)) for k, q in family]
    values = [v for _, v in rows]
    stable = len(values) >= 3 and len(set(values[-3:])) == 1
    return StabilizationTable(rows, stable, values[-1] if stable else None, bound)
