"""Finite-length quotients: standard monomials, socles, index of reducibility."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arith import GREVLEX, Polynomial, mono_divides, mono_mul
from .errors import CeilingExceeded, InfiniteLength, NotParameterIdeal
from .groebner import GroebnerBasis, normal_form
from .ideals import Ideal, RingPresentation, colon_ideal
from .linalg import EchelonSpan

DEFAULT_CLOSURE_CEILING = 10_000

__all__ = [
    "RingPresentation",
    "FiniteQuotientBasis",
    "krull_dimension",
    "standard_monomials",
    "quotient_length",
    "is_finite_length",
    "is_parameter_ideal",
    "socle_basis",
    "socle_dimension",
    "index_of_reducibility",
    "is_irreducible",
    "finite_length_submodule_dim",
]


@dataclass(frozen=True)
class FiniteQuotientBasis:
    standard_monomials: tuple
    order_name: str = "grevlex"

    @property
    def length(self) -> int:
        return len(self.standard_monomials)


def _minimal_leading_monomials(gb: GroebnerBasis) -> list:
    lms = gb.leading_monomials()
    return [m for m in lms if not any(o != m and mono_divides(o, m) for o in lms)]


def krull_dimension(R: RingPresentation | Ideal) -> int:
    """Dimension of ``R`` (or of ``R/I`` for an ideal) from its leading-term ideal.

    The largest set of variables containing the support of no leading
    monomial.
    """
    gb = R.groebner() if isinstance(R, Ideal) else R.relations_basis()
    n = gb.nvars
    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in _minimal_leading_monomials(gb)]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def is_finite_length(I: Ideal) -> bool:
    gb = I.groebner()
    if gb.is_unit():
        return True
    pure = set()
    for m in gb.leading_monomials():
        sup = [i for i, e in enumerate(m) if e]
        if len(sup) == 1:
            pure.add(sup[0])
    return len(pure) == gb.nvars


def standard_monomials(I: Ideal, ceiling: int | None = None) -> FiniteQuotientBasis:
    """Monomials outside the (grevlex) leading-term ideal of ``I``."""
    ceiling = ceiling or DEFAULT_CLOSURE_CEILING
    if not is_finite_length(I):
        raise InfiniteLength("quotient is not of finite length")
    gb = I.groebner()
    if gb.is_unit():
        return FiniteQuotientBasis(())
    lms = _minimal_leading_monomials(gb)
    n = gb.nvars
    start = (0,) * n
    seen = {start}
    frontier = [start]
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    while frontier:
        nxt = []
        for m in frontier:
            for u in units:
                w = mono_mul(m, u)
                if w in seen or any(mono_divides(l, w) for l in lms):
                    continue
                seen.add(w)
                nxt.append(w)
                if len(seen) > ceiling:
                    raise CeilingExceeded(f"more than {ceiling} standard monomials")
        frontier = nxt
    return FiniteQuotientBasis(tuple(sorted(seen, key=GREVLEX.key)))


def quotient_length(I: Ideal) -> int:
    return standard_monomials(I).length


def is_parameter_ideal(q: Ideal, R: RingPresentation | None = None) -> bool:
    R = R or q.ring
    return len(q.generators) == R.dimension and is_finite_length(q)


def socle_basis(I: Ideal, R: RingPresentation | None = None) -> list[Polynomial]:
    """A basis of ``(I : m)/I`` as normal forms, for finite-length ``R/I``.

    Solves ``x_i * v = 0`` in ``R/I`` for all variables by exact linear
    algebra on the standard monomials.
    """
    basis = standard_monomials(I).standard_monomials
    gb = I.groebner()
    n = gb.nvars
    variables = [Polynomial.variable(n, i) for i in range(n)]
    span = EchelonSpan(key=lambda c: (c[0], GREVLEX.key(c[1])))
    socle = []
    for b in basis:
        image = {}
        for i, x in enumerate(variables):
            nf = normal_form(x.mul_term(b), gb)
            for m, c in nf.items():
                image[(i, m)] = c
        independent, tag = span.add(image, {b: Fraction(1)})
        if not independent:
            socle.append(Polynomial._raw(n, {m: c for m, c in tag.items() if c}))
    socle.sort(key=lambda p: GREVLEX.key(p.leading_monomial()), reverse=True)
    return socle


def socle_dimension(I: Ideal) -> int:
    return len(socle_basis(I))


def index_of_reducibility(q: Ideal, R: RingPresentation | None = None) -> int:
    """Number of irreducible components of ``q``: the socle dimension of ``R/q``."""
    if not is_parameter_ideal(q, R):
        raise NotParameterIdeal(f"{q.format()} is not a parameter ideal")
    return socle_dimension(q)


def is_irreducible(q: Ideal, R: RingPresentation | None = None) -> bool:
    return index_of_reducibility(q, R) == 1


def finite_length_submodule_dim(
    I: Ideal, J: Ideal, R: RingPresentation | None = None, ceiling: int | None = None
) -> int:
    """``dim_k J/I`` by closing the span of ``J``'s generators under the variables modulo ``I``."""
    ceiling = ceiling or DEFAULT_CLOSURE_CEILING
    if not J.contains_ideal(I):
        raise ValueError("first ideal is not contained in the second")
    gb = I.groebner()
    n = gb.nvars
    variables = [Polynomial.variable(n, i) for i in range(n)]
    span = EchelonSpan(key=GREVLEX.key, ceiling=ceiling)
    queue = []
    for g in J.generators:
        nf = normal_form(g, gb)
        if nf and span.add(dict(nf.items()))[0]:
            queue.append(nf)
    while queue:
        f = queue.pop()
        for x in variables:
            nf = normal_form(x * f, gb)
            if nf and span.add(dict(nf.items()))[0]:
                queue.append(nf)
    return len(span)


def colon_quotient_dim(q: Ideal) -> int:
    """``dim_k (q : m)/q`` through the Groebner colon, independent of :func:`socle_basis`."""
    return finite_length_submodule_dim(q, colon_ideal(q, q.ring.maximal_ideal))
