"""Ideals in graded quotient rings ``Q[x1..xn]/I0`` and their calculus.

An ideal of ``R = P/I0`` is stored by generators in the ambient ring ``P``;
every Groebner computation runs on the generators together with ``I0``, so
the ambient ideal always contains the defining relations.
"""

from __future__ import annotations

import threading
from functools import cached_property
from typing import Iterable, Sequence

from .arith import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    elimination,
    format_polynomial,
    parse_polynomial,
)
from .errors import ArityMismatch, RingMismatch, ZeroDivisorError
from .groebner import GroebnerBasis, buchberger, normal_form, normal_forms


class RingPresentation:
    """A graded model ``Q[names]/(relations)`` of a local ring.

    The irrelevant ideal generated by all variables plays the maximal ideal.
    """

    def __init__(self, names: Sequence[str], relations: Iterable[Polynomial] = ()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.relations = tuple(r for r in relations if not r.is_zero())
        for r in self.relations:
            if r.nvars != len(self.names):
                raise ArityMismatch("relation arity differs from the number of variables")
        self._lock = threading.Lock()
        self._gb: dict = {}
        if self.relations and self.relations_basis().is_unit():
            raise ValueError("defining ideal is the unit ideal")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        if not isinstance(other, RingPresentation):
            return NotImplemented
        return self.names == other.names and self.relations == other.relations

    def __hash__(self):
        return hash((self.names, self.relations))

    def __repr__(self):
        rels = ", ".join(self.format(r) for r in self.relations)
        return f"RingPresentation(Q[{','.join(self.names)}]/({rels}))"

    def relations_basis(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        with self._lock:
            if order not in self._gb:
                self._gb[order] = buchberger(self.relations, order, nvars=self.nvars)
            return self._gb[order]

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.names)

    def format(self, p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
        return format_polynomial(p, self.names, order)

    def variables(self) -> list[Polynomial]:
        return [Polynomial.variable(self.nvars, i) for i in range(self.nvars)]

    def one(self) -> Polynomial:
        return Polynomial.constant(self.nvars)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` modulo the defining relations."""
        return normal_form(f, self.relations_basis())

    def is_zero(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def ambient(self) -> RingPresentation:
        return RingPresentation(self.names)

    def quotient(self, extra: Iterable[Polynomial]) -> RingPresentation:
        return RingPresentation(self.names, self.relations + tuple(extra))

    @property
    def defining_ideal(self) -> Ideal:
        return Ideal(self.ambient(), self.relations)

    def ideal(self, *gens) -> Ideal:
        polys = [self.parse(g) if isinstance(g, str) else g for g in gens]
        return Ideal(self, polys)

    @cached_property
    def maximal_ideal(self) -> Ideal:
        return Ideal(self, self.variables())

    def zero_ideal(self) -> Ideal:
        return Ideal(self, ())

    def unit_ideal(self) -> Ideal:
        return Ideal(self, (self.one(),))

    @cached_property
    def dimension(self) -> int:
        from .quotient import krull_dimension

        return krull_dimension(self)


class Ideal:
    """An ideal of a :class:`RingPresentation`, with a per-order GB cache."""

    def __init__(self, ring: RingPresentation, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        gens = []
        seen = set()
        for g in generators:
            if g.nvars != ring.nvars:
                raise ArityMismatch(f"generator arity {g.nvars} does not match ring arity {ring.nvars}")
            if not g.is_zero() and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self._lock = threading.Lock()
        self._gb: dict = {}

    # -- Groebner data --
    def full_generators(self) -> tuple:
        return self.generators + self.ring.relations

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        with self._lock:
            gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.full_generators(), order, nvars=self.ring.nvars)
            with self._lock:
                gb = self._gb.setdefault(order, gb)
        return gb

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner())

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    __contains__ = contains

    def contains_ideal(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return all(nf.is_zero() for nf in normal_forms(other.generators, self.groebner()))

    def equals(self, other: Ideal) -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.equals(other)

    __hash__ = None

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(g) for g in self.generators)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def witness_not_contained(self, other: Ideal) -> Polynomial | None:
        """A generator of ``other`` outside ``self``, or None."""
        for g, nf in zip(other.generators, normal_forms(other.generators, self.groebner())):
            if not nf.is_zero():
                return g
        return None

    # -- arithmetic --
    def __add__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __pow__(self, n: int) -> Ideal:
        out = self.ring.unit_ideal()
        for _ in range(n):
            out = out * self
        return out

    def reduced_generators(self) -> list[Polynomial]:
        """Generators reduced modulo the defining relations, zeros dropped."""
        out = []
        for nf in normal_forms(self.generators, self.ring.relations_basis()):
            if not nf.is_zero() and nf not in out:
                out.append(nf)
        return out

    def minimalized(self) -> Ideal:
        """Same ideal with no generator in the ideal of the others."""
        gens = sorted(
            self.reduced_generators(),
            key=lambda g: (g.total_degree(), GREVLEX.key(g.leading_monomial()), len(g)),
        )
        kept: list[Polynomial] = []
        for g in gens:
            if not Ideal(self.ring, kept).contains(g):
                kept.append(g)
        changed = True
        while changed:
            changed = False
            for i, g in enumerate(kept):
                rest = kept[:i] + kept[i + 1:]
                if Ideal(self.ring, rest).contains(g):
                    kept = rest
                    changed = True
                    break
        return Ideal(self.ring, kept)

    def format(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(self.ring.format(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self.format()}"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")


def _strip(ring: RingPresentation, polys: Iterable[Polynomial]) -> list[Polynomial]:
    """Drop polynomials that already vanish in ``ring``."""
    polys = list(polys)
    keep = normal_forms(polys, ring.relations_basis())
    return [p for p, nf in zip(polys, keep) if not nf.is_zero()]


def eliminate(I: Ideal, block: Sequence[int]) -> Ideal:
    """``I`` (with its ring's relations) intersected with the subring free of ``block``.

    The result lives in the polynomial ring on the remaining variables.
    """
    ring = I.ring
    block = sorted(set(block))
    if not block:
        return Ideal(ring.ambient(), I.full_generators())
    rest = [i for i in range(ring.nvars) if i not in block]
    perm = block + rest

    def permute(p: Polynomial) -> Polynomial:
        return Polynomial._raw(p.nvars, {tuple(m[i] for i in perm): c for m, c in p.items()})

    gb = buchberger([permute(g) for g in I.full_generators()], elimination(len(block)), nvars=ring.nvars)
    k = len(block)
    kept = [g.drop(k) for g in gb.elements if not any(m[:k] != (0,) * k for m in g.monomials())]
    sub = RingPresentation([ring.names[i] for i in rest])
    return Ideal(sub, kept)


def _eliminate_first(gens: Sequence[Polynomial], nvars: int) -> list[Polynomial]:
    gb = buchberger(gens, elimination(1), nvars=nvars)
    return [g.drop(1) for g in gb.elements if all(m[0] == 0 for m in g.monomials())]


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via elimination of ``w`` from ``w*I + (1-w)*J``."""
    _same_ring(I, J)
    ring = I.ring
    n = ring.nvars
    w = Polynomial.variable(n + 1, 0)
    one_minus_w = Polynomial.constant(n + 1) - w
    gens = [w * f.extend(before=1) for f in I.full_generators()]
    gens += [one_minus_w * g.extend(before=1) for g in J.full_generators()]
    if not I.full_generators() or not J.full_generators():
        return Ideal(ring, ())
    return Ideal(ring, _strip(ring, _eliminate_first(gens, n + 1)))


def colon_element(I: Ideal, f: Polynomial) -> Ideal:
    """``(I : f) = {g : g*f in I}``."""
    ring = I.ring
    if f.nvars != ring.nvars:
        raise ArityMismatch("element arity differs from ring arity")
    if ring.is_zero(f):
        raise ZeroDivisorError("colon by the zero element")
    if f.is_constant():
        return Ideal(ring, I.generators)
    meet = intersect(Ideal(ring.ambient(), I.full_generators()), Ideal(ring.ambient(), [f]))
    quotients = [g.exact_divide(f) for g in meet.generators]
    return Ideal(ring, _strip(ring, quotients))


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J)`` as the intersection of the colons by the generators of ``J``."""
    _same_ring(I, J)
    gens = J.reduced_generators()
    if not gens:
        raise ZeroDivisorError("colon by the zero ideal")
    if J.is_unit():
        return Ideal(I.ring, I.generators)
    result = None
    for g in gens:
        c = colon_element(I, g)
        result = c if result is None else intersect(result, c)
    return result


def saturate(I: Ideal, J: Ideal) -> tuple[Ideal, int]:
    """``(I : J^inf)`` and the least ``e`` with ``(I : J^e) = (I : J^(e+1))``."""
    current, e = I, 0
    while True:
        nxt = colon_ideal(current, J)
        if current.contains_ideal(nxt):
            return current, e
        current, e = nxt, e + 1


def ideal_sum(*ideals: Ideal) -> Ideal:
    out = ideals[0]
    for J in ideals[1:]:
        out = out + J
    return out
