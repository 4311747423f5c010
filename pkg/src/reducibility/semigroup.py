"""Affine semigroup rings ``k[monomials]`` and their lattice-point arithmetic.

The Groebner route goes through :func:`toric_presentation`; the lattice
fast path (:func:`colon_monomial_fastpath`) never touches a Groebner basis
and so doubles as an independent check of it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Polynomial, format_monomial, parse_polynomial
from .errors import CeilingExceeded, NotInSemigroup, ZeroDivisorError
from .ideals import Ideal, RingPresentation, eliminate

DEFAULT_WINDOW_CEILING = 2_000


@dataclass(frozen=True)
class SemigroupMembershipWitness:
    target: tuple
    decomposition: tuple | None  # generator indices, with repetition

    @property
    def found(self) -> bool:
        return self.decomposition is not None

    def counts(self, ngens: int) -> tuple:
        out = [0] * ngens
        for i in self.decomposition or ():
            out[i] += 1
        return tuple(out)


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


class MonomialSubalgebra:
    """The subalgebra of ``Q[ambient_names]`` generated by monomials.

    ``generators`` are exponent vectors; presentation variables are named
    ``a1, a2, ...`` unless ``presentation_names`` is given.
    """

    def __init__(
        self,
        generators: Iterable[Sequence[int]],
        ambient_names: Sequence[str] = ("s", "t"),
        presentation_names: Sequence[str] | None = None,
    ):
        self.generators = tuple(tuple(int(e) for e in g) for g in generators)
        self.ambient_names = tuple(ambient_names)
        n = len(self.ambient_names)
        if not self.generators:
            raise ValueError("at least one generator is required")
        if any(len(g) != n for g in self.generators):
            raise ValueError("generator arity differs from the ambient arity")
        if any(min(g) < 0 or not any(g) for g in self.generators):
            raise ValueError("generators must be nonzero non-negative exponent vectors")
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generators must be pairwise distinct")
        if _rank(self.generators) != n:
            raise ValueError(f"generated lattice must have rank {n}")
        self.presentation_names = tuple(
            presentation_names or (f"a{i + 1}" for i in range(len(self.generators)))
        )
        if len(self.presentation_names) != len(self.generators):
            raise ValueError("one presentation name per generator required")
        self._memo: dict = {(0,) * n: None}
        self._lock = threading.Lock()
        self._presentation: RingPresentation | None = None

    @property
    def arity(self) -> int:
        return len(self.ambient_names)

    @property
    def dimension(self) -> int:
        return self.arity

    def __eq__(self, other):
        if not isinstance(other, MonomialSubalgebra):
            return NotImplemented
        return (self.generators, self.ambient_names, self.presentation_names) == (
            other.generators, other.ambient_names, other.presentation_names)

    def __hash__(self):
        return hash((self.generators, self.ambient_names))

    def __repr__(self):
        gens = ", ".join(format_monomial(g, self.ambient_names) for g in self.generators)
        return f"MonomialSubalgebra(k[{gens}])"

    def degree(self, p: Sequence[int]) -> int:
        return sum(p)

    def max_generator_degree(self) -> int:
        return max(sum(g) for g in self.generators)

    def pure_powers(self) -> list[tuple]:
        """For each ambient variable, the smallest generator that is a pure power of it."""
        out = []
        for i in range(self.arity):
            cands = [g for g in self.generators if all(e == 0 for j, e in enumerate(g) if j != i)]
            if not cands:
                raise ValueError(f"no pure power of {self.ambient_names[i]} among the generators")
            out.append(min(cands))
        return out

    # -- membership --
    def _member(self, p: tuple) -> bool:
        memo = self._memo
        if p in memo:
            return memo[p] is not False
        stack = [p]
        while stack:
            q = stack[-1]
            if q in memo:
                stack.pop()
                continue
            children = []
            for i, g in enumerate(self.generators):
                c = tuple(a - b for a, b in zip(q, g))
                if min(c) >= 0:
                    children.append((i, c))
            pending = [c for _, c in children if c not in memo]
            if pending:
                stack.extend(pending)
                continue
            memo[q] = next((i for i, c in children if memo[c] is not False), False)
            stack.pop()
        return memo[p] is not False

    def contains(self, p: Sequence[int]) -> bool:
        p = tuple(p)
        if len(p) != self.arity:
            raise ValueError("point arity differs from the ambient arity")
        if min(p) < 0:
            return False
        with self._lock:
            return self._member(p)

    __contains__ = contains

    def membership(self, p: Sequence[int]) -> SemigroupMembershipWitness:
        """Decide ``p`` in the semigroup, returning a generator decomposition when it is."""
        p = tuple(p)
        if not self.contains(p):
            return SemigroupMembershipWitness(p, None)
        decomposition = []
        q = p
        with self._lock:
            while any(q):
                i = self._memo[q]
                decomposition.append(i)
                q = tuple(a - b for a, b in zip(q, self.generators[i]))
        return SemigroupMembershipWitness(p, tuple(sorted(decomposition)))

    def divides(self, u: Sequence[int], v: Sequence[int]) -> bool:
        """``u | v`` in the semigroup ring: ``v - u`` lies in the semigroup."""
        return self.contains(tuple(b - a for a, b in zip(u, v)))

    def minimalize(self, monomials: Iterable[Sequence[int]]) -> list[tuple]:
        """Minimal generators of the monomial ideal they generate, by semigroup divisibility."""
        monos = sorted({tuple(m) for m in monomials}, key=lambda m: (sum(m), tuple(-e for e in m)))
        kept: list[tuple] = []
        for m in monos:
            if not any(self.divides(k, m) for k in kept):
                kept.append(m)
        return kept

    def in_monomial_ideal(self, p: Sequence[int], ideal: Iterable[Sequence[int]]) -> bool:
        return any(self.divides(g, p) for g in ideal)

    def points_up_to(self, degree: int) -> list[tuple]:
        """All semigroup points of total degree at most ``degree``."""
        zero = (0,) * self.arity
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = tuple(a + b for a, b in zip(p, g))
                    if sum(q) <= degree and q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return sorted(seen, key=lambda m: (sum(m), tuple(-e for e in m)))

    # -- polynomial maps --
    def ambient_ring(self) -> RingPresentation:
        return RingPresentation(self.ambient_names)

    def parse_ambient(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ambient_names)

    def presentation_images(self) -> list[Polynomial]:
        return [Polynomial.monomial(g) for g in self.generators]

    def to_ambient(self, f: Polynomial) -> Polynomial:
        """Image of a presentation polynomial under ``a_i -> generator_i``."""
        return f.substitute(self.presentation_images())

    def to_presentation(self, f: Polynomial) -> Polynomial:
        """A preimage of ``f`` whose terms are witnessed generator products."""
        out = {}
        for m, c in f.items():
            w = self.membership(m)
            if not w.found:
                raise NotInSemigroup(f"{format_monomial(m, self.ambient_names)} is not in the semigroup")
            k = w.counts(len(self.generators))
            out[k] = out.get(k, 0) + c
        return Polynomial(len(self.generators), out)

    @property
    def presentation(self) -> RingPresentation:
        with self._lock:
            if self._presentation is None:
                self._presentation = toric_presentation(self)
            return self._presentation

    def monomial_generators(self, I: Ideal) -> list[tuple] | None:
        """Minimal monomial generators in the ambient variables of an ideal of the presentation.

        Returns None when some generator does not map to a scalar multiple of
        a monomial (the ideal is then not a monomial ideal of this form).
        """
        monos = []
        for g in I.generators:
            img = self.to_ambient(g)
            if img.is_zero():
                continue
            if not img.is_monomial():
                return None
            monos.append(next(iter(img.monomials())))
        return self.minimalize(monos)

    def format_monomials(self, monos: Iterable[Sequence[int]]) -> str:
        monos = list(monos)
        if not monos:
            return "(0)"
        return "(" + ", ".join(format_monomial(m, self.ambient_names) for m in monos) + ")"


def toric_presentation(A: MonomialSubalgebra) -> RingPresentation:
    """``Q[a_1..a_n]/ker(a_i -> m_i)`` via elimination of the ambient variables."""
    k, n = A.arity, len(A.generators)
    names = A.ambient_names + A.presentation_names
    gens = []
    for i, g in enumerate(A.generators):
        a = Polynomial.variable(k + n, k + i)
        gens.append(a - Polynomial.monomial(g + (0,) * n))
    kernel = eliminate(Ideal(RingPresentation(names), gens), range(k))
    rels = list(kernel.generators)
    for r in rels:
        if len(r) != 2 or sorted(abs(c) for _, c in r.items()) != [1, 1]:
            raise AssertionError(f"toric relation {r} is not a +-1 binomial")
    return RingPresentation(A.presentation_names, rels)


def membership(A: MonomialSubalgebra, p: Sequence[int]) -> SemigroupMembershipWitness:
    return A.membership(p)


def transport_ideal(A: MonomialSubalgebra, generators: Iterable[Polynomial | str]) -> Ideal:
    """The ideal of the toric presentation matching an ideal of ``A`` given in ``s, t``."""
    polys = [A.parse_ambient(g) if isinstance(g, str) else g for g in generators]
    R = A.presentation
    return Ideal(R, [A.to_presentation(f) for f in polys])


def _window_colon(A: MonomialSubalgebra, I: list, J: list, window: int) -> list[tuple]:
    found = []
    for u in A.points_up_to(window):
        if all(A.in_monomial_ideal(tuple(a + b for a, b in zip(u, j)), I) for j in J):
            found.append(u)
    return A.minimalize(found)


def colon_monomial_fastpath(
    A: MonomialSubalgebra,
    I: Iterable[Sequence[int]],
    J: Iterable[Sequence[int]],
    ceiling: int | None = None,
) -> list[tuple]:
    """Minimal monomial generators of ``(I : J)`` in ``A`` by lattice-point scanning.

    The degree window starts at four times the largest generator degree and
    doubles until two consecutive windows return the same generators.
    """
    ceiling = ceiling or DEFAULT_WINDOW_CEILING
    I = [tuple(m) for m in I]
    J = [tuple(m) for m in J]
    for m in I + J:
        if m not in A:
            raise NotInSemigroup(f"{m} is not in the semigroup")
    if not J:
        raise ZeroDivisorError("colon by the zero ideal")
    if not I:
        return []
    window = 4 * A.max_generator_degree()
    previous = _window_colon(A, I, J, window)
    while True:
        window *= 2
        if window > ceiling:
            raise CeilingExceeded(f"colon window exceeded {ceiling}")
        current = _window_colon(A, I, J, window)
        if current == previous:
            return current
        previous = current
