"""Reduced Groebner bases (Buchberger), normal forms and ideal membership."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .arith import GREVLEX, MonomialOrder, Polynomial, mono_div, mono_divides, mono_lcm, mono_mul
from .errors import ArityMismatch, OrderMismatch


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, auto-reduced, sorted by leading monomial."""

    order: MonomialOrder
    nvars: int
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def is_zero(self) -> bool:
        return not self.elements


def _reduce(p: dict, basis: Sequence[tuple], key, full: bool = True) -> dict:
    """Reduce ``p`` by ``basis`` = [(lm, terms-dict of a monic polynomial)]."""
    p = dict(p)
    rem: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, gterms in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in gterms.items():
                    k = mono_mul(gm, q)
                    v = p.get(k, 0) - c * gc
                    if v:
                        p[k] = v
                    else:
                        p.pop(k, None)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
    return rem


def _monic(terms: dict, key) -> tuple:
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc != 1:
        terms = {m: c / lc for m, c in terms.items()}
    return lm, terms


def _spoly(f: tuple, g: tuple) -> dict:
    (lf, tf), (lg, tg) = f, g
    lcm = mono_lcm(lf, lg)
    a, b = mono_div(lcm, lf), mono_div(lcm, lg)
    out = {mono_mul(m, a): c for m, c in tf.items()}
    for m, c in tg.items():
        k = mono_mul(m, b)
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _sort_key(p: Polynomial, order: MonomialOrder):
    return tuple(
        (order.key(m), c.numerator, c.denominator) for c, m in p.terms(order)
    )


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX, nvars: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy with Buchberger's coprime and chain criteria.
    Inputs are sorted canonically first so the run is reproducible.
    """
    gens = [g for g in gens]
    if nvars is None:
        if not gens:
            raise ValueError("arity needed for an empty generator list")
        nvars = gens[0].nvars
    if any(g.nvars != nvars for g in gens):
        raise ArityMismatch("generators of different arity")
    key = order.key
    gens = sorted((g for g in gens if not g.is_zero()), key=lambda g: _sort_key(g, order))

    G: list[tuple] = []
    heap: list = []
    live: set = set()

    def push(i, j):
        lcm = mono_lcm(G[i][0], G[j][0])
        heapq.heappush(heap, (sum(lcm), key(lcm), i, j))
        live.add((i, j))

    def add(terms: dict):
        G.append(_monic(terms, key))
        n = len(G) - 1
        for i in range(n):
            push(i, n)

    for g in gens:
        r = _reduce(dict(g.items()), G, key)
        if r:
            add(r)
            if not any(G[-1][0]):
                break

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in live:
            continue
        li, lj = G[i][0], G[j][0]
        lcm = mono_lcm(li, lj)
        skip = all(a == 0 or b == 0 for a, b in zip(li, lj))
        if not skip:
            for k in range(len(G)):
                if k in (i, j):
                    continue
                if (min(i, k), max(i, k)) in live or (min(j, k), max(j, k)) in live:
                    continue
                if mono_divides(G[k][0], lcm):
                    skip = True
                    break
        live.discard((i, j))
        if skip:
            continue
        r = _reduce(_spoly(G[i], G[j]), G, key)
        if r:
            add(r)
            if not any(G[-1][0]):
                live.clear()
                heap.clear()

    return _reduced(G, order, nvars)


def _reduced(G: list[tuple], order: MonomialOrder, nvars: int) -> GroebnerBasis:
    key = order.key
    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, (lm, terms) in enumerate(G):
        redundant = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx or not mono_divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((lm, terms))
    if any(not any(lm) for lm, _ in minimal):
        one = Polynomial.constant(nvars)
        return GroebnerBasis(order, nvars, (one,))
    out = []
    for idx, (lm, terms) in enumerate(minimal):
        others = [g for j, g in enumerate(minimal) if j != idx]
        tail = dict(terms)
        c = tail.pop(lm)
        tail = _reduce(tail, others, key)
        tail[lm] = c
        out.append(Polynomial._raw(nvars, _monic(tail, key)[1]))
    out.sort(key=lambda p: key(p.leading_monomial(order)))
    return GroebnerBasis(order, nvars, tuple(out))


def _basis_pairs(G: GroebnerBasis) -> list[tuple]:
    return [(g.leading_monomial(G.order), dict(g.items())) for g in G.elements]


def normal_form(f: Polynomial, G: GroebnerBasis, order: MonomialOrder | None = None) -> Polynomial:
    """Unique remainder of ``f`` modulo the ideal of ``G``."""
    if order is not None and order != G.order:
        raise OrderMismatch(f"basis order {G.order} differs from requested {order}")
    if f.nvars != G.nvars:
        raise ArityMismatch(f"arity {f.nvars} vs basis arity {G.nvars}")
    return Polynomial._raw(f.nvars, _reduce(dict(f.items()), _basis_pairs(G), G.order.key))


def normal_forms(fs: Sequence[Polynomial], G: GroebnerBasis) -> list[Polynomial]:
    pairs = _basis_pairs(G)
    key = G.order.key
    return [Polynomial._raw(f.nvars, _reduce(dict(f.items()), pairs, key)) for f in fs]


def ideal_membership(f: Polynomial, G: GroebnerBasis, order: MonomialOrder | None = None) -> bool:
    return normal_form(f, G, order).is_zero()


def is_groebner_basis(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Check that every S-polynomial of ``polys`` reduces to zero."""
    key = order.key
    G = [_monic(dict(p.items()), key) for p in polys if not p.is_zero()]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if _reduce(_spoly(G[i], G[j]), G, key):
                return False
    return True
