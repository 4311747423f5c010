"""Brute-force oracles, independent of the Groebner code paths.

* lattice enumeration for semigroup rings (no presentations, no bases);
* Macaulay matrices + sympy DomainMatrix ranks for graded quotients of polynomial rings.

Polynomials are plain dicts ``{exponent tuple: int}`` here on purpose.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


# ---------- semigroup lattice ----------

def semigroup_points(generators, max_degree):
    """Every sum of generators with total degree <= max_degree (plain BFS)."""
    n = len(generators[0])
    pts = {(0,) * n}
    frontier = list(pts)
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(a + b for a, b in zip(p, g))
                if sum(q) <= max_degree and q not in pts:
                    pts.add(q)
                    nxt.append(q)
        frontier = nxt
    return pts


def lattice_socle(generators, ideal_gens, max_degree=None):
    """Socle monomials of ``A/I`` for a monomial ideal ``I`` of the semigroup ring ``A``.

    ``p`` survives iff no ``p - g`` (g in I) is a semigroup point; it is in
    the socle iff ``p + a`` is killed for every algebra generator ``a``.
    """
    top = max(sum(g) for g in generators)
    if max_degree is None:
        max_degree = 4 * max(sum(g) for g in ideal_gens) + 4 * top
    pts = semigroup_points(generators, max_degree + top)

    def in_ideal(p):
        return any(tuple(a - b for a, b in zip(p, g)) in pts for g in ideal_gens)

    survivors = [p for p in pts if sum(p) <= max_degree and not in_ideal(p)]
    if any(sum(p) > max_degree - top for p in survivors):
        raise RuntimeError("window too small for the quotient")
    socle = [p for p in survivors if all(in_ideal(tuple(a + b for a, b in zip(p, g))) for g in generators)]
    return sorted(socle), len(survivors)


def lattice_colon(generators, ideal_gens, by, max_degree):
    """Minimal generators of ``(I : J)`` among semigroup points of degree <= max_degree."""
    top = max(sum(g) for g in generators)
    pts = semigroup_points(generators, max_degree + max(sum(j) for j in by) + top)

    def in_ideal(p):
        return any(tuple(a - b for a, b in zip(p, g)) in pts for g in ideal_gens)

    members = [p for p in pts if sum(p) <= max_degree and all(in_ideal(tuple(a + b for a, b in zip(p, j))) for j in by)]
    members.sort(key=sum)
    minimal = []
    for p in members:
        if not any(tuple(a - b for a, b in zip(p, m)) in pts for m in minimal):
            minimal.append(p)
    return sorted(minimal)


def lattice_relations(generators, max_degree):
    """Pairs of presentation monomials (degree <= max_degree) with the same image."""
    k = len(generators)
    by_image: dict = {}
    for deg in range(max_degree + 1):
        for combo in combinations_with_replacement(range(k), deg):
            e = [0] * k
            for i in combo:
                e[i] += 1
            img = tuple(sum(generators[i][j] * e[i] for i in range(k)) for j in range(len(generators[0])))
            by_image.setdefault(img, []).append(tuple(e))
    pairs = []
    for monos in by_image.values():
        for other in monos[1:]:
            pairs.append((monos[0], other))
    return pairs


def cech_socle_bruteforce(generators, units, window, depth):
    """Top Cech socle of a 2-variable semigroup ring by direct enumeration.

    Localized log-sets are enumerated from semigroup points (degree <= depth)
    shifted by negative multiples of the inverted units, with no membership
    test reused from the library.
    """
    pts = semigroup_points(generators, depth)
    u, v = units
    lu, lv, luv = set(), set(), set()
    steps = depth // min(sum(u), sum(v)) + 1
    for p in pts:
        for N in range(steps):
            lu.add((p[0] - N * u[0], p[1] - N * u[1]))
            lv.add((p[0] - N * v[0], p[1] - N * v[1]))
            for M in range(steps):
                luv.add((p[0] - N * u[0] - M * v[0], p[1] - N * u[1] - M * v[1]))

    def nonzero(p):
        return p in luv and p not in lu and p not in lv

    box = range(-window, window + 1)
    return sorted(
        (p for p in product(box, box) if nonzero(p)
         and all(not nonzero((p[0] + g[0], p[1] + g[1])) for g in generators)),
        key=lambda p: (-p[0], -p[1]),
    )


# ---------- Macaulay matrices ----------

def _monomials(n, d):
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _ideal_piece(n, gens, d):
    """Spanning vectors of the degree-d piece of a homogeneous ideal."""
    index = {m: i for i, m in enumerate(_monomials(n, d))}
    rows = []
    for g in gens:
        gd = sum(next(iter(g)))
        if gd > d:
            continue
        for m in _monomials(n, d - gd):
            row = [0] * len(index)
            for gm, c in g.items():
                row[index[tuple(a + b for a, b in zip(gm, m))]] += c
            rows.append(row)
    return index, rows


def _matrix(rows, width):
    return DomainMatrix([[QQ.convert(v) for v in row] for row in rows], (len(rows), width), QQ)


def _rank(rows, width):
    if not rows:
        return 0
    return _matrix(rows, width).rank()


def _annihilator(rows, width):
    """Rows spanning the functionals that vanish on the row span."""
    if not rows:
        return [[1 if i == j else 0 for j in range(width)] for i in range(width)]
    null = _matrix(rows, width).nullspace()
    return null.to_list()


def _socle_in_degree(n, gens, d):
    idx_d, rows_d = _ideal_piece(n, gens, d)
    idx_up, rows_up = _ideal_piece(n, gens, d + 1)
    ann = _annihilator(rows_up, len(idx_up))
    cond = []
    for i in range(n):
        for a in ann:
            row = [0] * len(idx_d)
            for m, col in idx_d.items():
                up = tuple(e + (j == i) for j, e in enumerate(m))
                row[col] = a[idx_up[up]]
            cond.append(row)
    kernel_dim = len(idx_d) - _rank(cond, len(idx_d))
    return kernel_dim - _rank(rows_d, len(idx_d))


def graded_socle_dims(n, gens, max_degree):
    """Socle dimension of ``Q[x_1..x_n]/(gens)`` in each degree up to ``max_degree``.

    ``gens`` are homogeneous dicts. Degree ``d`` socle = {v in P_d : x_i v in
    I_{d+1}} / I_d, computed from ranks of Macaulay matrices only.
    """
    return [_socle_in_degree(n, gens, d) for d in range(max_degree + 1)]


def graded_quotient_dim(n, gens, d):
    idx, rows = _ideal_piece(n, gens, d)
    return len(idx) - _rank(rows, len(idx))


def graded_socle_dim(n, gens, max_degree=16):
    """Total socle dimension of a finite-length graded quotient."""
    top = max(sum(next(iter(g))) for g in gens)
    total = 0
    for d in range(max_degree + 1):
        if d >= top and graded_quotient_dim(n, gens, d) == 0:
            return total
        total += _socle_in_degree(n, gens, d)
    raise RuntimeError("quotient not finite within the degree bound")


def graded_length(n, gens, max_degree=16):
    top = max(sum(next(iter(g))) for g in gens)
    total = 0
    for d in range(max_degree + 1):
        q = graded_quotient_dim(n, gens, d)
        if d >= top and q == 0:
            return total
        total += q
    raise RuntimeError("quotient not finite within the degree bound")


def poly(text, names):
    """Tiny parser for oracle inputs: sums of +-c*monomial terms with '^' powers."""
    text = text.replace(" ", "").replace("-", "+-")
    out: dict = {}
    for term in filter(None, text.split("+")):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("-")
        coeff, e = 1, [0] * len(names)
        for f in term.split("*"):
            if f.isdigit():
                coeff *= int(f)
                continue
            base, _, power = f.partition("^")
            e[names.index(base)] += int(power or 1)
        out[tuple(e)] = out.get(tuple(e), 0) + sign * coeff
    return out
