"""Ring-description files.

Statements end with ``;`` and ``#`` starts a comment::

    ring Q[s,t];
    subalgebra A = s^5, s^4*t, s*t^4, t^5;
    ideal q = s^10, t^10;

or, for a quotient of a polynomial ring::

    quotient R = Q[x,y1,y2] / (x*y1, x*y2);
    ideal p = y1, y2;

Ideals of a subalgebra are written in the ambient variables and transported
into its toric presentation; the name ``m`` is the maximal ideal unless the
file defines it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .arith import Polynomial, format_monomial, format_polynomial, parse_polynomial
from .errors import ParseError
from .ideals import Ideal, RingPresentation
from .semigroup import MonomialSubalgebra, transport_ideal

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RING = re.compile(rf"ring\s+Q\s*\[\s*({_NAME}(?:\s*,\s*{_NAME})*)\s*\]$")
_SUBALG = re.compile(rf"subalgebra\s+({_NAME})\s*=\s*(.+)$", re.S)
_IDEAL = re.compile(rf"ideal\s+({_NAME})\s*=\s*(.*)$", re.S)
_QUOT = re.compile(rf"quotient\s+({_NAME})\s*=\s*Q\s*\[\s*({_NAME}(?:\s*,\s*{_NAME})*)\s*\]\s*(?:/\s*\((.*)\))?$", re.S)


def _split_list(text: str) -> list[str]:
    """Split on top-level commas."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    parts = [p.strip() for p in parts]
    if parts == [""]:
        return []
    if any(not p for p in parts):
        raise ParseError(f"empty entry in list {text!r}")
    return parts


@dataclass
class RingFile:
    """Parsed contents of a ring file; equality is model equality."""

    ambient_names: tuple = ()
    subalgebra_name: str | None = None
    subalgebra_generators: tuple = ()
    quotient_name: str | None = None
    relations: tuple = ()
    ideals: dict = field(default_factory=dict)  # name -> tuple of Polynomial

    @property
    def names(self) -> tuple:
        return self.ambient_names

    def __post_init__(self):
        self._context = None

    def context(self) -> RingContext:
        if self._context is None:
            self._context = RingContext(self)
        return self._context

    def __eq__(self, other):
        if not isinstance(other, RingFile):
            return NotImplemented
        return (
            self.ambient_names == other.ambient_names
            and self.subalgebra_name == other.subalgebra_name
            and self.subalgebra_generators == other.subalgebra_generators
            and self.quotient_name == other.quotient_name
            and self.relations == other.relations
            and self.ideals == other.ideals
        )


def parse_ring_file(text: str) -> RingFile:
    lines = [line.split("#", 1)[0] for line in text.splitlines()]
    body = "\n".join(lines)
    statements = [s.strip() for s in body.split(";")]
    if statements and statements[-1]:
        raise ParseError(f"missing ';' after {statements[-1]!r}")
    rf = RingFile()
    for stmt in statements[:-1]:
        stmt = " ".join(stmt.split())
        if not stmt:
            continue
        if m := _RING.match(stmt):
            if rf.ambient_names:
                raise ParseError("ring declared twice")
            rf.ambient_names = tuple(n.strip() for n in m.group(1).split(","))
        elif m := _SUBALG.match(stmt):
            if not rf.ambient_names:
                raise ParseError("subalgebra needs a preceding 'ring' declaration")
            if rf.subalgebra_name or rf.quotient_name:
                raise ParseError("only one working ring per file")
            rf.subalgebra_name = m.group(1)
            gens = []
            for g in _split_list(m.group(2)):
                p = parse_polynomial(g, rf.ambient_names)
                if not p.is_monomial() or p.coefficient(next(iter(p.monomials()))) != 1:
                    raise ParseError(f"subalgebra generator {g!r} is not a monomial")
                gens.append(next(iter(p.monomials())))
            rf.subalgebra_generators = tuple(gens)
        elif m := _QUOT.match(stmt):
            if rf.subalgebra_name or rf.quotient_name:
                raise ParseError("only one working ring per file")
            names = tuple(n.strip() for n in m.group(2).split(","))
            if rf.ambient_names and rf.ambient_names != names:
                raise ParseError("quotient variables differ from the declared ring")
            rf.ambient_names = names
            rf.quotient_name = m.group(1)
            rf.relations = tuple(parse_polynomial(g, names) for g in _split_list(m.group(3) or ""))
        elif m := _IDEAL.match(stmt):
            if not rf.ambient_names:
                raise ParseError("ideal needs a preceding ring declaration")
            name = m.group(1)
            if name in rf.ideals:
                raise ParseError(f"ideal {name!r} defined twice")
            rf.ideals[name] = tuple(parse_polynomial(g, rf.ambient_names) for g in _split_list(m.group(2)))
        else:
            raise ParseError(f"cannot parse statement {stmt!r}")
    if not rf.ambient_names:
        raise ParseError("no ring declared")
    return rf


def format_ring_file(rf: RingFile) -> str:
    names = rf.ambient_names
    out = []
    if rf.quotient_name:
        rels = ", ".join(format_polynomial(r, names) for r in rf.relations)
        tail = f" / ({rels})" if rels else ""
        out.append(f"quotient {rf.quotient_name} = Q[{','.join(names)}]{tail};")
    else:
        out.append(f"ring Q[{','.join(names)}];")
        if rf.subalgebra_name:
            gens = ", ".join(format_monomial(g, names) for g in rf.subalgebra_generators)
            out.append(f"subalgebra {rf.subalgebra_name} = {gens};")
    for name, gens in rf.ideals.items():
        out.append(f"ideal {name} = {', '.join(format_polynomial(g, names) for g in gens)};")
    return "\n".join(out) + "\n"


def load_ring_file(path: str | Path) -> RingFile:
    return parse_ring_file(Path(path).read_text())


class RingContext:
    """The working ring of a ring file plus name resolution for ideals."""

    def __init__(self, rf: RingFile):
        self.file = rf
        if rf.subalgebra_name:
            self.subalgebra = MonomialSubalgebra(rf.subalgebra_generators, rf.ambient_names)
            self.ring = self.subalgebra.presentation
        else:
            self.subalgebra = None
            self.ring = RingPresentation(rf.ambient_names, rf.relations)

    def parse_elements(self, text: str) -> list[Polynomial]:
        polys = [parse_polynomial(g, self.file.ambient_names) for g in _split_list(text)]
        return self.transport(polys)

    def transport(self, polys) -> list[Polynomial]:
        if self.subalgebra is None:
            return list(polys)
        return [self.subalgebra.to_presentation(p) for p in polys]

    def ideal(self, spec: str) -> Ideal:
        """Resolve an ideal name from the file, ``m``, ``0``, or an inline generator list."""
        spec = spec.strip()
        if spec in self.file.ideals:
            return Ideal(self.ring, self.transport(self.file.ideals[spec]))
        if spec == "m":
            return self.ring.maximal_ideal
        if spec in ("0", "zero"):
            return self.ring.zero_ideal()
        try:
            return Ideal(self.ring, self.parse_elements(spec))
        except ParseError as exc:
            raise ParseError(f"{spec!r} is neither a defined ideal nor a generator list ({exc})") from None

    def elements(self, spec: str) -> list[Polynomial]:
        spec = spec.strip()
        if spec in self.file.ideals:
            return self.transport(self.file.ideals[spec])
        return self.parse_elements(spec)

    def generator_strings(self, I: Ideal) -> list[str]:
        """Minimal generators printed in the file's own variables."""
        if self.subalgebra is not None:
            monos = self.subalgebra.monomial_generators(I)
            if monos is not None:
                return [format_monomial(m, self.file.ambient_names) for m in monos]
        return [self.ring.format(g) for g in I.minimalized().generators]

    def format_ideal(self, I: Ideal) -> str:
        gens = self.generator_strings(I)
        return "(" + ", ".join(gens) + ")" if gens else "(0)"

    def format_element(self, f: Polynomial) -> str:
        if self.subalgebra is not None:
            return format_polynomial(self.subalgebra.to_ambient(f), self.file.ambient_names)
        return self.ring.format(f)
