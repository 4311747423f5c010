"""Sparse exact row echelon forms over Q.

Vectors are dicts ``{coordinate: Fraction}``; coordinates only need to be
hashable and comparable through ``key``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CeilingExceeded


def _axpy(target: dict, coeff: Fraction, source: dict):
    for k, v in source.items():
        w = target.get(k, 0) - coeff * v
        if w:
            target[k] = w
        else:
            target.pop(k, None)


class EchelonSpan:
    """Incrementally maintained echelon basis of a span of sparse vectors.

    Each row may carry a *tag* vector that is transformed alongside it,
    which turns the span into a kernel finder (row-reduce ``[A | I]``).
    """

    def __init__(self, key=None, ceiling: int | None = None):
        self.key = key or (lambda c: c)
        self.ceiling = ceiling
        self.rows: dict = {}  # pivot -> (vector, tag)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict, tag: dict | None = None) -> tuple[dict, dict | None]:
        vec = dict(vec)
        tag = dict(tag) if tag is not None else None
        while vec:
            pivot = max(vec, key=self.key)
            row = self.rows.get(pivot)
            if row is None:
                break
            coeff = vec[pivot] / row[0][pivot]
            _axpy(vec, coeff, row[0])
            if tag is not None:
                _axpy(tag, coeff, row[1])
        else:
            return vec, tag
        # leading coordinate is free; reduce the lower coordinates too
        out, rest = {}, vec
        while rest:
            pivot = max(rest, key=self.key)
            row = self.rows.get(pivot)
            if row is None:
                out[pivot] = rest.pop(pivot)
                continue
            coeff = rest[pivot] / row[0][pivot]
            _axpy(rest, coeff, row[0])
            if tag is not None:
                _axpy(tag, coeff, row[1])
        return out, tag

    def add(self, vec: dict, tag: dict | None = None) -> tuple[bool, dict | None]:
        """Insert ``vec``; returns (was independent, reduced tag)."""
        red, tag = self.reduce(vec, tag)
        if not red:
            return False, tag
        pivot = max(red, key=self.key)
        self.rows[pivot] = (red, tag)
        if self.ceiling is not None and len(self.rows) > self.ceiling:
            raise CeilingExceeded(f"span dimension exceeded ceiling {self.ceiling}")
        return True, tag

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]
