"""Exact rational linear algebra over sparse vectors with ordered keys.

Vectors are dicts mapping hashable keys (typically Path values) to nonzero
Fractions.  An Echelon keeps a fully inter-reduced row basis of a subspace:
each row is normalized to leading coefficient 1 and contains no other row's
leading key, so reduction to normal form is a single pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional


def vec_add(acc: dict, vec: dict, coeff: Fraction) -> None:
    """In-place acc += coeff * vec."""
    if not coeff:
        return
    for k, c in vec.items():
        s = acc.get(k, Fraction(0)) + coeff * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


class Echelon:
    """A subspace of the free module over ordered keys, in reduced form."""

    def __init__(self, key_sort: Callable = None):
        self.key_sort = key_sort if key_sort is not None else (lambda k: k)
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def leading_keys(self) -> list:
        return sorted(self.rows, key=self.key_sort)

    def reduce(self, vec: dict) -> dict:
        """Fully reduce vec modulo the stored rows (normal form)."""
        out = dict(vec)
        for k in [k for k in vec if k in self.rows]:
            c = out.get(k)
            if c:
                vec_add(out, self.rows[k], -c)
        return out

    def add(self, vec: dict) -> Optional[dict]:
        """Insert vec's residue; return the reduced row, or None if dependent."""
        red = self.reduce(vec)
        if not red:
            return None
        lead = max(red, key=self.key_sort)
        inv = 1 / red[lead]
        row = {k: c * inv for k, c in red.items()}
        # keep existing rows clear of the new pivot
        for other in self.rows.values():
            c = other.get(lead)
            if c:
                vec_add(other, row, -c)
                other.pop(lead, None)
        self.rows[lead] = row
        return row

    def extend(self, vecs: Iterable[dict]) -> int:
        added = 0
        for v in vecs:
            if self.add(v) is not None:
                added += 1
        return added

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def span_rank(vecs: Iterable[dict], key_sort: Callable = None) -> int:
    ech = Echelon(key_sort)
    ech.extend(vecs)
    return ech.rank


def left_kernel(rows: list[dict], key_sort: Callable = None) -> list[dict]:
    """Basis of {x : sum_i x[i] * rows[i] = 0}, as dicts over row indices.

    Row operations are tracked through an augmented tag vector, so the kernel
    basis comes out in echelon form over the row indices.
    """
    key = key_sort if key_sort is not None else (lambda k: k)
    work: list[tuple[object, dict, dict]] = []
    kernel: list[dict] = []
    for i, row in enumerate(rows):
        vec = dict(row)
        tag = {i: Fraction(1)}
        for lead, other_vec, other_tag in work:
            c = vec.get(lead)
            if c:
                vec_add(vec, other_vec, -c)
                vec_add(tag, other_tag, -c)
        if vec:
            lead = max(vec, key=key)
            inv = 1 / vec[lead]
            vec = {k: c * inv for k, c in vec.items()}
            tag = {k: c * inv for k, c in tag.items()}
            work.append((lead, vec, tag))
        else:
            kernel.append(tag)
    return kernel
