"""Truncated Drinfeld dg quotient of a finite-dimensional algebra.

Adjoining a degree -1 element x with d(x) = e to A yields, as a complex,
components Ae (x (eAe x)^p) eA in degree -p-1 with the alternating collapse
differential; multiplication merges at the junction.  Components are
truncated at a tensor-length bound; products that would leave the range are
flagged rather than computed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PreconditionError
from .findim import FiniteDimAlgebra
from .linalg import Echelon


@dataclass(frozen=True)
class TensorWord:
    """Basis word a0 (x a1 ... x a_p) x a_{p+1} as a tuple of basis indices."""

    factors: tuple

    @property
    def p(self) -> int:
        return len(self.factors) - 2

    @property
    def degree(self) -> int:
        return -len(self.factors) + 1


@dataclass
class ProductResult:
    terms: dict
    overflow: bool = False


class DrinfeldComplex:
    """Components of degree >= -p_max - 1 of the Drinfeld quotient."""

    def __init__(self, A: FiniteDimAlgebra, e_vertices, p_max: int):
        if p_max < 0:
            raise PreconditionError("p_max must be >= 0")
        unknown = [v for v in e_vertices if v not in A.idempotent]
        if unknown:
            raise PreconditionError(f"unknown vertices in idempotent set: {unknown}")
        self.A = A
        self.e_vertices = tuple(sorted(set(e_vertices)))
        self.p_max = p_max
        eset = set(self.e_vertices)
        self.Ae = [i for i in range(A.dim) if A.source_of(i) in eset]
        self.eA = [i for i in range(A.dim) if A.target_of(i) in eset]
        self.eAe = [i for i in self.Ae if A.target_of(i) in eset]

    def component_basis(self, p: int) -> list[TensorWord]:
        if not 0 <= p <= self.p_max:
            raise PreconditionError(f"component p={p} outside truncation")
        mids = list(itertools.product(self.eAe, repeat=p))
        return [TensorWord((a0,) + mid + (ap1,))
                for a0 in self.Ae for mid in mids for ap1 in self.eA]

    def component_dims(self) -> dict[int, int]:
        dims = {0: self.A.dim}
        nAe, neA, neAe = len(self.Ae), len(self.eA), len(self.eAe)
        for p in range(self.p_max + 1):
            dims[-p - 1] = nAe * neA * neAe ** p
        return dims

    def differential(self, word: TensorWord):
        """Alternating sum of adjacent collapses; lands one component up.

        For p = 0 the value is a coordinate dict over A's basis; otherwise a
        dict over TensorWords with one fewer tensor factor.
        """
        fs = word.factors
        acc: dict = {}
        for i in range(len(fs) - 1):
            cell = self.A.table.get((fs[i], fs[i + 1]))
            if not cell:
                continue
            sign = Fraction(-1) ** (i % 2)
            for k, c in cell.items():
                if word.p == 0:
                    key = k
                else:
                    key = TensorWord(fs[:i] + (k,) + fs[i + 2:])
                s = acc.get(key, Fraction(0)) + sign * c
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        return acc

    def multiply_words(self, w1: TensorWord, w2: TensorWord) -> ProductResult:
        p_out = w1.p + w2.p + 1
        if p_out > self.p_max:
            return ProductResult({}, overflow=True)
        cell = self.A.table.get((w1.factors[-1], w2.factors[0]))
        out: dict = {}
        if cell:
            for k, c in cell.items():
                out[TensorWord(w1.factors[:-1] + (k,) + w2.factors[1:])] = c
        return ProductResult(out)

    def multiply_word_by_algebra(self, w: TensorWord, a: dict,
                                 on_left: bool) -> dict:
        """Product with a degree-0 coordinate vector on the given side."""
        out: dict = {}
        for j, cj in a.items():
            pair = (j, w.factors[0]) if on_left else (w.factors[-1], j)
            cell = self.A.table.get(pair)
            if not cell:
                continue
            for k, c in cell.items():
                key = (TensorWord((k,) + w.factors[1:]) if on_left
                       else TensorWord(w.factors[:-1] + (k,)))
                s = out.get(key, Fraction(0)) + cj * c
                if s:
                    out[key] = s
                else:
                    del out[key]
        return out


def _word_key(w: TensorWord):
    return w.factors


@dataclass
class H0Result:
    dim: int
    basis: tuple
    span_dim: int

    def to_json(self, A: FiniteDimAlgebra, format_path) -> dict:
        return {"dim": self.dim,
                "basis": [format_path(A.gq, A.basis[i]) for i in self.basis]}


def drinfeld_h0(A: FiniteDimAlgebra, e_vertices,
                complex_: Optional[DrinfeldComplex] = None) -> H0Result:
    """dim and coset basis of A/AeA, cross-checked against coker(d^{-1})."""
    cx = complex_ if complex_ is not None else DrinfeldComplex(A, e_vertices, 0)

    span = Echelon()
    for i in cx.Ae:
        for k in cx.eA:
            for j in cx.e_vertices:
                if A.source_of(i) != j or A.target_of(k) != j:
                    continue
                prod = A.multiply({i: Fraction(1)}, {k: Fraction(1)})
                if prod:
                    span.add(prod)

    image = Echelon()
    for word in cx.component_basis(0):
        val = cx.differential(word)
        if val:
            image.add(val)

    if span.rank != image.rank or set(span.rows) != set(image.rows):
        raise AssertionError(
            "AeA-span and coker(d^{-1}) routes disagree: "
            f"ranks {span.rank} vs {image.rank}")
    leading = set(span.rows)
    basis = tuple(i for i in range(A.dim) if i not in leading)
    return H0Result(A.dim - span.rank, basis, span.rank)


def verify_d_squared(cx: DrinfeldComplex) -> Optional[TensorWord]:
    """First word with d(d(word)) != 0 among components p = 1..p_max, or None."""
    for p in range(1, cx.p_max + 1):
        for word in cx.component_basis(p):
            first = cx.differential(word)
            acc: dict = {}
            for key, c in first.items():
                for key2, c2 in cx.differential(key).items():
                    s = acc.get(key2, Fraction(0)) + c * c2
                    if s:
                        acc[key2] = s
                    else:
                        del acc[key2]
            if acc:
                return word
    return None


def verify_leibniz(cx: DrinfeldComplex, cap: int = 2000,
                   seed: int = 0xD91) -> Optional[tuple]:
    """Check d(uv) = d(u) v + (-1)^{|u|} u d(v) for word pairs fitting the range.

    Pairs (p1, p2) with p1 + p2 + 1 <= p_max are enumerated exhaustively when
    few, otherwise sampled deterministically.  Returns a failing pair or None.
    """
    pairs: list[tuple[TensorWord, TensorWord]] = []
    for p1 in range(cx.p_max):
        for p2 in range(cx.p_max - p1):
            b1 = cx.component_basis(p1)
            b2 = cx.component_basis(p2)
            if len(b1) * len(b2) <= cap:
                pairs.extend(itertools.product(b1, b2))
            else:
                rng = random.Random(seed + 31 * p1 + p2)
                for _ in range(cap):
                    pairs.append((rng.choice(b1), rng.choice(b2)))

    def add_into(acc: dict, terms: dict, coeff: Fraction):
        for k, c in terms.items():
            s = acc.get(k, Fraction(0)) + coeff * c
            if s:
                acc[k] = s
            else:
                del acc[k]

    for u, v in pairs:
        uv = cx.multiply_words(u, v)
        if uv.overflow:
            continue
        lhs: dict = {}
        for w, c in uv.terms.items():
            add_into(lhs, cx.differential(w), c)

        rhs: dict = {}
        du = cx.differential(u)
        if u.p == 0:
            # d(u) lands in A; multiply v by it on the left
            for key, c in cx.multiply_word_by_algebra(v, du, on_left=True).items():
                add_into(rhs, {key: c}, Fraction(1))
        else:
            for w, c in du.items():
                prod = cx.multiply_words(w, v)
                if prod.overflow:
                    continue
                add_into(rhs, prod.terms, c)
        sign = Fraction(-1) ** (u.degree % 2)
        dv = cx.differential(v)
        if v.p == 0:
            for key, c in cx.multiply_word_by_algebra(u, dv, on_left=False).items():
                add_into(rhs, {key: c}, sign)
        else:
            for w, c in dv.items():
                prod = cx.multiply_words(u, w)
                if prod.overflow:
                    continue
                add_into(rhs, prod.terms, sign * c)
        if lhs != rhs:
            return (u, v)
    return None
