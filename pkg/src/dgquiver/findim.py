"""Materialized finite-dimensional quotient algebras.

build_findim truncates the path algebra at a length bound, echelonizes the
span of shifted relations, and takes the non-leading paths as a normal-form
basis.  The table of structure constants is verified associative and unital
at construction (exhaustively up to dimension 30, sampled above).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from .constructions import AlgebraPresentation
from .elements import PathElement, basis_paths
from .errors import StabilizationError, StructureError
from .linalg import Echelon
from .quiver import GradedQuiver, Path, compose, path_key


@dataclass
class FiniteDimAlgebra:
    """An ordinary algebra with ordered path basis and structure constants."""

    presentation: AlgebraPresentation
    basis: tuple
    table: dict          # (i, j) -> {k: Fraction}
    idempotent: dict     # vertex id -> basis index of e_v

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def gq(self) -> GradedQuiver:
        return self.presentation.gq

    def multiply(self, x: dict, y: dict) -> dict:
        """Product of coordinate vectors over the basis."""
        acc: dict[int, Fraction] = {}
        for i, ci in x.items():
            for j, cj in y.items():
                cell = self.table.get((i, j))
                if not cell:
                    continue
                for k, c in cell.items():
                    s = acc.get(k, Fraction(0)) + ci * cj * c
                    if s:
                        acc[k] = s
                    else:
                        del acc[k]
        return acc

    def coords_of_basis(self, i: int) -> dict:
        return {i: Fraction(1)}

    def source_of(self, i: int) -> int:
        return self.basis[i].source

    def target_of(self, i: int) -> int:
        return self.basis[i].target


def relation_span_generators(P: AlgebraPresentation, max_length: int):
    """Yield (top_length, u*r*v) for all shifted relations fitting the bound."""
    gq = P.gq
    paths = basis_paths(gq, max_length)
    by_source: dict[int, list[Path]] = {}
    by_target: dict[int, list[Path]] = {}
    for p in paths:
        by_source.setdefault(p.source, []).append(p)
        by_target.setdefault(p.target, []).append(p)
    out = []
    for r in P.relations:
        src, tgt = r.common_endpoints()
        top = max(p.length for p in r.terms)
        for u in by_source.get(tgt, []):
            room = max_length - top - u.length
            if room < 0:
                continue
            ur = PathElement.of_path(gq, u) * r
            for v in by_target.get(src, []):
                if v.length > room:
                    continue
                urv = ur * PathElement.of_path(gq, v)
                out.append((u.length + top + v.length, urv.terms))
    out.sort(key=lambda pair: pair[0])
    return out


def truncated_quotient(P: AlgebraPresentation, max_length: int):
    """Echelon of the truncated relation span plus per-level dimensions."""
    gq = P.gq
    paths = basis_paths(gq, max_length)
    counts = [0] * (max_length + 1)
    for p in paths:
        counts[p.length] += 1
    ech = Echelon(path_key)
    dims: list[int] = []
    gens = relation_span_generators(P, max_length)
    pos = 0
    total_paths = 0
    for level in range(max_length + 1):
        total_paths += counts[level]
        while pos < len(gens) and gens[pos][0] <= level:
            ech.add(gens[pos][1])
            pos += 1
        dims.append(total_paths - ech.rank)
    return ech, dims, paths


def build_findim(P: AlgebraPresentation, max_length: int) -> FiniteDimAlgebra:
    """Basis and multiplication table of kQ/(relations), truncated at max_length."""
    ech, dims, paths = truncated_quotient(P, max_length)
    leading = set(ech.rows)
    basis = tuple(p for p in paths if p not in leading)
    if max_length < 1 or dims[-1] != dims[-2]:
        raise StabilizationError(
            f"dimensions {dims} did not stabilize within length {max_length}; "
            "the algebra may be infinite-dimensional, try a larger bound")
    top = max((p.length for p in basis), default=0)
    if 2 * top > max_length:
        raise StabilizationError(
            f"normal-form paths reach length {top}, too long to multiply within "
            f"the bound {max_length}; try a larger bound")
    assert len(basis) == dims[-1]

    index = {p: i for i, p in enumerate(basis)}

    def reduce_to_coords(terms: dict) -> dict:
        red = ech.reduce(terms)
        out = {}
        for p, c in red.items():
            if p not in index:
                raise StructureError("reduction left a non-basis path")
            out[index[p]] = c
        return out

    table: dict[tuple[int, int], dict] = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            pq = compose(p, q)
            if pq is None:
                continue
            cell = reduce_to_coords({pq: Fraction(1)})
            if cell:
                table[(i, j)] = cell

    alg = FiniteDimAlgebra(
        P, basis, table,
        {v: index[p] for v, p in ((v, P.gq.trivial(v)) for v in P.quiver.vertices)})
    _verify_table(alg)
    return alg


def _verify_table(alg: FiniteDimAlgebra, sample: int = 4000):
    n = alg.dim
    unit = {}
    for v, i in alg.idempotent.items():
        unit[i] = Fraction(1)
    for i in range(n):
        x = alg.coords_of_basis(i)
        if alg.multiply(unit, x) != x or alg.multiply(x, unit) != x:
            raise StructureError("sum of trivial paths is not a unit")
    if n <= 30:
        triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    else:
        rng = random.Random(0xA55)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(sample))
    for i, j, k in triples:
        a, b, c = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
        left = alg.multiply(alg.multiply(a, b), c)
        right = alg.multiply(a, alg.multiply(b, c))
        if left != right:
            raise StructureError(
                f"multiplication table not associative at basis triple {(i, j, k)}")
