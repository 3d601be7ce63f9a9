"""Exact rational linear algebra on graded pieces.

truncated_cohomology computes H^n of a weight-homogeneous dg quiver algebra
one (degree, weight) block at a time; every arrow must carry weight >= 1 so
each block is finite (paths of weight w have length <= w).  For quotient
algebras, quotient_dim_truncated reports per-level dimensions of the path
span modulo shifted relations: exact weightwise for length-homogeneous
relations, labeled upper bounds otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .constructions import AlgebraPresentation
from .dga import DgQuiverAlgebra, extend_d
from .elements import PathElement, basis_paths
from .errors import GradingError, PreconditionError
from .linalg import Echelon, left_kernel
from .quiver import Path, path_key

from .findim import relation_span_generators


@dataclass
class CohomologyEntry:
    degree: int
    weight: int
    dim: int
    representatives: list
    exact: bool = True

    def to_json(self) -> dict:
        return {"degree": self.degree, "weight": self.weight,
                "dim": self.dim, "exact": self.exact}


def _require_weighted_homogeneous(A: DgQuiverAlgebra):
    gq = A.gq
    if gq.weight is None:
        raise GradingError(
            "no weight grading: use quotient_dim_truncated for untruncatable input")
    if not A.weight_homogeneous:
        raise GradingError(
            "differential not declared weight-homogeneous: "
            "use quotient_dim_truncated instead")
    for ident, dx in A.d.items():
        for p in dx.terms:
            if gq.path_weight(p) != gq.weight[ident]:
                raise GradingError(
                    f"d({gq.quiver.arrow(ident).name}) is not weight-homogeneous")
    bad = [a.name for a in gq.quiver.arrows if gq.weight[a.ident] < 1]
    if bad:
        raise PreconditionError(
            f"graded pieces need arrow weights >= 1 to be finite; offending: {bad}")


def _piece(A: DgQuiverAlgebra, degree: int, weight: int) -> list[Path]:
    if weight < 0:
        return []
    return basis_paths(A.gq, weight, degree=degree, weight=weight)


def truncated_cohomology(A: DgQuiverAlgebra, degree: int, weight: int,
                         want_representatives: bool = True) -> CohomologyEntry:
    """dim ker d / im d on the (degree, weight) block, with cocycle lifts."""
    _require_weighted_homogeneous(A)
    gq = A.gq
    piece = _piece(A, degree, weight)
    if not piece:
        return CohomologyEntry(degree, weight, 0, [])
    d_rows = [extend_d(A, p).terms for p in piece]
    kernel = left_kernel(d_rows, path_key)

    below = _piece(A, degree - 1, weight)
    image = Echelon(path_key)
    for p in below:
        image.extend([extend_d(A, p).terms])

    chosen = Echelon(path_key)
    reps: list[PathElement] = []
    dim = 0
    for tag in kernel:
        vec = {piece[i]: c for i, c in tag.items()}
        red = chosen.reduce(image.reduce(vec))
        if red:
            chosen.add(red)
            dim += 1
            if want_representatives:
                rep = PathElement(gq, vec)
                assert extend_d(A, rep).is_zero
                reps.append(rep)
    return CohomologyEntry(degree, weight, dim, reps)


@dataclass
class LevelEntry:
    level: int
    total: int
    by_weight: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"level": self.level, "dim": self.total}
        if self.by_weight is not None:
            out["by_weight"] = {str(w): d for w, d in sorted(self.by_weight.items())}
        return out


@dataclass
class DimensionTable:
    levels: list
    homogeneous: bool
    stabilized_at: Optional[int]

    @property
    def exact(self) -> bool:
        return self.homogeneous

    @property
    def stabilized(self) -> bool:
        return self.stabilized_at is not None

    def to_json(self) -> dict:
        return {"levels": [l.to_json() for l in self.levels],
                "exact": self.exact,
                "stabilized_at": self.stabilized_at,
                "upper_bound_only": not self.homogeneous}


def quotient_dim_truncated(P: AlgebraPresentation, max_length: int) -> DimensionTable:
    """Per-level dimensions of paths up to L modulo shifted relations."""
    if max_length < 0:
        raise PreconditionError("max_length must be >= 0")
    homogeneous = all(len({p.length for p in r.terms}) == 1 for r in P.relations)
    gq = P.gq
    paths = basis_paths(gq, max_length)
    counts = [0] * (max_length + 1)
    for p in paths:
        counts[p.length] += 1

    ech = Echelon(path_key)
    gens = relation_span_generators(P, max_length)
    pos = 0
    levels: list[LevelEntry] = []
    total_paths = 0
    for level in range(max_length + 1):
        total_paths += counts[level]
        while pos < len(gens) and gens[pos][0] <= level:
            ech.add(gens[pos][1])
            pos += 1
        total = total_paths - ech.rank
        by_weight = None
        if homogeneous:
            lead_by_len: dict[int, int] = {}
            for p in ech.rows:
                lead_by_len[p.length] = lead_by_len.get(p.length, 0) + 1
            by_weight = {w: counts[w] - lead_by_len.get(w, 0)
                         for w in range(level + 1)}
        levels.append(LevelEntry(level, total, by_weight))

    stabilized_at = None
    for k in range(len(levels) - 1):
        a, b = levels[k], levels[k + 1]
        if homogeneous:
            same = all(b.by_weight.get(w, 0) == a.by_weight.get(w, 0)
                       for w in range(k + 2))
        else:
            same = a.total == b.total
        if same:
            stabilized_at = k
            break
    return DimensionTable(levels, homogeneous, stabilized_at)


def hilbert_report(obj: Union[AlgebraPresentation, DgQuiverAlgebra],
                   weights, degree: int = 0,
                   source: Optional[int] = None,
                   target: Optional[int] = None) -> dict:
    """Weightwise dimensions of a truncated quotient, or of cohomology.

    For a presentation, the weight is the path length and the dimensions are
    exact (length-homogeneous relations required); source/target restrict to
    a corner e_t A e_s.  For a dg algebra, the report gives H^degree per
    weight.
    """
    weights = sorted(set(int(w) for w in weights))
    if isinstance(obj, AlgebraPresentation):
        for r in obj.relations:
            if len({p.length for p in r.terms}) != 1:
                raise GradingError("hilbert_report needs length-homogeneous relations")
        if degree != 0:
            raise PreconditionError("a presentation is concentrated in degree 0")
        out: dict[int, int] = {}
        if not weights:
            return out
        gq = obj.gq
        for w in weights:
            if w < 0:
                out[w] = 0
                continue
            block = basis_paths(gq, w, source=source, target=target)
            block = [p for p in block if p.length == w]
            ech = Echelon(path_key)
            for top, terms in relation_span_generators(obj, w):
                if top != w:
                    continue
                keep = {p: c for p, c in terms.items()
                        if (source is None or p.source == source)
                        and (target is None or p.target == target)}
                if len(keep) == len(terms):
                    ech.add(terms)
            out[w] = len(block) - ech.rank
        return out
    out = {}
    for w in weights:
        out[w] = truncated_cohomology(obj, degree, w,
                                      want_representatives=False).dim
    return out
