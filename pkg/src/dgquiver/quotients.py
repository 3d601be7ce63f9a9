"""Vertex deletion and the contracting homotopy certifying it.

Deleting a set I of vertices kills all paths passing through I (endpoints
included); on the surviving arrows the differential keeps only support paths
avoiding I.  When the deleted vertex carries x with d(x) = e_i, the explicit
homotopy h cuts each through-i path at its first visit to i and inserts x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .dga import DgQuiverAlgebra, extend_d
from .elements import PathElement, basis_paths
from .errors import PreconditionError, StructureError
from .quiver import GradedQuiver, Path, Quiver


def delete_vertices(A: DgQuiverAlgebra, vertices) -> DgQuiverAlgebra:
    """Quotient by the two-sided ideal generated by the trivial paths at I."""
    gq = A.gq
    quiver = gq.quiver
    dropped = set(vertices)
    for v in dropped:
        if not quiver.has_vertex(v):
            raise StructureError(f"unknown vertex {v}")
    keep_vertices = [v for v in quiver.vertices if v not in dropped]
    if not keep_vertices:
        raise StructureError("deleting every vertex leaves no quiver")
    keep_arrows = [a for a in quiver.arrows
                   if a.source not in dropped and a.target not in dropped]
    remap = {a.ident: new for new, a in enumerate(keep_arrows)}
    new_quiver = Quiver.build(
        [(v, quiver.labels[v]) if v in quiver.labels else v for v in keep_vertices],
        [(a.name, a.source, a.target) for a in keep_arrows])
    degree = {remap[a.ident]: gq.degree[a.ident] for a in keep_arrows}
    weight = None
    if gq.weight is not None:
        weight = {remap[a.ident]: gq.weight[a.ident] for a in keep_arrows}
    new_gq = GradedQuiver.build(new_quiver, degree, weight)

    d: dict[int, PathElement] = {}
    for a in keep_arrows:
        dx = A.d.get(a.ident)
        if dx is None or dx.is_zero:
            continue
        terms: dict[Path, Fraction] = {}
        for p, c in dx.terms.items():
            if gq.passes_through(p, dropped):
                continue
            terms[Path(tuple(remap[i] for i in p.arrows), p.source, p.target)] = c
        if terms:
            d[remap[a.ident]] = PathElement(new_gq, terms)
    return DgQuiverAlgebra(new_gq, d, weight_homogeneous=A.weight_homogeneous)


def _check_contraction_input(A: DgQuiverAlgebra, vertex: int, x: PathElement):
    if x.gq != A.gq:
        raise StructureError("contraction element over a different quiver")
    for p in x.terms:
        if p.source != vertex or p.target != vertex:
            raise PreconditionError(
                f"contraction element must be supported on cycles at {vertex}")


@dataclass
class Homotopy:
    """Evaluator for the cut-and-insert homotopy at a contractible vertex."""

    algebra: DgQuiverAlgebra
    vertex: int
    x: PathElement

    def on_path(self, p: Path) -> PathElement:
        gq = self.algebra.gq
        seq = gq.vertex_sequence(p)
        try:
            r = seq.index(self.vertex)
        except ValueError:
            raise PreconditionError(
                f"path does not pass through vertex {self.vertex}") from None
        arrows = p.arrows
        if r == 0:
            prefix = PathElement.of_path(gq, gq.trivial(p.target))
        else:
            pre = arrows[:r]
            prefix = PathElement.of_path(
                gq, Path(pre, gq.quiver.arrow(pre[-1]).source, p.target))
        if r == len(arrows):
            suffix = PathElement.of_path(gq, gq.trivial(p.source))
        else:
            suf = arrows[r:]
            suffix = PathElement.of_path(
                gq, Path(suf, p.source, gq.quiver.arrow(suf[0]).target))
        sign_exp = sum(gq.degree[i] for i in arrows[:r])
        sign = Fraction(-1) ** (sign_exp % 2)
        return (prefix * self.x * suffix).scale(sign)

    def __call__(self, x: Union[Path, PathElement]) -> PathElement:
        if isinstance(x, Path):
            return self.on_path(x)
        acc = PathElement.zero(self.algebra.gq)
        for p, c in x.terms.items():
            acc = acc + self.on_path(p).scale(c)
        return acc


def contracting_homotopy(A: DgQuiverAlgebra, vertex: int, x: PathElement) -> Homotopy:
    """Build h with dh + hd = id on through-vertex paths; requires d(x) = e_i."""
    _check_contraction_input(A, vertex, x)
    e_i = PathElement.of_path(A.gq, A.gq.trivial(vertex))
    if extend_d(A, x) != e_i:
        raise PreconditionError("d(x) != e_i for the given contraction element")
    return Homotopy(A, vertex, x)


@dataclass
class ContractionReport:
    ok: bool
    checked: int = 0
    reason: Optional[str] = None
    failing_path: Optional[Path] = None

    def to_json(self) -> dict:
        out = {"ok": self.ok, "checked": self.checked}
        if self.reason:
            out["reason"] = self.reason
        return out


def verify_contraction(A: DgQuiverAlgebra, vertex: int, x: PathElement,
                       max_length: int) -> ContractionReport:
    """Check (d h + h d)(p) = p for every through-vertex path of length <= L."""
    try:
        _check_contraction_input(A, vertex, x)
    except (PreconditionError, StructureError) as exc:
        return ContractionReport(False, 0, str(exc))
    e_i = PathElement.of_path(A.gq, A.gq.trivial(vertex))
    dx = extend_d(A, x)
    if dx != e_i:
        return ContractionReport(False, 0, f"d(x) != e_{vertex}: got {dx!r}")
    h = Homotopy(A, vertex, x)
    checked = 0
    for p in basis_paths(A.gq, max_length):
        if not A.gq.passes_through(p, {vertex}):
            continue
        lhs = extend_d(A, h.on_path(p)) + h(extend_d(A, p))
        if lhs != PathElement.of_path(A.gq, p):
            return ContractionReport(False, checked,
                                     "dh + hd differs from identity", p)
        checked += 1
    return ContractionReport(True, checked)
