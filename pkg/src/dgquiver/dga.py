"""Differentials on graded path algebras.

A differential is stored on arrows only and extended to arbitrary elements by
the graded Leibniz rule; trivial paths map to 0.  Koszul signs use the
cohomological degree, never the weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .elements import PathElement
from .errors import QuiverMismatchError, StructureError
from .quiver import GradedQuiver, Path


@dataclass
class DgQuiverAlgebra:
    """A graded quiver together with a differential given on arrows.

    ``d`` maps arrow idents to PathElements; missing arrows have d = 0.
    ``weight_homogeneous`` declares (and validate() verifies) that d preserves
    the weight grading; it stays False for genuinely inhomogeneous cases.
    """

    gq: GradedQuiver
    d: dict = field(default_factory=dict)
    weight_homogeneous: bool = False

    def __post_init__(self):
        for ident, elem in self.d.items():
            self.gq.quiver.arrow(ident)
            if not isinstance(elem, PathElement) or elem.gq != self.gq:
                raise QuiverMismatchError(
                    f"d({self.gq.quiver.arrow(ident).name}) is not over this quiver")
        self.d = {i: e for i, e in self.d.items() if not e.is_zero}

    def d_of(self, ident: int) -> PathElement:
        return self.d.get(ident, PathElement.zero(self.gq))


def extend_d(A: DgQuiverAlgebra, x: Union[Path, PathElement]) -> PathElement:
    """Leibniz extension of the differential to a path or element."""
    gq = A.gq
    if isinstance(x, Path):
        x = PathElement.of_path(gq, x)
    if x.gq != gq:
        raise QuiverMismatchError("element over a different quiver")
    acc = PathElement.zero(gq)
    for p, c in x.terms.items():
        if p.is_trivial:
            continue
        arrows = p.arrows
        sign_exp = 0
        for j, ident in enumerate(arrows):
            dj = A.d.get(ident)
            if dj is not None and dj:
                if j == 0:
                    prefix = PathElement.of_path(gq, gq.trivial(p.target))
                else:
                    pre = arrows[:j]
                    prefix = PathElement.of_path(
                        gq, Path(pre, gq.quiver.arrow(pre[-1]).source, p.target))
                if j == len(arrows) - 1:
                    suffix = PathElement.of_path(gq, gq.trivial(p.source))
                else:
                    suf = arrows[j + 1:]
                    suffix = PathElement.of_path(
                        gq, Path(suf, p.source, gq.quiver.arrow(suf[0]).target))
                sign = Fraction(-1) ** (sign_exp % 2)
                acc = acc + (prefix * dj * suffix).scale(c * sign)
            sign_exp += gq.degree[ident]
    return acc


def declare_weight_homogeneous(A: DgQuiverAlgebra) -> DgQuiverAlgebra:
    """Verify weight homogeneity of d and return the algebra with the flag set."""
    gq = A.gq
    if gq.weight is None:
        raise StructureError("no weight grading to declare homogeneity against")
    for ident, dx in A.d.items():
        for p in dx.terms:
            if gq.path_weight(p) != gq.weight[ident]:
                raise StructureError(
                    f"d({gq.quiver.arrow(ident).name}) is not weight-homogeneous")
    return DgQuiverAlgebra(gq, dict(A.d), weight_homogeneous=True)


@dataclass
class DSquaredReport:
    ok: bool
    arrow: Optional[str] = None
    residual: Optional[PathElement] = None


def check_d_squared(A: DgQuiverAlgebra) -> DSquaredReport:
    """ok iff extend_d(A, d(a)) = 0 for every arrow a; reports first failure."""
    for arrow in A.gq.quiver.arrows:
        dx = A.d.get(arrow.ident)
        if dx is None or dx.is_zero:
            continue
        ddx = extend_d(A, dx)
        if not ddx.is_zero:
            return DSquaredReport(False, arrow.name, ddx)
    return DSquaredReport(True)


@dataclass
class Violation:
    kind: str
    arrow: Optional[str]
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "arrow": self.arrow, "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> list:
        return [v.to_json() for v in self.violations]


def validate(A: DgQuiverAlgebra) -> ValidationReport:
    """Aggregate endpoint, degree, weight-homogeneity, and d-squared checks."""
    gq = A.gq
    out: list[Violation] = []
    if A.weight_homogeneous and gq.weight is None:
        out.append(Violation("weight", None,
                             "declared weight-homogeneous but no weight grading present"))
    for arrow in gq.quiver.arrows:
        dx = A.d.get(arrow.ident)
        if dx is None or dx.is_zero:
            continue
        for p in dx.support():
            if (p.source, p.target) != (arrow.source, arrow.target):
                out.append(Violation(
                    "endpoint", arrow.name,
                    f"support path {p.source}->{p.target} does not match "
                    f"{arrow.source}->{arrow.target}"))
            want = gq.degree[arrow.ident] + 1
            if gq.path_degree(p) != want:
                out.append(Violation(
                    "degree", arrow.name,
                    f"support path has degree {gq.path_degree(p)}, expected {want}"))
            if A.weight_homogeneous and gq.weight is not None:
                if gq.path_weight(p) != gq.weight[arrow.ident]:
                    out.append(Violation(
                        "weight", arrow.name,
                        f"support path has weight {gq.path_weight(p)}, "
                        f"expected {gq.weight[arrow.ident]}"))
    dd = check_d_squared(A)
    if not dd.ok:
        out.append(Violation("d_squared", dd.arrow, f"d^2 = {dd.residual!r}"))
    return ValidationReport(out)
