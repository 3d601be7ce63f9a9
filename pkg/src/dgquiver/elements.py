"""Exact-arithmetic elements of graded path algebras.

A PathElement is a finite rational linear combination of paths over a fixed
graded quiver.  All operations are pure and return canonical values (no zero
coefficients are stored).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import GradingError, QuiverMismatchError, StructureError
from .quiver import GradedQuiver, Path, compose, path_key


class PathElement:
    """A finite map Path -> Fraction over a fixed GradedQuiver."""

    __slots__ = ("gq", "terms")

    def __init__(self, gq: GradedQuiver, terms: Optional[dict] = None):
        clean: dict[Path, Fraction] = {}
        for path, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                clean[path] = c
        self.gq = gq
        self.terms = clean

    @classmethod
    def zero(cls, gq: GradedQuiver) -> "PathElement":
        return cls(gq)

    @classmethod
    def unit(cls, gq: GradedQuiver) -> "PathElement":
        """The sum of all trivial paths."""
        return cls(gq, {gq.trivial(v): Fraction(1) for v in gq.quiver.vertices})

    @classmethod
    def of_path(cls, gq: GradedQuiver, path: Path, coeff=1) -> "PathElement":
        return cls(gq, {path: Fraction(coeff)})

    def _check_same(self, other: "PathElement"):
        if self.gq != other.gq:
            raise QuiverMismatchError("elements over different quivers")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathElement):
            return NotImplemented
        return self.gq == other.gq and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "PathElement") -> "PathElement":
        self._check_same(other)
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, Fraction(0)) + c
        return PathElement(self.gq, acc)

    def __neg__(self) -> "PathElement":
        return PathElement(self.gq, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "PathElement") -> "PathElement":
        return self + (-other)

    def scale(self, coeff) -> "PathElement":
        c = Fraction(coeff)
        if not c:
            return PathElement.zero(self.gq)
        return PathElement(self.gq, {p: c * v for p, v in self.terms.items()})

    def __rmul__(self, coeff) -> "PathElement":
        return self.scale(coeff)

    def __mul__(self, other) -> "PathElement":
        if not isinstance(other, PathElement):
            return self.scale(other)
        self._check_same(other)
        acc: dict[Path, Fraction] = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                r = compose(p, q)
                if r is None:
                    continue
                acc[r] = acc.get(r, Fraction(0)) + cp * cq
        return PathElement(self.gq, acc)

    def support(self) -> list[Path]:
        return sorted(self.terms, key=path_key)

    def coeff(self, path: Path) -> Fraction:
        return self.terms.get(path, Fraction(0))

    def homogeneous_component(self, deg: int, weight: Optional[int] = None) -> "PathElement":
        """Restriction to support paths of the given degree (and weight)."""
        if weight is not None and self.gq.weight is None:
            raise GradingError("weight requested without a weight grading")
        keep = {}
        for p, c in self.terms.items():
            if self.gq.path_degree(p) != deg:
                continue
            if weight is not None and self.gq.path_weight(p) != weight:
                continue
            keep[p] = c
        return PathElement(self.gq, keep)

    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all support paths, or None if mixed or zero."""
        degs = {self.gq.path_degree(p) for p in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def common_endpoints(self) -> Optional[tuple[int, int]]:
        """(source, target) shared by all support paths, else None."""
        ends = {(p.source, p.target) for p in self.terms}
        return ends.pop() if len(ends) == 1 else None

    def reattach(self, gq: GradedQuiver) -> "PathElement":
        """The same combination read over an extended quiver.

        Every arrow ident in the support must exist in ``gq`` under the same
        name, so extending a quiver with new arrows keeps old elements valid.
        """
        for p in self.terms:
            for ident in p.arrows:
                old = self.gq.quiver.arrow(ident)
                new = gq.quiver.arrow(ident)
                if old.name != new.name:
                    raise StructureError(
                        f"arrow ident {ident} renamed: {old.name!r} != {new.name!r}")
        return PathElement(gq, dict(self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "<PathElement 0>"
        bits = []
        for p in self.support():
            word = " ".join(self.gq.quiver.arrow(a).name for a in p.arrows) or f"e{p.source}"
            bits.append(f"{self.terms[p]}*{word}")
        return "<PathElement " + " + ".join(bits) + ">"


class Potential(PathElement):
    """A linear combination of degree-0 cycles of length >= 1."""

    def __init__(self, gq: GradedQuiver, terms: Optional[dict] = None):
        super().__init__(gq, terms)
        for p in self.terms:
            if p.is_trivial or p.source != p.target:
                raise StructureError("potential support must consist of cycles")
            for ident in p.arrows:
                if gq.degree[ident] != 0:
                    raise StructureError("potential arrows must have degree 0")

    @classmethod
    def from_element(cls, elem: PathElement) -> "Potential":
        return cls(elem.gq, dict(elem.terms))

    def cycle_length(self) -> Optional[int]:
        """Common support length when length-homogeneous, else None."""
        lens = {p.length for p in self.terms}
        return lens.pop() if len(lens) == 1 else None


def basis_paths(gq: GradedQuiver, max_length: int,
                source: Optional[int] = None, target: Optional[int] = None,
                degree: Optional[int] = None, weight: Optional[int] = None) -> list[Path]:
    """All paths of length <= max_length matching the filter, canonically ordered."""
    if max_length < 0:
        raise StructureError("max_length must be >= 0")
    if weight is not None and gq.weight is None:
        raise GradingError("weight filter requested without a weight grading")
    by_target: dict[int, list] = {v: [] for v in gq.quiver.vertices}
    for a in gq.quiver.arrows:
        by_target[a.target].append(a)

    def keep(p: Path) -> bool:
        if source is not None and p.source != source:
            return False
        if target is not None and p.target != target:
            return False
        if degree is not None and gq.path_degree(p) != degree:
            return False
        if weight is not None and gq.path_weight(p) != weight:
            return False
        return True

    out: list[Path] = []
    level = [gq.trivial(v) for v in sorted(gq.quiver.vertices)]
    out.extend(p for p in level if keep(p))
    for _ in range(max_length):
        nxt = []
        for p in level:
            for a in by_target[p.source]:
                nxt.append(Path(p.arrows + (a.ident,), a.source, p.target))
        nxt.sort(key=path_key)
        out.extend(p for p in nxt if keep(p))
        level = nxt
        if not level:
            break
    return out
