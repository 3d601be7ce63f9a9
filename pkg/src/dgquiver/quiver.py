"""Finite quivers, integer gradings, and composable paths.

Paths use the function-order convention: in a word ``a1 a2 ... al`` the
rightmost arrow is applied first, so consecutive arrows must satisfy
``s(a_j) == t(a_{j+1})``.  The source of the word is ``s(a_l)``, the target is
``t(a_1)``, and a trivial path sits at a single vertex.  Composition ``p * q``
concatenates the words (q applied first) and is zero unless ``s(p) == t(q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import GradingError, StructureError


@dataclass(frozen=True)
class Arrow:
    ident: int
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A composable word of arrow idents, or a trivial path when empty."""

    arrows: tuple[int, ...]
    source: int
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


def path_key(p: Path) -> tuple:
    """Canonical ordering key: by length, then lexicographic on arrow ids."""
    return (len(p.arrows), p.arrows, p.source)


def compose(p: Path, q: Path) -> Optional[Path]:
    """Concatenation pq (q applied first); None is the distinguished zero."""
    if p.source != q.target:
        return None
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.arrows + q.arrows, q.source, p.target)


@dataclass(frozen=True)
class Quiver:
    """A finite directed graph with integer vertex ids and named arrows."""

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    labels: dict = field(default_factory=dict)

    @staticmethod
    def build(vertices: Iterable, arrows: Iterable[tuple[str, int, int]]) -> "Quiver":
        """Validated constructor.

        ``vertices`` is an iterable of ints or (int, label) pairs; ``arrows``
        of (name, source, target) triples.  Arrow idents are assigned in
        declaration order.
        """
        vs: list[int] = []
        labels: dict[int, str] = {}
        for v in vertices:
            if isinstance(v, tuple):
                vid, label = v
                labels[int(vid)] = str(label)
            else:
                vid = v
            vid = int(vid)
            if vid in vs:
                raise StructureError(f"duplicate vertex id {vid}")
            vs.append(vid)
        if not vs:
            raise StructureError("no vertices")
        vset = set(vs)
        built: list[Arrow] = []
        names: set[str] = set()
        for ident, (name, src, tgt) in enumerate(arrows):
            if name in names:
                raise StructureError(f"duplicate arrow name {name!r}")
            names.add(name)
            if src not in vset:
                raise StructureError(f"arrow {name!r} references undeclared vertex {src}")
            if tgt not in vset:
                raise StructureError(f"arrow {name!r} references undeclared vertex {tgt}")
            built.append(Arrow(ident, name, int(src), int(tgt)))
        return Quiver(tuple(vs), tuple(built), labels)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {a.name: a for a in self.arrows})

    def arrow(self, ident: int) -> Arrow:
        if not 0 <= ident < len(self.arrows):
            raise StructureError(f"unknown arrow ident {ident}")
        return self.arrows[ident]

    def arrow_named(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise StructureError(f"unknown arrow {name!r}") from None

    def has_vertex(self, v: int) -> bool:
        return v in self.vertices

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_into(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def sources(self) -> list[int]:
        """Vertices with no incoming arrow."""
        targets = {a.target for a in self.arrows}
        return [v for v in self.vertices if v not in targets]

    def has_oriented_cycle(self) -> Optional[list[int]]:
        """Return a vertex cycle if one exists, else None."""
        color = {v: 0 for v in self.vertices}
        stack: list[int] = []

        def visit(v: int) -> Optional[list[int]]:
            color[v] = 1
            stack.append(v)
            for a in self.arrows_from(v):
                w = a.target
                if color[w] == 1:
                    return stack[stack.index(w):] + [w]
                if color[w] == 0:
                    found = visit(w)
                    if found:
                        return found
            stack.pop()
            color[v] = 2
            return None

        for v in self.vertices:
            if color[v] == 0:
                found = visit(v)
                if found:
                    return found
        return None


@dataclass(frozen=True)
class GradedQuiver:
    """A quiver with a total cohomological degree map and optional weights."""

    quiver: Quiver
    degree: dict = field(default_factory=dict)
    weight: Optional[dict] = None

    @staticmethod
    def build(quiver: Quiver, degree: dict, weight: Optional[dict] = None) -> "GradedQuiver":
        idents = {a.ident for a in quiver.arrows}
        if set(degree) != idents:
            raise GradingError("degree map must be total over arrows")
        if weight is not None and set(weight) != idents:
            raise GradingError("weight map must be total over arrows when present")
        if weight is not None and not quiver.arrows:
            weight = None  # empty weighting is indistinguishable from none
        return GradedQuiver(quiver, {k: int(v) for k, v in degree.items()},
                            None if weight is None else {k: int(v) for k, v in weight.items()})

    @staticmethod
    def zero_graded(quiver: Quiver) -> "GradedQuiver":
        return GradedQuiver(quiver, {a.ident: 0 for a in quiver.arrows}, None)

    def trivial(self, v: int) -> Path:
        if not self.quiver.has_vertex(v):
            raise StructureError(f"unknown vertex {v}")
        return Path((), v, v)

    def arrow_path(self, ident: int) -> Path:
        a = self.quiver.arrow(ident)
        return Path((ident,), a.source, a.target)

    def path(self, idents: Sequence[int]) -> Path:
        """Build a path from arrow idents in juxtaposition (function) order."""
        if not idents:
            raise StructureError("use trivial(v) for length-0 paths")
        arrows = [self.quiver.arrow(i) for i in idents]
        for left, right in zip(arrows, arrows[1:]):
            if left.source != right.target:
                raise StructureError(
                    f"arrows {left.name!r} and {right.name!r} do not compose")
        return Path(tuple(idents), arrows[-1].source, arrows[0].target)

    def word(self, *names: str) -> Path:
        return self.path([self.quiver.arrow_named(n).ident for n in names])

    def path_degree(self, p: Path) -> int:
        return sum(self.degree[a] for a in p.arrows)

    def path_weight(self, p: Path) -> int:
        if self.weight is None:
            raise GradingError("quiver carries no weight grading")
        return sum(self.weight[a] for a in p.arrows)

    def vertex_sequence(self, p: Path) -> tuple[int, ...]:
        """Cut vertices of p: position 0 is t(p), position j is s(a_j)."""
        if p.is_trivial:
            return (p.source,)
        seq = [self.quiver.arrow(p.arrows[0]).target]
        for ident in p.arrows:
            seq.append(self.quiver.arrow(ident).source)
        return tuple(seq)

    def passes_through(self, p: Path, vertices) -> bool:
        vset = set(vertices)
        return any(v in vset for v in self.vertex_sequence(p))

    def with_weights(self, weight: Optional[dict]) -> "GradedQuiver":
        return GradedQuiver.build(self.quiver, self.degree, weight)
