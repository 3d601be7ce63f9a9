"""Leavitt path algebra presentations and normal-form arithmetic.

The presentation adjoins, to a copy of Q with arrows alpha' in degree -1, a
star arrow alpha'* of degree +1 per arrow, subject to:

    (CK1a)  sum over arrows into i of alpha' alpha'*  =  e_i
    (CK1b)  alpha'* alpha'  =  e_{s(alpha')}
    (CK1c)  alpha'* beta'   =  0   for alpha' != beta'

Rewriting eliminates star-then-unstar pairs (R1) and, at each vertex, the
sigma sigma* pair of the designated special incoming arrow (R2), leaving
monomials p q* with no special junction.  The word p q* composes exactly when
p and q share their source vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .elements import PathElement
from .errors import PreconditionError, StructureError
from .quiver import GradedQuiver, Path, Quiver


@dataclass
class LeavittPresentation:
    gq: GradedQuiver
    base_of: dict        # original arrow ident -> alpha' ident
    star_of: dict        # alpha' ident -> alpha'* ident
    special: dict        # vertex -> special incoming alpha' ident
    ck1a: dict           # vertex -> sum alpha' alpha'* - e_i
    ck1b: dict           # alpha' ident -> alpha'* alpha' - e_s
    ck1c: tuple          # alpha'* beta' for distinct composable pairs

    @property
    def base_arrows(self) -> tuple:
        return tuple(sorted(self.star_of))

    def is_star(self, ident: int) -> bool:
        return ident in self.unstar_of

    def __post_init__(self):
        self.unstar_of = {s: b for b, s in self.star_of.items()}


def leavitt_presentation(Q: Quiver) -> LeavittPresentation:
    """Instantiate the relation families over a source-free quiver."""
    srcs = Q.sources()
    if srcs:
        raise PreconditionError(f"quiver has a source: vertex {srcs[0]}")
    taken: set[str] = set()
    decls: list[tuple[str, int, int]] = []
    base_of: dict[int, int] = {}
    for arr in Q.arrows:
        name = f"{arr.name}'"
        while name in taken:
            name += "'"
        taken.add(name)
        base_of[arr.ident] = len(decls)
        decls.append((name, arr.source, arr.target))
    star_of: dict[int, int] = {}
    for arr in Q.arrows:
        name = decls[base_of[arr.ident]][0] + "*"
        while name in taken:
            name += "'"
        taken.add(name)
        star_of[base_of[arr.ident]] = len(decls)
        decls.append((name, arr.target, arr.source))
    verts = [(v, Q.labels[v]) if v in Q.labels else v for v in Q.vertices]
    quiver = Quiver.build(verts, decls)
    nb = len(Q.arrows)
    degree = {a.ident: (-1 if a.ident < nb else 1) for a in quiver.arrows}
    gq = GradedQuiver.build(quiver, degree)

    incoming: dict[int, list[int]] = {v: [] for v in Q.vertices}
    for b in sorted(base_of.values()):
        incoming[quiver.arrow(b).target].append(b)
    special = {v: max(bs) for v, bs in incoming.items()}

    ck1a = {}
    for v in Q.vertices:
        acc = PathElement.zero(gq)
        for b in incoming[v]:
            acc = acc + PathElement.of_path(gq, gq.path([b, star_of[b]]))
        ck1a[v] = acc - PathElement.of_path(gq, gq.trivial(v))
    ck1b = {}
    for b, s in star_of.items():
        src = quiver.arrow(b).source
        ck1b[b] = (PathElement.of_path(gq, gq.path([s, b]))
                   - PathElement.of_path(gq, gq.trivial(src)))
    ck1c = []
    for b1 in sorted(star_of):
        for b2 in sorted(star_of):
            if b1 == b2:
                continue
            if quiver.arrow(b1).target != quiver.arrow(b2).target:
                continue
            ck1c.append(PathElement.of_path(gq, gq.path([star_of[b1], b2])))
    return LeavittPresentation(gq, base_of, star_of, special, ck1a, ck1b, tuple(ck1c))


class LeavittRewriter:
    """Normal-form computation over a Leavitt presentation, with memoization."""

    def __init__(self, pres: LeavittPresentation):
        self.pres = pres
        self._memo: dict[Path, PathElement] = {}

    def _first_redex(self, arrows: tuple) -> Optional[tuple]:
        pres = self.pres
        for j in range(len(arrows) - 1):
            left, right = arrows[j], arrows[j + 1]
            if pres.is_star(left) and not pres.is_star(right):
                return ("r1", j)
            if not pres.is_star(left) and pres.is_star(right):
                sigma = pres.unstar_of[right]
                if left == sigma:
                    vertex = pres.gq.quiver.arrow(sigma).target
                    if pres.special[vertex] == sigma:
                        return ("r2", j)
        return None

    def _subword(self, arrows: tuple, vertex_if_empty: int) -> Path:
        gq = self.pres.gq
        if not arrows:
            return gq.trivial(vertex_if_empty)
        return gq.path(list(arrows))

    def normal_form_path(self, word: Path) -> PathElement:
        gq = self.pres.gq
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        redex = self._first_redex(word.arrows)
        if redex is None:
            result = PathElement.of_path(gq, word)
            self._memo[word] = result
            return result
        kind, j = redex
        arrows = word.arrows
        left, right = arrows[j], arrows[j + 1]
        quiver = gq.quiver
        if kind == "r1":
            if self.pres.unstar_of[left] != right:
                result = PathElement.zero(gq)
            else:
                at = quiver.arrow(right).source
                rest = arrows[:j] + arrows[j + 2:]
                result = self.normal_form_path(self._subword(rest, at))
        else:
            sigma = left
            vertex = quiver.arrow(sigma).target
            rest = arrows[:j] + arrows[j + 2:]
            result = self.normal_form_path(self._subword(rest, vertex))
            for tau in sorted(self.pres.star_of):
                if tau == sigma or quiver.arrow(tau).target != vertex:
                    continue
                replaced = arrows[:j] + (tau, self.pres.star_of[tau]) + arrows[j + 2:]
                result = result - self.normal_form_path(gq.path(list(replaced)))
        self._memo[word] = result
        return result

    def normal_form(self, x: PathElement) -> PathElement:
        if x.gq != self.pres.gq:
            raise StructureError("element over a different quiver")
        acc = PathElement.zero(self.pres.gq)
        for p, c in x.terms.items():
            acc = acc + self.normal_form_path(p).scale(c)
        return acc


def leavitt_normal_form(pres: LeavittPresentation, x: PathElement) -> PathElement:
    return LeavittRewriter(pres).normal_form(x)


def split_monomial(pres: LeavittPresentation, word: Path) -> tuple:
    """Split a normal-form word into (p arrows, q arrows) with word = p q*."""
    arrows = word.arrows
    k = 0
    while k < len(arrows) and not pres.is_star(arrows[k]):
        k += 1
    p_part = arrows[:k]
    star_part = arrows[k:]
    if any(not pres.is_star(a) for a in star_part):
        raise StructureError("word is not in p q* form")
    q_part = tuple(pres.unstar_of[a] for a in reversed(star_part))
    return p_part, q_part


def leavitt_graded_dim(Q: Quiver, degree: int, word_length: int,
                       pres: Optional[LeavittPresentation] = None) -> int:
    """Count normal-form monomials p q* of the given degree, len(p)+len(q) <= L.

    The degree of p q* is -len(p) + len(q); monomials whose junction is the
    special pair sigma sigma* are excluded, as R2 rewrites them.
    """
    if word_length < abs(degree):
        raise PreconditionError("word_length must be at least |degree|")
    if pres is None:
        pres = leavitt_presentation(Q)
    gq = pres.gq
    quiver = gq.quiver
    base = pres.base_arrows

    # words over base arrows in application order, tagged with their source vertex
    words: dict[int, list[tuple]] = {0: [((), v) for v in quiver.vertices]}
    for l in range(1, word_length + 1):
        out = []
        for arrows, src in words[l - 1]:
            at = quiver.arrow(arrows[-1]).target if arrows else src
            for b in base:
                if quiver.arrow(b).source == at:
                    out.append((arrows + (b,), src))
        words[l] = out

    total = 0
    for lp in range(word_length + 1):
        lq = degree + lp
        if lq < 0 or lp + lq > word_length:
            continue
        for v in quiver.vertices:
            ps = [w for w, src in words[lp] if src == v]
            qs = [w for w, src in words[lq] if src == v]
            count = len(ps) * len(qs)
            if lp and lq:
                for sigma in base:
                    arr = quiver.arrow(sigma)
                    if arr.source != v or pres.special[arr.target] != sigma:
                        continue
                    np_ = sum(1 for w in ps if w[0] == sigma)
                    nq = sum(1 for w in qs if w[0] == sigma)
                    count -= np_ * nq
            total += count
    return total
