"""Generators producing named dg quiver algebras from simpler inputs.

Covers: the two-term resolution of an algebra given by a quiver with
relations, the endomorphism-algebra presentation for radical-square-zero
algebras, cyclic derivatives and the Ginzburg dg algebra of a quiver with
potential, Jacobian presentations, deformed derived preprojective algebras,
and McKay quivers of cyclic subgroups of SL3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .dga import DgQuiverAlgebra
from .elements import PathElement, Potential
from .errors import PreconditionError, StructureError
from .quiver import GradedQuiver, Path, Quiver


@dataclass(frozen=True)
class AlgebraPresentation:
    """A quiver with degree-0 arrows plus a finite list of relations.

    Every relation is a linear combination of paths of length >= 2 sharing a
    common (source, target) pair.
    """

    gq: GradedQuiver
    relations: tuple

    @staticmethod
    def build(quiver_or_gq, relations: Sequence[PathElement]) -> "AlgebraPresentation":
        if isinstance(quiver_or_gq, Quiver):
            gq = GradedQuiver.zero_graded(quiver_or_gq)
        else:
            gq = quiver_or_gq
            if any(d != 0 for d in gq.degree.values()):
                raise StructureError("presentation arrows must all have degree 0")
        rels = []
        for r in relations:
            if r.gq.quiver != gq.quiver:
                raise StructureError("relation over a different quiver")
            r = PathElement(gq, dict(r.terms))
            if r.is_zero:
                raise StructureError("zero relation")
            if r.common_endpoints() is None:
                raise StructureError("relation mixes (source, target) pairs")
            if any(p.length < 2 for p in r.terms):
                raise StructureError("relation contains a path of length < 2")
            rels.append(r)
        return AlgebraPresentation(gq, tuple(rels))

    @property
    def quiver(self) -> Quiver:
        return self.gq.quiver


def _fresh_name(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def resolve_gldim2(P: AlgebraPresentation) -> DgQuiverAlgebra:
    """Two-term dg resolution: one degree -1 arrow per relation, mapped to it.

    When every relation is length-homogeneous, a weight grading is attached
    (original arrows 1, new arrow = its relation's length) and the result is
    marked weight-homogeneous.
    """
    quiver = P.quiver
    taken = {a.name for a in quiver.arrows}
    decls = [(a.name, a.source, a.target) for a in quiver.arrows]
    rel_lengths: list[Optional[int]] = []
    for k, r in enumerate(P.relations):
        src, tgt = r.common_endpoints()
        base = "gamma" if len(P.relations) == 1 else f"gamma{k + 1}"
        decls.append((_fresh_name(base, taken), src, tgt))
        lens = {p.length for p in r.terms}
        rel_lengths.append(lens.pop() if len(lens) == 1 else None)

    new_quiver = Quiver.build(
        [(v, quiver.labels[v]) if v in quiver.labels else v for v in quiver.vertices],
        decls)
    n0 = len(quiver.arrows)
    degree = {a.ident: (0 if a.ident < n0 else -1) for a in new_quiver.arrows}
    weight = None
    if all(l is not None for l in rel_lengths):
        weight = {a.ident: (1 if a.ident < n0 else rel_lengths[a.ident - n0])
                  for a in new_quiver.arrows}
    gq = GradedQuiver.build(new_quiver, degree, weight)
    d = {n0 + k: r.reattach(gq) for k, r in enumerate(P.relations)}
    return DgQuiverAlgebra(gq, d, weight_homogeneous=weight is not None)


@dataclass
class AuslanderData:
    presentation: AlgebraPresentation
    dg_model: DgQuiverAlgebra
    unprimed: tuple
    primed: tuple


def auslander_rad2(Q: Quiver) -> AuslanderData:
    """Endomorphism-algebra presentation for the radical-square-zero algebra of Q.

    Vertices double to {i, i'}; arrows c_i: i -> i' and a_alpha: s(alpha)' ->
    t(alpha); one relation c_{t(alpha)} a_alpha per arrow.  The dg model adds
    alpha': s(alpha)' -> t(alpha)' of degree -1 with d(alpha') equal to the
    corresponding relation.
    """
    srcs = Q.sources()
    if srcs:
        raise PreconditionError(f"quiver has a source: vertex {srcs[0]}")
    base = max(Q.vertices) + 1
    primed = {v: base + k for k, v in enumerate(Q.vertices)}
    verts: list = []
    for v in Q.vertices:
        verts.append((v, Q.labels[v]) if v in Q.labels else v)
    for v in Q.vertices:
        verts.append((primed[v], f"{Q.labels.get(v, v)}'"))

    taken: set[str] = set()
    decls: list[tuple[str, int, int]] = []
    c_of: dict[int, int] = {}
    for v in Q.vertices:
        c_of[v] = len(decls)
        decls.append((_fresh_name(f"c{v}", taken), v, primed[v]))
    a_of: dict[int, int] = {}
    for arr in Q.arrows:
        a_of[arr.ident] = len(decls)
        decls.append((_fresh_name(f"a_{arr.name}", taken), primed[arr.source], arr.target))
    pres_quiver = Quiver.build(verts, decls)
    pres_gq = GradedQuiver.zero_graded(pres_quiver)

    relations = []
    for arr in Q.arrows:
        word = pres_gq.path([c_of[arr.target], a_of[arr.ident]])
        relations.append(PathElement.of_path(pres_gq, word))
    pres = AlgebraPresentation.build(pres_gq, relations)

    model_decls = list(decls)
    prime_of: dict[int, int] = {}
    for arr in Q.arrows:
        prime_of[arr.ident] = len(model_decls)
        model_decls.append((_fresh_name(f"{arr.name}'", taken),
                            primed[arr.source], primed[arr.target]))
    model_quiver = Quiver.build(verts, model_decls)
    n0 = len(decls)
    degree = {a.ident: (0 if a.ident < n0 else -1) for a in model_quiver.arrows}
    model_gq = GradedQuiver.build(model_quiver, degree)
    d = {}
    for arr in Q.arrows:
        word = model_gq.path([c_of[arr.target], a_of[arr.ident]])
        d[prime_of[arr.ident]] = PathElement.of_path(model_gq, word)
    model = DgQuiverAlgebra(model_gq, d)
    return AuslanderData(pres, model, tuple(Q.vertices),
                         tuple(primed[v] for v in Q.vertices))


def cyclic_derivative(W: Potential, arrow_ident: int) -> PathElement:
    """Sum of vu over all decompositions c = u a v of each support cycle."""
    gq = W.gq
    a = gq.quiver.arrow(arrow_ident)
    if gq.degree[arrow_ident] != 0:
        raise PreconditionError(f"arrow {a.name!r} does not have degree 0")
    acc = PathElement.zero(gq)
    for cycle, c in W.terms.items():
        arrows = cycle.arrows
        for j, ident in enumerate(arrows):
            if ident != arrow_ident:
                continue
            pre = arrows[:j]
            suf = arrows[j + 1:]
            if pre:
                u = Path(pre, gq.quiver.arrow(pre[-1]).source, cycle.target)
            else:
                u = gq.trivial(a.target)
            if suf:
                v = Path(suf, cycle.source, gq.quiver.arrow(suf[0]).target)
            else:
                v = gq.trivial(a.source)
            vu = PathElement.of_path(gq, v) * PathElement.of_path(gq, u)
            acc = acc + vu.scale(c)
    return acc


def _doubled_quiver(Q: Quiver, star_deg: int, loop_deg: int):
    """Q plus reversed star arrows and one loop per vertex; returns idents."""
    taken = {a.name for a in Q.arrows}
    decls = [(a.name, a.source, a.target) for a in Q.arrows]
    star_of: dict[int, int] = {}
    for arr in Q.arrows:
        star_of[arr.ident] = len(decls)
        decls.append((_fresh_name(f"{arr.name}*", taken), arr.target, arr.source))
    loop_of: dict[int, int] = {}
    for v in Q.vertices:
        loop_of[v] = len(decls)
        decls.append((_fresh_name(f"t{v}", taken), v, v))
    verts = [(v, Q.labels[v]) if v in Q.labels else v for v in Q.vertices]
    quiver = Quiver.build(verts, decls)
    n0 = len(Q.arrows)
    degree = {}
    for a in quiver.arrows:
        if a.ident < n0:
            degree[a.ident] = 0
        elif a.ident < 2 * n0:
            degree[a.ident] = star_deg
        else:
            degree[a.ident] = loop_deg
    return quiver, degree, star_of, loop_of


def _commutator_sum(gq: GradedQuiver, Q: Quiver, star_of: dict, vertex: int) -> PathElement:
    """e_i (sum_a (a a* - a* a)) e_i over the original arrows of Q."""
    acc = PathElement.zero(gq)
    for arr in Q.arrows:
        if arr.target == vertex:
            acc = acc + PathElement.of_path(gq, gq.path([arr.ident, star_of[arr.ident]]))
        if arr.source == vertex:
            acc = acc - PathElement.of_path(gq, gq.path([star_of[arr.ident], arr.ident]))
    return acc


def ginzburg(Q: Quiver, W: Potential) -> DgQuiverAlgebra:
    """Ginzburg dg algebra of (Q, W): arrows at 0, stars at -1, loops at -2.

    d(a) = 0, d(a*) = the cyclic derivative of W at a, and d(t_i) is the
    signed commutator sum at i.  When W is length-homogeneous of length w the
    weights (a -> 1, a* -> w-1, t_i -> w) are attached.
    """
    if W.gq.quiver != Q:
        raise StructureError("potential over a different quiver")
    quiver, degree, star_of, loop_of = _doubled_quiver(Q, star_deg=-1, loop_deg=-2)
    weight = None
    w = W.cycle_length()
    if W and w is not None:
        n0 = len(Q.arrows)
        weight = {}
        for a in quiver.arrows:
            if a.ident < n0:
                weight[a.ident] = 1
            elif a.ident < 2 * n0:
                weight[a.ident] = w - 1
            else:
                weight[a.ident] = w
    gq = GradedQuiver.build(quiver, degree, weight)
    d: dict[int, PathElement] = {}
    for arr in Q.arrows:
        dW = cyclic_derivative(W, arr.ident)
        if dW:
            d[star_of[arr.ident]] = dW.reattach(gq)
    for v in Q.vertices:
        elem = _commutator_sum(gq, Q, star_of, v)
        if elem:
            d[loop_of[v]] = elem
    return DgQuiverAlgebra(gq, d, weight_homogeneous=weight is not None)


def jacobian_presentation(Q: Quiver, W: Potential) -> AlgebraPresentation:
    """kQ modulo the cyclic derivatives of W (zero relations dropped)."""
    if W.gq.quiver != Q:
        raise StructureError("potential over a different quiver")
    gq = GradedQuiver.zero_graded(Q)
    rels = []
    for arr in Q.arrows:
        dW = cyclic_derivative(W, arr.ident)
        if dW:
            rels.append(PathElement(gq, dict(dW.terms)))
    return AlgebraPresentation.build(gq, rels)


def deformation_parameter(Q: Quiver, values: Optional[dict] = None) -> dict:
    """Total map vertex -> Fraction; unspecified vertices get 0."""
    lam = {v: Fraction(0) for v in Q.vertices}
    for v, c in (values or {}).items():
        if v not in lam:
            raise StructureError(f"unknown vertex {v} in deformation parameter")
        lam[v] = Fraction(c)
    return lam


def derived_preprojective(Q: Quiver, lam: Optional[dict] = None) -> DgQuiverAlgebra:
    """Deformed derived preprojective algebra of an acyclic quiver.

    Doubled arrows sit in degree 0, the loops t_i in degree -1, and
    d(t_i) = e_i sum_a (a a* - a* a) e_i - lambda_i e_i.  Weights (1, 1, 2)
    are attached; the differential is weight-homogeneous iff lambda = 0.
    """
    cycle = Q.has_oriented_cycle()
    if cycle:
        raise PreconditionError(
            "quiver has an oriented cycle: " + " -> ".join(map(str, cycle)))
    lam = deformation_parameter(Q, lam)
    quiver, degree, star_of, loop_of = _doubled_quiver(Q, star_deg=0, loop_deg=-1)
    n2 = 2 * len(Q.arrows)
    weight = {a.ident: (1 if a.ident < n2 else 2) for a in quiver.arrows}
    gq = GradedQuiver.build(quiver, degree, weight)
    d: dict[int, PathElement] = {}
    for v in Q.vertices:
        elem = _commutator_sum(gq, Q, star_of, v)
        if lam[v]:
            elem = elem - PathElement.of_path(gq, gq.trivial(v), lam[v])
        if elem:
            d[loop_of[v]] = elem
    homogeneous = all(not c for c in lam.values())
    return DgQuiverAlgebra(gq, d, weight_homogeneous=homogeneous)


def mckay_cyclic(n: int, a1: int, a2: int, a3: int) -> tuple[Quiver, Potential]:
    """McKay quiver and potential for the cyclic group 1/n(a1, a2, a3).

    Vertices are Z/n; arrows x_j^(v): v -> v + a_j for j = 1, 2, 3.  The
    potential is the alternating sum over base vertices of the two triangle
    orderings, a cycle by the a1 + a2 + a3 = 0 (mod n) condition.
    """
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if (a1 + a2 + a3) % n != 0:
        raise PreconditionError(
            f"weights must sum to 0 mod {n}: {a1}+{a2}+{a3} = {a1 + a2 + a3}")
    a = (a1 % n, a2 % n, a3 % n)
    verts = list(range(n))
    decls: list[tuple[str, int, int]] = []
    arrow_of: dict[tuple[int, int], int] = {}
    simple_names = ("x", "y", "z")
    for j in range(3):
        for v in verts:
            name = simple_names[j] if n == 1 else f"x{j + 1}_{v}"
            arrow_of[(j, v)] = len(decls)
            decls.append((name, v, (v + a[j]) % n))
    quiver = Quiver.build(verts, decls)
    gq = GradedQuiver.zero_graded(quiver)

    terms: dict[Path, Fraction] = {}
    for v in verts:
        # x1 then x2 then x3, based at v
        plus = gq.path([arrow_of[(2, (v + a[0] + a[1]) % n)],
                        arrow_of[(1, (v + a[0]) % n)],
                        arrow_of[(0, v)]])
        # x2 then x1 then x3, based at v
        minus = gq.path([arrow_of[(2, (v + a[0] + a[1]) % n)],
                         arrow_of[(0, (v + a[1]) % n)],
                         arrow_of[(1, v)]])
        terms[plus] = terms.get(plus, Fraction(0)) + 1
        terms[minus] = terms.get(minus, Fraction(0)) - 1
    return quiver, Potential(gq, terms)
