"""The tensor computad, its translation into the simplicial model, and assignments into a target.

Edges are ``CEdge(c, D)`` (a C-step at D) and ``DEdge(C, d)`` (a D-step at C).
A 1-cell of the tensor is the same thing as a path of edges, so the two are
converted freely.  Relations are written as small terms (generators,
identities, vertical and horizontal composites) and can be interpreted in
any 2-category: the simplicial model through ``elementary``, or a finite
target through a :class:`GeneratorAssignment`.

In the mixed variant the D-unit and D-composition generators are reversed:
``IdC1D`` deletes a ``1_D`` step and ``CompCdd`` splits a composite step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence, Union

from .fin2cat import FinTwoCategory, TwoCategory, Violation
from .paths import Path
from .shuffles import C as CSTEP, D as DSTEP, Shuffle
from .simplicial import ShapeError
from .tensor import TensorCategory, TensorOneCell, TensorTwoCell


class ContractError(RuntimeError):
    """An operation's precondition on its inputs was not met."""


# edges and generators -------------------------------------------------------


@dataclass(frozen=True)
class CEdge:
    c: Hashable
    D: Hashable

    def __str__(self):
        return f"{self.c}@{self.D}"


@dataclass(frozen=True)
class DEdge:
    C: Hashable
    d: Hashable

    def __str__(self):
        return f"{self.C}@{self.d}"


Edge = Union[CEdge, DEdge]


@dataclass(frozen=True)
class CBoxDelta:
    C: Hashable
    delta: Hashable


@dataclass(frozen=True)
class GammaBoxD:
    gamma: Hashable
    D: Hashable


@dataclass(frozen=True)
class IdC1D:
    """Unit comparison for D: inserts the step ``C 1_D`` (deletes it when mixed)."""

    C: Hashable
    D: Hashable


@dataclass(frozen=True)
class Id1CD:
    """Unit comparison for C: inserts the step ``1_C D``."""

    C: Hashable
    D: Hashable


@dataclass(frozen=True)
class CompCdd:
    """Composition comparison for D: ``C d, C d'`` to ``C (d' o d)`` (split when mixed)."""

    C: Hashable
    d: Hashable
    d2: Hashable


@dataclass(frozen=True)
class CompCcD:
    c: Hashable
    c2: Hashable
    D: Hashable


@dataclass(frozen=True)
class SwapCd:
    c: Hashable
    d: Hashable


TensorGenerator = Union[CBoxDelta, GammaBoxD, IdC1D, Id1CD, CompCdd, CompCcD, SwapCd]
GENERATOR_TYPES = (CBoxDelta, GammaBoxD, IdC1D, Id1CD, CompCdd, CompCcD, SwapCd)


def gen_name(g: TensorGenerator) -> str:
    """Text form used by assignment files and the CLI."""
    if isinstance(g, SwapCd):
        return f"swap({g.c},{g.d})"
    if isinstance(g, Id1CD):
        return f"id1({g.C},{g.D})"
    if isinstance(g, IdC1D):
        return f"id2({g.C},{g.D})"
    if isinstance(g, CompCcD):
        return f"compC({g.c},{g.c2},{g.D})"
    if isinstance(g, CompCdd):
        return f"compD({g.C},{g.d},{g.d2})"
    if isinstance(g, CBoxDelta):
        return f"cdelta({g.C},{g.delta})"
    return f"gammad({g.gamma},{g.D})"


def edge_source(C: FinTwoCategory, D: FinTwoCategory, e: Edge):
    return (C.src1(e.c), e.D) if isinstance(e, CEdge) else (e.C, D.src1(e.d))


def edge_target(C: FinTwoCategory, D: FinTwoCategory, e: Edge):
    return (C.tgt1(e.c), e.D) if isinstance(e, CEdge) else (e.C, D.tgt1(e.d))


def gen_boundary(C: FinTwoCategory, D: FinTwoCategory, g: TensorGenerator, mixed: bool = False):
    """``(source edges, target edges, start node)`` of a generator."""
    if isinstance(g, CBoxDelta):
        return (DEdge(g.C, D.src2(g.delta)),), (DEdge(g.C, D.tgt2(g.delta)),), (g.C, D.src1(D.src2(g.delta)))
    if isinstance(g, GammaBoxD):
        return (CEdge(C.src2(g.gamma), g.D),), (CEdge(C.tgt2(g.gamma), g.D),), (C.src1(C.src2(g.gamma)), g.D)
    if isinstance(g, Id1CD):
        return (), (CEdge(C.id1(g.C), g.D),), (g.C, g.D)
    if isinstance(g, IdC1D):
        pair = (), (DEdge(g.C, D.id1(g.D)),)
        return (pair[1], pair[0], (g.C, g.D)) if mixed else (pair[0], pair[1], (g.C, g.D))
    if isinstance(g, CompCcD):
        if C.tgt1(g.c) != C.src1(g.c2):
            raise ShapeError(f"{g.c} and {g.c2} are not composable")
        return ((CEdge(g.c, g.D), CEdge(g.c2, g.D)), (CEdge(C.compose(g.c, g.c2), g.D),), (C.src1(g.c), g.D))
    if isinstance(g, CompCdd):
        if D.tgt1(g.d) != D.src1(g.d2):
            raise ShapeError(f"{g.d} and {g.d2} are not composable")
        two, one = (DEdge(g.C, g.d), DEdge(g.C, g.d2)), (DEdge(g.C, D.compose(g.d, g.d2)),)
        return (one, two, (g.C, D.src1(g.d))) if mixed else (two, one, (g.C, D.src1(g.d)))
    if isinstance(g, SwapCd):
        x, x2 = C.src1(g.c), C.tgt1(g.c)
        y, y2 = D.src1(g.d), D.tgt1(g.d)
        return (CEdge(g.c, y), DEdge(x2, g.d)), (DEdge(x, g.d), CEdge(g.c, y2)), (x, y)
    raise TypeError(f"not a tensor generator: {g!r}")


# 1-cells as edge paths --------------------------------------------------------


def edges_of_cell(T, f: TensorOneCell) -> tuple:
    """Edge path of a 1-cell; ``T`` is anything with ``C`` and ``D`` attributes."""
    C, D = T.C, T.D
    out, ci, di = [], 0, 0
    cobj, dobj = f.cpath.start, f.dpath.start
    for step in f.shuffle.word:
        if step == CSTEP:
            c = f.cpath.cells[ci]
            out.append(CEdge(c, dobj))
            cobj = C.tgt1(c)
            ci += 1
        else:
            d = f.dpath.cells[di]
            out.append(DEdge(cobj, d))
            dobj = D.tgt1(d)
            di += 1
    return tuple(out)


def cell_of_edges(T: TensorCategory, edges: Sequence[Edge], start) -> TensorOneCell:
    """Inverse of :func:`edges_of_cell`; ``start`` anchors the empty path."""
    C, D = T.C, T.D
    x, y = start
    cells_c, cells_d, word = [], [], []
    for e in edges:
        if edge_source(C, D, e) != (x, y):
            raise ShapeError(f"edge {e} does not start at {(x, y)}")
        if isinstance(e, CEdge):
            cells_c.append(e.c)
            word.append(CSTEP)
        else:
            cells_d.append(e.d)
            word.append(DSTEP)
        x, y = edge_target(C, D, e)
    cx, cy = start
    return TensorOneCell(Path(cx, tuple(cells_c), x), Path(cy, tuple(cells_d), y), Shuffle("".join(word)))


def end_node(T: TensorCategory, edges: Sequence[Edge], start):
    node = start
    for e in edges:
        node = edge_target(T.C, T.D, e)
    return node


# the computad ----------------------------------------------------------------


@dataclass
class Computad:
    nodes: list
    edges: dict  # edge -> (source node, target node)
    generators: dict  # generator -> (source edge path, target edge path, start node)

    def __repr__(self):
        return f"Computad({len(self.nodes)} nodes, {len(self.edges)} edges, {len(self.generators)} generators)"


def composable_pairs(E: FinTwoCategory) -> Iterator[tuple]:
    for f in E.one_cells:
        for g in E.one_cells:
            if E.tgt1(f) == E.src1(g):
                yield f, g


def all_generators(C: FinTwoCategory, D: FinTwoCategory) -> list:
    gens: list = []
    for x in C.objects:
        for delta in D.two_cells:
            gens.append(CBoxDelta(x, delta))
    for gamma in C.two_cells:
        for y in D.objects:
            gens.append(GammaBoxD(gamma, y))
    for x in C.objects:
        for y in D.objects:
            gens.append(IdC1D(x, y))
            gens.append(Id1CD(x, y))
    for x in C.objects:
        for d, d2 in composable_pairs(D):
            gens.append(CompCdd(x, d, d2))
    for c, c2 in composable_pairs(C):
        for y in D.objects:
            gens.append(CompCcD(c, c2, y))
    for c in C.one_cells:
        for d in D.one_cells:
            gens.append(SwapCd(c, d))
    return gens


def tensor_computad(C: FinTwoCategory, D: FinTwoCategory, mixed: bool = False) -> Computad:
    nodes = [(x, y) for x in C.objects for y in D.objects]
    edges = {}
    for c in C.one_cells:
        for y in D.objects:
            e = CEdge(c, y)
            edges[e] = (edge_source(C, D, e), edge_target(C, D, e))
    for x in C.objects:
        for d in D.one_cells:
            e = DEdge(x, d)
            edges[e] = (edge_source(C, D, e), edge_target(C, D, e))
    gens = {g: gen_boundary(C, D, g, mixed) for g in all_generators(C, D)}
    return Computad(nodes, edges, gens)


# the computad morphism T -------------------------------------------------------


def elementary(T: TensorCategory, g: TensorGenerator) -> TensorTwoCell:
    """The elementary 2-cell of the simplicial model assigned to a generator."""
    C, D = T.C, T.D
    src_e, tgt_e, start = gen_boundary(C, D, g, T.mixed)
    src, tgt = cell_of_edges(T, src_e, start), cell_of_edges(T, tgt_e, start)

    def ident(k):
        return tuple(range(k + 1))

    if isinstance(g, CBoxDelta):
        return T.two_cell(src, tgt, ident(0), ident(1), (), (g.delta,))
    if isinstance(g, GammaBoxD):
        return T.two_cell(src, tgt, ident(1), ident(0), (g.gamma,), ())
    if isinstance(g, Id1CD):
        return T.two_cell(src, tgt, (0, 0), ident(0), (C.id2(C.id1(g.C)),), ())
    if isinstance(g, IdC1D):
        return T.two_cell(src, tgt, ident(0), (0, 0), (), (D.id2(D.id1(g.D)),))
    if isinstance(g, CompCcD):
        return T.two_cell(src, tgt, (0, 2), ident(0), (C.id2(C.compose(g.c, g.c2)),), ())
    if isinstance(g, CompCdd):
        return T.two_cell(src, tgt, ident(0), (0, 2), (), (D.id2(D.compose(g.d, g.d2)),))
    if isinstance(g, SwapCd):
        return T.two_cell(src, tgt, ident(1), ident(1), (C.id2(g.c),), (D.id2(g.d),))
    raise TypeError(f"not a tensor generator: {g!r}")


# relation terms ------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    g: TensorGenerator


@dataclass(frozen=True)
class Ident:
    """Identity 2-cell on a non-empty edge path."""

    edges: tuple


@dataclass(frozen=True)
class V:
    """Vertical composite, first term applied first."""

    terms: tuple

    def __init__(self, *terms):
        object.__setattr__(self, "terms", terms)


@dataclass(frozen=True)
class H:
    """Horizontal composite, first term first along the path."""

    terms: tuple

    def __init__(self, *terms):
        object.__setattr__(self, "terms", terms)


Term = Union[Gen, Ident, V, H]


def interpret(term: Term, ops: TwoCategory, on_gen, on_path):
    """Evaluate a term in ``ops``; ``on_path`` maps an edge path to a 1-cell."""
    if isinstance(term, Gen):
        return on_gen(term.g)
    if isinstance(term, Ident):
        return ops.id2(on_path(term.edges))
    parts = [interpret(t, ops, on_gen, on_path) for t in term.terms]
    if isinstance(term, V):
        return ops.vcomposite(parts)
    return ops.hcomposite(parts)


@dataclass(frozen=True)
class RelationInstance:
    label: str
    witness: tuple
    lhs: Term
    rhs: Term


def relation_instances(C: FinTwoCategory, D: FinTwoCategory, mixed: bool = False) -> Iterator[RelationInstance]:
    """Every instance of the fourteen relation families over the given C and D."""
    ce = lambda c, y: Ident((CEdge(c, y),))
    de = lambda x, d: Ident((DEdge(x, d),))
    g = Gen
    two_from = {}
    for a, (f, _) in D.two_cells.items():
        two_from.setdefault(("D", f), []).append(a)
    for a, (f, _) in C.two_cells.items():
        two_from.setdefault(("C", f), []).append(a)

    # identity 2-cells
    for x in C.objects:
        for d in D.one_cells:
            yield RelationInstance("TensorId1", (x, d), g(CBoxDelta(x, D.id2(d))), de(x, d))
    for c in C.one_cells:
        for y in D.objects:
            yield RelationInstance("TensorId2", (c, y), g(GammaBoxD(C.id2(c), y)), ce(c, y))
    # distributivity over vertical composition
    for x in C.objects:
        for a in D.two_cells:
            for b in two_from.get(("D", D.tgt2(a)), []):
                yield RelationInstance("TensorDist1", (x, a, b), V(g(CBoxDelta(x, a)), g(CBoxDelta(x, b))),
                                       g(CBoxDelta(x, D.vcompose(a, b))))
    for a in C.two_cells:
        for b in two_from.get(("C", C.tgt2(a)), []):
            for y in D.objects:
                yield RelationInstance("TensorDist2", (a, b, y), V(g(GammaBoxD(a, y)), g(GammaBoxD(b, y))),
                                       g(GammaBoxD(C.vcompose(a, b), y)))
    # compatibility with composition comparisons
    for x in C.objects:
        for a in D.two_cells:
            for b in D.two_cells:
                if D.tgt1(D.src2(a)) != D.src1(D.src2(b)):
                    continue
                d, d2, db, db2 = D.src2(a), D.src2(b), D.tgt2(a), D.tgt2(b)
                whole = g(CBoxDelta(x, D.hcompose(a, b)))
                parts = H(g(CBoxDelta(x, a)), g(CBoxDelta(x, b)))
                if mixed:
                    yield RelationInstance("TensorComp1", (x, a, b), V(whole, g(CompCdd(x, db, db2))),
                                           V(g(CompCdd(x, d, d2)), parts))
                else:
                    yield RelationInstance("TensorComp1", (x, a, b), V(parts, g(CompCdd(x, db, db2))),
                                           V(g(CompCdd(x, d, d2)), whole))
    for a in C.two_cells:
        for b in C.two_cells:
            if C.tgt1(C.src2(a)) != C.src1(C.src2(b)):
                continue
            for y in D.objects:
                c, c2, cb, cb2 = C.src2(a), C.src2(b), C.tgt2(a), C.tgt2(b)
                yield RelationInstance("TensorComp2", (a, b, y),
                                       V(H(g(GammaBoxD(a, y)), g(GammaBoxD(b, y))), g(CompCcD(cb, cb2, y))),
                                       V(g(CompCcD(c, c2, y)), g(GammaBoxD(C.hcompose(a, b), y))))
    # naturality of the swaps
    for a in C.two_cells:
        for b in D.two_cells:
            c, cb = C.src2(a), C.tgt2(a)
            d, db = D.src2(b), D.tgt2(b)
            x, x2 = C.src1(c), C.tgt1(c)
            y, y2 = D.src1(d), D.tgt1(d)
            yield RelationInstance("TensorSwap", (a, b),
                                   V(H(g(GammaBoxD(a, y)), g(CBoxDelta(x2, b))), g(SwapCd(cb, db))),
                                   V(g(SwapCd(c, d)), H(g(CBoxDelta(x, b)), g(GammaBoxD(a, y2)))))
    # unit and associativity laws
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            yield RelationInstance("TensorUnit", ("C-left", c, y),
                                   V(H(g(Id1CD(x, y)), ce(c, y)), g(CompCcD(C.id1(x), c, y))), ce(c, y))
            yield RelationInstance("TensorUnit", ("C-right", c, y),
                                   V(H(ce(c, y), g(Id1CD(x2, y))), g(CompCcD(c, C.id1(x2), y))), ce(c, y))
    for d in D.one_cells:
        y, y2 = D.src1(d), D.tgt1(d)
        for x in C.objects:
            if mixed:
                yield RelationInstance("TensorUnit", ("D-left", x, d),
                                       V(g(CompCdd(x, D.id1(y), d)), H(g(IdC1D(x, y)), de(x, d))), de(x, d))
                yield RelationInstance("TensorUnit", ("D-right", x, d),
                                       V(g(CompCdd(x, d, D.id1(y2))), H(de(x, d), g(IdC1D(x, y2)))), de(x, d))
            else:
                yield RelationInstance("TensorUnit", ("D-left", x, d),
                                       V(H(g(IdC1D(x, y)), de(x, d)), g(CompCdd(x, D.id1(y), d))), de(x, d))
                yield RelationInstance("TensorUnit", ("D-right", x, d),
                                       V(H(de(x, d), g(IdC1D(x, y2))), g(CompCdd(x, d, D.id1(y2)))), de(x, d))
    for c, c2 in composable_pairs(C):
        for c3 in C.one_cells:
            if C.tgt1(c2) != C.src1(c3):
                continue
            for y in D.objects:
                yield RelationInstance(
                    "TensorAssoc", ("C", c, c2, c3, y),
                    V(H(g(CompCcD(c, c2, y)), ce(c3, y)), g(CompCcD(C.compose(c, c2), c3, y))),
                    V(H(ce(c, y), g(CompCcD(c2, c3, y))), g(CompCcD(c, C.compose(c2, c3), y))))
    for d, d2 in composable_pairs(D):
        for d3 in D.one_cells:
            if D.tgt1(d2) != D.src1(d3):
                continue
            for x in C.objects:
                left = (H(g(CompCdd(x, d, d2)), de(x, d3)), g(CompCdd(x, D.compose(d, d2), d3)))
                right = (H(de(x, d), g(CompCdd(x, d2, d3))), g(CompCdd(x, d, D.compose(d2, d3))))
                if mixed:
                    yield RelationInstance("TensorAssoc", ("D", x, d, d2, d3), V(left[1], left[0]),
                                           V(right[1], right[0]))
                else:
                    yield RelationInstance("TensorAssoc", ("D", x, d, d2, d3), V(*left), V(*right))
    # swaps against units and composites
    for x in C.objects:
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            yield RelationInstance("TensorId1Swap", (x, d),
                                   V(H(g(Id1CD(x, y)), de(x, d)), g(SwapCd(C.id1(x), d))),
                                   H(de(x, d), g(Id1CD(x, y2))))
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            if mixed:
                yield RelationInstance("Tensor1IdSwap", (c, y),
                                       V(g(SwapCd(c, D.id1(y))), H(g(IdC1D(x, y)), ce(c, y))),
                                       H(ce(c, y), g(IdC1D(x2, y))))
            else:
                yield RelationInstance("Tensor1IdSwap", (c, y),
                                       V(H(ce(c, y), g(IdC1D(x2, y))), g(SwapCd(c, D.id1(y)))),
                                       H(g(IdC1D(x, y)), ce(c, y)))
    for c, c2 in composable_pairs(C):
        x, x2, x3 = C.src1(c), C.tgt1(c), C.tgt1(c2)
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            yield RelationInstance(
                "TensorComp1Swap", (c, c2, d),
                V(H(g(CompCcD(c, c2, y)), de(x3, d)), g(SwapCd(C.compose(c, c2), d))),
                V(H(ce(c, y), g(SwapCd(c2, d))), H(g(SwapCd(c, d)), ce(c2, y2)), H(de(x, d), g(CompCcD(c, c2, y2)))))
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for d, d2 in composable_pairs(D):
            y, y3 = D.src1(d), D.tgt1(d2)
            dd = D.compose(d, d2)
            if mixed:
                yield RelationInstance(
                    "Tensor1CompSwap", (c, d, d2),
                    V(g(SwapCd(c, dd)), H(g(CompCdd(x, d, d2)), ce(c, y3))),
                    V(H(ce(c, y), g(CompCdd(x2, d, d2))), H(g(SwapCd(c, d)), de(x2, d2)),
                      H(de(x, d), g(SwapCd(c, d2)))))
            else:
                yield RelationInstance(
                    "Tensor1CompSwap", (c, d, d2),
                    V(H(ce(c, y), g(CompCdd(x2, d, d2))), g(SwapCd(c, dd))),
                    V(H(g(SwapCd(c, d)), de(x2, d2)), H(de(x, d), g(SwapCd(c, d2))),
                      H(g(CompCdd(x, d, d2)), ce(c, y3))))


RELATION_LABELS = ("TensorId1", "TensorId2", "TensorDist1", "TensorDist2", "TensorComp1", "TensorComp2",
                   "TensorSwap", "TensorUnit", "TensorAssoc", "TensorId1Swap", "Tensor1IdSwap",
                   "TensorComp1Swap", "Tensor1CompSwap")


def interpret_in_tensor(T: TensorCategory, term: Term, start=None):
    """Translate a term into the simplicial model through ``elementary``."""

    def on_path(edges):
        if not edges:
            raise ShapeError("identity terms need a non-empty edge path")
        return cell_of_edges(T, edges, edge_source(T.C, T.D, edges[0]))

    return interpret(term, T, lambda g: elementary(T, g), on_path)


def tensor_relation_violations(T: TensorCategory) -> list[Violation]:
    """Relation instances whose two sides translate to different simplicial 2-cells."""
    out = []
    for inst in relation_instances(T.C, T.D, T.mixed):
        lhs, rhs = interpret_in_tensor(T, inst.lhs), interpret_in_tensor(T, inst.rhs)
        if lhs != rhs:
            out.append(Violation(inst.label, inst.witness))
    return out


# assignments into a finite target -----------------------------------------------


@dataclass
class GeneratorAssignment:
    """A computad map from the tensor computad into ``target``."""

    C: FinTwoCategory
    D: FinTwoCategory
    target: FinTwoCategory
    nodes: dict
    edges: dict
    gens: dict
    mixed: bool = False
    _checked: list | None = field(default=None, repr=False, compare=False)

    def edge_path(self, edges: Sequence[Edge], start):
        E = self.target
        return E.composite([self.edges[e] for e in edges], self.nodes[start])

    def typing_violations(self) -> list[Violation]:
        C, D, E = self.C, self.D, self.target
        out = []
        for node in ((x, y) for x in C.objects for y in D.objects):
            if self.nodes.get(node) not in E.objects:
                out.append(Violation("node image missing", (node,)))
        if out:
            return out
        comp = tensor_computad(C, D, self.mixed)
        for e, (s, t) in comp.edges.items():
            f = self.edges.get(e)
            if f not in E.one_cells:
                out.append(Violation("edge image missing", (e,)))
            elif (E.src1(f), E.tgt1(f)) != (self.nodes[s], self.nodes[t]):
                out.append(Violation("edge image mistyped", (e,)))
        if out:
            return out
        for g, (src, tgt, start) in comp.generators.items():
            a = self.gens.get(g)
            if a not in E.two_cells:
                out.append(Violation("generator image missing", (gen_name(g),)))
                continue
            want = (self.edge_path(src, start), self.edge_path(tgt, start))
            if (E.src2(a), E.tgt2(a)) != want:
                out.append(Violation("generator image mistyped", (gen_name(g),)))
        return out

    def interpret(self, term: Term):
        E = self.target

        def on_path(edges):
            return self.edge_path(edges, edge_source(self.C, self.D, edges[0]))

        return interpret(term, E, lambda g: self.gens[g], on_path)


def check_relations(V_: GeneratorAssignment) -> list[Violation]:
    """Typing problems, then every relation instance whose sides differ in the target.

    An instance whose composites are undefined (because of a typing problem)
    is reported as violated.
    """
    out = V_.typing_violations()
    if not any(v.law.startswith(("node", "edge")) for v in out):
        for inst in relation_instances(V_.C, V_.D, V_.mixed):
            try:
                ok = V_.interpret(inst.lhs) == V_.interpret(inst.rhs)
            except (KeyError, ShapeError):
                ok = False
            if not ok:
                out.append(Violation(inst.label, inst.witness))
    V_._checked = out
    return out


def ensure_valid(V_: GeneratorAssignment) -> None:
    if V_._checked is None:
        check_relations(V_)
    if V_._checked:
        raise ContractError(f"assignment violates {len(V_._checked)} relation instance(s), "
                            f"first: {V_._checked[0]}")


def evaluate_one(V_: GeneratorAssignment, f: TensorOneCell):
    """Image of a tensor 1-cell: the composite of its edge images."""
    return V_.edge_path(edges_of_cell(V_, f), f.source)


def identity_assignment(T: TensorCategory):
    """The tautological generator map into the simplicial model (not finite; for checks)."""
    return {g: elementary(T, g) for g in all_generators(T.C, T.D)}
