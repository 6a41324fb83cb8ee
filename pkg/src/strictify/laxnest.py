"""Unpacked cells of Lax(C, Lax(D, E)) and their correspondence with tensor assignments.

An object ``B`` is a family of objects, arrows and 2-cells of E together with
unit, composition and swap 2-cells.  The validators below state every axiom
directly in E, independently of the relation terms used by
``check_relations``; the tests compare the two.

Arrows and 2-cells are checked a second way by packaging them as assignments
into cylinder 2-categories: ``ArrowCylinder(E)`` has the arrows of E as
objects and lax squares as 1-cells, and ``CellCylinder(E)`` has 2-cells of E
as objects and pairs of compatible squares as 1-cells.  Both are computed on
demand rather than tabulated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Hashable, Iterator

from .computad import (
    CBoxDelta,
    CEdge,
    CompCcD,
    CompCdd,
    DEdge,
    GammaBoxD,
    GeneratorAssignment,
    Id1CD,
    IdC1D,
    SwapCd,
    all_generators,
    check_relations,
    composable_pairs,
    gen_boundary,
    tensor_computad,
)
from .fin2cat import FinTwoCategory, TwoCategory, Violation, terminal
from .simplicial import ShapeError


class ContractViolation(ValueError):
    def __init__(self, violations):
        super().__init__(f"{len(violations)} violation(s); first: {violations[0]}")
        self.violations = violations


# data ------------------------------------------------------------------------


@dataclass
class LaxNestObject:
    C: FinTwoCategory
    D: FinTwoCategory
    E: FinTwoCategory
    obj: dict  # (C, D) -> object
    darr: dict  # (C, d) -> arrow
    carr: dict  # (c, D) -> arrow
    d2: dict  # (C, delta) -> 2-cell
    c2: dict  # (gamma, D) -> 2-cell
    eta_d: dict  # (C, D) -> 2-cell 1 => B C 1_D
    mu_d: dict  # (C, d, d') -> 2-cell
    eta_c: dict  # (C, D) -> 2-cell 1 => B 1_C D
    mu_c: dict  # (c, c', D) -> 2-cell
    swap: dict  # (c, d) -> 2-cell


@dataclass
class LaxNestArrow:
    comp: dict  # (C, D) -> arrow bCD : BCD -> B'CD
    sigd: dict  # (C, d) -> 2-cell bCD;B'Cd => BCd;bCD'
    sigc: dict  # (c, D) -> 2-cell bCD;B'cD => BcD;bC'D


@dataclass
class LaxNestTwoCell:
    comp: dict  # (C, D) -> 2-cell bCD => b'CD


ROLES = ("obj", "darr", "carr", "d2", "c2", "eta_d", "mu_d", "eta_c", "mu_c", "swap")


# object axioms --------------------------------------------------------------------


class _Checker:
    def __init__(self):
        self.out: list[Violation] = []

    def eq(self, label, witness, lhs_fn, rhs_fn):
        try:
            ok = lhs_fn() == rhs_fn()
        except (KeyError, ShapeError, ValueError) as exc:
            self.out.append(Violation(label, witness))
            return
        if not ok:
            self.out.append(Violation(label, witness))


def _typing_object(B: LaxNestObject) -> list[Violation]:
    C, D, E = B.C, B.D, B.E
    out = []

    def need(label, key, table, want=None, kind="two"):
        x = table.get(key)
        pool = {"obj": E.objects, "one": E.one_cells, "two": E.two_cells}[kind]
        if x not in pool:
            out.append(Violation(f"{label} missing", (key,)))
            return
        if want is None:
            return
        got = {"one": lambda: (E.src1(x), E.tgt1(x)), "two": lambda: (E.src2(x), E.tgt2(x))}[kind]()
        try:
            want_v = want()
        except (KeyError, ShapeError):
            return
        if got != want_v:
            out.append(Violation(f"{label} mistyped", (key,)))

    for x in C.objects:
        for y in D.objects:
            need("obj", (x, y), B.obj, kind="obj")
    if out:
        return out
    for x in C.objects:
        for d in D.one_cells:
            need("darr", (x, d), B.darr, lambda: (B.obj[(x, D.src1(d))], B.obj[(x, D.tgt1(d))]), "one")
    for c in C.one_cells:
        for y in D.objects:
            need("carr", (c, y), B.carr, lambda: (B.obj[(C.src1(c), y)], B.obj[(C.tgt1(c), y)]), "one")
    if out:
        return out
    for x in C.objects:
        for a in D.two_cells:
            need("d2", (x, a), B.d2, lambda: (B.darr[(x, D.src2(a))], B.darr[(x, D.tgt2(a))]))
        for y in D.objects:
            need("eta_d", (x, y), B.eta_d, lambda: (E.id1(B.obj[(x, y)]), B.darr[(x, D.id1(y))]))
            need("eta_c", (x, y), B.eta_c, lambda: (E.id1(B.obj[(x, y)]), B.carr[(C.id1(x), y)]))
        for d, d2 in composable_pairs(D):
            need("mu_d", (x, d, d2), B.mu_d,
                 lambda: (E.compose(B.darr[(x, d)], B.darr[(x, d2)]), B.darr[(x, D.compose(d, d2))]))
    for g in C.two_cells:
        for y in D.objects:
            need("c2", (g, y), B.c2, lambda: (B.carr[(C.src2(g), y)], B.carr[(C.tgt2(g), y)]))
    for c, c2 in composable_pairs(C):
        for y in D.objects:
            need("mu_c", (c, c2, y), B.mu_c,
                 lambda: (E.compose(B.carr[(c, y)], B.carr[(c2, y)]), B.carr[(C.compose(c, c2), y)]))
    for c in C.one_cells:
        for d in D.one_cells:
            need("swap", (c, d), B.swap, lambda: (
                E.compose(B.carr[(c, D.src1(d))], B.darr[(C.tgt1(c), d)]),
                E.compose(B.darr[(C.src1(c), d)], B.carr[(c, D.tgt1(d))])))
    return out


def validate_object(B: LaxNestObject) -> list[Violation]:
    """Typing problems, then every failing instance of the eighteen object axioms.

    Instances that cannot be evaluated because of a typing problem count as failing.
    """
    typing = _typing_object(B)
    if any(v.law.startswith(("obj", "darr", "carr")) for v in typing):
        return typing
    C, D, E = B.C, B.D, B.E
    ck = _Checker()
    ck.out.extend(typing)
    i2 = E.id2
    da = lambda x, d: B.darr[(x, d)]
    ca = lambda c, y: B.carr[(c, y)]
    hc, vc = E.hcompose, E.vcompose

    # each B C is a lax functor D -> E
    for x in C.objects:
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            ck.eq("functid", (x, d), lambda: B.d2[(x, D.id2(d))], lambda: i2(da(x, d)))
            ck.eq("unit1", ("left", x, d), lambda: vc(hc(B.eta_d[(x, y)], i2(da(x, d))), B.mu_d[(x, D.id1(y), d)]),
                  lambda: i2(da(x, d)))
            ck.eq("unit1", ("right", x, d), lambda: vc(hc(i2(da(x, d)), B.eta_d[(x, y2)]), B.mu_d[(x, d, D.id1(y2))]),
                  lambda: i2(da(x, d)))
        for a in D.two_cells:
            for b in D.two_cells:
                if D.tgt2(a) == D.src2(b):
                    ck.eq("functoriality in D", (x, a, b), lambda: B.d2[(x, D.vcompose(a, b))],
                          lambda: vc(B.d2[(x, a)], B.d2[(x, b)]))
        for d, d2 in composable_pairs(D):
            for d3 in D.one_cells:
                if D.tgt1(d2) == D.src1(d3):
                    ck.eq("comp1", (x, d, d2, d3),
                          lambda: vc(hc(B.mu_d[(x, d, d2)], i2(da(x, d3))), B.mu_d[(x, D.compose(d, d2), d3)]),
                          lambda: vc(hc(i2(da(x, d)), B.mu_d[(x, d2, d3)]), B.mu_d[(x, d, D.compose(d2, d3))]))
        for a in D.two_cells:
            for b in D.two_cells:
                if D.tgt1(D.src2(a)) == D.src1(D.src2(b)):
                    ck.eq("naturality of mu in D", (x, a, b),
                          lambda: vc(hc(B.d2[(x, a)], B.d2[(x, b)]), B.mu_d[(x, D.tgt2(a), D.tgt2(b))]),
                          lambda: vc(B.mu_d[(x, D.src2(a), D.src2(b))], B.d2[(x, D.hcompose(a, b))]))
    # each B c is a lax transformation
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            ck.eq("swapunit1", (c, y), lambda: vc(hc(i2(ca(c, y)), B.eta_d[(x2, y)]), B.swap[(c, D.id1(y))]),
                  lambda: hc(B.eta_d[(x, y)], i2(ca(c, y))))
        for d, d2 in composable_pairs(D):
            y, y3 = D.src1(d), D.tgt1(d2)
            ck.eq("swapcomp1", (c, d, d2),
                  lambda: vc(hc(i2(ca(c, y)), B.mu_d[(x2, d, d2)]), B.swap[(c, D.compose(d, d2))]),
                  lambda: E.vcomposite([hc(B.swap[(c, d)], i2(da(x2, d2))), hc(i2(da(x, d)), B.swap[(c, d2)]),
                                        hc(B.mu_d[(x, d, d2)], i2(ca(c, y3)))]))
        for a in D.two_cells:
            d, db = D.src2(a), D.tgt2(a)
            ck.eq("naturality of swap in D", (c, a),
                  lambda: vc(hc(i2(ca(c, D.src1(d))), B.d2[(x2, a)]), B.swap[(c, db)]),
                  lambda: vc(B.swap[(c, d)], hc(B.d2[(x, a)], i2(ca(c, D.tgt1(d))))))
    # each B gamma is a modification, functorially
    for g in C.two_cells:
        c, cb = C.src2(g), C.tgt2(g)
        x, x2 = C.src1(c), C.tgt1(c)
        for d in D.one_cells:
            ck.eq("modification axiom", (g, d),
                  lambda: vc(hc(B.c2[(g, D.src1(d))], i2(da(x2, d))), B.swap[(cb, d)]),
                  lambda: vc(B.swap[(c, d)], hc(i2(da(x, d)), B.c2[(g, D.tgt1(d))])))
    for c in C.one_cells:
        for y in D.objects:
            ck.eq("functoriality in C, identities", (c, y), lambda: B.c2[(C.id2(c), y)], lambda: i2(ca(c, y)))
    for a in C.two_cells:
        for b in C.two_cells:
            if C.tgt2(a) == C.src2(b):
                for y in D.objects:
                    ck.eq("functOfC", (a, b, y), lambda: B.c2[(C.vcompose(a, b), y)],
                          lambda: vc(B.c2[(a, y)], B.c2[(b, y)]))
    # unit and composition comparisons in C
    for a in C.two_cells:
        for b in C.two_cells:
            if C.tgt1(C.src2(a)) == C.src1(C.src2(b)):
                for y in D.objects:
                    ck.eq("naturality of mu in C", (a, b, y),
                          lambda: vc(hc(B.c2[(a, y)], B.c2[(b, y)]), B.mu_c[(C.tgt2(a), C.tgt2(b), y)]),
                          lambda: vc(B.mu_c[(C.src2(a), C.src2(b), y)], B.c2[(C.hcompose(a, b), y)]))
    for x in C.objects:
        for d in D.one_cells:
            ck.eq("swapunit2", (x, d), lambda: vc(hc(B.eta_c[(x, D.src1(d))], i2(da(x, d))), B.swap[(C.id1(x), d)]),
                  lambda: hc(i2(da(x, d)), B.eta_c[(x, D.tgt1(d))]))
    for c, c2 in composable_pairs(C):
        x, x3 = C.src1(c), C.tgt1(c2)
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            ck.eq("swapcomp2", (c, c2, d),
                  lambda: vc(hc(B.mu_c[(c, c2, y)], i2(da(x3, d))), B.swap[(C.compose(c, c2), d)]),
                  lambda: E.vcomposite([hc(i2(ca(c, y)), B.swap[(c2, d)]), hc(B.swap[(c, d)], i2(ca(c2, y2))),
                                        hc(i2(da(x, d)), B.mu_c[(c, c2, y2)])]))
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            ck.eq("unit1 in C", ("left", c, y),
                  lambda: vc(hc(B.eta_c[(x, y)], i2(ca(c, y))), B.mu_c[(C.id1(x), c, y)]), lambda: i2(ca(c, y)))
            ck.eq("unit1 in C", ("right", c, y),
                  lambda: vc(hc(i2(ca(c, y)), B.eta_c[(x2, y)]), B.mu_c[(c, C.id1(x2), y)]), lambda: i2(ca(c, y)))
    for c, c2 in composable_pairs(C):
        for c3 in C.one_cells:
            if C.tgt1(c2) == C.src1(c3):
                for y in D.objects:
                    ck.eq("comp1 in C", (c, c2, c3, y),
                          lambda: vc(hc(B.mu_c[(c, c2, y)], i2(ca(c3, y))), B.mu_c[(C.compose(c, c2), c3, y)]),
                          lambda: vc(hc(i2(ca(c, y)), B.mu_c[(c2, c3, y)]), B.mu_c[(c, C.compose(c2, c3), y)]))
    return ck.out


# axiom family -> relation family
AXIOM_RELATION = {
    "functid": "TensorId1",
    "functoriality in D": "TensorDist1",
    "unit1": "TensorUnit",
    "comp1": "TensorAssoc",
    "naturality of mu in D": "TensorComp1",
    "swapunit1": "Tensor1IdSwap",
    "swapcomp1": "Tensor1CompSwap",
    "naturality of swap in D": "TensorSwap",
    "modification axiom": "TensorSwap",
    "functoriality in C, identities": "TensorId2",
    "functOfC": "TensorDist2",
    "naturality of mu in C": "TensorComp2",
    "swapunit2": "TensorId1Swap",
    "swapcomp2": "TensorComp1Swap",
    "unit1 in C": "TensorUnit",
    "comp1 in C": "TensorAssoc",
}


# the bijection with assignments ----------------------------------------------------


def to_assignment(B: LaxNestObject, check: bool = True) -> GeneratorAssignment:
    """Rename the data of ``B`` as images of the tensor computad's cells."""
    if check:
        problems = validate_object(B)
        if problems:
            raise ContractViolation(problems)
    edges = {CEdge(c, y): f for (c, y), f in B.carr.items()}
    edges.update({DEdge(x, d): f for (x, d), f in B.darr.items()})
    gens = {}
    gens.update({CBoxDelta(x, a): v for (x, a), v in B.d2.items()})
    gens.update({GammaBoxD(g, y): v for (g, y), v in B.c2.items()})
    gens.update({IdC1D(x, y): v for (x, y), v in B.eta_d.items()})
    gens.update({Id1CD(x, y): v for (x, y), v in B.eta_c.items()})
    gens.update({CompCdd(x, d, d2): v for (x, d, d2), v in B.mu_d.items()})
    gens.update({CompCcD(c, c2, y): v for (c, c2, y), v in B.mu_c.items()})
    gens.update({SwapCd(c, d): v for (c, d), v in B.swap.items()})
    return GeneratorAssignment(B.C, B.D, B.E, dict(B.obj), edges, gens)


def from_assignment(V: GeneratorAssignment, check: bool = True) -> LaxNestObject:
    if V.mixed:
        raise ValueError("mixed assignments do not describe lax-of-lax objects")
    if check:
        problems = check_relations(V)
        if problems:
            raise ContractViolation(problems)
    B = LaxNestObject(V.C, V.D, V.target, dict(V.nodes), {}, {}, {}, {}, {}, {}, {}, {}, {})
    for e, f in V.edges.items():
        if isinstance(e, CEdge):
            B.carr[(e.c, e.D)] = f
        else:
            B.darr[(e.C, e.d)] = f
    for g, v in V.gens.items():
        if isinstance(g, CBoxDelta):
            B.d2[(g.C, g.delta)] = v
        elif isinstance(g, GammaBoxD):
            B.c2[(g.gamma, g.D)] = v
        elif isinstance(g, IdC1D):
            B.eta_d[(g.C, g.D)] = v
        elif isinstance(g, Id1CD):
            B.eta_c[(g.C, g.D)] = v
        elif isinstance(g, CompCdd):
            B.mu_d[(g.C, g.d, g.d2)] = v
        elif isinstance(g, CompCcD):
            B.mu_c[(g.c, g.c2, g.D)] = v
        else:
            B.swap[(g.c, g.d)] = v
    return B


def constant_object(C: FinTwoCategory, D: FinTwoCategory, E: FinTwoCategory, x) -> LaxNestObject:
    """Everything at the object ``x`` of E, with identity cells throughout."""
    one, two = E.id1(x), E.id2(E.id1(x))
    return LaxNestObject(
        C, D, E,
        obj={(a, b): x for a in C.objects for b in D.objects},
        darr={(a, d): one for a in C.objects for d in D.one_cells},
        carr={(c, b): one for c in C.one_cells for b in D.objects},
        d2={(a, t): two for a in C.objects for t in D.two_cells},
        c2={(g, b): two for g in C.two_cells for b in D.objects},
        eta_d={(a, b): two for a in C.objects for b in D.objects},
        mu_d={(a, d, d2): two for a in C.objects for d, d2 in composable_pairs(D)},
        eta_c={(a, b): two for a in C.objects for b in D.objects},
        mu_c={(c, c2, b): two for c, c2 in composable_pairs(C) for b in D.objects},
        swap={(c, d): two for c in C.one_cells for d in D.one_cells},
    )


# arrows and 2-cells ------------------------------------------------------------------


def validate_arrow(B: LaxNestObject, B2: LaxNestObject, b: LaxNestArrow) -> list[Violation]:
    C, D, E = B.C, B.D, B.E
    out = []
    for x in C.objects:
        for y in D.objects:
            f = b.comp.get((x, y))
            if f not in E.one_cells or (E.src1(f), E.tgt1(f)) != (B.obj[(x, y)], B2.obj[(x, y)]):
                out.append(Violation("component missing or mistyped", ((x, y),)))
    if out:
        return out
    k = b.comp
    for x in C.objects:
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            s = b.sigd.get((x, d))
            want = (E.compose(k[(x, y)], B2.darr[(x, d)]), E.compose(B.darr[(x, d)], k[(x, y2)]))
            if s not in E.two_cells or (E.src2(s), E.tgt2(s)) != want:
                out.append(Violation("sigma_bCd missing or mistyped", ((x, d),)))
    for c in C.one_cells:
        for y in D.objects:
            x, x2 = C.src1(c), C.tgt1(c)
            s = b.sigc.get((c, y))
            want = (E.compose(k[(x, y)], B2.carr[(c, y)]), E.compose(B.carr[(c, y)], k[(x2, y)]))
            if s not in E.two_cells or (E.src2(s), E.tgt2(s)) != want:
                out.append(Violation("sigma_bcD missing or mistyped", ((c, y),)))
    if out:
        return out
    ck = _Checker()
    i2, hc, vc = E.id2, E.hcompose, E.vcompose
    for g in C.two_cells:
        c, cb = C.src2(g), C.tgt2(g)
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            ck.eq("swapnat1", (g, y), lambda: vc(hc(i2(k[(x, y)]), B2.c2[(g, y)]), b.sigc[(cb, y)]),
                  lambda: vc(b.sigc[(c, y)], hc(B.c2[(g, y)], i2(k[(x2, y)]))))
    for a in D.two_cells:
        d, db = D.src2(a), D.tgt2(a)
        y, y2 = D.src1(d), D.tgt1(d)
        for x in C.objects:
            ck.eq("swapnat2", (x, a), lambda: vc(hc(i2(k[(x, y)]), B2.d2[(x, a)]), b.sigd[(x, db)]),
                  lambda: vc(b.sigd[(x, d)], hc(B.d2[(x, a)], i2(k[(x, y2)]))))
    for x in C.objects:
        for y in D.objects:
            ck.eq("bsigmaeta", ("D", x, y), lambda: vc(hc(i2(k[(x, y)]), B2.eta_d[(x, y)]), b.sigd[(x, D.id1(y))]),
                  lambda: hc(B.eta_d[(x, y)], i2(k[(x, y)])))
            ck.eq("bsigmaeta", ("C", x, y), lambda: vc(hc(i2(k[(x, y)]), B2.eta_c[(x, y)]), b.sigc[(C.id1(x), y)]),
                  lambda: hc(B.eta_c[(x, y)], i2(k[(x, y)])))
        for d, d2 in composable_pairs(D):
            y, y3 = D.src1(d), D.tgt1(d2)
            ck.eq("bsigmamu", ("D", x, d, d2),
                  lambda: vc(hc(i2(k[(x, y)]), B2.mu_d[(x, d, d2)]), b.sigd[(x, D.compose(d, d2))]),
                  lambda: E.vcomposite([hc(b.sigd[(x, d)], i2(B2.darr[(x, d2)])), hc(i2(B.darr[(x, d)]), b.sigd[(x, d2)]),
                                        hc(B.mu_d[(x, d, d2)], i2(k[(x, y3)]))]))
    for c, c2 in composable_pairs(C):
        x, x3 = C.src1(c), C.tgt1(c2)
        for y in D.objects:
            ck.eq("bsigmamu", ("C", c, c2, y),
                  lambda: vc(hc(i2(k[(x, y)]), B2.mu_c[(c, c2, y)]), b.sigc[(C.compose(c, c2), y)]),
                  lambda: E.vcomposite([hc(b.sigc[(c, y)], i2(B2.carr[(c2, y)])), hc(i2(B.carr[(c, y)]), b.sigc[(c2, y)]),
                                        hc(B.mu_c[(c, c2, y)], i2(k[(x3, y)]))]))
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            ck.eq("swapyb", (c, d),
                  lambda: E.vcomposite([hc(i2(k[(x, y)]), B2.swap[(c, d)]), hc(b.sigd[(x, d)], i2(B2.carr[(c, y2)])),
                                        hc(i2(B.darr[(x, d)]), b.sigc[(c, y2)])]),
                  lambda: E.vcomposite([hc(b.sigc[(c, y)], i2(B2.darr[(x2, d)])), hc(i2(B.carr[(c, y)]), b.sigd[(x2, d)]),
                                        hc(B.swap[(c, d)], i2(k[(x2, y2)]))]))
    return ck.out


def validate_twocell(B: LaxNestObject, B2: LaxNestObject, b: LaxNestArrow, bb: LaxNestArrow,
                     beta: LaxNestTwoCell) -> list[Violation]:
    C, D, E = B.C, B.D, B.E
    out = []
    for x in C.objects:
        for y in D.objects:
            a = beta.comp.get((x, y))
            if a not in E.two_cells or (E.src2(a), E.tgt2(a)) != (b.comp[(x, y)], bb.comp[(x, y)]):
                out.append(Violation("component missing or mistyped", ((x, y),)))
    if out:
        return out
    ck = _Checker()
    i2, hc, vc = E.id2, E.hcompose, E.vcompose
    m = beta.comp
    for c in C.one_cells:
        x, x2 = C.src1(c), C.tgt1(c)
        for y in D.objects:
            ck.eq("modifc", (c, y), lambda: vc(hc(m[(x, y)], i2(B2.carr[(c, y)])), bb.sigc[(c, y)]),
                  lambda: vc(b.sigc[(c, y)], hc(i2(B.carr[(c, y)]), m[(x2, y)])))
    for x in C.objects:
        for d in D.one_cells:
            y, y2 = D.src1(d), D.tgt1(d)
            ck.eq("modifd", (x, d), lambda: vc(hc(m[(x, y)], i2(B2.darr[(x, d)])), bb.sigd[(x, d)]),
                  lambda: vc(b.sigd[(x, d)], hc(i2(B.darr[(x, d)]), m[(x, y2)])))
    return ck.out


def identity_arrow(B: LaxNestObject) -> LaxNestArrow:
    E = B.E
    comp = {k: E.id1(x) for k, x in B.obj.items()}
    return LaxNestArrow(comp, {k: E.id2(f) for k, f in B.darr.items()}, {k: E.id2(f) for k, f in B.carr.items()})


def identity_twocell(b: LaxNestArrow, E: FinTwoCategory) -> LaxNestTwoCell:
    return LaxNestTwoCell({k: E.id2(f) for k, f in b.comp.items()})


# cylinders ------------------------------------------------------------------------------


class _Members:
    def __init__(self, pred):
        self._pred = pred

    def __contains__(self, x):
        try:
            return bool(self._pred(x))
        except (KeyError, TypeError, AttributeError, ShapeError):
            return False


@dataclass(frozen=True)
class Square:
    """A lax square: ``s : f;u2 => u;g`` with ``f`` on top of ``g``."""

    f: Hashable
    g: Hashable
    u: Hashable
    u2: Hashable
    s: Hashable


@dataclass(frozen=True)
class SquareCell:
    src: Square
    tgt: Square
    th: Hashable
    th2: Hashable


class ArrowCylinder(TwoCategory):
    """Arrows of E, lax squares between them, and compatible pairs of 2-cells."""

    def __init__(self, E: FinTwoCategory):
        self.E = E
        self.objects = _Members(lambda f: f in E.one_cells)
        self.one_cells = _Members(self._valid_square)
        self.two_cells = _Members(self._valid_cell)
        self.name = f"cyl({E.name})"

    def _valid_square(self, q) -> bool:
        E = self.E
        if not isinstance(q, Square) or q.f not in E.one_cells or q.g not in E.one_cells or q.s not in E.two_cells:
            return False
        if (E.src1(q.u), E.src1(q.u2)) != (E.src1(q.f), E.tgt1(q.f)):
            return False
        if (E.tgt1(q.u), E.tgt1(q.u2)) != (E.src1(q.g), E.tgt1(q.g)):
            return False
        return (E.src2(q.s), E.tgt2(q.s)) == (E.compose(q.f, q.u2), E.compose(q.u, q.g))

    def _compatible(self, a: SquareCell) -> bool:
        E = self.E
        return (E.vcompose(E.hcompose(E.id2(a.src.f), a.th2), a.tgt.s)
                == E.vcompose(a.src.s, E.hcompose(a.th, E.id2(a.src.g))))

    def _valid_cell(self, a) -> bool:
        E = self.E
        if not isinstance(a, SquareCell) or not (self._valid_square(a.src) and self._valid_square(a.tgt)):
            return False
        if (a.src.f, a.src.g) != (a.tgt.f, a.tgt.g):
            return False
        if (E.src2(a.th), E.tgt2(a.th), E.src2(a.th2), E.tgt2(a.th2)) != (a.src.u, a.tgt.u, a.src.u2, a.tgt.u2):
            return False
        return self._compatible(a)

    def src1(self, q):
        return q.f

    def tgt1(self, q):
        return q.g

    def id1(self, f):
        E = self.E
        return Square(f, f, E.id1(E.src1(f)), E.id1(E.tgt1(f)), E.id2(f))

    def compose(self, p, q):
        E = self.E
        if p.g != q.f:
            raise ShapeError("squares do not compose")
        s = E.vcompose(E.hcompose(p.s, E.id2(q.u2)), E.hcompose(E.id2(p.u), q.s))
        return Square(p.f, q.g, E.compose(p.u, q.u), E.compose(p.u2, q.u2), s)

    def src2(self, a):
        return a.src

    def tgt2(self, a):
        return a.tgt

    def id2(self, q):
        return SquareCell(q, q, self.E.id2(q.u), self.E.id2(q.u2))

    def vcompose(self, a, b):
        E = self.E
        return SquareCell(a.src, b.tgt, E.vcompose(a.th, b.th), E.vcompose(a.th2, b.th2))

    def whisker_left(self, q, a):
        E = self.E
        return SquareCell(self.compose(a.src, q), self.compose(a.tgt, q), E.whisker_left(q.u, a.th),
                          E.whisker_left(q.u2, a.th2))

    def whisker_right(self, a, q):
        E = self.E
        return SquareCell(self.compose(q, a.src), self.compose(q, a.tgt), E.whisker_right(a.th, q.u),
                          E.whisker_right(a.th2, q.u2))


@dataclass(frozen=True)
class CellObject:
    f: Hashable
    fb: Hashable
    beta: Hashable


@dataclass(frozen=True)
class SquarePair:
    """Two squares sharing their sides, compatible with the end 2-cells."""

    top: CellObject
    bottom: CellObject
    sq: Square
    sqb: Square


@dataclass(frozen=True)
class SquarePairCell:
    src: SquarePair
    tgt: SquarePair
    th: Hashable
    th2: Hashable


class CellCylinder(TwoCategory):
    """2-cells of E as objects; 1-cells are pairs of lax squares compatible with them."""

    def __init__(self, E: FinTwoCategory):
        self.E = E
        self.A = ArrowCylinder(E)
        self.objects = _Members(lambda o: isinstance(o, CellObject) and o.beta in E.two_cells
                                and (E.src2(o.beta), E.tgt2(o.beta)) == (o.f, o.fb))
        self.one_cells = _Members(self._valid_pair)
        self.two_cells = _Members(self._valid_cell)
        self.name = f"cyl2({E.name})"

    def _valid_pair(self, p) -> bool:
        E, A = self.E, self.A
        if not isinstance(p, SquarePair) or not (A._valid_square(p.sq) and A._valid_square(p.sqb)):
            return False
        if (p.sq.u, p.sq.u2) != (p.sqb.u, p.sqb.u2):
            return False
        if (p.sq.f, p.sqb.f, p.sq.g, p.sqb.g) != (p.top.f, p.top.fb, p.bottom.f, p.bottom.fb):
            return False
        return (E.vcompose(E.hcompose(p.top.beta, E.id2(p.sq.u2)), p.sqb.s)
                == E.vcompose(p.sq.s, E.hcompose(E.id2(p.sq.u), p.bottom.beta)))

    def _valid_cell(self, a) -> bool:
        if not isinstance(a, SquarePairCell) or not (self._valid_pair(a.src) and self._valid_pair(a.tgt)):
            return False
        if (a.src.top, a.src.bottom) != (a.tgt.top, a.tgt.bottom):
            return False
        A = self.A
        return (A._valid_cell(SquareCell(a.src.sq, a.tgt.sq, a.th, a.th2))
                and A._valid_cell(SquareCell(a.src.sqb, a.tgt.sqb, a.th, a.th2)))

    def src1(self, p):
        return p.top

    def tgt1(self, p):
        return p.bottom

    def id1(self, o):
        return SquarePair(o, o, self.A.id1(o.f), self.A.id1(o.fb))

    def compose(self, p, q):
        return SquarePair(p.top, q.bottom, self.A.compose(p.sq, q.sq), self.A.compose(p.sqb, q.sqb))

    def src2(self, a):
        return a.src

    def tgt2(self, a):
        return a.tgt

    def id2(self, p):
        return SquarePairCell(p, p, self.E.id2(p.sq.u), self.E.id2(p.sq.u2))

    def vcompose(self, a, b):
        E = self.E
        return SquarePairCell(a.src, b.tgt, E.vcompose(a.th, b.th), E.vcompose(a.th2, b.th2))

    def whisker_left(self, p, a):
        E = self.E
        return SquarePairCell(self.compose(a.src, p), self.compose(a.tgt, p), E.whisker_left(p.sq.u, a.th),
                              E.whisker_left(p.sq.u2, a.th2))

    def whisker_right(self, a, p):
        E = self.E
        return SquarePairCell(self.compose(p, a.src), self.compose(p, a.tgt), E.whisker_right(a.th, p.sq.u),
                              E.whisker_right(a.th2, p.sq.u2))


def _gen_images(B: LaxNestObject) -> dict:
    return to_assignment(B, check=False).gens


def arrow_to_cylinder(B: LaxNestObject, B2: LaxNestObject, b: LaxNestArrow, check: bool = True):
    """The arrow ``b`` as an assignment into ``ArrowCylinder(E)``."""
    if check:
        for obj in (B, B2):
            problems = validate_object(obj)
            if problems:
                raise ContractViolation(problems)
    C, D, E = B.C, B.D, B.E
    cyl = ArrowCylinder(E)
    nodes = dict(b.comp)
    edges = {}
    for (x, d), s in b.sigd.items():
        edges[DEdge(x, d)] = Square(b.comp[(x, D.src1(d))], b.comp[(x, D.tgt1(d))], B.darr[(x, d)],
                                    B2.darr[(x, d)], s)
    for (c, y), s in b.sigc.items():
        edges[CEdge(c, y)] = Square(b.comp[(C.src1(c), y)], b.comp[(C.tgt1(c), y)], B.carr[(c, y)],
                                    B2.carr[(c, y)], s)
    g1, g2 = _gen_images(B), _gen_images(B2)
    gens = {}
    for g in all_generators(C, D):
        src, tgt, start = gen_boundary(C, D, g)
        try:
            s_sq = cyl.composite([edges[e] for e in src], nodes[start])
            t_sq = cyl.composite([edges[e] for e in tgt], nodes[start])
            gens[g] = SquareCell(s_sq, t_sq, g1[g], g2[g])
        except (KeyError, ShapeError):
            continue
    return GeneratorAssignment(C, D, cyl, nodes, edges, gens)


def twocell_to_cylinder(B: LaxNestObject, B2: LaxNestObject, b: LaxNestArrow, bb: LaxNestArrow,
                        beta: LaxNestTwoCell, check: bool = True):
    """The 2-cell ``beta : b => bb`` as an assignment into ``CellCylinder(E)``."""
    if check:
        for arrow in (b, bb):
            problems = validate_arrow(B, B2, arrow)
            if problems:
                raise ContractViolation(problems)
    C, D = B.C, B.D
    cyl = CellCylinder(B.E)
    nodes = {k: CellObject(b.comp[k], bb.comp[k], beta.comp.get(k)) for k in b.comp}
    A1 = arrow_to_cylinder(B, B2, b, check=False)
    A2 = arrow_to_cylinder(B, B2, bb, check=False)
    edges = {}
    for e, sq in A1.edges.items():
        s, t = _edge_nodes(C, D, e)
        edges[e] = SquarePair(nodes[s], nodes[t], sq, A2.edges[e])
    gens = {}
    for g, a in A1.gens.items():
        if g not in A2.gens:
            continue
        src, tgt, start = gen_boundary(C, D, g)
        try:
            s_p = cyl.composite([edges[e] for e in src], nodes[start])
            t_p = cyl.composite([edges[e] for e in tgt], nodes[start])
        except (KeyError, ShapeError):
            continue
        gens[g] = SquarePairCell(s_p, t_p, a.th, a.th2)
    return GeneratorAssignment(C, D, cyl, nodes, edges, gens)


def _edge_nodes(C, D, e):
    if isinstance(e, CEdge):
        return (C.src1(e.c), e.D), (C.tgt1(e.c), e.D)
    return (e.C, D.src1(e.d)), (e.C, D.tgt1(e.d))


# distributive laws at C = D = 1 ------------------------------------------------------------


@dataclass(frozen=True)
class DistributiveLaw:
    x: Hashable
    t: Hashable
    s: Hashable
    eta_t: Hashable
    mu_t: Hashable
    eta_s: Hashable
    mu_s: Hashable
    swap: Hashable


def _unit_gens():
    one = terminal()
    x, c, a = "*", one.id1("*"), one.id2(one.id1("*"))
    return one, {
        "cdelta": CBoxDelta(x, a), "gammad": GammaBoxD(a, x), "eta_s": IdC1D(x, x), "eta_t": Id1CD(x, x),
        "mu_s": CompCdd(x, c, c), "mu_t": CompCcD(c, c, x), "swap": SwapCd(c, c),
    }


def dlaw_assignment(E: FinTwoCategory, law: DistributiveLaw) -> GeneratorAssignment:
    one, g = _unit_gens()
    c = one.id1("*")
    return GeneratorAssignment(
        one, one, E, {("*", "*"): law.x}, {CEdge(c, "*"): law.t, DEdge("*", c): law.s},
        {g["cdelta"]: E.id2(law.s), g["gammad"]: E.id2(law.t), g["eta_s"]: law.eta_s, g["eta_t"]: law.eta_t,
         g["mu_s"]: law.mu_s, g["mu_t"]: law.mu_t, g["swap"]: law.swap})


def dlaw_object(E: FinTwoCategory, law: DistributiveLaw) -> LaxNestObject:
    one = terminal()
    x, c, a = "*", one.id1("*"), one.id2(one.id1("*"))
    return LaxNestObject(one, one, E, {(x, x): law.x}, {(x, c): law.s}, {(c, x): law.t},
                         {(x, a): E.id2(law.s)}, {(a, x): E.id2(law.t)}, {(x, x): law.eta_s},
                         {(x, c, c): law.mu_s}, {(x, x): law.eta_t}, {(c, c, x): law.mu_t}, {(c, c): law.swap})


def dlaw_enum(E: FinTwoCategory) -> list[DistributiveLaw]:
    """Every assignment of the tensor computad of 1 and 1 into E that passes check_relations."""
    one, g = _unit_gens()
    comp = tensor_computad(one, one)
    c = one.id1("*")
    out = []
    for x in E.objects:
        endos = [f for f in E.one_cells if (E.src1(f), E.tgt1(f)) == (x, x)]
        for t, s in cartesian(endos, endos):
            edges = {CEdge(c, "*"): t, DEdge("*", c): s}
            V0 = GeneratorAssignment(one, one, E, {("*", "*"): x}, edges, {})
            choices = []
            for gen, (src, tgt, start) in comp.generators.items():
                choices.append([(gen, a) for a in E.cells2(V0.edge_path(src, start), V0.edge_path(tgt, start))])
            for combo in cartesian(*choices):
                V = GeneratorAssignment(one, one, E, {("*", "*"): x}, edges, dict(combo))
                if not check_relations(V):
                    m = V.gens
                    out.append(DistributiveLaw(x, t, s, m[g["eta_t"]], m[g["mu_t"]], m[g["eta_s"]], m[g["mu_s"]],
                                               m[g["swap"]]))
    return out


def dlaw_brute_force(E: FinTwoCategory) -> list[DistributiveLaw]:
    """Monads for t, monads for s, and crossings, filtered by ``validate_object``."""
    from .fin2cat import monads

    out = []
    ms = monads(E)
    for (x, t, eta_t, mu_t) in ms:
        for (x2, s, eta_s, mu_s) in ms:
            if x2 != x:
                continue
            for sw in E.cells2(E.compose(t, s), E.compose(s, t)):
                law = DistributiveLaw(x, t, s, eta_t, mu_t, eta_s, mu_s, sw)
                if not validate_object(dlaw_object(E, law)):
                    out.append(law)
    return out
