"""Finite strict 2-categories given by explicit composition tables.

Tables follow applicative notation: ``comp1[(g, f)] = g o f``,
``vcomp[(b, a)] = b . a``, ``lwhisk[(f, a)] = f o a`` and
``rwhisk[(a, f)] = a o f``.  The methods, on the other hand, take their
arguments in diagrammatic order (first cell first), which is what every
other module uses.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Any, Callable, Hashable, Iterable, Sequence

from .simplicial import ShapeError

Id = Hashable


class DanglingReferenceError(KeyError):
    """An identifier is used but never declared."""


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple

    def __str__(self):
        return f"{self.law}: " + ", ".join(map(str, self.witness))


@dataclass(frozen=True)
class CellRef:
    kind: str  # "object", "one_cell" or "two_cell"
    id: Id


class TwoCategory:
    """Operations shared by every 2-category in the package.

    Subclasses provide ``src1``, ``tgt1``, ``id1``, ``compose``, ``src2``,
    ``tgt2``, ``id2``, ``vcompose``, ``whisker_left`` and ``whisker_right``.
    """

    def hcompose(self, a, b):
        """Horizontal composite of ``a: f => f'`` followed by ``b: g => g'``."""
        return self.vcompose(self.whisker_left(self.src2(b), a), self.whisker_right(b, self.tgt2(a)))

    def composite(self, cells: Sequence, obj=None):
        """Diagrammatic composite of a path of 1-cells; ``obj`` anchors the empty path."""
        if not cells:
            if obj is None:
                raise ShapeError("empty composite needs an anchor object")
            return self.id1(obj)
        out = cells[0]
        for f in cells[1:]:
            out = self.compose(out, f)
        return out

    def hcomposite(self, cells: Sequence, obj=None):
        """Horizontal composite of a sequence of 2-cells, left to right."""
        if not cells:
            if obj is None:
                raise ShapeError("empty composite needs an anchor object")
            return self.id2(self.id1(obj))
        out = cells[0]
        for a in cells[1:]:
            out = self.hcompose(out, a)
        return out

    def vcomposite(self, cells: Sequence, one_cell=None):
        if not cells:
            return self.id2(one_cell)
        out = cells[0]
        for a in cells[1:]:
            out = self.vcompose(out, a)
        return out


class FinTwoCategory(TwoCategory):
    def __init__(self, objects, one_cells, identities1, comp1, two_cells, identities2, vcomp, lwhisk, rwhisk,
                 name: str = ""):
        self.objects = tuple(objects)
        self.one_cells = dict(one_cells)
        self.identities1 = dict(identities1)
        self.comp1 = dict(comp1)
        self.two_cells = dict(two_cells)
        self.identities2 = dict(identities2)
        self.vcomp = dict(vcomp)
        self.lwhisk = dict(lwhisk)
        self.rwhisk = dict(rwhisk)
        self.name = name

    def __repr__(self):
        return (f"FinTwoCategory({self.name or '?'}: {len(self.objects)} objects, "
                f"{len(self.one_cells)} 1-cells, {len(self.two_cells)} 2-cells)")

    def __eq__(self, other):
        if not isinstance(other, FinTwoCategory):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(frozenset(self.objects))

    def _key(self):
        return (set(self.objects), self.one_cells, self.identities1, self.comp1, self.two_cells,
                self.identities2, self.vcomp, self.lwhisk, self.rwhisk)

    # structure --------------------------------------------------------

    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def id1(self, x):
        return self.identities1[x]

    def compose(self, f, g):
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise ShapeError(f"{g} o {f} is undefined") from None

    def src2(self, a):
        return self.two_cells[a][0]

    def tgt2(self, a):
        return self.two_cells[a][1]

    def id2(self, f):
        return self.identities2[f]

    def vcompose(self, a, b):
        try:
            return self.vcomp[(b, a)]
        except KeyError:
            raise ShapeError(f"{b} . {a} is undefined") from None

    def whisker_left(self, f, a):
        try:
            return self.lwhisk[(f, a)]
        except KeyError:
            raise ShapeError(f"{f} o {a} is undefined") from None

    def whisker_right(self, a, f):
        try:
            return self.rwhisk[(a, f)]
        except KeyError:
            raise ShapeError(f"{a} o {f} is undefined") from None

    def hom(self, x, y):
        return [f for f, (s, t) in self.one_cells.items() if s == x and t == y]

    def cells2(self, f, g):
        return [a for a, (s, t) in self.two_cells.items() if s == f and t == g]

    def is_identity2(self, a) -> bool:
        return self.identities2.get(self.src2(a)) == a

    def resolve(self, ref: CellRef):
        table = {"object": set(self.objects), "one_cell": self.one_cells, "two_cell": self.two_cells}[ref.kind]
        if ref.id not in table:
            raise DanglingReferenceError(f"{ref.kind} {ref.id!r} is not declared")
        return ref.id

    # checks -----------------------------------------------------------

    def _check_references(self):
        objs = set(self.objects)

        def need(kind, x):
            table = {"object": objs, "one_cell": self.one_cells, "two_cell": self.two_cells}[kind]
            if x not in table:
                raise DanglingReferenceError(f"{kind} {x!r} is not declared")

        for f, (s, t) in self.one_cells.items():
            need("object", s), need("object", t)
        for x, f in self.identities1.items():
            need("object", x), need("one_cell", f)
        for (g, f), h in self.comp1.items():
            need("one_cell", g), need("one_cell", f), need("one_cell", h)
        for a, (s, t) in self.two_cells.items():
            need("one_cell", s), need("one_cell", t)
        for f, a in self.identities2.items():
            need("one_cell", f), need("two_cell", a)
        for (b, a), c in self.vcomp.items():
            need("two_cell", b), need("two_cell", a), need("two_cell", c)
        for (f, a), b in self.lwhisk.items():
            need("one_cell", f), need("two_cell", a), need("two_cell", b)
        for (a, f), b in self.rwhisk.items():
            need("two_cell", a), need("one_cell", f), need("two_cell", b)

    def _totality(self) -> list[Violation]:
        out = []
        for x in self.objects:
            f = self.identities1.get(x)
            if f is None:
                out.append(Violation("identity 1-cell missing", (x,)))
            elif self.one_cells[f] != (x, x):
                out.append(Violation("identity 1-cell mistyped", (x, f)))
        for f, (s, t) in self.one_cells.items():
            a = self.identities2.get(f)
            if a is None:
                out.append(Violation("identity 2-cell missing", (f,)))
            elif self.two_cells[a] != (f, f):
                out.append(Violation("identity 2-cell mistyped", (f, a)))
        for a, (f, g) in self.two_cells.items():
            if self.one_cells[f] != self.one_cells[g]:
                out.append(Violation("2-cell between non-parallel 1-cells", (a, f, g)))
        by_src = defaultdict(list)
        for f, (s, _) in self.one_cells.items():
            by_src[s].append(f)
        for f, (s, t) in self.one_cells.items():
            for g in by_src[t]:
                h = self.comp1.get((g, f))
                if h is None:
                    out.append(Violation("composite 1-cell missing", (g, f)))
                elif self.one_cells[h] != (s, self.tgt1(g)):
                    out.append(Violation("composite 1-cell mistyped", (g, f, h)))
        two_by_src = defaultdict(list)
        for a, (f, _) in self.two_cells.items():
            two_by_src[f].append(a)
        for a, (f, g) in self.two_cells.items():
            for b in two_by_src[g]:
                c = self.vcomp.get((b, a))
                if c is None:
                    out.append(Violation("vertical composite missing", (b, a)))
                elif self.two_cells[c] != (f, self.tgt2(b)):
                    out.append(Violation("vertical composite mistyped", (b, a, c)))
        for a, (f, g) in self.two_cells.items():
            x, y = self.one_cells[f]
            for h in by_src[y]:
                b = self.lwhisk.get((h, a))
                if b is None:
                    out.append(Violation("left whisker missing", (h, a)))
                elif (self.comp1.get((h, f)), self.comp1.get((h, g))) != self.two_cells[b]:
                    out.append(Violation("left whisker mistyped", (h, a, b)))
            for h, (s, t) in self.one_cells.items():
                if t != x:
                    continue
                b = self.rwhisk.get((a, h))
                if b is None:
                    out.append(Violation("right whisker missing", (a, h)))
                elif (self.comp1.get((f, h)), self.comp1.get((g, h))) != self.two_cells[b]:
                    out.append(Violation("right whisker mistyped", (a, h, b)))
        return out


def validate(E: FinTwoCategory) -> list[Violation]:
    """All violated 2-category laws; raises on dangling identifiers."""
    E._check_references()
    out = E._totality()
    if out:
        return out
    return law_violations(E, E.objects, list(E.one_cells), list(E.two_cells))


def law_violations(cat: TwoCategory, objects: Iterable, ones: Iterable, twos: Iterable,
                   admissible: Callable[[Any, Any], bool] | None = None) -> list[Violation]:
    """Check the strict 2-category laws on the given cells of ``cat``.

    Only cells from the supplied lists are combined, so this works for an
    infinite 2-category restricted to a finite universe of cells.  Each hom
    of 2-cells should be listed completely; vertical composites are then
    interned and associativity runs on table lookups.  ``admissible(f, g)``
    limits which horizontally adjacent 1-cells ``f`` then ``g`` are combined.
    """
    objects, ones, twos = list(objects), list(ones), list(twos)
    ok = admissible or (lambda f, g: True)
    out: list[Violation] = []

    def bad(law, *w):
        out.append(Violation(law, w))

    ones_from = defaultdict(list)
    for f in ones:
        ones_from[cat.src1(f)].append(f)
    ones_into = defaultdict(list)
    for f in ones:
        ones_into[cat.tgt1(f)].append(f)
    twos_on = defaultdict(list)  # 2-cells by source object
    twos_from = defaultdict(list)  # 2-cells by source 1-cell
    for a in twos:
        twos_on[cat.src1(cat.src2(a))].append(a)
        twos_from[cat.src2(a)].append(a)

    # 1-cells: units and associativity
    for f in ones:
        x, y = cat.src1(f), cat.tgt1(f)
        if cat.compose(cat.id1(x), f) != f or cat.compose(f, cat.id1(y)) != f:
            bad("1-cell unit law", f)
    for f in ones:
        for g in ones_from[cat.tgt1(f)]:
            if not ok(f, g):
                continue
            fg = cat.compose(f, g)
            if (cat.src1(fg), cat.tgt1(fg)) != (cat.src1(f), cat.tgt1(g)):
                bad("composite typing", f, g)
            for h in ones_from[cat.tgt1(g)]:
                if ok(fg, h) and ok(g, h) and cat.compose(fg, h) != cat.compose(f, cat.compose(g, h)):
                    bad("1-cell associativity", f, g, h)

    # 2-cells: units, then associativity over an interned composition table
    index = {a: i for i, a in enumerate(twos)}
    succ = [[index[b] for b in twos_from[cat.tgt2(a)] if b in index] for a in twos]
    table: dict = {}
    for i, a in enumerate(twos):
        f, g = cat.src2(a), cat.tgt2(a)
        if cat.vcompose(cat.id2(f), a) != a or cat.vcompose(a, cat.id2(g)) != a:
            bad("2-cell unit law", a)
        for j in succ[i]:
            ab = cat.vcompose(a, twos[j])
            if (cat.src2(ab), cat.tgt2(ab)) != (f, cat.tgt2(twos[j])):
                bad("vertical composite typing", a, twos[j])
            table[(i, j)] = index.get(ab, ab)

    def vc(i, j):
        x = table.get((i, j)) if isinstance(i, int) and isinstance(j, int) else None
        if x is None:
            x = cat.vcompose(twos[i] if isinstance(i, int) else i, twos[j] if isinstance(j, int) else j)
            x = index.get(x, x)
        return x

    for i in range(len(twos)):
        for j in succ[i]:
            ij = table[(i, j)]
            for k in succ[j]:
                if vc(ij, k) != vc(i, table[(j, k)]):
                    bad("2-cell associativity", twos[i], twos[j], twos[k])

    # whiskering
    for a in twos:
        f, g = cat.src2(a), cat.tgt2(a)
        x, y = cat.src1(f), cat.tgt1(f)
        if cat.whisker_left(cat.id1(y), a) != a or cat.whisker_right(a, cat.id1(x)) != a:
            bad("whiskering by identity", a)
        for h in ones_from[y]:
            if not (ok(f, h) and ok(g, h)):
                continue
            w = cat.whisker_left(h, a)
            if (cat.src2(w), cat.tgt2(w)) != (cat.compose(f, h), cat.compose(g, h)):
                bad("left whisker typing", h, a)
            for b in twos_from[g]:
                if ok(cat.tgt2(b), h) and \
                        cat.whisker_left(h, cat.vcompose(a, b)) != cat.vcompose(w, cat.whisker_left(h, b)):
                    bad("left whisker functoriality", h, a, b)
            for k in ones_from[cat.tgt1(h)]:
                if ok(h, k) and ok(cat.compose(f, h), k) and \
                        cat.whisker_left(k, w) != cat.whisker_left(cat.compose(h, k), a):
                    bad("left whisker associativity", k, h, a)
        for h in ones_into[x]:
            if not (ok(h, f) and ok(h, g)):
                continue
            w = cat.whisker_right(a, h)
            if (cat.src2(w), cat.tgt2(w)) != (cat.compose(h, f), cat.compose(h, g)):
                bad("right whisker typing", a, h)
            for b in twos_from[g]:
                if ok(h, cat.tgt2(b)) and \
                        cat.whisker_right(cat.vcompose(a, b), h) != cat.vcompose(w, cat.whisker_right(b, h)):
                    bad("right whisker functoriality", a, b, h)
            for k in ones_into[cat.src1(h)]:
                if ok(k, h) and ok(k, cat.compose(h, f)) and \
                        cat.whisker_right(w, k) != cat.whisker_right(a, cat.compose(k, h)):
                    bad("right whisker associativity", a, h, k)
            for k in ones_from[y]:
                if ok(cat.compose(h, f), k) and ok(f, k) and \
                        cat.whisker_right(cat.whisker_left(k, a), h) != cat.whisker_left(k, w):
                    bad("whisker bimodularity", k, a, h)
    for f in ones:
        for h in ones_from[cat.tgt1(f)]:
            if not ok(f, h):
                continue
            if cat.whisker_left(h, cat.id2(f)) != cat.id2(cat.compose(f, h)):
                bad("left whisker of identity", h, f)
            if cat.whisker_right(cat.id2(h), f) != cat.id2(cat.compose(f, h)):
                bad("right whisker of identity", h, f)

    # interchange: both orders of pasting a horizontally adjacent pair agree
    for a in twos:
        f, f2 = cat.src2(a), cat.tgt2(a)
        for b in twos_on[cat.tgt1(f)]:
            g, g2 = cat.src2(b), cat.tgt2(b)
            if not (ok(f, g) and ok(f2, g2) and ok(f, g2) and ok(f2, g)):
                continue
            one = cat.vcompose(cat.whisker_left(g, a), cat.whisker_right(b, f2))
            two = cat.vcompose(cat.whisker_right(b, f), cat.whisker_left(g2, a))
            if one != two:
                bad("interchange", a, b)
            if cat.hcompose(a, b) != one:
                bad("horizontal composite", a, b)
    return out


# constructions ----------------------------------------------------------


def locally_posetal(objects, one_cells: dict, compose_fn: Callable[[Any, Any], Any], identity_fn: Callable,
                    leq_fn: Callable[[Any, Any], bool], name: str = "",
                    cell_name: Callable[[Any, Any], Any] = lambda f, g: f"{f}=>{g}") -> FinTwoCategory:
    """A 2-category with at most one 2-cell between parallel 1-cells.

    ``compose_fn(g, f)`` is applicative; ``leq_fn(f, g)`` says whether f => g exists.
    """
    objects = list(objects)
    identities1 = {x: identity_fn(x) for x in objects}
    comp1 = {}
    for f, (s, t) in one_cells.items():
        for g, (s2, t2) in one_cells.items():
            if s2 == t:
                comp1[(g, f)] = compose_fn(g, f)
    two_cells = {}
    for f, st in one_cells.items():
        for g, st2 in one_cells.items():
            if st == st2 and leq_fn(f, g):
                two_cells[cell_name(f, g)] = (f, g)
    name_of = {pair: a for a, pair in two_cells.items()}
    identities2 = {f: name_of[(f, f)] for f in one_cells}
    vcomp = {}
    for a, (f, g) in two_cells.items():
        for b, (g2, h) in two_cells.items():
            if g2 == g:
                vcomp[(b, a)] = name_of[(f, h)]
    lwhisk, rwhisk = {}, {}
    for a, (f, g) in two_cells.items():
        for h, (s, t) in one_cells.items():
            if s == one_cells[f][1]:
                lwhisk[(h, a)] = name_of[(comp1[(h, f)], comp1[(h, g)])]
            if t == one_cells[f][0]:
                rwhisk[(a, h)] = name_of[(comp1[(f, h)], comp1[(g, h)])]
    return FinTwoCategory(objects, one_cells, identities1, comp1, two_cells, identities2, vcomp, lwhisk, rwhisk,
                          name=name)


def terminal() -> FinTwoCategory:
    """The terminal 2-category 1: one object, one 1-cell, one 2-cell."""
    return FinTwoCategory(
        ["*"], {"id1_*": ("*", "*")}, {"*": "id1_*"}, {("id1_*", "id1_*"): "id1_*"},
        {"id2_id1_*": ("id1_*", "id1_*")}, {"id1_*": "id2_id1_*"},
        {("id2_id1_*", "id2_id1_*"): "id2_id1_*"},
        {("id1_*", "id2_id1_*"): "id2_id1_*"}, {("id2_id1_*", "id1_*"): "id2_id1_*"},
        name="1",
    )


def build_suspended_poset_monoid(k: int) -> FinTwoCategory:
    """E_k: one object ``*``, 1-cells ``"0".."k"`` composing by truncated addition,
    and a unique 2-cell ``"a<=b"`` whenever a <= b."""
    if k < 0:
        raise ValueError("k must be non-negative")
    ones = {str(a): ("*", "*") for a in range(k + 1)}
    return locally_posetal(
        ["*"], ones,
        compose_fn=lambda g, f: str(min(int(g) + int(f), k)),
        identity_fn=lambda x: "0",
        leq_fn=lambda f, g: int(f) <= int(g),
        name=f"E_{k}",
        cell_name=lambda f, g: f"{f}<={g}",
    )


def walking_arrow_with_cell() -> FinTwoCategory:
    """Objects ``X``, ``Y``; parallel arrows ``c``, ``cb: X -> Y``; one 2-cell ``g: c => cb``."""
    ones = {"1X": ("X", "X"), "1Y": ("Y", "Y"), "c": ("X", "Y"), "cb": ("X", "Y")}

    def comp(g, f):
        if g in ("1X", "1Y"):
            return f
        return g

    cat = locally_posetal(["X", "Y"], ones, comp, lambda x: "1" + x,
                          lambda f, g: f == g or (f, g) == ("c", "cb"))
    return _rename_cells(cat, {"c=>cb": "g"}, name="arrow")


def walking_arrow() -> FinTwoCategory:
    """The free arrow 0 -> 1."""
    ones = {"1_0": ("0", "0"), "1_1": ("1", "1"), "u": ("0", "1")}
    return locally_posetal(["0", "1"], ones, lambda g, f: f if g.startswith("1_") else g,
                           lambda x: "1_" + x, lambda f, g: f == g, name="I")


def decorated_monoid() -> FinTwoCategory:
    """One object, 1-cells ``"0"``, ``"1"`` with truncated addition, and 2-cells
    ``a<=b/g`` for a <= b labelled by g in Z/2 (added under every composition).

    Unlike the locally posetal builders this has parallel distinct 2-cells.
    """
    ones = {"0": ("*", "*"), "1": ("*", "*")}
    comp1 = {(g, f): str(min(int(g) + int(f), 1)) for g in ones for f in ones}
    twos = {}
    for a in "01":
        for b in "01":
            if a <= b:
                for lab in "01":
                    twos[f"{a}<={b}/{lab}"] = (a, b)

    def parts(x):
        ab, lab = x.split("/")
        a, b = ab.split("<=")
        return a, b, int(lab)

    def cell(a, b, lab):
        return f"{a}<={b}/{lab % 2}"

    vcomp, lwhisk, rwhisk = {}, {}, {}
    for x in twos:
        a, b, p = parts(x)
        for y in twos:
            b2, c, q = parts(y)
            if b2 == b:
                vcomp[(y, x)] = cell(a, c, p + q)
        for h in ones:
            lwhisk[(h, x)] = cell(comp1[(h, a)], comp1[(h, b)], p)
            rwhisk[(x, h)] = cell(comp1[(a, h)], comp1[(b, h)], p)
    return FinTwoCategory(["*"], ones, {"*": "0"}, comp1, twos, {f: f"{f}<={f}/0" for f in ones}, vcomp,
                          lwhisk, rwhisk, name="Z2-monoid")


def _rename_cells(cat: FinTwoCategory, names: dict, name: str = "") -> FinTwoCategory:
    r = lambda a: names.get(a, a)
    return FinTwoCategory(
        cat.objects, cat.one_cells, cat.identities1, cat.comp1,
        {r(a): v for a, v in cat.two_cells.items()}, {f: r(a) for f, a in cat.identities2.items()},
        {(r(b), r(a)): r(c) for (b, a), c in cat.vcomp.items()},
        {(f, r(a)): r(b) for (f, a), b in cat.lwhisk.items()},
        {(r(a), f): r(b) for (a, f), b in cat.rwhisk.items()},
        name=name or cat.name,
    )


def product(C: FinTwoCategory, D: FinTwoCategory) -> FinTwoCategory:
    """Componentwise product; identifiers are pairs."""
    objects = list(iproduct(C.objects, D.objects))
    ones = {(f, g): ((C.src1(f), D.src1(g)), (C.tgt1(f), D.tgt1(g))) for f in C.one_cells for g in D.one_cells}
    ids1 = {(x, y): (C.id1(x), D.id1(y)) for x, y in objects}
    comp1 = {((g1, g2), (f1, f2)): (C.comp1[(g1, f1)], D.comp1[(g2, f2)])
             for (g1, f1) in C.comp1 for (g2, f2) in D.comp1}
    twos = {(a, b): ((C.src2(a), D.src2(b)), (C.tgt2(a), D.tgt2(b))) for a in C.two_cells for b in D.two_cells}
    ids2 = {(f, g): (C.id2(f), D.id2(g)) for f, g in ones}
    vcomp = {((b1, b2), (a1, a2)): (C.vcomp[(b1, a1)], D.vcomp[(b2, a2)])
             for (b1, a1) in C.vcomp for (b2, a2) in D.vcomp}
    lwhisk = {((f1, f2), (a1, a2)): (C.lwhisk[(f1, a1)], D.lwhisk[(f2, a2)])
              for (f1, a1) in C.lwhisk for (f2, a2) in D.lwhisk}
    rwhisk = {((a1, a2), (f1, f2)): (C.rwhisk[(a1, f1)], D.rwhisk[(a2, f2)])
              for (a1, f1) in C.rwhisk for (a2, f2) in D.rwhisk}
    return FinTwoCategory(objects, ones, ids1, comp1, twos, ids2, vcomp, lwhisk, rwhisk,
                          name=f"{C.name}x{D.name}")


def op_dual(E: FinTwoCategory) -> FinTwoCategory:
    """Reverse the 1-cells."""
    return FinTwoCategory(
        E.objects, {f: (t, s) for f, (s, t) in E.one_cells.items()}, E.identities1,
        {(f, g): h for (g, f), h in E.comp1.items()},
        E.two_cells, E.identities2, E.vcomp,
        {(f, a): b for (a, f), b in E.rwhisk.items()},
        {(a, f): b for (f, a), b in E.lwhisk.items()},
        name=f"{E.name}^op",
    )


def co_dual(E: FinTwoCategory) -> FinTwoCategory:
    """Reverse the 2-cells."""
    return FinTwoCategory(
        E.objects, E.one_cells, E.identities1, E.comp1,
        {a: (t, s) for a, (s, t) in E.two_cells.items()}, E.identities2,
        {(a, b): c for (b, a), c in E.vcomp.items()},
        E.lwhisk, E.rwhisk,
        name=f"{E.name}^co",
    )


def monads(E: FinTwoCategory) -> list[tuple]:
    """All (object, t, eta, mu) with eta: 1 => t, mu: t o t => t satisfying the monad laws."""
    out = []
    for x in E.objects:
        for t in E.hom(x, x):
            tt = E.compose(t, t)
            for eta in E.cells2(E.id1(x), t):
                for mu in E.cells2(tt, t):
                    left = E.vcompose(E.whisker_left(t, eta), mu)
                    right = E.vcompose(E.whisker_right(eta, t), mu)
                    ttt = E.compose(tt, t)
                    a1 = E.vcompose(E.whisker_left(t, mu), mu)
                    a2 = E.vcompose(E.whisker_right(mu, t), mu)
                    if left == right == E.id2(t) and a1 == a2 and E.src2(a1) == ttt:
                        out.append((x, t, eta, mu))
    return out


def idempotent_with_cell() -> FinTwoCategory:
    """Objects ``X``, ``Y``; generating arrows ``c: X -> Y`` and an idempotent
    ``e: Y -> Y``; one generating 2-cell ``g: 1Y => e`` (so ``c => ec`` by whiskering)."""
    ones = {"1X": ("X", "X"), "1Y": ("Y", "Y"), "c": ("X", "Y"), "e": ("Y", "Y"), "ec": ("X", "Y")}

    def comp(g, f):
        if g in ("1X", "1Y"):
            return f
        if f in ("1X", "1Y"):
            return g
        return "ec" if f in ("c", "ec") else "e"

    order = {("1Y", "e"), ("c", "ec")}
    cat = locally_posetal(["X", "Y"], ones, comp, lambda x: "1" + x, lambda f, g: f == g or (f, g) in order)
    return _rename_cells(cat, {"1Y=>e": "g", "c=>ec": "gc"}, name="idem")


def lo_hi_chain(k: int) -> FinTwoCategory:
    """Objects ``1..k``; for ``i < j`` two arrows ``lo_i_j <= hi_i_j``, and for each
    ``i`` an idempotent ``hi_i_i`` above the identity.  A composite is ``hi``
    as soon as one factor is."""
    objs = [str(i) for i in range(1, k + 1)]
    ones = {f"id_{i}": (str(i), str(i)) for i in range(1, k + 1)}
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            if i < j:
                ones[f"lo_{i}_{j}"] = (str(i), str(j))
            ones[f"hi_{i}_{j}"] = (str(i), str(j))

    def comp(g, f):
        if f.startswith("id_"):
            return g
        if g.startswith("id_"):
            return f
        level = "hi" if "hi" in (f[:2], g[:2]) else "lo"
        return f"{level}_{ones[f][0]}_{ones[g][1]}"

    return locally_posetal(objs, ones, comp, lambda x: f"id_{x}", lambda f, g: f == g or g.startswith("hi"),
                           name=f"chain_{k}")


# generating arrows of the sample categories, used to build path universes
GENERATING_ARROWS = {"idem": ("c", "e"), "Z2-monoid": ("1",), "arrow": ("c", "cb"), "I": ("u",)}


def sample_pair() -> tuple[FinTwoCategory, FinTwoCategory]:
    """The test universe: C has two objects, two generating arrows and one
    generating 2-cell; D has one object, one generating arrow and two
    generating 2-cells with distinct parallel 2-cells."""
    return idempotent_with_cell(), decorated_monoid()


def generating_arrows(E: FinTwoCategory) -> tuple:
    """Declared generators for the samples; otherwise every non-identity 1-cell."""
    if E.name in GENERATING_ARROWS:
        return GENERATING_ARROWS[E.name]
    ids = set(E.identities1.values())
    return tuple(sorted((f for f in E.one_cells if f not in ids), key=str))
