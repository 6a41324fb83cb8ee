"""The simplicial model of the strictification tensor product, and its mixed variant.

A 1-cell of ``C [x] D`` is a path in C, a path in D and a shuffle of their
steps.  A 2-cell is a pair of icons whose interval maps form a valid shuffle
morphism.  In the mixed variant the D-icon points the other way; it is stored
as an icon over the 2-cell dual of D from the target D-path to the source one.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .fin2cat import FinTwoCategory, TwoCategory, Violation, co_dual, product
from .paths import (
    Icon,
    Path,
    check_icon,
    concat_paths,
    empty_path,
    hcompose_icons,
    icons_between,
    identity_icon,
    path_composite,
    paths_upto,
    unit_path,
    vcompose_icons,
)
from .shuffles import (
    EMPTY,
    Shuffle,
    ShuffleMorphism,
    enumerate_shuffles,
    is_valid_mixed_morphism,
    is_valid_morphism,
)
from .simplicial import IntervalMap, ShapeError


@dataclass(frozen=True)
class TensorOneCell:
    cpath: Path
    dpath: Path
    shuffle: Shuffle

    def __post_init__(self):
        if (self.shuffle.n, self.shuffle.m) != (len(self.cpath), len(self.dpath)):
            raise ShapeError(f"shuffle {self.shuffle} has ranks ({self.shuffle.n},{self.shuffle.m}) "
                             f"but the paths have lengths ({len(self.cpath)},{len(self.dpath)})")

    @property
    def source(self):
        return (self.cpath.start, self.dpath.start)

    @property
    def target(self):
        return (self.cpath.end, self.dpath.end)

    @property
    def n(self):
        return len(self.cpath)

    @property
    def m(self):
        return len(self.dpath)

    def __str__(self):
        return f"({self.source[0]};{self.source[1]}) word={self.shuffle} cpath={self.cpath} dpath={self.dpath}"


@dataclass(frozen=True)
class TensorTwoCell:
    """``alpha`` is an icon over C with interval map xi; ``beta`` one over D with map rho."""

    src: TensorOneCell
    tgt: TensorOneCell
    alpha: Icon
    beta: Icon

    mixed = False

    @property
    def xi(self) -> IntervalMap:
        return self.alpha.xi

    @property
    def rho(self) -> IntervalMap:
        return self.beta.xi

    @property
    def sh_morph(self) -> ShuffleMorphism:
        return ShuffleMorphism(self.src.shuffle, self.tgt.shuffle, self.xi, self.rho, self.mixed)

    def __str__(self):
        return (f"{self.src.shuffle} => {self.tgt.shuffle} xi={list(self.xi.values)} rho={list(self.rho.values)} "
                f"alpha={list(self.alpha.comps)} beta={list(self.beta.comps)}")


@dataclass(frozen=True)
class MixedTensorTwoCell(TensorTwoCell):
    """Mixed 2-cell: ``beta`` runs from the target D-path back to the source one."""

    mixed = True


class TensorCategory(TwoCategory):
    """``C [x] D`` (or its mixed variant) as an operations object.

    With ``check=True`` every constructed 2-cell is re-validated.
    """

    def __init__(self, C: FinTwoCategory, D: FinTwoCategory, mixed: bool = False, check: bool = True):
        self.C, self.D, self.mixed, self.check = C, D, mixed, check
        self.Dicon = co_dual(D) if mixed else D
        self.cell_type = MixedTensorTwoCell if mixed else TensorTwoCell
        self._product = None

    @property
    def P(self) -> FinTwoCategory:
        """The cartesian product ``C x D``, built on first use."""
        if self._product is None:
            self._product = product(self.C, self.D)
        return self._product

    # construction -----------------------------------------------------

    def one_cell(self, cpath: Path, dpath: Path, word: str | Shuffle) -> TensorOneCell:
        sh = word if isinstance(word, Shuffle) else Shuffle(word)
        return TensorOneCell(cpath, dpath, sh)

    def two_cell(self, src: TensorOneCell, tgt: TensorOneCell, xi, rho, alpha, beta) -> TensorTwoCell:
        xi = xi if isinstance(xi, IntervalMap) else IntervalMap(tgt.n, src.n, tuple(xi))
        if isinstance(rho, IntervalMap):
            pass
        elif self.mixed:
            rho = IntervalMap(src.m, tgt.m, tuple(rho))
        else:
            rho = IntervalMap(tgt.m, src.m, tuple(rho))
        a = Icon(src.cpath, tgt.cpath, xi, tuple(alpha))
        b = Icon(tgt.dpath, src.dpath, rho, tuple(beta)) if self.mixed else Icon(src.dpath, tgt.dpath, rho, tuple(beta))
        cell = self.cell_type(src, tgt, a, b)
        self.check_two_cell(cell)
        return cell

    def check_two_cell(self, cell: TensorTwoCell) -> None:
        if cell.mixed != self.mixed:
            raise ShapeError("plain and mixed 2-cells do not mix")
        src, tgt = cell.src, cell.tgt
        if (src.source, src.target) != (tgt.source, tgt.target):
            raise ShapeError("2-cell between non-parallel 1-cells")
        if (cell.alpha.src, cell.alpha.tgt) != (src.cpath, tgt.cpath):
            raise ShapeError("alpha does not run between the C-paths")
        want = (tgt.dpath, src.dpath) if self.mixed else (src.dpath, tgt.dpath)
        if (cell.beta.src, cell.beta.tgt) != want:
            raise ShapeError("beta does not run between the D-paths")
        check_icon(self.C, cell.alpha)
        check_icon(self.Dicon, cell.beta)
        valid = is_valid_mixed_morphism if self.mixed else is_valid_morphism
        if not valid(src.shuffle, tgt.shuffle, cell.xi, cell.rho):
            raise ShapeError(f"{cell} violates the crossing condition")

    def _make(self, src, tgt, alpha, beta):
        cell = self.cell_type(src, tgt, alpha, beta)
        if self.check:
            self.check_two_cell(cell)
        return cell

    # 2-category structure ---------------------------------------------

    def src1(self, f):
        return f.source

    def tgt1(self, f):
        return f.target

    def id1(self, x):
        c, d = x
        return TensorOneCell(empty_path(c), empty_path(d), EMPTY)

    def compose(self, f, g):
        return TensorOneCell(concat_paths(f.cpath, g.cpath), concat_paths(f.dpath, g.dpath), f.shuffle + g.shuffle)

    def src2(self, a):
        return a.src

    def tgt2(self, a):
        return a.tgt

    def id2(self, f):
        return self.cell_type(f, f, identity_icon(self.C, f.cpath), identity_icon(self.D, f.dpath))

    def vcompose(self, a, b):
        if a.tgt != b.src:
            raise ShapeError("vertical composite of non-matching 2-cells")
        alpha = vcompose_icons(self.C, a.alpha, b.alpha)
        if self.mixed:
            beta = vcompose_icons(self.Dicon, b.beta, a.beta)
        else:
            beta = vcompose_icons(self.D, a.beta, b.beta)
        return self._make(a.src, b.tgt, alpha, beta)

    def hcompose(self, a, b):
        if a.src.target != b.src.source:
            raise ShapeError("horizontal composite of non-adjacent 2-cells")
        return self._make(self.compose(a.src, b.src), self.compose(a.tgt, b.tgt),
                          hcompose_icons(a.alpha, b.alpha), hcompose_icons(a.beta, b.beta))

    def whisker_left(self, g, a):
        return self.hcompose(a, self.id2(g))

    def whisker_right(self, a, f):
        return self.hcompose(self.id2(f), a)

    # enumeration --------------------------------------------------------

    @property
    def objects(self):
        return [(x, y) for x in sorted(self.C.objects, key=str) for y in sorted(self.D.objects, key=str)]

    def one_cells(self, max_len: int, ccells=None, dcells=None) -> list[TensorOneCell]:
        """All 1-cells with ``n + m <= max_len``."""
        cps = list(paths_upto(self.C, max_len, ccells))
        dps = list(paths_upto(self.D, max_len, dcells))
        out = []
        for p in cps:
            for q in dps:
                if len(p) + len(q) <= max_len:
                    for sh in enumerate_shuffles(len(p), len(q)):
                        out.append(TensorOneCell(p, q, sh))
        return out

    def two_cells(self, f: TensorOneCell, g: TensorOneCell) -> Iterator[TensorTwoCell]:
        """Every 2-cell ``f => g``."""
        if (f.source, f.target) != (g.source, g.target):
            return
        alphas = defaultdict(list)
        for a in icons_between(self.C, f.cpath, g.cpath):
            alphas[a.xi].append(a)
        if not alphas:
            return
        betas = defaultdict(list)
        pair = (g.dpath, f.dpath) if self.mixed else (f.dpath, g.dpath)
        for b in icons_between(self.Dicon, *pair):
            betas[b.xi].append(b)
        valid = is_valid_mixed_morphism if self.mixed else is_valid_morphism
        for xi, alist in alphas.items():
            for rho, blist in betas.items():
                if valid(f.shuffle, g.shuffle, xi, rho):
                    for a in alist:
                        for b in blist:
                            yield self.cell_type(f, g, a, b)


# the adjunction with the cartesian product ------------------------------------


class Projection:
    """The strict 2-functor L onto ``C x D``: compose both paths, paste both icons."""

    def __init__(self, T: TensorCategory):
        if T.mixed:
            raise ShapeError("the projection is defined on the plain tensor only")
        self.T = T
        self.P = T.P

    def obj(self, x):
        return x

    def one(self, f: TensorOneCell):
        return (path_composite(self.T.C, f.cpath), path_composite(self.T.D, f.dpath))

    def two(self, a: TensorTwoCell):
        C, D = self.T.C, self.T.D
        return (C.hcomposite(a.alpha.comps, a.src.cpath.start), D.hcomposite(a.beta.comps, a.src.dpath.start))


def project_L(T: TensorCategory, cell):
    L = Projection(T)
    return L.one(cell) if isinstance(cell, TensorOneCell) else L.two(cell)


class Section:
    """The lax functor R from ``C x D`` into the tensor: ``(c, d)`` goes to "D-step, then C-step"."""

    def __init__(self, T: TensorCategory):
        self.T = T
        self.P = T.P

    def one(self, f) -> TensorOneCell:
        c, d = f
        return TensorOneCell(unit_path(self.T.C, c), unit_path(self.T.D, d), Shuffle("dc"))

    def two(self, a) -> TensorTwoCell:
        C, D = self.T.C, self.T.D
        (gamma, delta) = a
        src, tgt = self.one((C.src2(gamma), D.src2(delta))), self.one((C.tgt2(gamma), D.tgt2(delta)))
        return self.T.two_cell(src, tgt, (0, 1), (0, 1), (gamma,), (delta,))

    def unit(self, x) -> TensorTwoCell:
        """Comparison ``1 => R(1_x)``."""
        C, D = self.T.C, self.T.D
        tgt = self.one(self.P.id1(x))
        return self.T.two_cell(self.T.id1(x), tgt, (0, 0), (0, 0), (C.id2(C.id1(x[0])),), (D.id2(D.id1(x[1])),))

    def comp(self, f, g) -> TensorTwoCell:
        """Comparison ``R(g) o R(f) => R(g o f)``, for ``f`` followed by ``g``."""
        C, D = self.T.C, self.T.D
        src = self.T.compose(self.one(f), self.one(g))
        fg = self.P.compose(f, g)
        return self.T.two_cell(src, self.one(fg), (0, 2), (0, 2), (C.id2(fg[0]),), (D.id2(fg[1]),))


def embed_R(T: TensorCategory, cell):
    R = Section(T)
    if isinstance(cell, tuple) and len(cell) == 2 and cell in R.P.one_cells:
        return R.one(cell)
    return R.two(cell)


def unit_eta(T: TensorCategory, f: TensorOneCell) -> TensorTwoCell:
    """The unit ``f => R(L(f))`` of the adjunction."""
    L, R = Projection(T), Section(T)
    tgt = R.one(L.one(f))
    return T.two_cell(f, tgt, (0, f.n), (0, f.m), (T.C.id2(tgt.cpath.cells[0]),), (T.D.id2(tgt.dpath.cells[0]),))


def section_violations(T: TensorCategory, max_len: int = 3) -> list[Violation]:
    """Lax functor laws for R, and L o R = 1, over all cells of ``C x D``."""
    R = Section(T)
    L = Projection(T)
    P = R.P
    out = []

    def bad(law, *w):
        out.append(Violation(law, w))

    for f in P.one_cells:
        if L.one(R.one(f)) != f:
            bad("L o R on 1-cells", f)
    for a in P.two_cells:
        if L.two(R.two(a)) != a:
            bad("L o R on 2-cells", a)
    for a in P.two_cells:
        for b in P.two_cells:
            if P.src2(b) == P.tgt2(a) and R.two(P.vcompose(a, b)) != T.vcompose(R.two(a), R.two(b)):
                bad("R preserves vertical composition", a, b)
    for f in P.one_cells:
        if R.two(P.id2(f)) != T.id2(R.one(f)):
            bad("R preserves identity 2-cells", f)
        x, y = P.src1(f), P.tgt1(f)
        if T.vcompose(T.whisker_left(R.one(f), R.unit(x)), R.comp(P.id1(x), f)) != T.id2(R.one(f)):
            bad("R left unit", f)
        if T.vcompose(T.whisker_right(R.unit(y), R.one(f)), R.comp(f, P.id1(y))) != T.id2(R.one(f)):
            bad("R right unit", f)
    ones_from = defaultdict(list)
    for f in P.one_cells:
        ones_from[P.src1(f)].append(f)
    for f in P.one_cells:
        for g in ones_from[P.tgt1(f)]:
            for h in ones_from[P.tgt1(g)]:
                lhs = T.vcompose(T.whisker_left(R.one(h), R.comp(f, g)), R.comp(P.compose(f, g), h))
                rhs = T.vcompose(T.whisker_right(R.comp(g, h), R.one(f)), R.comp(f, P.compose(g, h)))
                if lhs != rhs:
                    bad("R associativity", f, g, h)
    for a in P.two_cells:
        for b in P.two_cells:
            f, g = P.src2(a), P.tgt2(a)
            f2, g2 = P.src2(b), P.tgt2(b)
            if P.tgt1(f) != P.src1(f2):
                continue
            lhs = T.vcompose(T.hcompose(R.two(a), R.two(b)), R.comp(g, g2))
            rhs = T.vcompose(R.comp(f, f2), R.two(P.hcompose(a, b)))
            if lhs != rhs:
                bad("R naturality", a, b)
    return out


def adjunction_violations(T: TensorCategory, ones, twos) -> list[Violation]:
    """Triangle identities and naturality of the unit on the given tensor cells."""
    L, R = Projection(T), Section(T)
    P = L.P
    out = []

    def bad(law, *w):
        out.append(Violation(law, w))

    for f in ones:
        eta = unit_eta(T, f)
        if L.two(eta) != P.id2(L.one(f)):
            bad("L whiskered with the unit", f)
    for x in P.one_cells:
        if unit_eta(T, R.one(x)) != T.id2(R.one(x)):
            bad("unit whiskered with R", x)
    for a in twos:
        if T.vcompose(a, unit_eta(T, a.tgt)) != T.vcompose(unit_eta(T, a.src), R.two(L.two(a))):
            bad("naturality of the unit", a)
    ones_from = defaultdict(list)
    for f in ones:
        ones_from[f.source].append(f)
    for f in ones:
        for g in ones_from[f.target]:
            lhs = T.vcompose(T.hcompose(unit_eta(T, f), unit_eta(T, g)), R.comp(L.one(f), L.one(g)))
            if lhs != unit_eta(T, T.compose(f, g)):
                bad("unit respects composition", f, g)
    for x in T.objects:
        if unit_eta(T, T.id1(x)) != R.unit(x):
            bad("unit at identities", x)
    return out
