"""Canonical decomposition of tensor 2-cells into whiskered generators,
evaluation in a finite target, and the bubble-sort that re-normalizes a
vertical composite of two decompositions.

Slice lists returned by this module are in target-first order: the first
slice is applied last, matching how an applicative composite is written.
Internally the work is done on forward lists of ``(position, generator)``
items, where position counts edges to the left of the generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .computad import (
    CBoxDelta,
    CEdge,
    CompCcD,
    CompCdd,
    Computad,
    DEdge,
    GammaBoxD,
    GeneratorAssignment,
    Id1CD,
    IdC1D,
    SwapCd,
    TensorGenerator,
    cell_of_edges,
    edge_source,
    edges_of_cell,
    elementary,
    end_node,
    ensure_valid,
    evaluate_one,
    gen_boundary,
)
from .shuffles import C as CSTEP, D as DSTEP, Shuffle, shuffle_to_table
from .simplicial import ShapeError
from .tensor import TensorCategory, TensorOneCell, TensorTwoCell


class ResortStuck(RuntimeError):
    """No rewrite applies to an adjacent pair that is out of order."""


@dataclass(frozen=True)
class Slice:
    """``left``, then the generator, then ``right``, along the path."""

    left: TensorOneCell
    gen: TensorGenerator
    right: TensorOneCell

    @property
    def kind(self) -> str:
        return slice_kind(self.gen)

    @property
    def pos(self) -> int:
        return self.left.n + self.left.m


_KINDS = {SwapCd: "S", Id1CD: "Kid", CompCcD: "Kcomp", IdC1D: "Lid", CompCdd: "Lcomp", GammaBoxD: "I", CBoxDelta: "J"}
RANK = {"S": 0, "Kid": 1, "Kcomp": 1, "Lid": 2, "Lcomp": 2, "I": 3, "J": 4}


def slice_kind(g: TensorGenerator) -> str:
    return _KINDS[type(g)]


def _labels(word: str) -> list:
    out, ci, di = [], 0, 0
    for x in word:
        if x == CSTEP:
            ci += 1
            out.append((CSTEP, ci))
        else:
            di += 1
            out.append((DSTEP, di))
    return out


class _Run:
    """A word of edges being rewritten one generator at a time."""

    def __init__(self, T: TensorCategory, edges, start, labels=None):
        self.T, self.start = T, start
        self.word = list(edges)
        self.labels = list(labels) if labels is not None else [None] * len(self.word)
        self.items: list = []

    def node_at(self, pos: int):
        return end_node(self.T, self.word[:pos], self.start)

    def apply(self, pos: int, gen: TensorGenerator) -> None:
        src, tgt, gstart = gen_boundary(self.T.C, self.T.D, gen, self.T.mixed)
        if tuple(self.word[pos:pos + len(src)]) != src or pos > len(self.word) or self.node_at(pos) != gstart:
            raise ShapeError(f"generator {gen} does not apply at position {pos}")
        if isinstance(gen, SwapCd):
            new = [self.labels[pos + 1], self.labels[pos]]
        else:
            new = [None] * len(tgt)
        self.word[pos:pos + len(src)] = tgt
        self.labels[pos:pos + len(src)] = new
        self.items.append((pos, gen))

    def kinds(self) -> str:
        return "".join(CSTEP if isinstance(e, CEdge) else DSTEP for e in self.word)

    def cross_to(self, target_word: str) -> None:
        """Adjacent swaps taking the current word to ``target_word``."""
        src_t = shuffle_to_table(Shuffle(self.kinds()))
        tgt_t = shuffle_to_table(Shuffle(target_word))
        crossings = []
        for j, row in enumerate(src_t):
            for i, v in enumerate(row):
                w = tgt_t[j][i]
                if v > w:
                    raise ShapeError("a D-step would have to cross back over a C-step")
                if v < w:
                    crossings.append((i + 1, j + 1))
        # x = D index, y = C index: ascending x - y, then x + y
        crossings.sort(key=lambda ij: (ij[1] - ij[0], ij[0] + ij[1]))
        for i, j in crossings:
            p = self.labels.index((CSTEP, i))
            if p + 1 >= len(self.labels) or self.labels[p + 1] != (DSTEP, j):
                raise ShapeError(f"crossing ({i},{j}) is not adjacent")
            self.apply(p, SwapCd(self.word[p].c, self.word[p + 1].d))


def _expand(word: str, cseg: Sequence[int], dseg: Sequence[int]) -> str:
    out, ci, di = [], 0, 0
    for x in word:
        if x == CSTEP:
            out.append(CSTEP * cseg[ci])
            ci += 1
        else:
            out.append(DSTEP * dseg[di])
            di += 1
    return "".join(out)


def _diffs(values) -> list:
    return [values[k] - values[k - 1] for k in range(1, len(values))]


def _contract(run: _Run, blocks: list, kind: str, T: TensorCategory) -> None:
    """Comparison slices turning each block of ``kind`` into a single step."""
    for b, (k, length) in enumerate(blocks):
        if k != kind:
            continue
        pos = sum(L for _, L in blocks[:b])
        x, y = run.node_at(pos)
        if length == 0:
            run.apply(pos, Id1CD(x, y) if kind == CSTEP else IdC1D(x, y))
        for _ in range(length - 1):
            if kind == CSTEP:
                run.apply(pos, CompCcD(run.word[pos].c, run.word[pos + 1].c, y))
            else:
                run.apply(pos, CompCdd(x, run.word[pos].d, run.word[pos + 1].d))
        blocks[b] = (k, 1)


def _decorate(run: _Run, blocks: list, kind: str, comps, T: TensorCategory) -> None:
    """Icon-component slices, one per non-identity component."""
    idx = 0
    for b, (k, _) in enumerate(blocks):
        if k != kind:
            continue
        cell = comps[idx]
        idx += 1
        pos = sum(L for _, L in blocks[:b])
        x, y = run.node_at(pos)
        if kind == CSTEP and not T.C.is_identity2(cell):
            run.apply(pos, GammaBoxD(cell, y))
        elif kind == DSTEP and not T.D.is_identity2(cell):
            run.apply(pos, CBoxDelta(x, cell))


def canonical_items(T: TensorCategory, a: TensorTwoCell):
    """``(source edges, start node, forward items)`` of the canonical decomposition."""
    f, g = a.src, a.tgt
    src_edges = edges_of_cell(T, f)
    run = _Run(T, src_edges, f.source, _labels(f.shuffle.word))
    cseg = _diffs(a.xi.values)
    if not T.mixed:
        dseg = _diffs(a.rho.values)
        run.cross_to(_expand(g.shuffle.word, cseg, dseg))
        blocks = [(x, cseg[i] if x == CSTEP else dseg[i]) for x, i in _step_indices(g.shuffle.word)]
        _contract(run, blocks, CSTEP, T)
        _contract(run, blocks, DSTEP, T)
        _decorate(run, blocks, CSTEP, a.alpha.comps, T)
        _decorate(run, blocks, DSTEP, a.beta.comps, T)
    else:
        dseg = _diffs(a.rho.values)  # rho runs from the source D-steps to the target ones
        blocks = [(x, 1) for x in f.shuffle.word]
        _decorate(run, blocks, DSTEP, a.beta.comps, T)
        idx = 0
        for b, (k, _) in enumerate(blocks):
            if k != DSTEP:
                continue
            lo, length = a.rho.values[idx], dseg[idx]
            idx += 1
            pos = sum(L for _, L in blocks[:b])
            x, y = run.node_at(pos)
            if length == 0:
                run.apply(pos, IdC1D(x, y))
            for k2 in range(length, 1, -1):
                first = T.D.composite(g.dpath.cells[lo:lo + k2 - 1])
                run.apply(pos, CompCdd(x, first, g.dpath.cells[lo + k2 - 1]))
            blocks[b] = (k, length)
        dl = 0
        for p, e in enumerate(run.word):
            if isinstance(e, DEdge):
                dl += 1
                run.labels[p] = (DSTEP, dl)
        run.cross_to(_expand(g.shuffle.word, cseg, [1] * g.m))
        blocks = [(x, cseg[i] if x == CSTEP else 1) for x, i in _step_indices(g.shuffle.word)]
        _contract(run, blocks, CSTEP, T)
        _decorate(run, blocks, CSTEP, a.alpha.comps, T)
    if tuple(run.word) != edges_of_cell(T, g):
        raise ShapeError("decomposition does not reach the target 1-cell")
    return src_edges, f.source, run.items


def _step_indices(word: str):
    ci = di = 0
    for x in word:
        if x == CSTEP:
            yield x, ci
            ci += 1
        else:
            yield x, di
            di += 1


def slices_of(T: TensorCategory, edges, start, items) -> list[Slice]:
    """Forward slices for forward items applied to the edge path ``edges``."""
    run = _Run(T, edges, start)
    out = []
    for pos, gen in items:
        src, _, _ = gen_boundary(T.C, T.D, gen, T.mixed)
        left = cell_of_edges(T, run.word[:pos], start)
        right_edges = run.word[pos + len(src):]
        right = cell_of_edges(T, right_edges, end_node(T, run.word[:pos + len(src)], start))
        run.apply(pos, gen)
        out.append(Slice(left, gen, right))
    return out


def canonical_decomposition(T: TensorCategory, a: TensorTwoCell) -> list[Slice]:
    """Whiskered generators whose vertical composite is ``a``, target first."""
    edges, start, items = canonical_items(T, a)
    return list(reversed(slices_of(T, edges, start, items)))


def slice_cell(T: TensorCategory, s: Slice) -> TensorTwoCell:
    return T.hcompose(T.hcompose(T.id2(s.left), elementary(T, s.gen)), T.id2(s.right))


def slice_source(T: TensorCategory, s: Slice) -> TensorOneCell:
    src, _, start = gen_boundary(T.C, T.D, s.gen, T.mixed)
    return T.compose(T.compose(s.left, cell_of_edges(T, src, start)), s.right)


def compose_slices(T: TensorCategory, slices: Sequence[Slice], f: Optional[TensorOneCell] = None) -> TensorTwoCell:
    """Vertical composite in the simplicial model of target-first slices."""
    if not slices:
        if f is None:
            raise ShapeError("an empty slice list needs its 1-cell")
        return T.id2(f)
    return T.vcomposite([slice_cell(T, s) for s in reversed(slices)])


# evaluation in a finite target ------------------------------------------------


def evaluate_slice(V: GeneratorAssignment, s: Slice):
    E = V.target
    return E.hcomposite([E.id2(evaluate_one(V, s.left)), V.gens[s.gen], E.id2(evaluate_one(V, s.right))])


def evaluate_slices(V: GeneratorAssignment, slices: Sequence[Slice], f: TensorOneCell):
    """Vertical composite in the target of target-first slices starting at ``f``."""
    E = V.target
    return E.vcomposite([evaluate_slice(V, s) for s in reversed(slices)], one_cell=evaluate_one(V, f))


def evaluate_two(V: GeneratorAssignment, a: TensorTwoCell, T: Optional[TensorCategory] = None):
    ensure_valid(V)
    T = T or TensorCategory(V.C, V.D, V.mixed, check=False)
    return evaluate_slices(V, canonical_decomposition(T, a), a.src)


# resort ----------------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    """One local rewrite: ``before`` items at ``index`` became ``after``."""

    rule: str
    index: int
    before: tuple
    after: tuple
    items: tuple


class _Resorter:
    def __init__(self, T: TensorCategory, edges, start, items):
        self.T, self.C, self.D = T, T.C, T.D
        self.edges, self.start = tuple(edges), start
        self.items = list(items)
        self.trace: list[Move] = []
        self._simulate(self.items)

    def _simulate(self, items) -> _Run:
        run = _Run(self.T, self.edges, self.start, _labels(self._word_kinds()))
        for pos, gen in items:
            run.apply(pos, gen)
        return run

    def _word_kinds(self) -> str:
        return "".join(CSTEP if isinstance(e, CEdge) else DSTEP for e in self.edges)

    def _arity(self, gen):
        src, tgt, _ = gen_boundary(self.C, self.D, gen, False)
        return len(src), len(tgt)

    def _replace(self, k: int, count: int, new: list, rule: str) -> None:
        before = tuple(self.items[k:k + count])
        items = self.items[:k] + list(new) + self.items[k + count:]
        try:
            self._simulate(items)
        except ShapeError as exc:
            raise ResortStuck(f"{rule} at {k} produced an ill-typed sequence: {exc}") from exc
        self.items = items
        self.trace.append(Move(rule, k, before, tuple(new), tuple(items)))

    # a single adjacent pair ------------------------------------------------

    def _interchange(self, s, t):
        (ps, gs), (pt, gt) = s, t
        in_s, out_s = self._arity(gs)
        in_t, out_t = self._arity(gt)
        if pt + in_t <= ps:
            return [(pt, gt), (ps - in_t + out_t, gs)]
        return [(pt - out_s + in_s, gt), (ps, gs)]

    def _overlap(self, s, t):
        (ps, gs), (pt, gt) = s, t
        _, out_s = self._arity(gs)
        in_t, _ = self._arity(gt)
        a, b, c, d = ps, ps + out_s, pt, pt + in_t
        if in_t == 0:
            return a < c < b
        return c < b and a < d

    def _rewrite(self, s, t):
        """``(rule, replacement)`` for an overlapping pair, ``None`` if in order."""
        C, D = self.C, self.D
        (ps, gs), (pt, gt) = s, t
        ks, kt = slice_kind(gs), slice_kind(gt)
        if RANK[ks] < RANK[kt] or (ks, kt) == ("S", "S"):
            return None
        if (ks, kt) == ("J", "J"):
            return "TensorDist1", [(pt, CBoxDelta(gs.C, D.vcompose(gs.delta, gt.delta)))]
        if (ks, kt) == ("I", "I"):
            return "TensorDist2", [(pt, GammaBoxD(C.vcompose(gs.gamma, gt.gamma), gs.D))]
        if (ks, kt) == ("J", "Lcomp"):
            if ps == pt:
                return "TensorComp1", [(pt, CompCdd(gt.C, D.src2(gs.delta), gt.d2)),
                                       (pt, CBoxDelta(gt.C, D.hcompose(gs.delta, D.id2(gt.d2))))]
            return "TensorComp1", [(pt, CompCdd(gt.C, gt.d, D.src2(gs.delta))),
                                   (pt, CBoxDelta(gt.C, D.hcompose(D.id2(gt.d), gs.delta)))]
        if (ks, kt) == ("I", "Kcomp"):
            if ps == pt:
                return "TensorComp2", [(pt, CompCcD(C.src2(gs.gamma), gt.c2, gt.D)),
                                       (pt, GammaBoxD(C.hcompose(gs.gamma, C.id2(gt.c2)), gt.D))]
            return "TensorComp2", [(pt, CompCcD(gt.c, C.src2(gs.gamma), gt.D)),
                                   (pt, GammaBoxD(C.hcompose(C.id2(gt.c), gs.gamma), gt.D))]
        if kt == "S":
            c, d = gt.c, gt.d
            if ks == "J" and ps == pt + 1:
                return "TensorSwap", [(pt, SwapCd(c, D.src2(gs.delta))), (pt, CBoxDelta(C.src1(c), gs.delta))]
            if ks == "I" and ps == pt:
                return "TensorSwap", [(pt, SwapCd(C.src2(gs.gamma), d)), (pt + 1, GammaBoxD(gs.gamma, D.tgt1(d)))]
            if ks == "Lid" and ps == pt + 1:
                return "Tensor1IdSwap", [(pt, IdC1D(C.src1(c), gs.D))]
            if ks == "Lcomp" and ps == pt + 1:
                return "Tensor1CompSwap", [(pt, SwapCd(c, gs.d)), (pt + 1, SwapCd(c, gs.d2)),
                                           (pt, CompCdd(C.src1(c), gs.d, gs.d2))]
            if ks == "Kid" and ps == pt:
                return "TensorId1Swap", [(pt + 1, Id1CD(gs.C, D.tgt1(d)))]
            if ks == "Kcomp" and ps == pt:
                return "TensorComp1Swap", [(pt + 1, SwapCd(gs.c2, d)), (pt, SwapCd(gs.c, d)),
                                           (pt + 1, CompCcD(gs.c, gs.c2, D.tgt1(d)))]
        if (ks, kt) in (("Kid", "Kcomp"), ("Lid", "Lcomp")):
            return "TensorUnit", []
        if (ks, kt) == ("Kcomp", "Kcomp"):
            if ps == pt:
                return None
            return "TensorAssoc", [(pt, CompCcD(gt.c, gs.c, gs.D)), (pt, CompCcD(C.compose(gt.c, gs.c), gs.c2, gs.D))]
        if (ks, kt) == ("Lcomp", "Lcomp"):
            if ps == pt:
                return None
            return "TensorAssoc", [(pt, CompCdd(gs.C, gt.d, gs.d)), (pt, CompCdd(gs.C, D.compose(gt.d, gs.d), gs.d2))]
        raise ResortStuck(f"no rewrite for {ks} at {ps} followed by {kt} at {pt}: {gs}, {gt}")

    def _identity_slice(self):
        for k, (pos, g) in enumerate(self.items):
            if isinstance(g, CBoxDelta) and self.D.is_identity2(g.delta):
                return k, "TensorId1"
            if isinstance(g, GammaBoxD) and self.C.is_identity2(g.gamma):
                return k, "TensorId2"
        return None

    def phase_one(self) -> None:
        while True:
            hit = self._identity_slice()
            if hit:
                self._replace(hit[0], 1, [], hit[1])
                continue
            for k in range(len(self.items) - 1):
                s, t = self.items[k], self.items[k + 1]
                ks, kt = slice_kind(s[1]), slice_kind(t[1])
                if not self._overlap(s, t):
                    left = t[0] + self._arity(t[1])[0] <= s[0]
                    if RANK[kt] < RANK[ks] or (RANK[kt] == RANK[ks] and ks != "S" and left):
                        self._replace(k, 2, self._interchange(s, t), "interchange")
                        break
                    continue
                res = self._rewrite(s, t)
                if res is not None:
                    self._replace(k, 2, res[1], res[0])
                    break
            else:
                return

    def phase_two(self) -> None:
        """Order the leading crossings by the canonical key using interchanges only."""
        while True:
            run = _Run(self.T, self.edges, self.start, _labels(self._word_kinds()))
            keys = []
            for pos, g in self.items:
                if not isinstance(g, SwapCd):
                    break
                (_, i), (_, j) = run.labels[pos], run.labels[pos + 1]
                keys.append((j - i, i + j))
                run.apply(pos, g)
            for k in range(len(keys) - 1):
                if keys[k + 1] < keys[k]:
                    s, t = self.items[k], self.items[k + 1]
                    if self._overlap(s, t):
                        raise ResortStuck(f"overlapping crossings out of order at {k}")
                    self._replace(k, 2, self._interchange(s, t), "interchange")
                    break
            else:
                return


def resort(T: TensorCategory, slices: Sequence[Slice], start: Optional[TensorOneCell] = None):
    """Re-normalize target-first slices; returns ``(canonical slices, trace)``.

    ``start`` is the source 1-cell and is needed only for an empty list.
    """
    if T.mixed:
        raise ValueError("resort is implemented for the plain tensor only")
    forward = list(reversed(slices))
    if not forward:
        return [], []
    first = slice_source(T, forward[0])
    if start is not None and start != first:
        raise ShapeError("slices do not start at the given 1-cell")
    edges = edges_of_cell(T, first)
    items = [(s.pos, s.gen) for s in forward]
    check = slices_of(T, edges, first.source, items)
    if check != forward:
        raise ShapeError("slices are not composable")
    r = _Resorter(T, edges, first.source, items)
    r.phase_one()
    r.phase_two()
    return list(reversed(slices_of(T, edges, first.source, r.items))), r.trace


def move_slices(T: TensorCategory, start: TensorOneCell, move: Move) -> list[Slice]:
    """Target-first slices of the whole sequence after ``move``."""
    return list(reversed(slices_of(T, edges_of_cell(T, start), start.source, move.items)))


# slice terms over an arbitrary computad -------------------------------------------


@dataclass(frozen=True)
class SliceTerm:
    """A 2-cell of the free 2-category on a computad, as forward slice items.

    Equality of terms is syntactic; deciding equality modulo interchange is
    left to a model such as the simplicial tensor.
    """

    src: tuple
    tgt: tuple
    start: object
    items: tuple


class FreeSliceTerms:
    def __init__(self, G: Computad):
        self.G = G

    def _end(self, path, start):
        node = start
        for e in path:
            s, t = self.G.edges[e]
            if s != node:
                raise ShapeError(f"edge {e} does not start at {node}")
            node = t
        return node

    def identity(self, path, start) -> SliceTerm:
        self._end(path, start)
        return SliceTerm(tuple(path), tuple(path), start, ())

    def generator(self, g, left=(), right=(), start=None) -> SliceTerm:
        src, tgt, gstart = self.G.generators[g]
        if start is None:
            start = gstart if not left else self.G.edges[left[0]][0]
        if self._end(left, start) != gstart:
            raise ShapeError("left whisker does not end where the generator starts")
        self._end(tuple(left) + tuple(src) + tuple(right), start)
        return SliceTerm(tuple(left) + src + tuple(right), tuple(left) + tgt + tuple(right), start,
                         ((len(left), g),))

    def vcompose(self, a: SliceTerm, b: SliceTerm) -> SliceTerm:
        if a.tgt != b.src or a.start != b.start:
            raise ShapeError("terms are not vertically composable")
        return SliceTerm(a.src, b.tgt, a.start, a.items + b.items)

    def whisker(self, left, a: SliceTerm, right=()) -> SliceTerm:
        start = self.G.edges[left[0]][0] if left else a.start
        shift = len(left)
        return SliceTerm(tuple(left) + a.src + tuple(right), tuple(left) + a.tgt + tuple(right), start,
                         tuple((p + shift, g) for p, g in a.items))


def free_slice_terms(G: Computad) -> FreeSliceTerms:
    return FreeSliceTerms(G)


def translate_term(T: TensorCategory, term: SliceTerm) -> TensorTwoCell:
    """Image of a tensor-computad term in the simplicial model."""
    f = cell_of_edges(T, term.src, term.start)
    forward = slices_of(T, term.src, term.start, term.items)
    return compose_slices(T, list(reversed(forward)), f)
