"""The path 2-category C-dagger, lax functors, and strictification of lax functors.

A 1-cell of C-dagger is a path of composable 1-cells of C (possibly empty);
a 2-cell ``p => q`` is an icon: an interval map ``xi: [len q] -> [len p]``
together with one 2-cell of C per step of ``q``, from the composite of the
matching segment of ``p`` to that step.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Hashable, Iterator, Sequence

from .fin2cat import FinTwoCategory, TwoCategory, Violation
from .simplicial import IntervalMap, ShapeError, interval_identity, interval_maps, path_sum


@dataclass(frozen=True)
class Path:
    start: Hashable
    cells: tuple
    end: Hashable

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    def __len__(self):
        return len(self.cells)

    def __str__(self):
        return "[" + ",".join(map(str, self.cells)) + "]" if self.cells else f"0_{self.start}"


def make_path(C: FinTwoCategory, cells: Sequence, start=None) -> Path:
    """Build and check a path; ``start`` is required for the empty path."""
    cells = tuple(cells)
    if not cells:
        if start is None:
            raise ShapeError("the empty path needs an anchor object")
        return Path(start, (), start)
    for f, g in zip(cells, cells[1:]):
        if C.tgt1(f) != C.src1(g):
            raise ShapeError(f"{f} and {g} are not composable")
    if start is not None and start != C.src1(cells[0]):
        raise ShapeError(f"path does not start at {start}")
    return Path(C.src1(cells[0]), cells, C.tgt1(cells[-1]))


def unit_path(C: FinTwoCategory, f) -> Path:
    """The length-one path on a single 1-cell."""
    return Path(C.src1(f), (f,), C.tgt1(f))


def empty_path(x) -> Path:
    return Path(x, (), x)


def object_at(C: FinTwoCategory, p: Path, k: int):
    """Object at position ``k`` of the path, 0 <= k <= len(p)."""
    if not 0 <= k <= len(p):
        raise IndexError(f"position {k} outside path of length {len(p)}")
    return p.start if k == 0 else C.tgt1(p.cells[k - 1])


def concat_paths(p: Path, q: Path) -> Path:
    if p.end != q.start:
        raise ShapeError(f"path ending at {p.end} cannot be followed by one starting at {q.start}")
    return Path(p.start, p.cells + q.cells, q.end)


def path_composite(C: FinTwoCategory, p: Path):
    """Left-bracketed composite of the cells, or the identity at the start."""
    return C.composite(p.cells, p.start)


def segment_composite(C: FinTwoCategory, p: Path, lo: int, hi: int):
    """Composite of the cells over positions (lo, hi], identity at ``lo`` if empty."""
    return C.composite(p.cells[lo:hi], object_at(C, p, lo))


@dataclass(frozen=True)
class Icon:
    src: Path
    tgt: Path
    xi: IntervalMap
    comps: tuple

    def __post_init__(self):
        object.__setattr__(self, "comps", tuple(self.comps))

    def __str__(self):
        return f"({self.src} => {self.tgt}; xi={list(self.xi.values)}; {list(self.comps)})"


def check_icon(C: FinTwoCategory, a: Icon) -> None:
    """Raise ShapeError unless every component has the required boundary."""
    if (a.xi.dom, a.xi.cod) != (len(a.tgt), len(a.src)):
        raise ShapeError(f"xi must be [{len(a.tgt)}] -> [{len(a.src)}], got {a.xi}")
    if (a.src.start, a.src.end) != (a.tgt.start, a.tgt.end):
        raise ShapeError("icon source and target paths have different endpoints")
    if len(a.comps) != len(a.tgt):
        raise ShapeError(f"expected {len(a.tgt)} components, got {len(a.comps)}")
    for i, alpha in enumerate(a.comps, start=1):
        want = (segment_composite(C, a.src, *a.xi.segment(i)), a.tgt.cells[i - 1])
        if (C.src2(alpha), C.tgt2(alpha)) != want:
            raise ShapeError(f"component {i} = {alpha} should be {want[0]} => {want[1]}")


def identity_icon(C: FinTwoCategory, p: Path) -> Icon:
    return Icon(p, p, interval_identity(len(p)), tuple(C.id2(f) for f in p.cells))


def vcompose_icons(C: FinTwoCategory, a: Icon, b: Icon) -> Icon:
    """Paste ``a: p => q`` then ``b: q => r``."""
    if a.tgt != b.src:
        raise ShapeError(f"icon ending at {a.tgt} cannot be followed by one starting at {b.src}")
    comps = []
    for i, beta in enumerate(b.comps, start=1):
        lo, hi = b.xi.segment(i)
        left = C.hcomposite(a.comps[lo:hi], object_at(C, a.tgt, lo))
        comps.append(C.vcompose(left, beta))
    return Icon(a.src, b.tgt, b.xi.then(a.xi), tuple(comps))


def hcompose_icons(a: Icon, b: Icon) -> Icon:
    """Concatenate icons side by side: ``a`` first along the path."""
    return Icon(concat_paths(a.src, b.src), concat_paths(a.tgt, b.tgt), path_sum(a.xi, b.xi), a.comps + b.comps)


class Dagger(TwoCategory):
    """C-dagger as an operations object over a finite base."""

    def __init__(self, C: FinTwoCategory):
        self.C = C

    def src1(self, p):
        return p.start

    def tgt1(self, p):
        return p.end

    def id1(self, x):
        return empty_path(x)

    def compose(self, p, q):
        return concat_paths(p, q)

    def src2(self, a):
        return a.src

    def tgt2(self, a):
        return a.tgt

    def id2(self, p):
        return identity_icon(self.C, p)

    def vcompose(self, a, b):
        return vcompose_icons(self.C, a, b)

    def whisker_left(self, q, a):
        return hcompose_icons(a, identity_icon(self.C, q))

    def whisker_right(self, a, p):
        return hcompose_icons(identity_icon(self.C, p), a)

    def paths(self, max_len: int) -> list[Path]:
        return list(paths_upto(self.C, max_len))

    def icons(self, p: Path, q: Path) -> list[Icon]:
        return list(icons_between(self.C, p, q))


def paths_upto(C: FinTwoCategory, max_len: int, cells=None) -> Iterator[Path]:
    """All paths of length <= max_len, shortest first, using ``cells`` (default: all 1-cells)."""
    cells = sorted(C.one_cells if cells is None else cells, key=str)
    for x in sorted(C.objects, key=str):
        yield empty_path(x)
    layer = [(f,) for f in cells]
    for length in range(1, max_len + 1):
        for word in layer:
            yield Path(C.src1(word[0]), word, C.tgt1(word[-1]))
        if length < max_len:
            layer = [w + (f,) for w in layer for f in cells if C.tgt1(w[-1]) == C.src1(f)]


def icons_between(C: FinTwoCategory, p: Path, q: Path) -> Iterator[Icon]:
    if (p.start, p.end) != (q.start, q.end):
        return
    for xi in interval_maps(len(q), len(p)):
        options = []
        for i in range(1, len(q) + 1):
            options.append(C.cells2(segment_composite(C, p, *xi.segment(i)), q.cells[i - 1]))
            if not options[-1]:
                break
        else:
            for comps in iproduct(*options):
                yield Icon(p, q, xi, comps)


# lax functors -------------------------------------------------------------


@dataclass
class LaxFunctorData:
    """A lax functor ``source -> target``.

    ``mu[(d, e)]`` is the comparison ``F(e) o F(d) => F(e o d)`` for ``d`` followed
    by ``e``; ``eta[x]`` is ``1_{Fx} => F(1_x)``.  Missing comparisons may be
    recorded as None so that validation can report them.
    """

    source: FinTwoCategory
    target: FinTwoCategory
    obj: dict
    one: dict
    two: dict
    eta: dict
    mu: dict = field(default_factory=dict)


def strict_functor(C: FinTwoCategory, E: FinTwoCategory, obj, one, two) -> LaxFunctorData:
    """A strict functor, with identity comparison cells."""
    eta = {x: E.id2(E.id1(obj[x])) for x in C.objects}
    mu = {}
    for d in C.one_cells:
        for e in C.one_cells:
            if C.tgt1(d) == C.src1(e):
                mu[(d, e)] = E.id2(one[C.compose(d, e)])
    return LaxFunctorData(C, E, dict(obj), dict(one), dict(two), eta, mu)


def identity_functor(E: FinTwoCategory) -> LaxFunctorData:
    return strict_functor(E, E, {x: x for x in E.objects}, {f: f for f in E.one_cells},
                          {a: a for a in E.two_cells})


def monad_functor(E: FinTwoCategory, x, t, eta, mu) -> LaxFunctorData:
    """The lax functor 1 -> E picking out (t, eta, mu) on the object ``x``."""
    from .fin2cat import terminal

    one = terminal()
    f, a = one.id1("*"), one.id2(one.id1("*"))
    return LaxFunctorData(one, E, {"*": x}, {f: t}, {a: E.id2(t)}, {"*": eta}, {(f, f): mu})


def validate_lax_functor(F: LaxFunctorData) -> list[Violation]:
    C, E = F.source, F.target
    out: list[Violation] = []

    def bad(law, *w):
        out.append(Violation(law, w))

    for x in C.objects:
        if x not in F.obj or F.obj[x] not in E.objects:
            bad("object image missing", x)
    if out:
        return out
    for d, (s, t) in C.one_cells.items():
        if d not in F.one or F.one[d] not in E.one_cells:
            bad("1-cell image missing", d)
        elif (E.src1(F.one[d]), E.tgt1(F.one[d])) != (F.obj[s], F.obj[t]):
            bad("1-cell image mistyped", d)
    if out:
        return out
    for a, (f, g) in C.two_cells.items():
        if a not in F.two or F.two[a] not in E.two_cells:
            bad("2-cell image missing", a)
        elif (E.src2(F.two[a]), E.tgt2(F.two[a])) != (F.one.get(f), F.one.get(g)):
            bad("2-cell image mistyped", a)
    for x in C.objects:
        eta = F.eta.get(x)
        if eta is None or eta not in E.two_cells:
            bad("eta missing", x)
        elif (E.src2(eta), E.tgt2(eta)) != (E.id1(F.obj[x]), F.one.get(C.id1(x))):
            bad("eta mistyped", x)
    for d in C.one_cells:
        for e in C.one_cells:
            if C.tgt1(d) != C.src1(e):
                continue
            mu = F.mu.get((d, e))
            if mu is None or mu not in E.two_cells:
                bad("mu missing", d, e)
            elif (E.src2(mu), E.tgt2(mu)) != (E.compose(F.one[d], F.one[e]), F.one[C.compose(d, e)]):
                bad("mu mistyped", d, e)
    if out:
        return out

    one, two, mu, eta = F.one, F.two, F.mu, F.eta
    for d in C.one_cells:
        if two[C.id2(d)] != E.id2(one[d]):
            bad("preserves identity 2-cells", d)
    for a, (f, g) in C.two_cells.items():
        for b in [b for b, (g2, _) in C.two_cells.items() if g2 == g]:
            if two[C.vcompose(a, b)] != E.vcompose(two[a], two[b]):
                bad("preserves vertical composition", a, b)
    for d, (x, y) in C.one_cells.items():
        fd = one[d]
        if E.vcompose(E.whisker_left(fd, eta[x]), mu[(C.id1(x), d)]) != E.id2(fd):
            bad("left unit", d)
        if E.vcompose(E.whisker_right(eta[y], fd), mu[(d, C.id1(y))]) != E.id2(fd):
            bad("right unit", d)
    ones_from = {}
    for d, (s, _) in C.one_cells.items():
        ones_from.setdefault(s, []).append(d)
    for d in C.one_cells:
        for d2 in ones_from.get(C.tgt1(d), []):
            dd2 = C.compose(d, d2)
            for d3 in ones_from.get(C.tgt1(d2), []):
                lhs = E.vcompose(E.whisker_left(one[d3], mu[(d, d2)]), mu[(dd2, d3)])
                rhs = E.vcompose(E.whisker_right(mu[(d2, d3)], one[d]), mu[(d, C.compose(d2, d3))])
                if lhs != rhs:
                    bad("associativity", d, d2, d3)
    for a, (f, g) in C.two_cells.items():
        for b, (f2, g2) in C.two_cells.items():
            if C.tgt1(f) != C.src1(f2):
                continue
            lhs = E.vcompose(E.hcompose(two[a], two[b]), mu[(g, g2)])
            rhs = E.vcompose(mu[(f, f2)], two[C.hcompose(a, b)])
            if lhs != rhs:
                bad("naturality of mu", a, b)
    return out


def strictify_eval(F: LaxFunctorData, p: Path):
    E = F.target
    return E.composite([F.one[c] for c in p.cells], F.obj[p.start])


def _comparison_chain(F: LaxFunctorData, p: Path, lo: int, hi: int):
    """The left-bracketed comparison from the composite of images over (lo, hi]
    to the image of the composite; eta when the segment is empty."""
    C, E = F.source, F.target
    cells = p.cells[lo:hi]
    if not cells:
        return F.eta[object_at(C, p, lo)]
    acc, so_far = E.id2(F.one[cells[0]]), cells[0]
    for c in cells[1:]:
        acc = E.vcompose(E.whisker_left(F.one[c], acc), F.mu[(so_far, c)])
        so_far = C.compose(so_far, c)
    return acc


def strictify_eval2(F: LaxFunctorData, a: Icon):
    E = F.target
    comps = []
    for i, alpha in enumerate(a.comps, start=1):
        chain = _comparison_chain(F, a.src, *a.xi.segment(i))
        comps.append(E.vcompose(chain, F.two[alpha]))
    return E.hcomposite(comps, F.obj[a.src.start])
