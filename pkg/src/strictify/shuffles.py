"""Shuffles of intervals and their (mixed) morphisms.

A shuffle of [n] and [m] is stored as a word of ``n`` C-steps and ``m``
D-steps; the complement embeddings ``r: [n+m] -> [n]`` and
``s: [n+m] -> [m]`` and the "appears before" relation table are derived.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .simplicial import (
    IntervalMap,
    ShapeError,
    interval_identity,
    leq,
    left_adjoint,
    path_sum,
    right_adjoint,
)

C, D = "c", "d"
MAX_SHUFFLE_LENGTH = 20


class SizeError(ValueError):
    pass


@dataclass(frozen=True)
class Shuffle:
    word: str

    def __post_init__(self):
        if set(self.word) - {C, D}:
            raise ValueError(f"shuffle word {self.word!r} must only contain 'c' and 'd'")

    @property
    def n(self) -> int:
        return self.word.count(C)

    @property
    def m(self) -> int:
        return self.word.count(D)

    def __len__(self):
        return len(self.word)

    @property
    def r(self) -> IntervalMap:
        vals = [0]
        for step in self.word:
            vals.append(vals[-1] + (step == C))
        return IntervalMap(len(self.word), self.n, vals)

    @property
    def s(self) -> IntervalMap:
        vals = [0]
        for step in self.word:
            vals.append(vals[-1] + (step == D))
        return IntervalMap(len(self.word), self.m, vals)

    def __add__(self, other: Shuffle) -> Shuffle:
        return Shuffle(self.word + other.word)

    def __str__(self):
        return self.word or "()"


EMPTY = Shuffle("")


def parse_shuffle(text: str) -> Shuffle:
    text = text.strip().lower()
    return EMPTY if text in ("", "()") else Shuffle(text)


def enumerate_shuffles(n: int, m: int, bound: int = MAX_SHUFFLE_LENGTH) -> list[Shuffle]:
    """All shuffles with ``n`` C-steps and ``m`` D-steps, lexicographically ('c' < 'd')."""
    if n < 0 or m < 0:
        raise ValueError("shuffle ranks must be non-negative")
    if n + m > bound:
        raise SizeError(f"n+m = {n + m} exceeds the bound {bound}")
    out = []
    for cpos in combinations(range(n + m), n):
        chosen = set(cpos)
        out.append(Shuffle("".join(C if i in chosen else D for i in range(n + m))))
    out.sort(key=lambda sh: sh.word)
    return out


def count_shuffles(n: int, m: int) -> int:
    return comb(n + m, n)


def shuffle_to_table(sh: Shuffle) -> tuple[tuple[int, ...], ...]:
    """Relation table with ``m`` rows and ``n`` columns.

    Entry ``(j, i)`` is 1 iff D-step ``j+1`` comes before C-step ``i+1``.
    """
    cpos = [k for k, x in enumerate(sh.word) if x == C]
    dpos = [k for k, x in enumerate(sh.word) if x == D]
    return tuple(tuple(int(dp < cp) for cp in cpos) for dp in dpos)


def table_to_shuffle(table: Sequence[Sequence[int]], n: int) -> Shuffle:
    """Inverse of :func:`shuffle_to_table`; ``n`` is needed when the table has no rows."""
    rows = [tuple(row) for row in table]
    # number of C-steps before D-step j is the count of zeros in row j
    before = [sum(1 for v in row if v == 0) for row in rows]
    word, placed = [], 0
    for b in before:
        word.append(C * (b - placed))
        word.append(D)
        placed = b
    word.append(C * (n - placed))
    return Shuffle("".join(word))


def _min_preimage(f: IntervalMap, y: int) -> int:
    pre = [k for k, v in enumerate(f.values) if v == y]
    if not pre:
        raise ShapeError(f"{y} has empty preimage under {f}")
    return pre[0]


def _max_preimage(f: IntervalMap, y: int) -> int:
    pre = [k for k, v in enumerate(f.values) if v == y]
    if not pre:
        raise ShapeError(f"{y} has empty preimage under {f}")
    return pre[-1]


def _check_ranks(src: Shuffle, tgt: Shuffle, xi: IntervalMap, rho: IntervalMap, mixed: bool):
    if (xi.dom, xi.cod) != (tgt.n, src.n):
        raise ShapeError(f"xi must be [{tgt.n}] -> [{src.n}], got {xi}")
    want = (src.m, tgt.m) if mixed else (tgt.m, src.m)
    if (rho.dom, rho.cod) != want:
        raise ShapeError(f"rho must be [{want[0]}] -> [{want[1]}], got {rho}")


def is_valid_morphism(src: Shuffle, tgt: Shuffle, xi: IntervalMap, rho: IntervalMap) -> bool:
    """Crossing condition: min r^-1(xi rbar i) <= max s^-1(rho sbar i) at every element i."""
    _check_ranks(src, tgt, xi, rho, mixed=False)
    r, s, rb, sb = src.r, src.s, tgt.r, tgt.s
    return all(
        _min_preimage(r, xi(rb(i))) <= _max_preimage(s, rho(sb(i)))
        for i in range(len(tgt) + 1)
    )


def shufmornat_holds(src: Shuffle, tgt: Shuffle, xi: IntervalMap, rho: IntervalMap) -> bool:
    """Oracle: existence of the 2-cell L(r) o xi o rbar => R(s) o rho o sbar in the simplex category."""
    _check_ranks(src, tgt, xi, rho, mixed=False)
    lhs = tgt.r.as_monotone().then(xi.as_monotone()).then(left_adjoint(src.r))
    rhs = tgt.s.as_monotone().then(rho.as_monotone()).then(right_adjoint(src.s))
    return leq(lhs, rhs)


def is_valid_mixed_morphism(src: Shuffle, tgt: Shuffle, xi: IntervalMap, rho: IntervalMap) -> bool:
    """Mixed crossing condition, with ``rho: [m] -> [mbar]`` reversed.

    Pointwise: min r^-1(xi rbar i) <= max s^-1(max{j | rho(j) <= sbar i}).
    """
    _check_ranks(src, tgt, xi, rho, mixed=True)
    r, s, rb, sb = src.r, src.s, tgt.r, tgt.s
    for i in range(len(tgt) + 1):
        back = max(j for j in range(rho.dom + 1) if rho(j) <= sb(i))
        if _min_preimage(r, xi(rb(i))) > _max_preimage(s, back):
            return False
    return True


def mixed_shufmornat_holds(src: Shuffle, tgt: Shuffle, xi: IntervalMap, rho: IntervalMap) -> bool:
    """Oracle for the mixed condition via adjoints: L(r) o xi o rbar => R(s) o R(rho) o sbar."""
    _check_ranks(src, tgt, xi, rho, mixed=True)
    lhs = tgt.r.as_monotone().then(xi.as_monotone()).then(left_adjoint(src.r))
    rhs = tgt.s.as_monotone().then(right_adjoint(rho)).then(right_adjoint(src.s))
    return leq(lhs, rhs)


@dataclass(frozen=True)
class ShuffleMorphism:
    """A morphism of shuffles ``src -> tgt`` with ``xi: [nbar] -> [n]``, ``rho: [mbar] -> [m]``.

    With ``mixed=True`` the D-component runs the other way, ``rho: [m] -> [mbar]``.
    """

    src: Shuffle
    tgt: Shuffle
    xi: IntervalMap
    rho: IntervalMap
    mixed: bool = False

    def __post_init__(self):
        check = is_valid_mixed_morphism if self.mixed else is_valid_morphism
        if not check(self.src, self.tgt, self.xi, self.rho):
            raise ShapeError(f"{self.src} -> {self.tgt} with xi={self.xi.values}, rho={self.rho.values} "
                             f"violates the crossing condition")


def identity_morphism(sh: Shuffle, mixed: bool = False) -> ShuffleMorphism:
    return ShuffleMorphism(sh, sh, interval_identity(sh.n), interval_identity(sh.m), mixed)


def compose_morphisms(f: ShuffleMorphism, g: ShuffleMorphism) -> ShuffleMorphism:
    """Diagrammatic composite: ``f: a -> b`` then ``g: b -> c``."""
    if f.tgt != g.src or f.mixed != g.mixed:
        raise ShapeError(f"cannot compose morphisms ending at {f.tgt} and starting at {g.src}")
    xi = g.xi.then(f.xi)
    rho = f.rho.then(g.rho) if f.mixed else g.rho.then(f.rho)
    # construction re-checks the crossing condition
    return ShuffleMorphism(f.src, g.tgt, xi, rho, f.mixed)


def tensor_shuffles(a: Shuffle, b: Shuffle) -> Shuffle:
    return a + b


def tensor_morphisms(f: ShuffleMorphism, g: ShuffleMorphism) -> ShuffleMorphism:
    if f.mixed != g.mixed:
        raise ShapeError("cannot tensor plain and mixed morphisms")
    return ShuffleMorphism(f.src + g.src, f.tgt + g.tgt, path_sum(f.xi, g.xi), path_sum(f.rho, g.rho), f.mixed)


def all_morphisms(src: Shuffle, tgt: Shuffle, mixed: bool = False) -> Iterator[ShuffleMorphism]:
    """Every valid morphism between two given shuffles."""
    from .simplicial import interval_maps

    rho_shape = (src.m, tgt.m) if mixed else (tgt.m, src.m)
    check = is_valid_mixed_morphism if mixed else is_valid_morphism
    for xi in interval_maps(tgt.n, src.n):
        for rho in interval_maps(*rho_shape):
            if check(src, tgt, xi, rho):
                yield ShuffleMorphism(src, tgt, xi, rho, mixed)


def all_shuffles_upto(total: int) -> Iterator[Shuffle]:
    for size in range(total + 1):
        for n in range(size + 1):
            yield from enumerate_shuffles(n, size - n)
