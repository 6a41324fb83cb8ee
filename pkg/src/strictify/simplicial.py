"""The algebraist's simplex category and the category of intervals.

Objects of the simplex category are ordinals <n> = {0, ..., n-1}; arrows are
monotone maps stored as their full value sequence.  An interval [n] is the
ordinal <n+1>, and interval maps are the monotone maps preserving the first
and last element.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence


class ShapeError(ValueError):
    """Raised when maps or cells do not have matching shapes."""


@dataclass(frozen=True)
class MonotoneMap:
    """A monotone map <dom> -> <cod>."""

    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.dom < 0 or self.cod < 0:
            raise ShapeError("ordinal sizes must be non-negative")
        if len(self.values) != self.dom:
            raise ShapeError(f"expected {self.dom} values, got {len(self.values)}")
        if any(not 0 <= v < self.cod for v in self.values):
            raise ShapeError(f"values {self.values} out of range for <{self.cod}>")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ShapeError(f"values {self.values} are not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def then(self, other: MonotoneMap) -> MonotoneMap:
        """Diagrammatic composite: first ``self``, then ``other``."""
        if self.cod != other.dom:
            raise ShapeError(f"cannot compose <{self.dom}>-><{self.cod}> with <{other.dom}>-><{other.cod}>")
        return MonotoneMap(self.dom, other.cod, tuple(other.values[v] for v in self.values))

    def __repr__(self):
        return f"MonotoneMap(<{self.dom}>-><{self.cod}>, {self.values})"


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n)))


def compose(*maps: MonotoneMap) -> MonotoneMap:
    """Applicative composite ``compose(g, f) = g o f``."""
    if not maps:
        raise ValueError("compose needs at least one map")
    out = maps[-1]
    for g in reversed(maps[:-1]):
        out = out.then(g)
    return out


def face(n: int, i: int) -> MonotoneMap:
    """The face map <n> -> <n+1> whose image skips ``i``."""
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range for n={n}")
    return MonotoneMap(n, n + 1, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(n: int, i: int) -> MonotoneMap:
    """The degeneracy <n+1> -> <n> sending both ``i`` and ``i+1`` to ``i``."""
    if not 0 <= i <= n - 1:
        raise IndexError(f"degeneracy index {i} out of range for n={n}")
    return MonotoneMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 1)))


def leq(f: MonotoneMap, g: MonotoneMap) -> bool:
    """True iff there is a (necessarily unique) 2-cell f => g."""
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ShapeError("leq needs parallel maps")
    return all(a <= b for a, b in zip(f.values, g.values))


def ordinal_sum(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    return MonotoneMap(f.dom + g.dom, f.cod + g.cod, f.values + tuple(v + f.cod for v in g.values))


def monotone_maps(n: int, m: int) -> Iterator[MonotoneMap]:
    """All monotone maps <n> -> <m> in lexicographic order."""
    if n == 0:
        yield MonotoneMap(0, m, ())
        return
    for vals in combinations_with_replacement(range(m), n):
        yield MonotoneMap(n, m, vals)


def generator_word(f: MonotoneMap) -> list[tuple[str, int, int]]:
    """Express ``f`` as faces after degeneracies (epi-mono factorisation).

    Returns applicative order: the first entry is applied last.  Entries are
    ``("d", n, i)`` for face(n, i) and ``("s", n, i)`` for degeneracy(n, i).
    """
    word = []
    # degeneracies: collapse repeated values, highest index first
    cur = f.dom
    image = sorted(set(f.values))
    for j in range(len(f.values) - 1, 0, -1):
        if f.values[j] == f.values[j - 1]:
            word.append(("s", cur - 1, j - 1))
            cur -= 1
    # faces: insert missing values, lowest first
    for v in range(f.cod):
        if v not in image:
            word.append(("d", cur, v))
            cur += 1
    word.reverse()
    return word


@dataclass(frozen=True)
class IntervalMap:
    """An endpoint-preserving monotone map [n] -> [m] of intervals."""

    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.dom < 0 or self.cod < 0:
            raise ShapeError("interval ranks must be non-negative")
        if len(self.values) != self.dom + 1:
            raise ShapeError(f"[{self.dom}] needs {self.dom + 1} values, got {len(self.values)}")
        if self.values[0] != 0 or self.values[-1] != self.cod:
            raise ShapeError(f"{self.values} does not preserve the endpoints of [{self.cod}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ShapeError(f"values {self.values} are not monotone")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def then(self, other: IntervalMap) -> IntervalMap:
        """Diagrammatic composite: first ``self``, then ``other``."""
        if self.cod != other.dom:
            raise ShapeError(f"cannot compose [{self.dom}]->[{self.cod}] with [{other.dom}]->[{other.cod}]")
        return IntervalMap(self.dom, other.cod, tuple(other.values[v] for v in self.values))

    def as_monotone(self) -> MonotoneMap:
        return MonotoneMap(self.dom + 1, self.cod + 1, self.values)

    def segment(self, i: int) -> tuple[int, int]:
        """The half-open range ``(xi(i-1), xi(i)]`` for 1-indexed segment ``i``."""
        return self.values[i - 1], self.values[i]

    def __repr__(self):
        return f"IntervalMap([{self.dom}]->[{self.cod}], {self.values})"


def interval_identity(n: int) -> IntervalMap:
    return IntervalMap(n, n, tuple(range(n + 1)))


def collapse(m: int) -> IntervalMap:
    """The unique interval map [1] -> [m]."""
    return IntervalMap(1, m, (0, m))


def interval_maps(n: int, m: int) -> Iterator[IntervalMap]:
    """All interval maps [n] -> [m]."""
    if n == 0:
        if m == 0:
            yield IntervalMap(0, 0, (0,))
        return
    for inner in combinations_with_replacement(range(m + 1), n - 1):
        yield IntervalMap(n, m, (0, *inner, m))


def interval_face(n: int, i: int) -> IntervalMap:
    """face(n, i) viewed as an interval map [n-1] -> [n]; needs 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"inner face index {i} out of range for n={n}")
    f = face(n, i)
    return IntervalMap(n - 1, n, f.values)


def interval_degeneracy(n: int, i: int) -> IntervalMap:
    """degeneracy(n, i) viewed as an interval map [n] -> [n-1]."""
    f = degeneracy(n, i)
    return IntervalMap(n, n - 1, f.values)


def path_sum(a: IntervalMap, b: IntervalMap) -> IntervalMap:
    """Concatenation of interval maps: [n+n'] -> [m+m']."""
    return IntervalMap(a.dom + b.dom, a.cod + b.cod, a.values + tuple(v + a.cod for v in b.values[1:]))


def decompose(xi: IntervalMap) -> tuple[int, ...]:
    """Segment lengths (xi_1, ..., xi_n) with xi_i = xi(i) - xi(i-1)."""
    return tuple(b - a for a, b in zip(xi.values, xi.values[1:]))


def from_segments(lengths: Sequence[int]) -> IntervalMap:
    """Inverse of :func:`decompose`: the sum of the collapses [1] -> [l]."""
    out = interval_identity(0)
    for length in lengths:
        out = path_sum(out, collapse(length))
    return out


def suspend(xi: IntervalMap) -> MonotoneMap:
    """The suspension isomorphism sending xi: [n] -> [m] to <m> -> <n>.

    Position i of <m> (the i-th gap of [m]) goes to the unique j with
    xi(j) <= i < xi(j+1).
    """
    vals = []
    for i in range(xi.cod):
        j = max(j for j in range(xi.dom) if xi.values[j] <= i)
        vals.append(j)
    return MonotoneMap(xi.cod, xi.dom, tuple(vals))


def unsuspend(f: MonotoneMap) -> IntervalMap:
    """Inverse of :func:`suspend`."""
    if f.cod == 0:
        if f.dom:
            raise ShapeError(f"{f} has no preimage under suspension")
        return IntervalMap(0, 0, (0,))
    counts = [0] * f.cod
    for v in f.values:
        counts[v] += 1
    return from_segments(counts)


def left_adjoint(xi: IntervalMap) -> MonotoneMap:
    """L(xi): <m+1> -> <n+1>, i |-> min{j | i <= xi(j)}."""
    return MonotoneMap(xi.cod + 1, xi.dom + 1,
                       tuple(min(j for j in range(xi.dom + 1) if i <= xi.values[j]) for i in range(xi.cod + 1)))


def right_adjoint(xi: IntervalMap) -> MonotoneMap:
    """R(xi): <m+1> -> <n+1>, i |-> max{j | xi(j) <= i}."""
    return MonotoneMap(xi.cod + 1, xi.dom + 1,
                       tuple(max(j for j in range(xi.dom + 1) if xi.values[j] <= i) for i in range(xi.cod + 1)))


def collapse_z(n: int, n2: int) -> MonotoneMap:
    """Monoidal comparison <n+n'+2> -> <n+n'+1> of the interval embedding."""
    return degeneracy(n + n2 + 1, n)
