import pytest
from hypothesis import given, strategies as st

from strictify.simplicial import (
    IntervalMap,
    MonotoneMap,
    ShapeError,
    collapse_z,
    compose,
    decompose,
    degeneracy,
    face,
    from_segments,
    generator_word,
    identity,
    interval_degeneracy,
    interval_face,
    interval_identity,
    interval_maps,
    left_adjoint,
    leq,
    monotone_maps,
    ordinal_sum,
    path_sum,
    right_adjoint,
    suspend,
    unsuspend,
)


def test_face_and_degeneracy_values():
    assert degeneracy(1, 0).values == (0, 0)
    assert face(2, 1) == MonotoneMap(2, 3, (0, 2))
    assert degeneracy(2, 1).values == (0, 1, 1)
    with pytest.raises(IndexError):
        face(2, 3)


def test_monotone_map_rejects_bad_values():
    with pytest.raises(ShapeError):
        MonotoneMap(2, 2, (1, 0))
    with pytest.raises(ShapeError):
        MonotoneMap(1, 1, (1,))


def test_leq_pointwise():
    f = MonotoneMap(2, 2, (0, 0))
    g = MonotoneMap(2, 2, (0, 1))
    assert leq(f, f)
    assert leq(f, g)
    assert not leq(g, f)


def test_ordinal_sum():
    assert ordinal_sum(identity(2), identity(3)) == identity(5)
    assert ordinal_sum(face(0, 0), degeneracy(1, 0)) == MonotoneMap(2, 2, (1, 1))
    f = degeneracy(2, 0)
    assert ordinal_sum(f, identity(0)) == f


def test_path_sum_and_decompose():
    s01 = IntervalMap(1, 0, (0, 0))
    assert path_sum(s01, interval_identity(1)) == IntervalMap(2, 1, (0, 0, 1))
    xi = IntervalMap(2, 3, (0, 3, 3))
    assert path_sum(interval_identity(0), xi) == xi
    assert decompose(interval_identity(3)) == (1, 1, 1)
    assert decompose(xi) == (3, 0)
    assert decompose(IntervalMap(2, 1, (0, 0, 1))) == (0, 1)


@given(st.lists(st.integers(0, 3), max_size=4), st.lists(st.integers(0, 3), max_size=4))
def test_decompose_of_sum_concatenates(a, b):
    x, y = from_segments(a), from_segments(b)
    assert decompose(path_sum(x, y)) == decompose(x) + decompose(y)
    assert from_segments(decompose(x)) == x


def test_suspend_examples():
    assert suspend(IntervalMap(2, 3, (0, 3, 3))) == MonotoneMap(3, 2, (0, 0, 0))
    for n in range(5):
        assert suspend(interval_identity(n)) == identity(n)
    assert suspend(IntervalMap(1, 0, (0, 0))) == face(0, 0)


def test_suspend_is_a_contravariant_bijection():
    for n in range(4):
        for m in range(4):
            maps = list(interval_maps(n, m))
            images = {suspend(xi) for xi in maps}
            assert len(images) == len(maps)
            for xi in maps:
                assert unsuspend(suspend(xi)) == xi
                for k in range(4):
                    for eta in interval_maps(m, k):
                        assert suspend(xi.then(eta)) == suspend(eta).then(suspend(xi))


def test_adjoint_examples():
    s02 = IntervalMap(2, 1, (0, 0, 1))
    assert left_adjoint(s02) == MonotoneMap(2, 3, (0, 2))
    assert right_adjoint(s02) == MonotoneMap(2, 3, (1, 2))
    for n in range(5):
        assert left_adjoint(interval_identity(n)) == identity(n + 1)
        assert right_adjoint(interval_identity(n)) == identity(n + 1)


def test_adjoint_generator_tables():
    for n in range(1, 7):
        for i in range(n):
            assert left_adjoint(interval_degeneracy(n, i)) == face(n, i + 1)
            assert right_adjoint(interval_degeneracy(n, i)) == face(n, i)
        for i in range(1, n):
            assert left_adjoint(interval_face(n, i)) == degeneracy(n, i)
            assert right_adjoint(interval_face(n, i)) == degeneracy(n, i - 1)


def test_collapse_z():
    assert collapse_z(0, 0) == degeneracy(1, 0)
    assert collapse_z(1, 0) == degeneracy(2, 1)
    assert collapse_z(0, 1) == degeneracy(2, 0)


def test_generator_word_recomposes():
    for n in range(4):
        for m in range(4):
            for f in monotone_maps(n, m):
                maps = [face(k, i) if kind == "d" else degeneracy(k, i) for kind, k, i in generator_word(f)]
                assert (compose(*maps) if maps else identity(n)) == f
