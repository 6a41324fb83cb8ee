from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from strictify.shuffles import (
    Shuffle,
    ShuffleMorphism,
    all_morphisms,
    all_shuffles_upto,
    compose_morphisms,
    count_shuffles,
    enumerate_shuffles,
    identity_morphism,
    is_valid_mixed_morphism,
    is_valid_morphism,
    mixed_shufmornat_holds,
    parse_shuffle,
    shuffle_to_table,
    table_to_shuffle,
    tensor_morphisms,
    tensor_shuffles,
)
from strictify.simplicial import IntervalMap, ShapeError, interval_identity, interval_maps

words = st.text(alphabet="cd", max_size=8).map(Shuffle)


def test_enumerate_examples():
    assert enumerate_shuffles(0, 0) == [Shuffle("")]
    assert len(enumerate_shuffles(2, 3)) == 10 == count_shuffles(2, 3)
    assert Shuffle("cdccd") in enumerate_shuffles(3, 2)


def test_enumerate_is_sorted_and_distinct():
    for n in range(4):
        for m in range(4):
            got = [sh.word for sh in enumerate_shuffles(n, m)]
            assert got == sorted(set(got))
            assert len(got) == comb(n + m, n)


def test_table_examples():
    assert shuffle_to_table(Shuffle("cdccd")) == ((0, 1, 1), (0, 0, 0))
    assert shuffle_to_table(Shuffle("ccdd")) == ((0, 0), (0, 0))
    assert shuffle_to_table(Shuffle("")) == ()


@given(words)
def test_table_roundtrip(sh):
    assert table_to_shuffle(shuffle_to_table(sh), sh.n) == sh


def test_parse_shuffle():
    assert parse_shuffle("()") == Shuffle("")
    assert parse_shuffle(" CDC ") == Shuffle("cdc")
    with pytest.raises(ValueError):
        Shuffle("cx")


def test_validity_examples():
    one = interval_identity(1)
    assert is_valid_morphism(Shuffle("cd"), Shuffle("dc"), one, one)
    assert not is_valid_morphism(Shuffle("dc"), Shuffle("cd"), one, one)
    for sh in all_shuffles_upto(4):
        f = identity_morphism(sh)
        assert is_valid_morphism(sh, sh, f.xi, f.rho)
        assert is_valid_mixed_morphism(sh, sh, f.xi, f.rho)


def test_mixed_validity_examples():
    one = interval_identity(1)
    assert is_valid_mixed_morphism(Shuffle("cd"), Shuffle("dc"), one, one)
    # src c then d, target has one more D-step; rho_rev collapses both D-steps of the target onto 0
    found = [(s, t, xi, rho) for s in all_shuffles_upto(2) for t in all_shuffles_upto(2) if s.m and t.m
             for xi in interval_maps(t.n, s.n) for rho in interval_maps(s.m, t.m)
             if not is_valid_mixed_morphism(s, t, xi, rho)]
    assert found
    for s, t, xi, rho in found:
        assert not mixed_shufmornat_holds(s, t, xi, rho)


def test_rank_mismatch_raises():
    with pytest.raises(ShapeError):
        is_valid_morphism(Shuffle("cd"), Shuffle("cd"), interval_identity(2), interval_identity(1))


def test_invalid_morphism_refused():
    one = interval_identity(1)
    with pytest.raises(ShapeError):
        ShuffleMorphism(Shuffle("dc"), Shuffle("cd"), one, one)


def test_composition_laws():
    shs = list(all_shuffles_upto(3))
    for mixed in (False, True):
        homs = {(a, b): list(all_morphisms(a, b, mixed)) for a in shs for b in shs}
        for (a, b), fs in homs.items():
            for f in fs:
                assert compose_morphisms(identity_morphism(a, mixed), f) == f
                assert compose_morphisms(f, identity_morphism(b, mixed)) == f
        for (a, b), fs in homs.items():
            for c in shs:
                for f, g in product(fs, homs[(b, c)]):
                    fg = compose_morphisms(f, g)
                    for d in shs:
                        for h in homs[(c, d)][:2]:
                            assert compose_morphisms(fg, h) == compose_morphisms(f, compose_morphisms(g, h))


def test_collapse_composite_revalidated():
    one = interval_identity(1)
    f = ShuffleMorphism(Shuffle("cd"), Shuffle("dc"), one, one)
    g = identity_morphism(Shuffle("dc"))
    h = compose_morphisms(f, g)
    assert is_valid_morphism(h.src, h.tgt, h.xi, h.rho)


def test_tensor():
    assert tensor_shuffles(Shuffle("cdc"), Shuffle("cd")) == Shuffle("cdccd")
    assert tensor_shuffles(Shuffle(""), Shuffle("dc")) == Shuffle("dc")
    shs = list(all_shuffles_upto(2))
    pairs = [f for a in shs for b in shs for f in all_morphisms(a, b)]
    for f in pairs:
        for g in pairs:
            t = tensor_morphisms(f, g)
            assert is_valid_morphism(t.src, t.tgt, t.xi, t.rho)


def test_mixed_rho_shape():
    # mixed rho runs from the source D-rank to the target D-rank
    f = list(all_morphisms(Shuffle("d"), Shuffle(""), mixed=True))
    assert f and all(m.rho == IntervalMap(1, 0, (0, 0)) for m in f)
    assert not list(all_morphisms(Shuffle(""), Shuffle("d"), mixed=True))
