import random
from collections import Counter

import pytest

from helpers import composable_pairs, crossing_count, sample_universe
from strictify.computad import (
    CBoxDelta,
    CEdge,
    DEdge,
    GammaBoxD,
    SwapCd,
    elementary,
    tensor_computad,
)
from strictify.decomposition import (
    canonical_decomposition,
    compose_slices,
    evaluate_slices,
    evaluate_two,
    free_slice_terms,
    move_slices,
    resort,
    translate_term,
)
from strictify.fin2cat import build_suspended_poset_monoid, lo_hi_chain, sample_pair, terminal
from strictify.laxnest import dlaw_assignment, dlaw_enum
from strictify.paths import make_path
from strictify.tensor import TensorCategory

C4, C3 = lo_hi_chain(4), lo_hi_chain(3)


def worked():
    T = TensorCategory(C4, C3)
    f = T.one_cell(make_path(C4, ["lo_1_2", "lo_2_3", "lo_3_4"]), make_path(C3, ["lo_1_2", "lo_2_3"]), "cdccd")
    g = T.one_cell(make_path(C4, ["hi_1_2", "hi_2_2", "hi_2_4"]), make_path(C3, ["hi_1_3"]), "cdcc")
    a = T.two_cell(f, g, (0, 1, 1, 3), (0, 2), ["lo_1_2=>hi_1_2", "id_2=>hi_2_2", "lo_2_4=>hi_2_4"],
                   ["lo_1_3=>hi_1_3"])
    return T, a


def test_identity_has_no_slices():
    T, ones, _ = sample_universe(False, 2)
    for f in ones:
        assert canonical_decomposition(T, T.id2(f)) == []


def test_swap_is_one_slice():
    C, D = sample_pair()
    T = TensorCategory(C, D)
    sl = canonical_decomposition(T, elementary(T, SwapCd("c", "1")))
    assert [s.kind for s in sl] == ["S"]


def test_worked_example_slices():
    T, a = worked()
    sl = canonical_decomposition(T, a)
    assert [s.kind for s in sl] == ["J", "I", "I", "I", "Lcomp", "Kcomp", "Kid", "S", "S"]
    assert Counter(s.kind for s in sl)["S"] == crossing_count(a.src.shuffle.word, a.tgt.shuffle.word,
                                                             a.xi.values, a.rho.values)
    assert compose_slices(T, sl, a.src) == a


@pytest.mark.parametrize("mixed", [False, True])
def test_roundtrip_exhaustive_small(mixed):
    T, _, twos = sample_universe(mixed, 2)
    for a in twos:
        assert compose_slices(T, canonical_decomposition(T, a), a.src) == a


def test_s_count_matches_inversion_oracle():
    T, _, twos = sample_universe(False, 3)
    for a in twos[::7]:
        s = sum(1 for x in canonical_decomposition(T, a) if x.kind == "S")
        assert s == crossing_count(a.src.shuffle.word, a.tgt.shuffle.word, a.xi.values, a.rho.values)


def test_roundtrip_other_pairs():
    for C, D in [(lo_hi_chain(2), lo_hi_chain(2)), (terminal(), terminal())]:
        for mixed in (False, True):
            T = TensorCategory(C, D, mixed, check=False)
            ones = T.one_cells(2)
            for f in ones:
                for g in ones:
                    for a in T.two_cells(f, g):
                        assert compose_slices(T, canonical_decomposition(T, a), f) == a


def test_swap_then_delta_resolves_by_tensor_swap():
    C, D = lo_hi_chain(2), lo_hi_chain(2)
    T = TensorCategory(C, D)
    cd = T.one_cell(make_path(C, ["lo_1_2"]), make_path(D, ["lo_1_2"]), "cd")
    cd2 = T.one_cell(make_path(C, ["lo_1_2"]), make_path(D, ["hi_1_2"]), "cd")
    dc2 = T.one_cell(make_path(C, ["lo_1_2"]), make_path(D, ["hi_1_2"]), "dc")
    a = T.two_cell(cd, cd2, (0, 1), (0, 1), ["lo_1_2=>lo_1_2"], ["lo_1_2=>hi_1_2"])
    b = T.two_cell(cd2, dc2, (0, 1), (0, 1), ["lo_1_2=>lo_1_2"], ["hi_1_2=>hi_1_2"])
    out, trace = resort(T, canonical_decomposition(T, b) + canonical_decomposition(T, a))
    assert [mv.rule for mv in trace] == ["TensorSwap"]
    assert [s.kind for s in out] == ["J", "S"]
    assert out == canonical_decomposition(T, T.vcompose(a, b))


def test_disjoint_slices_interchange():
    C, D = lo_hi_chain(2), lo_hi_chain(2)
    T = TensorCategory(C, D)
    lo = T.one_cell(make_path(C, ["lo_1_2"]), make_path(D, ["lo_1_2"]), "cd")
    mid = T.one_cell(make_path(C, ["lo_1_2"]), make_path(D, ["hi_1_2"]), "cd")
    hi = T.one_cell(make_path(C, ["hi_1_2"]), make_path(D, ["hi_1_2"]), "cd")
    a = T.two_cell(lo, mid, (0, 1), (0, 1), ["lo_1_2=>lo_1_2"], ["lo_1_2=>hi_1_2"])
    b = T.two_cell(mid, hi, (0, 1), (0, 1), ["lo_1_2=>hi_1_2"], ["hi_1_2=>hi_1_2"])
    out, trace = resort(T, canonical_decomposition(T, b) + canonical_decomposition(T, a))
    assert [mv.rule for mv in trace] == ["interchange"]
    assert out == canonical_decomposition(T, T.vcompose(a, b))
    first = trace[0]
    assert compose_slices(T, move_slices(T, lo, first), lo) == T.vcompose(a, b)


def test_resort_exhaustive_small():
    T, _, twos = sample_universe(False, 2)
    rules = Counter()
    for a, b in composable_pairs(twos, random.Random(0), 10 ** 6):
        out, trace = resort(T, canonical_decomposition(T, b) + canonical_decomposition(T, a))
        rules.update(mv.rule for mv in trace)
        assert out == canonical_decomposition(T, T.vcompose(a, b))
    assert {"interchange", "TensorSwap", "TensorDist1", "TensorId1"} <= set(rules)


def test_resort_refuses_mixed():
    T, _, twos = sample_universe(True, 2)
    with pytest.raises(ValueError):
        resort(T, canonical_decomposition(T, twos[-1]))


def test_evaluate_two_examples():
    E3 = build_suspended_poset_monoid(3)
    law = next(x for x in dlaw_enum(E3) if (x.t, x.s) == ("3", "3"))
    V = dlaw_assignment(E3, law)
    one = terminal()
    T = TensorCategory(one, one)
    sw = SwapCd("id1_*", "id1_*")
    assert evaluate_two(V, elementary(T, sw), T) == V.gens[sw]
    f = T.id1(("*", "*"))
    assert evaluate_two(V, T.id2(f), T) == E3.id2(E3.id1("*"))
    assert evaluate_slices(V, [], f) == E3.id2("0")


def test_free_slice_terms_translate():
    C, D = sample_pair()
    T = TensorCategory(C, D)
    G = tensor_computad(C, D)
    F = free_slice_terms(G)
    sw = SwapCd("c", "1")
    s = F.generator(sw)
    assert translate_term(T, s) == elementary(T, sw)
    g = GammaBoxD("g", "*")
    left = F.generator(g, left=(CEdge("c", "*"),))
    term = F.vcompose(F.whisker((), s), F.identity(s.tgt, s.start))
    assert translate_term(T, term) == elementary(T, sw)
    assert left.items == ((1, g),)
    ident = F.identity((DEdge("X", "1"),), ("X", "*"))
    assert translate_term(T, ident) == T.id2(T.one_cell(make_path(C, [], "X"), make_path(D, ["1"]), "d"))
    delta = CBoxDelta("Y", "0<=1/1")
    assert translate_term(T, F.generator(delta)) == elementary(T, delta)
