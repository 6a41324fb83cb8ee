import pytest

from helpers import sample_universe
from strictify.fin2cat import law_violations, lo_hi_chain, sample_pair
from strictify.paths import empty_path, make_path, unit_path
from strictify.shuffles import Shuffle, is_valid_morphism
from strictify.simplicial import ShapeError
from strictify.tensor import (
    Projection,
    Section,
    TensorCategory,
    TensorOneCell,
    adjunction_violations,
    embed_R,
    project_L,
    section_violations,
    unit_eta,
)

C4, C3 = lo_hi_chain(4), lo_hi_chain(3)
T = TensorCategory(C4, C3)


def worked():
    f = T.one_cell(make_path(C4, ["lo_1_2", "lo_2_3", "lo_3_4"]), make_path(C3, ["lo_1_2", "lo_2_3"]), "cdccd")
    g = T.one_cell(make_path(C4, ["hi_1_2", "hi_2_2", "hi_2_4"]), make_path(C3, ["hi_1_3"]), "cdcc")
    a = T.two_cell(f, g, (0, 1, 1, 3), (0, 2), ["lo_1_2=>hi_1_2", "id_2=>hi_2_2", "lo_2_4=>hi_2_4"],
                   ["lo_1_3=>hi_1_3"])
    return f, g, a


def c_step(c, y):
    return TensorOneCell(unit_path(C4, c), empty_path(y), Shuffle("c"))


def d_step(x, d):
    return TensorOneCell(empty_path(x), unit_path(C3, d), Shuffle("d"))


def test_identity_cell():
    e = T.id1(("1", "1"))
    assert e.shuffle == Shuffle("")
    assert T.compose(e, e) == e
    assert project_L(T, e) == T.P.id1(("1", "1"))


def test_five_step_cell_is_a_composite_of_unit_cells():
    f, _, _ = worked()
    steps = [c_step("lo_1_2", "1"), d_step("2", "lo_1_2"), c_step("lo_2_3", "2"), c_step("lo_3_4", "2"),
             d_step("4", "lo_2_3")]
    assert T.composite(steps) == f
    assert (f.n, f.m) == (3, 2)
    assert project_L(T, f) == ("lo_1_4", "lo_1_3")


def test_composite_words_concatenate():
    _, ones, _ = sample_universe(False, 2)
    S = sample_universe(False, 2)[0]
    for f in ones:
        for g in ones:
            if f.target == g.source:
                h = S.compose(f, g)
                assert h.shuffle.word == f.shuffle.word + g.shuffle.word
                assert (h.n, h.m) == (f.n + g.n, f.m + g.m)


def test_worked_two_cell():
    f, g, a = worked()
    assert T.vcompose(a, T.id2(g)) == a
    assert T.vcompose(T.id2(f), a) == a
    assert is_valid_morphism(f.shuffle, g.shuffle, a.xi, a.rho)


def test_invalid_crossing_refused():
    f = T.compose(c_step("lo_1_2", "1"), d_step("2", "lo_1_2"))
    g = T.compose(d_step("1", "lo_1_2"), c_step("lo_1_2", "2"))
    T.two_cell(f, g, (0, 1), (0, 1), ["lo_1_2=>lo_1_2"], ["lo_1_2=>lo_1_2"])
    with pytest.raises(ShapeError):
        T.two_cell(g, f, (0, 1), (0, 1), ["lo_1_2=>lo_1_2"], ["lo_1_2=>lo_1_2"])


@pytest.mark.parametrize("mixed", [False, True])
def test_two_category_laws_small(mixed):
    S, ones, twos = sample_universe(mixed, 2)
    size = lambda f: f.n + f.m
    assert law_violations(S, S.objects, ones, twos, admissible=lambda f, g: size(f) + size(g) <= 2) == []


def test_section_and_projection():
    C, D = sample_pair()
    S = TensorCategory(C, D)
    assert section_violations(S) == []
    P = S.P
    for f in P.one_cells:
        assert project_L(S, embed_R(S, f)) == f
        assert embed_R(S, f).shuffle == Shuffle("dc")
    for a in P.two_cells:
        r = embed_R(S, a)
        assert is_valid_morphism(r.src.shuffle, r.tgt.shuffle, r.xi, r.rho)
        assert project_L(S, r) == a


def test_section_unit_at_identity():
    C, D = sample_pair()
    S = TensorCategory(C, D)
    R = Section(S)
    x = ("X", "*")
    u = R.unit(x)
    assert u.src == S.id1(x)
    assert u.tgt.shuffle == Shuffle("dc")
    assert unit_eta(S, S.id1(x)) == u


def test_unit_eta_on_five_step_cell():
    f, _, _ = worked()
    eta = unit_eta(T, f)
    assert eta.tgt.shuffle == Shuffle("dc")
    assert eta.tgt.cpath.cells == ("lo_1_4",) and eta.tgt.dpath.cells == ("lo_1_3",)
    assert eta.xi.values == (0, 3) and eta.rho.values == (0, 2)


def test_adjunction_small():
    S, ones, twos = sample_universe(False, 2)
    assert adjunction_violations(S, ones, twos) == []
    L = Projection(S)
    for a in twos:
        assert L.two(S.id2(a.src)) == S.P.id2(L.one(a.src))


def test_projection_refuses_mixed():
    C, D = sample_pair()
    with pytest.raises(ShapeError):
        Projection(TensorCategory(C, D, mixed=True))


def test_mixed_two_cells_point_backwards_in_d():
    S, ones, twos = sample_universe(True, 2)
    for a in twos[:200]:
        assert (a.beta.src, a.beta.tgt) == (a.tgt.dpath, a.src.dpath)
        assert a.mixed
