import pytest

from helpers import lax_functors_into_ek, strictification_violations
from strictify.fin2cat import build_suspended_poset_monoid, idempotent_with_cell, lo_hi_chain, terminal
from strictify.paths import (
    Icon,
    LaxFunctorData,
    check_icon,
    concat_paths,
    empty_path,
    hcompose_icons,
    icons_between,
    identity_functor,
    identity_icon,
    make_path,
    monad_functor,
    paths_upto,
    strictify_eval,
    strictify_eval2,
    validate_lax_functor,
    vcompose_icons,
)
from strictify.simplicial import IntervalMap, ShapeError

E3 = build_suspended_poset_monoid(3)
CH = lo_hi_chain(3)


def universe(C, max_len):
    paths = list(paths_upto(C, max_len))
    icons = {}
    for p in paths:
        for q in paths:
            icons[(p, q)] = list(icons_between(C, p, q))
    return paths, icons


def test_concat():
    p = make_path(CH, ["lo_1_2", "lo_2_3"])
    q = make_path(CH, ["id_3", "hi_3_3", "id_3"])
    pq = concat_paths(p, q)
    assert len(pq) == len(p) + len(q) == 5
    assert concat_paths(empty_path("1"), p) == p
    # the i-th cell of the concatenation is p_i for i <= 2 and q_{i-2} afterwards
    assert [pq.cells[i - 1] for i in range(1, 6)] == [p.cells[0], p.cells[1], q.cells[0], q.cells[1], q.cells[2]]
    with pytest.raises(ShapeError):
        concat_paths(q, q.__class__("1", (), "1"))


def test_make_path_checks_composability():
    with pytest.raises(ShapeError):
        make_path(CH, ["lo_1_2", "lo_1_2"])
    with pytest.raises(ShapeError):
        make_path(CH, [])


def test_icon_units_and_associativity():
    C = idempotent_with_cell()
    paths, icons = universe(C, 2)
    for (p, q), ab in icons.items():
        for a in ab:
            check_icon(C, a)
            assert vcompose_icons(C, identity_icon(C, p), a) == a
            assert vcompose_icons(C, a, identity_icon(C, q)) == a
            for r in paths:
                for b in icons[(q, r)]:
                    ab_ = vcompose_icons(C, a, b)
                    check_icon(C, ab_)
                    for s in paths:
                        for c in icons[(r, s)]:
                            assert vcompose_icons(C, ab_, c) == vcompose_icons(C, a, vcompose_icons(C, b, c))


def test_collapsing_segment_has_identity_source():
    # xi collapses the segment of the second target cell: its component starts at an identity
    C = CH
    p = make_path(C, ["lo_1_2", "lo_2_3"])
    q = make_path(C, ["lo_1_2", "hi_2_2", "lo_2_3"])
    a = Icon(p, q, IntervalMap(3, 2, (0, 1, 1, 2)), ("lo_1_2=>lo_1_2", "id_2=>hi_2_2", "lo_2_3=>lo_2_3"))
    check_icon(C, a)
    assert C.src2(a.comps[1]) == C.id1("2")


def test_hcompose_icons():
    C = idempotent_with_cell()
    paths, icons = universe(C, 2)
    flat = [a for ab in icons.values() for a in ab]
    for a in flat:
        x = a.src.end
        e = identity_icon(C, empty_path(x))
        assert hcompose_icons(a, e) == a
        assert hcompose_icons(identity_icon(C, empty_path(a.src.start)), a) == a
    small = [a for a in flat if len(a.src) <= 1 and len(a.tgt) <= 1]
    for a in small:
        for b in small:
            if a.src.end != b.src.start:
                continue
            h = hcompose_icons(a, b)
            assert h.comps[:len(a.tgt)] == a.comps and h.comps[len(a.tgt):] == b.comps
            for a2 in icons[(a.tgt, a.tgt)][:2]:
                for b2 in icons[(b.tgt, b.tgt)][:2]:
                    lhs = vcompose_icons(C, hcompose_icons(a, b), hcompose_icons(a2, b2))
                    rhs = hcompose_icons(vcompose_icons(C, a, a2), vcompose_icons(C, b, b2))
                    assert lhs == rhs


def test_validate_lax_functor_examples():
    assert validate_lax_functor(identity_functor(E3)) == []
    assert validate_lax_functor(monad_functor(E3, "*", "3", "0<=3", "3<=3")) == []
    F = monad_functor(E3, "*", "1", "0<=1", None)
    assert [v.law for v in validate_lax_functor(F)] == ["mu missing"]


def test_strictify_eval_examples():
    F = monad_functor(E3, "*", "3", "0<=3", "3<=3")
    one = F.source
    f = one.id1("*")
    assert strictify_eval(F, empty_path("*")) == "0"
    unit = Icon(empty_path("*"), make_path(one, [f]), IntervalMap(1, 0, (0, 0)), (one.id2(f),))
    assert strictify_eval2(F, unit) == "0<=3"
    for t in (0, 3):
        G = monad_functor(E3, "*", str(t), f"0<={t}", f"{t}<={t}")
        assert strictify_eval(G, make_path(one, [f, f])) == str(min(2 * t, 3))
    S = identity_functor(E3)
    p = make_path(E3, ["1", "1"])
    assert strictify_eval(S, p) == E3.compose("1", "1")


@pytest.mark.parametrize("C", [terminal(), idempotent_with_cell()], ids=lambda C: C.name)
def test_strictification_is_strict(C):
    functors = lax_functors_into_ek(C, 3)
    assert functors
    for F in functors[:: max(1, len(functors) // 3)]:
        assert strictification_violations(F, 3 if len(C.objects) == 1 else 2) == []


def test_validate_lax_functor_catches_missing_data():
    F = identity_functor(E3)
    G = LaxFunctorData(F.source, F.target, F.obj, {}, F.two, F.eta, F.mu)
    assert any(v.law == "1-cell image missing" for v in validate_lax_functor(G))
