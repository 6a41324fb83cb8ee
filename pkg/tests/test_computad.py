import copy

import pytest

from strictify.computad import (
    CBoxDelta,
    CEdge,
    CompCcD,
    CompCdd,
    ContractError,
    DEdge,
    GammaBoxD,
    GeneratorAssignment,
    Id1CD,
    IdC1D,
    RELATION_LABELS,
    SwapCd,
    all_generators,
    cell_of_edges,
    check_relations,
    edges_of_cell,
    elementary,
    ensure_valid,
    evaluate_one,
    gen_boundary,
    relation_instances,
    tensor_computad,
    tensor_relation_violations,
)
from strictify.fin2cat import build_suspended_poset_monoid, lo_hi_chain, sample_pair, terminal
from strictify.laxnest import dlaw_assignment, dlaw_enum
from strictify.paths import make_path
from strictify.shuffles import Shuffle, is_valid_mixed_morphism, is_valid_morphism
from strictify.simplicial import IntervalMap
from strictify.tensor import TensorCategory

ONE = terminal()
E3 = build_suspended_poset_monoid(3)


def e3_law(t="3", s="3"):
    return next(law for law in dlaw_enum(E3) if (law.t, law.s) == (t, s))


def test_unit_computad():
    G = tensor_computad(ONE, ONE)
    assert len(G.nodes) == 1
    assert set(G.edges) == {CEdge("id1_*", "*"), DEdge("*", "id1_*")}
    kinds = sorted(type(g).__name__ for g in G.generators)
    assert kinds == sorted(["CBoxDelta", "GammaBoxD", "Id1CD", "IdC1D", "CompCcD", "CompCdd", "SwapCd"])


def test_sample_computad_counts():
    C, D = sample_pair()
    G = tensor_computad(C, D)
    assert len(G.edges) == len(C.one_cells) * len(D.objects) + len(C.objects) * len(D.one_cells)
    assert len(G.nodes) == len(C.objects) * len(D.objects)
    for s, t in G.edges.values():
        assert s[0] == t[0] or s[1] == t[1]


def test_elementary_swap_and_units():
    C, D = sample_pair()
    T = TensorCategory(C, D)
    a = elementary(T, SwapCd("c", "1"))
    assert (a.src.shuffle, a.tgt.shuffle) == (Shuffle("cd"), Shuffle("dc"))
    u = elementary(T, Id1CD("X", "*"))
    assert u.src.shuffle == Shuffle("") and u.tgt.shuffle == Shuffle("c")
    assert u.xi == IntervalMap(1, 0, (0, 0))
    assert u.rho.values == (0,)


@pytest.mark.parametrize("mixed", [False, True])
def test_every_elementary_cell_is_valid(mixed):
    C, D = sample_pair()
    T = TensorCategory(C, D, mixed)
    valid = is_valid_mixed_morphism if mixed else is_valid_morphism
    for g in all_generators(C, D):
        a = elementary(T, g)
        T.check_two_cell(a)
        assert valid(a.src.shuffle, a.tgt.shuffle, a.xi, a.rho)
        src, tgt, start = gen_boundary(C, D, g, mixed)
        assert edges_of_cell(T, a.src) == src and edges_of_cell(T, a.tgt) == tgt


def test_mixed_units_reverse_direction():
    C, D = sample_pair()
    plain = gen_boundary(C, D, IdC1D("X", "*"))
    mixed = gen_boundary(C, D, IdC1D("X", "*"), mixed=True)
    assert plain[0] == mixed[1] == ()
    assert plain[1] == mixed[0]
    assert gen_boundary(C, D, CompCdd("X", "1", "1"), True)[0] == (DEdge("X", D.compose("1", "1")),)


def test_edges_roundtrip():
    C, D = lo_hi_chain(4), lo_hi_chain(3)
    T = TensorCategory(C, D)
    f = T.one_cell(make_path(C, ["lo_1_2", "lo_2_3", "lo_3_4"]), make_path(D, ["lo_1_2", "lo_2_3"]), "cdccd")
    edges = edges_of_cell(T, f)
    assert [str(e) for e in edges] == ["lo_1_2@1", "2@lo_1_2", "lo_2_3@2", "lo_3_4@2", "4@lo_2_3"]
    assert cell_of_edges(T, edges, f.source) == f


def test_relation_labels_all_instantiated():
    C, D = sample_pair()
    for mixed in (False, True):
        labels = {inst.label for inst in relation_instances(C, D, mixed)}
        assert labels == set(RELATION_LABELS)


@pytest.mark.parametrize("mixed", [False, True])
def test_relations_hold_in_the_simplicial_model(mixed):
    C, D = sample_pair()
    assert tensor_relation_violations(TensorCategory(C, D, mixed)) == []


def test_distributive_law_assignment_is_valid():
    V = dlaw_assignment(E3, e3_law())
    assert check_relations(V) == []
    ensure_valid(V)


def test_wrong_swap_target_reports_swap_family():
    law = e3_law()
    V = dlaw_assignment(E3, law)
    W = copy.deepcopy(V)
    W._checked = None
    W.gens[SwapCd("id1_*", "id1_*")] = "0<=3"
    labels = {v.law for v in check_relations(W)}
    assert "TensorComp1Swap" in labels
    assert labels <= {"TensorComp1Swap", "Tensor1CompSwap", "TensorId1Swap", "Tensor1IdSwap", "TensorSwap",
                      "generator image mistyped"}
    with pytest.raises(ContractError):
        ensure_valid(W)


def test_wrong_unit_is_reported():
    V = dlaw_assignment(E3, e3_law())
    W = GeneratorAssignment(V.C, V.D, V.target, dict(V.nodes), dict(V.edges), dict(V.gens))
    W.gens[Id1CD("*", "*")] = "3<=3"
    assert check_relations(W)


def test_missing_edge_image():
    V = dlaw_assignment(E3, e3_law())
    W = GeneratorAssignment(V.C, V.D, V.target, dict(V.nodes), {}, dict(V.gens))
    assert [v.law for v in check_relations(W)] == ["edge image missing"] * 2


def test_evaluate_one():
    V = dlaw_assignment(E3, e3_law())
    T = TensorCategory(ONE, ONE)
    f = T.id1(("*", "*"))
    assert evaluate_one(V, f) == E3.id1("*")
    i = "id1_*"
    p = T.one_cell(make_path(ONE, [i, i, i]), make_path(ONE, [i, i]), "cdccd")
    assert evaluate_one(V, p) == "3"
    g = T.one_cell(make_path(ONE, [i]), make_path(ONE, [i]), "dc")
    assert evaluate_one(V, T.compose(p, g)) == E3.compose(evaluate_one(V, p), evaluate_one(V, g))


def test_unit_edges_in_e3_with_t_zero():
    V = dlaw_assignment(E3, e3_law("0", "3"))
    T = TensorCategory(ONE, ONE)
    i = "id1_*"
    p = T.one_cell(make_path(ONE, [i, i]), make_path(ONE, [], "*"), "cc")
    assert evaluate_one(V, p) == "0"
    assert check_relations(V) == []
