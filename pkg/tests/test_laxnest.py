from dataclasses import replace

import pytest

from strictify.computad import RELATION_LABELS, check_relations
from strictify.fin2cat import build_suspended_poset_monoid, sample_pair, terminal
from strictify.laxnest import (
    AXIOM_RELATION,
    ROLES,
    ContractViolation,
    LaxNestArrow,
    LaxNestTwoCell,
    arrow_to_cylinder,
    constant_object,
    dlaw_brute_force,
    dlaw_enum,
    dlaw_object,
    from_assignment,
    identity_arrow,
    identity_twocell,
    to_assignment,
    twocell_to_cylinder,
    validate_arrow,
    validate_object,
    validate_twocell,
)

E3 = build_suspended_poset_monoid(3)


def law(t, s="3"):
    return next(x for x in dlaw_enum(E3) if (x.t, x.s) == (t, s))


def mutants(B):
    """Every object obtained by changing one table entry to another cell of E."""
    E = B.E
    for role in ROLES:
        pool = E.objects if role == "obj" else E.one_cells if role in ("darr", "carr") else E.two_cells
        for k, v in sorted(getattr(B, role).items(), key=str):
            for w in sorted(pool, key=str):
                if w != v:
                    table = dict(getattr(B, role))
                    table[k] = w
                    yield role, replace(B, **{role: table})


def arrows_between(B, B2):
    """All lax-nest arrows between objects over C = D = 1 into a locally posetal E."""
    E = B.E
    key, d, c = ("*", "*"), ("*", "id1_*"), ("id1_*", "*")
    out = []
    for k in sorted(E.one_cells):
        if (E.src1(k), E.tgt1(k)) != (B.obj[key], B2.obj[key]):
            continue
        sd = E.cells2(E.compose(k, B2.darr[d]), E.compose(B.darr[d], k))
        sc = E.cells2(E.compose(k, B2.carr[c]), E.compose(B.carr[c], k))
        for a in sd:
            for b in sc:
                out.append(LaxNestArrow({key: k}, {d: a}, {c: b}))
    return out


def test_constant_object_is_valid():
    C, D = sample_pair()
    for k in range(4):
        assert validate_object(constant_object(C, D, build_suspended_poset_monoid(k), "*")) == []


def test_distributive_law_object_is_valid():
    for x in dlaw_enum(E3):
        assert validate_object(dlaw_object(E3, x)) == []


def test_bad_multiplication_is_reported():
    B = dlaw_object(E3, law("3"))
    bad = replace(B, mu_d={k: "2<=3" for k in B.mu_d})
    laws = {v.law for v in validate_object(bad)}
    assert "mu_d mistyped" in laws


def test_roundtrip_through_assignment():
    C, D = sample_pair()
    for B in (constant_object(C, D, E3, "*"), dlaw_object(E3, law("3")), dlaw_object(E3, law("0"))):
        V = to_assignment(B)
        assert check_relations(V) == []
        assert from_assignment(V) == B


def test_to_assignment_refuses_invalid():
    B = dlaw_object(E3, law("3"))
    with pytest.raises(ContractViolation):
        to_assignment(replace(B, swap={k: "0<=3" for k in B.swap}))


def test_trivial_object_sends_generators_to_identities():
    one = terminal()
    B = constant_object(one, one, one, "*")
    V = to_assignment(B)
    assert set(V.gens.values()) == {"id2_id1_*"}
    assert set(V.edges.values()) == {"id1_*"}


@pytest.mark.parametrize("k", [1, 2])
def test_mutations_correspond(k):
    C, D = sample_pair()
    B = constant_object(C, D, build_suspended_poset_monoid(k), "*")
    n = 0
    for role, M in mutants(B):
        a = validate_object(M)
        b = check_relations(to_assignment(M, check=False))
        assert bool(a) == bool(b), role
        if role not in ("obj", "darr", "carr"):
            assert {AXIOM_RELATION[v.law] for v in a if v.law in AXIOM_RELATION} == \
                {v.law for v in b if v.law in RELATION_LABELS}, role
        n += 1
    assert n >= 50


def test_identity_arrow_and_twocell_are_valid():
    B = dlaw_object(E3, law("3"))
    b = identity_arrow(B)
    assert validate_arrow(B, B, b) == []
    assert validate_twocell(B, B, b, b, identity_twocell(b, E3)) == []


def test_arrow_cylinder_agrees_with_validator():
    objs = [dlaw_object(E3, law(t)) for t in ("0", "3")]
    outcomes = set()
    for B in objs:
        for B2 in objs:
            for k in sorted(E3.one_cells):
                for a in sorted(E3.two_cells):
                    for c in sorted(E3.two_cells):
                        b = LaxNestArrow({("*", "*"): k}, {("*", "id1_*"): a}, {("id1_*", "*"): c})
                        direct = bool(validate_arrow(B, B2, b))
                        assert direct == bool(check_relations(arrow_to_cylinder(B, B2, b)))
                        outcomes.add(direct)
    assert outcomes == {True, False}


def test_twocell_cylinder_agrees_with_validator():
    B = dlaw_object(E3, law("3"))
    arrows = [b for b in arrows_between(B, B) if not validate_arrow(B, B, b)]
    assert len(arrows) > 1
    seen = 0
    for b in arrows:
        for bb in arrows:
            a = E3.cells2(b.comp[("*", "*")], bb.comp[("*", "*")])
            for cell in a:
                m = LaxNestTwoCell({("*", "*"): cell})
                V = twocell_to_cylinder(B, B, b, bb, m)
                assert bool(validate_twocell(B, B, b, bb, m)) == bool(check_relations(V))
                seen += 1
    assert seen > 1


def test_distributive_laws_match_brute_force():
    for k in range(4):
        E = build_suspended_poset_monoid(k)
        assert sorted(dlaw_enum(E), key=repr) == sorted(dlaw_brute_force(E), key=repr)


def test_distributive_law_counts():
    assert [len(dlaw_enum(build_suspended_poset_monoid(k))) for k in range(4)] == [1, 4, 4, 4]
