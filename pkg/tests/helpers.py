"""Shared oracles and cell universes for the test suite."""
from __future__ import annotations

import random
from collections import defaultdict
from functools import lru_cache
from itertools import product

from strictify.computad import composable_pairs as arrow_pairs
from strictify.fin2cat import build_suspended_poset_monoid, generating_arrows, sample_pair
from strictify.laxnest import LaxNestObject
from strictify.paths import (
    Dagger,
    LaxFunctorData,
    concat_paths,
    empty_path,
    hcompose_icons,
    icons_between,
    identity_icon,
    paths_upto,
    strictify_eval,
    strictify_eval2,
    unit_path,
    validate_lax_functor,
    vcompose_icons,
)
from strictify.tensor import TensorCategory


# lax functors into E_k -----------------------------------------------------------------


def lax_functors_into_ek(C, k: int):
    """Every lax functor from a 2-category with one-element 2-cell homs into E_k
    that sends each object to ``*``.  E_k is a poset, so the comparison cells
    are forced and only the inequalities need checking."""
    E = build_suspended_poset_monoid(k)
    arrows = sorted(C.one_cells)
    out = []
    for values in product(range(k + 1), repeat=len(arrows)):
        val = dict(zip(arrows, values))
        one = {d: str(v) for d, v in val.items()}
        if any(val[C.src2(a)] > val[C.tgt2(a)] for a in C.two_cells):
            continue
        composable = [(d, e) for d in arrows for e in arrows if C.tgt1(d) == C.src1(e)]
        if any(min(val[d] + val[e], k) > val[C.compose(d, e)] for d, e in composable):
            continue
        two = {a: f"{val[C.src2(a)]}<={val[C.tgt2(a)]}" for a in C.two_cells}
        eta = {x: f"0<={val[C.id1(x)]}" for x in C.objects}
        mu = {(d, e): f"{min(val[d] + val[e], k)}<={val[C.compose(d, e)]}" for d, e in composable}
        F = LaxFunctorData(C, E, {x: "*" for x in C.objects}, one, two, eta, mu)
        assert validate_lax_functor(F) == []
        out.append(F)
    return out


def strictification_violations(F: LaxFunctorData, max_len: int = 3) -> list[str]:
    """Check that strictify_eval is a strict 2-functor on the path 2-category,
    exhaustively over paths of length <= max_len, and that it restricts to F."""
    C, E = F.source, F.target
    P = Dagger(C)
    out = []
    paths = list(paths_upto(C, max_len))
    by_ends = defaultdict(list)
    for p in paths:
        by_ends[(p.start, p.end)].append(p)
    icons = {(p, q): list(icons_between(C, p, q)) for grp in by_ends.values() for p in grp for q in grp}
    ev1 = lambda p: strictify_eval(F, p)
    ev2 = lambda a: strictify_eval2(F, a)
    for x in C.objects:
        if ev1(empty_path(x)) != E.id1(F.obj[x]):
            out.append(f"identity at {x}")
    for p in paths:
        if ev2(identity_icon(C, p)) != E.id2(ev1(p)):
            out.append(f"identity icon on {p}")
        for q in paths:
            if p.end == q.start and len(p) + len(q) <= max_len and ev1(concat_paths(p, q)) != E.compose(ev1(p), ev1(q)):
                out.append(f"concatenation {p} {q}")
    for (p, q), ab in icons.items():
        for a in ab:
            if (E.src2(ev2(a)), E.tgt2(ev2(a))) != (ev1(p), ev1(q)):
                out.append(f"icon boundary {a}")
            for r in by_ends[(p.start, p.end)]:
                for b in icons[(q, r)]:
                    if ev2(vcompose_icons(C, a, b)) != E.vcompose(ev2(a), ev2(b)):
                        out.append(f"vertical {a} {b}")
    flat = [a for ab in icons.values() for a in ab]
    for a in flat:
        for b in flat:
            if a.src.end == b.src.start and len(a.src) + len(b.src) <= max_len and \
                    len(a.tgt) + len(b.tgt) <= max_len:
                if ev2(hcompose_icons(a, b)) != E.hcompose(ev2(a), ev2(b)):
                    out.append(f"horizontal {a} {b}")
    for f in C.one_cells:
        if ev1(unit_path(C, f)) != F.one[f]:
            out.append(f"unit path {f}")
    for a, (f, g) in C.two_cells.items():
        icon = P.id2(unit_path(C, f))
        icon = type(icon)(icon.src, unit_path(C, g), icon.xi, (a,))
        if ev2(icon) != F.two[a]:
            out.append(f"unit icon {a}")
    return out


# tensor cell universes ---------------------------------------------------------------


@lru_cache(maxsize=None)
def sample_universe(mixed: bool = False, max_len: int = 3):
    """Tensor category over the sample pair with all 1-cells over generating
    arrows of length <= max_len and all 2-cells between them."""
    C, D = sample_pair()
    T = TensorCategory(C, D, mixed, check=False)
    ones = T.one_cells(max_len, generating_arrows(C), generating_arrows(D))
    by = defaultdict(list)
    for f in ones:
        by[(f.source, f.target)].append(f)
    twos = [a for grp in by.values() for f in grp for g in grp for a in T.two_cells(f, g)]
    return T, ones, twos


def composable_pairs(twos, rng: random.Random, count: int):
    """``count`` random vertically composable pairs (a, b), a first."""
    starting = defaultdict(list)
    for a in twos:
        starting[a.src].append(a)
    pairs = [(a, b) for a in twos for b in starting.get(a.tgt, [])]
    rng.shuffle(pairs)
    return pairs[:count]


def crossing_count(src_word: str, tgt_word: str, xi_values, rho_values) -> int:
    """Inversion oracle: pairs (C-step, D-step) of the source whose order differs
    from the order of the target steps that absorb them (plain case)."""
    def owner(values, i):  # target step (1-based) whose segment contains source step i
        return next(k for k in range(1, len(values)) if values[k - 1] < i <= values[k])

    cpos = [k for k, x in enumerate(src_word) if x == "c"]
    dpos = [k for k, x in enumerate(src_word) if x == "d"]
    tc = [k for k, x in enumerate(tgt_word) if x == "c"]
    td = [k for k, x in enumerate(tgt_word) if x == "d"]
    return sum(1 for i, cp in enumerate(cpos, 1) for j, dp in enumerate(dpos, 1)
               if (cp < dp) != (tc[owner(xi_values, i) - 1] < td[owner(rho_values, j) - 1]))


# lax-nest objects into a locally posetal target ------------------------------------------


def poset_object(C, D, E, darr: dict, carr: dict, x="*") -> LaxNestObject:
    """Object at the single object ``x`` of E with the given arrow images; every
    2-cell entry is the unique cell of its type (None when there is none)."""
    def cell(s, t):
        cs = E.cells2(s, t)
        return cs[0] if cs else None

    i = E.id1(x)
    cd = lambda c, y: carr[(c, y)]
    dd = lambda a, d: darr[(a, d)]
    return LaxNestObject(
        C, D, E,
        obj={(a, y): x for a in C.objects for y in D.objects}, darr=dict(darr), carr=dict(carr),
        d2={(a, t): cell(dd(a, D.src2(t)), dd(a, D.tgt2(t))) for a in C.objects for t in D.two_cells},
        c2={(g, y): cell(cd(C.src2(g), y), cd(C.tgt2(g), y)) for g in C.two_cells for y in D.objects},
        eta_d={(a, y): cell(i, dd(a, D.id1(y))) for a in C.objects for y in D.objects},
        mu_d={(a, d, d2): cell(E.compose(dd(a, d), dd(a, d2)), dd(a, D.compose(d, d2)))
              for a in C.objects for d, d2 in arrow_pairs(D)},
        eta_c={(a, y): cell(i, cd(C.id1(a), y)) for a in C.objects for y in D.objects},
        mu_c={(c, c2, y): cell(E.compose(cd(c, y), cd(c2, y)), cd(C.compose(c, c2), y))
              for c, c2 in arrow_pairs(C) for y in D.objects},
        swap={(c, d): cell(E.compose(cd(c, D.src1(d)), dd(C.tgt1(c), d)), E.compose(dd(C.src1(c), d), cd(c, D.tgt1(d))))
              for c in C.one_cells for d in D.one_cells},
    )


def sample_object_into_e3() -> LaxNestObject:
    """A valid, non-constant object over the sample pair into E_3."""
    C, D = sample_pair()
    darr = {(x, d): "3" for x in C.objects for d in D.one_cells}
    carr = {("1X", "*"): "0", ("1Y", "*"): "0", ("c", "*"): "1", ("e", "*"): "3", ("ec", "*"): "3"}
    return poset_object(C, D, build_suspended_poset_monoid(3), darr, carr)
