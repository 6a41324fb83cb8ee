"""Text formats for tensor cells, generator assignments and lax-nest data.

Cell files::

    cell f = (X;*) word=cd cpath=[c] dpath=[1]
    cell g = (X;*) word=dc cpath=[c] dpath=[1]
    two s : f => g xi=[0,1] rho=[0,1] alpha=[id2_c] beta=[id2_1]

Assignment files::

    node (X;*) -> *
    edge c@* -> 3
    edge X@1 -> 3
    gen swap(c,1) -> 3<=3

Generator names are ``swap(c,d)``, ``id1(C,D)`` (unit for C, inserting
``1_C D``), ``id2(C,D)`` (unit for D), ``compC(c,c',D)``, ``compD(C,d,d')``,
``cdelta(C,delta)`` and ``gammad(gamma,D)``.

Lax-nest files have one section per role (``OBJ``, ``DARR``, ``CARR``, ``D2``,
``C2``, ``ETA_D``, ``MU_D``, ``ETA_C``, ``MU_C``, ``SWAP`` for objects;
``COMP``, ``SIGD``, ``SIGC`` for arrows; ``COMP`` for 2-cells) with entries
``(key,parts) -> value``.  Names may not contain commas, brackets or spaces.
"""
from __future__ import annotations

import re

from .computad import (
    CBoxDelta,
    CEdge,
    CompCcD,
    CompCdd,
    DEdge,
    GammaBoxD,
    GeneratorAssignment,
    Id1CD,
    IdC1D,
    SwapCd,
    gen_name,
)
from .f2c import ParseError
from .fin2cat import FinTwoCategory
from .laxnest import LaxNestArrow, LaxNestObject, LaxNestTwoCell
from .paths import Path
from .shuffles import Shuffle
from .simplicial import ShapeError
from .tensor import TensorCategory, TensorOneCell, TensorTwoCell


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _list(s: str) -> list[str]:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected a bracketed list, got {s!r}")
    body = s[1:-1].strip()
    return [x.strip() for x in body.split(",")] if body else []


def _fmt_list(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


# cells ---------------------------------------------------------------------------------

_CELL = re.compile(r"^cell\s+(\S+)\s*=\s*\((\S+);(\S+)\)\s+word=(\S*)\s+cpath=(\[[^\]]*\])\s+dpath=(\[[^\]]*\])$")
_TWO = re.compile(r"^two\s+(\S+)\s*:\s*(\S+)\s*=>\s*(\S+)\s+xi=(\[[^\]]*\])\s+rho=(\[[^\]]*\])"
                  r"\s+alpha=(\[[^\]]*\])\s+beta=(\[[^\]]*\])$")


def _path(E: FinTwoCategory, start: str, cells: list) -> Path:
    x = start
    if x not in E.objects:
        raise ShapeError(f"unknown object {x!r} in {E.name or 'category'}")
    for f in cells:
        if f not in E.one_cells:
            raise ShapeError(f"unknown arrow {f!r}")
        if E.src1(f) != x:
            raise ShapeError(f"arrow {f!r} does not start at {x!r}")
        x = E.tgt1(f)
    return Path(start, tuple(cells), x)


def parse_cells(text: str, T: TensorCategory) -> dict:
    """Named 1-cells and 2-cells in declaration order."""
    out: dict = {}
    for lineno, line in _lines(text):
        try:
            m = _CELL.match(line)
            if m:
                name, x, y, word, cp, dp = m.groups()
                word = "" if word == "-" else word
                f = TensorOneCell(_path(T.C, x, _list(cp)), _path(T.D, y, _list(dp)), Shuffle(word))
                out[name] = f
                continue
            m = _TWO.match(line)
            if m:
                name, fn, gn, xi, rho, alpha, beta = m.groups()
                f, g = out[fn], out[gn]
                if not isinstance(f, TensorOneCell) or not isinstance(g, TensorOneCell):
                    raise ShapeError("2-cell boundaries must be 1-cells")
                out[name] = T.two_cell(f, g, tuple(int(v) for v in _list(xi)), tuple(int(v) for v in _list(rho)),
                                       _list(alpha), _list(beta))
                continue
        except KeyError as exc:
            raise ParseError(lineno, f"undeclared cell {exc}") from None
        except (ShapeError, ValueError) as exc:
            raise ParseError(lineno, str(exc)) from None
        raise ParseError(lineno, f"expected 'cell ...' or 'two ...', got {line!r}")
    return out


def format_one_cell(f: TensorOneCell, name: str = "f") -> str:
    return (f"cell {name} = ({f.source[0]};{f.source[1]}) word={f.shuffle.word or '-'} "
            f"cpath={_fmt_list(f.cpath.cells)} dpath={_fmt_list(f.dpath.cells)}")


def format_two_cell(a: TensorTwoCell, name: str = "a", src: str = "f", tgt: str = "g") -> str:
    return (f"two {name} : {src} => {tgt} xi={_fmt_list(a.xi.values)} rho={_fmt_list(a.rho.values)} "
            f"alpha={_fmt_list(a.alpha.comps)} beta={_fmt_list(a.beta.comps)}")


def format_cell_block(a, name: str) -> list[str]:
    """Lines declaring ``a`` (with its boundary 1-cells for a 2-cell)."""
    if isinstance(a, TensorOneCell):
        return [format_one_cell(a, name)]
    return [format_one_cell(a.src, f"{name}_src"), format_one_cell(a.tgt, f"{name}_tgt"),
            format_two_cell(a, name, f"{name}_src", f"{name}_tgt")]


# assignments ---------------------------------------------------------------------------

_NODE = re.compile(r"^node\s+\((\S+);(\S+)\)\s*->\s*(\S+)$")
_EDGE = re.compile(r"^edge\s+([^@\s]+)@(\S+)\s*->\s*(\S+)$")
_GEN = re.compile(r"^gen\s+(\w+)\(([^)]*)\)\s*->\s*(\S+)$")
_GEN_TYPES = {"swap": (SwapCd, 2), "id1": (Id1CD, 2), "id2": (IdC1D, 2), "compC": (CompCcD, 3),
              "compD": (CompCdd, 3), "cdelta": (CBoxDelta, 2), "gammad": (GammaBoxD, 2)}


def parse_gen(s: str):
    m = re.match(r"^(\w+)\(([^)]*)\)$", s.strip())
    if not m or m.group(1) not in _GEN_TYPES:
        raise ValueError(f"unknown generator {s!r}")
    cls, arity = _GEN_TYPES[m.group(1)]
    args = [x.strip() for x in m.group(2).split(",")]
    if len(args) != arity:
        raise ValueError(f"{m.group(1)} takes {arity} arguments")
    return cls(*args)


def parse_edge(C: FinTwoCategory, D: FinTwoCategory, a: str, b: str):
    as_c = a in C.one_cells and b in D.objects
    as_d = a in C.objects and b in D.one_cells
    if as_c and as_d:
        raise ValueError(f"edge {a}@{b} is ambiguous")
    if as_c:
        return CEdge(a, b)
    if as_d:
        return DEdge(a, b)
    raise ValueError(f"edge {a}@{b} names no arrow of C or D")


def parse_assignment(text: str, C: FinTwoCategory, D: FinTwoCategory, E, mixed: bool = False) -> GeneratorAssignment:
    nodes, edges, gens = {}, {}, {}
    for lineno, line in _lines(text):
        try:
            m = _NODE.match(line)
            if m:
                nodes[(m.group(1), m.group(2))] = m.group(3)
                continue
            m = _EDGE.match(line)
            if m:
                edges[parse_edge(C, D, m.group(1), m.group(2))] = m.group(3)
                continue
            m = _GEN.match(line)
            if m:
                gens[parse_gen(f"{m.group(1)}({m.group(2)})")] = m.group(3)
                continue
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        raise ParseError(lineno, f"expected 'node', 'edge' or 'gen', got {line!r}")
    return GeneratorAssignment(C, D, E, nodes, edges, gens, mixed)


def dump_assignment(V: GeneratorAssignment) -> str:
    lines = [f"node ({x};{y}) -> {v}" for (x, y), v in sorted(V.nodes.items(), key=str)]
    lines += [f"edge {e} -> {v}" for e, v in sorted(V.edges.items(), key=lambda kv: str(kv[0]))]
    lines += [f"gen {gen_name(g)} -> {v}" for g, v in sorted(V.gens.items(), key=lambda kv: gen_name(kv[0]))]
    return "\n".join(lines) + "\n"


# lax-nest data -----------------------------------------------------------------------------

OBJECT_SECTIONS = {"OBJ": "obj", "DARR": "darr", "CARR": "carr", "D2": "d2", "C2": "c2", "ETA_D": "eta_d",
                   "MU_D": "mu_d", "ETA_C": "eta_c", "MU_C": "mu_c", "SWAP": "swap"}
ARROW_SECTIONS = {"COMP": "comp", "SIGD": "sigd", "SIGC": "sigc"}
TWOCELL_SECTIONS = {"COMP": "comp"}
_ENTRY = re.compile(r"^\(([^)]*)\)\s*->\s*(\S+)$")


def _parse_sections(text: str, sections: dict) -> dict:
    tables = {role: {} for role in sections.values()}
    current = None
    for lineno, line in _lines(text):
        if line in sections:
            current = sections[line]
            continue
        if current is None:
            raise ParseError(lineno, f"expected one of {', '.join(sections)}, got {line!r}")
        m = _ENTRY.match(line)
        if not m:
            raise ParseError(lineno, f"expected '(key,...) -> value', got {line!r}")
        tables[current][tuple(x.strip() for x in m.group(1).split(","))] = m.group(2)
    return tables


def _dump_sections(tables: dict, sections: dict) -> str:
    lines = []
    for head, role in sections.items():
        lines.append(head)
        lines += [f"({','.join(map(str, k))}) -> {v}" for k, v in sorted(tables[role].items(), key=str)]
    return "\n".join(lines) + "\n"


def parse_laxnest_object(text: str, C, D, E) -> LaxNestObject:
    return LaxNestObject(C, D, E, **_parse_sections(text, OBJECT_SECTIONS))


def dump_laxnest_object(B: LaxNestObject) -> str:
    return _dump_sections({r: getattr(B, r) for r in OBJECT_SECTIONS.values()}, OBJECT_SECTIONS)


def parse_laxnest_arrow(text: str) -> LaxNestArrow:
    return LaxNestArrow(**_parse_sections(text, ARROW_SECTIONS))


def dump_laxnest_arrow(b: LaxNestArrow) -> str:
    return _dump_sections({r: getattr(b, r) for r in ARROW_SECTIONS.values()}, ARROW_SECTIONS)


def parse_laxnest_twocell(text: str) -> LaxNestTwoCell:
    return LaxNestTwoCell(**_parse_sections(text, TWOCELL_SECTIONS))


def dump_laxnest_twocell(m: LaxNestTwoCell) -> str:
    return _dump_sections({"comp": m.comp}, TWOCELL_SECTIONS)
