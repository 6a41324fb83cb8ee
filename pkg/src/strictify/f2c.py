"""Reader and writer for the ``.f2c`` text format of finite 2-categories.

Example::

    f2c 1
    OBJECTS
    *
    ARROWS
    t : * -> *
    COMP
    t . t = t
    TWOCELLS
    mu : t => t

Identity cells may be omitted; they are synthesized as ``id1_X`` and
``id2_f``, together with every composite forced by the unit laws.
"""
from __future__ import annotations

import re

from .fin2cat import DanglingReferenceError, FinTwoCategory, Violation, validate

SECTIONS = ("OBJECTS", "ARROWS", "ID1", "COMP", "TWOCELLS", "ID2", "VCOMP", "LWHISK", "RWHISK")
FORMAT_VERSION = "1"

_NAME = r"[^\s:]+"
_PATTERNS = {
    "OBJECTS": re.compile(rf"^({_NAME})$"),
    "ARROWS": re.compile(rf"^({_NAME})\s*:\s*(\S+)\s*->\s*(\S+)$"),
    "ID1": re.compile(rf"^(\S+)\s*=\s*(\S+)$"),
    "COMP": re.compile(r"^(\S+)\s+\.\s+(\S+)\s*=\s*(\S+)$"),
    "TWOCELLS": re.compile(rf"^({_NAME})\s*:\s*(\S+)\s*=>\s*(\S+)$"),
    "ID2": re.compile(r"^(\S+)\s*=\s*(\S+)$"),
    "VCOMP": re.compile(r"^(\S+)\s+\*\s+(\S+)\s*=\s*(\S+)$"),
    "LWHISK": re.compile(r"^(\S+)\s+\.\s+(\S+)\s*=\s*(\S+)$"),
    "RWHISK": re.compile(r"^(\S+)\s+\.\s+(\S+)\s*=\s*(\S+)$"),
}
_FORMS = {
    "OBJECTS": "NAME",
    "ARROWS": "name : src -> tgt",
    "ID1": "object = arrow",
    "COMP": "g . f = h",
    "TWOCELLS": "name : f => g",
    "ID2": "arrow = twocell",
    "VCOMP": "b * a = c",
    "LWHISK": "f . a = b",
    "RWHISK": "a . f = b",
}


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationFailed(ValueError):
    def __init__(self, violations: list[Violation]):
        super().__init__(f"{len(violations)} violation(s); first: {violations[0]}")
        self.violations = violations


def parse_f2c(text: str, validate_result: bool = True, name: str = "") -> FinTwoCategory:
    objects: list[str] = []
    ones: dict = {}
    ids1: dict = {}
    comp1: dict = {}
    twos: dict = {}
    ids2: dict = {}
    vcomp: dict = {}
    lwhisk: dict = {}
    rwhisk: dict = {}
    section = None
    seen_content = False

    def ref(lineno, kind, x):
        table = {"object": objects, "arrow": ones, "2-cell": twos}[kind]
        if x not in table:
            raise DanglingReferenceError(f"line {lineno}: undeclared {kind} {x!r}")
        return x

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_content:
            seen_content = True
            head = line.split()
            if head[0] == "f2c":
                if len(head) != 2 or head[1] != FORMAT_VERSION:
                    raise ParseError(lineno, f"unsupported header {line!r}")
                continue
        if line in SECTIONS:
            section = line
            continue
        if section is None:
            raise ParseError(lineno, f"expected a section keyword, got {line!r}")
        m = _PATTERNS[section].match(line)
        if not m:
            raise ParseError(lineno, f"expected '{_FORMS[section]}' in {section}, got {line!r}")
        g = m.groups()
        if section == "OBJECTS":
            if g[0] in objects:
                raise ParseError(lineno, f"duplicate object {g[0]!r}")
            objects.append(g[0])
        elif section == "ARROWS":
            if g[0] in ones:
                raise ParseError(lineno, f"duplicate arrow {g[0]!r}")
            ones[g[0]] = (ref(lineno, "object", g[1]), ref(lineno, "object", g[2]))
        elif section == "ID1":
            ids1[ref(lineno, "object", g[0])] = ref(lineno, "arrow", g[1])
        elif section == "COMP":
            gg, f, h = (ref(lineno, "arrow", x) for x in g)
            if ones[f][1] != ones[gg][0]:
                raise DanglingReferenceError(f"line {lineno}: {gg} . {f} is not composable")
            comp1[(gg, f)] = h
        elif section == "TWOCELLS":
            if g[0] in twos:
                raise ParseError(lineno, f"duplicate 2-cell {g[0]!r}")
            twos[g[0]] = (ref(lineno, "arrow", g[1]), ref(lineno, "arrow", g[2]))
        elif section == "ID2":
            ids2[ref(lineno, "arrow", g[0])] = ref(lineno, "2-cell", g[1])
        elif section == "VCOMP":
            b, a, c = (ref(lineno, "2-cell", x) for x in g)
            if twos[a][1] != twos[b][0]:
                raise DanglingReferenceError(f"line {lineno}: {b} * {a} is not composable")
            vcomp[(b, a)] = c
        elif section == "LWHISK":
            f, a, b = ref(lineno, "arrow", g[0]), ref(lineno, "2-cell", g[1]), ref(lineno, "2-cell", g[2])
            if ones[twos[a][0]][1] != ones[f][0]:
                raise DanglingReferenceError(f"line {lineno}: {f} . {a} is not composable")
            lwhisk[(f, a)] = b
        elif section == "RWHISK":
            a, f, b = ref(lineno, "2-cell", g[0]), ref(lineno, "arrow", g[1]), ref(lineno, "2-cell", g[2])
            if ones[f][1] != ones[twos[a][0]][0]:
                raise DanglingReferenceError(f"line {lineno}: {a} . {f} is not composable")
            rwhisk[(a, f)] = b

    _synthesize_identities(objects, ones, ids1, comp1, twos, ids2, vcomp, lwhisk, rwhisk)
    E = FinTwoCategory(objects, ones, ids1, comp1, twos, ids2, vcomp, lwhisk, rwhisk, name=name)
    if validate_result:
        problems = validate(E)
        if problems:
            raise ValidationFailed(problems)
    return E


def _synthesize_identities(objects, ones, ids1, comp1, twos, ids2, vcomp, lwhisk, rwhisk):
    for x in objects:
        if x not in ids1:
            ids1[x] = f"id1_{x}"
            ones.setdefault(ids1[x], (x, x))
    for f in ones:
        if f not in ids2:
            ids2[f] = f"id2_{f}"
            twos.setdefault(ids2[f], (f, f))
    for f, (s, t) in ones.items():
        comp1.setdefault((ids1[t], f), f)
        comp1.setdefault((f, ids1[s]), f)
    for a, (f, g) in twos.items():
        vcomp.setdefault((ids2[g], a), a)
        vcomp.setdefault((a, ids2[f]), a)
        s, t = ones[f]
        lwhisk.setdefault((ids1[t], a), a)
        rwhisk.setdefault((a, ids1[s]), a)
    for f, (s, t) in ones.items():
        for h, (s2, t2) in ones.items():
            if s2 == t and (h, f) in comp1:
                lwhisk.setdefault((h, ids2[f]), ids2[comp1[(h, f)]])
                rwhisk.setdefault((ids2[h], f), ids2[comp1[(h, f)]])


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    return str(x)


def dump_f2c(E: FinTwoCategory) -> str:
    """Serialize with every table entry explicit; ``parse_f2c`` reads it back."""
    key = lambda pair: tuple(map(_fmt, pair))
    lines = [f"f2c {FORMAT_VERSION}", f"# {E.name}" if E.name else "# finite 2-category", "OBJECTS"]
    lines += [_fmt(x) for x in E.objects]
    lines.append("ARROWS")
    lines += [f"{_fmt(f)} : {_fmt(s)} -> {_fmt(t)}" for f, (s, t) in E.one_cells.items()]
    lines.append("ID1")
    lines += [f"{_fmt(x)} = {_fmt(f)}" for x, f in E.identities1.items()]
    lines.append("COMP")
    lines += [f"{_fmt(g)} . {_fmt(f)} = {_fmt(h)}" for (g, f), h in sorted(E.comp1.items(), key=lambda kv: key(kv[0]))]
    lines.append("TWOCELLS")
    lines += [f"{_fmt(a)} : {_fmt(f)} => {_fmt(g)}" for a, (f, g) in E.two_cells.items()]
    lines.append("ID2")
    lines += [f"{_fmt(f)} = {_fmt(a)}" for f, a in E.identities2.items()]
    lines.append("VCOMP")
    lines += [f"{_fmt(b)} * {_fmt(a)} = {_fmt(c)}" for (b, a), c in sorted(E.vcomp.items(), key=lambda kv: key(kv[0]))]
    lines.append("LWHISK")
    lines += [f"{_fmt(f)} . {_fmt(a)} = {_fmt(b)}" for (f, a), b in sorted(E.lwhisk.items(), key=lambda kv: key(kv[0]))]
    lines.append("RWHISK")
    lines += [f"{_fmt(a)} . {_fmt(f)} = {_fmt(b)}" for (a, f), b in sorted(E.rwhisk.items(), key=lambda kv: key(kv[0]))]
    return "\n".join(lines) + "\n"


def load_f2c(path, validate_result: bool = True) -> FinTwoCategory:
    from pathlib import Path

    p = Path(path)
    return parse_f2c(p.read_text(encoding="utf-8"), validate_result, name=p.stem)
