"""Command-line front end.  Exit codes: 0 success, 1 failed check, 2 bad input."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .computad import ContractError, check_relations, evaluate_one, gen_name
from .decomposition import canonical_decomposition, evaluate_two, resort
from .f2c import ParseError, ValidationFailed, load_f2c
from .fin2cat import DanglingReferenceError, validate
from .laxnest import (
    ContractViolation,
    dlaw_brute_force,
    dlaw_enum,
    from_assignment,
    to_assignment,
    validate_arrow,
    validate_object,
    validate_twocell,
)
from .shuffles import count_shuffles, enumerate_shuffles
from .simplicial import ShapeError
from .tensor import TensorCategory, TensorOneCell
from .textio import (
    format_cell_block,
    parse_assignment,
    parse_cells,
    parse_laxnest_arrow,
    parse_laxnest_object,
    parse_laxnest_twocell,
)


class Failure(Exception):
    """A check ran and found problems (exit code 1)."""


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cat(args, path):
    return load_f2c(path, validate_result=not args.no_validate)


def _tensor(args) -> TensorCategory:
    return TensorCategory(_cat(args, args.C), _cat(args, args.D), mixed=getattr(args, "mixed", False))


def _pick(cells: dict, names, want_two: bool | None = None) -> list:
    out = []
    for n in names:
        if n not in cells:
            raise ValueError(f"no cell named {n!r}")
        if want_two is not None and isinstance(cells[n], TensorOneCell) == want_two:
            raise ValueError(f"{n!r} is not a {'2-cell' if want_two else '1-cell'}")
        out.append(cells[n])
    return out


def _report(violations) -> None:
    for v in violations:
        print(v, file=sys.stderr)
    if violations:
        raise Failure(f"{len(violations)} violation(s)")


def _slice_line(s) -> str:
    return f"{s.kind} {gen_name(s.gen)} pos={s.pos}"


# commands ------------------------------------------------------------------------------


def cmd_validate(args) -> None:
    E = load_f2c(args.file, validate_result=False)
    problems = validate(E)
    _report(problems)
    print(f"ok {E.name}: {len(E.objects)} objects, {len(E.one_cells)} arrows, {len(E.two_cells)} 2-cells")


def cmd_shuffles(args) -> None:
    if args.count:
        print(count_shuffles(args.n, args.m))
    else:
        for sh in enumerate_shuffles(args.n, args.m):
            print(sh.word or "-")


def cmd_tensor(args) -> None:
    T = _tensor(args)
    cells = parse_cells(_read(args.cells), T)
    if args.op == "compose":
        fs = _pick(cells, args.names, want_two=False)
        out = T.composite(fs) if fs else None
        if out is None:
            raise ValueError("compose needs at least one 1-cell")
    elif args.op == "vcompose":
        out = T.vcomposite(_pick(cells, args.names, want_two=True))
    else:
        if len(args.names) != 3:
            raise ValueError("whisker takes LEFT TWOCELL RIGHT (use - for none)")
        left, mid, right = args.names
        (a,) = _pick(cells, [mid], want_two=True)
        if left != "-":
            (f,) = _pick(cells, [left], want_two=False)
            a = T.hcompose(T.id2(f), a)
        if right != "-":
            (g,) = _pick(cells, [right], want_two=False)
            a = T.hcompose(a, T.id2(g))
        out = a
    print("\n".join(format_cell_block(out, args.name)))


def _two_cells(cells: dict, names) -> list:
    if names:
        return _pick(cells, names, want_two=True)
    twos = [c for c in cells.values() if not isinstance(c, TensorOneCell)]
    if not twos:
        raise ValueError("the cell file declares no 2-cell")
    return twos


def cmd_decompose(args) -> None:
    T = _tensor(args)
    twos = _two_cells(parse_cells(_read(args.cell), T), args.name)
    if args.trace:
        slices = [s for a in reversed(twos) for s in canonical_decomposition(T, a)]
        final, trace = resort(T, slices, twos[0].src)
        for mv in trace:
            print(f"move {mv.rule} at {mv.index}")
    else:
        final = canonical_decomposition(T, T.vcomposite(twos))
    for s in final:
        print(_slice_line(s))


def cmd_eval(args) -> None:
    T = _tensor(args)
    E = _cat(args, args.E)
    V = parse_assignment(_read(args.assign), T.C, T.D, E, args.mixed)
    _report(check_relations(V))
    cells = parse_cells(_read(args.cell), T)
    for name in args.name or list(cells):
        (c,) = _pick(cells, [name])
        img = evaluate_one(V, c) if isinstance(c, TensorOneCell) else evaluate_two(V, c, T)
        print(f"{name} -> {img}")


def cmd_check_assignment(args) -> None:
    C, D, E = _cat(args, args.C), _cat(args, args.D), _cat(args, args.E)
    V = parse_assignment(_read(args.assign), C, D, E, args.mixed)
    problems = check_relations(V)
    for v in problems:
        print(v)
    _report(problems)
    print("ok: all relations hold")


def cmd_check_laxnest(args) -> None:
    C, D, E = _cat(args, args.C), _cat(args, args.D), _cat(args, args.E)
    B = parse_laxnest_object(_read(args.object), C, D, E)
    problems = [("object", v) for v in validate_object(B)]
    B2 = parse_laxnest_object(_read(args.target_object), C, D, E) if args.target_object else B
    if args.target_object:
        problems += [("target object", v) for v in validate_object(B2)]
    if args.arrow:
        b = parse_laxnest_arrow(_read(args.arrow))
        problems += [("arrow", v) for v in validate_arrow(B, B2, b)]
        if args.twocell:
            bb = parse_laxnest_arrow(_read(args.arrow2)) if args.arrow2 else b
            if args.arrow2:
                problems += [("second arrow", v) for v in validate_arrow(B, B2, bb)]
            m = parse_laxnest_twocell(_read(args.twocell))
            problems += [("2-cell", v) for v in validate_twocell(B, B2, b, bb, m)]
    elif args.twocell:
        raise ValueError("--twocell needs --arrow")
    if args.roundtrip:
        V = to_assignment(B, check=False)
        if from_assignment(V, check=False) != B:
            problems.append(("roundtrip", "from_assignment(to_assignment(B)) differs from B"))
        if bool(check_relations(V)) != bool(validate_object(B)):
            problems.append(("roundtrip", "validators disagree on emptiness"))
    for where, v in problems:
        print(f"{where}: {v}", file=sys.stderr)
    if problems:
        raise Failure(f"{len(problems)} violation(s)")
    print("ok")


def _law_line(law) -> str:
    return (f"x={law.x} t={law.t} s={law.s} eta_t={law.eta_t} mu_t={law.mu_t} eta_s={law.eta_s} "
            f"mu_s={law.mu_s} swap={law.swap}")


def cmd_dlaw_enum(args) -> None:
    E = _cat(args, args.E)
    laws = sorted(dlaw_enum(E), key=_law_line)
    print(f"count {len(laws)}")
    for law in laws:
        print(_law_line(law))
    if args.check:
        other = sorted(dlaw_brute_force(E), key=_law_line)
        if other != laws:
            raise Failure(f"brute force found {len(other)} laws, enumeration found {len(laws)}")
        print("brute force agrees")


# parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strictify", description="Tensor products of finite 2-categories.")
    p.add_argument("--no-validate", action="store_true", help="skip validation of loaded .f2c files")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="validate a .f2c file")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("shuffles", help="list (n,m)-shuffles")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--count", action="store_true")
    s.set_defaults(run=cmd_shuffles)

    s = sub.add_parser("tensor", help="compose cells of the tensor product")
    s.add_argument("op", choices=["compose", "vcompose", "whisker"])
    s.add_argument("C")
    s.add_argument("D")
    s.add_argument("--cells", required=True)
    s.add_argument("--mixed", action="store_true")
    s.add_argument("--name", default="out", help="name for the printed result")
    s.add_argument("names", nargs="+", help="cell names in diagrammatic order")
    s.set_defaults(run=cmd_tensor)

    s = sub.add_parser("decompose", help="canonical slices of a 2-cell")
    s.add_argument("C")
    s.add_argument("D")
    s.add_argument("--cell", required=True)
    s.add_argument("--name", action="append", help="2-cell to use (repeat to compose vertically)")
    s.add_argument("--trace", action="store_true", help="resort the concatenated decompositions")
    s.add_argument("--mixed", action="store_true")
    s.set_defaults(run=cmd_decompose)

    s = sub.add_parser("eval", help="evaluate cells under a generator assignment")
    for a in ("C", "D", "E"):
        s.add_argument(a)
    s.add_argument("--assign", required=True)
    s.add_argument("--cell", required=True)
    s.add_argument("--name", action="append")
    s.add_argument("--mixed", action="store_true")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("check-assignment", help="check an assignment against the tensor relations")
    for a in ("C", "D", "E"):
        s.add_argument(a)
    s.add_argument("--assign", required=True)
    s.add_argument("--mixed", action="store_true")
    s.set_defaults(run=cmd_check_assignment)

    s = sub.add_parser("check-laxnest", help="validate lax-of-lax data")
    for a in ("C", "D", "E"):
        s.add_argument(a)
    s.add_argument("--object", required=True)
    s.add_argument("--target-object", help="codomain object of --arrow (default: --object)")
    s.add_argument("--arrow")
    s.add_argument("--arrow2", help="codomain arrow of --twocell (default: --arrow)")
    s.add_argument("--twocell")
    s.add_argument("--roundtrip", action="store_true")
    s.set_defaults(run=cmd_check_laxnest)

    s = sub.add_parser("dlaw-enum", help="distributive laws as assignments for C = D = 1")
    s.add_argument("E")
    s.add_argument("--check", action="store_true", help="compare with the brute-force enumerator")
    s.set_defaults(run=cmd_dlaw_enum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except (Failure, ValidationFailed, ContractError, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, DanglingReferenceError, ShapeError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
