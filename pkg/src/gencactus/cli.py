"""Command line front end.

One binary, subcommand style.  Output is deterministic; rationals print as
exact "p/q" strings and cyclotomic scalars as c(k,N) polynomials.  Exit
codes: 0 success, 1 domain errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .cactus import (
    CactusWord,
    evaluate_to_coxeter,
    format_word,
    is_pure,
    parse_classical_generator,
    parse_word,
    type_a_dictionary,
)
from .coxeter import CoxeterSystem, enumerate_group, connected_subsets, longest_element
from .errors import CactusError, InputError
from .racg import RacgContext
from .rep import (
    Pi_rep,
    check_relations,
    quotient_rep,
    restrict_rep,
    rho_rep,
    signed_permutation_check,
    stable_lines,
)
from .scalar import format_scalar
from .linalg import solve_in_span


def _add_common(parser, suppress: bool) -> None:
    # the same flags are valid before and after the subcommand; the subparser
    # copies must not clobber root values, hence SUPPRESS defaults there
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--system", default=d(None),
                        help="named system (A2, I2(5), A1*A1, ...) or JSON file path")
    parser.add_argument("--t", default=d("2"),
                        help="rational parameter, e.g. 2 or 5/2 (default 2)")
    parser.add_argument("--format", choices=["json", "text"], dest="fmt", default=d("text"))
    parser.add_argument("--max-len", type=int, dest="max_len", default=d(None),
                        help="bound the group enumeration radius; error if not exhausted")


def _build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="gencactus",
        description="cactus groups over Coxeter systems: words, embeddings, representations",
    )
    _add_common(root, suppress=False)
    sub = root.add_subparsers(dest="command", required=True)

    def cmd(name, help_, *positional):
        p = sub.add_parser(name, help=help_)
        _add_common(p, suppress=True)
        for arg_name, arg_kw in positional:
            p.add_argument(arg_name, **arg_kw)
        return p

    cmd("fset", "list the connected finite-type subsets F(S)")
    cmd("longest", "reduced word of the longest element of W_I",
        ("subset", {"help": "subset like {s1,s2}"}))
    cmd("sset", "list the parabolic conjugates S and the big matrix M")
    cmd("eval", "image of a cactus word in W",
        ("word", {"help": "cactus word like 'g{s1} g{s1,s2}'"}))
    cmd("pure", "whether a cactus word lies in the pure cactus group",
        ("word", {}))
    cmd("equal", "whether two cactus words are equal in the cactus group",
        ("word1", {}), ("word2", {}))
    cmd("normalize", "canonical semidirect form of a cactus word",
        ("word", {}))
    cmd("rep", "generator matrices of a representation",
        ("kind", {"choices": ["rho", "pi", "Pi"]}))
    cmd("check-relations", "verify the defining relations on generator images",
        ("kind", {"choices": ["rho", "Pi"]}))
    cmd("stable-lines", "lines preserved by every generator, with signs",
        ("kind", {"choices": ["rho", "Pi"]}))
    q = cmd("quotient", "action induced on the quotient by an invariant subspace",
            ("kind", {"choices": ["rho", "Pi"], "nargs": "?", "default": "Pi"}))
    q.add_argument("--subspace", action="append", required=True, metavar="VEC",
                   help="subspace vector as comma-separated rationals; repeatable")
    q.add_argument("--restrict", action="append", default=[], metavar="VEC",
                   help="first restrict to the span of these vectors; repeatable")
    q.add_argument("--keep", default=None, metavar="I,J,...",
                   help="coordinate axes representing the quotient (default: first transverse axes)")
    cmd("diagram", "DOT graph of the commutation relations in M")
    cmd("dict-a", "translate s_{p,q} to a gamma letter and back (type A)",
        ("item", {"help": "s_{p,q} or g{...}"}))
    return root


# -- helpers -------------------------------------------------------------------


def _system_from_args(args) -> CoxeterSystem:
    spec = getattr(args, "system", None)
    if not spec:
        raise InputError("missing --system")
    if os.path.isfile(spec):
        try:
            with open(spec) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read system file {spec!r}: {exc}") from None
        return CoxeterSystem.from_json(data)
    return CoxeterSystem.from_name(spec)


def _t_from_args(args) -> Fraction:
    raw = getattr(args, "t", "2")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational for --t: {raw!r}") from None


def _context(system, args) -> RacgContext:
    max_len = getattr(args, "max_len", None)
    if max_len is not None:
        # preflight: honor the enumeration bound before building tables
        enumerate_group(system, max_length=max_len)
    return RacgContext(system)


def _parse_vector(text: str, dim: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise InputError(f"vector {text!r} needs {dim} coordinates")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational in vector {text!r}") from None


def _format_entry(x) -> str:
    return format_scalar(x)


def _matrix_rows(mat) -> list:
    return [[_format_entry(x) for x in row] for row in mat]


def _emit(args, payload: dict, text: str) -> int:
    if getattr(args, "fmt", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    return 0


def _word_str(system, element) -> str:
    return " ".join(system.labels[i] for i in element.word) if element.word else "e"


def _rep_map(args, system, kind, t):
    if kind == "rho":
        rep = rho_rep(system, t)
        return {("g" + system.format_subset(I)): m for I, m in rep.items()}, rep
    if kind == "Pi":
        ctx = _context(system, args)
        rep = Pi_rep(ctx, t)
        return {("g" + system.format_subset(I)): m for I, m in rep.items()}, rep
    rep = {s: system.reflection_matrix(s, t) for s in range(system.rank)}
    return {system.labels[s]: m for s, m in rep.items()}, rep


# -- subcommands ---------------------------------------------------------------


def _cmd_fset(args) -> int:
    system = _system_from_args(args)
    fset = connected_subsets(system)
    payload = {"fset": [sorted(system.labels[i] for i in I) for I in fset]}
    text = "\n".join(system.format_subset(I) for I in fset)
    return _emit(args, payload, text)


def _cmd_longest(args) -> int:
    system = _system_from_args(args)
    subset = system.parse_subset(args.subset)
    w = longest_element(system, subset)
    word = _word_str(system, w)
    return _emit(args, {"word": word, "length": len(w.word)}, word)


def _cmd_sset(args) -> int:
    system = _system_from_args(args)
    ctx = _context(system, args)
    payload = ctx.sset_json()
    lines = []
    for i, entry in enumerate(payload["S"]):
        lines.append(f"{i}: {{{', '.join(entry)}}}")
    lines.append("M:")
    for row in payload["M"]:
        lines.append("  " + " ".join(str(x) for x in row))
    return _emit(args, payload, "\n".join(lines))


def _cmd_eval(args) -> int:
    system = _system_from_args(args)
    word = parse_word(system, args.word)
    el = evaluate_to_coxeter(word)
    text = _word_str(system, el)
    return _emit(args, {"word": text, "length": len(el.word)}, text)


def _cmd_pure(args) -> int:
    system = _system_from_args(args)
    result = is_pure(parse_word(system, args.word))
    return _emit(args, {"pure": result}, "true" if result else "false")


def _cmd_equal(args) -> int:
    system = _system_from_args(args)
    ctx = _context(system, args)
    u = parse_word(system, args.word1)
    v = parse_word(system, args.word2)
    result = ctx.cactus_equal(u, v)
    return _emit(args, {"equal": result}, "true" if result else "false")


def _cmd_normalize(args) -> int:
    system = _system_from_args(args)
    ctx = _context(system, args)
    el = ctx.embed(parse_word(system, args.word))
    payload = el.to_json()
    text = "racg: {}\naut: {}".format(
        " ".join(str(i) for i in payload["racg"]) or "e",
        " ".join(str(i) for i in payload["aut"]),
    )
    return _emit(args, payload, text)


def _cmd_rep(args) -> int:
    system = _system_from_args(args)
    t = _t_from_args(args)
    named, _ = _rep_map(args, system, args.kind, t)
    payload = {
        "kind": args.kind,
        "t": str(t),
        "matrices": [
            {"generator": name, "rows": _matrix_rows(m)} for name, m in named.items()
        ],
    }
    blocks = []
    for name, m in named.items():
        blocks.append(name)
        for row in _matrix_rows(m):
            blocks.append("  " + "\t".join(row))
    return _emit(args, payload, "\n".join(blocks))


def _cmd_check_relations(args) -> int:
    system = _system_from_args(args)
    t = _t_from_args(args)
    _, rep = _rep_map(args, system, args.kind, t)
    report = check_relations(system, rep)
    payload = {
        "checked": report.checked,
        "violations": [list(v) for v in report.violations],
    }
    _emit(args, payload, report.summary())
    return 0 if report.ok else 1


def _cmd_stable_lines(args) -> int:
    system = _system_from_args(args)
    t = _t_from_args(args)
    named, _ = _rep_map(args, system, args.kind, t)
    lines = stable_lines(named)
    payload = {
        "lines": [
            {
                "vector": [_format_entry(x) for x in vec],
                "signs": {name: sign for name, sign in signs.items()},
            }
            for vec, signs in lines
        ]
    }
    text_lines = []
    for vec, signs in lines:
        coords = ",".join(_format_entry(x) for x in vec)
        sig = " ".join(f"{name}:{'+1' if s > 0 else '-1'}" for name, s in signs.items())
        text_lines.append(f"{coords}  {sig}")
    return _emit(args, payload, "\n".join(text_lines) if text_lines else "none")


def _default_keep(subspace, dim):
    keep = []
    basis = list(subspace)
    for i in range(dim):
        if len(basis) == dim:
            break
        unit = tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
        if solve_in_span(basis, [unit]) is None:
            basis.append(unit)
            keep.append(i)
    return keep


def _cmd_quotient(args) -> int:
    system = _system_from_args(args)
    t = _t_from_args(args)
    named, _ = _rep_map(args, system, args.kind, t)
    dim = len(next(iter(named.values())))
    if args.restrict:
        basis = [_parse_vector(v, dim) for v in args.restrict]
        named = restrict_rep(named, basis)
        dim = len(basis)
    subspace = [_parse_vector(v, dim) for v in args.subspace]
    if args.keep is not None:
        try:
            keep = [int(p) for p in args.keep.split(",") if p.strip()]
        except ValueError:
            raise InputError(f"bad --keep list: {args.keep!r}") from None
    else:
        keep = _default_keep(subspace, dim)
    quotient = quotient_rep(named, subspace, keep)
    payload = {
        "keep": keep,
        "matrices": [
            {"generator": name, "rows": _matrix_rows(m)} for name, m in quotient.items()
        ],
    }
    blocks = [f"keep: {','.join(str(i) for i in keep)}"]
    for name, m in quotient.items():
        blocks.append(name)
        for row in _matrix_rows(m):
            blocks.append("  " + "\t".join(row))
    return _emit(args, payload, "\n".join(blocks))


def _cmd_diagram(args) -> int:
    system = _system_from_args(args)
    ctx = _context(system, args)
    lines = ["graph sset {"]
    for i, pc in enumerate(ctx.conjugates):
        lines.append(f'  n{i} [label="{pc.label()}"];')
    for i in range(len(ctx.conjugates)):
        for j in range(i + 1, len(ctx.conjugates)):
            if ctx.M[i][j] == 2:
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    text = "\n".join(lines)
    print(text)
    return 0


def _cmd_dict_a(args) -> int:
    system = _system_from_args(args)
    item = args.item.strip()
    if item.startswith("g{"):
        back = type_a_dictionary(system, "to_classical")
        subset = system.parse_subset(item[1:])
        if subset not in back:
            raise InputError(f"not an interval letter: {item!r}")
        p, q = back[subset]
        out = f"s_{{{p},{q}}}"
        return _emit(args, {"classical": [p, q]}, out)
    p, q = parse_classical_generator(item)
    forward = type_a_dictionary(system, "to_cactus")
    if (p, q) not in forward:
        raise InputError(f"s_{{{p},{q}}} out of range for this system")
    letter = "g" + system.format_subset(forward[(p, q)])
    return _emit(args, {"letter": letter}, letter)


_DISPATCH = {
    "fset": _cmd_fset,
    "longest": _cmd_longest,
    "sset": _cmd_sset,
    "eval": _cmd_eval,
    "pure": _cmd_pure,
    "equal": _cmd_equal,
    "normalize": _cmd_normalize,
    "rep": _cmd_rep,
    "check-relations": _cmd_check_relations,
    "stable-lines": _cmd_stable_lines,
    "quotient": _cmd_quotient,
    "diagram": _cmd_diagram,
    "dict-a": _cmd_dict_a,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CactusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
