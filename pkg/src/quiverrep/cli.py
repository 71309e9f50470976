"""Command line interface.

Every subcommand prints a human-readable line first and then the same result
as machine-readable ``key=value`` lines.  Exit codes: 0 on success, 1 when a
verification check fails (or a search comes back undecided), 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .fileformat import ParseError, parse_quiver, parse_representation
from .functors import PreconditionError, membership, sigma, sigma_inv
from .linalg import QQ, Field
from .quiver import (
    Quiver,
    apply_word,
    euler_form,
    is_positive_real_root,
    reflection_candidates,
    reflection_word_for_root,
    simple_reflection,
)
from .reps import (
    DEFAULT_SEARCH_BUDGET,
    Representation,
    UndecidedError,
    end_dim,
    ext_cocycle_basis,
    hom_dim,
    is_indecomposable_fp,
)
from .verify import verify_counterexample


def _parse_vector(text: str, q: Quiver) -> tuple[int, ...]:
    t = text.strip()
    if t.startswith("e"):
        try:
            return q.unit_vector(int(t[1:]))
        except ValueError:
            raise ValueError(f"bad vector {text!r}") from None
    try:
        vec = tuple(int(p) for p in t.split(","))
    except ValueError:
        raise ValueError(f"bad vector {text!r}") from None
    q.check_vector(vec)
    return vec


def _fmt_vec(v) -> str:
    return ",".join(str(x) for x in v)


def _load_quiver(path: str) -> Quiver:
    return parse_quiver(Path(path).read_text(encoding="utf-8"))


def _load_rep(path: str, q: Quiver, field: Field | None) -> Representation:
    rep = parse_representation(Path(path).read_text(encoding="utf-8"), q)
    if field is not None and field != rep.field:
        rep = rep.over(field)
    return rep


def _field_arg(text: str) -> Field:
    try:
        return Field.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverrep",
        description="exact computations with quiver representations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", required=True, help="quiver file")
    common.add_argument("--field", type=_field_arg, default=None,
                        help="coefficient field: Q, F2, F3, F5, ... (default: the file's field)")

    p = sub.add_parser("euler", parents=[common], help="Euler form <a,b>")
    p.add_argument("--a", required=True, help="dimension vector, e.g. 1,2,0 or e4")
    p.add_argument("--b", required=True)

    p = sub.add_parser("reflect", parents=[common], help="simple reflection s_i")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--root", required=True)

    p = sub.add_parser("realroot", parents=[common], help="positive real root test")
    p.add_argument("--root", required=True)

    p = sub.add_parser("word", parents=[common], help="reflection word of a root")
    p.add_argument("--root", required=True)

    p = sub.add_parser("candidates", parents=[common], help="reflection candidates below a root")
    p.add_argument("--root", required=True)

    p = sub.add_parser("hom", parents=[common], help="dim Hom(x, y)")
    p.add_argument("--x", required=True, help="representation file")
    p.add_argument("--y", required=True)

    p = sub.add_parser("ext", parents=[common], help="dim Ext1(s, x) via cocycles")
    p.add_argument("--s", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("end", parents=[common], help="dim End(x)")
    p.add_argument("--x", required=True)

    p = sub.add_parser("indec", parents=[common], help="indecomposability over F_p")
    p.add_argument("--x", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)

    p = sub.add_parser("sigma", parents=[common], help="universal extension functor")
    p.add_argument("--s", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("sigma-inv", parents=[common], help="inverse universal extension functor")
    p.add_argument("--s", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("verify-paper", help="run the full counterexample pipeline")
    p.add_argument("--field", type=_field_arg, default=QQ)

    return parser


def _cmd_euler(args) -> int:
    q = _load_quiver(args.quiver)
    a, b = _parse_vector(args.a, q), _parse_vector(args.b, q)
    value = euler_form(q, a, b)
    print(f"<{_fmt_vec(a)}, {_fmt_vec(b)}> = {value}")
    print(f"euler={value}")
    return 0


def _cmd_reflect(args) -> int:
    q = _load_quiver(args.quiver)
    root = _parse_vector(args.root, q)
    out = simple_reflection(q, args.vertex, root)
    print(f"s_{args.vertex}({_fmt_vec(root)}) = {_fmt_vec(out)}")
    print(f"reflect={_fmt_vec(out)}")
    return 0


def _cmd_realroot(args) -> int:
    q = _load_quiver(args.quiver)
    root = _parse_vector(args.root, q)
    flag = is_positive_real_root(q, root)
    print(f"{_fmt_vec(root)} is{'' if flag else ' not'} a positive real root")
    print(f"realroot={'true' if flag else 'false'}")
    return 0


def _cmd_word(args) -> int:
    q = _load_quiver(args.quiver)
    root = _parse_vector(args.root, q)
    word = reflection_word_for_root(q, root)
    print(f"s_{{{_fmt_vec(root)}}} = " + " ".join(f"s_{i}" for i in word))
    print(f"word={_fmt_vec(word)}")
    return 0


def _cmd_candidates(args) -> int:
    q = _load_quiver(args.quiver)
    root = _parse_vector(args.root, q)
    cands = reflection_candidates(q, root)
    for c in cands:
        print(_fmt_vec(c))
    print(f"candidates.count={len(cands)}")
    for i, c in enumerate(cands):
        print(f"candidate.{i}={_fmt_vec(c)}")
    return 0


def _cmd_hom(args) -> int:
    q = _load_quiver(args.quiver)
    x = _load_rep(args.x, q, args.field)
    y = _load_rep(args.y, q, args.field)
    d = hom_dim(x, y)
    print(f"dim Hom = {d}")
    print(f"hom_dim={d}")
    return 0


def _cmd_ext(args) -> int:
    q = _load_quiver(args.quiver)
    s = _load_rep(args.s, q, args.field)
    x = _load_rep(args.x, q, args.field)
    d = ext_cocycle_basis(s, x).dimension
    print(f"dim Ext1 = {d}")
    print(f"ext_dim={d}")
    return 0


def _cmd_end(args) -> int:
    q = _load_quiver(args.quiver)
    x = _load_rep(args.x, q, args.field)
    d = end_dim(x)
    print(f"dim End = {d}")
    print(f"end_dim={d}")
    return 0


def _cmd_indec(args) -> int:
    q = _load_quiver(args.quiver)
    x = _load_rep(args.x, q, args.field)
    try:
        flag = is_indecomposable_fp(x, budget=args.budget)
    except UndecidedError as exc:
        print(f"undecided: {exc}")
        print("indecomposable=undecided")
        return 1
    print(f"{'indecomposable' if flag else 'decomposable'}")
    print(f"indecomposable={'true' if flag else 'false'}")
    return 0


def _cmd_sigma(args) -> int:
    q = _load_quiver(args.quiver)
    s = _load_rep(args.s, q, args.field)
    x = _load_rep(args.x, q, args.field)
    result = sigma(s, x)
    print(f"sigma output dims {_fmt_vec(result.output.dims)}"
          f" ({result.multiplicity} copies of s glued on)")
    print(f"sigma.dims={_fmt_vec(result.output.dims)}")
    print(f"sigma.multiplicity={result.multiplicity}")
    print(f"sigma.end_dim={end_dim(result.output)}")
    return 0


def _cmd_sigma_inv(args) -> int:
    q = _load_quiver(args.quiver)
    s = _load_rep(args.s, q, args.field)
    x = _load_rep(args.x, q, args.field)
    result = sigma_inv(s, x)
    report = membership(s, result.output)
    print(f"sigma-inv output dims {_fmt_vec(result.output.dims)}"
          f" ({result.multiplicity} copies of s peeled off)")
    print(f"witness sequences exact: {result.exact};"
          f" Hom(s, output) = {report.hom_s_x}, Hom(output, s) = {report.hom_x_s}")
    print(f"sigma_inv.dims={_fmt_vec(result.output.dims)}")
    print(f"sigma_inv.multiplicity={result.multiplicity}")
    print(f"sigma_inv.exact={'true' if result.exact else 'false'}")
    print(f"sigma_inv.hom_s_to_output={report.hom_s_x}")
    print(f"sigma_inv.hom_output_to_s={report.hom_x_s}")
    return 0


def _cmd_verify(args) -> int:
    report = verify_counterexample(field=args.field)
    for line in report.human_lines():
        print(line)
    for line in report.machine_lines():
        print(line)
    return 0 if report.passed else 1


_HANDLERS = {
    "euler": _cmd_euler,
    "reflect": _cmd_reflect,
    "realroot": _cmd_realroot,
    "word": _cmd_word,
    "candidates": _cmd_candidates,
    "hom": _cmd_hom,
    "ext": _cmd_ext,
    "end": _cmd_end,
    "indec": _cmd_indec,
    "sigma": _cmd_sigma,
    "sigma-inv": _cmd_sigma_inv,
    "verify-paper": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
