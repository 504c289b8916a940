"""Command-line front end for construction, analysis, and verification runs.

Exit codes: 0 on success / full pass, 1 on a negative verdict (verification
FAIL, non-isomorphic, no reconstruction), 2 on usage, recipe, or parse
errors.  Every run is deterministic given the same inputs and flags.
"""

from __future__ import annotations

import argparse
import sys

from . import canon, fileio, powergraph, verify
from .constructions import (
    build_corpus,
    chein_double,
    cyclic,
    dihedral,
    direct_product,
    generalized_octonion,
    generalized_quaternion,
)
from .errors import (
    BadRecipe,
    BaseNotGroup,
    LoopError,
    NoIdentity,
    NotCentral,
    NotLatinSquare,
    OrderTooLarge,
    ParamTooSmall,
    ParseError,
    PreconditionFailed,
)
from .octonion import DEFAULT_EPS, generate_octonion_subloop

USAGE_ERRORS = (
    BadRecipe,
    ParseError,
    ParamTooSmall,
    OrderTooLarge,
    NotLatinSquare,
    NoIdentity,
    BaseNotGroup,
    NotCentral,
    ValueError,
    OSError,
)


def parse_recipe(text: str, strict_paper: bool = False):
    """Build a loop from a recipe string; returns (loop, label)."""
    text = text.strip()
    if text.startswith("chein:"):
        body = text[len("chein:") :]
        inner, sep, c_part = body.rpartition(":c=")
        if not sep:
            raise BadRecipe(f"chein recipe needs a trailing :c=<index>: {text!r}")
        try:
            c = int(c_part)
        except ValueError:
            raise BadRecipe(f"central element index must be an integer: {c_part!r}") from None
        base, base_label = parse_recipe(inner, strict_paper)
        loop = chein_double(base, c, strict_paper=strict_paper)
        return loop, f"M({base_label},2;c={base.name_of(c)})"
    if text.startswith("product:"):
        body = text[len("product:") :]
        for i, ch in enumerate(body):
            if ch != ",":
                continue
            try:
                l1, lab1 = parse_recipe(body[:i], strict_paper)
                l2, lab2 = parse_recipe(body[i + 1 :], strict_paper)
            except BadRecipe:
                continue
            return direct_product(l1, l2), f"{lab1}x{lab2}"
        raise BadRecipe(f"product recipe needs two comma-separated recipes: {text!r}")
    head, sep, arg = text.partition(":")
    if not sep:
        raise BadRecipe(f"recipe needs a parameter, like cyclic:6: {text!r}")
    try:
        m = int(arg)
    except ValueError:
        raise BadRecipe(f"recipe parameter must be an integer: {arg!r}") from None
    if head == "cyclic":
        return cyclic(m), f"Z_{m}"
    if head == "dihedral":
        return dihedral(m), f"D_{m}"
    if head == "quaternion":
        return generalized_quaternion(m), f"Q_{4 * m}"
    if head == "octonion":
        return generalized_octonion(m), f"O_{8 * m}"
    raise BadRecipe(f"unknown construction {head!r}")


def _cmd_gen(args) -> int:
    loop, label = parse_recipe(args.recipe, args.strict_paper)
    fileio.write_table(args.out, loop)
    print(f"label={label}")
    print(f"order={loop.n}")
    print(f"out={args.out}")
    return 0


def _bool(v) -> str:
    return "true" if v else "false"


def _cmd_check(args) -> int:
    loop = fileio.read_table(args.table)
    print(f"order={loop.n}")
    print("latin=true")
    print("identity=0")
    print(f"moufang={_bool(loop.is_moufang())}")
    print(f"associative={_bool(loop.is_associative())}")
    print(f"commutative={_bool(loop.is_commutative())}")
    pa = loop.is_power_associative()
    print(f"power-associative={_bool(pa)}")
    print(f"diassociative={_bool(loop.is_diassociative())}")
    print(f"inverse-property={_bool(loop.has_inverse_property())}")
    print(f"center-size={len(loop.center())}")
    print(f"nucleus-size={len(loop.nucleus())}")
    if pa:
        counts = sorted(loop.element_order_counts().items())
        print("element-orders=" + ",".join(f"{k}:{v}" for k, v in counts))
        print(f"exponent={loop.exponent()}")
        for p in _prime_divisors(loop.n):
            print(f"unique-{p}-subloop={_bool(loop.has_unique_subloop_of_order_p(p))}")
    else:
        print("element-orders=n/a")
        print("exponent=n/a")
    return 0


def _prime_divisors(n: int):
    out = []
    d, m = 2, n
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _cmd_powergraph(args) -> int:
    loop = fileio.read_table(args.table)
    if args.directed:
        g = powergraph.directed_power_graph(loop)
    else:
        g = powergraph.undirected_power_graph(loop)
    if args.format == "dot":
        fileio.write_dot(args.out, g, labels=loop.names)
    else:
        fileio.write_graph(args.out, g)
    kind = "directed" if args.directed else "undirected"
    print(f"vertices={g.n}")
    print(f"edges={len(g.edges())}")
    print(f"kind={kind}")
    if not args.directed:
        print(f"universal={len(powergraph.universal_vertices(g))}")
    print(f"out={args.out}")
    return 0


def _cmd_iso(args) -> int:
    if args.mode == "loop":
        l1 = fileio.read_table(args.a)
        l2 = fileio.read_table(args.b)
        same = canon.loop_isomorphic(l1, l2) is not None
    else:
        g1 = fileio.read_graph(args.a)
        g2 = fileio.read_graph(args.b)
        want_directed = args.mode == "digraph"
        if g1.directed != want_directed or g2.directed != want_directed:
            raise ParseError(f"mode {args.mode} expects directed={int(want_directed)} inputs")
        same = canon.are_isomorphic(g1, g2)
    print("ISOMORPHIC" if same else "NOT ISOMORPHIC")
    return 0 if same else 1


def _cmd_identify(args) -> int:
    g = fileio.read_graph(args.graph)
    if g.directed:
        raise ParseError("identify expects an undirected graph")
    try:
        tag = verify.identify_from_graph(g)
    except PreconditionFailed as exc:
        print(f"unidentifiable: {exc}")
        return 1
    print(f"class={tag}")
    return 0 if tag.family != verify.OTHER else 1


def _cmd_reconstruct(args) -> int:
    g = fileio.read_graph(args.graph)
    if g.directed:
        raise ParseError("reconstruct expects an undirected graph")
    corpus = build_corpus(args.max_order, strict_paper=args.strict_paper)
    d = verify.reconstruct_directed(g, corpus)
    print(f"vertices={d.n}")
    print(f"arcs={len(d.edges())}")
    if args.out:
        fileio.write_graph(args.out, d)
        print(f"out={args.out}")
    return 0


def _merge_reports(reports, suite):
    merged = verify.VerificationReport(suite)
    for r in reports:
        merged.cases.extend(r.cases)
        merged.skipped += r.skipped
    return merged


def _cmd_verify(args) -> int:
    corpus = build_corpus(args.max_order, strict_paper=args.strict_paper)
    if args.suite == "main":
        report = verify.verify_main_theorem(corpus)
    elif args.suite == "classify":
        report = verify.verify_unique_subloop_classification(corpus)
    elif args.suite == "order-lemma":
        parts = []
        for entry in corpus:
            loop = entry.loop
            if loop.is_associative() or not loop.is_moufang():
                continue
            pk = verify._prime_power(loop.n)
            if pk is None or pk[0] != 2:
                continue
            if sum(1 for x in range(loop.n) if loop.element_order(x) == 2) != 1:
                continue
            parts.append(verify.verify_order_lemma(loop, entry.label))
        report = _merge_reports(parts, "order-lemma")
    else:  # genoct
        parts = [
            verify.verify_genoct_equivalences(e.loop, e.label)
            for e in corpus
            if not e.loop.is_associative()
        ]
        report = _merge_reports(parts, "genoct-equivalences")
    for line in report.format_lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_octonion(args) -> int:
    witness = generate_octonion_subloop(args.n, args.eps)
    print(f"elements={witness.loop.n}")
    print(f"moufang={_bool(witness.loop.is_moufang())}")
    print(f"associative={_bool(witness.loop.is_associative())}")
    if args.out:
        fileio.write_octonion_witness(args.out, witness)
        print(f"out={args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moufang",
        description="Construct finite Moufang loops, compute their power graphs, "
        "and verify the classification facts behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a loop from a recipe and write its .tbl")
    p.add_argument("recipe", help="cyclic:n | dihedral:m | quaternion:m | octonion:m | "
                                  "chein:<recipe>:c=<index> | product:<recipe>,<recipe>")
    p.add_argument("--out", required=True, help="output .tbl path")
    p.add_argument("--strict-paper", action="store_true",
                   help="forbid c = identity in Chein doubles")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="print the property report of a .tbl file")
    p.add_argument("table")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("powergraph", help="write the power graph of a .tbl file")
    p.add_argument("table")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--format", choices=("edg", "dot"), default="edg")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_powergraph)

    p = sub.add_parser("iso", help="decide isomorphism of two files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=("graph", "digraph", "loop"), default="graph")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("identify", help="identify a loop family from a power graph (.edg)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_identify)

    p = sub.add_parser("reconstruct", help="directed power graph from an undirected one (.edg)")
    p.add_argument("graph")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--out")
    p.add_argument("--strict-paper", action="store_true")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="run a verification suite over the built-in corpus")
    p.add_argument("suite", choices=("main", "order-lemma", "genoct", "classify"))
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--strict-paper", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("octonion", help="numerically generate a unit-octonion subloop")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--out", help="witness dump path")
    p.set_defaults(func=_cmd_octonion)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LoopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
