"""Command-line driver.

Exit codes: 0 success, 1 reasoned refusal (first output line is a
machine-readable reason such as "exception:S4", "not-covered" or
"infeasible:no-cycle-cover"), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .builders import CompositionSpec, cartesian_power, cartesian_product, compose, \
    lexicographic_product, strong_product
from .decomp import (
    CycleCoverInfeasible,
    Decomposition,
    characterize_semicomplete_composition,
    decompose_cartesian_power,
    decompose_cartesian_square,
    decompose_composition,
    decompose_lexicographic,
    decompose_strong_product,
    match_exception,
    trotter_erdos_hamiltonian,
    verify_decomposition,
)
from .digraph import Digraph, arc_connectivity, is_semicomplete, is_strong
from .flows import cover_network, cycle_cover, infeasibility_cut
from .io import ParseError, parse_decomposition, parse_edge_list, render_decomposition, \
    render_edge_list
from .oracle import oracle_good_decomposition

OK, REFUSED, USAGE = 0, 1, 2


class Refusal(Exception):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(reason)
        self.reason = reason
        self.detail = detail


def _load_digraph(path: str) -> Digraph:
    return parse_edge_list(Path(path).read_text())


def _load_spec(path: str) -> CompositionSpec:
    """Spec file: first content line names the outer edge-list file, the
    following lines name the inner files in block order; paths are relative
    to the spec file."""
    base = Path(path).parent
    names = [
        line.strip()
        for line in Path(path).read_text().splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(names) < 2:
        raise ParseError("spec file needs an outer file and at least one inner file", 1)
    outer = _load_digraph(str(base / names[0]))
    inners = tuple(_load_digraph(str(base / nm)) for nm in names[1:])
    return CompositionSpec(outer, inners)


def _cmd_check(args) -> int:
    d = _load_digraph(args.file)
    print(f"order: {d.n}")
    print(f"arcs: {d.m}")
    print(f"strong: {'yes' if is_strong(d) else 'no'}")
    print(f"semicomplete: {'yes' if is_semicomplete(d) else 'no'}")
    if d.n >= 2:
        print(f"arc-connectivity: {arc_connectivity(d)}")
    else:
        print("arc-connectivity: n/a")
    return OK


def _cmd_product(args) -> int:
    g = _load_digraph(args.a)
    if args.power is not None:
        if args.op != "cartesian":
            raise Refusal("usage", "--power applies to the cartesian product only")
        built = cartesian_power(g, args.power)
    else:
        if args.b is None:
            print("product: need a second factor B (or --power k)", file=sys.stderr)
            return USAGE
        h = _load_digraph(args.b)
        op = {
            "cartesian": cartesian_product,
            "strong": strong_product,
            "lex": lexicographic_product,
        }[args.op]
        built = op(g, h)
    sys.stdout.write(render_edge_list(built.digraph))
    return OK


def _cmd_compose(args) -> int:
    outer = _load_digraph(args.outer)
    inners = tuple(_load_digraph(p) for p in args.inners)
    spec = CompositionSpec(outer, inners)
    sys.stdout.write(render_edge_list(compose(spec).digraph))
    return OK


def _emit(dec: Decomposition) -> int:
    sys.stdout.write(render_decomposition(dec))
    return OK


def _decompose_auto(d: Digraph, budget: int) -> int:
    matched = match_exception(d)
    if matched is not None:
        raise Refusal(f"exception:{matched[0]}")
    report = oracle_good_decomposition(d, budget=budget)
    if report.outcome == "found":
        return _emit(report.decomposition)
    raise Refusal(report.outcome)


def _cmd_decompose(args) -> int:
    d = _load_digraph(args.file)
    strategy = args.strategy
    if strategy == "composition":
        if args.spec is None:
            print("decompose: --strategy composition needs --spec", file=sys.stderr)
            return USAGE
        spec = _load_spec(args.spec)
        if compose(spec).digraph != d:
            print("decompose: spec does not compose to FILE", file=sys.stderr)
            return USAGE
        if (
            is_semicomplete(spec.outer)
            and is_strong(spec.outer)
            and spec.t >= 2
            and all(n >= 2 for n in spec.sizes)
        ):
            res = characterize_semicomplete_composition(spec)
            if res.is_exception:
                raise Refusal(f"exception:{res.exception_tag}")
            return _emit(res.decomposition)
        dec = decompose_composition(spec)
        if dec is None:
            raise Refusal("not-covered")
        return _emit(dec)
    if strategy == "cartesian-square":
        return _emit(_square_or_refuse(d))
    if strategy == "cartesian-power":
        try:
            return _emit(decompose_cartesian_power(d, args.power or 2))
        except CycleCoverInfeasible as exc:
            raise Refusal("infeasible:no-cycle-cover", f"cut: {sorted(exc.cut)}")
    if strategy in ("strong-product", "lex"):
        if args.factor is None:
            print(f"decompose: --strategy {strategy} needs --factor", file=sys.stderr)
            return USAGE
        h = _load_digraph(args.factor)
        if strategy == "strong-product":
            return _emit(decompose_strong_product(d, h))
        parts = decompose_lexicographic(d, h)
        host = lexicographic_product(d, h).digraph
        return _emit(Decomposition(host, parts[0], parts[1]))
    if strategy == "oracle":
        report = oracle_good_decomposition(d, budget=args.budget)
        if report.outcome == "found":
            return _emit(report.decomposition)
        raise Refusal(report.outcome)
    return _decompose_auto(d, args.budget)


def _square_or_refuse(d: Digraph) -> Decomposition:
    if d.n < 2 or not is_strong(d):
        raise Refusal("not-covered", "digraph is not strong of order >= 2")
    cover = cycle_cover(d)
    if cover is None:
        cut = infeasibility_cut(cover_network(d))
        raise Refusal("infeasible:no-cycle-cover", f"cut: {sorted(cut)}")
    return decompose_cartesian_square(d, cover)


def _cmd_verify(args) -> int:
    dec = parse_decomposition(Path(args.file).read_text())
    res = verify_decomposition(dec)
    if res.ok:
        print("valid")
        return OK
    raise Refusal("invalid", res.reason or "")


def _cmd_oracle(args) -> int:
    d = _load_digraph(args.file)
    report = oracle_good_decomposition(d, budget=args.budget)
    print(f"outcome: {report.outcome}")
    print(f"nodes: {report.nodes_explored}")
    print(f"elapsed: {report.elapsed:.3f}s")
    if report.decomposition is not None:
        sys.stdout.write(render_decomposition(report.decomposition))
    return OK


def _cmd_ham_cartesian(args) -> int:
    verdict = trotter_erdos_hamiltonian(args.p, args.q)
    print("hamiltonian" if verdict else "non-hamiltonian")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gooddecomp",
        description="Construct and verify pairs of arc-disjoint strong spanning subdigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print basic predicates of an edge-list file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("product", help="write a product digraph as an edge list")
    p.add_argument("--op", choices=("cartesian", "strong", "lex"), required=True)
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("--power", type=int)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("compose", help="write a composition as an edge list")
    p.add_argument("outer")
    p.add_argument("inners", nargs="+")
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("decompose", help="write a decomposition document or refuse")
    p.add_argument("file")
    p.add_argument(
        "--strategy",
        choices=(
            "auto",
            "composition",
            "cartesian-square",
            "cartesian-power",
            "strong-product",
            "lex",
            "oracle",
        ),
        default="auto",
    )
    p.add_argument("--spec", help="composition spec file (outer + inner files)")
    p.add_argument("--factor", help="second factor for product strategies")
    p.add_argument("--power", type=int, help="exponent for cartesian-power")
    p.add_argument("--budget", type=int, default=0, help="oracle node budget")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="validate a decomposition document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="run the exact search and report")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("ham-cartesian", help="Hamiltonicity verdict for C_p x C_q")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_ham_cartesian)
    return parser


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except Refusal as ref:
        print(ref.reason)
        if ref.detail:
            print(ref.detail)
        return REFUSED
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run_command())
