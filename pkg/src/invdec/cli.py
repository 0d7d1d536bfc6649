"""``invdec`` command line.

JSON on stdout by default, ``--pretty`` for text.  Exit status: 0 success,
1 bad input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import blocks as _blocks
from . import decomposition as _dec
from .inv_graph import edge_classes_structural
from .oracle import CHECKS, sweep_verify
from .perm_core import Permutation, parse_permutation

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _perm(text: str) -> Permutation:
    return parse_permutation(text)


def _perms(texts: Sequence[str]) -> list[Permutation]:
    return [parse_permutation(t) for t in texts]


def _pair_text(d) -> str:
    return f"{d.tau1} | {d.tau2}"


def cmd_tree(args) -> tuple[str, int]:
    tree = _blocks.substitution_tree(_perm(args.pi))
    return (tree.render() if args.pretty else _dump(tree.as_dict())), EXIT_OK


def cmd_blocks(args) -> tuple[str, int]:
    p = _perm(args.pi)
    payload = {
        "pi": p.to_list(),
        "blocks": [b.to_list() for b in sorted(_blocks.all_blocks(p))],
        "strong": [b.to_list() for b in sorted(_blocks.strong_blocks(p))],
        "simple": _blocks.is_simple(p),
    }
    if args.pretty:
        text = "\n".join([
            f"blocks: {' '.join(map(repr, sorted(_blocks.all_blocks(p))))}",
            f"strong: {' '.join(map(repr, sorted(_blocks.strong_blocks(p))))}",
            f"simple: {payload['simple']}",
        ])
        return text, EXIT_OK
    return _dump(payload), EXIT_OK


def cmd_edge_classes(args) -> tuple[str, int]:
    classes = edge_classes_structural(_perm(args.pi))
    if args.pretty:
        lines = []
        for c in classes:
            edges = " ".join(f"{i}{j}" if max(i, j) < 10 else f"{i}-{j}" for i, j in c.sorted_edges())
            o = c.origin
            where = f"{o.kind} {o.module!r}" + (f" pair {o.pair[0]},{o.pair[1]}" if o.pair else "")
            lines.append(f"{edges}  ({where})")
        return "\n".join(lines), EXIT_OK
    return _dump(classes.as_dict()), EXIT_OK


def cmd_count(args) -> tuple[str, int]:
    p = _perm(args.pi)
    n = _dec.count_decompositions(p)
    return (str(n) if args.pretty else _dump({"pi": p.to_list(), "count": n})), EXIT_OK


def cmd_enum(args) -> tuple[str, int]:
    p = _perm(args.pi)
    if args.pretty:
        lines = [f"{p}: {_dec.count_decompositions(p)} decompositions"]
        for d in _dec.enumerate_decompositions(p, args.limit):
            tag = " *" if _dec.is_multiplicative(p, d) else ""
            lines.append(f"  {_pair_text(d)}{tag}")
        return "\n".join(lines), EXIT_OK
    return _dump(_dec.decompositions_payload(p, args.limit)), EXIT_OK


def cmd_check(args) -> tuple[str, int]:
    p = _perm(args.pi)
    payload = {
        "decomposable": _dec.is_decomposable(p),
        "edge_classes": len(edge_classes_structural(p)),
        "neighbor_of_identity": None if p.is_identity() else _dec.is_neighbor_of_identity(p),
    }
    if args.pretty:
        return "\n".join(f"{k}: {v}" for k, v in payload.items()), EXIT_OK
    return _dump(payload), EXIT_OK


def cmd_mult(args) -> tuple[str, int]:
    p = _perm(args.pi)
    w = _dec.multiplicative_witness(p)
    if w is None:
        payload = {"pi": p.to_list(), "witness": None}
    else:
        from .perm_core import compose
        order = "tau1*tau2" if compose(w.tau1, w.tau2) == p else "tau2*tau1"
        payload = {"pi": p.to_list(), "witness": {"tau1": w.tau1.to_list(), "tau2": w.tau2.to_list(), "product": order}}
    if args.pretty:
        return ("none" if w is None else f"{_pair_text(w)}  ({payload['witness']['product']})"), EXIT_OK
    return _dump(payload), EXIT_OK


def cmd_merge(args) -> tuple[str, int]:
    p = _perm(args.pi)
    parts = _perms(args.parts)
    i, j = args.pair
    merged = _dec.merge_parts(p, parts, i, j)
    return (str(merged) if args.pretty else _dump({"pi": p.to_list(), "merged": merged.to_list()})), EXIT_OK


def cmd_binomial(args) -> tuple[str, int]:
    lhs, rhs = _perms(args.lhs), _perms(args.rhs)
    only_l, only_r = _dec.binomial_difference(lhs, rhs)

    def flat(counter):
        return [list(e) for e in sorted(counter.elements())]

    payload = {"holds": not only_l and not only_r, "lhs_only": flat(only_l), "rhs_only": flat(only_r)}
    if args.pretty:
        return "\n".join(f"{k}: {v}" for k, v in payload.items()), EXIT_OK
    return _dump(payload), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    cap = int(os.environ.get("INVDEC_MAX_N", "7"))
    if args.n > cap:
        raise ValueError(f"n={args.n} exceeds INVDEC_MAX_N={cap}")
    checks = "all" if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    report = sweep_verify(args.n, checks, jobs=args.jobs,
                          witness_cap=None if args.all_witnesses else 10)
    code = EXIT_OK if report.ok else EXIT_VERIFY
    if args.pretty:
        lines = [f"n={report.n}: {report.permutations_checked} permutations"]
        for name, r in sorted(report.checks.items()):
            status = "ok" if not r.failures else f"FAIL {r.failures}"
            lines.append(f"  {name:<20} {status}")
            for w in r.witnesses:
                lines.append(f"    {' '.join(map(str, w))}")
        return "\n".join(lines), code
    return report.to_json(), code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invdec", description="Inversion set decompositions of permutations.")
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_pi(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("pi", help='permutation, e.g. "2413" or "2 4 1 3"')
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    with_pi("tree", cmd_tree, "substitution decomposition tree")
    with_pi("blocks", cmd_blocks, "all and strong blocks")
    with_pi("edge-classes", cmd_edge_classes, "edge classes of the inversion graph")
    with_pi("count", cmd_count, "number of decompositions")
    sp = with_pi("enum", cmd_enum, "list decompositions")
    sp.add_argument("--limit", type=int, default=None)
    with_pi("check", cmd_check, "decomposability summary")
    with_pi("mult", cmd_mult, "a multiplicative decomposition")
    sp = with_pi("merge", cmd_merge, "merge two parts of a partition")
    sp.add_argument("--parts", nargs="+", required=True)
    sp.add_argument("--pair", nargs=2, type=int, required=True, metavar=("I", "J"), help="0-based part indices")

    sp = sub.add_parser("binomial", help="test a binomial against the toric ideal")
    sp.add_argument("--lhs", nargs="+", required=True)
    sp.add_argument("--rhs", nargs="+", required=True)
    sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_binomial)

    sp = sub.add_parser("verify", help="exhaustive brute-force sweep over S_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--checks", default="all", help=f"comma list from: {', '.join(CHECKS)}")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--all-witnesses", action="store_true")
    sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        text, code = args.func(args)
    except ValueError as exc:
        print(f"invdec: error: {exc}", file=err)
        return EXIT_INPUT
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
