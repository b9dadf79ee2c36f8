"""Command line entry point.

Exit codes: 0 success or verdict true, 1 verdict false, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import blocks, constructor, lemma_lab, named
from .cycle_search import find_cycle
from .oracle import search
from .plane_graph import GraphError, PlaneGraph, format_rot, read_rot

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_graph(args) -> PlaneGraph:
    if getattr(args, "graph", None):
        try:
            return named.named_graph(args.graph)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    if not getattr(args, "input", None):
        raise InputError("an input graph is required (-i FILE or -g NAME)")
    try:
        graphs = read_rot(args.input)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    except GraphError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if len(graphs) != 1:
        raise InputError(f"{args.input}: expected one graph, found {len(graphs)}")
    return graphs[0]


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _elapsed(start: float) -> None:
    print(f"elapsed: {time.perf_counter() - start:.2f}s", file=sys.stderr)


# -- subcommands ------------------------------------------------------------------


def cmd_decompose(args) -> int:
    g = _load_graph(args)
    dec = blocks.decomposition(g)
    rows = []
    for b in dec.blocks:
        cls = dec.classes[b.index]
        rows.append(
            {
                "id": b.index,
                "class": cls.label,
                "trivial": b.is_trivial,
                "vertices": sorted(b.vertices),
                "edges": sorted(sorted(g.edges[k]) for k in b.edges),
                "holes": len(dec.holes(b)),
                "petals": len(dec.petals(b)),
            }
        )
    junctions = sorted(dec.junctions)
    if args.json:
        print(_dump({"n": g.vertex_count, "e": g.edge_count, "blocks": rows, "junctions": junctions}))
    else:
        for r in rows:
            print(f"block {r['id']}: {r['class']} vertices={r['vertices']} holes={r['holes']} petals={r['petals']}")
        print(f"junctions: {junctions}")
    return EXIT_OK


def cmd_charge(args) -> int:
    g = _load_graph(args)
    ledger = blocks.charge_report(g)
    data = ledger.to_json()
    if args.json:
        print(_dump(data))
    else:
        for row in data["blocks"]:
            flag = " exceptional" if row["exceptional"] else ""
            print(f"block {row['id']} {row['class']}: e={row['e']} n={row['n']} f={row['f']} g={row['g']}{flag}")
        for grp, s in zip(data["groups"], data["group_sums"]):
            print(f"group {grp}: {s}")
        print(f"total_g: {data['total_g']}")
        print(f"verdict: {str(data['verdict']).lower()}")
    return EXIT_OK if ledger.verdict else EXIT_FALSE


def cmd_check_cycle(args) -> int:
    g = _load_graph(args)
    if args.length < 3:
        raise InputError("cycle length must be at least 3")
    witness = find_cycle(g, args.length)
    if args.json:
        print(_dump({"length": args.length, "found": witness is not None, "witness": witness}))
    else:
        print(str(witness is not None).lower())
        if witness is not None:
            print("witness: " + " ".join(map(str, witness)))
    return EXIT_OK


def cmd_sparse(args) -> int:
    g = _load_graph(args)
    try:
        s = blocks.find_sparse_set(g, args.alpha, args.max)
    except blocks.GuardExceeded as exc:
        raise InputError(str(exc)) from None
    incident = blocks.incident_edge_count(g, s) if s is not None else None
    if args.json:
        print(_dump({"alpha": blocks.fmt(args.alpha), "max_order": args.max,
                     "set": list(s) if s is not None else None, "incident_edges": incident}))
    else:
        print("none" if s is None else f"{{{', '.join(map(str, s))}}} incident_edges={incident}")
    return EXIT_OK


def cmd_membership(args) -> int:
    g = _load_graph(args)
    reasons = blocks.membership_reasons(g)
    if args.json:
        print(_dump(reasons))
    else:
        for key in ("two_connected", "c7_free", "sparse_set"):
            val = reasons[key]
            print(f"{key}: {str(val).lower() if isinstance(val, bool) else val}")
        print(f"member: {str(reasons['member']).lower()}")
    return EXIT_OK if reasons["member"] else EXIT_FALSE


def cmd_construct(args) -> int:
    try:
        if args.family == "glued-k4":
            result = constructor.glued_k4_chain(args.copies)
        else:
            host = named.named_graph(args.host)
            block = named.named_graph(args.block)
            result = constructor.substitute(host, block)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0] if exc.args else exc)) from None
    rot = format_rot(result.graph)
    if args.out:
        Path(args.out).write_text(rot, encoding="utf-8")
    data = result.to_json()
    if args.json:
        if not args.out:
            data["rot"] = rot
        print(_dump(data))
    else:
        if not args.out:
            print(rot, end="")
        c = data["certified"]
        print(f"family: {data['family']}")
        for key in ("n", "e", "bound", "planar", "c7_free", "exceeds_bound", "meets_bound"):
            val = c[key]
            print(f"{key}: {str(val).lower() if isinstance(val, bool) else val}")
    return EXIT_OK


class _ResumeStore(search.LevelStore):
    """Always records finished levels; reads them back only when resuming."""

    def __init__(self, root, resume: bool):
        super().__init__(root)
        self.resume = resume

    def load(self, cls, n):
        return super().load(cls, n) if self.resume else None


def _store(args):
    import os

    root = os.environ.get(search.CACHE_ENV)
    return _ResumeStore(root, args.resume) if root else None


def cmd_oracle(args) -> int:
    start = time.perf_counter()
    try:
        result = search.ex_planar(args.n, args.ell, jobs=args.jobs, store=_store(args))
    except (blocks.GuardExceeded, ValueError) as exc:
        raise InputError(str(exc)) from None
    _elapsed(start)
    if args.json:
        print(_dump(result.to_json()))
    else:
        print(f"n={result.n} ell={result.ell} max_edges={result.max_edges} "
              f"witnesses={len(result.witnesses)} graphs_examined={result.graphs_examined}")
        for w in result.witnesses:
            print()
            print(format_rot(w), end="")
    return EXIT_OK


VERIFIERS = {
    "paths": lemma_lab.verify_lemma_paths,
    "hpath": lemma_lab.verify_lemma_hpath,
    "catalog": lemma_lab.verify_block_catalog,
    "charges": lemma_lab.verify_charges,
}


def cmd_verify(args) -> int:
    start = time.perf_counter()
    try:
        report = VERIFIERS[args.lemma](args.max_n, jobs=args.jobs)
    except blocks.GuardExceeded as exc:
        raise InputError(str(exc)) from None
    _elapsed(start)
    data = report.to_json()
    if args.json:
        print(_dump(data))
    else:
        print(f"lemma: {data['lemma']}")
        print(f"instances: {data['instances']}")
        print(f"violations: {len(data['violations'])}")
        for key, val in data["census"].items():
            print(f"{key}: {json.dumps(val, sort_keys=True)}")
        for v in data["violations"][:5]:
            print(json.dumps(v, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_FALSE


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-turan", description="Triangular-block charges and small planar Turan numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        src = sp.add_mutually_exclusive_group()
        src.add_argument("-i", "--input", help=".rot file with one graph")
        src.add_argument("-g", "--graph", help="built-in graph name (c8, k4, octahedron, b6a, ...)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    graph_cmd("decompose", "triangular-blocks and their classes").set_defaults(func=cmd_decompose)
    graph_cmd("charge", "exact charge ledger and verdict").set_defaults(func=cmd_charge)
    sp = graph_cmd("check-cycle", "search for a cycle of one length")
    sp.add_argument("-l", "--length", type=int, required=True)
    sp.set_defaults(func=cmd_check_cycle)
    sp = graph_cmd("sparse", "smallest alpha-sparse vertex set")
    sp.add_argument("--alpha", type=_parse_fraction, default=Fraction(18, 7))
    sp.add_argument("--max", type=int, default=4)
    sp.set_defaults(func=cmd_sparse)
    graph_cmd("membership", "is the graph in the tight class").set_defaults(func=cmd_membership)

    sp = sub.add_parser("construct", help="build a certified construction")
    sp.add_argument("--family", choices=["glued-k4", "substitution"], required=True)
    sp.add_argument("--copies", type=int, default=18)
    sp.add_argument("--host", default="c8")
    sp.add_argument("--block", default="octahedron")
    sp.add_argument("--out", help="write the .rot file here instead of stdout")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("oracle", help="exact planar Turan number of a cycle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ell", type=int, default=7)
    sp.add_argument("--resume", action="store_true", help="reuse finished levels from the cache")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="exhaustive lemma check")
    sp.add_argument("--lemma", choices=sorted(VERIFIERS), required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
