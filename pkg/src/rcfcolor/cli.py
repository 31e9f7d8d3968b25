"""Command-line entry point.

Exit codes: 0 = success or property holds, 1 = property refuted,
2 = input or precondition error, 3 = internal theorem-violation fault.
`--report FILE` appends one deterministic JSON line per invocation
(timing is serialized as null so report bytes are reproducible; the real
elapsed time goes to stderr instead).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from .binary import BinaryMatroid, find_u24_minor
from .catalog import CatalogEntry, full_catalog
from .coloring import (
    MONO_CIRCUIT,
    MONO_CUT,
    RAINBOW_CIRCUIT,
    RAINBOW_CUT,
    is_rainbow_circuit_free,
    is_standard,
    standard_coloring,
    theorem1_dual_verdict,
    theorem1_verdict,
)
from .core import (
    DualMatroid,
    InputError,
    Matroid,
    MatroidError,
    TheoremViolationError,
    UniformMatroid,
)
from .formats import (
    dump_binary,
    dump_coloring,
    dump_graph,
    dump_uniform,
    load_coloring,
    load_family,
    load_matroid,
    parse_subset,
)
from .graphic import (
    Graph,
    GraphicMatroid,
    gen_gqj,
    gqj_positions,
    h0_decomposition,
    is_sparse_23,
    is_tight_23,
    pair_coloring,
)
from .lsbo import BasisPair, lsbo_decide
from .reduction import (
    CircuitFamily,
    conjecture_search,
    covering_number,
    rank_bounds,
    verify_family,
)
from .subsets import elements_of
from .verify import check_names, run_checks

__all__ = ["main"]


def _enames(mask: int) -> str:
    return " ".join("e%d" % e for e in elements_of(mask))


def _indices(mask: int) -> list[int]:
    return list(elements_of(mask))


def _digest(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load(args) -> Matroid:
    return load_matroid(args.matroid, cograph=args.cograph)


def _load_graph(path: str) -> Graph:
    # reuse the matroid parser so format errors surface identically
    m = load_matroid(path)
    if isinstance(m, GraphicMatroid):
        return m.graph
    if isinstance(m, DualMatroid) and isinstance(m.base, GraphicMatroid):
        return m.base.graph
    raise InputError("this subcommand needs a graph file")


def _write_out(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------- handlers


def _cmd_rank(args):
    m = _load(args)
    if args.subset is not None:
        mask = parse_subset(args.subset, m.n)
        value = m.rank(mask)
    else:
        value = m.full_rank
    print(value)
    return 0, {"rank": value, "subset": args.subset}


def _cmd_circuits(args):
    m = _load(args)
    circuits = m.circuits()
    for c in circuits:
        print(_enames(c))
    return 0, {"circuits": [_indices(c) for c in circuits]}


def _cmd_cocircuits(args):
    m = _load(args)
    cuts = m.cocircuits()
    for c in cuts:
        print(_enames(c))
    return 0, {"cocircuits": [_indices(c) for c in cuts]}


def _cmd_is_binary(args):
    m = _load(args)
    witness = find_u24_minor(m)
    if witness is None:
        print("binary")
        return 0, {"binary": True}
    print("non-binary")
    print(("contract = %s" % _enames(witness.flat)).rstrip())
    print("quad = %s" % _enames(witness.elements))
    return 1, {
        "binary": False,
        "contract": _indices(witness.flat),
        "quad": _indices(witness.elements),
    }


def _cmd_standard_color(args):
    m = _load(args)
    seeds = None
    if args.seeds is not None:
        # keep user order: seeds are a preference list, not a set
        try:
            seeds = [int(tok) for tok in args.seeds.split()]
        except ValueError:
            raise InputError("seeds must be space-separated integers") from None
    coloring, _ = standard_coloring(m, seeds)
    _write_out(args, dump_coloring(coloring))
    return 0, {
        "assignment": list(coloring.assignment()),
        "classes": [_indices(c) for c in coloring.classes],
    }


def _cmd_check_coloring(args):
    m = _load(args)
    coloring = load_coloring(args.coloring, m.n)
    rcf, witness = is_rainbow_circuit_free(m, coloring)
    if not rcf:
        print("RAINBOW-CIRCUIT: %s" % _enames(witness))
        return 1, {"rcf": False, "rainbow_circuit": _indices(witness)}
    print("RCF")
    payload = {"rcf": True, "colors": coloring.q, "standard_order": None}
    if coloring.q == m.full_rank:
        order = is_standard(m, coloring)
        if order is None:
            print("NOT-STANDARD")
        else:
            print("STANDARD-ORDER: %s" % " ".join(map(str, order)))
            payload["standard_order"] = list(order)
    return 0, payload


def _cmd_verdict(args):
    m = _load(args)
    coloring = load_coloring(args.coloring, m.n)
    verdict = (
        theorem1_dual_verdict(m, coloring)
        if args.dual
        else theorem1_verdict(m, coloring)
    )
    if verdict.kind == RAINBOW_CIRCUIT:
        print("RAINBOW-CIRCUIT: %s" % _enames(verdict.subset))
    elif verdict.kind == MONO_CUT:
        print(
            "MONO-CUT: class %d = %s"
            % (verdict.class_index, _enames(verdict.subset))
        )
    elif verdict.kind == RAINBOW_CUT:
        print("RAINBOW-CUT: %s" % _enames(verdict.subset))
    else:
        assert verdict.kind == MONO_CIRCUIT
        print(
            "MONO-CIRCUIT: class %d = %s"
            % (verdict.class_index, _enames(verdict.subset))
        )
    return 0, {
        "kind": verdict.kind,
        "subset": _indices(verdict.subset),
        "class": verdict.class_index,
    }


def _cmd_covering_number(args):
    m = _load(args)
    value = covering_number(m)
    print(value)
    return 0, {"covering_number": value}


def _cmd_reduce(args):
    m = _load(args)
    coloring = conjecture_search(
        m, args.max_class, rank_preserving=args.rank_preserving
    )
    if coloring is None:
        print("NONE")
        return 1, {"found": False}
    _write_out(args, dump_coloring(coloring))
    if args.figure:
        _reduce_figure(args, coloring)
    return 0, {
        "found": True,
        "assignment": list(coloring.assignment()),
        "classes": [_indices(c) for c in coloring.classes],
    }


def _reduce_figure(args, coloring):
    from . import plots

    try:
        graph = _load_graph(args.matroid)
    except InputError:
        plots.save_class_sizes(coloring, args.figure, title="class sizes")
        return
    plots.save_graph_figure(graph, args.figure, coloring=coloring)


def _cmd_rank_bounds(args):
    m = _load(args)
    family = CircuitFamily.of(m, load_family(args.family, m.n))
    if not verify_family(m, family, args.g):
        print("FAMILY-INVALID")
        return 1, {"valid": False}
    lower, upper = rank_bounds(m, family, args.g)
    print("lower = %s" % lower)
    print("upper = %d" % upper)
    return 0, {"valid": True, "lower": str(lower), "upper": upper}


def _cmd_lsbo(args):
    m = _load(args)
    b1 = parse_subset(args.b1, m.n)
    b2 = parse_subset(args.b2, m.n)
    pair = BasisPair(m, b1, b2)
    bijection = lsbo_decide(pair)
    if bijection is None:
        print("NONE")
        return 1, {"found": False}
    for x, y in bijection.pairs:
        print("e%d -> e%d" % (x, y))
    return 0, {"found": True, "pairs": [list(p) for p in bijection.pairs]}


def _cmd_sparse(args):
    graph = _load_graph(args.graph)
    sparse, violator = is_sparse_23(graph)
    if args.figure:
        from . import plots

        marked = () if violator is None else tuple(elements_of(violator))
        inside = 0
        for i, (u, v) in enumerate(graph.edges):
            if violator is not None and violator >> u & 1 and violator >> v & 1:
                inside |= 1 << i
        plots.save_graph_figure(
            graph,
            args.figure,
            highlight_edges=inside,
            highlight_vertices=marked,
            title="(2,3)-sparse" if sparse else "violator highlighted",
        )
    if sparse:
        print("sparse")
        return 0, {"sparse": True, "violator": None}
    print("not-sparse")
    print("X = %s" % " ".join(str(v) for v in elements_of(violator)))
    return 1, {"sparse": False, "violator": _indices(violator)}


def _cmd_tight(args):
    graph = _load_graph(args.graph)
    if is_tight_23(graph):
        print("tight")
        return 0, {"tight": True}
    print("not-tight")
    return 1, {"tight": False}


def _cmd_henneberg(args):
    graph = _load_graph(args.graph)
    trace = h0_decomposition(graph)
    if trace is None:
        print("NONE")
        return 1, {"found": False}
    print("base = e%d" % trace.base_edge)
    for v, ea, eb in trace.steps:
        print("add %d: e%d e%d" % (v, ea, eb))
    return 0, {
        "found": True,
        "base": trace.base_edge,
        "steps": [list(s) for s in trace.steps],
    }


def _cmd_pair_color(args):
    graph = _load_graph(args.graph)
    coloring = pair_coloring(graph, method=args.method)
    if coloring is None:
        print("NONE")
        return 1, {"found": False}
    _write_out(args, dump_coloring(coloring))
    if args.figure:
        from . import plots

        plots.save_graph_figure(graph, args.figure, coloring=coloring)
    return 0, {
        "found": True,
        "assignment": list(coloring.assignment()),
        "classes": [_indices(c) for c in coloring.classes],
    }


def _cmd_gen(args):
    if args.generator != "gqj":
        raise InputError("unknown generator %r" % args.generator)
    graph = gen_gqj(args.q, args.j)
    _write_out(args, dump_graph(graph))
    if args.figure:
        from . import plots

        plots.save_graph_figure(
            graph,
            args.figure,
            positions=gqj_positions(args.q, args.j),
            title="gqj q=%d j=%d" % (args.q, args.j),
        )
    return 0, {
        "family": "gqj",
        "q": args.q,
        "j": args.j,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
    }


def _entry_kind(entry: CatalogEntry) -> str:
    m = entry.matroid
    if isinstance(m, UniformMatroid):
        return "uniform"
    if isinstance(m, BinaryMatroid):
        return "binary"
    if isinstance(m, GraphicMatroid):
        return "graph"
    if isinstance(m, DualMatroid) and isinstance(m.base, GraphicMatroid):
        return "cograph"
    return "sum"


def _entry_text(entry: CatalogEntry) -> str | None:
    m = entry.matroid
    kind = _entry_kind(entry)
    if kind == "uniform":
        return dump_uniform(m.full_rank, m.n)
    if kind == "binary":
        return dump_binary(m)
    if kind == "graph":
        return dump_graph(m.graph)
    if kind == "cograph":
        return dump_graph(m.base.graph, cograph=True)
    return None


def _cmd_catalog(args):
    entries = full_catalog(args.max_r, args.max_n)
    written = 0
    listing = []
    for entry in entries:
        kind = _entry_kind(entry)
        flag = "binary" if entry.binary else "non-binary"
        print(
            "%s %s n=%d rank=%d %s"
            % (entry.name, kind, entry.matroid.n, entry.matroid.full_rank, flag)
        )
        listing.append(
            {
                "name": entry.name,
                "kind": kind,
                "n": entry.matroid.n,
                "rank": entry.matroid.full_rank,
                "binary": bool(entry.binary),
            }
        )
        if args.out_dir:
            text = _entry_text(entry)
            if text is None:
                continue
            os.makedirs(args.out_dir, exist_ok=True)
            with open(
                os.path.join(args.out_dir, entry.name + ".txt"),
                "w",
                encoding="ascii",
            ) as fh:
                fh.write(text)
            written += 1
    return 0, {"entries": listing, "written": written if args.out_dir else None}


def _cmd_verify_all(args):
    names = args.check or None
    results = run_checks(threads=args.threads, names=names)
    for r in results:
        if r.ok:
            print("ok %s (%d %s)" % (r.name, r.count, r.detail))
        else:
            print("FAIL %s: %s" % (r.name, r.detail))
    passed = sum(1 for r in results if r.ok)
    print("%d/%d checks passed" % (passed, len(results)))
    if args.figures:
        from . import plots

        os.makedirs(args.figures, exist_ok=True)
        plots.save_check_summary(
            results, os.path.join(args.figures, "summary.png")
        )
    payload = {
        "checks": [
            {"name": r.name, "ok": r.ok, "count": r.count, "detail": r.detail}
            for r in results
        ]
    }
    return (0 if passed == len(results) else 3), payload


# ---------------------------------------------------------------- wiring


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--report", metavar="FILE", help="append a JSON line describing this run"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized stress paths (shipped subcommands are "
        "deterministic; recorded in reports)",
    )

    parser = argparse.ArgumentParser(
        prog="rcfcolor",
        description="matroid coloring engine: rainbow circuit-free colorings, "
        "reductions, and graph rigidity checks at desk scale",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, help_text, **kwargs):
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(func=handler)
        return p

    def matroid_arg(p):
        p.add_argument("matroid", help="matroid file (uniform/binary/graph/cograph)")
        p.add_argument(
            "--cograph",
            action="store_true",
            help="reinterpret a graph file as its co-graphic matroid",
        )

    p = add("rank", _cmd_rank, "rank of the matroid or of a subset")
    matroid_arg(p)
    p.add_argument("--subset", help="space-separated element indices")

    p = add("circuits", _cmd_circuits, "list all circuits")
    matroid_arg(p)

    p = add("cocircuits", _cmd_cocircuits, "list all cuts")
    matroid_arg(p)

    p = add("is-binary", _cmd_is_binary, "minor-search binarity test")
    matroid_arg(p)

    p = add("standard-color", _cmd_standard_color, "build a standard coloring")
    matroid_arg(p)
    p.add_argument("--seeds", help="preferred seed elements, in order")
    p.add_argument("-o", "--out", help="write the coloring here instead of stdout")

    p = add("check-coloring", _cmd_check_coloring, "RCF and standardness check")
    matroid_arg(p)
    p.add_argument("coloring", help="coloring file")

    p = add("verdict", _cmd_verdict, "rainbow-circuit / mono-cut certificate")
    matroid_arg(p)
    p.add_argument("coloring", help="coloring file")
    p.add_argument(
        "--dual",
        action="store_true",
        help="dual form: rainbow cut or monochromatic circuit",
    )

    p = add("covering-number", _cmd_covering_number, "independent-set cover size")
    matroid_arg(p)

    p = add("reduce", _cmd_reduce, "search RCF colorings with bounded classes")
    matroid_arg(p)
    p.add_argument("--max-class", type=int, required=True, metavar="B")
    p.add_argument("--rank-preserving", action="store_true")
    p.add_argument("-o", "--out", help="write the coloring here instead of stdout")
    p.add_argument("--figure", metavar="PNG", help="render the coloring")

    p = add("rank-bounds", _cmd_rank_bounds, "color-count bounds from a circuit family")
    matroid_arg(p)
    p.add_argument("--family", required=True, help="file with one circuit per line")
    p.add_argument("--g", type=int, required=True)

    p = add("lsbo", _cmd_lsbo, "exchange bijection for a basis pair")
    matroid_arg(p)
    p.add_argument("--b1", required=True, help='first basis, e.g. "0 2 5"')
    p.add_argument("--b2", required=True, help='second basis, e.g. "1 3 4"')

    p = add("sparse", _cmd_sparse, "(2,3)-sparsity with violator")
    p.add_argument("graph", help="graph file")
    p.add_argument("--figure", metavar="PNG", help="render the graph")

    p = add("tight", _cmd_tight, "(2,3)-tightness")
    p.add_argument("graph", help="graph file")

    p = add("henneberg", _cmd_henneberg, "degree-2 construction trace")
    p.add_argument("graph", help="graph file")

    p = add("pair-color", _cmd_pair_color, "RCF coloring with classes of two")
    p.add_argument("graph", help="graph file")
    p.add_argument(
        "--method",
        choices=("auto", "trace", "exhaustive"),
        default="auto",
    )
    p.add_argument("-o", "--out", help="write the coloring here instead of stdout")
    p.add_argument("--figure", metavar="PNG", help="render the coloring")

    p = add("gen", _cmd_gen, "generate a named graph family")
    p.add_argument("generator", choices=("gqj",))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("-o", "--out", help="write the graph here instead of stdout")
    p.add_argument("--figure", metavar="PNG", help="render the graph")

    p = add("catalog", _cmd_catalog, "list or dump the verification corpus")
    p.add_argument("--max-r", type=int, default=3)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--out-dir", help="write matroid files here")

    p = add("verify-all", _cmd_verify_all, "run every invariant suite")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--check",
        action="append",
        metavar="NAME",
        help="run only this check (repeatable); known: %s"
        % ", ".join(check_names()),
    )
    p.add_argument("--figures", metavar="DIR", help="render a summary chart")

    return parser


def _input_digests(args) -> dict[str, object]:
    digests: dict[str, object] = {}
    for attr in ("matroid", "coloring", "graph", "family"):
        path = getattr(args, attr, None)
        if path is not None:
            digests[attr] = _digest(path)
    # threads is an execution knob, not an input: report bytes must not
    # depend on it
    for attr in ("subset", "seeds", "b1", "b2", "max_class", "rank_preserving",
                 "g", "dual", "cograph", "method", "generator", "q", "j",
                 "max_r", "max_n", "check", "seed"):
        value = getattr(args, attr, None)
        if value not in (None, False):
            digests[attr] = value
    return digests


def _append_report(args, code: int, payload) -> None:
    record = {
        "subcommand": args.subcommand,
        "inputs": _input_digests(args),
        "exit": code,
        "payload": payload,
        "timing": None,
    }
    line = json.dumps(record, sort_keys=True, separators=(",", ":"))
    with open(args.report, "a", encoding="ascii") as fh:
        fh.write(line + "\n")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code, payload = args.func(args)
    except TheoremViolationError as exc:
        print("theorem violation: %s" % exc, file=sys.stderr)
        return 3
    except MatroidError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.report:
        _append_report(args, code, payload)
        print(
            "elapsed: %.3fs" % (time.perf_counter() - start), file=sys.stderr
        )
    return code


if __name__ == "__main__":
    sys.exit(main())
