"""Command-line front end.

Machine-first: every subcommand emits JSON lines on stdout.  Exit codes:
0 success, 2 negative verdict (not tight, not rigid, excluded form), 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog, errors, fileio, homology, reduction, rigidity, sparsity
from .corpus import CorpusSpec, corpus_records
from .graphs import freedom


def _load(path) -> "fileio.TorusWithHole":
    if path == "-":
        return fileio.record_to_hole(json.load(sys.stdin))
    return fileio.load_hole(path)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_gen(args) -> int:
    kwargs = {}
    if args.grids:
        kwargs["grids"] = tuple(
            tuple(int(x) for x in g.split("x")) for g in args.grids)
    spec = CorpusSpec(seed=args.seed, count=args.count,
                      boundary_lengths=tuple(args.boundary_lengths), **kwargs)
    for rec in corpus_records(spec):
        _emit(rec)
    return 0


def cmd_check(args) -> int:
    hole = _load(args.graph)
    verdict = sparsity.check_3_6(hole.graph)
    out = verdict.to_json()
    out["freedom"] = freedom(hole.graph)
    _emit(out)
    return 0 if verdict.is_tight else 2


def cmd_rank(args) -> int:
    hole = _load(args.graph)
    report = rigidity.rigidity_report(hole.graph, trials=args.trials, seed=args.seed)
    _emit(report.to_json())
    return 0 if report.minimally_rigid else 2


def cmd_classify(args) -> int:
    hole = _load(args.graph)
    result = catalog.classify(hole)
    _emit(result.to_json())
    return 0 if not result.excluded else 2


def cmd_homology(args) -> int:
    hole = _load(args.graph)
    out = []
    boundary_vertices = {v for e in hole.boundary_edges for v in e}
    for e in hole.graph.sorted_edges():
        if e in hole.boundary_edges or not hole.is_ff_edge(e):
            continue
        if e[0] not in boundary_vertices or e[1] not in boundary_vertices:
            continue
        classes = homology.crossover_class(hole, e)
        out.append({"edge": list(e), "classes": sorted(map(list, classes))})
    _emit({"crossover_edges": out})
    return 0


def cmd_reduce(args) -> int:
    hole = _load(args.graph)
    leaf, moves = reduction.reduce_greedy(hole)
    if args.validate:
        assert reduction.is_uncontractible(leaf)
        for m in moves:
            hole = reduction.contract(hole, m.edge)
            if not sparsity.check_3_6(hole.graph).is_tight:
                raise errors.StuckButContractible("replayed move leaves tightness")
    _emit({"moves": [m.to_json() for m in moves],
           "leaf": fileio.hole_to_record(leaf)})
    return 0


def cmd_tree(args) -> int:
    hole = _load(args.graph)
    tree = reduction.reduction_tree(hole)
    _emit(tree.to_json())
    return 0


def cmd_certify(args) -> int:
    hole = _load(args.graph)
    cert = reduction.certify(hole)
    if args.validate:
        reduction.verify_certificate(cert, hole.graph, seed=args.seed)
    _emit(cert.to_json())
    return 0


def cmd_catalog(args) -> int:
    for i, (word, cls) in enumerate(catalog.the_17(), start=1):
        rec = fileio.hole_to_record(catalog.build_H(i))
        _emit({"index": i, "word": word, "pattern": list(cls.pattern),
               "graph": rec})
    return 0


def cmd_export(args) -> int:
    hole = _load(args.graph)
    if args.format == "dot":
        sys.stdout.write(fileio.to_dot(hole))
    else:
        _emit(fileio.hole_to_record(hole))
    return 0


def _check_record(line: str) -> str:
    rec = json.loads(line)
    hole = fileio.record_to_hole(rec)
    verdict = sparsity.check_3_6(hole.graph)
    out = verdict.to_json()
    out["freedom"] = freedom(hole.graph)
    if "meta" in rec:
        out["index"] = rec["meta"].get("index")
    return json.dumps(out, sort_keys=True)


def cmd_batch_check(args) -> int:
    lines = [ln for ln in sys.stdin if ln.strip()]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for out in pool.map(_check_record, lines):
                sys.stdout.write(out + "\n")
    else:
        for ln in lines:
            sys.stdout.write(_check_record(ln) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torusrig")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random corpus as JSON lines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--grids", nargs="*", default=None, metavar="RxS")
    p.add_argument("--boundary-lengths", nargs="*", type=int, default=[9])
    p.set_defaults(func=cmd_gen)

    for name, fn, extra in (
            ("check", cmd_check, ()),
            ("rank", cmd_rank, ("seed", "trials")),
            ("classify", cmd_classify, ()),
            ("homology", cmd_homology, ()),
            ("reduce", cmd_reduce, ("validate",)),
            ("tree", cmd_tree, ()),
            ("certify", cmd_certify, ("validate", "seed")),
            ("export", cmd_export, ("format",))):
        p = sub.add_parser(name)
        p.add_argument("graph", help="JSON graph file, or - for stdin")
        if "seed" in extra:
            p.add_argument("--seed", type=int, default=0)
        if "trials" in extra:
            p.add_argument("--trials", type=int, default=3)
        if "validate" in extra:
            p.add_argument("--validate", action="store_true")
        if "format" in extra:
            p.add_argument("--format", choices=("json", "dot"), default="json")
        p.set_defaults(func=fn)

    p = sub.add_parser("catalog", help="dump the 17 words and graphs")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("batch-check", help="check JSON-line graphs from stdin")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.TorusRigError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
