"""Command-line interface: build, query, evolve, compare, demo-saigata."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complex as cc
from .complex import SimplicialComplex, Simplex, from_text, to_text
from .config import RunConfig, load_config
from .errors import ExitCode, SenError
from .evolution import DEMO_PARTICIPANTS, GrowthRun, ledger_csv, ledger_json, participant_ids, run_growth
from .projection import graphs_identical, loss_report, skeleton_collision, to_tgf, to_underlying_graph
from .ses import OrderClass, check_subset_dependency, classify_order, parse_ses_document

EPILOG = "exit statuses:\n" + "\n".join(
    f"  {code.value:>2}  {code.name.lower().replace('_', '-')}" for code in ExitCode
)

QUERIES = ("dimension", "fvector", "facets", "maximal", "skeleton", "boundary")


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the same flags appear before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=argparse.SUPPRESS, help="JSON config file; flags win")
    common.add_argument("--simplex-cap", type=int, default=argparse.SUPPRESS, help="max simplex cardinality (default 25)")
    kinds = common.add_mutually_exclusive_group()
    kinds.add_argument("--strict-kinds", dest="strict_kinds", action="store_true", default=argparse.SUPPRESS,
                       help="require both social and ecological vertices (default)")
    kinds.add_argument("--allow-single-kind", dest="strict_kinds", action="store_false", default=argparse.SUPPRESS,
                       help="permit a system with only one kind of vertex")
    common.add_argument("--witness-limit", type=int, default=argparse.SUPPRESS, help="max witnesses per report (default 10)")
    common.add_argument("--out", dest="output_dir", type=Path, default=argparse.SUPPRESS, help="output directory (default ./out)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="sesnet",
        description="Social-ecological networks as simplicial complexes.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kw = dict(parents=[common], epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)

    p = sub.add_parser("build", help="build the closed complex of a system document", **kw)
    p.add_argument("document", type=Path)

    p = sub.add_parser("query", help="query a complex file", **kw)
    p.add_argument("complex_file", type=Path)
    p.add_argument("query", choices=QUERIES)
    p.add_argument("p", nargs="?", type=int, help="skeleton order (skeleton only)")

    p = sub.add_parser("evolve", help="run the group-growth construction", **kw)
    p.add_argument("n", type=int, help="number of participants")
    p.add_argument("last_step", type=int)
    p.add_argument("--names", help="comma-separated participant ids (default v_i..v_m for n=5)")

    p = sub.add_parser("compare", help="compare two complexes through their underlying graphs", **kw)
    p.add_argument("complex_a", type=Path)
    p.add_argument("complex_b", type=Path)
    p.add_argument("--json", action="store_true", help="print a JSON document instead of text")

    sub.add_parser("demo-saigata", help="reproduce the five-participant illustration", **kw)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    base = load_config(getattr(args, "config", None))
    return base.with_overrides(
        simplex_cap=getattr(args, "simplex_cap", None),
        strict_kinds=getattr(args, "strict_kinds", None),
        witness_limit=getattr(args, "witness_limit", None),
        output_dir=getattr(args, "output_dir", None),
    )


def _read_complex(path: Path, cfg: RunConfig) -> SimplicialComplex:
    try:
        text = path.read_text()
    except OSError as exc:
        raise SenError(f"cannot read {path}: {exc.strerror}") from None
    return from_text(text, cfg.simplex_cap)


def _show(cx: SimplicialComplex, s: Simplex) -> str:
    return " ".join(cx.label(s))


def cmd_build(document: Path, cfg: RunConfig) -> int:
    try:
        text = document.read_text()
    except OSError as exc:
        raise SenError(f"cannot read {document}: {exc.strerror}") from None
    ses = parse_ses_document(text, allow_single_kind=not cfg.strict_kinds)
    dep = check_subset_dependency(ses, cfg.witness_limit)

    cx = SimplicialComplex(ses.universe, cfg.simplex_cap)
    for e in sorted(ses.interactions, key=len, reverse=True):
        cx.insert_closed(e)
    for i in range(len(ses.universe)):
        cx.insert_closed(Simplex._trusted((i,)))
    cx.freeze()
    report = cc.validate(cx, limit=cfg.witness_limit)

    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    target = cfg.output_dir / f"{document.stem}.complex"
    target.write_text(to_text(cx))

    higher = sum(classify_order(e) is OrderClass.HIGHER for e in ses.interactions)
    print(f"vertices: {len(ses.universe)} (social {len(ses.social_vertices)}, ecological {len(ses.ecological_vertices)})")
    print(f"interactions: {len(ses.interactions)} (lower-order {len(ses.interactions) - higher}, higher-order {higher})")
    print(f"constants: {len(ses.constants)}")
    if dep.holds:
        print("subset dependency: holds")
    else:
        print(f"subset dependency: fails ({dep.missing_total} missing subsets)")
        for s in dep.missing:
            print(f"  missing {{{_show(cx, s)}}}")
    print(f"complex: {len(cx)} members, dim={cx.dimension}, f-vector={' '.join(map(str, cc.f_vector(cx)))}")
    print("validation: ok" if report.ok else "validation: FAILED")
    for v in report.violations:
        print(f"  {v.describe(cx.universe)}")
    print(f"wrote {target}")
    if not report.ok or (cfg.strict_kinds and not dep.holds):
        return ExitCode.VALIDATION
    return ExitCode.OK


def cmd_query(complex_file: Path, query: str, p: int | None, cfg: RunConfig) -> int:
    cx = _read_complex(complex_file, cfg)
    if query != "skeleton" and p is not None:
        raise argparse.ArgumentTypeError(f"query {query!r} takes no argument")
    if query == "dimension":
        print(cx.dimension)
    elif query == "fvector":
        print(" ".join(map(str, cc.f_vector(cx))))
    elif query == "skeleton":
        if p is None:
            raise argparse.ArgumentTypeError("skeleton needs an order p")
        sys.stdout.write(to_text(cc.p_skeleton(cx, p)))
    else:
        if query == "facets":
            print(f"# facets: members of dimension {cx.dimension - 1} (dim - 1 definition)")
            items = cc.facets_paper(cx) if cx.dimension >= 1 else []
        elif query == "maximal":
            print("# maximal simplices: members contained in no other member")
            items = cc.maximal_simplices(cx)
        else:
            print("# boundary: members that are proper faces of another member")
            items = cc.boundary(cx)
        for s in items:
            print(_show(cx, s))
    return ExitCode.OK


def write_growth(run: GrowthRun, out: Path) -> dict:
    """Write ledger, per-step complexes and the manifest; return the manifest."""
    out.mkdir(parents=True, exist_ok=True)
    rows = run.ledger()
    (out / "ledger.csv").write_text(ledger_csv(rows))
    (out / "ledger.json").write_text(ledger_json(rows))
    files = {}
    for step in run.steps:
        name = f"step_{step.step}.complex"
        (out / name).write_text(to_text(step.cumulative))
        files[str(step.step)] = name
    net = run.network
    manifest = {
        "participants": list(net.universe.ids),
        "time_index": list(net.time_index),
        "static": net.is_static,
        "complexes": files,
        "ledger": ["ledger.csv", "ledger.json"],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest


def _print_ledger(run: GrowthRun) -> None:
    print("step\tinput\tsimplex\torder\toutput")
    for row in run.ledger():
        print(row.describe())


def cmd_evolve(n: int, last_step: int, names: str | None, cfg: RunConfig) -> int:
    ids = tuple(names.split(",")) if names else participant_ids(n)
    if len(ids) != n:
        raise SenError(f"--names lists {len(ids)} ids but n={n}")
    run = run_growth(ids, last_step, simplex_cap=cfg.simplex_cap)
    manifest = write_growth(run, cfg.output_dir)
    _print_ledger(run)
    kind = "static" if manifest["static"] else "dynamic"
    print(f"network: {kind}, time index {manifest['time_index']}, final f-vector "
          f"{' '.join(map(str, cc.f_vector(run.network.final())))}")
    print(f"wrote {cfg.output_dir}")
    return ExitCode.OK


def comparison(a: SimplicialComplex, b: SimplicialComplex) -> dict:
    collision = skeleton_collision(a, b)
    return {
        "graphs_identical": graphs_identical(to_underlying_graph(a), to_underlying_graph(b)),
        "skeleton_collision": collision.collides,
        "witness": None if collision.witness is None else list(a.label(collision.witness)),
        "witness_dimension": None if collision.witness is None else collision.witness.dimension,
        "loss_a": loss_report(a).to_dict(),
        "loss_b": loss_report(b).to_dict(),
    }


def comparison_text(a: SimplicialComplex, b: SimplicialComplex, name_a: str, name_b: str) -> str:
    doc = comparison(a, b)
    lines = [
        f"graphs identical: {str(doc['graphs_identical']).lower()}",
        f"skeleton collision: {str(doc['skeleton_collision']).lower()}",
    ]
    if doc["witness"] is None:
        lines.append("witness: none")
    else:
        lines.append(f"witness: {{{' '.join(doc['witness'])}}} (dim {doc['witness_dimension']})")
    text = "\n".join(lines) + "\n"
    text += f"--- {name_a}\n" + loss_report(a).to_table()
    text += f"--- {name_b}\n" + loss_report(b).to_table()
    return text


def cmd_compare(path_a: Path, path_b: Path, as_json: bool, cfg: RunConfig) -> int:
    a = _read_complex(path_a, cfg)
    b = _read_complex(path_b, cfg)
    if as_json:
        print(json.dumps(comparison(a, b), indent=2))
    else:
        sys.stdout.write(comparison_text(a, b, str(path_a), str(path_b)))
    return ExitCode.OK


def cmd_demo_saigata(cfg: RunConfig) -> int:
    out = cfg.output_dir
    run = run_growth(DEMO_PARTICIPANTS, 4, simplex_cap=cfg.simplex_cap)
    write_growth(run, out)
    for step in run.steps:
        graph = to_underlying_graph(step.cumulative)
        (out / f"step_{step.step}.tgf").write_text(to_tgf(graph))
        (out / f"loss_step_{step.step}.json").write_text(loss_report(step.cumulative).to_json())
    first, last = run.network.at(1), run.network.final()
    (out / "compare_step1_step4.txt").write_text(comparison_text(first, last, "step 1", "step 4"))
    (out / "compare_step1_step4.json").write_text(json.dumps(comparison(first, last), indent=2) + "\n")

    _print_ledger(run)
    print(f"final complex: {len(last)} members, dim={last.dimension}, "
          f"f-vector={' '.join(map(str, cc.f_vector(last)))}")
    print(f"step 1 underlying graph: {len(to_underlying_graph(first).edges)} edges")
    sys.stdout.write(comparison_text(first, last, "step 1", "step 4"))
    print(f"wrote {out}")
    return ExitCode.OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "build":
            return cmd_build(args.document, cfg)
        if args.command == "query":
            return cmd_query(args.complex_file, args.query, args.p, cfg)
        if args.command == "evolve":
            return cmd_evolve(args.n, args.last_step, args.names, cfg)
        if args.command == "compare":
            return cmd_compare(args.complex_a, args.complex_b, args.json, cfg)
        return cmd_demo_saigata(cfg)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"sesnet: error: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    except SenError as exc:
        print(f"sesnet: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
