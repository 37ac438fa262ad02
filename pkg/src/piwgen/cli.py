"""Command-line front end.

Subcommands: nsoks, generate, canon, invariant, classify, decompose,
pipeline.  Results go to stdout or the requested files; progress and
diagnostics go to stderr.  Exit codes: 0 success, 2 usage error,
3 malformed input data, 1 anything else.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import canon, classify, invariant, pipeline, search
from .formats import (
    FormatError,
    emit_matrices_text,
    load_records,
    parse_matrices_text,
    parse_records,
    record_line,
)
from .nsoks import format_rep, nsoks


def _env_threads() -> int:
    try:
        return max(1, int(os.environ.get("PIWGEN_THREADS", "1")))
    except ValueError:
        return 1


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_nsoks(args) -> int:
    reps = nsoks(args.n, args.r, args.maxsq)
    if args.count_only:
        print(len(reps))
        return 0
    for rep in reps:
        print(format_rep(rep))
    print(f"total {len(reps)}")
    return 0


def _cmd_generate(args) -> int:
    threads = args.threads if args.threads is not None else _env_threads()
    mats = search.rep_piw(
        args.m, args.n, args.k,
        mindepth=args.mindepth,
        threads=threads,
        spill_dir=args.spill,
    )
    out = "".join(record_line(m, args.k) + "\n" for m in mats)
    _write_text(args.out, out)
    print(f"{len(mats)} matrices", file=sys.stderr)
    return 0


def _cmd_canon(args) -> int:
    mats = parse_matrices_text(_read_text(args.infile))
    if args.witness:
        import json

        lines = []
        for mat in mats:
            fn = canon.fast_minclass if args.fast else canon.minclass
            result = fn(mat, track_witness=True)
            lines.append(
                json.dumps(
                    {
                        "rows": [list(r) for r in result.minimal],
                        "witness": {
                            "row_perm": list(result.witness.row_op.perm),
                            "row_signs": list(result.witness.row_op.signs),
                            "col_perm": list(result.witness.col_op.perm),
                            "col_signs": list(result.witness.col_op.signs),
                        },
                    },
                    separators=(",", ":"),
                )
            )
        _write_text(args.out, "".join(line + "\n" for line in lines))
        return 0
    if args.fast:
        minimized = [canon.fast_minclass(mat).minimal for mat in mats]
    elif args.exhaustive:
        minimized = [canon.minclass(mat).minimal for mat in mats]
    else:
        minimized = [canon.canonical_form(mat) for mat in mats]
    _write_text(args.out, emit_matrices_text(minimized))
    return 0


def _cmd_invariant(args) -> int:
    import json

    records = parse_records(_read_text(args.infile))
    mats = [r.mat for r in records]
    if not mats:
        return 0
    bound = args.bound
    if bound is None:
        ks = {r.k for r in records}
        bound = invariant.default_bound(mats, ks.pop() if len(ks) == 1 else None)
    lines = []
    for i, mat in enumerate(mats):
        inv = invariant.code_invariant(mat, args.depth, bound)
        obj = {"index": i, "depth": args.depth, "bound": bound,
               "digest": inv.digest()}
        if args.full:
            obj["codes"] = [list(c) for c in inv.codes]
        lines.append(json.dumps(obj, separators=(",", ":")))
    _write_text(args.out, "".join(line + "\n" for line in lines))
    return 0


def _cmd_decompose(args) -> int:
    import json

    records = parse_records(_read_text(args.infile))
    lines = []
    for i, rec in enumerate(records):
        dec = classify.decompose(rec.mat)
        lines.append(
            json.dumps(
                {
                    "index": i,
                    "primitive": dec.primitive,
                    "blocks": [[list(r) for r in b] for b in dec.blocks],
                },
                separators=(",", ":"),
            )
        )
    _write_text(args.out, "".join(line + "\n" for line in lines))
    return 0


def _cmd_classify(args) -> int:
    records = load_records(args.infile)
    mats = [r.mat for r in records]
    ks = {r.k for r in records}
    if len(ks) > 1:
        raise ValueError(f"records carry different weights: {sorted(ks)}")
    k = ks.pop() if ks else 0
    h_classes = classify.dedup_h_classes(mats)
    th_classes = None
    square = bool(mats) and len(mats[0]) == len(mats[0][0])
    if args.th or args.decompose:
        if not square:
            raise ValueError("--th/--decompose need square matrices")
        th_classes = classify.dedup_th_classes(h_classes)
    if not mats:
        print("empty input: no classes")
        return 0
    m, n = len(mats[0]), len(mats[0][0])
    depth = min(3, m)
    bound = invariant.default_bound(mats, k if k else None)
    report = classify.build_report(
        m, n, k, h_classes,
        generated=len(mats),
        invariant_depth=depth,
        bound=bound,
        th_classes=th_classes,
        with_structure=args.decompose,
    )
    if args.report:
        _write_text(args.report, pipeline.report_records(report, args.display))
    sys.stdout.write(pipeline.report_text(report, args.display))
    return 0


def _cmd_pipeline(args) -> int:
    threads = args.threads if args.threads is not None else _env_threads()
    cfg = pipeline.PipelineConfig(
        m=args.m, n=args.n, k=args.k,
        mindepth=args.mindepth,
        invariant_depth=args.depth,
        bound=args.bound,
        threads=threads,
        spill_dir=args.spill,
        out_dir=args.out_dir,
        display=args.display,
    )
    report = pipeline.run_pipeline(cfg)
    sys.stdout.write(pipeline.report_text(report, cfg.display))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piwgen",
        description="Generate and classify integer weighing matrices "
        "up to Hadamard equivalence.",
    )
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="progress diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nsoks", help="sums of r nonnegative squares")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--maxsq", type=int, default=None,
                   help="largest allowed square value")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_nsoks)

    p = sub.add_parser("generate", help="enumerate PIW(m,n,k) representatives")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mindepth", type=int, default=None)
    p.add_argument("--out", default=None, help="records output (default stdout)")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--spill", default=None, help="spill directory for frontiers")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("canon", help="canonicalize matrices (text format)")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--fast", action="store_true",
                     help="prefix-growing minimizer")
    grp.add_argument("--exhaustive", action="store_true",
                     help="full row-monomial scan")
    p.add_argument("--witness", action="store_true",
                   help="emit JSON with an explicit equivalence witness")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("invariant", help="code-invariant digests (records)")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--full", action="store_true", help="include sorted code lists")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_invariant)

    p = sub.add_parser("decompose", help="block decomposition (records)")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("classify", help="H/TH classes of a records file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--th", action="store_true", help="merge transpose classes")
    p.add_argument("--decompose", action="store_true",
                   help="block structure labels (implies --th)")
    p.add_argument("--report", default=None, help="class records output file")
    p.add_argument("--display", choices=("canonical", "paper"),
                   default="canonical")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("pipeline", help="generate + classify + report")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mindepth", type=int, default=None)
    p.add_argument("--depth", type=int, default=None, help="invariant depth")
    p.add_argument("--bound", type=int, default=None, help="invariant entry bound")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--spill", default=None)
    p.add_argument("--out-dir", default=None, help="persist all stage outputs")
    p.add_argument("--display", choices=("canonical", "paper"),
                   default="canonical")
    p.set_defaults(fn=_cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose or args.command in ("generate", "pipeline")
        else logging.WARNING,
        format="%(message)s",
    )
    try:
        return args.fn(args)
    except FormatError as exc:
        print(f"piwgen: input error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"piwgen: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
