"""End-to-end pipeline: generate, pre-filter, classify, report.

Every stage output can be persisted; identical configurations produce
byte-identical files regardless of the thread count, because all
results are deterministically ordered and diagnostics go to the log
stream only.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass

from . import canon, classify, invariant, search
from .core import Matrix
from .formats import record_line

log = logging.getLogger("piwgen.pipeline")


@dataclass
class PipelineConfig:
    m: int
    n: int
    k: int
    mindepth: int | None = None
    invariant_depth: int | None = None  # effective depth is min(3, m) if None
    bound: int | None = None
    threads: int = 1
    spill_dir: str | None = None
    out_dir: str | None = None
    display: str = "canonical"  # or "paper"

    def validate(self) -> None:
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.k < 1:
            raise ValueError("k must be positive")
        md = self.m if self.mindepth is None else self.mindepth
        if not 1 <= md <= self.m:
            raise ValueError(f"need 1 <= mindepth <= m, got {md}")
        if self.invariant_depth is not None and not 1 <= self.invariant_depth <= self.m:
            raise ValueError(f"need 1 <= invariant depth <= m, got {self.invariant_depth}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.display not in ("canonical", "paper"):
            raise ValueError(f"unknown display mode {self.display!r}")

    @property
    def effective_depth(self) -> int:
        return min(3, self.m) if self.invariant_depth is None else self.invariant_depth


def _check_invariant_refinement(
    groups: list[list[Matrix]], reps: dict[Matrix, Matrix]
) -> None:
    """Each H-class must sit inside a single invariant group."""
    seen: dict[Matrix, int] = {}
    for gi, group in enumerate(groups):
        for mat in group:
            rep = reps[mat]
            if seen.setdefault(rep, gi) != gi:
                raise RuntimeError(
                    "invariant cross-check failed: one Hadamard class spans "
                    "two invariant groups"
                )


def run_pipeline(cfg: PipelineConfig) -> classify.ClassificationReport:
    """Generate, partition by invariant, dedup, TH-merge, decompose, report."""
    cfg.validate()
    depth = cfg.effective_depth
    bound = cfg.bound if cfg.bound is not None else invariant.default_bound([], cfg.k)

    mats = search.rep_piw(
        cfg.m, cfg.n, cfg.k,
        mindepth=cfg.mindepth,
        threads=cfg.threads,
        spill_dir=cfg.spill_dir,
    )
    log.info("generated %d matrices", len(mats))

    groups = invariant.partition_by_invariant(mats, depth, bound)
    log.info("invariant partition: %d groups", len(groups))

    h_classes = classify.dedup_h_classes(mats)
    log.info("%d Hadamard classes", len(h_classes))

    if mats:
        reps = {mat: canon.canonical_form(mat) for mat in set(mats)}
        _check_invariant_refinement(groups, reps)

    th_classes = None
    if cfg.m == cfg.n:
        th_classes = classify.dedup_th_classes(h_classes)
        log.info("%d transpose-Hadamard classes", len(th_classes))

    report = classify.build_report(
        cfg.m, cfg.n, cfg.k, h_classes,
        generated=len(mats),
        invariant_depth=depth,
        bound=bound,
        invariant_groups=len(groups),
        th_classes=th_classes,
    )
    if report.primitive_count is not None:
        log.info("%d primitive classes", report.primitive_count)

    if cfg.out_dir is not None:
        _persist(cfg, mats, report)
    return report


def _rows(mat: Matrix) -> list[list[int]]:
    return [list(r) for r in mat]


def _persist(cfg, mats, report: classify.ClassificationReport) -> None:
    out = cfg.out_dir
    os.makedirs(out, exist_ok=True)

    def write(name: str, text: str) -> None:
        with open(os.path.join(out, name), "w", encoding="utf-8") as fh:
            fh.write(text)

    write("generated.jsonl", "".join(record_line(m, cfg.k) + "\n" for m in mats))
    write(
        "invariant.jsonl",
        "".join(
            json.dumps(
                {
                    "index": i,
                    "digest": invariant.code_invariant(
                        m, report.invariant_depth, report.bound
                    ).digest(),
                },
                separators=(",", ":"),
            )
            + "\n"
            for i, m in enumerate(mats)
        ),
    )
    write(
        "hclasses.jsonl",
        "".join(
            json.dumps(
                {"rows": _rows(h.representative), "members": h.members},
                separators=(",", ":"),
            )
            + "\n"
            for h in report.h_classes
        ),
    )
    if report.th_classes is not None:
        write(
            "thclasses.jsonl",
            "".join(
                json.dumps(
                    {
                        "rows": _rows(t.representative),
                        "self_transpose": t.self_transpose,
                        "members": t.members,
                        "h_classes": len(t.h_classes),
                    },
                    separators=(",", ":"),
                )
                + "\n"
                for t in report.th_classes
            ),
        )
    write("report.jsonl", report_records(report, cfg.display))
    write("report.json", report_summary(report) + "\n")
    write("report.txt", report_text(report, cfg.display))


def report_records(report: classify.ClassificationReport, display: str = "canonical") -> str:
    lines = []
    for c in report.classes:
        obj = {
            "index": c.index,
            "rows": _rows(c.representative),
            "members": c.members,
            "invariant_digest": c.invariant_digest,
        }
        if display == "paper":
            obj["display_rows"] = _rows(classify.paper_display(c.representative))
        if c.self_transpose is not None:
            obj["self_transpose"] = c.self_transpose
        if c.primitive is not None:
            obj["primitive"] = c.primitive
            obj["label"] = c.label
            obj["type"] = c.type_label
        lines.append(json.dumps(obj, separators=(",", ":")))
    return "".join(line + "\n" for line in lines)


def report_summary(report: classify.ClassificationReport) -> str:
    obj = {
        "m": report.m,
        "n": report.n,
        "k": report.k,
        "generated": report.generated,
        "invariant_depth": report.invariant_depth,
        "bound": report.bound,
        "invariant_groups": report.invariant_groups,
        "h_classes": len(report.h_classes),
        "th_classes": len(report.th_classes) if report.th_classes is not None else None,
        "primitive": report.primitive_count,
        "table": [[t, c] for t, c in report.table] if report.table else None,
    }
    return json.dumps(obj, separators=(",", ":"))


def report_text(report: classify.ClassificationReport, display: str = "canonical") -> str:
    """Human-readable summary with the type/multiplicity table."""
    lines = [
        f"PIW({report.m},{report.n},{report.k}): "
        f"{report.generated} generated, "
        f"{report.invariant_groups} invariant groups, "
        f"{len(report.h_classes)} H-classes"
        + (
            f", {len(report.th_classes)} TH-classes"
            if report.th_classes is not None
            else ""
        )
    ]
    if report.table is not None:
        lines.append("")
        width = max((len(t) for t, _ in report.table), default=4)
        lines.append(f"{'Type':<{width}} | Multiplicity")
        lines.append("-" * (width + 15))
        for type_label, count in report.table:
            lines.append(f"{type_label:<{width}} | {count}")
        lines.append("-" * (width + 15))
        lines.append(f"{'total':<{width}} | {sum(c for _, c in report.table)}")
        lines.append(f"primitive: {report.primitive_count}")
    if report.classes:
        lines.append("")
        for c in report.classes:
            head = f"class {c.index}: members={c.members}"
            if c.label is not None:
                head += f" label={c.label}"
            if c.self_transpose is not None:
                head += f" self_transpose={c.self_transpose}"
            lines.append(head)
            shown = (
                classify.paper_display(c.representative)
                if display == "paper"
                else c.representative
            )
            for row in shown:
                lines.append("  " + " ".join(f"{e:3d}" for e in row))
    return "\n".join(lines) + "\n"
