"""Level-by-level generation of PIW(m, n, k) Hadamard representatives.

The search extends minimal prefixes one row at a time.  A single
reservoir holds every weight-k row of length n, sorted ascending; a
node is a prefix (stored as reservoir indices) plus the indices of the
rows that may still extend it.  Each level filters the parent's
candidate list by one new orthogonality constraint and the
strictly-increasing-rows rule, so the full reservoir is scanned only
once, at the first level.

While the extended parent has at most `mindepth` rows, every extension
must pass the full minimality test.  At the first level past that,
only rows beginning with a negative entry are appended: every row of a
minimal matrix begins negative, and [X, w] and [X, -w] differ by one
row negation, so positive-leading extensions cannot contribute a class
that is not already represented.  Deeper rows are appended
unconditionally.  This trades duplicate final representatives for
speed; with mindepth = m the output is exactly one minimal matrix per
Hadamard class, in ascending order.
"""

from __future__ import annotations

import json
import logging
import multiprocessing
import os
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator

import numpy as np

from . import kernels
from .core import Matrix, Row
from .nsoks import SquareRep, expand, nsoks, rep_to_minimal_row

log = logging.getLogger("piwgen.search")

# Nodes buffered in memory per level before a spill directory is used.
SPILL_LIMIT = int(os.environ.get("PIWGEN_SPILL_LIMIT", "100000"))


def _multiset_perms(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a value multiset."""
    pool = sorted(values, reverse=True)
    n = len(pool)
    out: list[int] = []

    def rec(remaining: list[int]):
        if len(out) == n:
            yield tuple(out)
            return
        prev = None
        for idx, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            out.append(v)
            yield from rec(remaining[:idx] + remaining[idx + 1 :])
            out.pop()

    yield from rec(pool)


def signed_perms(rep: SquareRep, n_cols: int) -> list[Row]:
    """All distinct rows realizing rep: permutations plus entry negations.

    Zeros are never negated, so each row appears exactly once.  The
    result is sorted ascending.
    """
    if sum(m for _, m in rep) != n_cols:
        raise ValueError(
            f"rep has {sum(m for _, m in rep)} parts, expected {n_cols}"
        )
    rows: list[Row] = []
    for arrangement in _multiset_perms(expand(rep)):
        signable = [j for j, v in enumerate(arrangement) if v]
        for signs in product((1, -1), repeat=len(signable)):
            row = list(arrangement)
            for j, s in zip(signable, signs):
                row[j] = s * row[j]
            rows.append(tuple(row))
    rows.sort()
    return rows


@dataclass
class Reservoir:
    """Every weight-k row of length n, sorted ascending."""

    n: int
    k: int
    rows: list[Row]
    arr: np.ndarray
    index: dict[Row, int]

    @classmethod
    def build(cls, n: int, k: int) -> "Reservoir":
        rows: list[Row] = []
        for rep in nsoks(k, n):
            rows.extend(signed_perms(rep, n))
        rows.sort()
        arr = np.array(rows, dtype=np.int32) if rows else np.empty((0, n), np.int32)
        return cls(n, k, rows, arr, {row: i for i, row in enumerate(rows)})

    def materialize(self, idxs: Iterable[int]) -> Matrix:
        return tuple(self.rows[i] for i in idxs)


def _filter_candidates(arr: np.ndarray, cand: np.ndarray, last: int) -> np.ndarray:
    """Candidates above `last` in the reservoir order and orthogonal to it."""
    cand = cand[cand > last]
    if cand.size == 0:
        return cand
    keep = arr[cand] @ arr[last] == 0
    return cand[keep]


@dataclass
class LevelStats:
    level: int
    nodes: int = 0
    candidates: int = 0
    tested: int = 0
    kept: int = 0
    elapsed: float = 0.0


# Worker globals, installed once per process by _init_worker.
_W: dict = {}


def _init_worker(reservoir: Reservoir, m: int, mindepth: int) -> None:
    _W["res"] = reservoir
    _W["m"] = m
    _W["mindepth"] = mindepth


def _begins_negative(row: Row) -> bool:
    lead = next((e for e in row if e), 0)
    return lead < 0


def _expand_node(node: tuple[tuple[int, ...], np.ndarray]):
    """Children of one node: (next-level nodes, finished matrices, stats)."""
    res: Reservoir = _W["res"]
    m: int = _W["m"]
    mindepth: int = _W["mindepth"]
    rows_idx, cand = node
    p = len(rows_idx)
    test = p <= mindepth
    transition = p == mindepth + 1
    children = []
    outputs = []
    tested = 0
    for w in cand.tolist():
        new_rows = rows_idx + (w,)
        if test:
            tested += 1
            if not kernels.is_minimal(res.materialize(new_rows)):
                continue
        elif transition and not _begins_negative(res.rows[w]):
            continue
        if p + 1 == m:
            outputs.append(new_rows)
        else:
            child_cand = _filter_candidates(res.arr, cand, w)
            if child_cand.size:
                children.append((new_rows, child_cand))
    return children, outputs, (len(cand), tested)


class _FrontierStore:
    """Level frontier that spills to disk beyond a node budget."""

    def __init__(self, spill_dir: str | None, level: int, limit: int | None = None):
        self.buffer: list = []
        self.spill_dir = spill_dir
        self.level = level
        self.limit = SPILL_LIMIT if limit is None else limit
        self.path = None
        self.count = 0

    def extend(self, nodes) -> None:
        self.buffer.extend(nodes)
        self.count += len(nodes)
        if self.spill_dir and len(self.buffer) > self.limit:
            self._flush()

    def _flush(self) -> None:
        if self.path is None:
            os.makedirs(self.spill_dir, exist_ok=True)
            self.path = os.path.join(self.spill_dir, f"frontier-{self.level}.jsonl")
            # fresh file per level; an old run's leftovers must not leak in
            open(self.path, "w").close()
        with open(self.path, "a", encoding="utf-8") as fh:
            for rows_idx, cand in self.buffer:
                fh.write(json.dumps([list(rows_idx), cand.tolist()]) + "\n")
        self.buffer.clear()

    def finalize(self) -> None:
        if self.path is not None:
            self._flush()
        else:
            self.buffer.sort(key=lambda node: node[0])

    def __len__(self) -> int:
        return self.count

    def __iter__(self):
        if self.path is None:
            yield from self.buffer
            return
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                rows_idx, cand = json.loads(line)
                yield tuple(rows_idx), np.array(cand, dtype=np.int64)

    def cleanup(self) -> None:
        if self.path is not None and os.path.exists(self.path):
            os.remove(self.path)


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    chunk: list = []
    for item in it:
        chunk.append(item)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def rep_piw(
    m: int,
    n: int,
    k: int,
    mindepth: int | None = None,
    threads: int = 1,
    spill_dir: str | None = None,
    progress: Callable[[LevelStats], None] | None = None,
) -> list[Matrix]:
    """Representatives of the Hadamard classes of PIW(m, n, k).

    With the default mindepth = m, exactly the minimal matrices, one
    per class, ascending.  With mindepth = d < m, a superset containing
    all minimal matrices: prefixes of depth up to d+1 are forced
    minimal, the row at depth d+2 must begin with a negative entry,
    and deeper rows are any valid strictly-increasing orthogonal
    extensions.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if k < 1:
        raise ValueError("k must be positive")
    if mindepth is None:
        mindepth = m
    if not 1 <= mindepth <= m:
        raise ValueError(f"need 1 <= mindepth <= m, got {mindepth}")
    if threads < 1:
        raise ValueError("threads must be >= 1")

    reps = nsoks(k, n)
    if not reps:
        return []
    res = Reservoir.build(n, k)
    first_rows = sorted(rep_to_minimal_row(rep, n) for rep in reps)
    if m == 1:
        return [(row,) for row in first_rows]

    all_idx = np.arange(len(res.rows), dtype=np.int64)
    frontier: Iterable = []
    stats0 = LevelStats(level=1, nodes=len(first_rows))
    t0 = time.perf_counter()
    level1 = []
    for row in first_rows:
        i = res.index[row]
        cand = _filter_candidates(res.arr, all_idx, i)
        stats0.candidates += cand.size
        if cand.size:
            level1.append(((i,), cand))
    stats0.kept = len(level1)
    stats0.elapsed = time.perf_counter() - t0
    _report(stats0, progress)
    frontier = level1

    _init_worker(res, m, mindepth)
    pool = None
    if threads > 1:
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = multiprocessing.get_context()
        pool = ctx.Pool(threads, initializer=_init_worker, initargs=(res, m, mindepth))

    outputs: list[tuple[int, ...]] = []
    try:
        for p in range(1, m):
            t0 = time.perf_counter()
            stats = LevelStats(level=p + 1)
            store = _FrontierStore(spill_dir, p + 1)
            if pool is None:
                results = map(_expand_node, frontier)
            else:
                results = pool.imap(_expand_node, frontier, chunksize=16)
            for children, outs, (ncand, ntested) in results:
                stats.nodes += 1
                stats.candidates += ncand
                stats.tested += ntested
                outputs.extend(outs)
                store.extend(children)
            store.finalize()
            stats.kept = len(store) if p + 1 < m else len(outputs)
            stats.elapsed = time.perf_counter() - t0
            _report(stats, progress)
            if isinstance(frontier, _FrontierStore):
                frontier.cleanup()
            frontier = store
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if isinstance(frontier, _FrontierStore):
            frontier.cleanup()

    outputs.sort()
    return [res.materialize(rows_idx) for rows_idx in outputs]


def _report(stats: LevelStats, progress) -> None:
    log.info(
        "level %d: nodes=%d candidates=%d tested=%d kept=%d elapsed=%.2fs",
        stats.level, stats.nodes, stats.candidates, stats.tested,
        stats.kept, stats.elapsed,
    )
    if progress is not None:
        progress(stats)
