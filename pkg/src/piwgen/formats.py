"""Matrix file formats.

Two formats are supported:

* text — one matrix is m lines of n space-separated signed decimal
  integers; matrices are separated by a single blank line.
* records — one JSON object per line with fields ``m``, ``n``, ``k``
  and ``rows`` (array of arrays of integers).

Parsers reject malformed input with the offending line number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .core import Matrix, matrix


class FormatError(ValueError):
    """Malformed matrix file; `line` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class MatrixRecord:
    mat: Matrix
    k: int


def parse_matrices_text(text: str) -> list[Matrix]:
    mats: list[Matrix] = []
    block: list[tuple[int, ...]] = []
    block_start = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if block:
                mats.append(tuple(block))
                block = []
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise FormatError(lineno, f"not a row of integers: {raw!r}") from None
        if not block:
            block_start = lineno
        elif len(row) != len(block[0]):
            raise FormatError(
                lineno,
                f"row has {len(row)} entries, expected {len(block[0])} "
                f"(matrix starting at line {block_start})",
            )
        block.append(row)
    if block:
        mats.append(tuple(block))
    return mats


def emit_matrices_text(mats: Iterable[Matrix]) -> str:
    blocks = ["\n".join(" ".join(str(e) for e in row) for row in mat) for mat in mats]
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def parse_records(text: str) -> list[MatrixRecord]:
    records: list[MatrixRecord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(lineno, f"invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise FormatError(lineno, "record is not a JSON object")
        missing = {"m", "n", "k", "rows"} - obj.keys()
        if missing:
            raise FormatError(lineno, f"missing fields: {sorted(missing)}")
        try:
            mat = matrix(obj["rows"])
        except (ValueError, TypeError) as exc:
            raise FormatError(lineno, str(exc)) from None
        if len(mat) != obj["m"] or len(mat[0]) != obj["n"]:
            raise FormatError(
                lineno,
                f"declared shape {obj['m']}x{obj['n']} does not match rows "
                f"{len(mat)}x{len(mat[0])}",
            )
        if not isinstance(obj["k"], int):
            raise FormatError(lineno, "field k must be an integer")
        records.append(MatrixRecord(mat, obj["k"]))
    return records


def record_line(mat: Matrix, k: int) -> str:
    obj = {"m": len(mat), "n": len(mat[0]), "k": k,
           "rows": [list(row) for row in mat]}
    return json.dumps(obj, separators=(",", ":"))


def emit_records(mats: Iterable[Matrix], k: int) -> str:
    return "".join(record_line(mat, k) + "\n" for mat in mats)


def load_records(path) -> list[MatrixRecord]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_records(fh.read())


def save_records(path, mats: Iterable[Matrix], k: int) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_records(mats, k))
