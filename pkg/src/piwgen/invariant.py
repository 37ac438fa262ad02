"""A cheap Hadamard invariant from minimized row-submatrices.

Every d-row submatrix (rows chosen in increasing index order, all
columns) is canonicalized and packed column-wise into exact integers
in balanced base b = 2L+1, where L bounds the entry magnitudes.  The
multiset of these code vectors over all C(m, d) row choices is
invariant under Hadamard operations, and cheap enough to split a large
generator output into classes before exact comparisons are made.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from . import canon
from .core import Matrix

CodeVector = tuple[int, ...]


def code(mat: Matrix, bound: int) -> CodeVector:
    """Pack each column into one integer, base 2·bound+1, top row first.

    The packing is injective on matrices with entries in [-bound, bound];
    `decode` inverts it exactly.
    """
    b = 2 * bound + 1
    out = []
    for col in zip(*mat):
        acc = 0
        for e in col:
            if abs(e) > bound:
                raise ValueError(f"entry {e} exceeds bound {bound}")
            acc = acc * b + e
        out.append(acc)
    return tuple(out)


def decode(vec: CodeVector, bound: int, depth: int) -> Matrix:
    """Invert `code`: recover the depth×len(vec) matrix exactly."""
    b = 2 * bound + 1
    cols = []
    for acc in vec:
        col = []
        for _ in range(depth):
            digit = (acc + bound) % b - bound
            col.append(digit)
            acc = (acc - digit) // b
        if acc != 0:
            raise ValueError(f"code {vec} does not decode at depth {depth}")
        cols.append(tuple(reversed(col)))
    return tuple(zip(*cols))


def default_bound(mats, k: int | None = None) -> int:
    """Uniform entry bound for a compared collection.

    ⌊√k⌋ when the weight is known (the largest possible PIW entry),
    otherwise the observed maximum magnitude.  The same bound must be
    used across every matrix that is to be compared.
    """
    if k is not None:
        return max(1, isqrt(k))
    observed = max((abs(e) for mat in mats for row in mat for e in row), default=0)
    return max(1, observed)


@dataclass(frozen=True)
class CodeInvariant:
    depth: int
    bound: int
    codes: tuple[CodeVector, ...]

    def digest(self) -> str:
        payload = f"{self.depth}|{self.bound}|{self.codes}".encode()
        return hashlib.sha256(payload).hexdigest()[:16]


def code_invariant(mat: Matrix, depth: int, bound: int) -> CodeInvariant:
    """Multiset of codes of the minimized d-row submatrices of mat."""
    m = len(mat)
    if depth > m:
        raise ValueError(f"depth {depth} exceeds row count {m}")
    codes = sorted(
        code(canon.canonical_form(tuple(mat[i] for i in rows)), bound)
        for rows in combinations(range(m), depth)
    )
    return CodeInvariant(depth, bound, tuple(codes))


def partition_by_invariant(
    mats: list[Matrix], depth: int, bound: int | None = None, k: int | None = None
) -> list[list[Matrix]]:
    """Group matrices by equal code invariant.

    Matrices in different groups are certainly Hadamard-inequivalent;
    a shared group still needs canonical-form confirmation.  Groups are
    ordered by their row-lex-smallest member.
    """
    if not mats:
        return []
    shapes = {(len(m), len(m[0])) for m in mats}
    if len(shapes) > 1:
        raise ValueError(f"mixed dimensions: {sorted(shapes)}")
    if bound is None:
        bound = default_bound(mats, k)
    groups: dict[CodeInvariant, list[Matrix]] = {}
    for mat in mats:
        groups.setdefault(code_invariant(mat, depth, bound), []).append(mat)
    return sorted(groups.values(), key=min)
