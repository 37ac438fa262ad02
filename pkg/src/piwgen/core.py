"""Exact integer matrices and Hadamard (monomial) operations.

A matrix is an immutable tuple of row tuples with plain Python integer
entries.  Equality, hashing and the row-lex total order then come
straight from tuple comparison, which keeps the comparison-heavy search
paths cheap.  Rows are 0-indexed in code.

All arithmetic is exact: entries are arbitrary-precision Python ints,
so nothing here can overflow or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

Row = tuple[int, ...]
Matrix = tuple[Row, ...]


def matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    """Build a validated matrix from any nested iterable of integers."""
    mat = tuple(tuple(row) for row in rows)
    if not mat or not mat[0]:
        raise ValueError("matrix dimensions must be positive")
    n = len(mat[0])
    for i, row in enumerate(mat):
        if len(row) != n:
            raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
        for e in row:
            if not isinstance(e, int):
                raise TypeError(f"non-integer entry {e!r} in row {i + 1}")
    return mat


def dims(mat: Matrix) -> tuple[int, int]:
    return len(mat), len(mat[0])


def row_lex_compare(a: Matrix, b: Matrix) -> int:
    """Total order on same-shape matrices: -1, 0 or 1.

    Rows are compared entrywise-lexicographically and the matrices as
    sequences of rows, i.e. plain tuple comparison.
    """
    if dims(a) != dims(b):
        raise ValueError(f"dimension mismatch: {dims(a)} vs {dims(b)}")
    if a == b:
        return 0
    return -1 if a < b else 1


def transpose(mat: Matrix) -> Matrix:
    return tuple(zip(*mat))


def gram(mat: Matrix) -> Matrix:
    """The exact Gram matrix M Mᵀ."""
    return tuple(
        tuple(sum(x * y for x, y in zip(r, s)) for s in mat) for r in mat
    )


def is_piw(mat: Matrix, k: int) -> bool:
    """True iff M Mᵀ = k·I: rows pairwise orthogonal, each of weight k."""
    m = len(mat)
    g = gram(mat)
    return all(g[i][j] == (k if i == j else 0) for i in range(m) for j in range(m))


def prefix(mat: Matrix, i: int) -> Matrix:
    """The submatrix of the first i rows (1-based count)."""
    if not 1 <= i <= len(mat):
        raise IndexError(f"prefix length {i} out of range 1..{len(mat)}")
    return mat[:i]


def augment(mat: Matrix, v: Row) -> Matrix:
    """Append v as a new last row."""
    if len(v) != len(mat[0]):
        raise ValueError(f"row length {len(v)} does not match width {len(mat[0])}")
    return mat + (tuple(v),)


@dataclass(frozen=True)
class Monomial:
    """A signed permutation: entry (i, perm[i]) equals signs[i].

    Acting on rows, row i of the result is signs[i] times row perm[i]
    of the input; the column action is the mirror image.  Negating a
    zero row or column is the identity, so signs carry no information
    on zero lines.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        s = len(self.perm)
        if sorted(self.perm) != list(range(s)):
            raise ValueError("perm is not a permutation of 0..s-1")
        if len(self.signs) != s or any(e not in (-1, 1) for e in self.signs):
            raise ValueError("signs must be a ±1 vector matching perm")

    @property
    def size(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, s: int) -> "Monomial":
        return cls(tuple(range(s)), (1,) * s)

    def inverse(self) -> "Monomial":
        s = self.size
        perm = [0] * s
        signs = [1] * s
        for i, j in enumerate(self.perm):
            perm[j] = i
            signs[j] = self.signs[i]
        return Monomial(tuple(perm), tuple(signs))

    def after(self, other: "Monomial") -> "Monomial":
        """The composite that applies `other` first, then self."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        perm = tuple(other.perm[self.perm[i]] for i in range(self.size))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]]
                      for i in range(self.size))
        return Monomial(perm, signs)

    def apply_to_rows(self, mat: Matrix) -> Matrix:
        if self.size != len(mat):
            raise ValueError("row count does not match monomial size")
        return tuple(
            tuple(self.signs[i] * e for e in mat[self.perm[i]])
            for i in range(self.size)
        )

    def apply_to_cols(self, mat: Matrix) -> Matrix:
        if self.size != len(mat[0]):
            raise ValueError("column count does not match monomial size")
        return tuple(
            tuple(self.signs[j] * row[self.perm[j]] for j in range(self.size))
            for row in mat
        )


class HadamardPair(NamedTuple):
    """A row monomial and a column monomial acting together on a matrix."""

    row_op: Monomial
    col_op: Monomial

    @classmethod
    def identity(cls, m: int, n: int) -> "HadamardPair":
        return cls(Monomial.identity(m), Monomial.identity(n))


def apply_hadamard(mat: Matrix, pair: HadamardPair) -> Matrix:
    """Apply a (row op, column op) pair; the result stays in [M]."""
    return pair.col_op.apply_to_cols(pair.row_op.apply_to_rows(mat))
