"""Canonical representatives of Hadamard classes.

The canonical form of a matrix is the row-lex-minimal member of its
Hadamard class.  Two minimizers are provided:

* ``minclass`` — the reference: scans all 2^m·m! row monomials,
  normalizing columns for each.  Exact but exponential in the row
  count; it is the default for matrices of at most 5 rows.
* ``fast_minclass`` — grows minimal prefixes row by row, branching
  over candidate rows and their negations and merging branches that
  leave identical remaining rows.  Produces the identical matrix and
  is the default from 6 rows up.

Both can report a witness: an explicit (row op, column op) pair
mapping the input to its canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import kernels
from .core import HadamardPair, Matrix, Monomial
from .kernels._pure import (
    _apply_frame,
    _best_ext,
    _column_groups,
    _ext_frame,
)


@dataclass(frozen=True)
class CanonResult:
    minimal: Matrix
    witness: HadamardPair | None = None


def neg_normalize(mat: Matrix) -> Matrix:
    """Negate every column whose first nonzero entry is positive."""
    cols = []
    for col in zip(*mat):
        lead = next((e for e in col if e), 0)
        cols.append(tuple(-e for e in col) if lead > 0 else col)
    return tuple(zip(*cols))


def ord_normalize(mat: Matrix) -> Matrix:
    """Stable-sort the columns into ascending lexicographic order."""
    cols = sorted(zip(*mat))
    return tuple(zip(*cols))


def _col_witness(rows: Matrix, minimal: Matrix) -> Monomial:
    """The column monomial taking `rows` to `minimal` by Neg then Ord."""
    n = len(rows[0])
    cols = list(zip(*rows))
    sigma = [1] * n
    for j, col in enumerate(cols):
        lead = next((e for e in col if e), 0)
        if lead > 0:
            sigma[j] = -1
            cols[j] = tuple(-e for e in col)
    order = sorted(range(n), key=lambda j: (cols[j], j))
    assert tuple(zip(*(cols[j] for j in order))) == minimal
    return Monomial(tuple(order), tuple(sigma[j] for j in order))


def minclass(mat: Matrix, track_witness: bool = False) -> CanonResult:
    """Exhaustive minimization over all row monomials."""
    if not mat or not mat[0]:
        raise ValueError("matrix dimensions must be positive")
    if not track_witness:
        return CanonResult(kernels.minclass_scan(mat))
    m = len(mat)
    best = None
    best_op = None
    for perm in permutations(range(m)):
        pos = [mat[i] for i in perm]
        neg = [tuple(-e for e in row) for row in pos]
        for bits in range(1 << m):
            rows = tuple(
                neg[i] if bits >> (m - 1 - i) & 1 else pos[i] for i in range(m)
            )
            cand = kernels.ord_neg(rows)
            if best is None or cand < best:
                best = cand
                best_op = (perm, bits)
    perm, bits = best_op
    signs = tuple(-1 if bits >> (m - 1 - i) & 1 else 1 for i in range(m))
    row_op = Monomial(perm, signs)
    col_op = _col_witness(row_op.apply_to_rows(mat), best)
    return CanonResult(best, HadamardPair(row_op, col_op))


def is_minimal(mat: Matrix) -> bool:
    """True iff mat is the minimal member of its own Hadamard class."""
    return kernels.is_minimal(mat)


def canonical_form(mat: Matrix) -> Matrix:
    """Default canonicalizer: reference scan up to 5 rows, staged above.

    The exhaustive scan costs 2^m·m!, so from 6 rows on the staged
    minimizer (identical output) takes over.
    """
    if len(mat) <= 5:
        return kernels.minclass_scan(mat)
    return kernels.canonical_form(mat)


def _frame_monomial(sigma, order) -> Monomial:
    # frame maps destination t to source order[t] with sign sigma[order[t]]
    return Monomial(tuple(order), tuple(sigma[j] for j in order))


@dataclass(frozen=True)
class _Branch:
    rows: tuple            # remaining rows, rewritten in this branch's frame
    srcs: tuple            # original row index of each remaining row
    used: tuple            # (original row index, sign) per emitted row
    frame: Monomial        # accumulated column monomial


def fast_minclass(mat: Matrix, track_witness: bool = False) -> CanonResult:
    """Prefix-growing minimization; same output matrix as minclass."""
    if not track_witness:
        return CanonResult(kernels.canonical_form(mat))
    if not mat or not mat[0]:
        raise ValueError("matrix dimensions must be positive")
    m, n = len(mat), len(mat[0])

    # Stage 1: minimal single-row forms.
    best = min(kernels.row_min(row) for row in mat)
    whole = ((0, n, True),)
    branches: dict[tuple, _Branch] = {}
    for i in range(m):
        if kernels.row_min(mat[i]) != best:
            continue
        for sign in (1, -1):
            w = mat[i] if sign > 0 else tuple(-e for e in mat[i])
            sigma, order = _ext_frame(whole, w)
            frame = _frame_monomial(sigma, order)
            rest = sorted(
                (_apply_frame(mat[j], sigma, order), j)
                for j in range(m)
                if j != i
            )
            key = tuple(r for r, _ in rest)
            branches.setdefault(
                key,
                _Branch(key, tuple(j for _, j in rest), ((i, sign),), frame),
            )
    prefix = [best]

    for _ in range(1, m):
        groups = _column_groups(list(zip(*prefix)))
        best = None
        winners: list[tuple[_Branch, int, int]] = []
        for br in branches.values():
            seen = set()
            for ridx, u in enumerate(br.rows):
                if u in seen:
                    continue
                seen.add(u)
                for sign in (1, -1):
                    c = _best_ext(groups, u, sign < 0)
                    if best is None or c < best:
                        best, winners = c, [(br, ridx, sign)]
                    elif c == best:
                        winners.append((br, ridx, sign))
        new_branches: dict[tuple, _Branch] = {}
        for br, ridx, sign in winners:
            u = br.rows[ridx]
            w = tuple(-e for e in u) if sign < 0 else u
            sigma, order = _ext_frame(groups, w)
            stage_frame = _frame_monomial(sigma, order)
            rest = sorted(
                (_apply_frame(x, sigma, order), br.srcs[j])
                for j, x in enumerate(br.rows)
                if j != ridx
            )
            key = tuple(r for r, _ in rest)
            new_branches.setdefault(
                key,
                _Branch(
                    key,
                    tuple(j for _, j in rest),
                    br.used + ((br.srcs[ridx], sign),),
                    stage_frame.after(br.frame),
                ),
            )
        branches = new_branches
        prefix.append(best)

    minimal = tuple(prefix)
    done = next(iter(branches.values()))
    row_op = Monomial(
        tuple(i for i, _ in done.used), tuple(s for _, s in done.used)
    )
    return CanonResult(minimal, HadamardPair(row_op, done.frame))
