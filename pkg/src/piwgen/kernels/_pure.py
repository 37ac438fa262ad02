"""Pure-Python canonicalization kernels.

Same interface as the compiled extension ``piwgen.kernels._fast``.

The staged functions grow the row-lex-minimal matrix of a Hadamard
class one row at a time.  At every depth there is a single current
minimal prefix; a *branch* records one way of reaching it, as the
multiset of the not-yet-used rows rewritten in that branch's column
frame (the column permutation/negations applied so far).  Keeping the
rewritten rows themselves, rather than row indices, is what makes
branches comparable and mergeable: two derivations that leave behind
identical remaining rows are interchangeable from here on.
"""

from __future__ import annotations

from itertools import permutations

BACKEND = "python"


def row_min(v) -> tuple:
    """Minimal form of a single row: non-positive entries, ascending."""
    return tuple(sorted(-abs(e) for e in v))


def _leading_positive(col) -> bool:
    for e in col:
        if e:
            return e > 0
    return False


def ord_neg(mat) -> tuple:
    """Negate positive-leading columns, then sort columns ascending."""
    cols = [
        tuple(-e for e in col) if _leading_positive(col) else col
        for col in zip(*mat)
    ]
    cols.sort()
    return tuple(zip(*cols))


def minclass_scan(mat) -> tuple:
    """Reference minimizer: exhaust all 2^m·m! row monomials.

    Permutations are visited in lexicographic order and sign patterns
    in binary order (bit i of the counter flips row i); the minimum is
    unique so the scan order never changes the result.
    """
    if not mat or not mat[0]:
        raise ValueError("matrix dimensions must be positive")
    m = len(mat)
    best = None
    for perm in permutations(range(m)):
        pos = [mat[i] for i in perm]
        neg = [tuple(-e for e in row) for row in pos]
        for bits in range(1 << m):
            rows = tuple(
                neg[i] if bits >> (m - 1 - i) & 1 else pos[i] for i in range(m)
            )
            cand = ord_neg(rows)
            if best is None or cand < best:
                best = cand
    return best


def _column_groups(prefix_cols):
    """Runs of equal columns as (start, end, is_zero) triples."""
    groups = []
    n = len(prefix_cols)
    start = 0
    for j in range(1, n + 1):
        if j == n or prefix_cols[j] != prefix_cols[start]:
            zero = not any(prefix_cols[start])
            groups.append((start, j, zero))
            start = j
    return groups


def _best_ext(groups, u, negate):
    """Minimal last row of [prefix, ±u] under column ops fixing the prefix.

    Columns may only be permuted within prefix-equal groups; columns
    that are zero throughout the prefix may also be negated.
    """
    out = []
    for a, b, zero in groups:
        if zero:
            seg = sorted(-abs(u[j]) for j in range(a, b))
        elif negate:
            seg = sorted(-u[j] for j in range(a, b))
        else:
            seg = sorted(u[j] for j in range(a, b))
        out.extend(seg)
    return tuple(out)


def _ext_frame(groups, w):
    """A column frame (signs by source, source order) realizing _best_ext.

    w is the already row-signed candidate; ties are broken by source
    index so the frame is deterministic.
    """
    n = groups[-1][1]
    sigma = [1] * n
    order = []
    for a, b, zero in groups:
        idx = list(range(a, b))
        if zero:
            for j in idx:
                if w[j] > 0:
                    sigma[j] = -1
            idx.sort(key=lambda j: (-abs(w[j]), j))
        else:
            idx.sort(key=lambda j: (w[j], j))
        order.extend(idx)
    return tuple(sigma), tuple(order)


def _apply_frame(x, sigma, order):
    return tuple(sigma[j] * x[j] for j in order)


def _stage_one(mat):
    """Minimal first row plus the branch states that realize it."""
    m = len(mat)
    best = None
    winners = []
    for i in range(m):
        c = row_min(mat[i])
        if best is None or c < best:
            best, winners = c, [i]
        elif c == best:
            winners.append(i)
    states = set()
    for i in winners:
        for sign in (1, -1):
            w = mat[i] if sign > 0 else tuple(-e for e in mat[i])
            sigma, order = _ext_frame(((0, len(w), True),), w)
            rest = sorted(
                _apply_frame(mat[j], sigma, order) for j in range(m) if j != i
            )
            states.add(tuple(rest))
    return best, states


def _check(mat):
    if not mat or not mat[0]:
        raise ValueError("matrix dimensions must be positive")


def canonical_form(mat) -> tuple:
    """The row-lex-minimal member of the Hadamard class of mat."""
    _check(mat)
    m = len(mat)
    best, states = _stage_one(mat)
    prefix = [best]
    for _ in range(1, m):
        groups = _column_groups(list(zip(*prefix)))
        best = None
        winners = []
        for st in states:
            seen = set()
            for ridx, u in enumerate(st):
                if u in seen:
                    continue
                seen.add(u)
                for negate in (False, True):
                    c = _best_ext(groups, u, negate)
                    if best is None or c < best:
                        best, winners = c, [(st, ridx, negate)]
                    elif c == best:
                        winners.append((st, ridx, negate))
        states = set()
        for st, ridx, negate in winners:
            u = st[ridx]
            w = tuple(-e for e in u) if negate else u
            sigma, order = _ext_frame(groups, w)
            rest = sorted(
                _apply_frame(x, sigma, order)
                for j, x in enumerate(st)
                if j != ridx
            )
            states.add(tuple(rest))
        prefix.append(best)
    return tuple(prefix)


def is_minimal(mat) -> bool:
    """True iff mat equals the minimal member of its Hadamard class.

    Same staged walk as canonical_form, but aborts as soon as the
    growing minimal prefix departs from mat's own rows (it can only
    ever be smaller, never larger).
    """
    _check(mat)
    m = len(mat)
    best, states = _stage_one(mat)
    if best != mat[0]:
        return False
    for depth in range(1, m):
        target = mat[depth]
        groups = _column_groups(list(zip(*mat[:depth])))
        winners = []
        for st in states:
            seen = set()
            for ridx, u in enumerate(st):
                if u in seen:
                    continue
                seen.add(u)
                for negate in (False, True):
                    c = _best_ext(groups, u, negate)
                    if c < target:
                        return False
                    if c == target:
                        winners.append((st, ridx, negate))
        if not winners:
            # cannot happen: mat itself realizes its own prefix
            raise AssertionError("staged minimizer lost the identity branch")
        states = set()
        for st, ridx, negate in winners:
            u = st[ridx]
            w = tuple(-e for e in u) if negate else u
            sigma, order = _ext_frame(groups, w)
            rest = sorted(
                _apply_frame(x, sigma, order)
                for j, x in enumerate(st)
                if j != ridx
            )
            states.add(tuple(rest))
    return True
