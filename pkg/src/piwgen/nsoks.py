"""Representations of an integer as a sum of r nonnegative squares.

A representation is multiplicity-compressed: ``((4, 1), (2, 2), (1, 1),
(0, 3))`` stands for 4² + 2² + 2² + 1² + 0² + 0² + 0².  Values are
strictly decreasing, multiplicities positive, and the multiplicities
always sum to exactly r (explicit trailing zero part included).

The enumeration recurses on the largest square value together with its
multiplicity, which keeps the recursion depth at the number of distinct
values rather than r.  Once the largest allowed value reaches 1 there
is nothing left to search and the single remaining candidate is
emitted directly.
"""

from __future__ import annotations

from math import isqrt

SquareRep = tuple[tuple[int, int], ...]


def nsoks(n: int, r: int, maxsq: int | None = None) -> list[SquareRep]:
    """All representations of n as a sum of exactly r nonnegative squares.

    Args:
        n: the target, n ≥ 0.
        r: number of squares, r ≥ 1.
        maxsq: optional upper bound on the values used.

    Returns:
        Every representation exactly once, sorted descending by the
        expanded value tuple (largest leading value first, ties resolved
        by the next value, and so on).  Infeasible input gives [].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 1:
        raise ValueError("r must be positive")
    if maxsq is not None and maxsq < 0:
        raise ValueError("maxsq must be nonnegative")
    return _nsoks(n, r, maxsq)


def _nsoks(n: int, r: int, maxsq: int | None) -> list[SquareRep]:
    if n == 0:
        return [((0, r),)]
    top = isqrt(n)
    if maxsq is not None:
        top = min(top, maxsq)
    if top == 0:
        return []
    if top == 1:
        # Only 0s and 1s left; guard the n > r case so the function is total.
        if n > r:
            return []
        return [((1, n),) if n == r else ((1, n), (0, r - n))]
    # Pruning bound: below ceil(sqrt(n/r)) even r copies cannot reach n.
    low = isqrt((n - 1) // r) + 1
    out: list[SquareRep] = []
    for s in range(top, low - 1, -1):
        sq = s * s
        for mult in range(min(r, n // sq), 0, -1):
            rest = n - mult * sq
            if rest == 0:
                tail: SquareRep = () if mult == r else ((0, r - mult),)
                out.append(((s, mult),) + tail)
            elif mult < r:
                for sub in _nsoks(rest, r - mult, s - 1):
                    out.append(((s, mult),) + sub)
    return out


def expand(rep: SquareRep) -> tuple[int, ...]:
    """The nonincreasing value tuple, one entry per square."""
    out: list[int] = []
    for value, mult in rep:
        out.extend([value] * mult)
    return tuple(out)


def check_rep(rep: SquareRep, n: int, r: int, maxsq: int | None = None) -> None:
    """Raise if rep violates its structural invariants."""
    values = [v for v, _ in rep]
    if any(v < 0 for v in values):
        raise ValueError(f"negative value in {rep}")
    if values != sorted(values, reverse=True) or len(set(values)) != len(values):
        raise ValueError(f"values not strictly decreasing in {rep}")
    if any(m < 1 for _, m in rep):
        raise ValueError(f"nonpositive multiplicity in {rep}")
    if sum(m for _, m in rep) != r:
        raise ValueError(f"multiplicities of {rep} do not sum to {r}")
    if sum(m * v * v for v, m in rep) != n:
        raise ValueError(f"{rep} does not represent {n}")
    if maxsq is not None and values and values[0] > maxsq:
        raise ValueError(f"{rep} exceeds maxsq={maxsq}")


def rep_to_minimal_row(rep: SquareRep, n_cols: int) -> tuple[int, ...]:
    """The row-lex-minimal vector realizing rep.

    All entries non-positive, most negative first: the unique minimal
    form of a row under entry negation and permutation.
    """
    if sum(m for _, m in rep) != n_cols:
        raise ValueError(
            f"rep has {sum(m for _, m in rep)} parts, expected {n_cols}"
        )
    return tuple(-v for v in expand(rep))


def format_rep(rep: SquareRep) -> str:
    """Render like ``4^1 + 2^2 + 1^1 + 0^3``."""
    return " + ".join(f"{v}^{m}" for v, m in rep)
