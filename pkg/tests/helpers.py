"""Shared test oracles, all deliberately independent of the code under test.

* naive_square_reps — nested-loop enumeration of nonincreasing square
  representations.
* orbit_min — minimum over the full monomial orbit (row AND column
  monomials enumerated explicitly), feasible only for tiny matrices.
* brute_h_class_count — enumerate every weight-k matrix directly from
  entry recursion and count distinct exhaustive-scan canonical forms.
"""

from __future__ import annotations

from itertools import permutations, product
from math import isqrt

from piwgen.core import HadamardPair, Monomial
from piwgen.kernels import minclass_scan


def rand_matrix(rng, m, n, lo=-3, hi=3):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m))


def rand_monomial(rng, s):
    perm = list(range(s))
    rng.shuffle(perm)
    signs = tuple(rng.choice((-1, 1)) for _ in range(s))
    return Monomial(tuple(perm), signs)


def rand_pair(rng, m, n):
    return HadamardPair(rand_monomial(rng, m), rand_monomial(rng, n))


def naive_square_reps(n: int, r: int) -> set[tuple[int, ...]]:
    """All nonincreasing r-tuples of nonnegative ints whose squares sum to n."""
    out: set[tuple[int, ...]] = set()

    def rec(remaining, parts_left, cap, acc):
        if parts_left == 0:
            if remaining == 0:
                out.add(acc)
            return
        for s in range(min(cap, isqrt(remaining)), -1, -1):
            rec(remaining - s * s, parts_left - 1, s, acc + (s,))

    rec(n, r, isqrt(n), ())
    return out


def orbit_min(mat):
    """Row-lex minimum over every (row monomial, column monomial) pair."""
    m, n = len(mat), len(mat[0])
    best = None
    for rp in permutations(range(m)):
        for rs in product((1, -1), repeat=m):
            rows = [tuple(rs[i] * e for e in mat[rp[i]]) for i in range(m)]
            for cp in permutations(range(n)):
                for cs in product((1, -1), repeat=n):
                    cand = tuple(
                        tuple(cs[j] * row[cp[j]] for j in range(n)) for row in rows
                    )
                    if best is None or cand < best:
                        best = cand
    return best


def all_weight_rows(n: int, k: int) -> list[tuple[int, ...]]:
    """Every integer vector of length n with squared norm k, by entry recursion."""
    rows: list[tuple[int, ...]] = []
    lim = isqrt(k)

    def rec(pos, remaining, acc):
        if pos == n:
            if remaining == 0:
                rows.append(tuple(acc))
            return
        for e in range(-lim, lim + 1):
            if e * e <= remaining:
                acc.append(e)
                rec(pos + 1, remaining - e * e, acc)
                acc.pop()

    rec(0, k, [])
    rows.sort()
    return rows


def brute_h_class_count(m: int, n: int, k: int) -> int:
    """H-class count by exhaustive matrix enumeration + canonical dedup."""
    rows = all_weight_rows(n, k)
    classes = set()

    def rec(chosen, start):
        if len(chosen) == m:
            classes.add(minclass_scan(tuple(chosen)))
            return
        for i in range(start, len(rows)):
            r = rows[i]
            if all(sum(a * b for a, b in zip(r, c)) == 0 for c in chosen):
                chosen.append(r)
                rec(chosen, i + 1)
                chosen.pop()

    rec([], 0)
    return len(classes)
