import random

import pytest

from helpers import rand_matrix, rand_monomial, rand_pair
from piwgen.core import (
    HadamardPair,
    Monomial,
    apply_hadamard,
    augment,
    gram,
    is_piw,
    matrix,
    prefix,
    row_lex_compare,
    transpose,
)


def test_matrix_validation():
    assert matrix([[1, 2], [3, 4]]) == ((1, 2), (3, 4))
    with pytest.raises(ValueError):
        matrix([])
    with pytest.raises(ValueError):
        matrix([[]])
    with pytest.raises(ValueError):
        matrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        matrix([[1.5]])


def test_row_lex_examples():
    m = ((-5, 0), (0, -5))
    assert row_lex_compare(m, m) == 0
    assert row_lex_compare(((-5, 0), (0, -5)), ((-5, 0), (0, 5))) == -1
    assert row_lex_compare(((-4, -3), (-3, 4)), ((-4, 3), (-3, -4))) == -1
    with pytest.raises(ValueError):
        row_lex_compare(((1,),), ((1, 2),))


def test_row_lex_total_order():
    rng = random.Random(1)
    for _ in range(300):
        a, b, c = (rand_matrix(rng, 3, 3) for _ in range(3))
        results = {row_lex_compare(a, b), row_lex_compare(b, a)}
        assert results in ({0}, {-1, 1})
        if row_lex_compare(a, b) <= 0 and row_lex_compare(b, c) <= 0:
            assert row_lex_compare(a, c) <= 0


def test_prefix_monotonicity():
    rng = random.Random(2)
    for _ in range(300):
        m, n, i = 4, 3, rng.randint(2, 4)
        a = rand_matrix(rng, m, n)
        b = a[: i - 1] + rand_matrix(rng, m - i + 1, n)
        if row_lex_compare(prefix(a, i), prefix(b, i)) == -1:
            assert row_lex_compare(a, b) == -1


def test_transpose():
    assert transpose(((1, 2), (3, 4))) == ((1, 3), (2, 4))
    sym = ((1, 2), (2, 1))
    assert transpose(sym) == sym
    rng = random.Random(3)
    for _ in range(50):
        a = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert transpose(transpose(a)) == a
    # the transpose of a square integer weighing matrix has the same weight
    b = ((3, 4), (4, -3))
    assert is_piw(b, 25) and is_piw(transpose(b), 25)


def test_is_piw():
    assert is_piw(((-5, 0), (0, -5)), 25)
    assert is_piw(((3, 4), (4, -3)), 25)
    assert not is_piw(((3, 4), (4, 3)), 25)


def test_gram():
    assert gram(((3, 4), (4, -3))) == ((25, 0), (0, 25))
    assert gram(((1, 2, 3),)) == ((14,),)


def test_prefix_augment():
    m = ((1, 2), (3, 4), (5, 6))
    assert prefix(m, 3) == m
    assert augment(prefix(m, 2), m[2]) == m
    assert prefix(augment(m, (7, 8)), 3) == m
    with pytest.raises(IndexError):
        prefix(m, 4)
    with pytest.raises(IndexError):
        prefix(m, 0)
    with pytest.raises(ValueError):
        augment(m, (1, 2, 3))


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial((0, 0), (1, 1))
    with pytest.raises(ValueError):
        Monomial((0, 1), (1, 2))


def test_apply_hadamard_examples():
    m = ((1, 2), (3, 4))
    assert apply_hadamard(m, HadamardPair.identity(2, 2)) == m
    assert apply_hadamard(((5,),), HadamardPair(Monomial((0,), (-1,)),
                                                Monomial.identity(1))) == ((-5,),)
    # swap both rows and both columns: entry (i, j) moves to (1-i, 1-j)
    swap = Monomial((1, 0), (1, 1))
    assert apply_hadamard(m, HadamardPair(swap, swap)) == ((4, 3), (2, 1))


def test_apply_hadamard_preserves_piw():
    rng = random.Random(4)
    base = ((3, 4), (4, -3))
    for _ in range(200):
        assert is_piw(apply_hadamard(base, rand_pair(rng, 2, 2)), 25)


def test_monomial_inverse_and_composition():
    rng = random.Random(5)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, m, n)
        pair = rand_pair(rng, m, n)
        image = apply_hadamard(a, pair)
        back = HadamardPair(pair.row_op.inverse(), pair.col_op.inverse())
        assert apply_hadamard(image, back) == a
        # composition convention: q2.after(q1) applies q1 first
        q1, q2 = rand_monomial(rng, n), rand_monomial(rng, n)
        assert q2.after(q1).apply_to_cols(a) == q2.apply_to_cols(q1.apply_to_cols(a))
        r1, r2 = rand_monomial(rng, m), rand_monomial(rng, m)
        assert r2.after(r1).apply_to_rows(a) == r2.apply_to_rows(r1.apply_to_rows(a))
