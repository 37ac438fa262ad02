import random

import pytest

from helpers import rand_matrix, rand_pair
from piwgen.canon import canonical_form
from piwgen.core import apply_hadamard
from piwgen.invariant import (
    code,
    code_invariant,
    decode,
    default_bound,
    partition_by_invariant,
)


def test_code_examples():
    # depth 1: the code is the row itself
    assert code(((3, -4, 0),), 5) == (3, -4, 0)
    assert code(((1, 0), (0, 1)), 1) == (3, 1)
    assert code(((-1, 1), (1, -1)), 1) == (-2, 2)


def test_code_bound_enforced():
    with pytest.raises(ValueError):
        code(((3,),), 2)


def test_decode_round_trip():
    rng = random.Random(30)
    for _ in range(300):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        bound = rng.randint(1, 6)
        mat = rand_matrix(rng, m, n, -bound, bound)
        assert decode(code(mat, bound), bound, m) == mat


def test_default_bound():
    assert default_bound([], 25) == 5
    assert default_bound([((3, -4),)]) == 4
    assert default_bound([((0,),)]) == 1


def test_invariant_depth_full():
    mat = ((3, 4), (4, -3))
    inv = code_invariant(mat, 2, 5)
    assert inv.codes == (code(canonical_form(mat), 5),)
    with pytest.raises(ValueError):
        code_invariant(mat, 3, 5)


def test_invariant_h_invariance():
    rng = random.Random(31)
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        mat = rand_matrix(rng, m, n)
        d = rng.randint(1, m)
        image = apply_hadamard(mat, rand_pair(rng, m, n))
        assert code_invariant(mat, d, 3) == code_invariant(image, d, 3)


def test_digest_stability():
    mat = ((3, 4), (4, -3))
    a = code_invariant(mat, 1, 5)
    assert a.digest() == code_invariant(mat, 1, 5).digest()
    assert a.digest() != code_invariant(mat, 2, 5).digest()


def test_partition_trivial_cases():
    b = ((3, 4), (4, -3))
    assert partition_by_invariant([b], 1) == [[b]]
    rng = random.Random(32)
    image = apply_hadamard(b, rand_pair(rng, 2, 2))
    groups = partition_by_invariant([b, image], 1)
    assert groups == [[b, image]]
    # inequivalent matrices split
    d = ((-5, 0), (0, -5))
    groups = partition_by_invariant([b, d], 2)
    assert len(groups) == 2
    # groups ordered by their smallest member
    assert groups[0][0] == d


def test_partition_mixed_dims():
    with pytest.raises(ValueError):
        partition_by_invariant([((1,),), ((1, 2),)], 1)
    assert partition_by_invariant([], 1) == []
