import random

import pytest

from helpers import all_weight_rows, brute_h_class_count
from piwgen import kernels
from piwgen.core import is_piw
from piwgen.nsoks import nsoks, rep_to_minimal_row
from piwgen.search import Reservoir, rep_piw, signed_perms


def test_signed_perms_counts():
    assert sorted(signed_perms(((1, 2),), 2)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert sorted(signed_perms(((2, 1), (0, 1)), 2)) == [(-2, 0), (0, -2), (0, 2), (2, 0)]
    assert len(signed_perms(((5, 1), (0, 6)), 7)) == 14
    with pytest.raises(ValueError):
        signed_perms(((5, 1),), 7)


def test_signed_perms_structure():
    rows = signed_perms(((3, 1), (2, 4), (0, 2)), 7)
    assert rows == sorted(rows)
    assert len(rows) == len(set(rows))
    assert all(sum(e * e for e in r) == 25 for r in rows)


def test_reservoir_matches_direct_enumeration():
    for n, k in ((2, 25), (3, 9), (4, 10)):
        res = Reservoir.build(n, k)
        assert res.rows == all_weight_rows(n, k)
        assert all(res.index[row] == i for i, row in enumerate(res.rows))


def test_one_row_case():
    out = rep_piw(1, 7, 25)
    expected = sorted(rep_to_minimal_row(rep, 7) for rep in nsoks(25, 7))
    assert out == [(row,) for row in expected]


def test_iw_2_25():
    # brute force over the tiny reservoir: all orthogonal increasing pairs,
    # deduplicated by exhaustive canonical form
    rows = all_weight_rows(2, 25)
    classes = set()
    for i, a in enumerate(rows):
        for b in rows[i + 1:]:
            if a[0] * b[0] + a[1] * b[1] == 0:
                classes.add(kernels.minclass_scan((a, b)))
    assert rep_piw(2, 2, 25) == sorted(classes)
    assert rep_piw(2, 2, 25) == [((-5, 0), (0, -5)), ((-4, -3), (-3, 4))]


def test_output_invariants():
    out = rep_piw(3, 4, 9)
    assert out
    for mat in out:
        assert is_piw(mat, 9)
        assert list(mat) == sorted(mat)
        assert all(mat[i] < mat[i + 1] for i in range(len(mat) - 1))
        assert kernels.is_minimal(mat)
    assert len(set(out)) == len(out)


def test_mindepth_superset_chain():
    full = rep_piw(3, 4, 10)
    sets = {d: set(rep_piw(3, 4, 10, mindepth=d)) for d in (1, 2, 3)}
    assert sets[3] == set(full)
    assert sets[3] <= sets[2] <= sets[1]
    # every output, restricted or not, is a valid weighing matrix
    for d, mats in sets.items():
        for mat in mats:
            assert is_piw(mat, 10)
    # the canonical classes agree across every mindepth
    classes = {d: {kernels.canonical_form(m) for m in mats} for d, mats in sets.items()}
    assert classes[1] == classes[2] == classes[3] == set(full)


def test_brute_force_oracle_small():
    for m, n, k in ((2, 3, 9), (3, 3, 9), (2, 4, 4), (3, 4, 6)):
        assert len(rep_piw(m, n, k)) == brute_h_class_count(m, n, k), (m, n, k)


def test_infeasible_weight():
    assert rep_piw(1, 1, 7) == []
    assert rep_piw(2, 2, 7) == []


def test_validation():
    with pytest.raises(ValueError):
        rep_piw(3, 2, 9)
    with pytest.raises(ValueError):
        rep_piw(2, 2, 0)
    with pytest.raises(ValueError):
        rep_piw(2, 2, 9, mindepth=3)
    with pytest.raises(ValueError):
        rep_piw(2, 2, 9, threads=0)


def test_thread_determinism():
    serial = rep_piw(3, 4, 10, mindepth=2)
    threaded = rep_piw(3, 4, 10, mindepth=2, threads=2)
    assert serial == threaded


def test_spill_equivalence(tmp_path, monkeypatch):
    import piwgen.search as search

    monkeypatch.setattr(search, "SPILL_LIMIT", 2)
    spilled = rep_piw(3, 4, 10, spill_dir=str(tmp_path))
    assert spilled == rep_piw(3, 4, 10)
    # spill files are cleaned up afterwards
    assert not list(tmp_path.glob("frontier-*"))
