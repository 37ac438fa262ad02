import random

import pytest

from helpers import rand_pair
from piwgen.canon import canonical_form
from piwgen.classify import (
    _letters,
    block_sum,
    build_report,
    decompose,
    dedup_h_classes,
    dedup_th_classes,
    paper_display,
    primitive_catalog,
    structure_label,
    th_canonical,
)
from piwgen.core import apply_hadamard, is_piw, transpose

A = ((-5,),)
B = ((-4, -3), (-3, 4))


def test_dedup_h_classes():
    rng = random.Random(40)
    base = ((3, 4), (4, -3))
    images = [apply_hadamard(base, rand_pair(rng, 2, 2)) for _ in range(20)]
    classes = dedup_h_classes(images)
    assert len(classes) == 1
    assert classes[0].representative == B
    assert classes[0].members == 20
    # already-canonical inputs collapse to themselves
    diag = ((-5, 0), (0, -5))
    assert [c.representative for c in dedup_h_classes([diag, B])] == sorted([diag, B])
    assert dedup_h_classes([]) == []
    with pytest.raises(ValueError):
        dedup_h_classes([A, B])


def test_dedup_idempotent():
    classes = dedup_h_classes([B, ((3, 4), (4, -3))])
    again = dedup_h_classes([c.representative for c in classes])
    assert [c.representative for c in again] == [c.representative for c in classes]
    reps = [c.representative for c in classes]
    assert len(set(reps)) == len(reps)


def test_th_canonical():
    rep, self_t = th_canonical(B)
    assert rep == B and self_t  # B is symmetric
    with pytest.raises(ValueError):
        th_canonical(((1, 2),))


def test_dedup_th_classes():
    h = dedup_h_classes([B, ((-5, 0), (0, -5))])
    th = dedup_th_classes(h)
    assert len(th) == 2
    assert all(t.self_transpose for t in th)
    one = dedup_th_classes(dedup_h_classes([A]))
    assert len(one) == 1 and one[0].representative == A


def test_decompose_examples():
    dec = decompose(((-5, 0), (0, -5)))
    assert dec.blocks == (A, A)
    assert not dec.primitive
    dec = decompose(((5, 0, 0), (0, 3, 4), (0, 4, -3)))
    assert tuple(len(b) for b in dec.blocks) == (1, 2)
    assert dec.blocks == (A, B)
    assert decompose(((3, 4), (4, -3))).primitive
    with pytest.raises(ValueError):
        decompose(((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        decompose(((1, 0), (2, 0)))


def test_decompose_h_invariant():
    rng = random.Random(41)
    mat = block_sum([((3, 4), (4, -3)), ((5,),)])
    base = decompose(mat)
    for _ in range(100):
        image = apply_hadamard(mat, rand_pair(rng, 3, 3))
        assert decompose(image).blocks == base.blocks


def test_block_sum_round_trip():
    mat = block_sum([B, A, B])
    assert is_piw(mat, 25)
    dec = decompose(mat)
    assert canonical_form(block_sum(list(dec.blocks))) == canonical_form(mat)


def test_letters_skip_empty_orders():
    assert _letters([1, 2, 4, 5, 6, 7]) == {
        1: "A", 2: "B", 4: "C", 5: "D", 6: "E", 7: "F"
    }


def test_structure_label():
    catalogs = {1: (A,), 2: (B,)}
    letters = _letters([1, 2])
    dec = decompose(block_sum([A, A, B]))
    lab = structure_label(dec, catalogs, letters)
    assert lab.label == "2A⊕B"
    assert lab.type_label == "2A⊕B"
    assert lab.block_orders == (2, 1, 1)
    with pytest.raises(ValueError):
        structure_label(decompose(B), {2: ()}, letters)


def test_structure_label_indexed_when_ambiguous():
    # two catalog entries of one order force indices into the label
    catalogs = {1: (A,), 2: (B, ((-4, -3), (-3, 5)))}
    lab = structure_label(decompose(block_sum([A, B])), catalogs, _letters([1, 2]))
    assert lab.label == "A⊕B1"
    assert lab.type_label == "A⊕B"


def test_primitive_catalog_small():
    assert primitive_catalog(1, 25) == (A,)
    assert primitive_catalog(2, 25) == (B,)
    assert primitive_catalog(3, 25) == ()
    assert primitive_catalog(1, 7) == ()


def test_paper_display():
    assert paper_display(B) == ((4, 3), (3, -4))
    assert paper_display(A) == ((5,),)


def test_build_report_trivial():
    empty = build_report(1, 1, 7, [], generated=0, invariant_depth=1, bound=1,
                         th_classes=[])
    assert empty.classes == ()
    assert empty.table is None

    h = dedup_h_classes([B])
    th = dedup_th_classes(h)
    rep = build_report(2, 2, 25, h, generated=1, invariant_depth=2, bound=5,
                       th_classes=th)
    assert len(rep.classes) == 1
    assert rep.table == (("B", 1),)
    assert rep.primitive_count == 1
    assert rep.classes[0].label == "B"
    assert rep.classes[0].self_transpose
