import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from btlattice.cyclic import (CyclicMatrixClass, booth, canonicalize, complement, from_pairs,
                              is_mint, least_rotation, pairs_form, row_class, to_pairs, unflatten)
from btlattice.errors import InvalidInput, NoNonzeroEntry, NoValidMatrix
from btlattice.verify import moprow_classes

WORKED_VECTOR = (3, 2, 1, 0, 0, 4, 2)
WORKED_MATRIX = [[1, 0], [1, 3], [0, 0], [0, 1], [0, 1], [0, 0]]


def brute_least(v):
    return min(tuple(v[k:]) + tuple(v[:k]) for k in range(len(v)))


def test_rotated_matrices_share_a_class():
    assert canonicalize([2, 0, 1, 3, 0, 1]) == canonicalize([1, 2, 0, 1, 3, 0])


def test_constant_vector():
    assert canonicalize([0, 0, 0]).entries == (0, 0, 0)


def test_least_rotation_representative():
    assert canonicalize([5, 1, 1]).entries == (1, 1, 5)


def test_empty_vector_rejected():
    with pytest.raises(InvalidInput):
        canonicalize([])


def test_constructor_insists_on_canonical_form():
    from btlattice.cyclic import CyclicVectorClass
    with pytest.raises(InvalidInput):
        CyclicVectorClass((5, 1, 1))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=80))
def test_least_rotation_matches_brute_force(v):
    k = least_rotation(v)
    assert tuple(v[k:]) + tuple(v[:k]) == brute_least(v)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=30))
def test_booth_matches_brute_force(v):
    k = booth(v)
    assert tuple(v[k:]) + tuple(v[:k]) == brute_least(v)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=20), st.integers(0, 40))
def test_canonicalize_is_rotation_invariant_and_idempotent(v, k):
    k %= len(v)
    w = canonicalize(v)
    assert canonicalize(v[k:] + v[:k]) == w
    assert canonicalize(w.entries) == w
    assert w.total == sum(v) and w.length == len(v)


def test_pairs_of_worked_vector():
    assert to_pairs(canonicalize(WORKED_VECTOR)) == pairs_form([(3, 1), (2, 1), (1, 3), (4, 1), (2, 1)])


def test_pairs_single_entry():
    assert to_pairs(canonicalize([7])).pairs == ((7, 1),)


def test_pairs_single_nonzero_wraps():
    assert to_pairs(canonicalize([0, 0, 2, 0])).pairs == ((2, 4),)


def test_pairs_of_zero_vector():
    with pytest.raises(NoNonzeroEntry):
        to_pairs(canonicalize([0, 0]))


def test_pairs_form_sums():
    p = to_pairs(canonicalize(WORKED_VECTOR))
    assert p.total == 12 and p.length == 7


@given(st.lists(st.integers(0, 4), min_size=1, max_size=15).filter(any))
def test_pairs_round_trip(v):
    w = canonicalize(v)
    assert from_pairs(to_pairs(w)) == w
    assert to_pairs(w).to_class() == w


def test_complement_of_worked_vector():
    assert complement(canonicalize(WORKED_VECTOR)) == canonicalize([1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0])


def test_complement_worked_pairs():
    c = complement(canonicalize(WORKED_VECTOR))
    assert to_pairs(c) == pairs_form([(1, 2), (1, 1), (3, 4), (1, 2), (1, 3)])


def test_complement_length_one():
    assert complement(canonicalize([3])) == canonicalize([1, 0, 0])


def test_complement_small():
    assert complement(canonicalize([1, 2, 0])) == canonicalize([1, 0, 2])


def test_complement_of_zero_vector():
    with pytest.raises(NoNonzeroEntry):
        complement(canonicalize([0, 0, 0]))


@pytest.mark.parametrize("s", range(1, 7))
@pytest.mark.parametrize("t", range(1, 7))
def test_complement_is_a_bijection(s, t):
    left = [canonicalize(v) for v in moprow_classes(s, t)]
    right = {canonicalize(v) for v in moprow_classes(t, s)}
    images = {complement(w) for w in left}
    assert len(images) == len(left)
    assert images == right


def test_moprow_enumeration_matches_brute_force():
    from itertools import product
    for s in range(1, 5):
        for t in range(1, 5):
            brute = {brute_least(v) for v in product(range(t + 1), repeat=s) if sum(v) == t}
            assert {tuple(v) for v in moprow_classes(s, t)} == brute


def test_random_complement_involution():
    rng = random.Random(7)
    for _ in range(300):
        v = [rng.choice([0, 0, 1, 2, 4]) for _ in range(rng.randint(9, 30))]
        v[0] = 1
        w = canonicalize(v)
        c = complement(w)
        assert (c.length, c.total) == (w.total, w.length)
        assert complement(c) == w


def test_row_class_worked_matrix():
    assert row_class(WORKED_MATRIX) == canonicalize([1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0])


def test_row_class_one_by_one():
    assert row_class([[4]]) == canonicalize([4])


def test_row_class_small_example():
    assert row_class([[2, 0], [1, 3], [0, 1]]) == canonicalize([2, 0, 1, 3, 0, 1])


def test_matrix_class_equality():
    a = CyclicMatrixClass([[2, 0], [1, 3], [0, 1]])
    b = CyclicMatrixClass([[1, 2], [0, 1], [3, 0]])
    assert a == b and hash(a) == hash(b)
    assert a != CyclicMatrixClass([[2, 0, 1], [3, 0, 1]])


def test_mint_membership():
    assert is_mint(WORKED_MATRIX, total=7)
    assert not is_mint([[1, 0], [2, 0]])
    assert not is_mint(WORKED_MATRIX, total=8)


def test_unflatten_worked():
    w = canonicalize([1, 0, 1, 3, 0, 0, 0, 1, 0, 1, 0, 0])
    found = unflatten(w, 6, 2)
    assert tuple(map(tuple, WORKED_MATRIX)) in found
    assert all(CyclicMatrixClass(m) == CyclicMatrixClass(WORKED_MATRIX) for m in found)


def test_unflatten_one_by_one():
    assert unflatten(canonicalize([5]), 1, 1) == (((5,),),)


def test_unflatten_single_row():
    assert unflatten(canonicalize([1, 1]), 1, 2) == (((1, 1),),)


def test_unflatten_without_valid_rotation():
    with pytest.raises(NoValidMatrix):
        unflatten(canonicalize([1, 0, 0, 0]), 2, 2)


def test_unflatten_shape_mismatch():
    with pytest.raises(InvalidInput):
        unflatten(canonicalize([1, 2, 3]), 2, 2)


@given(st.lists(st.integers(0, 3), min_size=6, max_size=6).filter(any))
def test_unflatten_finds_every_valid_rotation(v):
    w = canonicalize(v)
    valid = set()
    for k in range(6):
        rot = v[k:] + v[:k]
        mat = (tuple(rot[0:2]), tuple(rot[2:4]), tuple(rot[4:6]))
        if all(any(row[j] for row in mat) for j in range(2)):
            valid.add(mat)
    if valid:
        assert set(unflatten(w, 3, 2)) == valid
    else:
        with pytest.raises(NoValidMatrix):
            unflatten(w, 3, 2)
