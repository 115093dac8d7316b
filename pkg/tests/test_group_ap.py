import pytest
from fractions import Fraction

from apcount import (
    ApTriple,
    build_pn,
    enumerate_aps_dihedral,
    enumerate_aps_zn,
    evaluate,
    num_aps_zn,
    pair_profile,
)
from apcount.group_ap import dihedral_mul

from helpers import all_encodings_of_set, is_ap_zn, naive_pair_count


def test_counting_formula_small_examples():
    assert enumerate_aps_zn(1) == []
    assert enumerate_aps_zn(2) == []
    assert len(enumerate_aps_zn(5)) == 10
    assert len(enumerate_aps_zn(8)) == 24
    assert len(enumerate_aps_zn(9)) == 30


def test_counting_formula_full_range():
    for n in range(3, 201):
        expected = n * (n - 1) // 2
        if n % 2 == 0:
            expected -= n // 2
        if n % 3 == 0:
            expected -= 2 * n // 3
        aps = enumerate_aps_zn(n)
        assert len(aps) == expected == num_aps_zn(n), n


@pytest.mark.parametrize("n", [3, 5, 6, 8, 9, 12, 16, 23, 24])
def test_triples_are_canonical_aps(n):
    aps = enumerate_aps_zn(n)
    assert aps == sorted(aps)
    seen = set()
    for t in aps:
        assert is_ap_zn(t, n)
        key = frozenset(t)
        assert key not in seen, f"duplicate set {key}"
        seen.add(key)
        # canonical = lexicographically least of all ordered encodings
        assert tuple(t) == min(all_encodings_of_set(key, n))


@pytest.mark.parametrize("n", [5, 8, 9, 13, 24])
def test_rotation_and_reflection_closure(n):
    sets = {frozenset(t) for t in enumerate_aps_zn(n)}
    rotated = {frozenset((x + 1) % n for x in s) for s in sets}
    reflected = {frozenset(-x % n for x in s) for s in sets}
    assert rotated == sets
    assert reflected == sets


def test_pair_profile_examples():
    assert pair_profile(5).count_by_difference == (0, 3, 3, 3, 3)
    assert pair_profile(8).count_by_difference == (0, 2, 4, 2, 2, 2, 4, 2)
    assert pair_profile(9).count_by_difference == (0, 3, 3, 1, 3, 3, 1, 3, 3)


def test_pair_profile_rejects_small_n():
    with pytest.raises(ValueError):
        pair_profile(2)
    with pytest.raises(ValueError):
        build_pn(2)


def test_pair_profile_invariants_and_brute_force():
    for n in range(3, 41):
        profile = pair_profile(n).count_by_difference
        assert profile[0] == 0
        for d in range(1, n):
            assert profile[d] == profile[n - d]
            assert profile[d] == naive_pair_count(n, d), (n, d)
        # each AP holds 3 pairs; unordered pairs at difference d number n
        # for d < n/2 and n/2 at the half period
        total = sum(profile[d] * n for d in range(1, (n + 1) // 2))
        if n % 2 == 0:
            total += profile[n // 2] * (n // 2)
        assert total == 3 * num_aps_zn(n)


def test_build_pn_examples():
    f = build_pn(5)
    assert f.constant == 0
    assert f.coeffs == (0, 3, 3, 3, 3)
    assert build_pn(8).coeffs == (0, 2, 4, 2, 2, 2, 4, 2)
    assert build_pn(9).coeffs == (0, 3, 3, 1, 3, 3, 1, 3, 3)


@pytest.mark.parametrize("n", [3, 5, 8, 9, 12, 17])
def test_build_pn_at_all_ones(n):
    ones = [1] * n
    assert evaluate(build_pn(n), ones) == 3 * num_aps_zn(n)


def test_dihedral_multiplication_table():
    # rotations compose additively; a reflection times itself is the identity
    n = 6
    for i in range(n):
        for j in range(n):
            assert dihedral_mul(n, i, j) == (i + j) % n
    for i in range(n, 2 * n):
        assert dihedral_mul(n, i, i) == 0
    # associativity on the full table
    order = 2 * n
    for x in range(order):
        for y in range(order):
            for z in range(order):
                assert dihedral_mul(n, dihedral_mul(n, x, y), z) == dihedral_mul(
                    n, x, dihedral_mul(n, y, z)
                )


def test_dihedral_examples():
    assert enumerate_aps_dihedral(2) == []
    aps5 = enumerate_aps_dihedral(5)
    assert len(aps5) == 20
    rotations = [t for t in aps5 if max(t) < 5]
    reflections = [t for t in aps5 if min(t) >= 5]
    assert len(rotations) == 10 and len(reflections) == 10
    assert len(enumerate_aps_dihedral(8)) == 48


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 9, 12, 16, 24])
def test_dihedral_is_two_relabeled_cyclic_copies(n):
    cyclic = enumerate_aps_zn(n)
    expected = sorted(
        cyclic + [ApTriple(a + n, b + n, c + n) for a, b, c in cyclic]
    )
    assert enumerate_aps_dihedral(n) == expected
