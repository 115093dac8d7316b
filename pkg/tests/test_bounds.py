from fractions import Fraction

import pytest

from apcount import dihedral_bounds, lower, theorem_row, upper
from apcount.bounds import SHARP_RESIDUES, TABLE, exact_bounds

_F = Fraction


def test_rows_partition_residues():
    seen = {}
    for row in TABLE:
        for r in row.residues:
            assert r not in seen, f"residue {r} in two rows"
            seen[r] = row
    assert set(seen) == set(range(24))
    for row in TABLE:
        assert row.c2 <= row.c3


def test_theorem_row_examples():
    row = theorem_row(8)
    assert (row.c1, row.c2, row.c3) == (1, 0, 0)
    row = theorem_row(21)
    assert (row.c1, row.c2, row.c3) == (_F(7, 6), _F(3, 8), _F(27, 8))
    row = theorem_row(48)
    assert (row.c1, row.c2, row.c3) == (_F(5, 3), 0, 0)


def test_bound_examples():
    assert lower(7) == upper(7) == 3
    assert lower(12) == 0  # clamped from -2
    assert exact_bounds(12)[0] == -2
    assert upper(12) == 16
    assert lower(16) == upper(16) == 16
    assert exact_bounds(4) == (-2, 0)
    assert lower(4) == upper(4) == 0


def test_dihedral_examples():
    assert dihedral_bounds(7) == (6, 6)
    assert dihedral_bounds(8) == (0, 0)
    assert dihedral_bounds(12) == (0, 32)


def test_closed_forms_are_integral_up_to_2400():
    for n in range(3, 2401):
        lo, up = exact_bounds(n)
        assert lo.denominator == 1, n
        assert up.denominator == 1, n
        assert lo <= up


def test_sharp_residue_classes():
    assert SHARP_RESIDUES == frozenset(
        {0, 1, 2, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 22, 23}
    )
    for n in range(3, 121):
        if n % 24 in SHARP_RESIDUES:
            assert lower(n) == upper(n), n


def test_rejects_tiny_n():
    with pytest.raises(ValueError):
        lower(2)
    with pytest.raises(ValueError):
        theorem_row(0)


def test_emit_table_records():
    from apcount import emit_table

    records = emit_table(10, oracle_limit=8)
    assert [r.n for r in records] == list(range(3, 11))
    for record in records:
        assert record.flags == []
        assert record.construction_count == record.upper
        assert record.certificate_bound == record.lower
        if record.n <= 8:
            assert record.lower <= record.oracle_min <= record.upper
        else:
            assert record.oracle_min is None
