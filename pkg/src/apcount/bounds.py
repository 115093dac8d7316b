"""Closed-form lower/upper bounds on the minimum number of monochromatic 3-APs.

The nine-row constant table below partitions the residues of n mod 24;
each row gives rationals (c1, c2, c3) with

    n^2/8 - c1*n + c2  <=  min mono count over 2-colorings of Z_n  <=  n^2/8 - c1*n + c3

and both closed forms are integers on the row's residues.  The table is
stored as data, not recomputed from the certificate pipeline, so any
disagreement between the two is a detectable failure instead of a
tautology.  For small n the quadratic goes negative; evaluated bounds
are clamped at zero (the count is trivially nonnegative).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class BoundsRow:
    residues: frozenset[int]
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def __post_init__(self):
        if self.c2 > self.c3:
            raise ValueError(f"row {sorted(self.residues)}: c2={self.c2} > c3={self.c3}")


_F = Fraction

TABLE: tuple[BoundsRow, ...] = (
    BoundsRow(frozenset({1, 5, 7, 11, 13, 17, 19, 23}), _F(1, 2), _F(3, 8), _F(3, 8)),
    BoundsRow(frozenset({8, 16}), _F(1), _F(0), _F(0)),
    BoundsRow(frozenset({2, 10}), _F(1), _F(3, 2), _F(3, 2)),
    BoundsRow(frozenset({4, 20}), _F(1), _F(0), _F(2)),
    BoundsRow(frozenset({14, 22}), _F(1), _F(3, 2), _F(3, 2)),
    BoundsRow(frozenset({3, 9, 15, 21}), _F(7, 6), _F(3, 8), _F(27, 8)),
    BoundsRow(frozenset({0}), _F(5, 3), _F(0), _F(0)),
    BoundsRow(frozenset({12}), _F(5, 3), _F(0), _F(18)),
    BoundsRow(frozenset({6, 18}), _F(5, 3), _F(1, 2), _F(27, 2)),
)

# Residue classes where c2 == c3, i.e. the bounds pin the minimum exactly.
SHARP_RESIDUES = frozenset(
    r for row in TABLE if row.c2 == row.c3 for r in row.residues
)


def theorem_row(n: int) -> BoundsRow:
    """The unique table row containing n mod 24."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r = n % 24
    for row in TABLE:
        if r in row.residues:
            return row
    raise AssertionError(f"residue {r} not covered; table rows must partition 0..23")


def exact_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Unclamped exact values (n^2/8 - c1*n + c2, n^2/8 - c1*n + c3)."""
    if n < 3:
        raise ValueError(f"bounds need n >= 3, got {n}")
    row = theorem_row(n)
    quad = Fraction(n * n, 8) - row.c1 * n
    return quad + row.c2, quad + row.c3


def lower(n: int) -> int:
    """Closed-form lower bound, clamped at zero; always an integer on its residue class."""
    value = exact_bounds(n)[0]
    if value.denominator != 1:
        raise AssertionError(f"lower bound {value} not integral at n={n}")
    return max(0, value.numerator)


def upper(n: int) -> int:
    """Closed-form upper bound, clamped at zero; always an integer on its residue class."""
    value = exact_bounds(n)[1]
    if value.denominator != 1:
        raise AssertionError(f"upper bound {value} not integral at n={n}")
    return max(0, value.numerator)


def dihedral_bounds(n: int) -> tuple[int, int]:
    """Bounds for D_2n: exactly twice the cyclic bounds."""
    return 2 * lower(n), 2 * upper(n)


@dataclass
class TableRecord:
    """One consistency-table row; `flags` lists detected cross-module inconsistencies."""

    n: int
    residue_mod_24: int
    lower: int
    upper: int
    certificate_bound: int
    construction_count: Optional[int]
    oracle_min: Optional[int]
    flags: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "residue_mod_24": self.residue_mod_24,
            "lower": self.lower,
            "upper": self.upper,
            "certificate_bound": self.certificate_bound,
            "construction_count": self.construction_count,
            "oracle_min": self.oracle_min,
            "flags": list(self.flags),
        }


CSV_COLUMNS = (
    "n",
    "residue_mod_24",
    "lower",
    "upper",
    "certificate_bound",
    "construction_count",
    "oracle_min",
    "flags",
)


def emit_table(
    n_max: int,
    *,
    oracle_limit: int = 0,
    cache=None,
    workers: int = 1,
) -> list[TableRecord]:
    """Cross-check every n in 3..n_max and report one record each, ascending.

    `certificate_bound` comes from the verified-certificate pipeline and
    is flagged if it disagrees with the table; `construction_count` is
    the recounted extremal coloring, flagged against the upper bound;
    `oracle_min` is filled from `cache` or computed exhaustively for
    n <= oracle_limit, and flagged when it escapes [lower, upper].
    """
    if n_max < 3:
        raise ValueError(f"table needs n_max >= 3, got {n_max}")
    # Imported here: construct/certify/oracle all consume this module.
    from . import certify, construct, oracle

    records = []
    for n in range(3, n_max + 1):
        lo, up = lower(n), upper(n)
        cert = certify.lower_bound(n).sharpened_bound
        built = construct.extremal_coloring(n)
        built_count = construct.count_monochromatic(built.coloring)
        oracle_min: Optional[int] = None
        if cache is not None:
            cached = cache.get("cyclic", n)
            if cached is not None:
                oracle_min = cached.minimum
        if oracle_min is None and n <= oracle_limit:
            result = oracle.exact_minimum(n, "cyclic", workers=workers)
            oracle_min = result.minimum
            if cache is not None:
                cache.add(result)
        flags = []
        if cert != lo:
            flags.append("cert-vs-table")
        if built_count != up:
            flags.append("construction-vs-table")
        if oracle_min is not None and not lo <= oracle_min <= up:
            flags.append("oracle-out-of-bounds")
        records.append(
            TableRecord(n, n % 24, lo, up, cert, built_count, oracle_min, flags)
        )
    return records
