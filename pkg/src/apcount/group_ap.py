"""3-term arithmetic progressions in the cyclic group Z_n and the dihedral group D_2n.

A progression is the 3-element set {a, a+b, a+2b} (b != 0, all elements
distinct); the six ordered encodings of one set are collapsed to a
single canonical representative.  Dihedral elements are indexed
rotations-first: 0..n-1 are the rotations r^i, n..2n-1 are the
reflections s*r^(i-n), so each coset block reuses the Z_n layout as-is.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .circulant import CirculantForm


class ApTriple(NamedTuple):
    """Canonical ordered encoding (first, middle, last) of a 3-term progression.

    The stored triple is the lexicographically least among the ordered
    progression encodings of the underlying 3-set, so each set appears
    exactly once in any enumeration.
    """

    first: int
    middle: int
    last: int


def _canonical_zn(a: int, d: int, n: int) -> ApTriple:
    # Generic 3-set {a, a+d, a+2d} with 1 <= d < n/2: exactly two ordered
    # encodings exist (difference d forward, n-d backward); the lex-least
    # one starts at the smaller endpoint.
    b = (a + d) % n
    c = (a + 2 * d) % n
    return ApTriple(a, b, c) if a < c else ApTriple(c, b, a)


def _iter_aps_zn(n: int) -> Iterator[ApTriple]:
    """Yield every canonical 3-AP of Z_n exactly once (unsorted)."""
    if n < 3:
        return
    third = n // 3 if n % 3 == 0 else 0
    for d in range(1, (n - 1) // 2 + 1):
        if d == third:
            # Equally spaced sets {a, a+n/3, a+2n/3} arise from three
            # starts with this difference; keep the one starting at the
            # minimum, which is also the lex-least of all six encodings.
            for a in range(third):
                yield ApTriple(a, a + third, a + 2 * third)
        else:
            for a in range(n):
                yield _canonical_zn(a, d, n)


def enumerate_aps_zn(n: int) -> list[ApTriple]:
    """All 3-term APs of Z_n, canonical and lexicographically sorted.

    n <= 2 yields the empty list; degenerate triples (repeated
    elements, e.g. the half-period wrap for even n) never appear.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sorted(_iter_aps_zn(n))


def num_aps_zn(n: int) -> int:
    """Closed-form count of 3-APs in Z_n (validated against enumeration in tests)."""
    if n < 3:
        return 0
    count = n * (n - 1) // 2
    if n % 2 == 0:
        count -= n // 2
    if n % 3 == 0:
        count -= 2 * n // 3
    return count


def dihedral_mul(n: int, x: int, y: int) -> int:
    """Product in D_2n under the rotations-first indexing."""
    if x < n:
        if y < n:
            return (x + y) % n
        return n + (y - n - x) % n
    if y < n:
        return n + (x - n + y) % n
    return (y - x) % n


@lru_cache(maxsize=64)
def enumerate_aps_dihedral(n: int) -> list[ApTriple]:
    """All 3-term APs of D_2n: sets {g, g*d, g*d^2} with d != identity and 3 distinct elements.

    Brute-forced over every (g, d) pair and deduplicated, so the fact
    that nothing survives outside the rotation and reflection blocks is
    an output of the scan, not an assumption.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    order = 2 * n
    by_set: dict[frozenset[int], ApTriple] = {}
    for g in range(order):
        for d in range(1, order):
            h = dihedral_mul(n, g, d)
            k = dihedral_mul(n, h, d)
            if g == h or g == k or h == k:
                continue
            triple = ApTriple(g, h, k)
            key = frozenset(triple)
            held = by_set.get(key)
            if held is None or triple < held:
                by_set[key] = triple
    return sorted(by_set.values())


class PairProfile(NamedTuple):
    """Per-difference incidence counts: entry d = number of canonical APs containing {0, d}."""

    n: int
    count_by_difference: tuple[int, ...]


def pair_profile(n: int) -> PairProfile:
    """How many canonical APs contain a fixed pair at each cyclic difference.

    Computed by enumerating the canonical AP families and aggregating
    the pair incidences they contribute; no residue-case formulas are
    consulted, so the profile can cross-check them.
    """
    if n < 3:
        raise ValueError(f"pair profile needs n >= 3, got {n}")
    # ordered[t] counts (AP, ordered pair (u, v)) incidences with v - u = t.
    ordered = [0] * n
    third = n // 3 if n % 3 == 0 else 0
    for d in range(1, (n - 1) // 2 + 1):
        if d == third:
            # n/3 equally spaced sets; all three pairs sit in the
            # difference class {n/3, 2n/3}.
            ordered[d] += n
            ordered[n - d] += n
        else:
            # n sets {a, a+d, a+2d}: two pairs at difference d, one at 2d.
            ordered[d] += 2 * n
            ordered[n - d] += 2 * n
            ordered[2 * d % n] += n
            ordered[(n - 2 * d) % n] += n
    profile = [0] * n
    for d in range(1, n):
        if ordered[d] % n != 0:
            raise AssertionError(f"incidence count {ordered[d]} at difference {d} not divisible by n={n}")
        profile[d] = ordered[d] // n
    return PairProfile(n, tuple(profile))


def build_pn(n: int) -> CirculantForm:
    """The progression objective as a circulant form.

    Evaluated at a +/-1 coloring vector it equals the sum over all
    canonical APs of x_a*x_b + x_a*x_c + x_b*x_c, because the pair
    coefficient at difference d is exactly the number of APs the pair
    lies in.
    """
    profile = pair_profile(n)
    coeffs = (Fraction(0),) + tuple(Fraction(c) for c in profile.count_by_difference[1:])
    return CirculantForm(n, Fraction(0), coeffs)
