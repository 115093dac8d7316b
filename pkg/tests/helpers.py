"""Brute-force reference implementations the library is checked against.

Everything here is deliberately naive: plain scans over enumerated
objects, no popcount batching, no family aggregation, so that
agreement with the production paths is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction

from apcount import Coloring, enumerate_aps_zn


def is_ap_zn(triple, n: int) -> bool:
    a, b, c = triple
    return len({a, b, c}) == 3 and (b - a) % n == (c - b) % n


def naive_mono_count(coloring: Coloring, aps) -> int:
    colors = coloring.colors
    return sum(1 for a, b, c in aps if colors[a] == colors[b] == colors[c])


def naive_pair_count(n: int, d: int) -> int:
    """Number of canonical APs containing the pair {0, d}, by direct scanning."""
    return sum(1 for t in enumerate_aps_zn(n) if 0 in t and d % n in t and d % n != 0)


def naive_objective(xs, aps) -> Fraction:
    """Sum over APs of x_a*x_b + x_a*x_c + x_b*x_c, term by term."""
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for a, b, c in aps:
        total += xs[a] * xs[b] + xs[a] * xs[c] + xs[b] * xs[c]
    return total


def all_encodings_of_set(three_set: frozenset, n: int) -> list[tuple[int, int, int]]:
    """Every ordered AP encoding (first, middle, last) of a 3-set in Z_n."""
    out = []
    elems = sorted(three_set)
    for first in elems:
        for middle in elems:
            for last in elems:
                if len({first, middle, last}) != 3:
                    continue
                if (middle - first) % n == (last - middle) % n != 0:
                    out.append((first, middle, last))
    return out


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_coloring(rng: random.Random, n: int) -> Coloring:
    return Coloring(n, tuple(rng.randint(0, 1) for _ in range(n)))
