"""Exact circulant quadratic forms over the rationals.

A form ``CirculantForm(n, a, (b_0, ..., b_{n-1}))`` evaluates at a point
x in R^n as

    a  +  b_0 * sum_i x_i**2  +  sum_{0 <= i < j <= n-1} b_{j-i} * x_i * x_j

The off-diagonal coefficient attached to an ordered index pair (i, j)
with i < j is keyed by the plain integer difference j - i, and the
coefficient vector must satisfy b_k == b_{n-k}, so each cyclic
difference class carries a single well-defined weight.  This is the
unique reading under which the squared total sum (sum_i X_i)^2 comes
out as the form (0; 1, 2, ..., 2); all generator identities and the
progression-counting objective below are stated in it.

All coefficients are `fractions.Fraction`; nothing in this module
rounds.  The only floating-point output is the spectral diagnostic
`circulant_min_eigenvalue`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Generator forms used by the lower-bound certificates, in canonical
# order.  Multiplier vectors elsewhere in the package are aligned with
# this tuple.
GENERATORS = (
    "box_slack",           # sum_i (1 - X_i^2); nonnegative on [-1, 1]^n
    "sum_square",          # (sum_i X_i)^2
    "alternating_square",  # (sum_i (-1)^i X_i)^2; needs even n
    "half_period_square",  # sum_{i < n/2} (X_i - X_{i+n/2})^2; needs even n
    "third_period_square",  # pairwise differences at offsets n/3, 2n/3; needs 3 | n
)


class ApplicabilityError(ValueError):
    """A generator or certificate was requested outside its divisibility domain."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class CirculantForm:
    """Immutable symmetric circulant quadratic form with exact coefficients."""

    n: int
    constant: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"form length must be positive, got {self.n}")
        coeffs = tuple(_as_fraction(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        for k in range(1, self.n):
            if coeffs[k] != coeffs[self.n - k]:
                raise ValueError(
                    f"coefficient symmetry violated: b[{k}]={coeffs[k]} != "
                    f"b[{self.n - k}]={coeffs[self.n - k]}"
                )
        object.__setattr__(self, "constant", _as_fraction(self.constant))
        object.__setattr__(self, "coeffs", coeffs)


def make_identity(which: str, n: int) -> CirculantForm:
    """Build one of the five generator forms at length n.

    Raises ApplicabilityError when the requested generator needs a
    divisibility condition that n fails (even n for the alternating and
    half-period squares, 3 | n for the third-period squares).
    """
    if n < 3:
        raise ValueError(f"generator forms need n >= 3, got {n}")
    zero = Fraction(0)
    if which == "box_slack":
        return CirculantForm(n, Fraction(n), (Fraction(-1),) + (zero,) * (n - 1))
    if which == "sum_square":
        return CirculantForm(n, zero, (Fraction(1),) + (Fraction(2),) * (n - 1))
    if which == "alternating_square":
        if n % 2 != 0:
            raise ApplicabilityError(f"alternating_square requires 2 | n, got n={n}")
        coeffs = [Fraction(1)] + [Fraction(-2) if k % 2 else Fraction(2) for k in range(1, n)]
        return CirculantForm(n, zero, tuple(coeffs))
    if which == "half_period_square":
        if n % 2 != 0:
            raise ApplicabilityError(f"half_period_square requires 2 | n, got n={n}")
        coeffs = [zero] * n
        coeffs[0] = Fraction(1)
        coeffs[n // 2] = Fraction(-2)
        return CirculantForm(n, zero, tuple(coeffs))
    if which == "third_period_square":
        if n % 3 != 0:
            raise ApplicabilityError(f"third_period_square requires 3 | n, got n={n}")
        coeffs = [zero] * n
        coeffs[0] = Fraction(2)
        coeffs[n // 3] = Fraction(-2)
        coeffs[2 * n // 3] = Fraction(-2)
        return CirculantForm(n, zero, tuple(coeffs))
    raise ValueError(f"unknown generator {which!r}; expected one of {GENERATORS}")


def add(f: CirculantForm, g: CirculantForm) -> CirculantForm:
    if f.n != g.n:
        raise ValueError(f"length mismatch: {f.n} vs {g.n}")
    return CirculantForm(
        f.n,
        f.constant + g.constant,
        tuple(a + b for a, b in zip(f.coeffs, g.coeffs)),
    )


def scale(f: CirculantForm, c) -> CirculantForm:
    c = _as_fraction(c)
    return CirculantForm(f.n, c * f.constant, tuple(c * b for b in f.coeffs))


def shift(f: CirculantForm, c) -> CirculantForm:
    """Add c to the constant term only."""
    return CirculantForm(f.n, f.constant + _as_fraction(c), f.coeffs)


def evaluate(f: CirculantForm, xs: Sequence) -> Fraction:
    """Exact value of f at a rational point."""
    if len(xs) != f.n:
        raise ValueError(f"length mismatch: form has n={f.n}, point has {len(xs)}")
    xs = [_as_fraction(x) for x in xs]
    total = f.constant + f.coeffs[0] * sum(x * x for x in xs)
    coeffs = f.coeffs
    for i in range(f.n):
        xi = xs[i]
        for j in range(i + 1, f.n):
            b = coeffs[j - i]
            if b:
                total += b * xi * xs[j]
    return total


def rotate_bits(x: int, d: int, n: int) -> int:
    """Cyclic shift of an n-bit mask: bit i of the result is bit (i+d) mod n of x."""
    d %= n
    if d == 0:
        return x
    return ((x >> d) | (x << (n - d))) & ((1 << n) - 1)


def evaluate_signs(f: CirculantForm, blue_mask: int) -> Fraction:
    """Exact value of f at the sign vector with x_i = -1 iff bit i of blue_mask is set.

    Equivalent to evaluate() on that vector but O(n) big-integer work
    instead of O(n^2) rational multiplications: pairs are batched per
    cyclic difference via popcounts.
    """
    n = f.n
    mask = (1 << n) - 1
    blue_mask &= mask
    total = f.constant + f.coeffs[0] * n
    for d in range(1, n // 2 + 1):
        b = f.coeffs[d]
        if not b:
            continue
        # agree_d = #{i : x_i == x_{(i+d) mod n}} over all n cyclic starts
        agree = n - (blue_mask ^ rotate_bits(blue_mask, d, n)).bit_count()
        corr = 2 * agree - n
        if 2 * d == n:
            # each unordered pair at the half period is hit from both ends
            total += b * Fraction(corr, 2)
        else:
            total += b * corr
    return total


def circulant_min_eigenvalue(f: CirculantForm) -> float:
    """Smallest eigenvalue of the symmetric matrix realizing f's quadratic part.

    The matrix has b_0 on the diagonal and b_{(j-i) mod n} / 2 in entry
    (i, j); its eigenvalues are the real cosine sums below.  Floating
    point only; everything certificate-grade stays rational.
    """
    n = f.n
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    b = [float(c) for c in f.coeffs]
    cos_table = [math.cos(2.0 * math.pi * m / n) for m in range(n)]
    smallest = math.inf
    for j in range(n):
        lam = b[0]
        for k in range(1, n):
            lam += 0.5 * b[k] * cos_table[(j * k) % n]
        smallest = min(smallest, lam)
    return smallest


def form_to_json_obj(f: CirculantForm) -> dict:
    """JSON-ready dict with rationals rendered in lowest terms as strings."""
    return {
        "n": f.n,
        "constant": str(f.constant),
        "coeffs": [str(c) for c in f.coeffs],
    }


def form_from_json_obj(obj: dict) -> CirculantForm:
    return CirculantForm(
        int(obj["n"]),
        Fraction(obj["constant"]),
        tuple(Fraction(c) for c in obj["coeffs"]),
    )
