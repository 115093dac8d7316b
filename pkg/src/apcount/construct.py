"""Two-colorings of group elements and the explicit block colorings that attain the upper bounds.

Color 0 is red and maps to +1, color 1 is blue and maps to -1.  A
coloring of D_2n colors all 2n elements (rotations first).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds
from .circulant import evaluate_signs, rotate_bits
from .group_ap import build_pn, enumerate_aps_dihedral, num_aps_zn

_COLOR_CHARS = {"R": 0, "B": 1, "0": 0, "1": 1}


@dataclass(frozen=True)
class Coloring:
    """Assignment of each of n group elements to red (0) or blue (1)."""

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"coloring length must be positive, got {self.n}")
        colors = tuple(self.colors)
        if len(colors) != self.n:
            raise ValueError(f"expected {self.n} colors, got {len(colors)}")
        for i, c in enumerate(colors):
            if c not in (0, 1):
                raise ValueError(f"position {i}: color must be 0 or 1, got {c!r}")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def from_string(cls, text: str) -> "Coloring":
        """Parse a coloring string over R/B (0/1 accepted as synonyms)."""
        colors = []
        for i, ch in enumerate(text):
            c = _COLOR_CHARS.get(ch.upper())
            if c is None:
                raise ValueError(
                    f"position {i}: expected one of R, B, 0, 1, got {ch!r}"
                )
            colors.append(c)
        if not colors:
            raise ValueError("empty coloring string")
        return cls(len(colors), tuple(colors))

    @classmethod
    def all_red(cls, n: int) -> "Coloring":
        return cls(n, (0,) * n)

    @classmethod
    def from_blue_mask(cls, n: int, mask: int) -> "Coloring":
        return cls(n, tuple((mask >> i) & 1 for i in range(n)))

    def to_string(self) -> str:
        return "".join("B" if c else "R" for c in self.colors)

    def sign_vector(self) -> tuple[int, ...]:
        """The +/-1 vector with red -> +1, blue -> -1."""
        return tuple(1 - 2 * c for c in self.colors)

    def blue_mask(self) -> int:
        mask = 0
        for i, c in enumerate(self.colors):
            if c:
                mask |= 1 << i
        return mask

    def swapped(self) -> "Coloring":
        return Coloring(self.n, tuple(1 - c for c in self.colors))

    def rotated(self, k: int) -> "Coloring":
        """Relabel by g -> g + k (mod n)."""
        return Coloring(self.n, tuple(self.colors[(i + k) % self.n] for i in range(self.n)))

    def reflected(self) -> "Coloring":
        """Relabel by g -> -g (mod n)."""
        return Coloring(self.n, tuple(self.colors[-i % self.n] for i in range(self.n)))


def count_monochromatic(coloring: Coloring, group: str = "cyclic") -> int:
    """Number of canonical 3-APs whose three elements share one color.

    The cyclic count walks the canonical AP families difference by
    difference on bit masks, which is the direct scan with the inner
    loop batched into popcounts; the dihedral count iterates the
    deduplicated dihedral AP list as-is.
    """
    if group == "cyclic":
        n = coloring.n
        if n < 3:
            return 0
        blue = coloring.blue_mask()
        full = (1 << n) - 1
        red = ~blue & full
        third = n // 3 if n % 3 == 0 else 0
        total = 0
        for d in range(1, (n - 1) // 2 + 1):
            d2 = 2 * d % n
            mono = (red & rotate_bits(red, d, n) & rotate_bits(red, d2, n)) | (
                blue & rotate_bits(blue, d, n) & rotate_bits(blue, d2, n)
            )
            if d == third:
                mono &= (1 << third) - 1
            total += mono.bit_count()
        return total
    if group == "dihedral":
        if coloring.n % 2 != 0:
            raise ValueError(f"a dihedral coloring has even length, got {coloring.n}")
        colors = coloring.colors
        return sum(
            1
            for a, b, c in enumerate_aps_dihedral(coloring.n // 2)
            if colors[a] == colors[b] == colors[c]
        )
    raise ValueError(f"unknown group kind {group!r}; expected 'cyclic' or 'dihedral'")


def count_via_pn(coloring: Coloring) -> int:
    """Monochromatic count through the objective-form identity (#mono = (p(x) + #APs) / 4).

    Independent route from the direct scan; the two must agree on every
    coloring and are cross-checked in the test suite.
    """
    n = coloring.n
    if n < 3:
        return 0
    value = evaluate_signs(build_pn(n), coloring.blue_mask())
    count = (value + num_aps_zn(n)) / 4
    if count.denominator != 1:
        raise AssertionError(f"count identity produced non-integer {count} at n={n}")
    return count.numerator


@dataclass(frozen=True)
class ConstructionResult:
    """A block coloring together with the upper-bound value it is expected to attain."""

    coloring: Coloring
    case: str
    block_sizes: tuple[int, ...]
    expected_count: int


def _blocks_to_coloring(n: int, sizes: list[int]) -> Coloring:
    # Blocks alternate red/blue by block index starting red; empty blocks
    # still consume their color slot (this matters for tiny n where the
    # small blocks vanish).
    colors = []
    for idx, size in enumerate(sizes):
        colors.extend([idx % 2] * size)
    if len(colors) != n:
        raise AssertionError(f"block sizes {sizes} sum to {len(colors)}, expected {n}")
    return Coloring(n, tuple(colors))


def extremal_coloring(n: int) -> ConstructionResult:
    """The residue-matched block coloring attaining the closed-form upper bound."""
    if n < 3:
        raise ValueError(f"constructions need n >= 3, got {n}")
    odd = n % 2 == 1
    div3 = n % 3 == 0
    if odd and not div3:
        case = "halves"
        sizes = [(n + 1) // 2, (n - 1) // 2]
    elif not odd and not div3 and n % 8 in (0, 4):
        case = "quarters"
        sizes = [n // 4] * 4
    elif not odd and not div3:
        case = "near-quarters"
        sizes = [(n + 2) // 4, (n - 2) // 4, (n + 2) // 4, (n - 2) // 4]
    elif odd:
        case = "sixths"
        s = (n + 3) // 6
        sizes = [s, s - 1] * 3
    elif n % 12 == 0:
        case = "twelfths"
        sizes = [n // 12] * 12
    else:
        case = "near-twelfths"
        t = (n + 6) // 12
        sizes = [t, t - 1] * 6
    return ConstructionResult(
        coloring=_blocks_to_coloring(n, sizes),
        case=case,
        block_sizes=tuple(sizes),
        expected_count=bounds.upper(n),
    )
