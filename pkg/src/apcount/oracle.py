"""Exhaustive minimum-monochromatic-count search over all 2-colorings of small groups.

Global color swap never changes the count, so element 0's color is
fixed and 2^(order-1) colorings remain.  They are visited in binary
reflected Gray-code order: each step flips one element's color and the
count is updated through only the progressions containing that element,
via a precomputed element-to-progressions index.  The coloring space
can additionally be partitioned into shards by fixing a prefix of
elements; shard scans are independent and merge deterministically.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .construct import Coloring, count_monochromatic
from .group_ap import ApTriple, enumerate_aps_dihedral, enumerate_aps_zn

DEFAULT_ORDER_CEILING = {"cyclic": 26, "dihedral": 22}

GROUP_KINDS = ("cyclic", "dihedral")


class CeilingExceededError(ValueError):
    """The requested group order is above the configured exhaustive ceiling."""


def _group_order(n: int, group: str) -> int:
    if group == "cyclic":
        return n
    if group == "dihedral":
        return 2 * n
    raise ValueError(f"unknown group kind {group!r}; expected one of {GROUP_KINDS}")


def _ap_list(n: int, group: str) -> list[ApTriple]:
    return enumerate_aps_zn(n) if group == "cyclic" else enumerate_aps_dihedral(n)


@dataclass(frozen=True)
class IncidenceIndex:
    """For each element, the canonical progressions through it (as indices into `aps`)."""

    order: int
    aps: tuple[ApTriple, ...]
    by_element: tuple[tuple[int, ...], ...]


def incidence_index(n: int, group: str = "cyclic") -> IncidenceIndex:
    order = _group_order(n, group)
    if order < 3:
        raise ValueError(f"incidence index needs group order >= 3, got {order}")
    aps = _ap_list(n, group)
    by_element: list[list[int]] = [[] for _ in range(order)]
    for idx, triple in enumerate(aps):
        for element in triple:
            by_element[element].append(idx)
    return IncidenceIndex(order, tuple(aps), tuple(tuple(v) for v in by_element))


def _other_pairs(order: int, aps: list[ApTriple]) -> list[tuple[tuple[int, int], ...]]:
    # pairs[e] lists, for every progression through e, the other two members.
    pairs: list[list[tuple[int, int]]] = [[] for _ in range(order)]
    for a, b, c in aps:
        pairs[a].append((b, c))
        pairs[b].append((a, c))
        pairs[c].append((a, b))
    return [tuple(p) for p in pairs]


def _count_monochromatic_list(colors: list[int], aps: list[ApTriple]) -> int:
    return sum(1 for a, b, c in aps if colors[a] == colors[b] == colors[c])


def _scan_shard(
    order: int,
    aps: list[ApTriple],
    pairs: list[tuple[tuple[int, int], ...]],
    prefix_bits: int,
    prefix_len: int,
) -> tuple[int, int, int]:
    """Gray-code scan of one shard; returns (minimum, witness blue mask, colorings scanned).

    The witness is the first minimizing coloring in scan order.
    """
    colors = [0] * order
    for j in range(1, prefix_len):
        colors[j] = (prefix_bits >> (j - 1)) & 1
    scan = list(range(prefix_len, order))
    count = _count_monochromatic_list(colors, aps)
    best = count
    best_mask = prefix_bits << 1
    steps = 1 << len(scan)
    for i in range(1, steps):
        e = scan[(i & -i).bit_length() - 1]
        xe = colors[e]
        delta = 0
        for u, v in pairs[e]:
            cu = colors[u]
            if cu == colors[v]:
                delta = delta + 1 if cu != xe else delta - 1
        colors[e] = 1 - xe
        count += delta
        if count < best:
            best = count
            mask = 0
            for g in range(order):
                if colors[g]:
                    mask |= 1 << g
            best_mask = mask
    return best, best_mask, steps


def _scan_shard_task(args: tuple[int, str, int, int]) -> tuple[int, int, int]:
    # Worker-process entry point; rebuilds the (small) incidence locally
    # rather than pickling it.
    n, group, prefix_bits, prefix_len = args
    order = _group_order(n, group)
    aps = _ap_list(n, group)
    pairs = _other_pairs(order, aps)
    return _scan_shard(order, aps, pairs, prefix_bits, prefix_len)


def iter_scan_counts(n: int, group: str = "cyclic") -> Iterator[int]:
    """Yield the monochromatic count of every coloring with element 0 fixed red.

    Same Gray-code incremental walk as the minimum search; used by the
    parity check and by incremental-vs-recount tests.
    """
    order = _group_order(n, group)
    if order < 3:
        raise ValueError(f"scan needs group order >= 3, got {order}")
    aps = _ap_list(n, group)
    pairs = _other_pairs(order, aps)
    colors = [0] * order
    count = len(aps)
    yield count
    for i in range(1, 1 << (order - 1)):
        e = (i & -i).bit_length()
        xe = colors[e]
        delta = 0
        for u, v in pairs[e]:
            cu = colors[u]
            if cu == colors[v]:
                delta = delta + 1 if cu != xe else delta - 1
        colors[e] = 1 - xe
        count += delta
        yield count


@dataclass(frozen=True)
class OracleResult:
    group: str
    n: int
    minimum: int
    witness: Coloring
    colorings_scanned: int
    elapsed: float

    def to_json_obj(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "minimum": self.minimum,
            "witness": self.witness.to_string(),
            "colorings_scanned": self.colorings_scanned,
            "elapsed": self.elapsed,
        }


def _auto_shard_count(workers: int, order: int) -> int:
    # Enough shards to keep workers busy, but never so many that a shard
    # holds fewer than 16 colorings.
    if workers <= 1:
        return 1
    shards = 1
    while shards < 4 * workers:
        shards *= 2
    return min(shards, 1 << max(0, order - 5))


def exact_minimum(
    n: int,
    group: str = "cyclic",
    *,
    order_ceiling: Optional[int] = None,
    shards: Optional[int] = None,
    workers: int = 1,
) -> OracleResult:
    """Exact minimum monochromatic count over all 2-colorings, with one witness.

    `shards` (a power of two, auto-chosen when None) splits the space by
    fixing that many coloring prefixes; `workers` > 1 scans shards in
    parallel processes.  The merged result is independent of both knobs.
    """
    if n < 3:
        raise ValueError(f"oracle needs n >= 3, got {n}")
    order = _group_order(n, group)
    ceiling = DEFAULT_ORDER_CEILING[group] if order_ceiling is None else order_ceiling
    if order > ceiling:
        raise CeilingExceededError(
            f"group order {order} exceeds the exhaustive ceiling {ceiling} "
            f"({group} n={n}); raise order_ceiling to force the scan"
        )
    if shards is None:
        shards = _auto_shard_count(workers, order)
    if shards < 1 or shards & (shards - 1):
        raise ValueError(f"shards must be a power of two, got {shards}")
    prefix_len = shards.bit_length()  # shards == 2^(prefix_len - 1)
    if prefix_len > order:
        raise ValueError(f"{shards} shards need group order > {prefix_len - 1}, got {order}")

    started = time.perf_counter()
    tasks = [(n, group, s, prefix_len) for s in range(shards)]
    if workers > 1 and shards > 1:
        try:
            with ProcessPoolExecutor(max_workers=min(workers, shards)) as pool:
                outcomes = list(pool.map(_scan_shard_task, tasks))
        except OSError:
            outcomes = [_scan_shard_task(t) for t in tasks]
    else:
        aps = _ap_list(n, group)
        pairs = _other_pairs(order, aps)
        outcomes = [
            _scan_shard(order, aps, pairs, s, prefix_len) for s in range(shards)
        ]
    minimum, witness_mask = min((best, mask) for best, mask, _ in outcomes)
    scanned = sum(steps for _, _, steps in outcomes)
    elapsed = time.perf_counter() - started

    witness = Coloring.from_blue_mask(order, witness_mask)
    recount = count_monochromatic(witness, group)
    if recount != minimum:
        raise AssertionError(
            f"witness recount {recount} disagrees with scan minimum {minimum} "
            f"({group} n={n})"
        )
    return OracleResult(group, n, minimum, witness, scanned, elapsed)


@dataclass(frozen=True)
class CacheEntry:
    group: str
    n: int
    minimum: int
    witness: str
    timestamp: str


class ResultsCache:
    """Append-only JSON-lines store of oracle results, keyed by (group, n)."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._entries: dict[tuple[str, int], CacheEntry] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                line = line.strip()
                if not line:
                    continue
                obj = json.loads(line)
                entry = CacheEntry(
                    obj["group"], int(obj["n"]), int(obj["minimum"]),
                    obj["witness"], obj["timestamp"],
                )
                self._entries[(entry.group, entry.n)] = entry

    def get(self, group: str, n: int) -> Optional[CacheEntry]:
        return self._entries.get((group, n))

    def add(self, result: OracleResult) -> CacheEntry:
        entry = CacheEntry(
            group=result.group,
            n=result.n,
            minimum=result.minimum,
            witness=result.witness.to_string(),
            timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        )
        with self.path.open("a") as handle:
            handle.write(json.dumps({
                "group": entry.group,
                "n": entry.n,
                "minimum": entry.minimum,
                "witness": entry.witness,
                "timestamp": entry.timestamp,
            }) + "\n")
        self._entries[(entry.group, entry.n)] = entry
        return entry
