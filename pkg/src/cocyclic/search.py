"""Exhaustive search for orthogonal cocycles psi = prod(d in S) d_d * rho.

Masks (bit d-1 <-> index d) are visited in Gray-code order, so each step
XORs the rows of a single generator matrix into the current assembled
matrix.  A mask is a hit when every row but the first has exactly 2t
entries -1 (the first row of an assembled matrix is constant).

For 4t <= 64 rows are single ``uint64`` words and the sweep runs in a numba
kernel; larger orders fall back to :class:`SearchState` in pure Python.
"""

from __future__ import annotations

import logging
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numba
import numpy as np

from .diagram import cell_index
from .errors import InvalidParameter
from .group import check_t
from .matrix import SignMatrix, assemble_mask, generator_matrix, hadamard_full

__all__ = [
    "SearchSummary",
    "SearchAborted",
    "SearchState",
    "quotient_fixed_bits",
    "search_exhaustive",
    "search_partition",
    "search_parallel",
    "naive_hits",
    "trace_states",
    "format_hits",
    "parse_hits",
]

log = logging.getLogger(__name__)

BLOCK_BITS = 22
SUPPORTED_T = (3, 5, 7)


@dataclass
class SearchSummary:
    t: int
    visited: int = 0
    hits: list[int] = field(default_factory=list)
    elapsed: float = 0.0
    quotient_v: bool = False

    @property
    def hit_count(self) -> int:
        return len(self.hits)

    @property
    def hits_with_index1(self) -> int:
        return sum(m & 1 for m in self.hits)

    def merge(self, other: "SearchSummary") -> None:
        self.visited += other.visited
        self.hits.extend(other.hits)
        self.elapsed += other.elapsed


class SearchAborted(RuntimeError):
    def __init__(self, summary: SearchSummary, cause: BaseException):
        self.summary = summary
        super().__init__(
            f"sink failed after {summary.visited} masks and {summary.hit_count} hits: {cause!r}"
        )


class SearchState:
    """Incrementally maintained assembled matrix for one mask."""

    def __init__(self, t: int, mask: int = 0):
        self.t = check_t(t)
        self.n = 4 * t
        self.mask = mask
        self.rows = list(assemble_mask(mask, t).rows)
        self.flips = [generator_matrix(d, t).rows for d in range(1, self.n + 1)]
        self.popcounts = [r.bit_count() for r in self.rows]

    def flip(self, bit: int) -> None:
        """Toggle index ``bit + 1`` in the mask."""
        self.mask ^= 1 << bit
        pattern = self.flips[bit]
        rows, pops = self.rows, self.popcounts
        for g in range(self.n):
            rows[g] ^= pattern[g]
            pops[g] = rows[g].bit_count()

    def is_hit(self) -> bool:
        half = self.n // 2
        return all(p == half for p in self.popcounts[1:])

    def matrix(self) -> SignMatrix:
        return SignMatrix(self.n, tuple(self.rows))


# -- numba kernel -------------------------------------------------------------

@numba.njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@numba.njit(cache=True)
def _sweep(rows, mask, flips, free_bits, half, checkpoints, snapshots, snap_masks):
    n = rows.shape[0]
    m = free_bits.shape[0]
    hits = np.empty(1024, dtype=np.uint64)
    nhits = 0
    ncp = checkpoints.shape[0]
    cp = 0
    total = np.int64(1) << np.int64(m)
    for step in range(total):
        if step > 0:
            b = 0
            s = step
            while (s & 1) == 0:
                s >>= 1
                b += 1
            mask ^= np.uint64(1) << np.uint64(free_bits[b])
            for g in range(n):
                rows[g] ^= flips[b, g]
        if cp < ncp and checkpoints[cp] == step:
            for g in range(n):
                snapshots[cp, g] = rows[g]
            snap_masks[cp] = mask
            cp += 1
        ok = True
        for g in range(1, n):
            if _popcount(rows[g]) != half:
                ok = False
                break
        if ok:
            if nhits == hits.shape[0]:
                grown = np.empty(2 * nhits, dtype=np.uint64)
                grown[:nhits] = hits
                hits = grown
            hits[nhits] = mask
            nhits += 1
    return hits[:nhits]


def _as_words(rows: Sequence[int]) -> np.ndarray:
    return np.array(rows, dtype=np.uint64)


def _run_block(t: int, base_mask: int, free_bits: Sequence[int], checkpoints=()) -> tuple[list[int], list]:
    """Visit ``base_mask`` xor every combination of ``free_bits``."""
    n = 4 * t
    if n > 64:
        return _run_block_python(t, base_mask, free_bits, checkpoints)
    rows = _as_words(assemble_mask(base_mask, t).rows)
    if free_bits:
        flips = np.array([generator_matrix(b + 1, t).rows for b in free_bits], dtype=np.uint64)
    else:
        flips = np.zeros((1, n), dtype=np.uint64)
    cps = np.array(sorted(checkpoints), dtype=np.int64)
    snaps = np.zeros((len(cps), n), dtype=np.uint64)
    snap_masks = np.zeros(len(cps), dtype=np.uint64)
    hits = _sweep(rows, np.uint64(base_mask), flips,
                  np.array(free_bits, dtype=np.int64), n // 2, cps, snaps, snap_masks)
    traced = [(int(mk), tuple(int(w) for w in snap)) for mk, snap in zip(snap_masks, snaps)]
    return [int(h) for h in hits], traced


def _run_block_python(t, base_mask, free_bits, checkpoints=()):
    state = SearchState(t, base_mask)
    cps = set(checkpoints)
    hits, traced = [], []
    for step in range(1 << len(free_bits)):
        if step:
            b = (step & -step).bit_length() - 1
            state.flip(free_bits[b])
        if step in cps:
            traced.append((state.mask, tuple(state.rows)))
        if state.is_hit():
            hits.append(state.mask)
    return hits, traced


# -- public API ---------------------------------------------------------------

def quotient_fixed_bits(t: int) -> tuple[int, int]:
    """Bits forced to 0 on V-canonical masks.

    A diagram is the least of its V-translates iff the leftmost cells of
    grid rows 1 and 2 are blank.
    """
    return (cell_index(1, t - 1, t) - 1, cell_index(2, t - 1, t) - 1)


def _check_supported(t: int) -> None:
    check_t(t)
    if t not in SUPPORTED_T:
        warnings.warn(f"t={t}: the full search visits 2^{4 * t} masks", RuntimeWarning, stacklevel=3)


def search_partition(
    t: int,
    prefix_bits: int,
    prefix_value: int,
    sink: Callable[[int], object] | None = None,
    quotient_v: bool = False,
) -> SearchSummary:
    """Search the masks whose top ``prefix_bits`` bits equal ``prefix_value``."""
    check_t(t)
    n = 4 * t
    if not 0 <= prefix_bits <= n:
        raise InvalidParameter(f"prefix width {prefix_bits} outside 0..{n}")
    if not 0 <= prefix_value < (1 << prefix_bits):
        raise InvalidParameter(f"prefix value {prefix_value} does not fit {prefix_bits} bits")
    summary = SearchSummary(t, quotient_v=quotient_v)
    start = time.perf_counter()
    base = prefix_value << (n - prefix_bits)
    fixed = set(range(n - prefix_bits, n))
    if quotient_v:
        q = quotient_fixed_bits(t)
        if any(base >> b & 1 for b in q):
            return summary
        fixed.update(q)
    free = [b for b in range(n) if b not in fixed]
    # split the remaining space into blocks so the sink sees hits as they come
    outer = free[BLOCK_BITS:]
    inner = free[:BLOCK_BITS]
    for ob in range(1 << len(outer)):
        block_base = base
        for i, b in enumerate(outer):
            if ob >> i & 1:
                block_base |= 1 << b
        hits, _ = _run_block(t, block_base, inner)
        summary.visited += 1 << len(inner)
        # the row-sum test is only sound for cocyclic matrices; confirm each hit
        for h in hits:
            if not hadamard_full(assemble_mask(h, t)):
                raise RuntimeError(f"mask {h:#x} passed the row-sum test but is not Hadamard")
        try:
            for h in hits:
                if sink is not None:
                    sink(h)
                summary.hits.append(h)
        except Exception as exc:
            summary.elapsed = time.perf_counter() - start
            raise SearchAborted(summary, exc) from exc
    summary.hits.sort()
    summary.elapsed = time.perf_counter() - start
    return summary


def search_exhaustive(
    t: int,
    sink: Callable[[int], object] | None = None,
    quotient_v: bool = False,
) -> SearchSummary:
    """Visit every mask (or every V-canonical mask) and collect the hits."""
    _check_supported(t)
    summary = search_partition(t, 0, 0, sink, quotient_v)
    log.info("t=%d visited=%d hits=%d in %.2fs", t, summary.visited, summary.hit_count, summary.elapsed)
    return summary


def _partition_job(args):
    t, width, value, quotient_v = args
    return search_partition(t, width, value, None, quotient_v)


def search_parallel(
    t: int,
    workers: int,
    prefix_bits: int | None = None,
    quotient_v: bool = False,
    sink: Callable[[int], object] | None = None,
) -> SearchSummary:
    """Run every prefix partition in a process pool and merge deterministically."""
    _check_supported(t)
    if workers < 1:
        raise InvalidParameter("workers must be >= 1")
    if prefix_bits is None:
        prefix_bits = min(4 * t, max(1, (4 * workers - 1).bit_length()))
    jobs = [(t, prefix_bits, v, quotient_v) for v in range(1 << prefix_bits)]
    total = SearchSummary(t, quotient_v=quotient_v)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_partition_job, jobs):
            total.merge(part)
    total.hits.sort()
    if sink is not None:
        try:
            for h in total.hits:
                sink(h)
        except Exception as exc:
            raise SearchAborted(total, exc) from exc
    return total


def naive_hits(t: int, masks: Iterable[int] | None = None) -> list[int]:
    """Oracle: assemble every mask from scratch and apply the Gram test."""
    check_t(t)
    if masks is None:
        masks = range(1 << 4 * t)
    return sorted(m for m in masks if hadamard_full(assemble_mask(m, t)))


def trace_states(t: int, steps: Iterable[int], base_mask: int = 0, free_bits=None):
    """(mask, rows) of the sweep at the given step numbers, for integrity checks."""
    check_t(t)
    if free_bits is None:
        free_bits = list(range(4 * t))
    _, traced = _run_block(t, base_mask, list(free_bits), checkpoints=sorted(set(steps)))
    return traced


def format_hits(summary: SearchSummary) -> str:
    total = 1 << 4 * summary.t
    lines = [f"# t={summary.t} total={total} hits={summary.hit_count}"]
    lines.extend(",".join(str(d) for d in _indices(m)) for m in summary.hits)
    return "\n".join(lines) + "\n"


def _indices(mask: int) -> list[int]:
    return [b + 1 for b in range(mask.bit_length()) if mask >> b & 1]


def parse_hits(text: str) -> tuple[int | None, list[list[int]]]:
    """Read a hits file: returns the header's t (if any) and the index sets."""
    t = None
    sets = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if tok.startswith("t="):
                    t = int(tok[2:])
            continue
        sets.append([int(x) for x in line.split(",") if x])
    return t, sets
