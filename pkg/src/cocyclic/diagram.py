"""4 x t diagrams of coboundary index sets.

Grid row k (1..4) holds the indices of one residue class mod 4, in the
class order 2, 3, 0, 1; column j (0..t-1) is the x-exponent of the element.
Cell (k, j) therefore stands for index ``4*j + ROW_LABELS[k-1]``.  Columns
are displayed right to left, so the leftmost character is column t-1.

A diagram is stored as the bit mask of its index set (bit d-1 for index d).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidParameter, ParseError
from .group import check_t
from .matrix import mask_of, set_of

__all__ = [
    "ROW_LABELS",
    "Diagram",
    "cell_index",
    "row_mask",
    "diagram_from_set",
    "set_from_diagram",
    "render",
    "parse",
    "v_translates",
    "v_canonical",
    "cocycle_translates",
    "cocycle_canonical",
    "cocycle_canonical_mask",
    "grid_key",
    "random_diagram",
    "format_index_set",
    "parse_index_set",
]

# label of the residue class held by each grid row; label L <-> d = L (mod 4)
ROW_LABELS = (2, 3, 4, 1)
MARK, BLANK = "x", "-"


@dataclass(frozen=True)
class Diagram:
    t: int
    mask: int = 0

    @property
    def indices(self) -> list[int]:
        return set_of(self.mask)

    def marked(self, k: int, j: int) -> bool:
        return bool(self.mask >> (cell_index(k, j, self.t) - 1) & 1)

    def __str__(self) -> str:
        return render(self)


def cell_index(k: int, j: int, t: int) -> int:
    """Coboundary index of grid row ``k`` (1-based), column ``j``."""
    return 4 * (j % t) + ROW_LABELS[k - 1]


@lru_cache(maxsize=None)
def row_mask(k: int, t: int) -> int:
    """Mask of the full grid row ``k``."""
    return sum(1 << (cell_index(k, j, t) - 1) for j in range(t))


def diagram_from_set(indices: Iterable[int], t: int) -> Diagram:
    return Diagram(check_t(t), mask_of(indices, t))


def set_from_diagram(d: Diagram) -> list[int]:
    return d.indices


def render(d: Diagram) -> str:
    return "\n".join(
        "".join(MARK if d.marked(k, j) else BLANK for j in range(d.t - 1, -1, -1))
        for k in range(1, 5)
    )


def parse(text: str, t: int) -> Diagram:
    check_t(t)
    lines = [ln.strip() for ln in text.strip("\n").splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 4:
        raise ParseError(f"diagram needs 4 rows, got {len(lines)}")
    mask = 0
    for k, line in enumerate(lines, 1):
        if len(line) != t:
            raise ParseError(f"row has {len(line)} cells, expected {t}", k)
        for pos, ch in enumerate(line):
            if ch == MARK:
                mask |= 1 << (cell_index(k, t - 1 - pos, t) - 1)
            elif ch != BLANK:
                raise ParseError(f"unexpected character {ch!r}", k, pos + 1)
    return Diagram(t, mask)


@lru_cache(maxsize=None)
def _v_masks(t: int) -> tuple[int, ...]:
    r1, r2, r3 = (row_mask(k, t) for k in (1, 2, 3))
    return (0, r1 | r3, r2 | r3, r1 | r2)


@lru_cache(maxsize=None)
def _cocycle_masks(t: int) -> tuple[int, ...]:
    full = (1 << 4 * t) - 1
    v = _v_masks(t)
    return v + tuple(m ^ full for m in v)


def v_translates(d: Diagram) -> list[Diagram]:
    """D and its complements in the full row pairs {1,3}, {2,3}, {1,2}."""
    return [Diagram(d.t, d.mask ^ m) for m in _v_masks(d.t)]


@lru_cache(maxsize=None)
def _key_order(t: int) -> tuple[int, ...]:
    # bit positions of cells in row-major display order (most significant first)
    return tuple(cell_index(k, j, t) - 1 for k in range(1, 5) for j in range(t - 1, -1, -1))


@lru_cache(maxsize=None)
def _key_tables(t: int) -> tuple[tuple[int, ...], ...]:
    n = 4 * t
    weight = {pos: 1 << (n - 1 - i) for i, pos in enumerate(_key_order(t))}
    tables = []
    for base in range(0, n, 8):
        tables.append(tuple(
            sum(weight[base + b] for b in range(8) if base + b < n and v >> b & 1)
            for v in range(256)
        ))
    return tuple(tables)


def grid_key(mask: int, t: int) -> int:
    """Row-major display bit string of a diagram as an integer.

    Comparing keys compares the grids lexicographically.
    """
    key = 0
    for table in _key_tables(t):
        key |= table[mask & 255]
        mask >>= 8
    return key


@lru_cache(maxsize=None)
def _keyed(translates: tuple[int, ...], t: int) -> tuple[tuple[int, int], ...]:
    return tuple((grid_key(m, t), m) for m in translates)


def _least(mask: int, translates: tuple[int, ...], t: int) -> int:
    # grid_key is linear over XOR, so compare keys of the translates directly
    key = grid_key(mask, t)
    return mask ^ min(_keyed(translates, t), key=lambda km: key ^ km[0])[1]


def v_canonical(d: Diagram) -> Diagram:
    """Lexicographically least of the four V-translates."""
    return Diagram(d.t, _least(d.mask, _v_masks(d.t), d.t))


def cocycle_translates(d: Diagram) -> list[Diagram]:
    """The eight diagrams assembling to the same cocycle as ``d``.

    These are the V-translates and their complements in the full grid: the
    sets of an even number of full rows all assemble to the trivial cocycle.
    """
    return [Diagram(d.t, d.mask ^ m) for m in _cocycle_masks(d.t)]


def cocycle_canonical(d: Diagram) -> Diagram:
    """Lexicographically least diagram of the same cocycle."""
    return Diagram(d.t, _least(d.mask, _cocycle_masks(d.t), d.t))


def cocycle_canonical_mask(mask: int, t: int) -> int:
    return _least(mask, _cocycle_masks(t), t)


def random_diagram(t: int, rng: random.Random | None = None) -> Diagram:
    rng = rng or random
    return Diagram(t, rng.getrandbits(4 * t))


def format_index_set(indices: Iterable[int]) -> str:
    return ",".join(str(d) for d in sorted(indices))


def parse_index_set(text: str, t: int) -> list[int]:
    """Parse ``"4,6,9"``; the empty string (or ``-``) is the empty set."""
    check_t(t)
    text = text.strip()
    if text in ("", "-"):
        return []
    out = []
    for pos, tok in enumerate(text.split(","), 1):
        tok = tok.strip()
        if not tok.isdigit():
            raise ParseError(f"bad index token {tok!r}", column=pos)
        d = int(tok)
        if not 1 <= d <= 4 * t:
            raise ParseError(f"index token {tok!r} outside 1..{4 * t}", column=pos)
        out.append(d)
    if len(set(out)) != len(out):
        raise ParseError("repeated index in set")
    return sorted(out)
