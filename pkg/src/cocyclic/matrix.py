"""Bit-packed +-1 matrices and the generator matrices of Z_t x Z_2^2 cocycles.

A :class:`SignMatrix` row is an ``int`` whose bit ``h`` is set when the entry
in column ``h`` (0-based) is -1.  Pointwise products are XORs of rows and a
row's count of -1 entries is its popcount.  Row and column ``g`` of a
cocyclic matrix correspond to the group element with index ``g + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameter, ParseError
from .group import check_t, g_mul, elements

__all__ = [
    "SignMatrix",
    "RHO_BLOCK",
    "K_BLOCK",
    "mask_of",
    "set_of",
    "class_indices",
    "rho_matrix",
    "k_matrix",
    "delta_matrix",
    "generator_matrix",
    "block_gen_matrix",
    "assemble",
    "assemble_mask",
    "is_cocycle",
    "hadamard_full",
    "hadamard_rowsum",
    "transpose",
    "format_matrix",
    "parse_matrix",
]

RHO_BLOCK = ((1, 1, 1, 1), (1, -1, 1, -1), (1, -1, -1, 1), (1, 1, -1, -1))
K_BLOCK = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))


@dataclass(frozen=True)
class SignMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InvalidParameter(f"expected {self.n} rows, got {len(self.rows)}")

    @classmethod
    def from_signs(cls, entries: Sequence[Sequence[int]]) -> "SignMatrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise InvalidParameter("matrix must be square")
            bits = 0
            for h, e in enumerate(row):
                if e == -1:
                    bits |= 1 << h
                elif e != 1:
                    raise InvalidParameter(f"entry {e!r} is not +-1")
            rows.append(bits)
        return cls(n, tuple(rows))

    @classmethod
    def ones(cls, n: int) -> "SignMatrix":
        return cls(n, (0,) * n)

    def entry(self, g: int, h: int) -> int:
        """The +-1 entry at 0-based position ``(g, h)``."""
        return -1 if (self.rows[g] >> h) & 1 else 1

    def to_array(self) -> np.ndarray:
        out = np.ones((self.n, self.n), dtype=np.int8)
        for g, row in enumerate(self.rows):
            for h in range(self.n):
                if (row >> h) & 1:
                    out[g, h] = -1
        return out

    @classmethod
    def from_array(cls, arr) -> "SignMatrix":
        return cls.from_signs(np.asarray(arr).tolist())

    def __mul__(self, other: "SignMatrix") -> "SignMatrix":
        # pointwise (Hadamard) product
        if self.n != other.n:
            raise InvalidParameter("orders differ")
        return SignMatrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> "SignMatrix":
        full = (1 << self.n) - 1
        return SignMatrix(self.n, tuple(r ^ full for r in self.rows))

    def row_popcounts(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def __str__(self) -> str:
        return format_matrix(self)


def mask_of(indices: Iterable[int], t: int) -> int:
    """Bit mask with bit ``d - 1`` set for every index ``d``."""
    n = 4 * t
    mask = 0
    for d in indices:
        if not 1 <= d <= n:
            raise InvalidParameter(f"index {d} outside 1..{n}")
        mask |= 1 << (d - 1)
    return mask


def set_of(mask: int) -> list[int]:
    out = []
    d = 1
    while mask:
        if mask & 1:
            out.append(d)
        mask >>= 1
        d += 1
    return out


def class_indices(residue: int, t: int) -> list[int]:
    """Indices ``d`` in 1..4t with ``d = residue (mod 4)``."""
    return [d for d in range(1, 4 * t + 1) if d % 4 == residue % 4]


def _kron_block(block, t: int) -> SignMatrix:
    n = 4 * t
    rows = []
    for g in range(n):
        brow = block[g % 4]
        bits = 0
        for h in range(n):
            if brow[h % 4] == -1:
                bits |= 1 << h
        rows.append(bits)
    return SignMatrix(n, tuple(rows))


@lru_cache(maxsize=None)
def rho_matrix(t: int) -> SignMatrix:
    """M_rho = J_t (x) RHO_BLOCK."""
    return _kron_block(RHO_BLOCK, check_t(t))


@lru_cache(maxsize=None)
def k_matrix(t: int) -> SignMatrix:
    """J_t (x) K_BLOCK: the product of all coboundaries of class 2 mod 4."""
    return _kron_block(K_BLOCK, check_t(t))


@lru_cache(maxsize=None)
def _mul_index(t: int) -> tuple[tuple[int, ...], ...]:
    els = elements(t)
    return tuple(tuple(4 * p.a + p.o for p in (g_mul(g, h, t) for h in els)) for g in els)


@lru_cache(maxsize=None)
def delta_matrix(d: int, t: int) -> SignMatrix:
    """Matrix of the coboundary of the Kronecker delta at the d-th element.

    Entry (g, h) is delta(g) delta(h) delta(gh) with delta = -1 exactly at
    the d-th element.  For d = 1 this cocycle is not normalised: its first
    row and column are -1.
    """
    n = 4 * check_t(t)
    if not 1 <= d <= n:
        raise InvalidParameter(f"index {d} outside 1..{n}")
    k = d - 1
    mul = _mul_index(t)
    rows = []
    for g in range(n):
        bits = 0
        for h in range(n):
            neg = (g == k) + (h == k) + (mul[g][h] == k)
            if neg & 1:
                bits |= 1 << h
        rows.append(bits)
    return SignMatrix(n, tuple(rows))


@lru_cache(maxsize=None)
def generator_matrix(d: int, t: int) -> SignMatrix:
    """The normalised coboundary used for index ``d`` when assembling.

    Equal to :func:`delta_matrix` except for ``d = 1``, where the sign is
    flipped so that the first row and column are +1.  With every generator
    normalised, shifts and automorphisms permute the generators exactly.
    """
    m = delta_matrix(d, t)
    return -m if d == 1 else m


_D = ((-1, 1), (1, -1))
_DR = ((1, -1), (-1, 1))
_J2 = ((1, 1), (1, 1))


def _block4(tl, tr, bl, br):
    return tuple(
        tuple(left[i] + right[i])
        for left, right in ((tl, tr), (bl, br))
        for i in range(2)
    )


A_BLOCKS = {
    0: _block4(_J2, _DR, _DR, _J2),
    1: _block4(_D, _J2, _J2, _D),
    2: _block4(_DR, _J2, _J2, _DR),
    3: _block4(_J2, _D, _D, _J2),
}


@lru_cache(maxsize=None)
def block_gen_matrix(i: int, t: int) -> SignMatrix:
    """Block back-diagonal form M_i of the i-th coboundary.

    Block row b (1-based) holds A_{i mod 4} in block column
    ``ceil(i/4) - (b - 1)`` (mod t) and all-ones blocks elsewhere.
    """
    n = 4 * check_t(t)
    if not 1 <= i <= n:
        raise InvalidParameter(f"index {i} outside 1..{n}")
    a_block = A_BLOCKS[i % 4]
    first = -(-i // 4)
    rows = []
    for g in range(n):
        b = g // 4 + 1
        c = (first - (b - 1) - 1) % t  # 0-based block column
        bits = 0
        for q in range(4):
            if a_block[g % 4][q] == -1:
                bits |= 1 << (4 * c + q)
        rows.append(bits)
    return SignMatrix(n, tuple(rows))


def assemble_mask(mask: int, t: int, include_rho: bool = True) -> SignMatrix:
    n = 4 * check_t(t)
    if mask >> n:
        raise InvalidParameter(f"mask has bits beyond index {n}")
    rows = list(rho_matrix(t).rows) if include_rho else [0] * n
    d = 1
    while mask:
        if mask & 1:
            gen = generator_matrix(d, t).rows
            for g in range(n):
                rows[g] ^= gen[g]
        mask >>= 1
        d += 1
    return SignMatrix(n, tuple(rows))


def assemble(indices: Iterable[int], t: int, include_rho: bool = True) -> SignMatrix:
    """Pointwise product of the coboundary generators in ``indices``, times M_rho."""
    return assemble_mask(mask_of(indices, t), t, include_rho)


def is_cocycle(m: SignMatrix, t: int) -> bool:
    """Exhaustive check of psi(g,h) psi(gh,k) = psi(g,hk) psi(h,k)."""
    n = 4 * check_t(t)
    if m.n != n:
        raise InvalidParameter(f"matrix order {m.n} != 4t = {n}")
    p = m.to_array().astype(np.int8)
    mul = np.array(_mul_index(t))
    lhs = p[:, :, None] * p[mul][:, :, :]          # psi(g,h) psi(gh,k)
    rhs = p[:, mul] * p[None, :, :]                # psi(g,hk) psi(h,k)
    return bool(np.array_equal(lhs, rhs))


def hadamard_full(m: SignMatrix) -> bool:
    """Gram test: every pair of distinct rows is orthogonal."""
    half = m.n // 2
    if m.n % 2:
        return m.n == 1
    rows = m.rows
    for i in range(m.n):
        ri = rows[i]
        for j in range(i + 1, m.n):
            if (ri ^ rows[j]).bit_count() != half:
                return False
    return True


def hadamard_rowsum(m: SignMatrix) -> bool:
    """Rows 2..n each hold exactly n/2 entries -1.

    Equivalent to the Gram test for cocyclic matrices, whose first row is
    constant.
    """
    half = m.n // 2
    return all(r.bit_count() == half for r in m.rows[1:])


def transpose(m: SignMatrix) -> SignMatrix:
    cols = [0] * m.n
    for g, row in enumerate(m.rows):
        h = 0
        while row:
            if row & 1:
                cols[h] |= 1 << g
            row >>= 1
            h += 1
    return SignMatrix(m.n, tuple(cols))


def format_matrix(m: SignMatrix) -> str:
    return "\n".join(
        "".join("-" if (row >> h) & 1 else "+" for h in range(m.n)) for row in m.rows
    )


def parse_matrix(text: str) -> SignMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    n = len(lines)
    rows = []
    for lineno, line in enumerate(lines, 1):
        if len(line) != n:
            raise ParseError(f"expected {n} characters, got {len(line)}", lineno)
        bits = 0
        for col, ch in enumerate(line):
            if ch == "-":
                bits |= 1 << col
            elif ch != "+":
                raise ParseError(f"unexpected character {ch!r}", lineno, col + 1)
        rows.append(bits)
    return SignMatrix(n, tuple(rows))
