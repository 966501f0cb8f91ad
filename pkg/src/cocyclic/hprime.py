"""Diagram operations and the group H' they generate.

The four families act on index sets (equivalently on grids):

* ``C2``   complements grid row 1 (class 2 mod 4);
* ``s_ij`` exchanges the rows holding classes c_i and c_j, keeping columns;
* ``T_k``  subtracts 4k from every index, i.e. moves columns k places right;
* ``V_r``  sends column j to column j*r mod t.

Elements of H' are kept in the normal form ``C2^eps S_pi T_k V_r``.  A
permutation ``pi`` is a tuple with ``pi[L-1]`` the label receiving the
contents of label ``L`` (labels 1..4 are the classes c_1..c_4, i.e. the
residues 1, 2, 3, 0 mod 4).  Products are composition of maps: ``e1 * e2``
applies ``e2`` first.

C2 and the swaps commute only up to complementing an even number of full
rows, which never changes the assembled cocycle; :func:`hp_apply` is a group
action on cocycles, not on literal grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .diagram import Diagram, row_mask
from .errors import InvalidParameter, ParseError
from .group import check_t, inv_mod, units

__all__ = [
    "HPrimeElement",
    "ID_PERM",
    "perm_compose",
    "perm_inverse",
    "perm_parity",
    "transposition",
    "op_complement",
    "op_swap",
    "op_rotate",
    "op_dilate",
    "op_permute_rows",
    "hp_identity",
    "hp_compose",
    "hp_inverse",
    "hp_apply",
    "compile_action",
    "hp_lambda",
    "in_hstar",
    "hp_enumerate",
    "C2",
    "swap",
    "rot",
    "dil",
    "hprime_generators",
    "parse_op_word",
]

ID_PERM = (1, 2, 3, 4)
SWAP_NAMES = ("s12", "s13", "s14", "s23", "s24", "s34")


def perm_compose(p1: tuple, p2: tuple) -> tuple:
    """p1 o p2 (p2 first)."""
    return tuple(p1[p2[i] - 1] for i in range(4))


def perm_inverse(p: tuple) -> tuple:
    inv = [0] * 4
    for i, img in enumerate(p):
        inv[img - 1] = i + 1
    return tuple(inv)


def perm_parity(p: tuple) -> int:
    return sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) % 2


def transposition(i: int, j: int) -> tuple:
    if i == j or not {i, j} <= {1, 2, 3, 4}:
        raise InvalidParameter(f"s{i}{j} is not a swap of two distinct class labels")
    p = list(ID_PERM)
    p[i - 1], p[j - 1] = j, i
    return tuple(p)


# -- grid maps ----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _index_map(t: int, perm: tuple, k: int, r: int) -> tuple[int, ...]:
    """Target bit of each source bit under rows->perm, column j -> j*r - k."""
    out = []
    for bit in range(4 * t):
        j, off = divmod(bit, 4)
        label = off + 1
        out.append(4 * ((j * r - k) % t) + perm[label - 1] - 1)
    return tuple(out)


def _map_mask(mask: int, table: tuple[int, ...]) -> int:
    out = 0
    bit = 0
    while mask:
        if mask & 1:
            out |= 1 << table[bit]
        mask >>= 1
        bit += 1
    return out


def op_complement(d: Diagram) -> Diagram:
    return Diagram(d.t, d.mask ^ row_mask(1, d.t))


def op_permute_rows(perm: tuple, d: Diagram) -> Diagram:
    return Diagram(d.t, _map_mask(d.mask, _index_map(d.t, tuple(perm), 0, 1)))


def op_swap(i: int, j: int, d: Diagram) -> Diagram:
    return op_permute_rows(transposition(i, j), d)


def op_rotate(k: int, d: Diagram) -> Diagram:
    return Diagram(d.t, _map_mask(d.mask, _index_map(d.t, ID_PERM, k % d.t, 1)))


def op_dilate(r: int, d: Diagram) -> Diagram:
    if r % d.t not in units(d.t):
        raise InvalidParameter(f"{r} is not a unit modulo {d.t}")
    return Diagram(d.t, _map_mask(d.mask, _index_map(d.t, ID_PERM, 0, r % d.t)))


# -- the group H' -------------------------------------------------------------

@dataclass(frozen=True)
class HPrimeElement:
    t: int
    eps: int = 0
    perm: tuple = ID_PERM
    k: int = 0
    r: int = 1

    def __mul__(self, other: "HPrimeElement") -> "HPrimeElement":
        return hp_compose(self, other)

    def __repr__(self) -> str:
        return f"HPrime(eps={self.eps}, perm={self.perm}, k={self.k}, r={self.r}, t={self.t})"


def hp_identity(t: int) -> HPrimeElement:
    return HPrimeElement(check_t(t))


def hp_compose(e1: HPrimeElement, e2: HPrimeElement) -> HPrimeElement:
    if e1.t != e2.t:
        raise InvalidParameter("elements for different t")
    t = e1.t
    return HPrimeElement(
        t,
        e1.eps ^ e2.eps,
        perm_compose(e1.perm, e2.perm),
        (e1.k + e1.r * e2.k) % t,
        e1.r * e2.r % t,
    )


def hp_inverse(e: HPrimeElement) -> HPrimeElement:
    rinv = inv_mod(e.r, e.t)
    return HPrimeElement(e.t, e.eps, perm_inverse(e.perm), -rinv * e.k % e.t, rinv)


def hp_apply(e: HPrimeElement, d: Diagram) -> Diagram:
    """Evaluate the normal form on ``d``: V_r, then T_k, then rows, then C2."""
    if e.t != d.t:
        raise InvalidParameter("element and diagram have different t")
    mask = _map_mask(d.mask, _index_map(d.t, e.perm, e.k, e.r))
    if e.eps:
        mask ^= row_mask(1, d.t)
    return Diagram(d.t, mask)


def compile_action(e: HPrimeElement):
    """Fast ``mask -> mask`` evaluation of ``hp_apply(e, .)`` for repeated use."""
    table = _index_map(e.t, e.perm, e.k, e.r)
    n = 4 * e.t
    chunks = []
    for base in range(0, n, 8):
        chunks.append(tuple(
            sum(1 << table[base + b] for b in range(8) if base + b < n and v >> b & 1)
            for v in range(256)
        ))
    flip = row_mask(1, e.t) if e.eps else 0

    def act(mask: int) -> int:
        out = flip
        for chunk in chunks:
            out ^= chunk[mask & 255]
            mask >>= 8
        return out

    return act


def hp_lambda(e: HPrimeElement) -> int:
    """Parity homomorphism H' -> Z_2 whose kernel is H*."""
    return e.eps ^ perm_parity(e.perm)


def in_hstar(e: HPrimeElement) -> bool:
    return hp_lambda(e) == 0


def hp_enumerate(t: int) -> list[HPrimeElement]:
    check_t(t)
    return [
        HPrimeElement(t, eps, perm, k, r)
        for eps in (0, 1)
        for perm in permutations(ID_PERM)
        for k in range(t)
        for r in units(t)
    ]


def C2(t: int) -> HPrimeElement:
    return HPrimeElement(check_t(t), eps=1)


def swap(i: int, j: int, t: int) -> HPrimeElement:
    return HPrimeElement(check_t(t), perm=transposition(i, j))


def rot(k: int, t: int) -> HPrimeElement:
    return HPrimeElement(check_t(t), k=k % t)


def dil(r: int, t: int) -> HPrimeElement:
    if r % t not in units(t):
        raise InvalidParameter(f"{r} is not a unit modulo {t}")
    return HPrimeElement(check_t(t), r=r % t)


def hprime_generators(t: int) -> dict[str, HPrimeElement]:
    """C2, the six swaps, T_1 and every V_r (r != 1)."""
    gens = {"C2": C2(t)}
    for name in SWAP_NAMES:
        gens[name] = swap(int(name[1]), int(name[2]), t)
    gens["T:1"] = rot(1, t)
    for r in units(t):
        if r != 1:
            gens[f"V:{r}"] = dil(r, t)
    return gens


def parse_op_word(word: str, t: int) -> list[HPrimeElement]:
    """Parse ``C2;s23;T:2;V:3`` into elements, in application order."""
    check_t(t)
    ops = []
    for tok in (p.strip() for p in word.split(";")):
        if not tok:
            continue
        if tok == "C2":
            ops.append(C2(t))
        elif tok in SWAP_NAMES:
            ops.append(swap(int(tok[1]), int(tok[2]), t))
        elif tok[:2] in ("T:", "V:") and tok[2:].lstrip("-").isdigit():
            val = int(tok[2:])
            if tok[0] == "T":
                ops.append(rot(val, t))
            else:
                try:
                    ops.append(dil(val, t))
                except InvalidParameter as exc:
                    raise ParseError(f"bad op {tok!r}: {exc}") from None
        else:
            raise ParseError(f"unknown op {tok!r}")
    return ops
