"""Arithmetic in G = Z_t x Z_2^2, its automorphisms and the bundle group H.

Elements are written x^a u^b v^c and stored as ``(a, o)`` where the offset
``o`` packs the Z_2^2 part as two bits (u-bit = 1, v-bit = 2), so offsets
0, 1, 2, 3 stand for 1, u, v, uv.  Under this encoding the 1-based position
of an element in the standard ordering is ``4*a + o + 1``.

The Z_2^2 part is also addressed by *labels* 1..4 (1, u, v, uv); label is
always ``offset + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import gcd

from .errors import InvalidParameter

__all__ = [
    "GroupElement",
    "Automorphism",
    "BundleElement",
    "check_t",
    "units",
    "inv_mod",
    "euler_phi",
    "elem_index",
    "elem_of_index",
    "elements",
    "g_mul",
    "g_inv",
    "aut_apply",
    "aut_inverse",
    "aut_then",
    "h_compose",
    "h_identity",
    "h_enumerate",
    "H23",
    "H243",
    "h_r",
    "shift_x",
    "shift_u",
    "shift_v",
    "bundle_generators",
]


def check_t(t: int) -> int:
    if not isinstance(t, int) or isinstance(t, bool) or t <= 1 or t % 2 == 0:
        raise InvalidParameter(f"t must be an odd integer > 1, got {t!r}")
    return t


@lru_cache(maxsize=None)
def units(t: int) -> tuple[int, ...]:
    """The units of Z_t in increasing order."""
    return tuple(r for r in range(1, t) if gcd(r, t) == 1)


def euler_phi(t: int) -> int:
    return len(units(t))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@lru_cache(maxsize=None)
def _inverse_table(t: int) -> dict[int, int]:
    table = {}
    for r in units(t):
        _, x, _ = _egcd(r, t)
        table[r] = x % t
    return table


def inv_mod(r: int, t: int) -> int:
    """Inverse of the unit ``r`` modulo ``t``."""
    try:
        return _inverse_table(t)[r % t]
    except KeyError:
        raise InvalidParameter(f"{r} is not a unit modulo {t}") from None


@dataclass(frozen=True, order=True)
class GroupElement:
    a: int
    o: int = 0

    def __repr__(self) -> str:
        word = {0: "", 1: "u", 2: "v", 3: "uv"}[self.o]
        xs = "" if self.a == 0 else ("x" if self.a == 1 else f"x^{self.a}")
        return f"<{xs + word or '1'}>"


def elem_index(e: GroupElement, t: int) -> int:
    check_t(t)
    if not (0 <= e.a < t and 0 <= e.o <= 3):
        raise InvalidParameter(f"{e!r} is not an element of Z_{t} x Z_2^2")
    return 4 * e.a + e.o + 1


def elem_of_index(d: int, t: int) -> GroupElement:
    check_t(t)
    if not 1 <= d <= 4 * t:
        raise InvalidParameter(f"index {d} outside 1..{4 * t}")
    a, o = divmod(d - 1, 4)
    return GroupElement(a, o)


def elements(t: int) -> list[GroupElement]:
    """All 4t elements in the standard order."""
    return [GroupElement(a, o) for a in range(check_t(t)) for o in range(4)]


def g_mul(g1: GroupElement, g2: GroupElement, t: int) -> GroupElement:
    return GroupElement((g1.a + g2.a) % t, g1.o ^ g2.o)


def g_inv(g: GroupElement, t: int) -> GroupElement:
    return GroupElement(-g.a % t, g.o)


@dataclass(frozen=True)
class Automorphism:
    """x -> x^r together with a permutation of the labels {2, 3, 4}.

    ``sigma[L - 2]`` is the image of label ``L``; label 1 (the identity of
    Z_2^2) is always fixed.
    """

    r: int = 1
    sigma: tuple[int, int, int] = (2, 3, 4)

    def __post_init__(self):
        if sorted(self.sigma) != [2, 3, 4]:
            raise InvalidParameter(f"sigma must permute (2, 3, 4), got {self.sigma}")

    def label(self, lab: int) -> int:
        return lab if lab == 1 else self.sigma[lab - 2]

    @property
    def is_odd(self) -> bool:
        s = self.sigma
        inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if s[i] > s[j])
        return inversions % 2 == 1


H23 = Automorphism(1, (3, 2, 4))
# u -> uv, v -> u, uv -> v: the label cycle (2 4 3)
H243 = Automorphism(1, (4, 2, 3))


def h_r(r: int, t: int) -> Automorphism:
    if gcd(r, t) != 1:
        raise InvalidParameter(f"{r} is not a unit modulo {t}")
    return Automorphism(r % t)


def aut_apply(theta: Automorphism, g: GroupElement, t: int) -> GroupElement:
    return GroupElement(theta.r * g.a % t, theta.label(g.o + 1) - 1)


def aut_inverse(theta: Automorphism, t: int) -> Automorphism:
    inv = [0, 0, 0]
    for lab in (2, 3, 4):
        inv[theta.label(lab) - 2] = lab
    return Automorphism(inv_mod(theta.r, t), tuple(inv))


def aut_then(first: Automorphism, second: Automorphism, t: int) -> Automorphism:
    """The automorphism g -> second(first(g))."""
    return Automorphism(
        first.r * second.r % t,
        tuple(second.label(first.label(lab)) for lab in (2, 3, 4)),
    )


@dataclass(frozen=True)
class BundleElement:
    """An element ``a theta`` of H = G x| Aut(G)."""

    shift: GroupElement = GroupElement(0, 0)
    aut: Automorphism = Automorphism()


def h_identity() -> BundleElement:
    return BundleElement()


def h_compose(h1: BundleElement, h2: BundleElement, t: int) -> BundleElement:
    """Semidirect product ``a th1 . b th2 = a th1^-1(b) th1 th2``.

    Automorphism products are read left to right: ``th1 th2`` applies
    ``th1`` first.  With this reading the product is the one realised by
    :func:`cocyclic.bundle.bundle_apply` as a left action.
    """
    shift = g_mul(h1.shift, aut_apply(aut_inverse(h1.aut, t), h2.shift, t), t)
    return BundleElement(shift, aut_then(h1.aut, h2.aut, t))


def h_enumerate(t: int) -> list[BundleElement]:
    """All 24 t phi(t) elements of H."""
    check_t(t)
    auts = [Automorphism(r, s) for r in units(t) for s in permutations((2, 3, 4))]
    return [BundleElement(g, th) for g in elements(t) for th in auts]


def shift_x(t: int) -> BundleElement:
    return BundleElement(GroupElement(1 % t, 0))


def shift_u() -> BundleElement:
    return BundleElement(GroupElement(0, 1))


def shift_v() -> BundleElement:
    return BundleElement(GroupElement(0, 2))


def bundle_generators(t: int) -> dict[str, BundleElement]:
    """The generating set {x, u, v, h_r, h_23, h_243} keyed by name."""
    gens = {"x": shift_x(t), "u": shift_u(), "v": shift_v()}
    for r in units(t):
        if r != 1:
            gens[f"h_{r}"] = BundleElement(aut=h_r(r, t))
    gens["h_23"] = BundleElement(aut=H23)
    gens["h_243"] = BundleElement(aut=H243)
    return gens
