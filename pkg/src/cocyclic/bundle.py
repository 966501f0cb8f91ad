"""Shift and automorphism actions on cocyclic matrices and their diagram images.

The bundle element ``a theta`` acts on a cocycle by first composing with
``theta x theta`` and then shifting by ``a``.  This order is what makes the
product of :func:`cocyclic.group.h_compose` a left action:
``bundle_apply(M, h1 . h2) == bundle_apply(bundle_apply(M, h2), h1)``.
"""

from __future__ import annotations

from functools import lru_cache

from .diagram import Diagram, diagram_from_set
from .group import (
    Automorphism,
    BundleElement,
    GroupElement,
    aut_apply,
    aut_inverse,
    check_t,
    elements,
    g_mul,
    inv_mod,
)
from .hprime import HPrimeElement, hp_apply, hp_compose, perm_inverse
from .matrix import SignMatrix, assemble, assemble_mask

__all__ = [
    "shift_matrix",
    "aut_matrix",
    "bundle_apply",
    "alpha",
    "alpha_shift",
    "alpha_aut",
    "verify_translation",
]


def _idx(g: GroupElement) -> int:
    return 4 * g.a + g.o


def _check_order(m: SignMatrix, t: int) -> None:
    if m.n != 4 * check_t(t):
        raise ValueError(f"matrix order {m.n} != 4t = {4 * t}")


def shift_matrix(m: SignMatrix, a: GroupElement, t: int) -> SignMatrix:
    """(psi . a)(g, h) = psi(ag, h) psi(a, h)."""
    _check_order(m, t)
    ra = m.rows[_idx(a)]
    return SignMatrix(m.n, tuple(m.rows[_idx(g_mul(a, g, t))] ^ ra for g in elements(t)))


@lru_cache(maxsize=None)
def _aut_perm(theta: Automorphism, t: int) -> tuple[int, ...]:
    return tuple(_idx(aut_apply(theta, g, t)) for g in elements(t))


def aut_matrix(m: SignMatrix, theta: Automorphism, t: int) -> SignMatrix:
    """(psi o (theta x theta))(g, h) = psi(theta(g), theta(h))."""
    _check_order(m, t)
    p = _aut_perm(theta, t)
    rows = []
    for g in range(m.n):
        src = m.rows[p[g]]
        bits = 0
        for h in range(m.n):
            if src >> p[h] & 1:
                bits |= 1 << h
        rows.append(bits)
    return SignMatrix(m.n, tuple(rows))


def bundle_apply(m: SignMatrix, h: BundleElement, t: int) -> SignMatrix:
    return shift_matrix(aut_matrix(m, h.aut, t), h.shift, t)


def alpha_shift(a: GroupElement, t: int) -> HPrimeElement:
    # shifting by x^m u^p v^q moves class offset o to o ^ (p + 2q), column j to j - m
    perm = tuple(((lab - 1) ^ a.o) + 1 for lab in (1, 2, 3, 4))
    return HPrimeElement(t, 0, perm, a.a % t, 1)


def alpha_aut(theta: Automorphism, t: int) -> HPrimeElement:
    # psi o theta carries the coboundary at k to the one at theta^-1(k);
    # odd label permutations also multiply rho by the class-2 product (C2)
    inv = aut_inverse(theta, t)
    perm = tuple(inv.label(lab) for lab in (1, 2, 3, 4))
    return HPrimeElement(t, int(theta.is_odd), perm, 0, inv_mod(theta.r, t))


def alpha(h: BundleElement, t: int) -> HPrimeElement:
    """Diagram operation realising the bundle action of ``h``."""
    check_t(t)
    return hp_compose(alpha_shift(h.shift, t), alpha_aut(h.aut, t))


def verify_translation(t: int, h: BundleElement, indices) -> bool:
    """Bundle action on the assembled matrix equals alpha(h) on the diagram."""
    d = diagram_from_set(indices, t)
    lhs = bundle_apply(assemble_mask(d.mask, t), h, t)
    rhs = assemble_mask(hp_apply(alpha(h, t), d).mask, t)
    return lhs == rhs
