"""Named verification suites for the structural identities.

Each suite returns a list of :class:`Check` results.  At t = 3 the checks
are exhaustive over all 2^12 index sets; for larger t they use seeded random
samples of ``samples`` sets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce

from .bundle import alpha, verify_translation
from .diagram import Diagram
from .group import bundle_generators, check_t, euler_phi, h_compose, h_enumerate
from .hprime import C2, hp_compose, hp_enumerate, hp_lambda, op_complement
from .matrix import (
    SignMatrix,
    assemble_mask,
    block_gen_matrix,
    class_indices,
    delta_matrix,
    k_matrix,
    transpose,
)

__all__ = ["Check", "SUITES", "run_suite", "sample_masks"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def sample_masks(t: int, samples: int = 200, seed: int = 0) -> list[int]:
    """Every mask at t = 3, otherwise ``samples`` seeded random masks."""
    if t == 3:
        return list(range(1 << 12))
    rng = random.Random(seed)
    return [rng.getrandbits(4 * t) for _ in range(samples)]


def suite_translate(t: int, samples: int = 200) -> list[Check]:
    masks = sample_masks(t, samples)
    out = []
    for name, h in bundle_generators(t).items():
        bad = [m for m in masks if not verify_translation(t, h, _bits(m))]
        out.append(Check(f"translate[{name}]", not bad, f"{len(masks) - len(bad)}/{len(masks)} sets"))
    return out


def suite_transpose(t: int, samples: int = 200) -> list[Check]:
    masks = sample_masks(t, samples)
    bad = 0
    for m in masks:
        d = Diagram(t, m)
        if assemble_mask(op_complement(d).mask, t) != transpose(assemble_mask(m, t)):
            bad += 1
    return [Check("transpose=C2", bad == 0, f"{len(masks) - bad}/{len(masks)} sets")]


def suite_orders(t: int, samples: int = 20000) -> list[Check]:
    phi = euler_phi(t)
    hs = h_enumerate(t)
    hset = set(hs)
    hp = hp_enumerate(t)
    hpset = set(hp)
    if t == 3:
        pairs = [(a, b) for a in hs for b in hs]
    else:
        rng = random.Random(1)
        pairs = [(rng.choice(hs), rng.choice(hs)) for _ in range(samples)]
    closed = all(h_compose(a, b, t) in hset for a, b in pairs)
    hom = all(alpha(h_compose(a, b, t), t) == hp_compose(alpha(a, t), alpha(b, t)) for a, b in pairs)
    hp_closed = all(hp_compose(a, b) in hpset for a, b in _sample_pairs(hp, t, samples))
    image = {alpha(h, t) for h in hs}
    return [
        Check("order(H)=24t*phi(t)", len(hset) == len(hs) == 24 * t * phi, f"{len(hset)}"),
        Check("H closed under composition", closed, f"{len(pairs)} pairs"),
        Check("order(H')=48t*phi(t)", len(hpset) == len(hp) == 48 * t * phi, f"{len(hpset)}"),
        Check("H' normal forms closed", hp_closed),
        Check("alpha homomorphism", hom, f"{len(pairs)} pairs"),
        Check("alpha(H) has index 2", len(image) * 2 == len(hpset), f"{len(image)} images"),
        Check("lambda = 0 on alpha(H)", all(hp_lambda(e) == 0 for e in image)),
        Check("C2 not in H*", hp_lambda(C2(t)) == 1 and C2(t) not in image),
    ]


def _sample_pairs(items, t, samples):
    if t == 3:
        return [(a, b) for a in items for b in items]
    rng = random.Random(2)
    return [(rng.choice(items), rng.choice(items)) for _ in range(samples)]


def class_product(residue: int, t: int) -> SignMatrix:
    mats = [delta_matrix(d, t) for d in class_indices(residue, t)]
    return reduce(lambda a, b: a * b, mats)


def suite_characters(t: int) -> list[Check]:
    k = k_matrix(t)
    return [
        Check(f"class {c} product = K", class_product(c, t) == k)
        for c in (2, 3, 0)
    ]


def suite_crossconstruct(t: int) -> list[Check]:
    n = 4 * t
    full = (1 << n) - 1
    bad = []
    for i in range(1, n + 1):
        rows = [r ^ (1 << (i - 1)) for r in delta_matrix(i, t).rows]
        rows[i - 1] ^= full
        if tuple(rows) != block_gen_matrix(i, t).rows:
            bad.append(i)
    return [Check("block M_i = delta_i negated at i", not bad, f"mismatched indices {bad}" if bad else f"{n} indices")]


def _bits(mask: int) -> list[int]:
    return [b + 1 for b in range(mask.bit_length()) if mask >> b & 1]


SUITES = {
    "translate": suite_translate,
    "transpose": suite_transpose,
    "orders": suite_orders,
    "eq9": suite_characters,
    "crossconstruct": suite_crossconstruct,
}


def run_suite(name: str, t: int) -> list[Check]:
    check_t(t)
    if name == "all":
        return [c for fn in SUITES.values() for c in fn(t)]
    return SUITES[name](t)
