"""Orbits of cocycle diagrams under H* (bundle action) or H' and census reports.

Orbit members are cocycles, each represented by its
:func:`~cocyclic.diagram.cocycle_canonical` diagram, so the redundancy of
diagrams over cocycles never splits or inflates an orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bundle import alpha
from .diagram import Diagram, cocycle_canonical_mask, grid_key
from .errors import InvalidParameter
from .group import bundle_generators, check_t, euler_phi
from .hprime import C2, compile_action
from .matrix import assemble_mask, hadamard_rowsum, mask_of

__all__ = [
    "GROUP_MODES",
    "OrbitReport",
    "group_order",
    "orbit_generators",
    "orbit",
    "canonical",
    "census",
    "format_census",
]

GROUP_MODES = ("hstar", "hprime")


@dataclass(frozen=True)
class OrbitReport:
    group_mode: str
    orbit_size: int
    canonical: Diagram
    members_found: int
    orthogonal: bool

    def line(self) -> str:
        idx = ",".join(map(str, self.canonical.indices)) or "-"
        return f"{idx} {self.orbit_size} {self.members_found} {int(self.orthogonal)}"


def _check_mode(mode: str) -> str:
    if mode not in GROUP_MODES:
        raise InvalidParameter(f"group mode must be one of {GROUP_MODES}, got {mode!r}")
    return mode


def group_order(mode: str, t: int) -> int:
    base = 24 * t * euler_phi(t)
    return base if _check_mode(mode) == "hstar" else 2 * base


def orbit_generators(mode: str, t: int):
    """H' elements generating the acting group."""
    gens = [alpha(h, t) for h in bundle_generators(t).values()]
    if _check_mode(mode) == "hprime":
        gens.append(C2(t))
    return gens


@lru_cache(maxsize=None)
def _compiled(mode: str, t: int):
    return tuple(compile_action(e) for e in orbit_generators(mode, t))


def _orbit_masks(mask: int, mode: str, t: int) -> set[int]:
    acts = _compiled(_check_mode(mode), check_t(t))
    start = cocycle_canonical_mask(mask, t)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for act in acts:
                c = cocycle_canonical_mask(act(m), t)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def orbit(d: Diagram, mode: str, t: int) -> set[Diagram]:
    """Cocycle-canonical diagrams in the orbit of ``d``."""
    return {Diagram(t, m) for m in _orbit_masks(d.mask, mode, t)}


def canonical(d: Diagram, mode: str, t: int) -> Diagram:
    """Lexicographically least canonical grid in the orbit of ``d``."""
    return Diagram(t, min(_orbit_masks(d.mask, mode, t), key=lambda m: grid_key(m, t)))


def census(index_sets: Iterable[Iterable[int]], mode: str, t: int) -> list[OrbitReport]:
    """Group index sets into orbits, one report per orbit met.

    ``members_found`` counts distinct cocycles of the input inside the orbit.
    Reports are sorted by canonical grid.
    """
    _check_mode(mode)
    check_t(t)
    found = {cocycle_canonical_mask(mask_of(s, t), t) for s in index_sets}
    assigned: dict[int, int] = {}
    reports = []
    for m in sorted(found):
        if m in assigned:
            continue
        members = _orbit_masks(m, mode, t)
        rep = min(members, key=lambda x: grid_key(x, t))
        for x in members:
            assigned[x] = rep
        reports.append((rep, len(members)))
    counts: dict[int, int] = {}
    for m in found:
        counts[assigned[m]] = counts.get(assigned[m], 0) + 1
    out = [
        OrbitReport(
            mode,
            size,
            Diagram(t, rep),
            counts[rep],
            hadamard_rowsum(assemble_mask(rep, t)),
        )
        for rep, size in reports
    ]
    out.sort(key=lambda r: grid_key(r.canonical.mask, t))
    return out


def format_census(reports: list[OrbitReport]) -> str:
    return "\n".join(r.line() for r in reports)
