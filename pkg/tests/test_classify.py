import random

import pytest

from cocyclic.classify import (
    OrbitReport,
    canonical,
    census,
    format_census,
    group_order,
    orbit,
    orbit_generators,
)
from cocyclic.diagram import Diagram, cocycle_canonical, diagram_from_set, row_mask
from cocyclic.errors import InvalidParameter
from cocyclic.hprime import compile_action, hp_apply, op_complement, parse_op_word
from cocyclic.matrix import assemble_mask, hadamard_full, set_of, transpose

from conftest import EQ7_SET

D7 = diagram_from_set(EQ7_SET, 7)


def test_orbit_of_empty():
    orb = orbit(Diagram(3, 0), "hstar", 3)
    assert len(orb) == 2
    assert Diagram(3, 0) in orb
    assert cocycle_canonical(Diagram(3, row_mask(1, 3))) in orb


def test_eq7_orbit_contains_transpose():
    orb = orbit(D7, "hprime", 7)
    c2 = cocycle_canonical(op_complement(D7))
    assert c2 in orb
    assert assemble_mask(c2.mask, 7) == transpose(assemble_mask(D7.mask, 7))


def test_orbit_members_are_canonical():
    for d in orbit(D7, "hstar", 7):
        assert cocycle_canonical(d) == d


@pytest.mark.parametrize("mode", ["hstar", "hprime"])
def test_orbit_sizes_divide_order_t3(mode, hits3):
    order = group_order(mode, 3)
    for mask in hits3[::8]:
        orb = orbit(Diagram(3, mask), mode, 3)
        assert order % len(orb) == 0
        assert all(hadamard_full(assemble_mask(d.mask, 3)) for d in orb)


def test_group_orders():
    assert group_order("hstar", 7) == 1008
    assert group_order("hprime", 7) == 2016
    with pytest.raises(InvalidParameter):
        group_order("h", 7)


def test_canonical_examples():
    assert canonical(Diagram(3, 0), "hstar", 3) == Diagram(3, 0)
    c = canonical(D7, "hprime", 7)
    assert canonical(c, "hprime", 7) == c


def test_canonical_invariant_t5():
    rng = random.Random(5)
    gens = orbit_generators("hprime", 5)
    for _ in range(100):
        d = Diagram(5, rng.getrandbits(20))
        c = canonical(d, "hprime", 5)
        g = rng.choice(gens)
        assert canonical(hp_apply(g, d), "hprime", 5) == c
        assert canonical(c, "hprime", 5) == c


def test_hstar_canonical_invariant_under_hstar_generators():
    rng = random.Random(6)
    gens = orbit_generators("hstar", 5)
    for _ in range(20):
        d = Diagram(5, rng.getrandbits(20))
        c = canonical(d, "hstar", 5)
        for g in gens:
            assert canonical(hp_apply(g, d), "hstar", 5) == c


def test_census_t3(hits3):
    sets = [set_of(m) for m in hits3]
    star = census(sets, "hstar", 3)
    prime = census(sets, "hprime", 3)
    assert len(prime) <= len(star)
    assert all(r.orthogonal for r in star + prime)
    distinct = {cocycle_canonical(Diagram(3, m)).mask for m in hits3}
    assert sum(r.members_found for r in star) == len(distinct)
    for r in star:
        assert group_order("hstar", 3) % r.orbit_size == 0
        assert r.members_found == r.orbit_size


def test_census_hprime_merges_hstar(hits5):
    sets = [set_of(m) for m in hits5]
    star = census(sets, "hstar", 5)
    prime = census(sets, "hprime", 5)
    for p in prime:
        parts = [s for s in star if canonical(s.canonical, "hprime", 5) == p.canonical]
        assert 1 <= len(parts) <= 2
        assert sum(s.orbit_size for s in parts) == p.orbit_size


def test_census_same_orbit():
    moved = D7
    for e in parse_op_word("T:3", 7):
        moved = hp_apply(e, moved)
    reports = census([EQ7_SET, moved.indices], "hstar", 7)
    assert len(reports) == 1
    assert reports[0].members_found == 2 and reports[0].orthogonal


def test_census_sorted_and_formatted():
    sets = [[], EQ7_SET, [1]]
    reports = census(sets, "hstar", 7)
    keys = [r.canonical for r in reports]
    assert len(reports) == 3
    text = format_census(reports)
    assert len(text.splitlines()) == 3
    for line in text.splitlines():
        idx, size, members, orth = line.split()
        assert int(members) == 1 and orth in "01"
    assert keys == sorted(keys, key=lambda d: [d.marked(k, j) for k in range(1, 5) for j in range(6, -1, -1)])


def test_report_line():
    r = OrbitReport("hstar", 2, Diagram(3, 0), 1, False)
    assert r.line() == "- 2 1 0"


def test_transpose_in_same_hprime_class(hits3):
    for mask in hits3[::16]:
        d = Diagram(3, mask)
        assert canonical(op_complement(d), "hprime", 3) == canonical(d, "hprime", 3)


def test_compiled_generators_preserve_cocycle_classes():
    acts = [compile_action(g) for g in orbit_generators("hstar", 3)]
    for mask in range(0, 1 << 12, 7):
        for act in acts:
            a = act(mask)
            b = act(mask ^ row_mask(1, 3) ^ row_mask(3, 3))
            assert assemble_mask(a, 3) == assemble_mask(b, 3)
