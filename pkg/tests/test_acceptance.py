"""Acceptance suite: one PASS/FAIL line per criterion, with its time budget.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are written past
pytest's capture so they also show up without ``-s``).
"""

import random
import time
from functools import reduce

import pytest

from cocyclic.bundle import alpha, verify_translation
from cocyclic.diagram import Diagram, diagram_from_set, render
from cocyclic.group import bundle_generators, h_compose, h_enumerate
from cocyclic.hprime import (
    C2,
    compile_action,
    hp_compose,
    hp_enumerate,
    hp_lambda,
    hprime_generators,
    op_complement,
    op_dilate,
    op_rotate,
    op_swap,
)
from cocyclic.matrix import (
    assemble,
    assemble_mask,
    block_gen_matrix,
    class_indices,
    delta_matrix,
    hadamard_full,
    hadamard_rowsum,
    k_matrix,
    mask_of,
    transpose,
)
from cocyclic.search import naive_hits, search_exhaustive

from conftest import EQ7_SET, GRID_A, GRID_C2, GRID_S23, GRID_T2, GRID_V2


@pytest.fixture
def report(capsys):
    """Time the body, print one verdict line, then assert."""

    def _report(number, title, budget, body):
        start = time.perf_counter()
        ok, detail = body()
        elapsed = time.perf_counter() - start
        in_time = budget is None or elapsed < budget
        limit = f" (< {budget:g} s)" if budget is not None else ""
        verdict = "PASS" if ok and in_time else "FAIL"
        with capsys.disabled():
            print(f"\n[{verdict}] criterion {number:2d}: {title}: {detail}; {elapsed:.2f} s{limit}")
        assert ok, detail
        assert in_time, f"took {elapsed:.2f} s, budget {budget} s"

    return _report


def _bits(mask):
    return [b + 1 for b in range(mask.bit_length()) if mask >> b & 1]


def test_c01_golden_example(report):
    def body():
        m = assemble(EQ7_SET, 7)
        grid = render(diagram_from_set(EQ7_SET, 7))
        ok = m.n == 28 and hadamard_full(m) and hadamard_rowsum(m) and grid == GRID_A
        return ok, f"order {m.n}, full={hadamard_full(m)}, rowsum={hadamard_rowsum(m)}, grid match={grid == GRID_A}"

    report(1, "t=7 example matrix and grid", 1.0, body)


def test_c02_worked_grids(report):
    def body():
        a = diagram_from_set(EQ7_SET, 7)
        got = {
            "C2": render(op_complement(a)) == GRID_C2,
            "T2": render(op_rotate(2, a)) == GRID_T2,
            "s23": render(op_swap(2, 3, a)) == GRID_S23,
            "V2": render(op_dilate(2, a)) == GRID_V2,
        }
        return all(got.values()), ", ".join(f"{k}={'ok' if v else 'mismatch'}" for k, v in got.items())

    report(2, "four worked operation grids", 1.0, body)


def test_c03_cross_construction(report):
    def body():
        bad = 0
        for t in (3, 5, 7):
            for i in range(1, 4 * t + 1):
                ref = delta_matrix(i, t).to_array()
                ref[i - 1, :] *= -1
                ref[:, i - 1] *= -1
                bad += int((block_gen_matrix(i, t).to_array() != ref).sum())
        return bad == 0, f"{bad} mismatched entries over t=3,5,7"

    report(3, "block generators vs negated coboundaries", 5.0, body)


def test_c04_character_relations(report):
    def body():
        fails = []
        for t in (3, 5, 7):
            k = k_matrix(t)
            for c in (2, 3, 0):
                prod = reduce(lambda x, y: x * y, (delta_matrix(d, t) for d in class_indices(c, t)))
                if prod != k:
                    fails.append((t, c))
        return not fails, f"failing (t, class): {fails}" if fails else "classes 2, 3, 0 all equal K at t=3,5,7"

    report(4, "class products equal K", 5.0, body)


def test_c05_transposition(report):
    def body():
        counts = []
        ok = True
        for t, masks in ((3, range(1 << 12)), (5, None), (7, None)):
            if masks is None:
                rng = random.Random(t)
                masks = [rng.getrandbits(4 * t) for _ in range(200)]
            n = 0
            for m in masks:
                lhs = assemble_mask(op_complement(Diagram(t, m)).mask, t)
                ok &= lhs == transpose(assemble_mask(m, t))
                n += 1
            counts.append(f"t={t}:{n}")
        return ok, "C2 = transpose on " + " ".join(counts)

    report(5, "complement realises transposition", 30.0, body)


def test_c06_translation(report):
    def body():
        failures = []
        checked = 0
        for t in (3, 5, 7):
            if t == 3:
                sets = [_bits(m) for m in range(1 << 12)]
            else:
                rng = random.Random(100 + t)
                sets = [_bits(rng.getrandbits(4 * t)) for _ in range(200)]
            for name, h in bundle_generators(t).items():
                for s in sets:
                    checked += 1
                    if not verify_translation(t, h, s):
                        failures.append((t, name))
                        break
        return not failures, f"{checked} (generator, set) pairs, failures: {failures or 'none'}"

    report(6, "bundle actions match their diagram images", 120.0, body)


def test_c07_group_orders(report):
    def body():
        hs = h_enumerate(3)
        hset = set(hs)
        hp = hp_enumerate(3)
        hpset = set(hp)
        h_closed = all(h_compose(a, b, 3) in hset for a in hs for b in hs)
        hp_closed = all(hp_compose(a, b) in hpset for a in hp for b in hp)
        ok = len(hset) == len(hs) == 144 and len(hpset) == 288 and h_closed and hp_closed
        return ok, f"|H|={len(hset)}, |H'|={len(hpset)}, closed={h_closed and hp_closed}"

    report(7, "orders of H and H' at t=3", 10.0, body)


def test_c08_alpha(report):
    def body():
        hs = h_enumerate(3)
        img = {h: alpha(h, 3) for h in hs}
        hom = all(alpha(h_compose(a, b, 3), 3) == hp_compose(img[a], img[b]) for a in hs for b in hs)
        image = set(img.values())
        lam = all(hp_lambda(e) == 0 for e in image)
        c2 = hp_lambda(C2(3))
        ok = hom and len(image) == 144 and lam and c2 == 1 and C2(3) not in image
        return ok, f"homomorphism={hom}, |image|={len(image)}, lambda=0 on image: {lam}, lambda(C2)={c2}"

    report(8, "alpha embeds H as the kernel of lambda", 30.0, body)


def test_c09_orthogonality_preserved(report, hits3):
    def body():
        acts = [compile_action(g) for g in hprime_generators(3).values()]
        bad = sum(
            1 for m in hits3 for act in acts if not hadamard_full(assemble_mask(act(m), 3))
        )
        return bad == 0 and bool(hits3), f"{len(hits3)} hits x {len(acts)} generators, {bad} non-orthogonal images"

    report(9, "H' generators preserve orthogonality at t=3", 10.0, body)


def test_c10_search(report, hits7):
    def body():
        search_exhaustive(3)  # compile outside the timed runs
        s3 = search_exhaustive(3)
        s5 = search_exhaustive(5)
        oracle = s3.hits == naive_hits(3)
        div = all(s.hit_count % 4 == 0 for s in (s3, s5, hits7))
        found = mask_of(EQ7_SET, 7) in hits7.hits
        ok = oracle and div and found and hits7.visited == 1 << 28
        detail = (
            f"oracle match={oracle}, hits t=3/5/7 = {s3.hit_count}/{s5.hit_count}/{hits7.hit_count}, "
            f"example found={found}, times {s3.elapsed:.3f}/{s5.elapsed:.2f}/{hits7.elapsed:.1f} s "
            f"(targets 1/10/600 s, informative)"
        )
        return ok, detail

    report(10, "incremental search", None, body)


def test_c11_shortcut(report):
    def body():
        bad = 0
        for m in range(1 << 12):
            a = assemble_mask(m, 3)
            bad += hadamard_rowsum(a) != hadamard_full(a)
        return bad == 0, f"{bad} disagreements over 4096 matrices"

    report(11, "row-sum shortcut agrees with the Gram test", None, body)
