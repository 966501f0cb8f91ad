import random

import pytest
from hypothesis import given, strategies as st

from cocyclic.diagram import (
    Diagram,
    cell_index,
    cocycle_canonical,
    cocycle_translates,
    diagram_from_set,
    format_index_set,
    grid_key,
    parse,
    parse_index_set,
    random_diagram,
    render,
    row_mask,
    set_from_diagram,
    v_canonical,
    v_translates,
)
from cocyclic.errors import InvalidParameter, ParseError
from cocyclic.matrix import assemble_mask, hadamard_full

from conftest import EQ7_SET, GRID_A


def test_render_t7_example():
    assert render(diagram_from_set(EQ7_SET, 7)) == GRID_A


def test_parse_t7_example():
    assert set_from_diagram(parse(GRID_A, 7)) == EQ7_SET


def test_single_mark():
    d = diagram_from_set([2], 3)
    assert render(d) == "--x\n---\n---\n---"
    assert d.marked(1, 0)


def test_cell_mapping_rows():
    # row k holds the class with residue 2, 3, 0, 1 mod 4
    for t in (3, 5, 7):
        for k, res in zip(range(1, 5), (2, 3, 0, 1)):
            idx = {cell_index(k, j, t) for j in range(t)}
            assert all(d % 4 == res for d in idx) and len(idx) == t
    assert cell_index(4, 6, 7) == 25


@pytest.mark.parametrize("t", [3, 5, 7])
def test_parse_render_roundtrip(t):
    rng = random.Random(t)
    for _ in range(100):
        d = random_diagram(t, rng)
        assert parse(render(d), t) == d
        assert diagram_from_set(set_from_diagram(d), t) == d


@given(st.integers(0, (1 << 20) - 1))
def test_roundtrip_property(mask):
    d = Diagram(5, mask)
    assert parse(render(d), 5) == d


@pytest.mark.parametrize(
    "text, t",
    [
        ("---\n---\n---", 3),
        ("---\n---\n---\n----", 3),
        ("---\n-o-\n---\n---", 3),
    ],
)
def test_parse_errors(text, t):
    with pytest.raises(ParseError):
        parse(text, t)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("---\n-o-\n---\n---", 3)
    assert info.value.line == 2 and info.value.column == 2


def test_bad_t_and_index():
    with pytest.raises(InvalidParameter):
        diagram_from_set([1], 4)
    with pytest.raises(InvalidParameter):
        diagram_from_set([13], 3)


def test_v_translates_same_matrix():
    d = diagram_from_set(EQ7_SET, 7)
    ts = v_translates(d)
    assert len({x.mask for x in ts}) == 4
    m = assemble_mask(d.mask, 7)
    assert all(assemble_mask(x.mask, 7) == m for x in ts)
    assert hadamard_full(m)
    assert sorted(len(x.indices) for x in ts) == [10, 12, 16, 16]


def test_v_canonical_examples():
    d = diagram_from_set(EQ7_SET, 7)
    assert v_canonical(d) == d
    assert v_canonical(Diagram(3, 0)) == Diagram(3, 0)
    full13 = Diagram(3, row_mask(1, 3) | row_mask(3, 3))
    assert v_canonical(full13) == Diagram(3, 0)


@pytest.mark.parametrize("t", [3, 5, 7])
def test_v_canonical_minimal_and_idempotent(t):
    rng = random.Random(10 + t)
    for _ in range(100):
        d = random_diagram(t, rng)
        c = v_canonical(d)
        assert v_canonical(c) == c
        assert c in v_translates(d)
        assert grid_key(c.mask, t) == min(grid_key(x.mask, t) for x in v_translates(d))
        assert render(c) == min(render(x) for x in v_translates(d))


def test_cocycle_translates_t3():
    for mask in range(0, 1 << 12, 37):
        d = Diagram(3, mask)
        ts = cocycle_translates(d)
        assert len({x.mask for x in ts}) == 8
        m = assemble_mask(mask, 3)
        assert all(assemble_mask(x.mask, 3) == m for x in ts)
        c = cocycle_canonical(d)
        assert c in ts and cocycle_canonical(c) == c


def test_cocycle_classes_count_t3():
    seen = {cocycle_canonical(Diagram(3, m)).mask for m in range(1 << 12)}
    assert len(seen) == 512
    matrices = {assemble_mask(m, 3).rows for m in range(1 << 12)}
    assert len(matrices) == 512


def test_grid_key_linear():
    rng = random.Random(0)
    for _ in range(50):
        a, b = rng.getrandbits(28), rng.getrandbits(28)
        assert grid_key(a ^ b, 7) == grid_key(a, 7) ^ grid_key(b, 7)


def test_index_set_text():
    assert format_index_set([9, 4, 6]) == "4,6,9"
    assert parse_index_set(" 4, 6,9 ", 7) == [4, 6, 9]
    assert parse_index_set("", 3) == [] == parse_index_set("-", 3)


@pytest.mark.parametrize("text", ["1,a", "1,,2", "0", "13", "2,2"])
def test_index_set_errors(text):
    with pytest.raises(ParseError):
        parse_index_set(text, 3)


def test_index_set_error_names_token():
    with pytest.raises(ParseError, match="'a'"):
        parse_index_set("1,a", 3)
