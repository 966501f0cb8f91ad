import pytest

from cocyclic.search import search_exhaustive

# t = 7 orthogonal cocycle and the grids printed alongside it, transcribed
# with 'x' for a mark and '-' for a blank.
EQ7_SET = [4, 6, 9, 10, 11, 12, 14, 20, 21, 25]

GRID_A = """\
---xxx-
----x--
--x-x-x
xx--x--"""

GRID_C2 = """\
xxx---x
----x--
--x-x-x
xx--x--"""

GRID_T2 = """\
x----xx
------x
-x--x-x
--xx--x"""

GRID_S23 = """\
----x--
---xxx-
--x-x-x
xx--x--"""

GRID_V2 = """\
x-x-x--
--x----
--x--xx
-xxx---"""


def oracle_mul(i, j, t):
    """Product of the elements with 0-based positions i, j (independent of the library)."""
    ai, oi = divmod(i, 4)
    aj, oj = divmod(j, 4)
    return 4 * ((ai + aj) % t) + (oi ^ oj)


def oracle_delta(d, t):
    """Raw coboundary of the Kronecker delta at index d as a list of lists."""
    n = 4 * t
    f = [(-1 if g == d - 1 else 1) for g in range(n)]
    return [[f[g] * f[h] * f[oracle_mul(g, h, t)] for h in range(n)] for g in range(n)]


@pytest.fixture(scope="session")
def hits3():
    return search_exhaustive(3).hits


@pytest.fixture(scope="session")
def hits5():
    return search_exhaustive(5).hits


@pytest.fixture(scope="session")
def hits7():
    return search_exhaustive(7)
