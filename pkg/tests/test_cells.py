from itertools import combinations
from math import comb

import pytest

from enumerica.cells import (
    CellDecomposition,
    betti,
    betti_from_cells,
    cell_dimension,
    dual_subset,
    duality_check,
    euler_from_cells,
    flag_stats,
    graph_cells,
    grassmannian_cells,
    morse_cells_surface,
)

PAIRS = [(k, n) for n in range(2, 10) for k in range(1, n)]


def test_gr24():
    assert betti(2, 4) == [1, 1, 2, 1, 1]
    assert [cell_dimension(I) for I in combinations(range(1, 5), 2)] == [0, 1, 2, 2, 3, 4]


@pytest.mark.parametrize("k,n", PAIRS)
def test_betti_properties(k, n):
    b = betti(k, n)
    assert sum(b) == comb(n, k)
    assert b == b[::-1]
    assert b == betti_from_cells(k, n)
    assert b == betti(n - k, n)
    assert duality_check(k, n)


def test_betti_ranges():
    with pytest.raises(ValueError):
        betti(3, 3)
    with pytest.raises(ValueError):
        betti_from_cells(0, 3)
    with pytest.raises(ValueError):
        cell_dimension((1, 1))


def test_dual_subset():
    assert dual_subset((1, 2), 4) == (1, 2)
    assert dual_subset((1, 3), 5) == (1, 2, 4)


@pytest.mark.parametrize("g", range(0, 6))
def test_surface_euler_from_morse_cells(g):
    assert euler_from_cells(morse_cells_surface(g)) == 2 - 2 * g


def test_real_and_complex_cells():
    assert euler_from_cells(graph_cells(4, 6)) == -2
    assert euler_from_cells([1, 2, 1], real=True) == 0
    assert euler_from_cells([1, 2, 1]) == 4
    assert euler_from_cells(grassmannian_cells(2, 4)) == 6
    with pytest.raises(ValueError):
        CellDecomposition((1, -1))


def test_flag_stats():
    assert flag_stats(4) == (24, 6)
    with pytest.raises(ValueError):
        flag_stats(0)
