"""Schubert cell combinatorics and Euler characteristics from cell counts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .algebra import partitions_bounded


@dataclass(frozen=True)
class CellDecomposition:
    """``counts[r]`` is the number of ``r``-dimensional cells.

    ``real`` marks a decomposition into real cells, where odd dimensions
    count negatively in the Euler characteristic.  Complex cells have even
    real dimension and always count positively.
    """

    counts: tuple[int, ...]
    real: bool = False

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("cell counts must be non-negative")

    @property
    def total(self) -> int:
        return sum(self.counts)


def cell_dimension(I: Sequence[int], k: int | None = None) -> int:
    """Complex dimension of the Schubert cell flowing to the fixed point ``L_I``."""
    k = len(I) if k is None else k
    if len(I) != k or len(set(I)) != k:
        raise ValueError(f"{I} is not a {k}-subset")
    return sum(I) - k * (k + 1) // 2


def betti(k: int, n: int) -> list[int]:
    """Even Betti numbers ``b_0, b_2, ..., b_{2k(n-k)}`` of ``Gr(k, n)``.

    ``b_{2i}`` counts partitions of ``i`` into at most ``n - k`` parts of
    size at most ``k``; odd Betti numbers vanish.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got Gr({k},{n})")
    return [len(partitions_bounded(i, n - k, k)) for i in range(k * (n - k) + 1)]


def betti_from_cells(k: int, n: int) -> list[int]:
    """Histogram of cell dimensions over all ``k``-subsets of ``{1..n}``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got Gr({k},{n})")
    hist = [0] * (k * (n - k) + 1)
    for I in combinations(range(1, n + 1), k):
        hist[cell_dimension(I, k)] += 1
    return hist


def dual_subset(I: Sequence[int], n: int) -> tuple[int, ...]:
    """Complement ``I`` in ``{1..n}``, then reverse the labels ``j -> n + 1 - j``."""
    inside = set(I)
    return tuple(sorted(n + 1 - j for j in range(1, n + 1) if j not in inside))


def duality_check(k: int, n: int) -> bool:
    """``Gr(k, n)`` and ``Gr(n - k, n)`` have the same number of cells in each dimension.

    Compares the Betti lists and also checks that :func:`dual_subset` is a
    bijection on fixed points preserving cell dimension.
    """
    if betti(k, n) != betti(n - k, n):
        return False
    images = set()
    for I in combinations(range(1, n + 1), k):
        J = dual_subset(I, n)
        if cell_dimension(J, n - k) != cell_dimension(I, k):
            return False
        images.add(J)
    return len(images) == comb(n, k)


def euler_from_cells(cells: CellDecomposition | Sequence[int], real: bool | None = None) -> int:
    if not isinstance(cells, CellDecomposition):
        cells = CellDecomposition(tuple(cells), bool(real))
    elif real is not None:
        cells = CellDecomposition(cells.counts, real)
    if not cells.real:
        return cells.total
    return sum((-1) ** r * c for r, c in enumerate(cells.counts))


def grassmannian_cells(k: int, n: int) -> CellDecomposition:
    return CellDecomposition(tuple(betti(k, n)))


def morse_cells_surface(g: int) -> CellDecomposition:
    """One minimum, ``2g`` saddles and one maximum on a genus-``g`` surface."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return CellDecomposition((1, 2 * g, 1), real=True)


def graph_cells(vertices: int, edges: int) -> CellDecomposition:
    return CellDecomposition((vertices, edges), real=True)


def flag_stats(n: int) -> tuple[int, int]:
    """``(chi, dim)`` of the complete flag variety of ``C^n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return factorial(n), comb(n, 2)
