"""Torus localization on Grassmannians.

The diagonal torus acting on ``C^n`` with distinct weights ``lambda_i`` has
isolated fixed points on ``Gr(k, n)``: the coordinate planes ``L_I``.  An
integral of an equivariant class then becomes a finite sum of
restrictions divided by tangent Euler classes.  The sum is a constant, so
evaluating it at several random weight vectors and checking that they
agree is a complete test of the arithmetic.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import prod
from typing import Sequence

from .algebra import as_fraction

WEIGHT_BOUND = 10**6


class LocalizationError(ArithmeticError):
    """The fixed-point sum did not behave like a constant integer."""


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[Fraction, ...]

    def __init__(self, weights: Sequence):
        values = tuple(as_fraction(w) for w in weights)
        if len(set(values)) != len(values):
            raise ValueError(f"torus weights must be pairwise distinct: {values}")
        object.__setattr__(self, "weights", values)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        # fixed points use 1-based labels
        return self.weights[i - 1]

    def scaled(self, c) -> "WeightVector":
        c = as_fraction(c)
        if not c:
            raise ValueError("scale factor must be nonzero")
        return WeightVector([c * w for w in self.weights])

    def permuted(self, perm: Sequence[int]) -> "WeightVector":
        return WeightVector([self.weights[p] for p in perm])


FixedPoint = tuple[int, ...]


def fixed_points(k: int, n: int) -> list[FixedPoint]:
    """The ``C(n, k)`` torus-fixed ``k``-planes, as sorted 1-based index sets."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got Gr({k},{n})")
    return list(combinations(range(1, n + 1), k))


def tangent_euler(I: FixedPoint, w: WeightVector) -> Fraction:
    """Equivariant Euler class of ``T_{L_I} Gr``: ``prod_{i in I, j not in I} (l_i - l_j)``."""
    inside = set(I)
    outside = [j for j in range(1, len(w) + 1) if j not in inside]
    return prod((w[i] - w[j] for i in I for j in outside), start=Fraction(1))


def sym_euler(I: FixedPoint, d: int, w: WeightVector) -> Fraction:
    """Equivariant Euler class of ``Sym^d S*`` at ``L_I`` for ``I = {i1, i2}``."""
    if len(I) != 2:
        raise ValueError("sym_euler is only defined on Gr(2, n)")
    if d < 1:
        raise ValueError("d must be at least 1")
    i1, i2 = I
    return prod((a * w[i1] + (d - a) * w[i2] for a in range(d + 1)), start=Fraction(1))


def localized_sum(n: int, w: WeightVector, d: int | None = None) -> Fraction:
    """``sum_I sym_euler / tangent_euler`` over the fixed points of ``Gr(2, n)``."""
    if len(w) != n:
        raise ValueError(f"need {n} weights, got {len(w)}")
    d = 2 * n - 5 if d is None else d
    return sum(
        (sym_euler(I, d, w) / tangent_euler(I, w) for I in fixed_points(2, n)),
        start=Fraction(0),
    )


def random_weights(n: int, rng: random.Random) -> WeightVector:
    return WeightVector(rng.sample(range(-WEIGHT_BOUND, WEIGHT_BOUND + 1), n))


def lines_via_localization(n: int, trials: int = 5, seed: int = 0) -> int:
    """Count lines on a degree ``2n - 5`` hypersurface in ``P^(n-1)`` by localization.

    Each trial draws distinct integer weights from a generator seeded with
    ``seed``; every trial must give the same integer.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if trials < 2:
        raise ValueError("need at least two trials")
    rng = random.Random(seed)
    values = [localized_sum(n, random_weights(n, rng)) for _ in range(trials)]
    if len(set(values)) != 1:
        raise LocalizationError(f"fixed-point sum depends on the weights: {values}")
    value = values[0]
    if value.denominator != 1:
        raise LocalizationError(f"fixed-point sum is not an integer: {value}")
    return value.numerator


# -- Euler characteristics as fixed-point counts ----------------------------


@dataclass(frozen=True)
class Space:
    kind: str  # "P", "Gr", "Fl", "T2"
    n: int = 0
    k: int = 0

    def __str__(self) -> str:
        if self.kind == "P":
            return f"P^{self.n}"
        if self.kind == "Gr":
            return f"Gr({self.k},{self.n})"
        if self.kind == "Fl":
            return f"Fl({self.n})"
        return "T^2"


_SPACE_PATTERNS = [
    (re.compile(r"^P\^?(\d+)$", re.I), lambda m: Space("P", n=int(m[1]))),
    (re.compile(r"^Gr\((\d+),\s*(\d+)\)$", re.I), lambda m: Space("Gr", n=int(m[2]), k=int(m[1]))),
    (re.compile(r"^Fl\(?(\d+)\)?$", re.I), lambda m: Space("Fl", n=int(m[1]))),
    (re.compile(r"^T\^?2$", re.I), lambda m: Space("T2")),
]


def parse_space(text: str) -> Space:
    """Parse ``P^n``, ``Gr(k,n)``, ``Fl(n)`` or ``T^2``."""
    for pattern, make in _SPACE_PATTERNS:
        m = pattern.match(text.strip())
        if m:
            return make(m)
    raise ValueError(f"unknown space {text!r}")


def torus_fixed_points(space: Space) -> list:
    if space.kind == "P":
        return [(i,) for i in range(1, space.n + 2)]
    if space.kind == "Gr":
        return fixed_points(space.k, space.n)
    if space.kind == "Fl":
        # a fixed complete flag is an ordering of the coordinate axes
        return list(permutations(range(1, space.n + 1)))
    if space.kind == "T2":
        # rotation of the torus on itself moves every point
        return []
    raise ValueError(f"unknown space {space!r}")


def euler_char(space: Space | str) -> int:
    """Euler characteristic as the number of torus-fixed points."""
    if isinstance(space, str):
        space = parse_space(space)
    return len(torus_fixed_points(space))
