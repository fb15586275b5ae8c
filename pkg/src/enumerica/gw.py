"""Genus-0 Gromov-Witten invariants, potentials and quantum products.

Supported targets are ``P^1``, ``P^2`` and a closed surface of genus
``g >= 1``.  Invariants are evaluated by rewriting with the standard axioms
(degree, fundamental class, divisor, point mapping) down to a short list
of base values; for ``P^2`` the base values are the numbers ``N_d`` of
rational degree-``d`` curves through ``3d - 1`` points.

Cohomology classes carry their real degree.  The formal variable ``t_i``
dual to ``T_i`` has degree ``deg T_i - 2``, so classes of odd degree give
anticommuting variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Sequence

from .algebra import (
    GradedVariable,
    SuperMonomial,
    SuperSeries,
    exp_truncated,
    monomial_normalize,
)

CLASSICAL_T_ORDER = 3


# ---------------------------------------------------------------------------
# Cohomology bases


@dataclass(frozen=True)
class CohBasis:
    tag: str
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    dim: int  # complex dimension
    # cup[(i, j)] = ((k, coeff), ...) with T_i u T_j = sum coeff * T_k
    cup_table: tuple[tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...]
    c1_per_line: int | None  # integral of c1(TX) over the line class
    genus: int = 0

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def point(self) -> int:
        return self.size - 1

    @property
    def divisors(self) -> tuple[int, ...]:
        return tuple(i for i, deg in enumerate(self.degrees) if deg == 2)

    @property
    def variables(self) -> tuple[GradedVariable, ...]:
        return tuple(GradedVariable(i, deg - 2) for i, deg in enumerate(self.degrees))

    def index(self, label) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.size:
                raise ValueError(f"no basis element T_{label} on {self.tag}")
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown class {label!r} on {self.tag}; basis is {self.labels}") from None

    def cup(self, i: int, j: int) -> dict[int, int]:
        return dict(dict(self.cup_table).get((i, j), ()))

    def integrate_product(self, insertions: Sequence[int]) -> int:
        """``int_X T_{i1} u T_{i2} u ...`` using the graded cup product."""
        current = {0: 1}
        for j in insertions:
            nxt: dict[int, int] = {}
            for i, c in current.items():
                for k, e in self.cup(i, j).items():
                    nxt[k] = nxt.get(k, 0) + c * e
            current = {k: v for k, v in nxt.items() if v}
        return current.get(self.point, 0)

    @property
    def pairing(self) -> tuple[tuple[int, ...], ...]:
        """``g_ij = int T_i u T_j``."""
        return tuple(
            tuple(self.integrate_product((i, j)) for j in range(self.size))
            for i in range(self.size)
        )

    @property
    def inverse_pairing(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.pairing)

    def parity(self, i: int) -> int:
        return self.degrees[i] % 2


def _invert(matrix) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col])
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


def projective_space(r: int) -> CohBasis:
    """``P^r`` with basis ``T_i = h^i``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    labels = [f"P{r}"] + [("l" if i == 1 else f"h{i}") for i in range(1, r)] + ["pt"]
    if r == 1:
        labels = ["P1", "pt"]
    cup = tuple(
        ((i, j), ((i + j, 1),)) for i in range(r + 1) for j in range(r + 1) if i + j <= r
    )
    return CohBasis(f"P{r}", tuple(labels), tuple(2 * i for i in range(r + 1)), r, cup, r + 1)


def surface(g: int) -> CohBasis:
    """Genus-``g`` surface with basis ``[S], a_1, b_1, ..., a_g, b_g, [pt]``.

    ``a_i u b_i = [pt] = -(b_i u a_i)``; other products of odd classes vanish.
    """
    if g < 1:
        raise ValueError("genus must be at least 1")
    pt = 2 * g + 1
    labels = ["S"] + [f"{c}{j}" for j in range(1, g + 1) for c in "ab"] + ["pt"]
    degrees = [0] + [1] * (2 * g) + [2]
    cup = [((0, j), ((j, 1),)) for j in range(pt + 1)]
    cup += [((j, 0), ((j, 1),)) for j in range(1, pt + 1)]
    for j in range(1, g + 1):
        a, b = 2 * j - 1, 2 * j
        cup += [((a, b), ((pt, 1),)), ((b, a), ((pt, -1),))]
    return CohBasis(f"Sigma{g}", tuple(labels), tuple(degrees), 1, tuple(cup), None, genus=g)


P1 = projective_space(1)
P2 = projective_space(2)


def space_from_tag(tag: str, g: int | None = None) -> CohBasis:
    key = tag.lower().replace("^", "").replace("_", "")
    if key == "p1":
        return P1
    if key == "p2":
        return P2
    if key in ("sigmag", "sigma", "surface"):
        if g is None:
            raise ValueError("the surface needs a genus")
        return surface(g)
    raise ValueError(f"unsupported space {tag!r}")


# ---------------------------------------------------------------------------
# Invariants


@dataclass(frozen=True)
class GWQuery:
    space: CohBasis
    d: int
    insertions: tuple[int, ...]

    def __init__(self, space: CohBasis, d: int, insertions: Sequence = ()):
        if d < 0:
            raise ValueError("curve degree must be non-negative")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "insertions", tuple(space.index(x) for x in insertions))


def dimension_sum(space: CohBasis, d: int, n: int, g: int = 0) -> int:
    """Total real degree the ``n`` insertions must have for a genus-``g`` invariant."""
    c1 = (space.c1_per_line or 0) * d
    return 2 * (1 - g) * space.dim + 2 * c1 + 2 * (3 * g - 3 + n)


@dataclass(frozen=True)
class KontsevichTable:
    values: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        if d < 1:
            raise IndexError("N_d is indexed from d = 1")
        return self.values[d - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_list(self) -> list[int]:
        return list(self.values)


def kontsevich(d_max: int) -> KontsevichTable:
    """``N_1 .. N_dmax`` from the two-term recursion starting at ``N_1 = 1``."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    N = [0, 1]
    for d in range(2, d_max + 1):
        total = 0
        for d1 in range(1, d):
            d2 = d - d1
            total += N[d1] * N[d2] * (
                d1**2 * d2**2 * comb(3 * d - 4, 3 * d1 - 2)
                - d1**3 * d2 * comb(3 * d - 4, 3 * d1 - 1)
            )
        N.append(total)
    return KontsevichTable(tuple(N[1:]))


@lru_cache(maxsize=None)
def _plane_count(d: int) -> int:
    return kontsevich(d)[d]


def evaluate_gw(query: GWQuery) -> Fraction:
    """Value of ``<I_{0,n,d}>(insertions)``.

    Rewrites in a fixed order: degree axiom, fundamental class axiom,
    divisor axiom, then base cases (triple intersections in degree 0,
    ``<I_{0,0,1}> = 1`` on ``P^1``, ``N_d`` on ``P^2``).
    """
    space, d, ins = query.space, query.d, list(query.insertions)
    if space.c1_per_line is None and d > 0:
        raise ValueError(f"{space.tag} only carries degree-0 genus-0 invariants")
    if space.tag not in ("P1", "P2") and space.c1_per_line is not None:
        raise ValueError(f"invariants of {space.tag} are not supported")

    if sum(space.degrees[i] for i in ins) != dimension_sum(space, d, len(ins)):
        return Fraction(0)

    if d == 0:
        # point mapping: constant maps, only three-point invariants survive
        if len(ins) != 3:
            return Fraction(0)
        return Fraction(space.integrate_product(ins))

    if 0 in ins:
        return Fraction(0)

    value = Fraction(1)
    rest = []
    for i in ins:
        if i in space.divisors:
            # the hyperplane class integrates to d over the curve class d*l
            value *= d
        else:
            rest.append(i)

    if space.tag == "P1":
        if rest or d != 1:
            raise AssertionError(f"unexpected reduced invariant on P1: d={d}, {rest}")
        return value
    # P2: only point insertions are left, and the degree axiom forces 3d - 1 of them
    if any(i != space.point for i in rest) or len(rest) != 3 * d - 1:
        raise AssertionError(f"unexpected reduced invariant on P2: d={d}, {rest}")
    return value * _plane_count(d)


def enumerate_nonzero(space: CohBasis, d: int, n_max: int) -> list[tuple[int, ...]]:
    """Insertion profiles with a nonzero invariant, as multiplicities per basis element."""
    if d < 0:
        raise ValueError("curve degree must be non-negative")
    found = []
    for n in range(n_max + 1):
        for ins in combinations_with_replacement(range(space.size), n):
            if evaluate_gw(GWQuery(space, d, ins)):
                found.append(tuple(ins.count(i) for i in range(space.size)))
    return found


# ---------------------------------------------------------------------------
# Potentials


def _t_bound(t_order: int) -> int:
    # the cubic classical part is always kept exact
    return max(t_order, CLASSICAL_T_ORDER)


def potential(
    space: CohBasis,
    t_order: int,
    q_order: int,
    table: KontsevichTable | Sequence[int] | None = None,
) -> SuperSeries:
    """Genus-0 potential truncated to total ``t``-degree ``t_order`` and ``q^q_order``.

    The ``t`` bound is raised to 3 when smaller, so the classical cubic part
    is always present.  For ``P^2`` a custom ``table`` of ``N_d`` may be
    supplied (entries beyond its length are treated as zero).
    """
    if t_order < 0 or q_order < 0:
        raise ValueError("truncation orders must be non-negative")
    T, Q = _t_bound(t_order), q_order
    vs = space.variables

    def mono(exps, coeff=1, q=0):
        return SuperSeries.monomial(vs, exps, T, Q, coeff=coeff, q=q)

    half = Fraction(1, 2)
    if space.tag == "P1":
        phi = mono({0: 2, 1: 1}, half)
        if Q >= 1:
            phi = phi + mono({}, q=1) * exp_truncated(mono({1: 1}))
        return phi
    if space.tag == "P2":
        if table is None:
            table = kontsevich(Q) if Q else KontsevichTable(())
        values = list(table)
        # <P2, P2, pt> = <P2, l, l> = 1 fix the cubic part
        phi = mono({0: 2, 2: 1}, half) + mono({0: 1, 1: 2}, half)
        for d in range(1, Q + 1):
            n_d = values[d - 1] if d <= len(values) else 0
            if not n_d or 3 * d - 1 > T:
                continue
            term = mono({2: 3 * d - 1}, Fraction(n_d, factorial(3 * d - 1)), q=d)
            phi = phi + term * exp_truncated(mono({1: 1}, d))
        return phi
    if space.genus:
        pt = space.point
        phi = mono({0: 2, pt: 1}, half)
        for j in range(1, space.genus + 1):
            phi = phi - mono({0: 1, 2 * j - 1: 1, 2 * j: 1})
        return phi
    raise ValueError(f"no potential for {space.tag}")


def insertion_sign(space: CohBasis, alpha: Sequence[int]) -> int:
    """``eps(alpha)`` with ``prod (t_i T_i)^{a_i} = eps * prod T_i^{a_i} * prod t_i^{a_i}``."""
    # interleaved word t_i T_i t_i T_i ...; reorder into all T's then all t's
    word = []
    for i, a in enumerate(alpha):
        word += [("t", i), ("T", i)] * a
    target_T = [s for s in word if s[0] == "T"]
    target_t = [s for s in word if s[0] == "t"]
    positions = {}
    for pos, sym in enumerate(target_T + target_t):
        positions.setdefault(sym, []).append(pos)
    # tag each occurrence with its destination
    seen: dict = {}
    dest = []
    for sym in word:
        k = seen.get(sym, 0)
        dest.append(positions[sym][k])
        seen[sym] = k + 1
    sign = 1
    for x in range(len(word)):
        for y in range(x + 1, len(word)):
            if dest[x] > dest[y] and space.parity(word[x][1]) and space.parity(word[y][1]):
                sign = -sign
    return sign


def potential_from_invariants(space: CohBasis, t_order: int, q_order: int) -> SuperSeries:
    """``sum_alpha eps(alpha) <T^alpha> t^alpha / alpha!`` assembled from :func:`evaluate_gw`."""
    T, Q = _t_bound(t_order), q_order
    vs = space.variables
    terms: dict[SuperMonomial, Fraction] = {}
    d_range = range(Q + 1) if space.c1_per_line is not None else range(1)
    for d in d_range:
        for n in range(T + 1):
            for ins in combinations_with_replacement(range(space.size), n):
                value = evaluate_gw(GWQuery(space, d, ins))
                if not value:
                    continue
                alpha = [ins.count(i) for i in range(space.size)]
                sign, mono = monomial_normalize(((vs[i], a) for i, a in enumerate(alpha)), q=d)
                if mono is None:
                    continue
                weight = Fraction(insertion_sign(space, alpha) * sign, 1)
                for a in alpha:
                    weight /= factorial(a)
                terms[mono] = terms.get(mono, 0) + weight * value
    return SuperSeries(vs, terms, T, Q)


def formal_degree(space: CohBasis, mono: SuperMonomial) -> int:
    """Degree with ``deg t_i = deg T_i - 2`` and ``deg q^d = -2 d c1(line)``."""
    deg = sum((space.degrees[i] - 2) * e for i, e in mono.even)
    deg += sum(space.degrees[i] - 2 for i in mono.odd)
    return deg - 2 * (space.c1_per_line or 0) * mono.q


# ---------------------------------------------------------------------------
# Quantum products


def third_partial(phi: SuperSeries, i: int, j: int, k: int) -> SuperSeries:
    """``d_i d_j d_k phi`` with ``d_k`` applied first."""
    return phi.partial(k).partial(j).partial(i)


def big_quantum_product(space: CohBasis, i: int, j: int, phi: SuperSeries) -> list[SuperSeries]:
    """Coefficients of ``T_i * T_j`` on the dual basis: ``[Phi_{ijk} for k]``."""
    i, j = space.index(i), space.index(j)
    return [third_partial(phi, i, j, k) for k in range(space.size)]


def lower_index(space: CohBasis, dual_coeffs: Sequence[SuperSeries]) -> list[SuperSeries]:
    """Re-express ``sum_k c_k T^k`` on the basis ``T_l`` via ``T^k = sum_l g^{kl} T_l``."""
    ginv = space.inverse_pairing
    out = []
    for l in range(space.size):
        total = dual_coeffs[0] * 0
        for k, c in enumerate(dual_coeffs):
            if ginv[k][l]:
                total = total + c * ginv[k][l]
        out.append(total)
    return out


def big_product_basis(space: CohBasis, i: int, j: int, phi: SuperSeries) -> list[SuperSeries]:
    """``T_i * T_j`` as coefficients on ``T_0 .. T_m``."""
    return lower_index(space, big_quantum_product(space, i, j, phi))


def quantum_multiply(
    space: CohBasis, x: Sequence[SuperSeries], y: Sequence[SuperSeries], phi: SuperSeries
) -> list[SuperSeries]:
    """Big quantum product of two elements given on the basis ``T_l``.

    Coefficients must be even series, so they commute past every ``T_l``.
    """
    for c in list(x) + list(y):
        if c.parity() != 0:
            raise ValueError("quantum_multiply needs even coefficient series")
    zero = phi.partial(0).partial(0).partial(0) * 0
    out = [zero] * space.size
    for a, xa in enumerate(x):
        if xa.is_zero():
            continue
        for b, yb in enumerate(y):
            if yb.is_zero():
                continue
            prod_ab = big_product_basis(space, a, b, phi)
            coeff = xa * yb
            out = [o + coeff * p for o, p in zip(out, prod_ab)]
    return out


def basis_element(space: CohBasis, i: int, phi: SuperSeries) -> list[SuperSeries]:
    vs = phi.variables
    return [
        SuperSeries.constant(vs, int(k == i), phi.t_max, phi.q_max) for k in range(space.size)
    ]


def small_quantum_product(space: CohBasis, i, j) -> list[dict[int, Fraction]]:
    """``T_i * T_j = sum_{k, d} <I_{0,3,d}>(T_i, T_j, T_k) q^d T^k`` on the basis ``T_l``.

    Returns, for each ``l``, a map from ``q``-exponent to coefficient.
    """
    if space.tag not in ("P1", "P2") and not space.genus:
        raise ValueError(f"small quantum product of {space.tag} is not supported")
    i, j = space.index(i), space.index(j)
    ginv = space.inverse_pairing
    top = 3 * max(space.degrees)
    out: list[dict[int, Fraction]] = [dict() for _ in range(space.size)]
    d = 0
    while dimension_sum(space, d, 3) <= top:
        for k in range(space.size):
            value = evaluate_gw(GWQuery(space, d, (i, j, k)))
            if not value:
                continue
            for l in range(space.size):
                if ginv[k][l]:
                    out[l][d] = out[l].get(d, 0) + value * ginv[k][l]
        if space.c1_per_line is None:
            break
        d += 1
    return [{q: c for q, c in sorted(entry.items()) if c} for entry in out]


# ---------------------------------------------------------------------------
# WDVV


def wdvv_sign(space: CohBasis, i: int, j: int, k: int) -> int:
    vs = space.variables
    return -1 if (vs[i].degree * (vs[j].degree + vs[k].degree)) % 2 else 1


def wdvv_residual(space: CohBasis, phi: SuperSeries, indices: Sequence[int]) -> SuperSeries:
    """LHS minus RHS of the WDVV equation at ``(i, j, k, l)``, exact to the reliable order."""
    i, j, k, l = (space.index(x) for x in indices)
    ginv = space.inverse_pairing
    n = space.size
    lhs = phi.partial(0).partial(0).partial(0) * 0
    rhs = lhs
    left_a = [third_partial(phi, i, j, a) for a in range(n)]
    left_b = [third_partial(phi, b, k, l) for b in range(n)]
    right_a = [third_partial(phi, j, k, a) for a in range(n)]
    right_b = [third_partial(phi, b, i, l) for b in range(n)]
    for a in range(n):
        for b in range(n):
            if not ginv[a][b]:
                continue
            lhs = lhs + left_a[a] * left_b[b] * ginv[a][b]
            rhs = rhs + right_a[a] * right_b[b] * ginv[a][b]
    return lhs - wdvv_sign(space, i, j, k) * rhs


def recursion_from_wdvv(d_max: int) -> KontsevichTable:
    """Solve for ``N_d`` order by order from the WDVV equation at ``(1, 1, 2, 2)``.

    At ``q^d t_2^(3d-4)`` (no ``t_0``, ``t_1``) the residual is affine in the
    unknown ``N_d`` once ``N_1 .. N_{d-1}`` are fixed; two evaluations give
    the slope and the root.
    """
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    values = [1]
    for d in range(2, d_max + 1):
        T, Q = 3 * d - 1, d
        target = {2: 3 * d - 4}
        at_zero = wdvv_residual(P2, potential(P2, T, Q, values + [0]), (1, 1, 2, 2))
        at_one = wdvv_residual(P2, potential(P2, T, Q, values + [1]), (1, 1, 2, 2))
        r0 = at_zero.coefficient(target, q=d)
        slope = at_one.coefficient(target, q=d) - r0
        if not slope:
            raise ArithmeticError(f"WDVV coefficient does not determine N_{d}")
        root = -r0 / slope
        if root.denominator != 1:
            raise ArithmeticError(f"WDVV gives non-integral N_{d} = {root}")
        values.append(root.numerator)
    return KontsevichTable(tuple(values))
