"""Splitting-principle Chern classes.

Two small polynomial types live here.  :class:`SymPoly2` is a polynomial in
the Chern classes ``c1, c2`` of a rank-2 bundle (graded with ``deg c1 = 1``,
``deg c2 = 2``).  :class:`HPoly` is a truncated polynomial in a hyperplane
class ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping


@dataclass(frozen=True)
class SymPoly2:
    terms: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: int(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", clean)

    def __eq__(self, other):
        if isinstance(other, SymPoly2):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, c1_exp: int, c2_exp: int) -> int:
        return self.terms.get((c1_exp, c2_exp), 0)

    def degrees(self) -> set[int]:
        return {a + 2 * b for a, b in self.terms}

    def evaluate(self, c1, c2):
        return sum(coef * c1**a * c2**b for (a, b), coef in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), coef in sorted(self.terms.items(), reverse=True):
            factors = []
            if a:
                factors.append("c1" if a == 1 else f"c1^{a}")
            if b:
                factors.append("c2" if b == 1 else f"c2^{b}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(mono)
            else:
                parts.append(f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# Polynomials in the Chern roots alpha, beta: {(i, j): coeff} for alpha^i beta^j.
RootPoly = dict


def _root_mul(p: RootPoly, q: RootPoly) -> RootPoly:
    out: RootPoly = {}
    for (i, j), a in p.items():
        for (k, l), b in q.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + a * b
    return {k: v for k, v in out.items() if v}


def sym_power_total_roots(d: int) -> RootPoly:
    """``prod_{a=0..d} (1 + a*alpha + (d-a)*beta)`` expanded in the roots."""
    total: RootPoly = {(0, 0): 1}
    for a in range(d + 1):
        total = _root_mul(total, {(0, 0): 1, (1, 0): a, (0, 1): d - a})
    return total


def symmetric_to_elementary(p: RootPoly) -> SymPoly2:
    """Rewrite a symmetric polynomial in ``alpha, beta`` via ``e1 = c1``, ``e2 = c2``.

    Peel off the lex-leading monomial ``alpha^i beta^j`` (``i >= j``) by
    subtracting ``coeff * e1^(i-j) * e2^j`` until nothing remains.
    """
    e1: RootPoly = {(1, 0): 1, (0, 1): 1}
    e2: RootPoly = {(1, 1): 1}
    rest = {k: v for k, v in p.items() if v}
    out: dict[tuple[int, int], int] = {}
    while rest:
        (i, j) = max(rest)
        coef = rest[(i, j)]
        if i < j:
            raise ArithmeticError(f"polynomial is not symmetric: {p}")
        image: RootPoly = {(0, 0): coef}
        for _ in range(i - j):
            image = _root_mul(image, e1)
        for _ in range(j):
            image = _root_mul(image, e2)
        for key, val in image.items():
            rest[key] = rest.get(key, 0) - val
            if not rest[key]:
                del rest[key]
        out[(i - j, j)] = out.get((i - j, j), 0) + coef
    return SymPoly2(out)


def sym_chern(d: int, i: int) -> SymPoly2:
    """The ``i``-th Chern class of ``Sym^d E`` for a rank-2 bundle ``E``.

    The Chern roots of ``Sym^d E`` are ``a*alpha + (d-a)*beta`` for
    ``a = 0..d``, matching the weights used by the localization module.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if not 0 <= i <= d + 1:
        raise ValueError(f"Sym^{d} has rank {d + 1}; no c_{i}")
    graded = {k: v for k, v in sym_power_total_roots(d).items() if k[0] + k[1] == i}
    return symmetric_to_elementary(graded)


def sym_total_chern(d: int) -> list[SymPoly2]:
    return [sym_chern(d, i) for i in range(d + 2)]


@dataclass(frozen=True)
class HPoly:
    """Coefficients of ``1, h, h^2, ...`` truncated at ``h^(len-1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "HPoly") -> "HPoly":
        n = min(len(self), len(other))
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] += a * b
        return HPoly(tuple(out))

    def truncate(self, length: int) -> "HPoly":
        return HPoly(self.coeffs[:length])

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def projective_tangent_chern(r: int) -> HPoly:
    """``c(T P^r) = (1 + h)^(r+1)`` with ``h^(r+1)`` dropped."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return HPoly(tuple(comb(r + 1, k) for k in range(r + 1)))


def hypersurface_tangent_chern(r: int, d: int) -> HPoly:
    """``c(TX)`` for a smooth degree-``d`` hypersurface ``X`` in ``P^r``.

    Adjunction gives ``(1 + h)^(r+1) / (1 + d h)``; powers above
    ``h^(r-1) = h^dim X`` are dropped.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if d < 1:
        raise ValueError("d must be at least 1")
    length = r
    numerator = [comb(r + 1, k) for k in range(length)]
    inverse = [(-d) ** k for k in range(length)]
    return HPoly(tuple(
        sum(numerator[j] * inverse[k - j] for j in range(k + 1)) for k in range(length)
    ))
