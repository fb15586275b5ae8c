"""The Chow ring of a Grassmannian on the Schubert basis.

``Gr(k, n)`` is the space of ``k``-planes in an ``n``-dimensional space.
Schubert classes ``sigma_lambda`` are indexed by partitions inside the
``k x (n - k)`` box, and ``sigma_lambda`` has codimension ``|lambda|``.
Products are computed with Littlewood-Richardson coefficients found by
enumerating LR skew tableaux directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .algebra import Partition, partitions_bounded
from .chern import SymPoly2, sym_chern


@dataclass(frozen=True)
class GrassContext:
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got Gr({self.k},{self.n})")

    @property
    def rows(self) -> int:
        return self.k

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def full_box(self) -> Partition:
        return Partition([self.cols] * self.rows)

    def fits(self, p: Partition) -> bool:
        return p.fits(self.rows, self.cols)

    def basis(self, weight: int | None = None) -> list[Partition]:
        weights = range(self.dim + 1) if weight is None else [weight]
        return [p for w in weights for p in partitions_bounded(w, self.rows, self.cols)]


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if nu.weight != lam.weight + mu.weight or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    # skew cells of nu/lam in reverse reading order: rows top to bottom, right to left
    cells = [
        (r, c)
        for r in range(len(nu))
        for c in range(nu[r] - 1, lam.part(r) - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = filling.get((r, c + 1), len(mu))
        lo = filling.get((r - 1, c), 0) + 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += fill(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return found

    return fill(0)


def lr_coefficient(lam, mu, nu, context: GrassContext | None = None) -> int:
    """Littlewood-Richardson coefficient ``c^nu_{lam, mu}``.

    Counts semistandard fillings of the skew shape ``nu / lam`` with content
    ``mu`` whose reverse reading word is a lattice word.  With a context,
    all three partitions must fit its box.
    """
    lam, mu, nu = map(_as_partition, (lam, mu, nu))
    if context is not None:
        for p in (lam, mu, nu):
            if not context.fits(p):
                raise ValueError(f"{p!r} does not fit the box of Gr({context.k},{context.n})")
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _basis_product(lam: Partition, mu: Partition, k: int, n: int) -> tuple[tuple[Partition, int], ...]:
    weight = lam.weight + mu.weight
    if weight > k * (n - k):
        return ()
    out = []
    for nu in partitions_bounded(weight, k, n - k):
        c = _lr(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


@dataclass(frozen=True)
class ChowClass:
    context: GrassContext
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Partition, int] = {}
        for p, c in self.terms.items():
            p = _as_partition(p)
            if not self.context.fits(p):
                raise ValueError(f"{p!r} does not fit the box of Gr({self.context.k},{self.context.n})")
            if c:
                clean[p] = clean.get(p, 0) + int(c)
        object.__setattr__(self, "terms", {p: c for p, c in clean.items() if c})

    @classmethod
    def schubert(cls, context: GrassContext, partition=()) -> "ChowClass":
        return cls(context, {_as_partition(partition): 1})

    @classmethod
    def one(cls, context: GrassContext) -> "ChowClass":
        return cls.schubert(context, ())

    @classmethod
    def zero(cls, context: GrassContext) -> "ChowClass":
        return cls(context, {})

    def __eq__(self, other):
        if isinstance(other, ChowClass):
            return self.context == other.context and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def coefficient(self, partition) -> int:
        return self.terms.get(_as_partition(partition), 0)

    def weights(self) -> set[int]:
        return {p.weight for p in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ChowClass") -> None:
        if self.context != other.context:
            raise ValueError("classes live on different Grassmannians")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return ChowClass(self.context, terms)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.context, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return chow_mul(self, other)
        return ChowClass(self.context, {p: c * int(other) for p, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ChowClass":
        result = ChowClass.one(self.context)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in sorted(self.terms.items(), key=lambda kv: (kv[0].weight, tuple(kv[0]))):
            label = "1" if not p else "s(" + ",".join(map(str, p)) + ")"
            parts.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ")


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product in ``A(Gr(k, n))``; classes falling outside the box vanish."""
    a._check(b)
    ctx = a.context
    terms: dict[Partition, int] = {}
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            for nu, c in _basis_product(lam, mu, ctx.k, ctx.n):
                terms[nu] = terms.get(nu, 0) + x * y * c
    return ChowClass(ctx, terms)


def degree(a: ChowClass) -> int:
    """Degree of a top-dimensional class: its coefficient on the point class."""
    top = a.context.dim
    if any(w != top for w in a.weights()):
        raise ValueError(f"degree needs a class of codimension {top}, got weights {sorted(a.weights())}")
    return a.coefficient(a.context.full_box)


def substitute_chern(poly: SymPoly2, context: GrassContext) -> ChowClass:
    """Evaluate ``poly`` at ``c1 = sigma_1``, ``c2 = sigma_{1,1}``, the Chern classes of ``S*``."""
    s1 = ChowClass.schubert(context, (1,))
    s11 = ChowClass.schubert(context, (1, 1))
    powers1 = {0: ChowClass.one(context)}
    powers11 = {0: ChowClass.one(context)}
    total = ChowClass.zero(context)
    for (a, b), coef in sorted(poly.terms.items()):
        for e in range(1, a + 1):
            powers1.setdefault(e, powers1[e - 1] * s1)
        for e in range(1, b + 1):
            powers11.setdefault(e, powers11[e - 1] * s11)
        total = total + coef * (powers1[a] * powers11[b])
    return total


def lines_on_hypersurface(n: int) -> int:
    """Number of lines on a general hypersurface of degree ``2n - 5`` in ``P^(n-1)``.

    Lines in ``P^(n-1)`` form ``Gr(2, n)``.  The degree is forced so that
    ``Sym^d S*`` has rank ``d + 1 = dim Gr(2, n)``, and the count is the
    degree of its top Chern class.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    d = 2 * n - 5
    ctx = GrassContext(2, n)
    return degree(substitute_chern(sym_chern(d, d + 1), ctx))


def pieri_one_box(lam, context: GrassContext) -> ChowClass:
    """``sigma_1 * sigma_lam`` by adding one box in every admissible way."""
    lam = _as_partition(lam)
    terms: dict[Partition, int] = {}
    parts = list(lam) + [0]
    for r in range(len(parts)):
        if r == 0 or parts[r] < parts[r - 1]:
            grown = parts.copy()
            grown[r] += 1
            p = Partition(grown)
            if context.fits(p):
                terms[p] = 1
    return ChowClass(context, terms)

