"""Exact scalars, partitions and truncated supercommutative power series.

Scalars are :class:`fractions.Fraction` throughout; nothing in the package
ever rounds.  The series type :class:`SuperSeries` carries a table of
graded variables ``t_i`` (odd variables anticommute and square to zero)
together with a single commuting Novikov variable ``q``.  Every series
records the order up to which its coefficients are exact, as a pair
``(t_max, q_max)``: ``t_max`` bounds the total exponent of the ``t``
variables and ``q_max`` the exponent of ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Scalar = Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"refusing inexact scalar {value!r}")


# ---------------------------------------------------------------------------
# Partitions


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition((1, 0))`` is ``(1,)``; this
    lets the usual two-index Schubert labels be typed directly.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (0-based), or 0 beyond the length."""
        return self[i] if i < len(self) else 0

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= p for i, p in enumerate(other))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def complement(self, rows: int, cols: int) -> "Partition":
        """The partition completing ``self`` to the full ``rows x cols`` box."""
        if not self.fits(rows, cols):
            raise ValueError(f"{self!r} does not fit a {rows}x{cols} box")
        return Partition(cols - self.part(rows - 1 - i) for i in range(rows))


def partitions_bounded(i: int, max_parts: int, max_size: int) -> list[Partition]:
    """All partitions of ``i`` with at most ``max_parts`` parts, each at most ``max_size``."""
    if i < 0:
        raise ValueError("weight must be non-negative")

    def build(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots == 0 or remaining > slots * cap:
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in build(remaining - first, slots - 1, first):
                yield (first,) + rest

    return [Partition(p) for p in build(i, max_parts, max_size)]


# ---------------------------------------------------------------------------
# Graded variables and monomials


@dataclass(frozen=True)
class GradedVariable:
    index: int
    degree: int

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"


@dataclass(frozen=True, order=True)
class SuperMonomial:
    """``q^q * prod t_i^e_i * t_j1 t_j2 ...`` with the odd part in ascending order.

    ``even`` holds ``(index, exponent)`` pairs sorted by index; ``odd`` holds
    distinct odd-variable indices in ascending order.  Signs produced by
    reordering live in the coefficient, never here.
    """

    even: tuple[tuple[int, int], ...] = ()
    odd: tuple[int, ...] = ()
    q: int = 0

    @property
    def t_degree(self) -> int:
        return sum(e for _, e in self.even) + len(self.odd)

    def exponent(self, index: int) -> int:
        for i, e in self.even:
            if i == index:
                return e
        return 1 if index in self.odd else 0

    @property
    def is_odd(self) -> bool:
        return len(self.odd) % 2 == 1

    def sort_key(self) -> tuple:
        return (self.q, self.t_degree, self.even, self.odd)

    def descriptor(self) -> str:
        factors = []
        symbols = sorted(
            [(i, e) for i, e in self.even] + [(i, 1) for i in self.odd]
        )
        # odd factors keep their ascending order, even ones commute with all
        for i, e in symbols:
            factors.append(f"t{i}" if e == 1 else f"t{i}^{e}")
        if self.q:
            factors.append("q" if self.q == 1 else f"q^{self.q}")
        return "*".join(factors) if factors else "1"


ONE = SuperMonomial()


def _sort_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting ``indices`` (which are distinct)."""
    sign = 1
    items = list(indices)
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if items[a] > items[b]:
                sign = -sign
    return sign


def monomial_normalize(
    factors: Iterable[tuple[GradedVariable, int]], q: int = 0
) -> tuple[int, SuperMonomial | None]:
    """Bring a written product of variable powers into canonical form.

    Returns ``(sign, monomial)``, or ``(0, None)`` when an odd variable
    occurs twice and the product vanishes.
    """
    even: dict[int, int] = {}
    odd: list[int] = []
    for var, exp in factors:
        if exp < 0:
            raise ValueError("exponents must be non-negative")
        if exp == 0:
            continue
        if var.odd:
            if exp >= 2 or var.index in odd:
                return 0, None
            odd.append(var.index)
        else:
            even[var.index] = even.get(var.index, 0) + exp
    sign = _sort_sign(odd)
    return sign, SuperMonomial(tuple(sorted(even.items())), tuple(sorted(odd)), q)


def _mul_monomials(a: SuperMonomial, b: SuperMonomial) -> tuple[int, SuperMonomial | None]:
    if set(a.odd) & set(b.odd):
        return 0, None
    even = dict(a.even)
    for i, e in b.even:
        even[i] = even.get(i, 0) + e
    odd = a.odd + b.odd
    return _sort_sign(odd), SuperMonomial(tuple(sorted(even.items())), tuple(sorted(odd)), a.q + b.q)


# ---------------------------------------------------------------------------
# Series


class SuperSeries:
    """Truncated formal series over a fixed table of graded variables.

    Instances are immutable.  Zero coefficients and terms beyond the
    truncation bounds are dropped on construction, so two series with the
    same table and bounds are equal exactly when their term maps agree.
    """

    __slots__ = ("variables", "t_max", "q_max", "_terms")

    def __init__(
        self,
        variables: Sequence[GradedVariable],
        terms: Mapping[SuperMonomial, object] | None = None,
        t_max: int = 0,
        q_max: int = 0,
    ):
        self.variables = tuple(variables)
        self.t_max = t_max
        self.q_max = q_max
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = as_fraction(coeff)
            if coeff and mono.t_degree <= t_max and mono.q <= q_max:
                clean[mono] = coeff
        self._terms = clean

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, variables, t_max, q_max) -> "SuperSeries":
        return cls(variables, {}, t_max, q_max)

    @classmethod
    def constant(cls, variables, value, t_max, q_max) -> "SuperSeries":
        return cls(variables, {ONE: value}, t_max, q_max)

    @classmethod
    def monomial(
        cls, variables, exponents: Mapping[int, int], t_max, q_max, coeff=1, q: int = 0
    ) -> "SuperSeries":
        """The single term ``coeff * q^q * prod t_i^e`` written in index order."""
        table = {v.index: v for v in variables}
        sign, mono = monomial_normalize(
            ((table[i], e) for i, e in sorted(exponents.items())), q=q
        )
        if mono is None:
            return cls.zero(variables, t_max, q_max)
        return cls(variables, {mono: sign * as_fraction(coeff)}, t_max, q_max)

    @classmethod
    def variable(cls, variables, index: int, t_max, q_max) -> "SuperSeries":
        return cls.monomial(variables, {index: 1}, t_max, q_max)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[SuperMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[SuperMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponents: Mapping[int, int] | None = None, q: int = 0) -> Fraction:
        """Coefficient of ``q^q * prod t_i^e`` written in ascending index order."""
        exponents = exponents or {}
        table = self._table()
        sign, mono = monomial_normalize(
            ((table[i], e) for i, e in sorted(exponents.items())), q=q
        )
        if mono is None:
            return Fraction(0)
        return sign * self._terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def odd_indices(self) -> frozenset[int]:
        return frozenset(v.index for v in self.variables if v.odd)

    def parity(self) -> int | None:
        """0 or 1 when every term has the same parity, else ``None``.  Zero is even."""
        parities = {m.is_odd for m in self._terms}
        if len(parities) > 1:
            return None
        return int(parities.pop()) if parities else 0

    def _table(self) -> dict[int, GradedVariable]:
        return {v.index: v for v in self.variables}

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: "SuperSeries") -> None:
        if self.variables != other.variables:
            raise ValueError("series have different variable tables")

    def _like(self, terms, t_max=None, q_max=None) -> "SuperSeries":
        return SuperSeries(
            self.variables,
            terms,
            self.t_max if t_max is None else t_max,
            self.q_max if q_max is None else q_max,
        )

    def __add__(self, other):
        if not isinstance(other, SuperSeries):
            return self + SuperSeries.constant(self.variables, other, self.t_max, self.q_max)
        self._check_compatible(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return self._like(terms, min(self.t_max, other.t_max), min(self.q_max, other.q_max))

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SuperSeries):
            return series_mul(self, other)
        c = as_fraction(other)
        return self._like({m: c * v for m, v in self._terms.items()})

    def __rmul__(self, other):
        # scalars are even, so they commute with everything
        return self * other

    def __truediv__(self, other):
        return self * (1 / as_fraction(other))

    def __pow__(self, n: int):
        result = SuperSeries.constant(self.variables, 1, self.t_max, self.q_max)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SuperSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.t_max == other.t_max
            and self.q_max == other.q_max
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.variables, self.t_max, self.q_max, frozenset(self._terms.items())))

    def agrees_with(self, other: "SuperSeries") -> bool:
        """Equality up to the smaller of the two truncation orders."""
        self._check_compatible(other)
        t, q = min(self.t_max, other.t_max), min(self.q_max, other.q_max)
        return self.truncate(t, q)._terms == other.truncate(t, q)._terms

    def truncate(self, t_max: int, q_max: int) -> "SuperSeries":
        return self._like(self._terms, min(t_max, self.t_max), min(q_max, self.q_max))

    def partial(self, index: int) -> "SuperSeries":
        return series_partial(self, index)

    def map_coefficients(self, fn) -> "SuperSeries":
        return self._like({m: fn(m, c) for m, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"SuperSeries({self}, t_max={self.t_max}, q_max={self.q_max})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.items():
            desc = mono.descriptor()
            if desc == "1":
                text = str(c)
            elif c == 1:
                text = desc
            elif c == -1:
                text = "-" + desc
            else:
                text = f"{c}*{desc}"
            out.append(text)
        return " + ".join(out).replace("+ -", "- ")

    def to_records(self) -> list[list]:
        """Stable ``[descriptor, numerator, denominator]`` rows for serialization."""
        return [[m.descriptor(), c.numerator, c.denominator] for m, c in self.items()]


def series_mul(a: SuperSeries, b: SuperSeries) -> SuperSeries:
    """Product of two series, exact up to the smaller of their truncations."""
    a._check_compatible(b)
    t_max, q_max = min(a.t_max, b.t_max), min(a.q_max, b.q_max)
    terms: dict[SuperMonomial, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            if ma.t_degree + mb.t_degree > t_max or ma.q + mb.q > q_max:
                continue
            sign, mono = _mul_monomials(ma, mb)
            if mono is None:
                continue
            terms[mono] = terms.get(mono, 0) + sign * ca * cb
    return SuperSeries(a.variables, terms, t_max, q_max)


def series_partial(a: SuperSeries, index: int) -> SuperSeries:
    """Left derivative by ``t_index``.

    An odd variable is first moved to the front of its monomial, picking up
    one sign per odd variable it passes.  The result is exact to one order
    less in ``t`` than the input.
    """
    table = a._table()
    if index not in table:
        raise ValueError(f"t{index} is not a variable of this series")
    odd_var = table[index].odd
    terms: dict[SuperMonomial, Fraction] = {}
    for mono, c in a._terms.items():
        if odd_var:
            if index not in mono.odd:
                continue
            pos = mono.odd.index(index)
            sign = -1 if pos % 2 else 1
            new = SuperMonomial(mono.even, mono.odd[:pos] + mono.odd[pos + 1:], mono.q)
            terms[new] = terms.get(new, 0) + sign * c
        else:
            exps = dict(mono.even)
            k = exps.get(index, 0)
            if not k:
                continue
            if k == 1:
                del exps[index]
            else:
                exps[index] = k - 1
            new = SuperMonomial(tuple(sorted(exps.items())), mono.odd, mono.q)
            terms[new] = terms.get(new, 0) + k * c
    return SuperSeries(a.variables, terms, a.t_max - 1, a.q_max)


def exp_truncated(a: SuperSeries) -> SuperSeries:
    """``sum a^n / n!`` for an even series without constant term."""
    if a.constant_term():
        raise ValueError("exp_truncated needs a series with zero constant term")
    if a.parity() != 0:
        raise ValueError("exp_truncated needs an even series")
    result = SuperSeries.constant(a.variables, 1, a.t_max, a.q_max)
    power = result
    n = 0
    while True:
        n += 1
        power = power * a / n
        if power.is_zero():
            return result
        result = result + power
