"""Exact set functions over a finite variable set.

Set functions are dense vectors of rationals indexed by subset bitmasks.
All arithmetic is exact; no floats appear anywhere in this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .rational_linalg import solve_square

RationalLike = Union[int, Fraction, str]

MAX_VARS = 16


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class VariableSet:
    """An ordered (lexicographically sorted) set of variable labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not all(isinstance(s, str) and s for s in self.labels):
            raise ValueError("labels must be non-empty strings")
        if sorted(set(self.labels)) != list(self.labels):
            raise ValueError("labels must be distinct and sorted")
        if not 2 <= len(self.labels) <= MAX_VARS:
            raise ValueError(f"need between 2 and {MAX_VARS} variables, got {len(self.labels)}")

    @classmethod
    def of(cls, labels: Iterable[str]) -> "VariableSet":
        return cls(tuple(sorted(labels)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown variable {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for s in labels:
            mask |= 1 << self.index(s)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        self.check_mask(mask)
        return tuple(s for i, s in enumerate(self.labels) if mask >> i & 1)

    def check_mask(self, mask: int) -> None:
        if not 0 <= mask < self.size:
            raise ValueError(f"subset mask {mask} out of range for n={self.n}")

    def subsets(self) -> Iterator[int]:
        return iter(range(self.size))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of a bitmask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class ElementaryTriplet:
    """A triplet <a,b|C> with a < b and C disjoint from {a,b}."""

    a: int
    b: int
    c_mask: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("triplet needs two distinct variables")
        if self.a > self.b:
            raise ValueError("triplet must be stored with a < b")
        if self.c_mask & (1 << self.a | 1 << self.b):
            raise ValueError("conditioning set overlaps {a,b}")

    @classmethod
    def of(cls, a: int, b: int, c_mask: int) -> "ElementaryTriplet":
        if a > b:
            a, b = b, a
        return cls(a, b, c_mask)

    @property
    def ab_mask(self) -> int:
        return 1 << self.a | 1 << self.b

    def render(self, vars: VariableSet) -> str:
        cond = ",".join(vars.labels_of(self.c_mask))
        return f"{vars.labels[self.a]} _||_ {vars.labels[self.b]} | {{{cond}}}"


def all_triplets(vars: VariableSet) -> list[ElementaryTriplet]:
    """Canonical enumeration of the n(n-1)2^(n-3) elementary triplets."""
    out = []
    for a, b in itertools.combinations(range(vars.n), 2):
        rest = vars.full_mask & ~(1 << a) & ~(1 << b)
        for c in sorted(submasks(rest)):
            out.append(ElementaryTriplet(a, b, c))
    return out


class StandardizationKind(Enum):
    LOWER = "l"
    UPPER = "u"
    ORTHOGONAL = "o"
    POLYMATROIDAL = "p"
    WEIRD = "w"


@dataclass(frozen=True)
class SetFunction:
    """A rational-valued function on the power set of a variable set.

    values[mask] is the value on the subset encoded by mask (bit i set iff
    the i-th sorted label belongs to the subset).
    """

    vars: VariableSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.vars.size:
            raise ValueError("value vector length must be 2^n")

    @classmethod
    def from_values(cls, vars: VariableSet, values: Sequence[RationalLike]) -> "SetFunction":
        return cls(vars, tuple(_frac(v) for v in values))

    @classmethod
    def from_map(cls, vars: VariableSet, entries: Mapping[int, RationalLike]) -> "SetFunction":
        vals = [Fraction(0)] * vars.size
        for mask, v in entries.items():
            vars.check_mask(mask)
            vals[mask] = _frac(v)
        return cls(vars, tuple(vals))

    @classmethod
    def zero(cls, vars: VariableSet) -> "SetFunction":
        return cls(vars, (Fraction(0),) * vars.size)

    def __call__(self, mask: int) -> Fraction:
        return self.values[mask]

    def __add__(self, other: "SetFunction") -> "SetFunction":
        _check_same_vars(self, other)
        return SetFunction(self.vars, tuple(x + y for x, y in zip(self.values, other.values)))

    def __sub__(self, other: "SetFunction") -> "SetFunction":
        _check_same_vars(self, other)
        return SetFunction(self.vars, tuple(x - y for x, y in zip(self.values, other.values)))

    def __neg__(self) -> "SetFunction":
        return SetFunction(self.vars, tuple(-x for x in self.values))

    def scale(self, c: RationalLike) -> "SetFunction":
        c = _frac(c)
        return SetFunction(self.vars, tuple(c * x for x in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def is_nonneg(self) -> bool:
        return all(v >= 0 for v in self.values)

    def is_nondecreasing(self) -> bool:
        n, vals = self.vars.n, self.values
        return all(vals[s] <= vals[s | 1 << i]
                   for s in range(self.vars.size) for i in range(n) if not s >> i & 1)

    def is_nonincreasing(self) -> bool:
        n, vals = self.vars.n, self.values
        return all(vals[s] >= vals[s | 1 << i]
                   for s in range(self.vars.size) for i in range(n) if not s >> i & 1)


def _check_same_vars(m: SetFunction, u: SetFunction) -> None:
    if m.vars != u.vars:
        raise ValueError("set functions live over different variable sets")


def delta(vars: VariableSet, a_mask: int) -> SetFunction:
    """Indicator of a single subset: 1 on A, 0 elsewhere."""
    vars.check_mask(a_mask)
    return SetFunction.from_map(vars, {a_mask: 1})


def superset_indicator(vars: VariableSet, a_mask: int) -> SetFunction:
    """1 on every superset of A, 0 elsewhere."""
    vars.check_mask(a_mask)
    return SetFunction.from_values(
        vars, [1 if s & a_mask == a_mask else 0 for s in range(vars.size)])


def elementary_imset(vars: VariableSet, t: ElementaryTriplet) -> SetFunction:
    """The +-1 vector encoding the facet inequality of <a,b|C>."""
    if t.c_mask & t.ab_mask or t.b >= vars.n:
        raise ValueError("triplet invalid for this variable set")
    vars.check_mask(t.c_mask | t.ab_mask)
    vals = [Fraction(0)] * vars.size
    vals[t.c_mask] += 1
    vals[t.c_mask | t.ab_mask] += 1
    vals[t.c_mask | 1 << t.a] -= 1
    vals[t.c_mask | 1 << t.b] -= 1
    return SetFunction(vars, tuple(vals))


def semi_elementary_imset(vars: VariableSet, a_mask: int, b_mask: int, c_mask: int) -> SetFunction:
    """delta_{ABC} + delta_C - delta_{AC} - delta_{BC} for disjoint A, B, C."""
    for m in (a_mask, b_mask, c_mask):
        vars.check_mask(m)
    if a_mask & b_mask or a_mask & c_mask or b_mask & c_mask:
        raise ValueError("A, B, C must be pairwise disjoint")
    vals = [Fraction(0)] * vars.size
    vals[a_mask | b_mask | c_mask] += 1
    vals[c_mask] += 1
    vals[a_mask | c_mask] -= 1
    vals[b_mask | c_mask] -= 1
    return SetFunction(vars, tuple(vals))


def inner_product(m: SetFunction, u: SetFunction) -> Fraction:
    _check_same_vars(m, u)
    return sum((x * y for x, y in zip(m.values, u.values)), Fraction(0))


def triplet_product(m: SetFunction, t: ElementaryTriplet) -> Fraction:
    """<m, u_t> without materializing the imset."""
    v = m.values
    ab = t.ab_mask
    return v[t.c_mask | ab] + v[t.c_mask] - v[t.c_mask | 1 << t.a] - v[t.c_mask | 1 << t.b]


def is_supermodular(m: SetFunction) -> bool:
    """Facet test: every elementary-imset product is non-negative."""
    return all(triplet_product(m, t) >= 0 for t in all_triplets(m.vars))


def is_submodular(m: SetFunction) -> bool:
    return all(triplet_product(m, t) <= 0 for t in all_triplets(m.vars))


def is_supermodular_bruteforce(m: SetFunction) -> bool:
    """Definition test over all 4^n ordered pairs (A, B); oracle for is_supermodular."""
    # Plain ints compare much faster than Fractions; fall back only when needed.
    if m.is_integral():
        vals: Sequence = [v.numerator for v in m.values]
    else:
        vals = m.values
    size = m.vars.size
    for a in range(size):
        va = vals[a]
        for b in range(size):
            if va + vals[b] > vals[a | b] + vals[a & b]:
                return False
    return True


def is_modular(m: SetFunction) -> bool:
    return all(triplet_product(m, t) == 0 for t in all_triplets(m.vars))


def modular_combination(vars: VariableSet, k: RationalLike, rho: Sequence[RationalLike]) -> SetFunction:
    """k * m^{0<=} + sum_i rho(i) * m^{i<=}, the general modular function."""
    k = _frac(k)
    rho = [_frac(r) for r in rho]
    vals = []
    for s in range(vars.size):
        vals.append(k + sum((rho[i] for i in range(vars.n) if s >> i & 1), Fraction(0)))
    return SetFunction(vars, tuple(vals))


def _shift(m: SetFunction, k: Fraction, rho: Sequence[Fraction]) -> SetFunction:
    vals = []
    for s, v in enumerate(m.values):
        vals.append(v + k + sum((rho[i] for i in range(m.vars.n) if s >> i & 1), Fraction(0)))
    return SetFunction(m.vars, tuple(vals))


def _standardization_constraints(kind: StandardizationKind, vars: VariableSet):
    """Linear functionals (as coefficient vectors over subsets) that cut out
    the complementary space of the given kind."""
    n, size, full = vars.n, vars.size, vars.full_mask
    rows: list[list[int]] = []
    if kind is StandardizationKind.POLYMATROIDAL:
        row = [0] * size
        row[0] = 1  # m(empty) = 0
        rows.append(row)
        for i in range(n):
            row = [0] * size
            row[full & ~(1 << i)] = 1  # m(N\i) - m(N) = 0
            row[full] = -1
            rows.append(row)
    elif kind is StandardizationKind.WEIRD:
        row = [0] * size
        row[0] = 1
        rows.append(row)
        for i in range(n):
            row = [0] * size
            row[1 << i] = 1  # m(i) + m(N) = 0
            row[full] = 1
            rows.append(row)
    else:
        raise ValueError(f"no constraint table for {kind}")
    return rows


def standardize(m: SetFunction, kind: StandardizationKind) -> SetFunction:
    """The unique representative of the ~=-class of m in the kind's
    complementary space; closed forms for l/u/o, a linear solve otherwise."""
    vars = m.vars
    n, full = vars.n, vars.full_mask
    v = m.values
    if kind is StandardizationKind.LOWER:
        k = -v[0]
        rho = [v[0] - v[1 << i] for i in range(n)]
        return _shift(m, k, rho)
    if kind is StandardizationKind.UPPER:
        k = (n - 1) * v[full] - sum((v[full & ~(1 << j)] for j in range(n)), Fraction(0))
        rho = [v[full & ~(1 << i)] - v[full] for i in range(n)]
        return _shift(m, k, rho)
    if kind is StandardizationKind.ORTHOGONAL:
        total = sum(v, Fraction(0))
        weighted = sum((v[s] * bin(s).count("1") for s in range(vars.size)), Fraction(0))
        k = Fraction(weighted, 1 << (n - 1)) - Fraction((n + 1) * total, 1 << n)
        rho = []
        for i in range(n):
            with_i = sum((v[s] for s in range(vars.size) if s >> i & 1), Fraction(0))
            rho.append(Fraction(total - 2 * with_i, 1 << (n - 1)))
        return _shift(m, k, rho)
    # Generic: solve for (k, rho) so that the shifted function satisfies the
    # n+1 constraints defining the complementary space.
    rows = _standardization_constraints(kind, vars)
    basis = [superset_indicator(vars, 0)] + [superset_indicator(vars, 1 << i) for i in range(n)]
    mat = []
    rhs = []
    for row in rows:
        mat.append([sum((Fraction(c) * b.values[s] for s, c in enumerate(row) if c), Fraction(0))
                    for b in basis])
        rhs.append(-sum((Fraction(c) * v[s] for s, c in enumerate(row) if c), Fraction(0)))
    sol = solve_square(mat, rhs)
    if sol is None:
        raise RuntimeError("standardization system is singular; the space is not complementary")
    return _shift(m, sol[0], sol[1:])


def carrier(m: SetFunction) -> int:
    """The least M with m(S) = m(S & M) for all S, as a bitmask.

    Variable i belongs to the carrier iff m(S|i) != m(S) for some S avoiding i.
    """
    vars, vals = m.vars, m.values
    mask = 0
    for i in range(vars.n):
        bit = 1 << i
        for s in range(vars.size):
            if not s & bit and vals[s | bit] != vals[s]:
                mask |= bit
                break
    return mask


def support(m: SetFunction) -> int:
    """The least carrier over the ~=-class; defined for supermodular m only."""
    if not is_supermodular(m):
        raise ValueError("support is defined for supermodular functions only")
    return carrier(standardize(m, StandardizationKind.LOWER))
