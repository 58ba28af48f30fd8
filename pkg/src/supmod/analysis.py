"""Independency models, faces of the supermodular cone, extremality."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import rational_linalg as rl
from .core import (
    ElementaryTriplet,
    SetFunction,
    StandardizationKind,
    all_triplets,
    elementary_imset,
    is_modular,
    is_supermodular,
    standardize,
    triplet_product,
    _check_same_vars,
)


@dataclass(frozen=True)
class ScalarTable:
    """The table of elementary-imset products of one set function."""

    entries: tuple[tuple[ElementaryTriplet, Fraction], ...]

    def __getitem__(self, t: ElementaryTriplet) -> Fraction:
        return dict(self.entries)[t]

    def as_dict(self) -> dict[ElementaryTriplet, Fraction]:
        return dict(self.entries)


@dataclass(frozen=True)
class IndependencyModel:
    """The zero set of the scalar table: the induced independency model."""

    universe_size: int
    zero_set: frozenset[ElementaryTriplet]

    @property
    def dependency_count(self) -> int:
        return self.universe_size - len(self.zero_set)

    def __contains__(self, t: ElementaryTriplet) -> bool:
        return t in self.zero_set


@dataclass(frozen=True)
class FaceDescriptor:
    """The smallest face containing a supermodular function."""

    tight: frozenset[ElementaryTriplet]
    rank: int
    dimension: int


@dataclass(frozen=True)
class ExtremalityReport:
    supermodular: bool
    modular: bool
    face: FaceDescriptor
    extreme: bool


def scalar_table(m: SetFunction) -> ScalarTable:
    return ScalarTable(tuple((t, triplet_product(m, t)) for t in all_triplets(m.vars)))


def independency_model(m: SetFunction) -> IndependencyModel:
    ts = all_triplets(m.vars)
    zeros = frozenset(t for t in ts if triplet_product(m, t) == 0)
    return IndependencyModel(len(ts), zeros)


def quantitatively_equivalent(m1: SetFunction, m2: SetFunction) -> bool:
    """m1 ~= m2 iff their difference is modular."""
    _check_same_vars(m1, m2)
    return is_modular(m1 - m2)


def qualitatively_equivalent(m1: SetFunction, m2: SetFunction) -> bool:
    """m1 ~ m2 iff they induce the same independency model (on supermodular inputs)."""
    _check_same_vars(m1, m2)
    if not is_supermodular(m1) or not is_supermodular(m2):
        raise ValueError("qualitative equivalence is defined on supermodular functions")
    return independency_model(m1) == independency_model(m2)


def _face_descriptor(m: SetFunction) -> FaceDescriptor:
    tight = [t for t in all_triplets(m.vars) if triplet_product(m, t) == 0]
    rows = [[int(v) for v in elementary_imset(m.vars, t).values] for t in tight]
    rank = rl.rank_int(rows)
    return FaceDescriptor(frozenset(tight), rank, m.vars.size - rank)


def face_of(m: SetFunction) -> FaceDescriptor:
    """Tight triplets, their exact rank and the face dimension 2^n - rank."""
    if not is_supermodular(m):
        raise ValueError("face_of requires a supermodular function")
    return _face_descriptor(m)


def is_extreme(m: SetFunction) -> ExtremalityReport:
    """Extremality certificate: supermodular, non-modular, face dimension n+2."""
    sup = is_supermodular(m)
    mod = is_modular(m)
    face = _face_descriptor(m)
    extreme = sup and not mod and face.dimension == m.vars.n + 2
    return ExtremalityReport(sup, mod, face, extreme)


def integral_representative(m: SetFunction) -> SetFunction:
    """Minimal integral l-standardized generator of the ray of m."""
    if not is_supermodular(m):
        raise ValueError("integral_representative requires a supermodular function")
    r = standardize(m, StandardizationKind.LOWER)
    if r.is_zero():
        return r
    den = lcm(*(v.denominator for v in r.values))
    nums = [int(v * den) for v in r.values]
    g = gcd(*nums)
    return SetFunction(r.vars, tuple(Fraction(x, g) for x in nums))
