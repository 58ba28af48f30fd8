"""Supermodularity-preserving transformations: self-maps, projections,
extensions, replications, and their predicted induced independency models."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .analysis import IndependencyModel, independency_model
from .core import (
    ElementaryTriplet,
    SetFunction,
    StandardizationKind,
    VariableSet,
    all_triplets,
    inner_product,
    is_supermodular,
    semi_elementary_imset,
    standardize,
    submasks,
    triplet_product,
)


# ---------------------------------------------------------------------------
# self-transformations

def permute(m: SetFunction, mapping: Sequence[int]) -> SetFunction:
    """result(S) = m(pi(S)) where pi sends index i to mapping[i]."""
    n = m.vars.n
    if sorted(mapping) != list(range(n)):
        raise ValueError("mapping is not a permutation of the variable indices")
    def image(s: int) -> int:
        out = 0
        for i in range(n):
            if s >> i & 1:
                out |= 1 << mapping[i]
        return out
    return SetFunction(m.vars, tuple(m.values[image(s)] for s in range(m.vars.size)))


def invert_permutation(mapping: Sequence[int]) -> list[int]:
    inv = [0] * len(mapping)
    for i, j in enumerate(mapping):
        inv[j] = i
    return inv


def reflect(m: SetFunction) -> SetFunction:
    """result(S) = m(N \\ S)."""
    full = m.vars.full_mask
    return SetFunction(m.vars, tuple(m.values[full ^ s] for s in range(m.vars.size)))


def monotonize_max_sub(m: SetFunction) -> SetFunction:
    """Pointwise max over subsets; non-decreasing when m is supermodular."""
    vals = list(m.values)
    for s in range(m.vars.size):
        for i in range(m.vars.n):
            if s >> i & 1 and vals[s ^ 1 << i] > vals[s]:
                vals[s] = vals[s ^ 1 << i]
    return SetFunction(m.vars, tuple(vals))


def monotonize_max_sup(m: SetFunction) -> SetFunction:
    """Pointwise max over supersets; non-increasing when m is supermodular."""
    vals = list(m.values)
    for s in range(m.vars.size - 1, -1, -1):
        for i in range(m.vars.n):
            if not s >> i & 1 and vals[s | 1 << i] > vals[s]:
                vals[s] = vals[s | 1 << i]
    return SetFunction(m.vars, tuple(vals))


def _is_lower_standardized(m: SetFunction) -> bool:
    return m.values[0] == 0 and all(m.values[1 << i] == 0 for i in range(m.vars.n))


def _is_upper_standardized(m: SetFunction) -> bool:
    full = m.vars.full_mask
    return m.values[full] == 0 and all(m.values[full ^ 1 << i] == 0 for i in range(m.vars.n))


def _require_lower_cone(m: SetFunction, what: str) -> None:
    if not (_is_lower_standardized(m) and is_supermodular(m)):
        raise ValueError(f"{what} requires l-standardized supermodular inputs")


Composer = Callable[[Fraction, Fraction], Fraction]


def outer_compose(m: SetFunction, r: SetFunction, g: Composer) -> SetFunction:
    """result(S) = g(m(S), r(S)) for l-standardized supermodular m, r.

    The composer's hypotheses (non-decreasing convex sections and the
    rectangle inequality) are verified on the grid of argument values that
    actually occur; a violation raises, anything beyond the grid is trusted.
    """
    _require_lower_cone(m, "outer composition")
    _require_lower_cone(r, "outer composition")
    if m.vars != r.vars:
        raise ValueError("composed functions must share the variable set")
    xs = sorted(set(m.values))
    ys = sorted(set(r.values))
    table = {(x, y): Fraction(g(x, y)) for x in xs for y in ys}
    _check_composer_grid(table, xs, ys)
    return SetFunction(m.vars, tuple(table[x, y] for x, y in zip(m.values, r.values)))


def _check_composer_grid(table, xs, ys) -> None:
    for y in ys:
        _check_section([table[x, y] for x in xs], xs)
    for x in xs:
        _check_section([table[x, y] for y in ys], ys)
    # rectangle inequality on adjacent cells implies it on the whole grid
    for (x, x2), (y, y2) in itertools.product(zip(xs, xs[1:]), zip(ys, ys[1:])):
        if table[x2, y] + table[x, y2] > table[x2, y2] + table[x, y]:
            raise ValueError(f"composer violates the rectangle inequality near ({x},{y})")


def _check_section(vals: list[Fraction], args: list[Fraction]) -> None:
    for v, w in zip(vals, vals[1:]):
        if w < v:
            raise ValueError("composer section is decreasing on the evaluated grid")
    for i in range(len(vals) - 2):
        lo = (vals[i + 1] - vals[i]) / (args[i + 1] - args[i])
        hi = (vals[i + 2] - vals[i + 1]) / (args[i + 2] - args[i + 1])
        if hi < lo:
            raise ValueError("composer section is non-convex on the evaluated grid")


def pointwise_multiply(m1: SetFunction, m2: SetFunction) -> SetFunction:
    """Componentwise product; stays in the l- (resp. u-) standardized cone."""
    if m1.vars != m2.vars:
        raise ValueError("factors must share the variable set")
    lower = _is_lower_standardized(m1) and _is_lower_standardized(m2)
    upper = _is_upper_standardized(m1) and _is_upper_standardized(m2)
    if not (lower or upper) or not (is_supermodular(m1) and is_supermodular(m2)):
        raise ValueError("pointwise multiplication needs two l- or two u-standardized "
                         "supermodular factors")
    return SetFunction(m1.vars, tuple(x * y for x, y in zip(m1.values, m2.values)))


# ---------------------------------------------------------------------------
# lifting, minors, coarsening

def _translate_mask(mask: int, src: VariableSet, dst: VariableSet) -> int:
    return dst.mask_of(src.labels_of(mask))


def lift(r: SetFunction, target: VariableSet) -> SetFunction:
    """Extension by result(S) = r(S & M)."""
    if not set(r.vars.labels) <= set(target.labels):
        raise ValueError("target must contain every source variable")
    m_mask = target.mask_of(r.vars.labels)
    vals = []
    for s in range(target.size):
        vals.append(r.values[_translate_mask(s & m_mask, target, r.vars)])
    return SetFunction(target, tuple(vals))


def minor(m: SetFunction, d_mask: int, e_mask: int) -> SetFunction:
    """Minor with deleting D and extracting E: r(S) = m(S | E) on M = N\\(D|E)."""
    m.vars.check_mask(d_mask)
    m.vars.check_mask(e_mask)
    if d_mask & e_mask:
        raise ValueError("deleted and extracted sets must be disjoint")
    keep = m.vars.full_mask & ~(d_mask | e_mask)
    sub = VariableSet.of(m.vars.labels_of(keep))
    vals = [m.values[_translate_mask(s, sub, m.vars) | e_mask] for s in range(sub.size)]
    return SetFunction(sub, tuple(vals))


def mean_minor(m: SetFunction, keep_mask: int) -> SetFunction:
    """Average of all minors onto M: 2^(|M|-|N|) * sum_L m(S | L)."""
    m.vars.check_mask(keep_mask)
    rest = m.vars.full_mask & ~keep_mask
    sub = VariableSet.of(m.vars.labels_of(keep_mask))
    scale = Fraction(1, 1 << bin(rest).count("1"))
    vals = []
    for s in range(sub.size):
        base = _translate_mask(s, sub, m.vars)
        vals.append(scale * sum((m.values[base | l] for l in submasks(rest)), Fraction(0)))
    return SetFunction(sub, tuple(vals))


def coarsen(m: SetFunction, target: VariableSet, sigma: Mapping[str, str]) -> SetFunction:
    """Pullback along a surjection of variables: result(T) = m(sigma^-1(T))."""
    if set(sigma) != set(m.vars.labels):
        raise ValueError("sigma must be defined on every source variable")
    if set(sigma.values()) != set(target.labels):
        raise ValueError("sigma must map onto the target variables")
    preimage = [0] * target.n
    for s_label, t_label in sigma.items():
        preimage[target.index(t_label)] |= 1 << m.vars.index(s_label)
    vals = []
    for t in range(target.size):
        src = 0
        for j in range(target.n):
            if t >> j & 1:
                src |= preimage[j]
        vals.append(m.values[src])
    return SetFunction(target, tuple(vals))


def contract(m: SetFunction, group: Sequence[str], to: str) -> SetFunction:
    """Contraction of a set of variables onto one of its members."""
    if to not in group:
        raise ValueError("contraction target must belong to the contracted set")
    sigma = {s: (to if s in group else s) for s in m.vars.labels}
    target = VariableSet.of(set(sigma.values()))
    return coarsen(m, target, sigma)


def max_minor(m: SetFunction, keep_mask: int) -> SetFunction:
    """Pointwise max of all minors onto M."""
    m.vars.check_mask(keep_mask)
    rest = m.vars.full_mask & ~keep_mask
    sub = VariableSet.of(m.vars.labels_of(keep_mask))
    vals = []
    for s in range(sub.size):
        base = _translate_mask(s, sub, m.vars)
        vals.append(max(m.values[base | l] for l in submasks(rest)))
    return SetFunction(sub, tuple(vals))


# ---------------------------------------------------------------------------
# product composition and modular extensions

def product_compose(r: SetFunction, l: SetFunction) -> SetFunction:
    """m(S) = r(S & R) * l(S & L) over the disjoint union of the factors."""
    if set(r.vars.labels) & set(l.vars.labels):
        raise ValueError("factors must live over disjoint variable sets")
    for f in (r, l):
        if not (f.is_nonneg() and f.is_nondecreasing() and is_supermodular(f)):
            raise ValueError("factors must be non-negative non-decreasing supermodular")
    target = VariableSet.of(r.vars.labels + l.vars.labels)
    r_mask = target.mask_of(r.vars.labels)
    l_mask = target.mask_of(l.vars.labels)
    vals = []
    for s in range(target.size):
        vals.append(r.values[_translate_mask(s & r_mask, target, r.vars)]
                    * l.values[_translate_mask(s & l_mask, target, l.vars)])
    return SetFunction(target, tuple(vals))


def _modular_extension(r: SetFunction, target: VariableSet, upper: bool) -> SetFunction:
    if not set(r.vars.labels) < set(target.labels):
        raise ValueError("target must properly contain the source variables")
    kind = StandardizationKind.UPPER if upper else StandardizationKind.LOWER
    mod_part = r - standardize(r, kind)
    m_mask = target.mask_of(r.vars.labels)
    fresh = target.full_mask & ~m_mask
    vals = []
    for s in range(target.size):
        inner = _translate_mask(s & m_mask, target, r.vars)
        if upper:
            copy_here = s & fresh == 0
        else:
            copy_here = s & fresh == fresh
        vals.append(r.values[inner] if copy_here else mod_part.values[inner])
    return SetFunction(target, tuple(vals))


def lower_modular_extension(r: SetFunction, target: VariableSet) -> SetFunction:
    """r on the top block, its lower modular part elsewhere."""
    return _modular_extension(r, target, upper=False)


def upper_modular_extension(r: SetFunction, target: VariableSet) -> SetFunction:
    """r on P(M), its upper modular part elsewhere."""
    return _modular_extension(r, target, upper=True)


# ---------------------------------------------------------------------------
# replications

def _replication2(r: SetFunction, z: str, x: str, y: str, upper: bool) -> SetFunction:
    l_labels = [s for s in r.vars.labels if s != z]
    if z not in r.vars.labels:
        raise ValueError(f"replicated variable {z!r} not in the source set")
    if x == y or x in l_labels or y in l_labels:
        raise ValueError("fresh variables must be distinct and outside L")
    target = VariableSet.of(l_labels + [x, y])
    fresh = target.mask_of([x, y])
    z_bit = 1 << r.vars.index(z)
    vals = []
    for s in range(target.size):
        l_part = _translate_mask(s & ~fresh, target, r.vars)
        if upper:
            take_z = s & fresh != 0
        else:
            take_z = s & fresh == fresh
        vals.append(r.values[l_part | z_bit] if take_z else r.values[l_part])
    return SetFunction(target, tuple(vals))


def _replication(r: SetFunction, z: str, fresh: Sequence[str], upper: bool) -> SetFunction:
    fresh = sorted(fresh)
    if len(fresh) < 2:
        raise ValueError("replication needs at least two fresh variables")
    out = _replication2(r, z, fresh[0], fresh[1], upper)
    for prev, nxt in zip(fresh[1:], fresh[2:]):
        out = _replication2(out, prev, prev, nxt, upper)
    return out


def lower_replication(r: SetFunction, z: str, fresh: Sequence[str]) -> SetFunction:
    """Top block gets the z-slice of r, every other block its L-restriction."""
    return _replication(r, z, fresh, upper=False)


def upper_replication(r: SetFunction, z: str, fresh: Sequence[str]) -> SetFunction:
    """Bottom block gets the L-restriction of r, every other block its z-slice."""
    return _replication(r, z, fresh, upper=True)


# ---------------------------------------------------------------------------
# predicted induced models

def _ci(m: SetFunction, a: int, b: int, c_mask: int) -> bool:
    return triplet_product(m, ElementaryTriplet.of(a, b, c_mask)) == 0


def _ci_general(m: SetFunction, a_mask: int, b_mask: int, c_mask: int) -> bool:
    return inner_product(m, semi_elementary_imset(m.vars, a_mask, b_mask, c_mask)) == 0


def _model(vars: VariableSet, pred) -> IndependencyModel:
    ts = all_triplets(vars)
    return IndependencyModel(len(ts), frozenset(t for t in ts if pred(t)))


def predict_model(kind: str, m: SetFunction, **params) -> IndependencyModel:
    """The independency model of a transformed function, predicted from the
    source function alone without performing the transform."""
    handler = _PREDICTORS.get(kind)
    if handler is None:
        raise ValueError(f"no model formula for transform {kind!r}")
    return handler(m, **params)


def _predict_permute(m: SetFunction, mapping: Sequence[int]) -> IndependencyModel:
    def image(s: int) -> int:
        out = 0
        for i in range(m.vars.n):
            if s >> i & 1:
                out |= 1 << mapping[i]
        return out
    return _model(m.vars, lambda t: _ci(m, mapping[t.a], mapping[t.b], image(t.c_mask)))


def _predict_reflect(m: SetFunction) -> IndependencyModel:
    full = m.vars.full_mask
    return _model(m.vars, lambda t: _ci(m, t.a, t.b, full & ~(t.ab_mask | t.c_mask)))


def _predict_lift(r: SetFunction, target: VariableSet) -> IndependencyModel:
    m_labels = set(r.vars.labels)
    m_mask = target.mask_of(r.vars.labels)
    def pred(t: ElementaryTriplet) -> bool:
        if target.labels[t.a] not in m_labels or target.labels[t.b] not in m_labels:
            return True
        return _ci(r,
                   r.vars.index(target.labels[t.a]),
                   r.vars.index(target.labels[t.b]),
                   _translate_mask(t.c_mask & m_mask, target, r.vars))
    return _model(target, pred)


def _predict_minor(m: SetFunction, d_mask: int, e_mask: int) -> IndependencyModel:
    sub = VariableSet.of(m.vars.labels_of(m.vars.full_mask & ~(d_mask | e_mask)))
    def pred(t: ElementaryTriplet) -> bool:
        return _ci(m,
                   m.vars.index(sub.labels[t.a]),
                   m.vars.index(sub.labels[t.b]),
                   _translate_mask(t.c_mask, sub, m.vars) | e_mask)
    return _model(sub, pred)


def _predict_mean_minor(m: SetFunction, keep_mask: int) -> IndependencyModel:
    sub = VariableSet.of(m.vars.labels_of(keep_mask))
    rest = m.vars.full_mask & ~keep_mask
    def pred(t: ElementaryTriplet) -> bool:
        a = m.vars.index(sub.labels[t.a])
        b = m.vars.index(sub.labels[t.b])
        c = _translate_mask(t.c_mask, sub, m.vars)
        return all(_ci(m, a, b, c | l) for l in submasks(rest))
    return _model(sub, pred)


def _predict_coarsen(m: SetFunction, target: VariableSet, sigma: Mapping[str, str]) -> IndependencyModel:
    preimage = [0] * target.n
    for s_label, t_label in sigma.items():
        preimage[target.index(t_label)] |= 1 << m.vars.index(s_label)
    def expand(mask: int) -> int:
        out = 0
        for j in range(target.n):
            if mask >> j & 1:
                out |= preimage[j]
        return out
    return _model(target, lambda t: _ci_general(
        m, preimage[t.a], preimage[t.b], expand(t.c_mask)))


def _single_fresh(r: SetFunction, target: VariableSet) -> tuple[str, int]:
    extra = set(target.labels) - set(r.vars.labels)
    if len(extra) != 1:
        raise ValueError("the model formula covers a single-variable extension step")
    x = extra.pop()
    return x, 1 << target.index(x)


def _predict_lowmod(r: SetFunction, target: VariableSet) -> IndependencyModel:
    x, x_bit = _single_fresh(r, target)
    r_l = standardize(r, StandardizationKind.LOWER)
    def pred(t: ElementaryTriplet) -> bool:
        involved = t.ab_mask | t.c_mask
        if not involved & x_bit:
            return True
        if x_bit & t.ab_mask:
            big = _translate_mask(involved & ~x_bit, target, r.vars)
            return r_l.values[big] == r_l.values[_translate_mask(t.c_mask, target, r.vars)]
        return _ci(r,
                   r.vars.index(target.labels[t.a]),
                   r.vars.index(target.labels[t.b]),
                   _translate_mask(t.c_mask & ~x_bit, target, r.vars))
    return _model(target, pred)


def _predict_uppmod(r: SetFunction, target: VariableSet) -> IndependencyModel:
    x, x_bit = _single_fresh(r, target)
    r_u = standardize(r, StandardizationKind.UPPER)
    def pred(t: ElementaryTriplet) -> bool:
        if t.c_mask & x_bit:
            return True
        if x_bit & t.ab_mask:
            big = _translate_mask((t.ab_mask | t.c_mask) & ~x_bit, target, r.vars)
            return r_u.values[big] == r_u.values[_translate_mask(t.c_mask, target, r.vars)]
        return _ci(r,
                   r.vars.index(target.labels[t.a]),
                   r.vars.index(target.labels[t.b]),
                   _translate_mask(t.c_mask, target, r.vars))
    return _model(target, pred)


def _replication_frame(r: SetFunction, z: str, fresh: Sequence[str]):
    if len(fresh) != 2:
        raise ValueError("the model formula covers the two-fresh-variable step")
    x, y = sorted(fresh)
    l_labels = [s for s in r.vars.labels if s != z]
    target = VariableSet.of(l_labels + [x, y])
    fresh_mask = target.mask_of([x, y])
    z_bit = 1 << r.vars.index(z)
    return target, fresh_mask, z_bit


def _predict_lowrepl(r: SetFunction, z: str, fresh: Sequence[str]) -> IndependencyModel:
    target, fresh_mask, z_bit = _replication_frame(r, z, fresh)
    def to_m(mask: int) -> int:
        return _translate_mask(mask & ~fresh_mask, target, r.vars)
    def pred(t: ElementaryTriplet) -> bool:
        a_bit, b_bit = 1 << t.a, 1 << t.b
        involved = t.ab_mask | t.c_mask
        if fresh_mask & ~involved:
            return _ci_general(r, to_m(a_bit), to_m(b_bit), to_m(t.c_mask))
        if fresh_mask & t.c_mask == fresh_mask:
            return _ci(r,
                       r.vars.index(target.labels[t.a]),
                       r.vars.index(target.labels[t.b]),
                       z_bit | to_m(t.c_mask))
        if t.ab_mask == fresh_mask:
            c = to_m(t.c_mask)
            return r.values[z_bit | c] == r.values[c]
        # exactly one fresh variable in C, the other is one of a, b
        s_bit = to_m(t.ab_mask)
        return _ci_general(r, z_bit, s_bit, to_m(t.c_mask))
    return _model(target, pred)


def _predict_upprepl(r: SetFunction, z: str, fresh: Sequence[str]) -> IndependencyModel:
    target, fresh_mask, z_bit = _replication_frame(r, z, fresh)
    def to_m(mask: int) -> int:
        return _translate_mask(mask & ~fresh_mask, target, r.vars)
    def pred(t: ElementaryTriplet) -> bool:
        involved = t.ab_mask | t.c_mask
        if fresh_mask & t.c_mask:
            return _ci_general(r, to_m(1 << t.a), to_m(1 << t.b), z_bit | to_m(t.c_mask))
        if not involved & fresh_mask:
            return _ci(r,
                       r.vars.index(target.labels[t.a]),
                       r.vars.index(target.labels[t.b]),
                       to_m(t.c_mask))
        if t.ab_mask == fresh_mask:
            c = to_m(t.c_mask)
            return r.values[z_bit | c] == r.values[c]
        return _ci_general(r, z_bit, to_m(t.ab_mask), to_m(t.c_mask))
    return _model(target, pred)


_PREDICTORS = {
    "permute": _predict_permute,
    "reflect": _predict_reflect,
    "lift": _predict_lift,
    "minor": _predict_minor,
    "mean_minor": _predict_mean_minor,
    "coarsen": _predict_coarsen,
    "lowmod": _predict_lowmod,
    "uppmod": _predict_uppmod,
    "lowrepl": _predict_lowrepl,
    "upprepl": _predict_upprepl,
}
