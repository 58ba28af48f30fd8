"""Extreme-ray enumeration for the l-standardized supermodular cone.

The cone is embedded in the coordinates of subsets with at least two
elements (l-standardized functions vanish elsewhere), where it is pointed
and full-dimensional enough for the double description method: start from
a simplicial cone cut out by d independent facet inequalities and insert
the remaining ones incrementally with a combinatorial adjacency test.

An independent brute-force oracle recovers the same rays from scratch by
scanning all (d-1)-subsets of facet normals and keeping the one-sided
kernel rays; the n=4 scan (about 2 million subsets) runs in a numba
kernel whose intermediate values are Hadamard-bounded well inside int64.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from numba import njit

from . import rational_linalg as rl
from .core import (
    SetFunction,
    VariableSet,
    all_triplets,
    elementary_imset,
)
from .transforms import permute


@dataclass(frozen=True)
class Orbit:
    """A permutation orbit of generators, by index into the catalogue."""

    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class RayCatalogue:
    """Minimal integral generators of the extreme rays, sorted by value vector."""

    n: int
    vars: VariableSet
    generators: tuple[SetFunction, ...]
    orbits: Optional[tuple[Orbit, ...]] = None


def default_vars(n: int) -> VariableSet:
    return VariableSet.of(string.ascii_lowercase[:n])


def _coords(n: int) -> list[int]:
    return [s for s in range(1 << n) if bin(s).count("1") >= 2]


def facet_rows(vars: VariableSet) -> list[list[int]]:
    """Facet normals restricted to the embedding coordinates, canonical order."""
    coords = _coords(vars.n)
    rows = []
    for t in all_triplets(vars):
        u = elementary_imset(vars, t)
        rows.append([int(u.values[s]) for s in coords])
    return rows


def _ray_function(vec: Sequence[int], vars: VariableSet) -> SetFunction:
    coords = _coords(vars.n)
    vals = [Fraction(0)] * vars.size
    for s, v in zip(coords, vec):
        vals[s] = Fraction(v)
    return SetFunction(vars, tuple(vals))


def _dot(row: Sequence[int], vec: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(row, vec))


def _initial_basis(rows: list[list[int]], d: int) -> list[int]:
    chosen: list[int] = []
    for i in range(len(rows)):
        if rl.rank_int([rows[j] for j in chosen] + [rows[i]]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                return chosen
    raise RuntimeError("facet normals do not span the embedding space")


def _invert(rows: list[list[int]]) -> list[list[Fraction]]:
    d = len(rows)
    cols = []
    for j in range(d):
        rhs = [Fraction(i == j) for i in range(d)]
        col = rl.solve_square([[Fraction(x) for x in r] for r in rows], rhs)
        if col is None:
            raise RuntimeError("initial facet basis is singular")
        cols.append(col)
    return cols


def _double_description(rows: list[list[int]], d: int) -> list[tuple[int, ...]]:
    chosen = _initial_basis(rows, d)
    rays = [tuple(rl.primitive(col)) for col in _invert([rows[i] for i in chosen])]
    processed = list(chosen)

    def zero_set(vec: tuple[int, ...]) -> frozenset[int]:
        return frozenset(i for i in processed if _dot(rows[i], vec) == 0)

    zeros = {r: zero_set(r) for r in rays}
    for j in range(len(rows)):
        if j in chosen:
            continue
        row = rows[j]
        dots = {r: _dot(row, r) for r in rays}
        plus = [r for r in rays if dots[r] > 0]
        zero = [r for r in rays if dots[r] == 0]
        minus = [r for r in rays if dots[r] < 0]
        processed.append(j)
        new = []
        for p, m in itertools.product(plus, minus):
            common = zeros[p] & zeros[m]
            if len(common) < d - 2:
                continue
            if any(r is not p and r is not m and common <= zeros[r] for r in rays):
                continue
            vec = tuple(rl.primitive(
                [dots[p] * vm - dots[m] * vp for vp, vm in zip(p, m)]))
            new.append(vec)
        rays = plus + zero + new
        zeros = {r: zero_set(r) for r in rays}
    return rays


def enumerate_extreme_rays(n: int, allow_large: bool = False) -> RayCatalogue:
    """Complete sorted list of minimal integral extreme-ray generators.

    n=5 already has a six-digit ray count and is only reachable with
    allow_large; it is exact but very slow.
    """
    if not (2 <= n <= 4 or (n == 5 and allow_large)):
        raise ValueError("enumeration supports n in {2,3,4}; n=5 needs allow_large")
    vars = default_vars(n)
    d = (1 << n) - n - 1
    rays = _double_description(facet_rows(vars), d)
    gens = sorted((_ray_function(r, vars) for r in rays), key=lambda m: m.values)
    return RayCatalogue(n, vars, tuple(gens))


# ---------------------------------------------------------------------------
# brute-force oracle

def _bruteforce_python(rows: list[list[int]], d: int) -> set[tuple[int, ...]]:
    found = set()
    for combo in itertools.combinations(range(len(rows)), d - 1):
        vec = rl.kernel_ray_int([rows[i] for i in combo], d)
        if vec is None:
            continue
        dots = [_dot(row, vec) for row in rows]
        if all(x >= 0 for x in dots):
            found.add(tuple(vec))
        elif all(x <= 0 for x in dots):
            found.add(tuple(-x for x in vec))
    return found


@njit(cache=True)
def _bruteforce_scan(rows, k, out):  # pragma: no cover - exercised via wrapper
    f, d = rows.shape
    cnt = 0
    idx = np.arange(k)
    a = np.zeros((k, d), np.int64)
    piv_cols = np.zeros(k, np.int64)
    vec = np.zeros(d, np.int64)
    big = np.int64(1) << 40
    while True:
        for i in range(k):
            for j in range(d):
                a[i, j] = rows[idx[i], j]
        # forward Bareiss elimination; divisions by the previous pivot are exact
        r = 0
        prev = np.int64(1)
        for col in range(d):
            p = -1
            for i in range(r, k):
                if a[i, col] != 0:
                    p = i
                    break
            if p == -1:
                continue
            if p != r:
                for j in range(d):
                    t = a[r, j]
                    a[r, j] = a[p, j]
                    a[p, j] = t
            pv = a[r, col]
            for i in range(r + 1, k):
                fi = a[i, col]
                for j in range(d):
                    a[i, j] = (pv * a[i, j] - fi * a[r, j]) // prev
            piv_cols[r] = col
            prev = pv
            r += 1
            if r == k:
                break
        if r == k:
            free = -1
            for j in range(d):
                used = False
                for i in range(k):
                    if piv_cols[i] == j:
                        used = True
                        break
                if not used:
                    free = j
                    break
            # back substitution over the integers: rescale the partial kernel
            # so each pivot division is exact, reduce by the gcd as we go
            for j in range(d):
                vec[j] = 0
            vec[free] = 1
            ok = True
            for i in range(k - 1, -1, -1):
                s = np.int64(0)
                for j in range(d):
                    s += a[i, j] * vec[j]
                if s != 0:
                    pv = a[i, piv_cols[i]]
                    g = s if s >= 0 else -s
                    x = pv if pv >= 0 else -pv
                    while x:
                        g, x = x, g % x
                    mult = pv // g
                    for j in range(d):
                        vec[j] *= mult
                    vec[piv_cols[i]] = -(s // g)
                g = np.int64(0)
                for j in range(d):
                    x = vec[j] if vec[j] >= 0 else -vec[j]
                    while x:
                        g, x = x, g % x
                    if vec[j] > big or vec[j] < -big:
                        ok = False
                for j in range(d):
                    vec[j] //= g
            if not ok:
                return -2
            nonneg = True
            nonpos = True
            for i in range(f):
                s = np.int64(0)
                for j in range(d):
                    s += rows[i, j] * vec[j]
                if s > 0:
                    nonpos = False
                elif s < 0:
                    nonneg = False
            if nonneg or nonpos:
                if nonpos:
                    for j in range(d):
                        vec[j] = -vec[j]
                g = np.int64(0)
                for j in range(d):
                    x = vec[j] if vec[j] >= 0 else -vec[j]
                    while x:
                        g, x = x, g % x
                for j in range(d):
                    vec[j] //= g
                known = False
                for i in range(cnt):
                    same = True
                    for j in range(d):
                        if out[i, j] != vec[j]:
                            same = False
                            break
                    if same:
                        known = True
                        break
                if not known:
                    if cnt == out.shape[0]:
                        return -1
                    for j in range(d):
                        out[cnt, j] = vec[j]
                    cnt += 1
        i = k - 1
        while i >= 0 and idx[i] == f - k + i:
            i -= 1
        if i < 0:
            return cnt
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


def bruteforce_extreme_rays(n: int) -> RayCatalogue:
    """Independent oracle: rank-subset scan over all facet-normal subsets."""
    if not 2 <= n <= 4:
        raise ValueError("the brute-force oracle supports n in {2,3,4}")
    vars = default_vars(n)
    d = (1 << n) - n - 1
    rows = facet_rows(vars)
    if n <= 3:
        found = _bruteforce_python(rows, d)
    else:
        out = np.zeros((4096, d), np.int64)
        cnt = _bruteforce_scan(np.array(rows, np.int64), d - 1, out)
        if cnt == -1:
            raise RuntimeError("oracle output capacity exceeded")
        if cnt == -2:
            # int64 guard tripped; fall back to exact bignum arithmetic
            found = _bruteforce_python(rows, d)
        else:
            found = {tuple(int(x) for x in out[i]) for i in range(cnt)}
    gens = sorted((_ray_function(v, vars) for v in found), key=lambda m: m.values)
    return RayCatalogue(n, vars, tuple(gens))


# ---------------------------------------------------------------------------
# orbits and verification

def classify_orbits(catalogue: RayCatalogue) -> RayCatalogue:
    """Group generators under all variable permutations; the representative
    is the member with the lexicographically smallest value vector."""
    index = {g.values: i for i, g in enumerate(catalogue.generators)}
    seen: set[int] = set()
    orbits = []
    for i, g in enumerate(catalogue.generators):
        if i in seen:
            continue
        members = set()
        for mapping in itertools.permutations(range(catalogue.n)):
            image = permute(g, mapping)
            j = index.get(image.values)
            if j is None:
                raise ValueError("catalogue is not closed under permutation")
            members.add(j)
        seen |= members
        ordered = tuple(sorted(members))
        rep = min(ordered, key=lambda j: catalogue.generators[j].values)
        orbits.append(Orbit(rep, ordered))
    orbits.sort(key=lambda o: catalogue.generators[o.representative].values)
    return replace(catalogue, orbits=tuple(orbits))


@dataclass(frozen=True)
class CatalogueReport:
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_catalogue(catalogue: RayCatalogue) -> CatalogueReport:
    """Re-check every generator and the closure claims of the catalogue."""
    from .analysis import integral_representative, is_extreme
    from .core import is_supermodular_bruteforce
    from .transforms import (
        lift,
        lower_modular_extension,
        lower_replication,
        reflect,
        upper_modular_extension,
        upper_replication,
    )

    fails = []
    vars = catalogue.vars
    gens = catalogue.generators

    def describe(g: SetFunction) -> str:
        return str(tuple(str(v) for v in g.values))

    for g in gens:
        if not is_extreme(g).extreme:
            fails.append(f"generator not extreme: {describe(g)}")
        if not is_supermodular_bruteforce(g):
            fails.append(f"generator fails the definition test: {describe(g)}")
        if not g.values[vars.full_mask] > 0:
            fails.append(f"generator has m(N) <= 0: {describe(g)}")
        if integral_representative(g) != g:
            fails.append(f"generator not in minimal integral form: {describe(g)}")
    rayset = {g.values for g in gens}
    for g in gens:
        if integral_representative(reflect(g)).values not in rayset:
            fails.append(f"reflection leaves the catalogue: {describe(g)}")
    bigger = default_vars(catalogue.n + 1)
    fresh = bigger.labels[-1]
    for g in gens:
        checks = {
            "lift": lift(g, bigger),
            "lowmod": lower_modular_extension(g, bigger),
            "uppmod": upper_modular_extension(g, bigger),
            "lowrepl": lower_replication(g, vars.labels[-1], (vars.labels[-1], fresh)),
        }
        from .core import StandardizationKind, standardize
        g_u = standardize(g, StandardizationKind.UPPER)
        checks["upprepl"] = upper_replication(g_u, vars.labels[-1], (vars.labels[-1], fresh))
        for name, image in checks.items():
            if not is_extreme(image).extreme:
                fails.append(f"{name} image not extreme for {describe(g)}")
    return CatalogueReport(tuple(fails))
