"""Property-check suites: preservation of supermodularity and extremality
under every transformation, induced-model prediction coherence, oracle
agreement, equivalence theory, and standardization laws.

Each suite returns a list of CheckResult records so the CLI and the test
suite share one implementation.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .analysis import (
    face_of,
    independency_model,
    is_extreme,
    quantitatively_equivalent,
    qualitatively_equivalent,
)
from .core import (
    SetFunction,
    StandardizationKind,
    VariableSet,
    inner_product,
    is_supermodular,
    is_supermodular_bruteforce,
    modular_combination,
    standardize,
    superset_indicator,
    support,
)
from .rays import (
    RayCatalogue,
    bruteforce_extreme_rays,
    classify_orbits,
    default_vars,
    enumerate_extreme_rays,
)
from . import transforms as tr

EXPECTED_RAY_COUNTS = {2: 1, 3: 5, 4: 37}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class _Suite:
    def __init__(self):
        self.results: list[CheckResult] = []

    def check(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, bool(passed), "" if passed else detail))

    def equal(self, name: str, got, want) -> None:
        self.check(name, got == want, f"got {got!r}, want {want!r}")


@functools.lru_cache(maxsize=None)
def catalogue(n: int) -> RayCatalogue:
    return classify_orbits(enumerate_extreme_rays(n))


def combo(vars: VariableSet, terms: dict[str, object]) -> SetFunction:
    """Build a set function from {subset-key: coefficient} with comma keys."""
    entries = {}
    for key, v in terms.items():
        entries[vars.mask_of(key.split(",") if key else [])] = Fraction(v)
    return SetFunction.from_map(vars, entries)


def random_integer_function(vars: VariableSet, rng: random.Random,
                            lo: int = -4, hi: int = 4) -> SetFunction:
    return SetFunction.from_values(vars, [rng.randint(lo, hi) for _ in range(vars.size)])


def random_modular(vars: VariableSet, rng: random.Random) -> SetFunction:
    return modular_combination(vars, rng.randint(-3, 3),
                               [rng.randint(-3, 3) for _ in range(vars.n)])


def random_supermodular(vars: VariableSet, rng: random.Random,
                        modular_noise: bool = True) -> SetFunction:
    """Random conic combination of extreme-ray generators, optionally with a
    modular shift; supermodular by construction."""
    gens = catalogue(vars.n).generators
    out = SetFunction.zero(vars)
    for g in rng.sample(gens, min(4, len(gens))):
        c = rng.randint(0, 3)
        if c:
            out = out + g.scale(c)
    if modular_noise:
        out = out + random_modular(vars, rng)
    return out


def _extend(vars: VariableSet) -> VariableSet:
    return default_vars(vars.n + 1)


# ---------------------------------------------------------------------------
# worked counterexample material shared by several checks

def _vars(n: int) -> VariableSet:
    return default_vars(n)


def _m0() -> SetFunction:
    return combo(_vars(3), {"a,b,c": 2, "a,b": 1, "a,c": 1, "b,c": 1})


def _m_star() -> SetFunction:
    return combo(_vars(4), {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1})


def _r_star() -> SetFunction:
    return combo(_vars(4), {"a,b,c,d": 3, "a,b,c": 2, "a,b,d": 2, "a,c,d": 2,
                            "b,c,d": 1, "a,b": 1, "a,c": 1, "a,d": 1})


# ---------------------------------------------------------------------------
# preservation suites P1-P6

def suite_preservation(n: int = 3, seed: int = 7) -> list[CheckResult]:
    if n != 3:
        raise ValueError("the preservation suite is defined over the n=3 catalogue")
    s = _Suite()
    rng = random.Random(seed)
    gens = catalogue(3).generators
    v3, v4 = _vars(3), _vars(4)
    nonext = gens[0] + gens[1]
    nonsup = combo(v3, {"a,b,c": -1})
    rand4 = [random_supermodular(v4, rng, modular_noise=False) for _ in range(10)]

    # P1: permutation and reflection keep both verdicts
    for i, m in enumerate(list(gens) + [nonext] + rand4[:3]):
        verdict = is_extreme(m).extreme
        for mapping in itertools.permutations(range(m.vars.n)):
            p = tr.permute(m, mapping)
            s.check(f"P1 permute keeps verdicts #{i}",
                    is_supermodular(p) and is_extreme(p).extreme == verdict)
        r = tr.reflect(m)
        s.check(f"P1 reflect keeps verdicts #{i}",
                is_supermodular(r) and is_extreme(r).extreme == verdict)
        s.equal(f"P1 reflect involution #{i}", tr.reflect(r), m)

    # P2: lifting preserves both verdicts in both directions
    for i, m in enumerate(list(gens) + [nonext]):
        lifted = tr.lift(m, v4)
        s.equal(f"P2 lift extremality equivalence #{i}",
                is_extreme(lifted).extreme, is_extreme(m).extreme)
        s.equal(f"P2 lift supermodularity equivalence #{i}",
                is_supermodular(lifted), is_supermodular(m))
        s.equal(f"P2 minor undoes lift #{i}",
                tr.minor(lifted, v4.mask_of("d"), 0), m)
    s.check("P2 lift of non-supermodular input",
            not is_supermodular(tr.lift(nonsup, v4)))

    # P3: projections preserve supermodularity; extremality counterexamples
    for i, m in enumerate(list(gens) + rand4[:3]):
        vars = m.vars
        for lbl in vars.labels:
            bit = 1 << vars.index(lbl)
            s.check(f"P3 deletion supermodular #{i}{lbl}",
                    is_supermodular(tr.minor(m, bit, 0)))
            s.check(f"P3 extraction supermodular #{i}{lbl}",
                    is_supermodular(tr.minor(m, 0, bit)))
            s.check(f"P3 max_minor supermodular #{i}{lbl}",
                    is_supermodular(tr.max_minor(m, vars.full_mask & ~bit)))
            s.check(f"P3 mean_minor supermodular #{i}{lbl}",
                    is_supermodular(tr.mean_minor(m, vars.full_mask & ~bit)))
        s.check(f"P3 contraction supermodular #{i}",
                is_supermodular(tr.contract(m, vars.labels[:2], vars.labels[0])))
        s.check(f"P3 monotonize_max_sub #{i}",
                is_supermodular(tr.monotonize_max_sub(m))
                and tr.monotonize_max_sub(m).is_nondecreasing())
        s.check(f"P3 monotonize_max_sup #{i}",
                is_supermodular(tr.monotonize_max_sup(m))
                and tr.monotonize_max_sup(m).is_nonincreasing())
        s.equal(f"P3 monotonization duality #{i}",
                tr.monotonize_max_sub(tr.reflect(m)),
                tr.reflect(tr.monotonize_max_sup(m)))
    m_star, r_star = _m_star(), _r_star()
    d_bit = v4.mask_of("d")
    tripod = combo(v3, {"a,b,c": 2, "a,b": 1, "a,c": 1})
    s.equal("P3 extraction counterexample value", tr.minor(m_star, 0, d_bit), tripod)
    s.equal("P3 deletion counterexample value", tr.minor(r_star, d_bit, 0), tripod)
    s.check("P3 extraction counterexample not extreme", not is_extreme(tripod).extreme)
    s.equal("P3 contraction counterexample value",
            tr.contract(m_star, ("c", "d"), "c"), combo(v3, {"a,b,c": 2, "a,c": 1}))
    s.check("P3 contraction counterexample not extreme",
            not is_extreme(tr.contract(m_star, ("c", "d"), "c")).extreme)
    s.equal("P3 max_minor counterexample value",
            tr.max_minor(m_star, v4.mask_of("abc")), tripod)
    s.equal("P3 mean_minor counterexample value",
            tr.mean_minor(m_star, v4.mask_of("abc")),
            combo(v3, {"a,b,c": Fraction(3, 2), "a,b": Fraction(1, 2),
                       "a,c": Fraction(1, 2)}))
    m0 = _m0()
    m2 = m0 - superset_indicator(v3, v3.mask_of("c"))
    s.check("P3 max_minor breaks quantitative equivalence",
            quantitatively_equivalent(m0, m2)
            and not quantitatively_equivalent(tr.max_minor(m0, v3.mask_of("ab")),
                                              tr.max_minor(m2, v3.mask_of("ab"))))
    shift = random_modular(v3, rng)
    for name, op in [("deletion", lambda f: tr.minor(f, v3.mask_of("c"), 0)),
                     ("extraction", lambda f: tr.minor(f, 0, v3.mask_of("c"))),
                     ("mean_minor", lambda f: tr.mean_minor(f, v3.mask_of("ab"))),
                     ("contraction", lambda f: tr.contract(f, ("b", "c"), "b")),
                     ("lift", lambda f: tr.lift(f, v4)),
                     ("lowmod", lambda f: tr.lower_modular_extension(f, v4)),
                     ("uppmod", lambda f: tr.upper_modular_extension(f, v4))]:
        s.check(f"P3 {name} respects quantitative equivalence",
                quantitatively_equivalent(op(m0 + shift), op(m0)))

    # standardization interplay with the projections
    for i, m in enumerate(rand4[:5]):
        m_l = standardize(m, StandardizationKind.LOWER)
        m_u = standardize(m, StandardizationKind.UPPER)
        m_o = standardize(m, StandardizationKind.ORTHOGONAL)
        deleted = tr.minor(m_l, d_bit, 0)
        s.equal(f"P3 deletion keeps l-standardization #{i}",
                standardize(deleted, StandardizationKind.LOWER), deleted)
        extracted = tr.minor(m_u, 0, d_bit)
        s.equal(f"P3 extraction keeps u-standardization #{i}",
                standardize(extracted, StandardizationKind.UPPER), extracted)
        mean = tr.mean_minor(m_o, v4.mask_of("abc"))
        s.equal(f"P3 mean_minor keeps o-standardization #{i}",
                standardize(mean, StandardizationKind.ORTHOGONAL), mean)

    # P4: modular extensions preserve both verdicts in both directions
    for i, m in enumerate(list(gens) + [nonext]):
        for name, op in [("lowmod", tr.lower_modular_extension),
                         ("uppmod", tr.upper_modular_extension)]:
            ext = op(m, v4)
            s.equal(f"P4 {name} extremality equivalence #{i}",
                    is_extreme(ext).extreme, is_extreme(m).extreme)
            s.check(f"P4 {name} supermodular #{i}", is_supermodular(ext))
        s.equal(f"P4 extraction undoes lowmod #{i}",
                tr.minor(tr.lower_modular_extension(m, v4), 0, d_bit), m)
        s.equal(f"P4 deletion undoes uppmod #{i}",
                tr.minor(tr.upper_modular_extension(m, v4), d_bit, 0), m)
    s.check("P4 lowmod of non-supermodular input",
            not is_supermodular(tr.lower_modular_extension(nonsup, v4)))
    s.check("P4 uppmod of non-supermodular input",
            not is_supermodular(tr.upper_modular_extension(nonsup, v4)))
    v5 = _vars(5)
    for i in range(20):
        r = random_integer_function(v4, rng)
        s.equal(f"P4 extension duality #{i}",
                tr.reflect(tr.upper_modular_extension(r, v5)),
                tr.lower_modular_extension(tr.reflect(r), v5))

    # P5: replications of standardized functions, both directions
    for i, m in enumerate(list(gens) + [nonext]):
        verdict = is_extreme(m).extreme
        m_u = standardize(m, StandardizationKind.UPPER)
        for z in m.vars.labels:
            low = tr.lower_replication(m, z, (z, "d"))
            s.equal(f"P5 lowrepl extremality equivalence #{i}{z}",
                    is_extreme(low).extreme, verdict)
            upp = tr.upper_replication(m_u, z, (z, "d"))
            s.equal(f"P5 upprepl extremality equivalence #{i}{z}",
                    is_extreme(upp).extreme, verdict)
    for i, g in enumerate(gens):
        shifted = g + superset_indicator(v3, v3.mask_of("c"))
        low = tr.lower_replication(shifted, "c", ("c", "d"))
        s.check(f"P5 lowrepl with r(z)>r(0) not extreme #{i}",
                is_extreme(shifted).extreme and is_supermodular(low)
                and not is_extreme(low).extreme)
        g_u = standardize(g, StandardizationKind.UPPER)
        bumped = g_u - superset_indicator(v3, v3.mask_of("c"))
        upp = tr.upper_replication(bumped, "c", ("c", "d"))
        s.check(f"P5 upprepl with r(L)>r(M) not extreme #{i}",
                is_extreme(bumped).extreme and is_supermodular(upp)
                and not is_extreme(upp).extreme)
    lin = modular_combination(v3, 1, (1, 2, 3))
    low = tr.lower_replication(lin, "c", ("c", "d"))
    s.check("P5 lowrepl of modular input",
            quantitatively_equivalent(
                low, superset_indicator(v4, v4.mask_of("cd")).scale(3)))
    for i in range(20):
        r = random_integer_function(v3, rng)
        s.equal(f"P5 replication duality #{i}",
                tr.reflect(tr.upper_replication(r, "c", ("c", "d"))),
                tr.lower_replication(tr.reflect(r), "c", ("c", "d")))
    triple = tr.lower_replication(gens[-1], "c", ("c", "d", "e"))
    s.check("P5 iterated lowrepl stays extreme", is_extreme(triple).extreme)

    # P6: product composition and pointwise multiplication
    pair = combo(VariableSet.of("de"), {"d,e": 1})
    for i, g in enumerate(gens):
        prod = tr.product_compose(g, pair)
        s.check(f"P6 product of extreme factors extreme #{i}",
                is_extreme(prod).extreme)
    s.check("P6 product with non-extreme factor not extreme",
            not is_extreme(tr.product_compose(nonext, pair)).extreme)
    ones = superset_indicator(VariableSet.of("de"), 0)
    s.equal("P6 product with constant one is lifting",
            tr.product_compose(gens[0], ones), tr.lift(gens[0], _vars(5)))
    m0_hat = combo(v3, {"a,b,c": 4, "a,b": 1, "a,c": 1, "b,c": 1})
    s.equal("P6 self-multiplication value", tr.pointwise_multiply(m0, m0), m0_hat)
    s.check("P6 self-multiplication breaks extremality",
            is_extreme(m0).extreme and not is_extreme(m0_hat).extreme)
    s.equal("P6 outer composition with product", tr.outer_compose(m0, m0,
            lambda x, y: x * y), m0_hat)
    s.equal("P6 outer composition with square", tr.outer_compose(m0, m0,
            lambda x, y: x * x), m0_hat)
    try:
        tr.outer_compose(m0, m0, lambda x, y: x - y)
        s.check("P6 composer violation detected", False, "no error raised")
    except ValueError:
        s.check("P6 composer violation detected", True)
    s.equal("P6 delta times m0", tr.pointwise_multiply(
        combo(v3, {"a,b,c": 1}), m0), combo(v3, {"a,b,c": 2}))
    return s.results


# ---------------------------------------------------------------------------
# model-prediction coherence

def _model_cases(m: SetFunction, exhaustive: bool):
    vars = m.vars
    bigger = _extend(vars)
    first = vars.labels[0]
    second = vars.labels[1]
    last = vars.labels[-1]
    fresh = bigger.labels[-1]
    if exhaustive:
        mappings = list(itertools.permutations(range(vars.n)))
    else:
        mappings = [tuple(range(1, vars.n)) + (0,)]
    for mapping in mappings:
        yield "permute", {"mapping": mapping}, tr.permute(m, mapping)
    yield "reflect", {}, tr.reflect(m)
    yield "lift", {"target": bigger}, tr.lift(m, bigger)
    minor_cases = [(vars.mask_of(first), 0), (0, vars.mask_of(first))]
    if vars.n >= 4:
        minor_cases.append((vars.mask_of(first), vars.mask_of(second)))
    for d_mask, e_mask in minor_cases:
        yield ("minor", {"d_mask": d_mask, "e_mask": e_mask},
               tr.minor(m, d_mask, e_mask))
    for keep in [vars.full_mask & ~vars.mask_of(last),
                 vars.mask_of([first, second])]:
        yield "mean_minor", {"keep_mask": keep}, tr.mean_minor(m, keep)
    sigma = {s: (vars.labels[-2] if s == last else s) for s in vars.labels}
    target = VariableSet.of(set(sigma.values()))
    yield ("coarsen", {"target": target, "sigma": sigma},
           tr.coarsen(m, target, sigma))
    yield ("lowmod", {"target": bigger}, tr.lower_modular_extension(m, bigger))
    yield ("uppmod", {"target": bigger}, tr.upper_modular_extension(m, bigger))
    # replications need r(z) >= r(0) resp. r(L) >= r(M); shift into range
    z = last
    z_ind = superset_indicator(vars, vars.mask_of(z))
    gap = m.values[0] - m.values[vars.mask_of(z)]
    low_src = m + z_ind.scale(gap) if gap > 0 else m
    yield ("lowrepl", {"z": z, "fresh": (z, fresh)},
           tr.lower_replication(low_src, z, (z, fresh)), low_src)
    l_mask = vars.full_mask & ~vars.mask_of(z)
    gap = m.values[vars.full_mask] - m.values[l_mask]
    upp_src = m - z_ind.scale(gap) if gap > 0 else m
    yield ("upprepl", {"z": z, "fresh": (z, fresh)},
           tr.upper_replication(upp_src, z, (z, fresh)), upp_src)


def suite_models(n: int = 3, samples: int = 0, seed: int = 11) -> list[CheckResult]:
    s = _Suite()
    rng = random.Random(seed)
    sources = [(f"gen{i}", g, True) for i, g in enumerate(catalogue(n).generators)]
    v4 = _vars(4)
    for i in range(samples):
        sources.append((f"rand{i}", random_supermodular(v4, rng), False))
    for label, m, exhaustive in sources:
        for case in _model_cases(m, exhaustive):
            kind, params, image = case[0], case[1], case[2]
            src = case[3] if len(case) > 3 else m
            predicted = tr.predict_model(kind, src, **params)
            actual = independency_model(image)
            s.check(f"model {kind} {label} {params.get('mapping', '')}",
                    predicted == actual,
                    f"prediction mismatch for {kind} on {label}")
    return s.results


# ---------------------------------------------------------------------------
# oracle agreement and enumeration cross-checks

def suite_oracle(n: int = 3, samples: int = 10000, seed: int = 3) -> list[CheckResult]:
    s = _Suite()
    vars = default_vars(n)
    if n == 3:
        agree = all(
            is_supermodular(m) == is_supermodular_bruteforce(m)
            for values in itertools.product((-1, 0, 1), repeat=vars.size)
            for m in [SetFunction.from_values(vars, values)])
        s.check("oracle agreement on all sign patterns", agree)
    else:
        rng = random.Random(seed)
        agree = True
        for i in range(samples):
            if i % 4 == 0:
                m = random_supermodular(vars, rng)
            else:
                m = random_integer_function(vars, rng)
            if is_supermodular(m) != is_supermodular_bruteforce(m):
                agree = False
                break
        s.check(f"oracle agreement on {samples} random functions", agree)
    if n in EXPECTED_RAY_COUNTS:
        dd = enumerate_extreme_rays(n)
        bf = bruteforce_extreme_rays(n)
        s.equal("enumerators agree", {g.values for g in dd.generators},
                {g.values for g in bf.generators})
        s.equal("expected ray count", len(dd.generators), EXPECTED_RAY_COUNTS[n])
        s.check("every generator extreme with positive top value",
                all(is_extreme(g).extreme and g.values[vars.full_mask] > 0
                    for g in dd.generators))
    return s.results


# ---------------------------------------------------------------------------
# equivalence theory

def suite_equivalence(n: int = 3, seed: int = 5) -> list[CheckResult]:
    s = _Suite()
    rng = random.Random(seed)
    gens = list(catalogue(n).generators)
    vars = gens[0].vars
    pool = gens + [random_supermodular(vars, rng) for _ in range(6)]
    for i, m1 in enumerate(pool):
        for j, m2 in enumerate(pool):
            t1, t2 = face_of(m1).tight, face_of(m2).tight
            i1 = independency_model(m1).zero_set
            i2 = independency_model(m2).zero_set
            s.equal(f"face inclusion matches model inclusion {i},{j}",
                    t1 >= t2, i1 >= i2)
            s.equal(f"same tight set iff same model {i},{j}",
                    t1 == t2, qualitatively_equivalent(m1, m2))
            if qualitatively_equivalent(m1, m2):
                s.equal(f"support invariant under model equality {i},{j}",
                        support(m1), support(m2))
            both = m1 + m2
            s.check(f"face dimension monotone {i},{j}",
                    face_of(both).dimension
                    >= max(face_of(m1).dimension, face_of(m2).dimension))
    for i, g in enumerate(gens):
        twin = g.scale(5) + random_modular(vars, rng)
        s.check(f"scaled shifted copy stays equivalent #{i}",
                qualitatively_equivalent(g, twin))
        for j, h in enumerate(gens):
            if i != j:
                s.check(f"distinct rays not equivalent {i},{j}",
                        not qualitatively_equivalent(g, h))
    # extremality means indecomposability over the catalogue
    for coeffs in itertools.product(range(3), repeat=len(gens)):
        active = [i for i, c in enumerate(coeffs) if c]
        if len(active) < 2:
            continue
        mix = SetFunction.zero(vars)
        for i, c in enumerate(coeffs):
            if c:
                mix = mix + gens[i].scale(c)
        for g in gens:
            top = mix.values[vars.full_mask] / g.values[vars.full_mask]
            s.check("no extreme generator decomposes",
                    mix != g.scale(top),
                    f"decomposition with coefficients {coeffs}")
    s.check("sum of two rays decomposes trivially",
            not is_extreme(gens[0] + gens[1]).extreme)
    return s.results


# ---------------------------------------------------------------------------
# standardizations

def suite_standardization(seed: int = 13) -> list[CheckResult]:
    s = _Suite()
    rng = random.Random(seed)
    kinds = list(StandardizationKind)
    v2, v3, v4 = _vars(2), _vars(3), _vars(4)
    randoms = ([random_integer_function(v3, rng) for _ in range(10)]
               + [random_integer_function(v4, rng) for _ in range(10)])
    for i, m in enumerate(randoms):
        shift = random_modular(m.vars, rng)
        for kind in kinds:
            std = standardize(m, kind)
            s.equal(f"{kind.value}-standardization idempotent #{i}",
                    standardize(std, kind), std)
            s.equal(f"{kind.value}-standardization class invariant #{i}",
                    standardize(m + shift, kind), std)
            s.check(f"{kind.value}-standardization shifts by modular #{i}",
                    quantitatively_equivalent(m, std))
        basis = [superset_indicator(m.vars, 0)] + [
            superset_indicator(m.vars, 1 << k) for k in range(m.vars.n)]
        m_o = standardize(m, StandardizationKind.ORTHOGONAL)
        s.check(f"o-standardization orthogonal to modular space #{i}",
                all(inner_product(m_o, b) == 0 for b in basis))
        s.equal(f"reflection swaps l and u #{i}",
                standardize(tr.reflect(m), StandardizationKind.UPPER),
                tr.reflect(standardize(m, StandardizationKind.LOWER)))
    for i in range(10):
        m = random_supermodular(v3, rng)
        m_l = standardize(m, StandardizationKind.LOWER)
        m_u = standardize(m, StandardizationKind.UPPER)
        s.check(f"l-standardized supermodular non-decreasing #{i}",
                m_l.is_nonneg() and m_l.is_nondecreasing())
        s.check(f"u-standardized supermodular non-increasing #{i}",
                m_u.is_nonneg() and m_u.is_nonincreasing())
        for kind in (StandardizationKind.LOWER, StandardizationKind.UPPER,
                     StandardizationKind.ORTHOGONAL):
            s.equal(f"lifting commutes with {kind.value}-standardization #{i}",
                    standardize(tr.lift(m, v4), kind),
                    tr.lift(standardize(m, kind), v4))
    pair = combo(v2, {"a,b": 1})
    pair_w = standardize(pair, StandardizationKind.WEIRD)
    s.equal("pair function w-standardized",
            pair_w, combo(v2, {"a,b": Fraction(1, 3), "a": Fraction(-1, 3),
                               "b": Fraction(-1, 3)}))
    lifted_w = standardize(tr.lift(pair, v3), StandardizationKind.WEIRD)
    s.equal("lifted pair function w-standardized",
            lifted_w,
            combo(v3, {"a,b,c": Fraction(1, 4), "a,b": Fraction(1, 2),
                       "a,c": Fraction(-1, 2), "b,c": Fraction(-1, 2),
                       "a": Fraction(-1, 4), "b": Fraction(-1, 4),
                       "c": Fraction(-1, 4)}))
    s.check("w-standardization does not commute with lifting",
            tr.lift(pair_w, v3) != lifted_w)
    for g in catalogue(3).generators:
        s.check("u-representative of integral generator integral",
                standardize(g, StandardizationKind.UPPER).is_integral())
    return s.results


SUITES = {
    "preservation": suite_preservation,
    "models": suite_models,
    "oracle": suite_oracle,
    "equivalence": suite_equivalence,
    "standardization": suite_standardization,
}


def run_suite(name: str, **kwargs) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](**kwargs)
