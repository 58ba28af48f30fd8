"""Acceptance gate: one check per criterion, each printing a single verdict line.

Every comparison is exact rational arithmetic with zero tolerance. Wall-time
budgets are asserted per criterion.
"""

import time
from fractions import Fraction

from supmod import (
    StandardizationKind,
    VariableSet,
    bruteforce_extreme_rays,
    contract,
    delta,
    enumerate_extreme_rays,
    is_extreme,
    is_supermodular,
    lift,
    lower_modular_extension,
    lower_replication,
    max_minor,
    mean_minor,
    minor,
    monotonize_max_sub,
    pointwise_multiply,
    quantitatively_equivalent,
    standardize,
    superset_indicator,
    upper_modular_extension,
    upper_replication,
)
from supmod.harness import (
    EXPECTED_RAY_COUNTS,
    combo,
    run_suite,
    suite_equivalence,
    suite_models,
    suite_oracle,
    suite_preservation,
    suite_standardization,
)


def _verdict(num: int, title: str, ok: bool, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    print(f"criterion {num} ({title}): {'PASS' if ok else 'FAIL'} "
          f"[{elapsed:.2f}s / budget {budget:.0f}s]")
    assert ok, f"criterion {num} failed"
    assert elapsed < budget, f"criterion {num} exceeded its {budget:.0f}s budget"


def test_criterion_1_worked_examples():
    started = time.perf_counter()
    v2 = VariableSet.of("ab")
    v3 = VariableSet.of("abc")
    v4 = VariableSet.of("abcd")
    half = Fraction(1, 2)
    ok = True

    m0 = combo(v3, {"a,b,c": 2, "a,b": 1, "a,c": 1, "b,c": 1})
    m_star = combo(v4, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1})
    r_star = combo(v4, {"a,b,c,d": 3, "a,b,c": 2, "a,b,d": 2, "a,c,d": 2,
                        "b,c,d": 1, "a,b": 1, "a,c": 1, "a,d": 1})
    ok &= is_extreme(m0).extreme
    ok &= is_extreme(m_star).extreme
    ok &= is_extreme(r_star).extreme

    d = v4.mask_of("d")
    proj = combo(v3, {"a,b,c": 2, "a,b": 1, "a,c": 1})
    ok &= minor(m_star, 0, d) == proj
    ok &= minor(r_star, d, 0) == proj
    ok &= not is_extreme(proj).extreme
    ok &= contract(m_star, ("c", "d"), "c") == combo(v3, {"a,b,c": 2, "a,c": 1})
    ok &= max_minor(m_star, v4.mask_of("abc")) == proj
    ok &= mean_minor(m_star, v4.mask_of("abc")) == combo(
        v3, {"a,b,c": Fraction(3, 2), "a,b": half, "a,c": half})

    m_hat = pointwise_multiply(m0, m0)
    ok &= m_hat == combo(v3, {"a,b,c": 4, "a,b": 1, "a,c": 1, "b,c": 1})
    ok &= is_supermodular(m_hat) and not is_extreme(m_hat).extreme

    third = Fraction(1, 3)
    ok &= standardize(delta(v2, v2.full_mask), StandardizationKind.WEIRD) == combo(
        v2, {"a,b": third, "a": -third, "b": -third})
    quarter = Fraction(1, 4)
    ab_ind = superset_indicator(v3, v3.mask_of("ab"))
    ok &= standardize(ab_ind, StandardizationKind.WEIRD) == combo(
        v3, {"a,b,c": quarter, "a,b": half, "a,c": -half, "b,c": -half,
             "a": -quarter, "b": -quarter, "c": -quarter})
    ok &= standardize(lift(delta(v2, v2.full_mask), v3), StandardizationKind.WEIRD) \
        != lift(standardize(delta(v2, v2.full_mask), StandardizationKind.WEIRD), v3)

    upp = upper_modular_extension(delta(v2, v2.full_mask), v3)
    ok &= upp == combo(v3, {"a,b": 1, "a,b,c": 1, "c": -1})
    ok &= standardize(upp, StandardizationKind.LOWER) == m0
    ok &= lower_modular_extension(delta(v3, v3.full_mask), v4) == delta(v4, v4.full_mask)

    low = lower_replication(m0, "c", ("c", "d"))
    ok &= low == combo(v4, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1,
                            "a,c,d": 1, "b,c,d": 1, "a,b": 1})
    ok &= is_extreme(low).extreme
    r_u = combo(VariableSet.of("bcd"), {"d": 1, "": 1})
    upp_r = upper_replication(r_u, "b", ("a", "b"))
    ok &= upp_r == combo(v4, {"d": 1, "": 1})
    ok &= standardize(upp_r, StandardizationKind.LOWER) == combo(
        v4, {"a,b,c,d": 2, "a,b,c": 2, "a,b,d": 1, "a,c,d": 1,
             "b,c,d": 1, "a,b": 1, "a,c": 1, "b,c": 1})

    from supmod import modular_combination
    lin = modular_combination(v3, 0, (0, 0, 3))
    repl = lower_replication(lin, "c", ("c", "d"))
    ok &= quantitatively_equivalent(
        repl, superset_indicator(v4, v4.mask_of("cd")).scale(3))

    a, b, c = (superset_indicator(v3, 1 << i) for i in range(3))
    ok &= monotonize_max_sub(m0 - a.scale(half) - b.scale(half)) == combo(
        v3, {"a,b,c": 1, "a,c": half, "b,c": half})
    ok &= monotonize_max_sub(m0 - c) == combo(v3, {"a,b,c": 1, "a,b": 1})
    ok &= monotonize_max_sub(m0 - (a + b + c).scale(Fraction(2, 3))).is_zero()

    _verdict(1, "worked examples reproduced exactly", ok, started, 1.0)


def test_criterion_2_oracle_agreement():
    started = time.perf_counter()
    results = suite_oracle(3) + suite_oracle(4, samples=10000)
    ok = all(r.passed for r in results)
    _verdict(2, "facet test agrees with definition oracle", ok, started, 10.0)


def test_criterion_3_enumeration():
    started = time.perf_counter()
    ok = True
    for n in (2, 3, 4):
        dd = enumerate_extreme_rays(n)
        bf = bruteforce_extreme_rays(n)
        ok &= {g.values for g in dd.generators} == {g.values for g in bf.generators}
        ok &= len(dd.generators) == EXPECTED_RAY_COUNTS[n]
        ok &= all(is_extreme(g).extreme for g in dd.generators)
        ok &= all(g.values[dd.vars.full_mask] > 0 for g in dd.generators)
    _verdict(3, "extreme-ray catalogues cross-checked", ok, started, 60.0)


def test_criterion_4_preservation():
    started = time.perf_counter()
    results = suite_preservation()
    ok = all(r.passed for r in results)
    _verdict(4, "transformation preservation laws", ok, started, 120.0)


def test_criterion_5_model_formulas():
    started = time.perf_counter()
    results = suite_models(samples=1000)
    ok = all(r.passed for r in results)
    _verdict(5, "predicted induced models match", ok, started, 60.0)


def test_criterion_6_equivalence():
    started = time.perf_counter()
    results = suite_equivalence()
    ok = all(r.passed for r in results)
    _verdict(6, "equivalence and face structure", ok, started, 30.0)


def test_criterion_7_standardization():
    started = time.perf_counter()
    results = suite_standardization()
    ok = all(r.passed for r in results)
    _verdict(7, "standardization properties", ok, started, 10.0)
