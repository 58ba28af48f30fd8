from fractions import Fraction

import pytest

from supmod import (
    SetFunction,
    StandardizationKind,
    VariableSet,
    coarsen,
    contract,
    delta,
    independency_model,
    is_extreme,
    is_supermodular,
    lift,
    lower_modular_extension,
    lower_replication,
    max_minor,
    mean_minor,
    minor,
    modular_combination,
    monotonize_max_sub,
    monotonize_max_sup,
    outer_compose,
    permute,
    pointwise_multiply,
    predict_model,
    product_compose,
    reflect,
    standardize,
    superset_indicator,
    upper_modular_extension,
    upper_replication,
)
from supmod.harness import combo
from supmod.transforms import invert_permutation


def test_permute_inverse_law(m0):
    mapping = (1, 2, 0)
    assert permute(permute(m0, mapping), invert_permutation(mapping)) == m0
    assert permute(m0, (0, 1, 2)) == m0
    with pytest.raises(ValueError):
        permute(m0, (0, 0, 2))


def test_reflect(m0, v3):
    r = reflect(m0)
    assert r.values[0] == 2
    assert all(r.values[1 << i] == 1 for i in range(3))
    assert reflect(r) == m0
    assert standardize(r, StandardizationKind.UPPER) == reflect(
        standardize(m0, StandardizationKind.LOWER))


def test_monotonizations(m0, v3):
    a, b, c = (superset_indicator(v3, 1 << i) for i in range(3))
    m1 = m0 - a.scale(Fraction(1, 2)) - b.scale(Fraction(1, 2))
    assert monotonize_max_sub(m1) == combo(
        v3, {"a,b,c": 1, "a,c": Fraction(1, 2), "b,c": Fraction(1, 2)})
    m2 = m0 - c
    assert monotonize_max_sub(m2) == combo(v3, {"a,b,c": 1, "a,b": 1})
    third = Fraction(2, 3)
    m3 = m0 - (a + b + c).scale(third)
    assert monotonize_max_sub(m3).is_zero()
    assert monotonize_max_sub(reflect(m0)) == reflect(monotonize_max_sup(m0))


def test_outer_compose_checks(m0):
    with pytest.raises(ValueError):
        outer_compose(m0, m0, lambda x, y: -x * y)
    with pytest.raises(ValueError):
        outer_compose(m0 + superset_indicator(m0.vars, 0), m0, lambda x, y: x)
    sq = outer_compose(m0, m0, lambda x, y: x * x)
    assert sq == pointwise_multiply(m0, m0)


def test_pointwise_multiply_checks(m0, v3):
    with pytest.raises(ValueError):
        pointwise_multiply(m0, standardize(m0, StandardizationKind.UPPER))
    upper = reflect(m0)
    assert pointwise_multiply(upper, upper) == reflect(pointwise_multiply(m0, m0))


def test_lift_and_minor(m0, v3, v4):
    lifted = lift(m0, v4)
    assert lifted.values[v4.mask_of("abc")] == 2
    assert lifted.values[v4.full_mask] == 2
    assert lift(m0, v3) == m0
    d = v4.mask_of("d")
    assert minor(lifted, d, 0) == m0
    assert minor(lifted, 0, d) == m0
    with pytest.raises(ValueError):
        minor(lifted, d, d)
    with pytest.raises(ValueError):
        lift(m0, VariableSet.of("abd"))
    pair = combo(VariableSet.of("ab"), {"a,b": 1})
    assert lift(pair, v3) == combo(v3, {"a,b": 1, "a,b,c": 1})


def test_mean_minor(v3, v4):
    m_star = combo(v4, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1, "a,c,d": 1})
    assert mean_minor(m_star, v4.mask_of("abc")) == combo(
        v3, {"a,b,c": Fraction(3, 2), "a,b": Fraction(1, 2), "a,c": Fraction(1, 2)})
    assert mean_minor(m_star, v4.full_mask) == m_star


def test_coarsen(m0, v3):
    ident = coarsen(m0, v3, {s: s for s in "abc"})
    assert ident == m0
    swapped = coarsen(m0, v3, {"a": "b", "b": "a", "c": "c"})
    assert swapped == permute(m0, (1, 0, 2))
    with pytest.raises(ValueError):
        coarsen(m0, v3, {"a": "a", "b": "a", "c": "a"})
    with pytest.raises(ValueError):
        contract(m0, ("a", "b"), "c")


def test_max_minor(m0, v3):
    ab = v3.mask_of("ab")
    assert max_minor(m0, ab) == combo(VariableSet.of("ab"), {"a,b": 2, "a": 1, "b": 1})
    m2 = m0 - superset_indicator(v3, v3.mask_of("c"))
    assert max_minor(m2, ab) == combo(VariableSet.of("ab"), {"a,b": 1})


def test_product_compose(v3):
    r = combo(VariableSet.of("ab"), {"a,b": 1})
    l = combo(VariableSet.of("cd"), {"c,d": 1})
    v4 = VariableSet.of("abcd")
    assert product_compose(r, l) == delta(v4, v4.full_mask)
    with pytest.raises(ValueError):
        product_compose(r, combo(VariableSet.of("bc"), {"b,c": 1}))
    with pytest.raises(ValueError):
        product_compose(r - superset_indicator(r.vars, 0), l)


def test_modular_extensions(v3, v4):
    tri = delta(v3, v3.full_mask)
    assert lower_modular_extension(tri, v4) == delta(v4, v4.full_mask)
    pair = combo(VariableSet.of("ab"), {"a,b": 1})
    upp = upper_modular_extension(pair, v3)
    assert upp == combo(v3, {"a,b": 1, "a,b,c": 1, "c": -1})
    assert standardize(upp, StandardizationKind.LOWER) == combo(
        v3, {"a,b,c": 2, "a,b": 1, "a,c": 1, "b,c": 1})
    d = v4.mask_of("d")
    assert minor(lower_modular_extension(tri, v4), 0, d) == tri
    assert minor(upper_modular_extension(tri, v4), d, 0) == tri
    lin = modular_combination(v3, 1, (2, 0, -1))
    from supmod import is_modular
    assert is_modular(lower_modular_extension(lin, v4))
    with pytest.raises(ValueError):
        lower_modular_extension(tri, v3)


def test_replications(m0, v4):
    low = lower_replication(m0, "c", ("c", "d"))
    assert low == combo(v4, {"a,b,c,d": 2, "a,b,c": 1, "a,b,d": 1,
                             "a,c,d": 1, "b,c,d": 1, "a,b": 1})
    assert is_extreme(low).extreme
    r_u = combo(VariableSet.of("bcd"), {"d": 1, "": 1})
    upp = upper_replication(r_u, "b", ("a", "b"))
    assert upp == combo(v4, {"d": 1, "": 1})
    assert standardize(upp, StandardizationKind.LOWER) == combo(
        v4, {"a,b,c,d": 2, "a,b,c": 2, "a,b,d": 1, "a,c,d": 1,
             "b,c,d": 1, "a,b": 1, "a,c": 1, "b,c": 1})
    with pytest.raises(ValueError):
        lower_replication(m0, "z", ("x", "y"))
    with pytest.raises(ValueError):
        lower_replication(m0, "c", ("a", "d"))
    with pytest.raises(ValueError):
        lower_replication(m0, "c", ("d",))


def test_replication_duality(m0):
    assert reflect(upper_replication(m0, "c", ("c", "d"))) == lower_replication(
        reflect(m0), "c", ("c", "d"))


def test_predict_model_dispatch(m0, v4):
    with pytest.raises(ValueError):
        predict_model("no_such", m0)
    predicted = predict_model("lift", m0, target=v4)
    assert predicted == independency_model(lift(m0, v4))
    predicted = predict_model("reflect", m0)
    assert predicted == independency_model(reflect(m0))
