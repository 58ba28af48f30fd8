from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supmod import (
    ElementaryTriplet,
    SetFunction,
    StandardizationKind,
    VariableSet,
    all_triplets,
    carrier,
    delta,
    elementary_imset,
    inner_product,
    is_modular,
    is_submodular,
    is_supermodular,
    is_supermodular_bruteforce,
    modular_combination,
    semi_elementary_imset,
    standardize,
    superset_indicator,
    support,
    triplet_product,
)
from supmod.core import submasks
from supmod.harness import combo

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)


def test_variable_set_validation():
    with pytest.raises(ValueError):
        VariableSet(("b", "a"))
    with pytest.raises(ValueError):
        VariableSet(("a",))
    with pytest.raises(ValueError):
        VariableSet(("a", "a"))
    v = VariableSet.of(["c", "a", "b"])
    assert v.labels == ("a", "b", "c")
    assert v.mask_of("ac") == 0b101
    assert v.labels_of(0b110) == ("b", "c")
    with pytest.raises(ValueError):
        v.index("z")
    with pytest.raises(ValueError):
        v.check_mask(8)


def test_submasks():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert list(submasks(0)) == [0]


def test_triplet_validation_and_order(v3):
    with pytest.raises(ValueError):
        ElementaryTriplet(1, 0, 0)
    with pytest.raises(ValueError):
        ElementaryTriplet(0, 1, 0b001)
    t = ElementaryTriplet.of(2, 0, 0b010)
    assert (t.a, t.b) == (0, 2)
    assert t.render(v3) == "a _||_ c | {b}"
    ts = all_triplets(v3)
    assert len(ts) == 6
    v4 = VariableSet.of("abcd")
    assert len(all_triplets(v4)) == 24


def test_set_function_arithmetic(v3):
    m = delta(v3, 0b111)
    two = m + m
    assert two.values[0b111] == 2
    assert (two - m) == m
    assert (-m).values[0b111] == -1
    assert m.scale("1/2").values[0b111] == Fraction(1, 2)
    with pytest.raises(ValueError):
        m + delta(VariableSet.of("ab"), 0)
    assert SetFunction.zero(v3).is_zero()
    assert m.is_integral() and not m.scale("1/2").is_integral()


def test_imset_products(v3, m0):
    t = ElementaryTriplet(0, 1, 0)
    u = elementary_imset(v3, t)
    assert inner_product(m0, u) == triplet_product(m0, t) == 1
    semi = semi_elementary_imset(v3, 0b001, 0b110, 0)
    assert inner_product(m0, semi) == 1
    with pytest.raises(ValueError):
        semi_elementary_imset(v3, 0b001, 0b011, 0)


def test_supermodularity(v3, m0):
    assert is_supermodular(m0)
    assert not is_submodular(m0)
    assert is_submodular(-m0)
    assert not is_supermodular(-delta(v3, 0b111))
    assert is_modular(modular_combination(v3, 2, (1, -1, 3)))
    assert not is_modular(m0)


def test_bruteforce_matches_facet_test(v3):
    m = combo(v3, {"a,b,c": "1/2", "a,b": "-1/3", "a": "2"})
    assert is_supermodular_bruteforce(m) == is_supermodular(m)
    assert is_supermodular_bruteforce(m.scale(0))


def test_lower_standardization(m0, v3):
    shifted = m0 + modular_combination(v3, 5, (-1, 2, 0))
    assert standardize(shifted, StandardizationKind.LOWER) == m0
    m_l = standardize(shifted, StandardizationKind.LOWER)
    assert m_l.values[0] == 0
    assert all(m_l.values[1 << i] == 0 for i in range(3))


def test_upper_standardization(m0, v3):
    m_u = standardize(m0, StandardizationKind.UPPER)
    full = v3.full_mask
    assert m_u.values[full] == 0
    assert all(m_u.values[full ^ (1 << i)] == 0 for i in range(3))


def test_orthogonal_standardization(m0, v3):
    m_o = standardize(m0, StandardizationKind.ORTHOGONAL)
    basis = [superset_indicator(v3, 0)] + [superset_indicator(v3, 1 << i)
                                           for i in range(3)]
    assert all(inner_product(m_o, b) == 0 for b in basis)


def test_polymatroidal_standardization(m0, v3):
    m_p = standardize(m0, StandardizationKind.POLYMATROIDAL)
    full = v3.full_mask
    assert m_p.values[0] == 0
    assert all(m_p.values[full ^ (1 << i)] == m_p.values[full] for i in range(3))


def test_weird_standardization(v3, m0):
    m_w = standardize(m0, StandardizationKind.WEIRD)
    full = v3.full_mask
    assert m_w.values[0] == 0
    assert all(m_w.values[1 << i] == -m_w.values[full] for i in range(3))


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=8, max_size=8),
       st.sampled_from(list(StandardizationKind)))
def test_standardization_idempotent_and_class_invariant(values, kind):
    v3 = VariableSet.of("abc")
    m = SetFunction.from_values(v3, values)
    std = standardize(m, kind)
    assert standardize(std, kind) == std
    shift = modular_combination(v3, 3, (-2, 1, 5))
    assert standardize(m + shift, kind) == std


def test_carrier_and_support(v3):
    lifted = combo(v3, {"a,b": 1, "a,b,c": 1})
    assert carrier(lifted) == v3.mask_of("ab")
    assert support(lifted) == v3.mask_of("ab")
    shifted = lifted + superset_indicator(v3, v3.mask_of("c"))
    assert carrier(shifted) == v3.full_mask
    assert support(shifted) == v3.mask_of("ab")
    with pytest.raises(ValueError):
        support(-delta(v3, v3.full_mask))
