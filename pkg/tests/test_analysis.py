from fractions import Fraction

import pytest

from supmod import (
    ElementaryTriplet,
    SetFunction,
    delta,
    face_of,
    independency_model,
    integral_representative,
    is_extreme,
    modular_combination,
    qualitatively_equivalent,
    quantitatively_equivalent,
    scalar_table,
    superset_indicator,
)
from supmod.harness import combo


def test_scalar_table(m0):
    table = scalar_table(m0)
    t = ElementaryTriplet(0, 1, 0b100)
    assert table[t] == 0
    assert len(table.as_dict()) == 6


def test_independency_model(m0, v3):
    model = independency_model(m0)
    assert model.universe_size == 6
    assert model.dependency_count == 3
    assert ElementaryTriplet(0, 1, 0b100) in model
    assert ElementaryTriplet(0, 1, 0) not in model


def test_quantitative_equivalence(m0, v3):
    assert quantitatively_equivalent(m0, m0 + modular_combination(v3, 1, (2, 3, 4)))
    assert not quantitatively_equivalent(m0, m0 + delta(v3, v3.full_mask))


def test_qualitative_equivalence(m0, v3):
    assert qualitatively_equivalent(m0, m0.scale(7))
    assert not qualitatively_equivalent(m0, delta(v3, v3.full_mask))
    with pytest.raises(ValueError):
        qualitatively_equivalent(m0, -delta(v3, v3.full_mask))


def test_face_and_extremality(m0, v3):
    face = face_of(m0)
    assert len(face.tight) == 3
    assert face.rank == 3
    assert face.dimension == 5 == v3.n + 2
    report = is_extreme(m0)
    assert report.extreme and report.supermodular and not report.modular
    assert not is_extreme(modular_combination(v3, 1, (1, 1, 1))).extreme
    assert not is_extreme(-delta(v3, v3.full_mask)).extreme
    with pytest.raises(ValueError):
        face_of(-delta(v3, v3.full_mask))


def test_non_extreme_monotonization_example(v3):
    # fractional non-extreme point inside the cone: tight set of low rank
    m = combo(v3, {"a,b,c": 1, "a,c": Fraction(1, 2), "b,c": Fraction(1, 2)})
    report = is_extreme(m)
    assert report.supermodular and not report.extreme
    assert report.face.rank == 2
    assert report.face.dimension == 6


def test_integral_representative(m0, v3):
    scaled = m0.scale(Fraction(2, 3)) + modular_combination(v3, 1, (1, 0, 0))
    assert integral_representative(scaled) == m0
    assert integral_representative(SetFunction.zero(v3)).is_zero()
    half = superset_indicator(v3, v3.mask_of("ab")).scale(Fraction(1, 2))
    assert integral_representative(half) == superset_indicator(v3, v3.mask_of("ab"))
    with pytest.raises(ValueError):
        integral_representative(-delta(v3, v3.full_mask))
