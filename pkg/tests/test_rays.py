import pytest

from supmod import (
    VariableSet,
    bruteforce_extreme_rays,
    classify_orbits,
    delta,
    enumerate_extreme_rays,
    is_extreme,
    verify_catalogue,
)
from supmod.harness import combo
from supmod.rays import RayCatalogue, default_vars


def test_n2_rays(v2):
    cat = enumerate_extreme_rays(2)
    assert cat.n == 2 and cat.vars == v2
    assert cat.generators == (delta(v2, v2.full_mask),)


def test_n3_rays(v3, m0):
    cat = enumerate_extreme_rays(3)
    assert len(cat.generators) == 5
    expected = {
        delta(v3, v3.full_mask).values,
        combo(v3, {"a,b,c": 1, "a,b": 1}).values,
        combo(v3, {"a,b,c": 1, "a,c": 1}).values,
        combo(v3, {"a,b,c": 1, "b,c": 1}).values,
        m0.values,
    }
    assert {g.values for g in cat.generators} == expected
    assert all(is_extreme(g).extreme for g in cat.generators)


def test_n3_orbits(v3):
    cat = classify_orbits(enumerate_extreme_rays(3))
    sizes = sorted(len(o.members) for o in cat.orbits)
    assert sizes == [1, 1, 3]
    for o in cat.orbits:
        rep = cat.generators[o.representative]
        assert all(rep.values <= cat.generators[j].values for j in o.members)


def test_n4_count():
    cat = enumerate_extreme_rays(4)
    assert len(cat.generators) == 37
    assert len(classify_orbits(cat).orbits) == 10


def test_bruteforce_agreement():
    for n in (2, 3):
        dd = enumerate_extreme_rays(n)
        bf = bruteforce_extreme_rays(n)
        assert {g.values for g in dd.generators} == {g.values for g in bf.generators}


def test_enumerate_range_errors():
    with pytest.raises(ValueError):
        enumerate_extreme_rays(1)
    with pytest.raises(ValueError):
        enumerate_extreme_rays(5)
    with pytest.raises(ValueError):
        enumerate_extreme_rays(6, allow_large=True)
    with pytest.raises(ValueError):
        bruteforce_extreme_rays(5)


def test_verify_catalogue_ok():
    report = verify_catalogue(enumerate_extreme_rays(3))
    assert report.ok and report.failures == ()


def test_verify_catalogue_detects_corruption(v3, m0):
    cat = enumerate_extreme_rays(3)
    bogus = cat.generators[0] + m0
    corrupted = RayCatalogue(3, v3, cat.generators + (bogus,))
    report = verify_catalogue(corrupted)
    assert not report.ok
    assert any("not extreme" in f for f in report.failures)


def test_default_vars():
    assert default_vars(3) == VariableSet.of("abc")
    assert default_vars(4).labels == ("a", "b", "c", "d")
