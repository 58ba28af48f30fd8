import pytest

from supmod import VariableSet
from supmod.harness import combo


@pytest.fixture
def v2():
    return VariableSet.of("ab")


@pytest.fixture
def v3():
    return VariableSet.of("abc")


@pytest.fixture
def v4():
    return VariableSet.of("abcd")


@pytest.fixture
def m0(v3):
    return combo(v3, {"a,b,c": 2, "a,b": 1, "a,c": 1, "b,c": 1})
