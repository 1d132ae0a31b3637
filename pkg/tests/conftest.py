"""
Shared fixtures: the small local groups and instances every test module uses.
"""

from pathlib import Path

import pytest

from src.core import cyclic, from_group_restriction, load_group, load_local_group
from src.instances import EndoSpec, Family, InstanceSpec, load_instance

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


@pytest.fixture
def c5arc():
    """Z/5 restricted to {0, 1, 4}."""
    return load_local_group(fixture_path("c5arc.json"))


@pytest.fixture
def z6arc():
    return load_local_group(fixture_path("z6arc.json"))


@pytest.fixture
def z12arc():
    return from_group_restriction(cyclic(12), [0, 1, 2, 10, 11], name="z12arc")


@pytest.fixture
def z5():
    return load_group(fixture_path("z5.json"))


@pytest.fixture
def nonglobal5():
    """Five elements, Lambda = {e}; the word x x x x has the two values e and v."""
    return load_local_group(fixture_path("nonglobal5.json"))


@pytest.fixture
def interval():
    return load_instance(fixture_path("interval.json"))


@pytest.fixture
def arc():
    return load_instance(fixture_path("arc.json"))


@pytest.fixture
def padic3():
    return load_instance(fixture_path("padic3.json"))


@pytest.fixture
def product_spec():
    return InstanceSpec.product(InstanceSpec.interval(1), InstanceSpec.padic(3, 0, 8))


@pytest.fixture
def halving():
    return EndoSpec.scaling(Family.INTERVAL, "1/2")
