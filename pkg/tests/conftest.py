import pytest
from hypothesis import HealthCheck, settings

from formwitt.fields import named_field, roster_fields

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def gf2():
    return named_field("gf2")


@pytest.fixture(scope="session")
def gf3():
    return named_field("gf3")


@pytest.fixture(scope="session")
def gf4():
    return named_field("gf4")


@pytest.fixture(scope="session")
def gf4f():
    return named_field("gf4", "frobenius")


@pytest.fixture(scope="session")
def gf9():
    return named_field("gf9")


@pytest.fixture(scope="session")
def gf9f():
    return named_field("gf9", "frobenius")


@pytest.fixture(scope="session")
def roster():
    return roster_fields()
