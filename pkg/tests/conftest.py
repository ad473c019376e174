import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@pytest.fixture(scope="session")
def f2():
    from eqcode.gfq import field_make
    return field_make(2)


@pytest.fixture(scope="session")
def f3():
    from eqcode.gfq import field_make
    return field_make(3)
