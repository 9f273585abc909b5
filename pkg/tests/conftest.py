import pytest
from hypothesis import HealthCheck, settings

from sic.codes import binary_expand, rs_extended, shorten
from sic.fields import FiniteField

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def ex1_qary():
    return shorten(rs_extended(FiniteField(5), 5), 2)


@pytest.fixture(scope="session")
def ex2_qary():
    return shorten(rs_extended(FiniteField(7), 6), 3)


@pytest.fixture(scope="session")
def ex3_qary():
    return shorten(rs_extended(FiniteField(8), 5), 2)


@pytest.fixture(scope="session")
def ex1(ex1_qary):
    return binary_expand(ex1_qary)


@pytest.fixture(scope="session")
def ex2(ex2_qary):
    return binary_expand(ex2_qary)


@pytest.fixture(scope="session")
def ex3(ex3_qary):
    return binary_expand(ex3_qary)
