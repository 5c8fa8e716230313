import os

import pytest
from hypothesis import HealthCheck, settings

from src.semiring import get_semiring
from src.verify import worked_examples

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "ci",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def max_times():
    return get_semiring("max_times")


@pytest.fixture
def remark24_pair():
    examples = worked_examples()
    return examples["remark24_A"], examples["remark24_B"]


@pytest.fixture
def remark36_matrix():
    return worked_examples()["remark36_A"]


@pytest.fixture(autouse=True)
def _clear_semiperm_env(monkeypatch):
    # A developer's .env must not change caps or worker counts under test
    for name in ("SEMIPERM_ENUM_CAP", "SEMIPERM_DP_CAP", "SEMIPERM_WORKERS", "SEMIPERM_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="also run the acceptance-sized suites marked slow")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-sized run, skipped without --run-slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
