import random

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running searches, deselect with -m 'not slow'"
    )


@pytest.fixture
def pyrandom():
    return random.Random(20260814)
