import os
import sys

import pytest

sys.path.append(os.path.join(os.path.dirname(__file__), "src"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the full-scale sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-scale exhaustive sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
