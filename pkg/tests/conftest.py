import logging
import os
import shutil
import tempfile

import pytest
from hypothesis import HealthCheck, settings

from rainbowpath.graph import EdgeColoredGraph

settings.register_profile("dev", max_examples=40, deadline=None)
settings.register_profile(
    "ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("RAINBOWPATH_HYPOTHESIS", "dev"))


@pytest.fixture()
def temp_file():
    fle = None
    try:
        with tempfile.NamedTemporaryFile(delete=False) as fle:
            filename = fle.name
        yield filename
    finally:
        if fle and os.path.exists(fle.name):
            os.remove(fle.name)


@pytest.fixture()
def temp_dir():
    d = None
    try:
        d = tempfile.mkdtemp()
        yield d
    finally:
        if d and os.path.exists(d):
            shutil.rmtree(d)


@pytest.fixture()
def triangle():
    return EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])


@pytest.fixture()
def mono_path():
    """0-1-2-3 all in color 5 plus a rainbow detour"""
    return EdgeColoredGraph(
        5, [(0, 1, 5), (1, 2, 5), (2, 3, 5), (0, 4, 1), (4, 3, 2)]
    )


@pytest.fixture(autouse=True)
def reset_log_handlers():
    root = logging.getLogger(None)
    handlers = list(root.handlers)
    level = root.level
    try:
        yield
    finally:
        root.handlers = handlers
        root.setLevel(level)
