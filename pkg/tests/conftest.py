import functools
import os

import pytest

from noncyc import build_bundle
from noncyc.kernels import warmup

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
HEISENBERG27 = os.path.join(DATA_DIR, "heisenberg27.json")


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # Compile (or load from cache) the jitted kernels once, so the timed
    # acceptance checks measure the searches rather than compilation.
    warmup()


@functools.lru_cache(maxsize=None)
def cached_bundle(spec: str):
    return build_bundle(spec)


@pytest.fixture
def bundle():
    return cached_bundle
