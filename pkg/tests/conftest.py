from __future__ import annotations

from functools import lru_cache

import pytest

from genocchi import enumerate_model


@lru_cache(maxsize=None)
def cached_objects(model: str, n: int) -> tuple:
    """Enumerate once per (model, n) for the whole test session."""
    return tuple(enumerate_model(model, n))


@pytest.fixture(scope="session")
def objects():
    return cached_objects
