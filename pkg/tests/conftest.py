import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator so every test run sees the same samples."""
    return np.random.Generator(np.random.PCG64(20260813))
