import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture
def make_image(rng):
    """Factory for random uint8 RGB images."""

    def _make(h, w):
        return rng.integers(0, 256, (h, w, 3), dtype=np.uint8)

    return _make


@pytest.fixture
def make_plane(rng):
    def _make(h, w):
        return rng.integers(0, 256, (h, w), dtype=np.uint8)

    return _make
