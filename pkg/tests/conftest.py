import sys
from pathlib import Path

import numpy as np
import pytest

from maxplus import Space

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def ctx2():
    return Space([1.0, 1.0])


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


def rand_space(rng, n=None, nmax=6, eps=1e-9):
    if n is None:
        n = int(rng.integers(1, nmax + 1))
    return Space(rng.uniform(0.5, 2.0, n), eps=eps)
