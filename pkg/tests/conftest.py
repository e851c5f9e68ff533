import numpy as np
import pytest

import twosheet as ts


@pytest.fixture(scope="session")
def basis():
    return ts.build_gamma_basis()


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
