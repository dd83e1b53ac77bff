import numpy as np
import pytest


def random_spd(rng, n, cond_max=1e3):
    """Random SPD matrix with bounded condition number."""
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    eigs = np.exp(rng.uniform(0.0, np.log(cond_max), n))
    eigs /= eigs.max()
    return (q * eigs) @ q.T


@pytest.fixture
def rng():
    return np.random.default_rng(20240901)
