import numpy as np
import pytest

from qrelay import config
from qrelay.harness.models import make_config
from qrelay.network.topology import default_topology

config.STRICT_CHECKS = True


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)


@pytest.fixture
def topo():
    return default_topology(hop_db=0.0)


@pytest.fixture
def lossless_cfg():
    """Four pass-through hops without attenuation, small trial count."""
    return make_config({"seed": 7, "trials": 50, "hop_db": 0.0, "degradation_sweep": [0.0, 0.25]})


def _random_density_matrix(rng: np.random.Generator, n_qubits: int) -> np.ndarray:
    dim = 2 ** n_qubits
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


@pytest.fixture
def random_rho():
    return _random_density_matrix

