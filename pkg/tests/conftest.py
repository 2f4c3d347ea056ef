import numpy as np
import pytest

from sigma_surfaces.invariants.selection import BetaVector
from sigma_surfaces.oracle.curves import veronese_curve
from sigma_surfaces.oracle.tower import VeroneseField


@pytest.fixture
def memory_db_url():
    return "sqlite://"


@pytest.fixture
def sqlite_file_url(tmp_path):
    return f"sqlite:///{tmp_path / 'catalog.db'}"


@pytest.fixture
def veronese_field():
    """Factory: veronese_field(n, grid) -> VeroneseField"""
    def build(n, grid):
        return VeroneseField(veronese_curve(n), BetaVector.from_grid(n, grid))
    return build


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
