from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from kummer_bb.lattice import Lattice, make_L2d

FIXTURES_DIR = Path(__file__).parent / "fixtures"
SCHEMAS_DIR = Path(__file__).parent.parent / "schemas"


@pytest.fixture
def l2() -> Lattice:
    return make_L2d(1)


@pytest.fixture
def l50() -> Lattice:
    """L_(2p²) for p = 5."""
    return make_L2d(25)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(42)
