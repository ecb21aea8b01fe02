import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lerchzeta.precision import make_config


@pytest.fixture(scope="session")
def cfg40():
    return make_config(40)


@pytest.fixture(scope="session")
def cfg25():
    return make_config(25)


@pytest.fixture(scope="session")
def cfg_sweep():
    return make_config(20, target_eps=1e-14)
