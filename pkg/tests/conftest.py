import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eonsim import Topology, bundled_topology_path, load_topology


@pytest.fixture(scope="session")
def nsfnet() -> Topology:
    return load_topology(bundled_topology_path("nsfnet"))


@pytest.fixture(scope="session")
def usbackbone() -> Topology:
    return load_topology(bundled_topology_path("usbackbone"))
