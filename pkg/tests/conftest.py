import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kslogic.model import all_states, build_set_O  # noqa: E402


@pytest.fixture(scope="session")
def set_O():
    return build_set_O()


@pytest.fixture(scope="session")
def states():
    return all_states()
