import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from tests_support import random_family_member  # noqa: E402


@pytest.fixture(scope="session")
def member_factory():
    return random_family_member
