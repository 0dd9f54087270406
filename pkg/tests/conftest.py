import os

import pytest
from hypothesis import settings

from arithmonoid.config import reset_config

settings.register_profile("acceptance", max_examples=1000, deadline=None)
settings.register_profile("dev", max_examples=100, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "acceptance"))


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from DEFAULT_CONFIG."""
    reset_config()
    yield
    reset_config()
