import pytest

from padejacobi.scalars import set_precision


@pytest.fixture(autouse=True)
def _default_precision():
    """Every test starts from the default 256-bit session precision."""
    set_precision(256)
    yield
    set_precision(256)
