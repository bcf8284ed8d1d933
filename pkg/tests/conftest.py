import hypothesis
import pytest

hypothesis.settings.register_profile(
    "capax", deadline=None, derandomize=True, max_examples=60
)
hypothesis.settings.load_profile("capax")


@pytest.fixture(scope="session")
def nustar():
    """The balanced-but-not-totally-balanced four-point fixture."""
    from capax.selftest import nustar as make

    return make()
