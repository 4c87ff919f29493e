import pytest

from dpk.config import get_settings


@pytest.fixture
def settings(monkeypatch):
    """Fresh Settings built from the (patched) environment; the cache is reset afterwards."""
    get_settings.cache_clear()

    def build(**env):
        for key, value in env.items():
            monkeypatch.setenv(key, str(value))
        get_settings.cache_clear()
        return get_settings()

    yield build
    get_settings.cache_clear()


@pytest.fixture
def small_blocks(settings):
    """Two-thread pool and small path blocks so every MC test spans several blocks."""
    return settings(DPK_BLOCK_PATHS=500, DPK_THREADS=2)
