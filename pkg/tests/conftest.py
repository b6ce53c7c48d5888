"""Shared fixtures: backend availability and cached census runs."""

import functools

import pytest

from linkcensus.search import CensusResult, SearchConfig, enumerate_census


def fast_backend_available() -> bool:
    try:
        from linkcensus import _engine  # noqa: F401
        return True
    except ImportError:
        return False


needs_fast = pytest.mark.skipif(
    not fast_backend_available(),
    reason="compiled engine not built",
)


@functools.lru_cache(maxsize=None)
def census(n: int, mode: str = "all", level: int = 2, seed: int = 0,
           backend: str | None = None, force_level0: bool = False) -> CensusResult:
    config = SearchConfig(n=n, mode=mode, level=level, seed=seed,
                          force_level0=force_level0)
    return enumerate_census(config, backend=backend)


@pytest.fixture(scope="session")
def fast_available() -> bool:
    return fast_backend_available()
