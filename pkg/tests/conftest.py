from functools import lru_cache

import pytest

from holsemi.library import LIBRARY_NAMES, library_group
from holsemi.monomiality import MonomialityReport


@lru_cache(maxsize=None)
def group(name):
    return library_group(name)


@lru_cache(maxsize=None)
def report(name):
    """Character table plus all induced monomial data, computed once per run."""
    return MonomialityReport.build(group(name))


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HOLSEMI_CACHE", str(tmp_path / "cache"))


@pytest.fixture(params=LIBRARY_NAMES)
def library_name(request):
    return request.param


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_report = rep
