import sys

import pytest
from hypothesis import HealthCheck, settings

from rsrepair.gf_tower import get_tower

settings.register_profile("repo", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

SMALL_TOWERS = [(2, 2, 2), (3, 1, 2), (5, 1, 2), (2, 1, 3), (3, 1, 3), (2, 2, 3)]


@pytest.fixture(params=SMALL_TOWERS, ids=lambda k: "%d,%d,%d" % k)
def tower(request):
    return get_tower(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
