import pytest
from hypothesis import HealthCheck, settings

from chevheis.localring import RingSpec, make_ring

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GATE_LINES: list[str] = []

SMALL_SPECS = [
    RingSpec("zpn", 3, 1, 1),
    RingSpec("zpn", 3, 1, 2),
    RingSpec("zpn", 5, 1, 2),
    RingSpec("series", 3, 1, 2),
    RingSpec("series", 3, 2, 2, (1, 0, 1)),
    RingSpec("galois", 3, 2, 1, (1, 0, 1)),
    RingSpec("galois", 3, 2, 2, (1, 0, 1)),
]


@pytest.fixture(params=SMALL_SPECS, ids=lambda s: f"{s.kind}-{s.p}-{s.l}-{s.n}")
def small_ring(request):
    return make_ring(request.param)


def pytest_terminal_summary(terminalreporter):
    if GATE_LINES:
        terminalreporter.section("acceptance gate")
        for line in GATE_LINES:
            terminalreporter.write_line(line)
