import random

import pytest

from tcount_synth.channel import ChannelMatrix, channel_of_unitary
from tcount_synth.circuits import unitary_of_circuit
from tcount_synth.fixtures import random_circuit
from tcount_synth.ring import RealRingElt, reduce_real


def random_ring_elt(rng: random.Random, span: int = 50,
                    kmax: int = 8) -> RealRingElt:
    return reduce_real(rng.randint(-span, span), rng.randint(-span, span),
                       rng.randint(0, kmax))


def random_channel(rng: random.Random, n: int, t_gates: int) -> ChannelMatrix:
    c = random_circuit(n, t_gates, rng.randrange(2 ** 30))
    return channel_of_unitary(unitary_of_circuit(c))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


# acceptance tests append "acceptance criterion N (...): PASS/FAIL" lines
# here; printing them from a summary hook keeps them out of capture
ACCEPTANCE_VERDICTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)
