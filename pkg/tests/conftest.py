import math

import pytest

from qsegre import make_state

SQ2 = 1.0 / math.sqrt(2.0)
SQ3 = 1.0 / math.sqrt(3.0)


@pytest.fixture
def bell():
    """(|00> + |11>)/sqrt(2), float backend."""
    return make_state([2, 2], [SQ2, 0, 0, SQ2])


@pytest.fixture
def bell_exact():
    """Unnormalized exact Bell direction (1, 0, 0, 1)."""
    return make_state([2, 2], [1, 0, 0, 1])


@pytest.fixture
def ghz3():
    return make_state([2, 2, 2], [SQ2, 0, 0, 0, 0, 0, 0, SQ2])


@pytest.fixture
def ghz3_exact():
    return make_state([2, 2, 2], [1, 0, 0, 0, 0, 0, 0, 1])


@pytest.fixture
def w3():
    return make_state([2, 2, 2], [0, SQ3, SQ3, 0, SQ3, 0, 0, 0])


@pytest.fixture
def w3_exact():
    return make_state([2, 2, 2], [0, 1, 1, 0, 1, 0, 0, 0])
