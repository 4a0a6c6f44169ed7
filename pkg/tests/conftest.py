import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from idealfam.core import SetFamily, edge, power_set  # noqa: E402


def one_based(n, *sets):
    """Family on {0..n-1} from sets written with 1-based labels (v1 -> bit 0)."""
    return SetFamily((1 << n) - 1, tuple(edge(v - 1 for v in s) for s in sets))


@pytest.fixture
def pow2():
    return power_set(2)


@pytest.fixture
def fam32():
    return one_based(3, (), (1,), (2,), (3,), (1, 2), (1, 3), (1, 2, 3))


@pytest.fixture
def fam21():
    return one_based(3, (), (1,), (1, 2), (1, 3), (1, 2, 3))
