from fractions import Fraction

import pytest

from pdwpf.sampling import Sampler


@pytest.fixture
def sampler():
    return Sampler(20240611)


def F(*a):
    return Fraction(*a)
