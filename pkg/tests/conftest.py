import sys
from pathlib import Path

import pytest

from lorpoly import combinatorics

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def u24():
    return combinatorics.uniform_matroid(2, 4)


@pytest.fixture(scope="session")
def u25():
    return combinatorics.uniform_matroid(2, 5)


@pytest.fixture(scope="session")
def fano_m():
    return combinatorics.fano()


@pytest.fixture(scope="session")
def betsy():
    return combinatorics.betsy_ross()


@pytest.fixture(scope="session")
def elliptic5():
    return combinatorics.elliptic_matroid(5)


@pytest.fixture(scope="session")
def elliptic7():
    return combinatorics.elliptic_matroid(7)


def pair_point(n, i, j):
    p = [0] * n
    p[i] += 1
    p[j] += 1
    return tuple(p)
