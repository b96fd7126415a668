import numpy as np
import pytest

from core.config import DEFAULT_PRIME
from horn.horn_engine import HornTable
from linalg.fields import PrimeField, RationalField


@pytest.fixture(scope="session")
def cache():
    # уровни HornTable неизменяемы после построения, один кэш на всю сессию
    return HornTable()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def Q():
    return RationalField(bound=20)


@pytest.fixture
def GF():
    return PrimeField(DEFAULT_PRIME)
