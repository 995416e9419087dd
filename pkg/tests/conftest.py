import numpy as np
import pytest

from tetk.groupoid import action_groupoid
from tetk.groups import (GroupAction, cyclic_group, symmetric_group,
                         trivial_action)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def bz2(z2):
    return action_groupoid(trivial_action(z2))


@pytest.fixture(scope="session")
def bz4(z4):
    return action_groupoid(trivial_action(z4))


@pytest.fixture(scope="session")
def bs3(s3):
    return action_groupoid(trivial_action(s3))


@pytest.fixture(scope="session")
def swap2(z2):
    return GroupAction(z2, np.array([[0, 1], [1, 0]]), label="swap2")


@pytest.fixture
def rng():
    return np.random.default_rng(2024)
