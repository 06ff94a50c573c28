import numpy as np
import pytest
from hypothesis import settings

from wexpand.construct import expand_bgw
from wexpand.matrix import GroupMatrix
from wexpand.seeds import catalog, seed_bgw

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")



@pytest.fixture(scope="session")
def bgw_corpus():
    """The BGWs the scheme suite runs on."""
    return {
        "seed_3_2": seed_bgw(3, 2),
        "seed_5_4": seed_bgw(5, 4),
        "hadamard_2": GroupMatrix(np.array([[0, 0], [0, 1]]), 2),
        "classical_31_4": expand_bgw(5, 4, 2),
    }


@pytest.fixture(scope="session")
def w8_5():
    return catalog("W8_5").payload


@pytest.fixture(scope="session")
def w43():
    return catalog("W43_25_appendix").payload


@pytest.fixture(scope="session")
def appendix_oa():
    return catalog("OA25x6_appendix").payload
