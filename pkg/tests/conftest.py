import copy
import logging

import pytest

from zdgraph.algebra.builders import boolean_semiring, catalog_ring, chain
from zdgraph.config import CONFIG
from zdgraph.enumerate import EnumFilter, census
from zdgraph.harness.runner import corpus


@pytest.fixture(autouse=True)
def restore_config():
    saved = copy.deepcopy(CONFIG)
    yield
    CONFIG.clear()
    CONFIG.update(saved)


@pytest.fixture(autouse=True)
def reset_logger():
    yield
    # CliRunner closes its captured streams; drop handlers bound to them
    logger = logging.getLogger("zdgraph")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


@pytest.fixture
def z4():
    return catalog_ring("Z4")


@pytest.fixture
def t2z2():
    return catalog_ring("T2(Z2)")


@pytest.fixture
def boolean():
    return boolean_semiring()


@pytest.fixture
def chain4():
    return chain(4)


@pytest.fixture(scope="session")
def census3():
    return census(EnumFilter(max_order=3))


@pytest.fixture(scope="session")
def census4():
    return census(EnumFilter(max_order=4, min_order=4))


@pytest.fixture(scope="session")
def all_algebras():
    return corpus("all")
