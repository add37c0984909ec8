import os

import pytest

from selbounds.arithmetic import build_tables
from selbounds.descriptors import dirichlet_descriptor, product_descriptor, zeta_descriptor
from selbounds.lfunc import load_zeros

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")
ZEROS_PATH = os.path.abspath(os.path.join(DATA_DIR, "zeros_zeta_100k.txt"))


@pytest.fixture(scope="session")
def zeros_path():
    if not os.path.exists(ZEROS_PATH):
        pytest.skip("zeros table missing; run scripts/generate_zeta_zeros.py")
    return ZEROS_PATH


@pytest.fixture(scope="session")
def zeros(zeros_path):
    return load_zeros(zeros_path)


@pytest.fixture(scope="session")
def zeta():
    return zeta_descriptor()


@pytest.fixture(scope="session")
def zeta_tables_small(zeta):
    return build_tables(zeta, 10_000)


@pytest.fixture(scope="session")
def zeta_tables_1e6(zeta):
    return build_tables(zeta, 10 ** 6)


@pytest.fixture(scope="session")
def product5():
    return product_descriptor([zeta_descriptor(), dirichlet_descriptor(5, 1)])


@pytest.fixture(scope="session")
def product5_tables_small(product5):
    return build_tables(product5, 10_000)
