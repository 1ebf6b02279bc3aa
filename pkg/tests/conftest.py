import pytest

from geohull import build_reduction, make_cnf
from geohull.fixtures import small_chordal_graph


@pytest.fixture
def fig2():
    return small_chordal_graph()


@pytest.fixture(scope="session")
def sample_cnf():
    """n=3: two copies of (x1 v x2 v x3) plus (-x1 v -x2 v -x3)."""
    return make_cnf(3, [[1, 2, 3], [1, 2, 3], [-1, -2, -3]])


@pytest.fixture(scope="session")
def sample_reduction(sample_cnf):
    return build_reduction(sample_cnf)


@pytest.fixture(scope="session")
def tiny_cnf():
    """n=1; necessarily unsatisfiable (x1 forced both true and false)."""
    return make_cnf(1, [[1], [1], [-1]])


@pytest.fixture(scope="session")
def tiny_reduction(tiny_cnf):
    return build_reduction(tiny_cnf)
