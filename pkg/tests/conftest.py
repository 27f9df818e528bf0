import pytest

from regdim.algebra.linalg import PrimeField
from regdim.algebra.monomials import MonomialIdeal, minimalize
from regdim.homology.cech import clear_slice_cache
from regdim.homology.taylor import clear_taylor_cache


def ideal(*gens, n=None) -> MonomialIdeal:
    return minimalize(gens, n)


@pytest.fixture(autouse=True)
def fresh_caches():
    yield
    clear_slice_cache()
    clear_taylor_cache()


@pytest.fixture
def gf2():
    return PrimeField(p=2)


@pytest.fixture
def gf3():
    return PrimeField(p=3)


@pytest.fixture
def square():
    """(x^2) in one variable."""
    return ideal((2,))


@pytest.fixture
def principal_x1():
    """(x1) in two variables."""
    return ideal((1, 0))


@pytest.fixture
def maximal_2():
    return ideal((1, 0), (0, 1))


@pytest.fixture
def maximal_3():
    return ideal((1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def hypersurface():
    """x1*x2 in two variables."""
    return ideal((1, 1))


@pytest.fixture
def zero_1():
    return MonomialIdeal(n=1)


@pytest.fixture
def mixed_powers():
    return ideal((2, 1), (0, 3))


SMALL_IDEALS = [
    ((2,),),
    ((1, 0),),
    ((1, 1),),
    ((1, 0), (0, 1)),
    ((2, 1), (0, 3)),
    ((1, 1, 0), (0, 1, 1)),
    ((2, 0, 0), (1, 1, 0), (0, 0, 2)),
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
]


@pytest.fixture(params=SMALL_IDEALS, ids=lambda gens: ",".join("".join(map(str, g)) for g in gens))
def small_ideal(request):
    return ideal(*request.param)
