import pytest
from hypothesis import strategies as st

from urelset.naturals import first_number, from_int
from urelset.objects import mk_individual, mk_set

ATOMS = ("p", "q", "r")


def objects(atoms=ATOMS, max_leaves=10):
    leaves = st.sampled_from(atoms).map(mk_individual)
    return st.recursive(
        leaves,
        lambda children: st.lists(children, min_size=1, max_size=4).map(mk_set),
        max_leaves=max_leaves,
    )


@pytest.fixture
def p():
    return mk_individual("p")


@pytest.fixture
def q():
    return mk_individual("q")


@pytest.fixture
def alpha(p, q):
    return first_number(p, q)


@pytest.fixture
def num(alpha):
    return lambda k: from_int(k, alpha)
