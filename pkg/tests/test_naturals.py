import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from urelset.errors import (
    EqualAtoms,
    FirstNumber,
    MixedAlpha,
    NoNumberMember,
    NonNumberSetMember,
    NotANumber,
    NotASet,
    NotIndividuals,
    PreconditionFailed,
)
from urelset.naturals import (
    Nat,
    Ordering,
    add,
    compare,
    first_number,
    from_int,
    greatest_number,
    induction_check,
    is_number,
    leq,
    lt,
    make_nat,
    mul,
    pred,
    smallest_number,
    succ,
    to_int,
)
from urelset.objects import cup, is_transitive, member, mk_individual, mk_set, pair, subset


def listed(alpha, k):
    """The number k built by listing members: n+1 = members(n) plus n."""
    x = alpha.obj
    for _ in range(k):
        x = mk_set(list(x.members) + [x])
    return x


def test_first_number(p, q, alpha):
    assert alpha.obj == mk_set([p, q])
    assert is_number(alpha.obj, alpha)
    with pytest.raises(EqualAtoms):
        first_number(p, p)
    with pytest.raises(NotIndividuals):
        first_number(mk_set([p, q]), q)


def test_recognizer_examples(p, alpha, num):
    assert is_number(num(1).value, alpha)
    assert not is_number(mk_set([alpha.obj]), alpha)
    assert not is_number(p, alpha)
    assert not is_number(mk_individual("r"), alpha)
    assert not is_number(mk_set([p, mk_individual("r")]), alpha)
    with pytest.raises(NotANumber):
        make_nat(mk_set([alpha.obj]), alpha)


def test_from_int_shapes(p, q, alpha, num):
    zero, one = alpha.obj, mk_set([p, q, alpha.obj])
    assert num(0).value is zero
    assert num(1).value is one
    assert num(2).value is mk_set([p, q, zero, one])
    assert to_int(num(0)) == 0


@pytest.mark.parametrize("k", range(21))
def test_round_trip(alpha, num, k):
    n = num(k)
    assert to_int(n) == k
    assert n.value is listed(alpha, k)
    assert len(n.value.members) == k + 2


def test_successor_and_predecessor(alpha, num):
    for k in range(11):
        s = num(k)
        assert to_int(succ(s)) == k + 1
        assert pred(succ(s)) == s
    assert pred(num(1)) == num(0)
    with pytest.raises(FirstNumber):
        pred(num(0))


def test_order(num):
    for b in range(1, 11):
        assert lt(num(0), num(b))
    assert not lt(num(4), num(4))
    for i, j in itertools.product(range(11), repeat=2):
        assert leq(num(i), num(j)) == (lt(num(i), num(j)) or i == j)


def test_compare_matches_integers(num):
    expected = {-1: Ordering.LESS, 0: Ordering.EQUAL, 1: Ordering.GREATER}
    assert compare(num(0), num(1)) is Ordering.LESS
    for i, j in itertools.product(range(13), repeat=2):
        assert compare(num(i), num(j)) is expected[(i > j) - (i < j)]


def test_mixed_alpha(num):
    other = first_number(mk_individual("r"), mk_individual("s"))
    with pytest.raises(MixedAlpha):
        lt(num(1), from_int(1, other))
    with pytest.raises(MixedAlpha):
        add(num(1), from_int(1, other))


def test_smallest_and_greatest(p, alpha, num):
    v = mk_set([num(1).value, num(3).value, num(2).value])
    assert smallest_number(v, alpha) == num(1)
    assert greatest_number(v, alpha) == num(3)
    assert smallest_number(mk_set([p, num(2).value]), alpha) == num(2)
    for k in range(1, 11):
        assert greatest_number(num(k).value, alpha) == pred(num(k))


def test_extremal_errors(p, q, alpha, num):
    with pytest.raises(NotASet):
        smallest_number(p, alpha)
    with pytest.raises(NoNumberMember):
        greatest_number(mk_set([p, q]), alpha)
    with pytest.raises(NonNumberSetMember):
        smallest_number(mk_set([num(1).value, mk_set([alpha.obj])]), alpha)


def test_induction_success(alpha, num):
    rep = induction_check(num(0), num(5), lambda x: is_number(x, alpha))
    assert rep.holds and rep.instances == 6
    rep = induction_check(num(2), num(6), lambda x: len(x.members) - 2 >= 2)
    assert rep.holds


def test_induction_step_failure(alpha, num):
    even = lambda x: (len(x.members) - 2) % 2 == 0
    with pytest.raises(PreconditionFailed) as info:
        induction_check(num(0), num(5), even)
    assert info.value.clause == "b"
    assert info.value.witness is num(0).value


def test_induction_base_failure(num):
    with pytest.raises(PreconditionFailed) as info:
        induction_check(num(1), num(3), lambda x: False)
    assert info.value.clause == "a"


def test_induction_requires_order(num):
    with pytest.raises(ValueError):
        induction_check(num(3), num(3), lambda x: True)


def test_arithmetic_examples(num):
    assert add(num(0), num(1)) == num(1)
    for a in range(9):
        assert add(num(a), num(0)) == num(a)
        assert mul(num(a), num(1)) == add(num(0), num(a))
        assert add(num(a), num(1)) == succ(num(a))
        assert mul(num(a), num(0)) == num(0)


def test_arithmetic_matches_integers(num):
    for a, b in itertools.product(range(9), repeat=2):
        assert to_int(add(num(a), num(b))) == a + b
        assert to_int(mul(num(a), num(b))) == a * b


def test_zero_commutes(num):
    for b in range(11):
        assert add(num(0), num(b)) == add(num(b), num(0))


def test_number_structure(alpha, num):
    for k in range(11):
        n = num(k).value
        assert is_transitive(n)
        assert all(is_transitive(x) for x in n.members)
        for x in n.members:
            if not member(x, alpha.obj):
                assert is_number(x, alpha)
            if not member(x, x):
                assert member(cup(x, pair(x, x)), cup(n, pair(n, n)))


def test_subset_dichotomy(num):
    for i, j in itertools.product(range(11), repeat=2):
        s, t = num(i).value, num(j).value
        if subset(s, t):
            assert member(s, t) or s is t


def test_successor_injective(num):
    for i, j in itertools.product(range(11), repeat=2):
        if succ(num(i)) == succ(num(j)):
            assert i == j


@given(st.integers(0, 12), st.integers(0, 12))
def test_monotone_successor(i, j):
    alpha = first_number(mk_individual("p"), mk_individual("q"))
    x, s = from_int(i, alpha), from_int(j, alpha)
    if member(x.value, s.value):
        assert member(succ(x).value, succ(s).value)


def test_nat_repr(num):
    assert repr(num(3)) == "Nat(3)"
    assert isinstance(num(3), Nat)
