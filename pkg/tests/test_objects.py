import copy
import itertools
import pickle
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from urelset.errors import EmptySet, InvalidName, NoSetMember, NotASet, NoWitness
from urelset.objects import (
    Individual,
    Set,
    cup,
    equal,
    extensionally_equal,
    is_individual,
    is_set,
    is_transitive,
    member,
    mk_individual,
    mk_set,
    pair,
    regularity_witness,
    specification,
    subset,
    union,
)

from .conftest import objects


@pytest.fixture
def a(p, q):
    return mk_set([p, q])


def test_individual_is_self_member(p):
    assert member(p, p)
    assert mk_individual("p") is p


@pytest.mark.parametrize("bad", ["", "1x", "a b", "p-q", None])
def test_invalid_individual_names(bad):
    with pytest.raises(InvalidName):
        mk_individual(bad)


def test_mk_set_canonicalizes(p, q):
    s = mk_set([q, p, p])
    assert s.members == (p, q)
    assert s is mk_set([p, q])


def test_empty_set_refused():
    with pytest.raises(EmptySet):
        mk_set([])


def test_singleton_of_individual_is_the_individual(p, a):
    assert mk_set([p]) is p
    assert pair(p, p) is p
    assert pair(a, a) == mk_set([a])
    assert len(pair(a, a)) == 1


def test_membership(p, q, a):
    assert member(p, a)
    assert not member(a, a)
    assert not member(q, p)


def test_equality(p, q, a):
    assert equal(p, p)
    assert equal(mk_set([p, q]), mk_set([q, p]))
    assert not equal(p, q)
    assert not equal(a, p)


def test_subset(p, q, a):
    # {p} is p, whose only member p belongs to {p,q}
    assert subset(mk_set([p]), a)
    assert subset(a, a)
    assert not subset(a, p)


def test_union(p, a):
    assert union(p) is p
    assert union(a) is a
    assert union(mk_set([a])) is a


def test_cup(p, q, a):
    assert cup(p, q) is a
    assert cup(a, mk_set([a])) == mk_set([p, q, a])


def test_transitivity(p, a):
    assert is_transitive(a)
    assert not is_transitive(mk_set([a]))
    assert is_transitive(p)


def test_specification(p, q, a):
    s = mk_set([p, q, a])
    assert specification(s, is_set) == mk_set([a])
    assert specification(s, lambda u: True) is s
    with pytest.raises(NoWitness):
        specification(a, is_set)
    with pytest.raises(NotASet):
        specification(p, lambda u: True)


def test_regularity_witness(p, q, a):
    b = mk_set([p, q, a])
    assert regularity_witness(mk_set([a, b])) is a
    assert regularity_witness(mk_set([p, a])) is a
    with pytest.raises(NoSetMember):
        regularity_witness(a)
    with pytest.raises(NotASet):
        regularity_witness(p)


def test_canonical_order(p, q, a):
    assert p < q < a
    big = mk_set([p, q, a])
    assert a < big
    assert sorted([big, a, q, p]) == [p, q, a, big]


def test_objects_are_immutable(p, a):
    with pytest.raises(AttributeError):
        p.name = "x"
    with pytest.raises(AttributeError):
        a.members = ()


def test_pickle_and_copy_keep_identity(p, a):
    nested = mk_set([p, a, mk_set([a])])
    assert pickle.loads(pickle.dumps(nested)) is nested
    assert copy.deepcopy(nested) is nested


def test_concurrent_interning():
    results = []

    def build():
        results.append(mk_set([mk_individual("t1"), mk_set([mk_individual("t2"), mk_individual("t3")])]))

    threads = [threading.Thread(target=build) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r is results[0] for r in results)


@given(objects(), objects())
def test_equal_agrees_with_extensional(s, t):
    assert equal(s, t) == extensionally_equal(s, t)


@given(st.lists(objects(), min_size=1, max_size=5), st.randoms())
def test_construction_ignores_order(elems, rnd):
    shuffled = list(elems)
    rnd.shuffle(shuffled)
    assert mk_set(elems) is mk_set(shuffled)


@given(objects())
def test_every_object_has_a_member(t):
    assert t.members


@given(objects(), objects())
def test_individual_axiom(s, p):
    if member(s, p) and member(p, p):
        assert equal(s, p)


@given(objects(), objects(), objects())
def test_substitution(s, t, v):
    if equal(s, t) and member(t, v):
        assert member(s, v)


@given(objects(), objects())
def test_cup_is_union_of_pair(s, t):
    c = cup(s, t)
    assert c is union(pair(s, t))
    assert set(c.members) == set(s.members) | set(t.members)
    assert cup(s, s) is s


@given(objects())
def test_union_members(s):
    v = union(s)
    assert set(v.members) == {u for z in s.members for u in z.members}


@given(objects())
def test_regularity_minimal(s):
    if isinstance(s, Individual) or not any(isinstance(m, Set) for m in s.members):
        return
    v = regularity_witness(s)
    assert member(v, s) and is_set(v)
    assert not any(is_set(u) and member(u, v) for u in s.members)


@given(objects(), objects())
def test_property_list(p, s):
    if is_individual(p) and is_set(s):
        assert not equal(p, s) and not member(s, p)
    if is_set(s):
        assert is_set(union(s))
        assert not member(pair(s, s), pair(s, s))
    if not equal(p, s):
        assert is_set(pair(p, s))


def test_no_duplicate_sets_in_small_universe(p, q):
    level = [p, q]
    for _ in range(2):
        nxt = list(level)
        for k in (1, 2):
            for c in itertools.combinations(level, k):
                nxt.append(mk_set(c))
        level = list({id(x): x for x in nxt}.values())
    assert len(level) == len({repr(x) for x in level})
