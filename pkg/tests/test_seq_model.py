import itertools
import math

import pytest
from hypothesis import given, strategies as st

from mnesor.lattice import DomainMismatch
from mnesor.seq_model import (
    SeqMnesor,
    SeqSpace,
    Universe,
    act,
    add,
    enumerate_tuples,
    from_fixture,
    support,
)


def names(x):
    return x.names


def test_worked_sums(geo_space):
    s = geo_space
    assert names(s.add(s.tuple("Germany", "Luxembourg"), s.tuple("France", "Poland"))) == [
        "Germany", "Luxembourg", "France", "Poland"]
    assert names(s.add(s.tuple("Slovenia", "Slovakia"), s.tuple("Slovakia", "Slovenia"))) == [
        "Slovenia", "Slovakia"]
    assert names(s.add(s.tuple("Slovakia", "Slovenia"), s.tuple("Slovenia", "Slovakia"))) == [
        "Slovakia", "Slovenia"]
    assert names(s.add(s.tuple("Denmark", "Norway"), s.tuple("Denmark"))) == ["Denmark", "Norway"]


def test_worked_filters(geo_space):
    s = geo_space
    eu = s.granular("EU")
    assert names(s.act(s.tuple("France", "Russia", "Sweden"), eu)) == ["France", "Sweden"]
    assert names(s.act(s.tuple("Germany"), s.granular("UN"))) == ["Germany"]
    assert s.act(s.tuple("India", "Taiwan"), eu) == s.zero


def test_geo_fixture_memberships(geo_space):
    s = geo_space
    m = s.named
    inside = lambda g, a: m[g] >> s.universe.index(a) & 1
    for a in ("France", "Sweden", "Italy"):
        assert inside("EU", a)
    for a in ("Russia", "India", "Taiwan"):
        assert not inside("EU", a)
    assert inside("NATO", "Italy") and not inside("NATO", "Switzerland")
    assert inside("IOC", "France") and inside("IOC", "Germany")
    assert s.granular("UN") == s.lattice.top_g


def test_support_is_absorption_witness(geo_space):
    s = geo_space
    x = s.tuple("Italy")
    assert s.support(x) == s.subset("Italy")
    assert s.act(s.add(x, s.tuple("Switzerland")), s.support(x)) == x
    assert s.support(s.zero) == s.lattice.bottom_g
    ab = SeqSpace("ab")
    assert ab.support(ab.tuple("b", "a")) == ab.subset("a", "b")


def test_enumeration_counts_and_order():
    u2 = Universe(("a", "b"))
    assert [str(t) for t in enumerate_tuples(u2, 2)] == ["[]", "[a]", "[b]", "[a b]", "[b a]"]
    assert len(list(enumerate_tuples(Universe(tuple("abc")), 3))) == 16
    assert [str(t) for t in enumerate_tuples(u2, 0)] == ["[]"]
    with pytest.raises(ValueError):
        list(enumerate_tuples(u2, 3))


@pytest.mark.parametrize("n", range(5))
def test_enumeration_is_duplicate_free_and_complete(n):
    u = Universe(tuple("abcd"[:n]))
    ts = list(enumerate_tuples(u))
    assert len(ts) == len(set(ts)) == sum(math.perm(n, k) for k in range(n + 1))


def test_tuples_reject_repeats_and_mixed_universes():
    u = Universe(("a", "b"))
    with pytest.raises(ValueError):
        SeqMnesor(u, (0, 0))
    with pytest.raises(DomainMismatch):
        add(SeqMnesor(u, (0,)), SeqMnesor(Universe(("p", "q")), (0,)))
    s, t = SeqSpace("ab"), SeqSpace("ab")
    with pytest.raises(DomainMismatch):
        s.act(s.tuple("a"), t.subset("a"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monoid_laws_exhaustive(n):
    s = SeqSpace("abc"[:n])
    els = s.elements()
    for x in els:
        assert s.add(s.zero, x) == x == s.add(x, s.zero)
        assert s.add(x, x) == x
    for x, y, z in itertools.product(els, repeat=3):
        assert s.add(s.add(x, y), z) == s.add(x, s.add(y, z))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_action_laws_exhaustive(n):
    s = SeqSpace("abc"[:n])
    els, gs = s.elements(), s.lattice.granulars()
    for x, g, h in itertools.product(els, gs, gs):
        assert s.act(s.act(x, g), h) == s.act(x, g & h)
    for x, y, g in itertools.product(els, els, gs):
        assert s.act(s.add(x, y), g) == s.add(s.act(x, g), s.act(y, g))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_suffix_and_prefix_characterizations(n):
    s = SeqSpace("abc"[:n])
    for x, y in itertools.product(s.elements(), repeat=2):
        assert (s.add(x, y) == x) == (support(y) & ~support(x) == 0)
        assert (s.add(x, y) == y) == (y.entries[: len(x)] == x.entries)


perm_tuples = st.permutations(range(5)).flatmap(
    lambda p: st.integers(0, 5).map(lambda k: tuple(p[:k]))
)
U5 = Universe(tuple("abcde"))


@given(perm_tuples, perm_tuples, st.integers(0, 31))
def test_add_then_filter_commutes(xs, ys, mask):
    x, y = SeqMnesor(U5, xs), SeqMnesor(U5, ys)
    assert act(add(x, y), mask) == add(act(x, mask), act(y, mask))
    assert act(add(x, y), support(x)) == x


def test_fixture_loading_and_restrict():
    s = from_fixture({"universe": ["p", "q", "r"], "granulars": {"G": ["q", "r"]}})
    assert s.granular("G") == s.subset("q", "r")
    r = s.restrict(2)
    assert r.universe.atoms == ("p", "q")
    assert r.granular("G") == r.subset("q")
    with pytest.raises(KeyError):
        from_fixture({"universe": ["p"], "granulars": {"G": ["zz"]}})
