import itertools
import json

import pytest
from hypothesis import given, strategies as st

from mnesor import lattice as L
from mnesor.lattice import DomainMismatch, FiniteLattice, NotALattice, join, leq, meet


def test_powerset_join_is_union():
    lat = L.powerset(["F", "S"])
    assert join(lat["{F}"], lat["{S}"]) == lat["{F S}"]


def test_chain_join_is_max():
    lat = L.chain(3)
    assert join(lat["1"], lat["2"]) == lat["2"]


@pytest.mark.parametrize("lat", L.builtin_lattices(), ids=lambda l: l.name)
def test_top_laws(lat):
    for a in lat.granulars():
        assert a | lat.top_g == lat.top_g
        assert a & lat.top_g == a


def test_powerset_meet_is_intersection():
    lat = L.powerset(["F", "S"])
    assert meet(lat["{F}"], lat["{F S}"]) == lat["{F}"]


def test_n5_incomparable_mid_elements():
    n5 = L.pentagon_n5()
    # c sits beside the chain 0 < a < b < 1
    for mid in ("a", "b"):
        assert meet(n5[mid], n5["c"]) == n5["0"]
        assert not leq(n5[mid], n5["c"])
        assert not leq(n5["c"], n5[mid])
    assert join(n5["a"], n5["c"]) == n5["1"]


def test_leq_examples():
    lat = L.powerset(["F", "S"])
    assert leq(lat["{F}"], lat["{F S}"])
    for a in lat.granulars():
        if a != lat.top_g:
            assert not leq(lat.top_g, a)


def test_mixed_lattices_rejected():
    a, b = L.chain(3), L.chain(3)
    with pytest.raises(DomainMismatch):
        join(a.g(0), b.g(1))
    with pytest.raises(DomainMismatch):
        leq(a.g(0), b.g(1))


def test_granular_must_be_in_carrier():
    with pytest.raises(ValueError):
        L.chain(2).g(5)


@pytest.mark.parametrize("lat", L.builtin_lattices(), ids=lambda l: l.name)
def test_builtins_validate(lat):
    assert L.validate(lat) == []


@pytest.mark.parametrize("lat", L.builtin_lattices(), ids=lambda l: l.name)
def test_leq_is_partial_order(lat):
    els = lat.granulars()
    for a in els:
        assert leq(a, a)
    for a, b in itertools.product(els, repeat=2):
        if leq(a, b) and leq(b, a):
            assert a == b
    for a, b, c in itertools.product(els, repeat=3):
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


def test_validate_reports_noncommutative_cell():
    c = L.chain(3)
    join_t = [list(r) for r in c.join_table]
    join_t[0][1] = 2  # join(0,1) = 2 but join(1,0) = 1
    bad = FiniteLattice("bad", c.labels, join_t, c.meet_table, c.top, c.bottom)
    problems = L.validate(bad)
    assert any(p == "join-commutative: 0, 1" for p in problems)
    assert sum(p.startswith("join-commutative") for p in problems) == 1


def test_m3_is_a_lattice_but_not_distributive():
    m3 = L.diamond_m3()
    assert L.validate(m3) == []
    triple = L.is_distributive(m3)
    assert triple is not True
    atoms = {m3["a"], m3["b"], m3["c"]}
    assert set(triple) == atoms


def test_distributivity_of_standard_families():
    for k in range(5):
        assert L.is_distributive(L.powerset(k)) is True
    for n in range(1, 7):
        assert L.is_distributive(L.chain(n)) is True
    assert L.is_distributive(L.pentagon_n5()) is not True


def test_product_is_componentwise():
    l1, l2 = L.chain(2), L.diamond_m3()
    p = L.product(l1, l2)
    assert L.validate(p) == []
    n2 = len(l2)
    for (a, b), (c, d) in itertools.product(itertools.product(l1.elements, l2.elements), repeat=2):
        i, j = a * n2 + b, c * n2 + d
        assert p.join_table[i][j] == l1.join_table[a][c] * n2 + l2.join_table[b][d]
        assert p.meet_table[i][j] == l1.meet_table[a][c] * n2 + l2.meet_table[b][d]


def test_from_cover_relation_rejects_non_lattice():
    # two maximal elements, no top
    with pytest.raises(NotALattice):
        L.from_cover_relation([("0", "a"), ("0", "b")])
    with pytest.raises(NotALattice):
        L.from_cover_relation([("a", "b"), ("b", "a")])


def test_large_powerset_has_no_tables_until_asked():
    big = L.powerset(17)
    assert len(big) == 1 << 17
    assert "join_table" not in big.__dict__
    g = big.g(0b101) | big.g(0b010)
    assert g.id == 0b111


def test_powerset_tables_match_bit_ops():
    p = L.powerset(3)
    for a, b in itertools.product(p.elements, repeat=2):
        assert p.join_table[a][b] == a | b
        assert p.meet_table[a][b] == a & b
    assert p.labels[0b101] == "{a c}"
    assert p.index("{a c}") == 0b101


@given(st.lists(st.sampled_from("pqrs"), unique=True, min_size=0, max_size=4))
def test_powerset_labels_round_trip(atoms):
    lat = L.powerset(atoms)
    for i in lat.elements:
        assert lat.index(lat.label(i)) == i


@pytest.mark.parametrize(
    "doc",
    [
        {"kind": "powerset", "atoms": ["x", "y"]},
        {"kind": "chain", "n": 4},
        {"kind": "m3"},
        {"kind": "n5"},
        {"kind": "two_point"},
        {"kind": "product", "left": {"kind": "chain", "n": 2}, "right": {"kind": "two_point"}},
        {"kind": "cover", "edges": [["0", "x"], ["x", "1"]]},
    ],
)
def test_fixture_kinds(doc, tmp_path):
    lat = L.from_json(doc)
    assert L.validate(lat) == []
    # the explicit-table form round-trips through a file
    path = tmp_path / "lat.json"
    path.write_text(json.dumps(lat.to_json()))
    again = L.load(path)
    assert again.labels == lat.labels
    assert again.join_table == lat.join_table
    assert again.meet_table == lat.meet_table


def test_table_fixture_is_validated():
    c = L.chain(2).to_json()
    c["join"][0][1] = 0
    with pytest.raises(NotALattice):
        L.from_json(c)


@pytest.mark.parametrize("spec,size", [("chain:4", 4), ("powerset:3", 8), ("m3", 5), ("n5", 5), ("two_point", 2)])
def test_specifiers(spec, size):
    assert len(L.parse_specifier(spec)) == size


def test_bad_specifier():
    with pytest.raises(ValueError):
        L.parse_specifier("cube:3")
