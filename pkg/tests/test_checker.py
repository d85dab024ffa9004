import itertools
import json
from pathlib import Path

import pytest

from mnesor import lattice as L
from mnesor.algebra import MnesorSpace, catalog
from mnesor.checker import (
    CheckBounds,
    NotAViolation,
    UnknownLaw,
    check_all,
    check_law,
    minimize,
    violates,
)
from mnesor.lattice_model import make_self_action
from mnesor.seq_model import SeqSpace



def distributive_builtins():
    return [lat for lat in L.builtin_lattices() if L.is_distributive(lat) is True]

GOLDEN = Path(__file__).parent / "golden" / "seq_u3_matrix.json"


def _shape_of_gdist(s, cex):
    # a two-entry tuple whose first entry only mu keeps and second entry only lam keeps
    x, lam, mu = cex["x"], cex["lam"], cex["mu"]
    assert len(x) == 2
    first, second = x.entries
    assert not lam.id >> first & 1 and lam.id >> second & 1
    assert mu.id >> first & 1


def test_gdist_fails_at_two_atoms(ab):
    r = check_law(ab, "A-GDIST")
    assert r.status == "fail"
    assert r.rendered == {"x": "[a b]", "lam": "{b}", "mu": "{a}"}
    _shape_of_gdist(ab, r.counterexample)
    x, lam, mu = (r.counterexample[k] for k in ("x", "lam", "mu"))
    assert str(ab.add(ab.act(x, lam), ab.act(x, mu))) == "[b a]"
    assert str(ab.act(x, lam | mu)) == "[a b]"


@pytest.mark.parametrize("atoms", ["a", "ab", "abc", "abcd"])
def test_unital_passes(atoms):
    assert check_law(SeqSpace(atoms), "A-UNITAL").status == "pass"


def test_gdist_passes_on_chain(self_chain3):
    r = check_law(self_chain3, "A-GDIST")
    assert r.status == "pass" and r.instances == 27


def test_unknown_law(ab):
    with pytest.raises(UnknownLaw):
        check_law(ab, "T-NOPE")


def test_seq_matrix_matches_oracle(abc):
    golden = json.loads(GOLDEN.read_text())
    report = check_all(abc)
    assert report.bounds == {"max_mnesor_enumeration": None, "total": True}
    got = [
        {k: row[k] for k in ("name", "status", "instances", "vacuous", "counterexample")}
        for row in report.to_json()["laws"]
    ]
    assert got == golden["laws"]


def test_seq_highlights(abc):
    st = check_all(abc).statuses()
    for name in ("A-MON-ID", "A-MON-ASSOC", "A-UNITAL", "A-MDIST", "A-ASSOC-ACT", "A-ABSORB",
                 "T-IDEM", "T-PRIORITY", "T-SFX-II-III", "T-WIT-STAB", "T-BOT", "T-MONO-M"):
        assert st[name] == "pass", name
    for name in ("A-GDIST", "T-PFX-II-III", "T-COMPAT-ADD", "T-MONO-G"):
        assert st[name] == "fail", name


@pytest.mark.parametrize("lat", distributive_builtins(), ids=lambda l: l.name)
def test_self_action_distributive_all_pass(lat):
    report = check_all(make_self_action(lat))
    assert set(report.statuses().values()) == {"pass"}


@pytest.mark.parametrize("lat", [L.diamond_m3(), L.pentagon_n5()], ids=lambda l: l.name)
def test_self_action_nondistributive_fails(lat):
    s = make_self_action(lat)
    report = check_all(s)
    failed = {r.law for r in report.failed}
    assert failed & {"A-MDIST", "A-GDIST"}
    for r in report.failed:
        assert violates(s, r.law, r.counterexample)


class _RightZero(MnesorSpace):
    """{0, p, q} with u + v = v for nonzero v; the action is trivial."""

    name = "right-zero"

    def __init__(self, lattice):
        self.lattice = lattice

    zero = "0"

    def add(self, x, y):
        return x if y == "0" else y

    def act(self, x, g):
        return x

    def elements(self, bound=None):
        return ["0", "p", "q"]

    def is_total(self, bound):
        return True

    def size(self, x):
        return 0 if x == "0" else 1


def _bottomless():
    c = L.chain(2)
    return L.FiniteLattice("chain-no-bottom", c.labels, c.join_table, c.meet_table, c.top, None)


def test_bottomless_lattice_skips_bot():
    report = check_all(_RightZero(_bottomless()))
    r = report["T-BOT"]
    assert r.status == "skipped" and r.reason
    assert r.counterexample is None
    # every other row was actually evaluated
    assert all(x.status != "skipped" for x in report.results if x.law != "T-BOT")


def test_right_zero_model_breaks_order_laws():
    report = check_all(_RightZero(L.two_point()))
    st = report.statuses()
    assert st["T-ORD-ANTISYM"] == "fail"
    assert st["T-BOT"] == "fail"
    assert report["T-ORD-ANTISYM"].rendered == {"x": "p", "y": "q"}


def test_minimize_is_idempotent(ab):
    r = check_law(ab, "A-GDIST")
    assert minimize(ab, "A-GDIST", r.counterexample) == r.counterexample


def test_minimize_gdist_from_large_violation(abc):
    law = catalog()["A-GDIST"]
    big = {"x": abc.tuple("c", "b", "a"), "lam": abc.subset("a"), "mu": abc.subset("b", "c")}
    assert violates(abc, law, big)
    small = minimize(abc, law, big)
    _shape_of_gdist(abc, small)
    # nothing of total size < 2 violates
    for x in abc.elements(1):
        for g, h in itertools.product(abc.lattice.granulars(), repeat=2):
            assert not violates(abc, law, {"x": x, "lam": g, "mu": h})


def test_minimize_compat_add(ab):
    big = {"x": ab.zero, "y": ab.tuple("a"), "a": ab.tuple("b", "a")}
    assert violates(ab, "T-COMPAT-ADD", big)
    small = minimize(ab, "T-COMPAT-ADD", big)
    assert {k: str(v) for k, v in small.items()} == {"x": "[]", "y": "[a]", "a": "[b]"}
    x, y, a = small["x"], small["y"], small["a"]
    assert str(ab.add(ab.add(x, a), ab.add(y, a))) == "[b a]"
    assert str(ab.add(y, a)) == "[a b]"


def test_minimize_rejects_non_violation(ab):
    with pytest.raises(NotAViolation):
        minimize(ab, "T-IDEM", {"x": ab.tuple("a")})


def test_bounds_must_be_positive():
    with pytest.raises(ValueError):
        CheckBounds(0)


def test_failures_persist_as_bounds_grow():
    s = SeqSpace("abc")
    previous = set()
    for b in (1, 2, 3):
        report = check_all(s, CheckBounds(b))
        failed = {r.law for r in report.failed}
        assert previous <= failed
        previous = failed
        assert report.bounds["total"] == (b == 3)


def test_parallel_report_is_identical(abc):
    assert check_all(abc, jobs=1).dumps() == check_all(abc, jobs=3).dumps()
