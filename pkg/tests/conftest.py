import pytest

from mnesor import lattice as L
from mnesor.lattice_model import make_self_action
from mnesor.seq_model import SeqSpace, geo


@pytest.fixture(scope="session")
def geo_space():
    return geo()


@pytest.fixture(scope="session")
def ab():
    return SeqSpace("ab")


@pytest.fixture(scope="session")
def abc():
    return SeqSpace("abc")


@pytest.fixture(scope="session")
def self_chain3():
    return make_self_action(L.chain(3))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            title = dict(getattr(rep, "user_properties", [])).get("criterion")
            if title and rep.when == "call" or (title and outcome == "error"):
                rows.append((title, outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for title, outcome in sorted(rows, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {title}")


@pytest.fixture(autouse=True)
def _criterion_title(request, record_property):
    marker = request.node.get_closest_marker("criterion")
    if marker:
        n, title = marker.args
        record_property("criterion", f"{n}. {title}")
