import pytest

from proper_orientation.corpus import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    petersen_graph,
    prism_graph,
    star_graph,
)
from proper_orientation.io import format_edge_list


@pytest.fixture
def write_graph(tmp_path):
    def _write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(g))
        return str(path)

    return _write


@pytest.fixture(scope="session")
def named():
    return {
        "K2": complete_graph(2),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K1,3": star_graph(3),
        "K3,3": complete_bipartite_graph(3, 3),
        "K5,5": complete_bipartite_graph(5, 5),
        "petersen": petersen_graph(),
        "prism": prism_graph(3),
    }


_acceptance: list[tuple[str, str, str, float]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call":
        number, title = marker.args
        _acceptance.append((number, title, "PASS" if rep.passed else "FAIL", rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_acceptance, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title} ({duration:.1f}s)")
