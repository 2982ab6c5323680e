import pytest

from topoindex.graph import Graph, path_graph, star_graph

# Worked-example graph; vertex names x u v r p s t z y map to 0..8.
G9_EDGES = [(0, 1), (1, 2), (1, 3), (2, 4), (4, 6), (4, 5), (6, 7), (6, 8), (8, 7)]
X, U, V, R, P, S, T, Z, Y = range(9)


@pytest.fixture
def g9():
    return Graph(9, G9_EDGES)


@pytest.fixture
def p8():
    return path_graph(8)


@pytest.fixture
def star8():
    return star_graph(8)


# One line per acceptance criterion, repeated in the terminal summary so the
# verdicts are visible without -s.
_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(capsys):
    def report(number, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
        _ACCEPTANCE.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
