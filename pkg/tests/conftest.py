from __future__ import annotations

import pytest

from graphfp import Graph, annihilation, creation, load_graph, path_word, vertex_word

from util import ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    """One verdict line per acceptance criterion, printed after the run."""
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def h() -> Graph:
    """Two vertices joined by a directed 2-cycle; l = e1 e2 loops at v1."""
    return load_graph(
        {
            "vertices": ["v1", "v2"],
            "edges": [
                {"id": "e1", "src": "v1", "dst": "v2"},
                {"id": "e2", "src": "v2", "dst": "v1"},
            ],
        }
    )


@pytest.fixture(scope="session")
def parallel() -> Graph:
    """Two parallel edges u -> w; the graph that separates the two modes."""
    return load_graph(
        {
            "vertices": ["u", "w"],
            "edges": [
                {"id": "p", "src": "u", "dst": "w"},
                {"id": "q", "src": "u", "dst": "w"},
            ],
        }
    )


@pytest.fixture(scope="session")
def fork() -> Graph:
    """Parallel edges feeding a tail: words p r and q r share a suffix."""
    return load_graph(
        {
            "vertices": ["u", "w", "z"],
            "edges": [
                {"id": "p", "src": "u", "dst": "w"},
                {"id": "q", "src": "u", "dst": "w"},
                {"id": "r", "src": "w", "dst": "z"},
            ],
        }
    )


@pytest.fixture(scope="session")
def selfloops() -> Graph:
    """Disjoint self-loops f at u and g at v."""
    return load_graph(
        {
            "vertices": ["u", "v"],
            "edges": [
                {"id": "f", "src": "u", "dst": "u"},
                {"id": "g", "src": "v", "dst": "v"},
            ],
        }
    )


@pytest.fixture(scope="session")
def tri() -> Graph:
    """Three vertices with two self-loops and a connecting 3-cycle."""
    return load_graph(
        {
            "vertices": ["x", "y", "z"],
            "edges": [
                {"id": "sx", "src": "x", "dst": "x"},
                {"id": "sy", "src": "y", "dst": "y"},
                {"id": "a", "src": "x", "dst": "y"},
                {"id": "b", "src": "y", "dst": "z"},
                {"id": "c", "src": "z", "dst": "x"},
            ],
        }
    )


@pytest.fixture(scope="session")
def h_letters(h):
    """The six generator letters of H keyed by display token."""
    return {
        "v1": creation(vertex_word(h, "v1")),
        "v2": creation(vertex_word(h, "v2")),
        "e1": creation(path_word(h, ["e1"])),
        "e1*": annihilation(path_word(h, ["e1"])),
        "e2": creation(path_word(h, ["e2"])),
        "e2*": annihilation(path_word(h, ["e2"])),
    }
