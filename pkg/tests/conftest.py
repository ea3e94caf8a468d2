from itertools import combinations
from pathlib import Path

import pytest

from dompoly.catalog import load_catalog

DATA = Path(__file__).parent / "data"


def brute_counts(g):
    """d(G, i) by checking every subset against the set definition of domination."""
    adj = g.adj
    counts = [0] * (g.n + 1)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            chosen = set(s)
            if all(v in chosen or adj[v] & chosen for v in range(g.n)):
                counts[k] += 1
    return counts


@pytest.fixture(scope="session")
def catalog_le5():
    return load_catalog(DATA / "graphs_le5.g6")


@pytest.fixture(scope="session")
def catalog_le6(catalog_le5):
    return catalog_le5 + load_catalog(DATA / "graphs6.g6")


@pytest.fixture(scope="session")
def connected6():
    return load_catalog(DATA / "connected6.g6")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        detail = [l.split("] ", 1)[1] for l in report.capstdout.splitlines() if l.startswith("[acceptance]")]
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, detail[0] if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in _acceptance:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status:5} {name}" + (f"  ({detail})" if detail else ""))
