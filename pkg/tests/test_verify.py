"""The aggregated verification engine."""

from starzagreb.graphs import Graph, complete_graph
from starzagreb.verify import run_verification
from .conftest import book_graph, family_graphs, random_graphs


def test_passes_on_families_and_random():
    graphs = family_graphs(6) + random_graphs(25, 6) + [book_graph(5), Graph(4)]
    report = run_verification(graphs)
    assert report.passed
    assert report.graphs_checked == len(graphs)
    assert report.failing_graphs == ()
    assert all(c.passed for c in report.checks)


def test_check_names_sorted():
    report = run_verification([complete_graph(4)])
    names = [c.name for c in report.checks]
    assert names == sorted(names)
    assert "recurrence_instances" in names
    assert "zagreb_three_routes" in names


def test_respects_requested_pmax():
    report = run_verification([complete_graph(4)], p_max=20)
    (rec,) = [c for c in report.checks if c.name == "recurrence_instances"]
    assert rec.passed


def test_inject_fault_fails_and_names_graph():
    report = run_verification([complete_graph(4)], inject_fault=True)
    assert not report.passed
    assert report.failing_graphs == ("C~",)
    failed = {c.name for c in report.checks if not c.passed}
    assert "inversion_star_from_frequency" in failed
    assert "zagreb_three_routes" in failed


def test_fault_only_hits_first_graph():
    report = run_verification([complete_graph(4), complete_graph(3)],
                              inject_fault=True)
    assert report.failing_graphs == ("C~",)


def test_tiny_graphs():
    report = run_verification([Graph(0), Graph(1), Graph(2)])
    assert report.passed
