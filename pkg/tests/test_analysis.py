"""Histograms, weighted averages, and comparison statistics."""

from fractions import Fraction

import pytest

import ncvsynth as nv
from ncvsynth import IncompleteTable, MetricMismatch
from ncvsynth.analysis import CostHistogram, compare_costs, render_4dp

TABLE1_NCV111 = (1, 9, 51, 187, 417, 714, 1373, 3176, 4470, 4122, 10008, 5036, 1236, 8340, 1180)
TABLE1_NCT_GC = (1, 12, 102, 625, 2780, 8921, 17049, 10253, 577)


def _fake_costs(row):
    costs = {}
    i = 0
    for cost, count in enumerate(row):
        for _ in range(count):
            costs[("fn", i)] = cost
            i += 1
    return costs


def test_weighted_average_rendering_from_published_rows():
    h111 = CostHistogram.from_costs(_fake_costs(TABLE1_NCV111))
    assert h111.weighted_average_text == "10.0319"
    hgc = CostHistogram.from_costs(_fake_costs(TABLE1_NCT_GC))
    assert hgc.weighted_average_text == "5.8655"


def test_incomplete_counts_rejected():
    with pytest.raises(IncompleteTable):
        CostHistogram.from_costs({tuple(range(8)): 0})


def test_partial_histogram_allowed_when_requested():
    h = CostHistogram.from_costs({"a": 1, "b": 3}, expect_total=None)
    assert h.total == 2 and h.weighted_average == Fraction(2)


def test_histogram_of_complete_table(ncv111_full):
    h = nv.histogram(ncv111_full)
    assert h.total == nv.N_FUNCTIONS
    assert h.as_row() == TABLE1_NCV111


def test_render_4dp():
    assert render_4dp(Fraction(1, 3)) == "0.3333"
    assert render_4dp(Fraction(2, 3)) == "0.6667"
    assert render_4dp(Fraction(5, 1)) == "5.0000"


def test_compare_costs_self_comparison(ncv111_full):
    stats = compare_costs(ncv111_full.costs, ncv111_full.costs)
    assert stats.pearson_correlation == pytest.approx(1.0)
    assert stats.max_ratio == 1
    assert stats.average_ratio == 1
    assert stats.equal_count == nv.N_FUNCTIONS


def test_compare_costs_mismatched_domains():
    with pytest.raises(MetricMismatch):
        compare_costs({"a": 1}, {"b": 1})


def test_compare_requires_matching_metric(nct_gc, ncv111_full):
    with pytest.raises(MetricMismatch):
        nv.compare(nct_gc, ncv111_full, nv.NCV_012)


def test_comparison_report_invariants(comparison_111):
    report = comparison_111
    for func, gc, sub, sub_min, sub_max, ncv_opt in report.rows:
        assert ncv_opt <= sub_min <= sub <= sub_max
    assert report.witness.equal_count <= report.best_case.equal_count
    assert report.best_case.max_ratio <= report.worst_case.max_ratio
    assert report.max_ratio == report.worst_case.max_ratio
    assert report.max_ratio >= report.average_ratio >= 1
    lines = report.summary_lines()
    assert lines[0].startswith("#summary metric=ncv-111")
    assert any("worst-case" in line for line in lines)
