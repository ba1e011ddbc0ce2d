# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Multi-run report tests."""

import numpy as np

from ferkit.training import RunReport, RunResult, format_report, \
    write_report
from ferkit.training.reports import format_confusion


def _report(label="base", accuracies=(80.0, 82.0, 84.0, 86.0)):
    confusion = np.eye(2, dtype=np.int64)
    return RunReport(
        label=label,
        results=[
            RunResult(run=run, seed=run, accuracy=accuracy,
                      confusion=confusion * (run + 1), best_epoch=run + 1)
            for run, accuracy in enumerate(accuracies)
        ],
        ledger_total=645472,
        fingerprint="abc123",
    )


def test_row_has_two_decimals():
    """avg/min/max with two decimals and the plain ledger total."""
    assert _report().row() == ("base", "83.00", "80.00", "86.00", "645472")


def test_equal_runs_average_to_the_common_value():
    """min <= avg <= max holds when every run scores the same."""
    report = _report(accuracies=(0.1, 0.1, 0.1))
    assert report.min <= report.avg <= report.max
    assert report.avg == 0.1


def test_best_run_and_its_confusion():
    """Ties go to the earlier run."""
    report = _report(accuracies=(90.0, 70.0, 90.0))
    assert report.best.run == 0
    np.testing.assert_array_equal(report.confusion, np.eye(2))


def test_run_lines():
    """One record per run in the history line format."""
    assert _report(accuracies=(80.0, 82.5)).run_lines() == [
        "abc123/0, 1, test, accuracy, 80.0000",
        "abc123/1, 2, test, accuracy, 82.5000",
    ]


def test_format_report_alignment():
    """Header plus one right-aligned row per report."""
    text = format_report([_report(), _report("base + Sobel", (70.0,))])
    lines = text.splitlines()
    assert lines[0].split() == ["Model", "Avg", "Min", "Max", "Parameters"]
    assert lines[1].startswith("base ")
    assert lines[2].startswith("base + Sobel")
    assert lines[1].endswith("645472") and lines[2].endswith("645472")
    assert len(lines[1]) == len(lines[2])


def test_format_confusion():
    """Rows are prefixed by their labels."""
    text = format_confusion(np.array([[3, 1], [0, 4]]), ["sad", "happy"])
    assert text.splitlines() == [
        "sad        3     1",
        "happy      0     4",
    ]


def test_write_report(tmp_path):
    """Report table and run records land in the output directory."""
    report_path, runs_path = write_report([_report()], str(tmp_path),
                                          labels=["a", "b"])
    with open(report_path) as fp:
        text = fp.read()
    assert "base (config abc123), best run 3" in text
    assert format_report([_report()]) in text
    with open(runs_path) as fp:
        assert fp.read().splitlines() == _report().run_lines()
