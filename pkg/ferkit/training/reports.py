# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Multi-run reports: avg/min/max tables and per-run record files."""

import math
import os
from dataclasses import dataclass, field
from typing import Any, List, Optional

from ferkit import config


@dataclass
class RunResult(object):
    """Test outcome of one training run."""

    run: int
    seed: int
    accuracy: float
    confusion: Optional[Any] = None
    best_epoch: int = 0


@dataclass
class RunReport(object):
    """Aggregate of repeated runs of one configuration."""

    label: str
    results: List[RunResult] = field(default_factory=list)
    ledger_total: int = 0
    fingerprint: str = ""

    @property
    def accuracies(self):
        """Test accuracy of every run, in run order."""
        return [result.accuracy for result in self.results]

    @property
    def avg(self):
        """Arithmetic mean accuracy, kept within [min, max]."""
        mean = math.fsum(self.accuracies) / len(self.accuracies)
        return min(max(mean, self.min), self.max)

    @property
    def min(self):
        """Worst run."""
        return min(self.accuracies)

    @property
    def max(self):
        """Best run."""
        return max(self.accuracies)

    @property
    def best(self):
        """Result with the highest accuracy; ties go to the earlier run."""
        return max(self.results, key=lambda result: result.accuracy)

    @property
    def confusion(self):
        """Confusion matrix of the best run."""
        return self.best.confusion

    def row(self):
        """Table cells: label, avg, min, max, parameters."""
        return (
            self.label,
            "{0:.2f}".format(self.avg),
            "{0:.2f}".format(self.min),
            "{0:.2f}".format(self.max),
            str(self.ledger_total),
        )

    def run_lines(self):
        """One ``run, epoch, split, metric, value`` record per run.

        Run ids are ``<config fingerprint>/<run index>``.
        """
        return [
            "{0}/{1}, {2}, test, accuracy, {3:.4f}".format(
                self.fingerprint, result.run, result.best_epoch,
                result.accuracy,
            )
            for result in self.results
        ]


REPORT_HEADER = ("Model", "Avg", "Min", "Max", "Parameters")


def format_report(reports):
    """Aligned plain-text table with one row per report."""
    lines = [REPORT_HEADER] + [report.row() for report in reports]
    widths = [max(len(line[col]) for line in lines)
              for col in range(len(REPORT_HEADER))]
    return "\n".join(
        "  ".join(
            cell.ljust(width) if col == 0 else cell.rjust(width)
            for col, (cell, width) in enumerate(zip(line, widths))
        ).rstrip()
        for line in lines
    )


def format_confusion(matrix, labels=None):
    """Confusion matrix rows prefixed by the true class."""
    labels = labels or [str(index) for index in range(len(matrix))]
    width = max(len(label) for label in labels)
    return "\n".join(
        "{0}  {1}".format(
            label.ljust(width), " ".join("{0:5d}".format(int(value))
                                         for value in row)
        )
        for label, row in zip(labels, matrix)
    )


def write_report(reports, directory, labels=None):
    """Write the report table and run records into ``directory``."""
    os.makedirs(directory, exist_ok=True)
    report_path = os.path.join(directory, config.FERKIT_REPORT_FILE)
    runs_path = os.path.join(directory, config.FERKIT_RUNS_FILE)
    with open(report_path, "w") as fp:
        fp.write(format_report(reports) + "\n")
        for report in reports:
            fp.write("\n{0} (config {1}), best run {2}\n".format(
                report.label, report.fingerprint, report.best.run
            ))
            if report.confusion is not None:
                fp.write(format_confusion(report.confusion, labels) + "\n")
    with open(runs_path, "w") as fp:
        for report in reports:
            for line in report.run_lines():
                fp.write(line + "\n")
    return report_path, runs_path
