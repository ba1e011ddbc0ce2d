# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Optimizer, training loop, evaluation and multi-run reports."""

from .api import HISTORY_FORMAT, Evaluation, HistoryRecord, TrainResult, \
    evaluate, load_dataset, multi_run, predict, prepare, train, \
    train_and_evaluate
from .config import DATASETS, TrainConfig
from .experiments import EXPERIMENTS, Experiment, apply_experiment, \
    experiment_group, get_experiment
from .optimizer import Adam, AdamMoments, adam_step
from .reports import RunReport, RunResult, format_report, write_report

__all__ = (
    "Adam",
    "AdamMoments",
    "DATASETS",
    "EXPERIMENTS",
    "Evaluation",
    "Experiment",
    "HISTORY_FORMAT",
    "HistoryRecord",
    "RunReport",
    "RunResult",
    "TrainConfig",
    "TrainResult",
    "adam_step",
    "apply_experiment",
    "evaluate",
    "experiment_group",
    "format_report",
    "get_experiment",
    "load_dataset",
    "multi_run",
    "predict",
    "prepare",
    "train",
    "train_and_evaluate",
    "write_report",
)
