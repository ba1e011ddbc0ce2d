# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Training loop, evaluation and repeated runs.

The reference path is single-threaded: batches are visited in the seeded
order and gradients are summed by the tape in node order, so the same
configuration and seed give bit-identical weights.
"""

import logging
import math
import os
from collections import OrderedDict, namedtuple
from dataclasses import dataclass, field, replace
from typing import Any, List

import numpy as np

from ferkit import config
from ferkit.autograd import Tape
from ferkit.datasets import assemble_split, load_ferplus, load_kdef, \
    make_synthetic, shuffle_batches, stack_samples
from ferkit.layers import softmax_cross_entropy
from ferkit.models import build, count_params, save_checkpoint
from ferkit.training.errors import ConfigError, EmptySplitError, \
    NonFiniteLossError
from ferkit.training.optimizer import Adam
from ferkit.training.reports import RunReport, RunResult
from ferkit.utils import log_event

logger = logging.getLogger("ferkit.training")
history_logger = logging.getLogger("ferkit.history")

HISTORY_FORMAT = "%(run)s, %(epoch)s, %(split)s, %(metric)s, %(value)s"
"""One history record per line; no timestamps, so reruns compare equal."""

HistoryRecord = namedtuple(
    "HistoryRecord", ["run", "epoch", "split", "metric", "value"]
)


def _emit(history, record):
    history.append(record)
    fields = record._replace(value="{0:.6f}".format(record.value))._asdict()
    history_logger.info(", ".join(map(str, fields.values())), extra=fields)


def load_dataset(cfg):
    """Raw split of the configured dataset."""
    if cfg.needs_data_dir and not cfg.data_dir:
        raise ConfigError(
            message="Dataset {0} needs a data directory".format(cfg.dataset)
        )
    if cfg.dataset == "ferplus":
        return load_ferplus(
            os.path.join(cfg.data_dir, config.FERKIT_FER2013_CSV),
            os.path.join(cfg.data_dir, config.FERKIT_FERPLUS_CSV),
        )
    if cfg.dataset == "kdef":
        return load_kdef(
            cfg.data_dir, angles=cfg.kdef_angles, seed=cfg.data_seed,
            size=cfg.input_size,
        )
    per_class = None
    if cfg.samples_per_class:
        held_out = max(1, cfg.samples_per_class // 4)
        per_class = dict(train=cfg.samples_per_class, validation=held_out,
                         test=held_out)
    return make_synthetic(
        cfg.dataset.split("-", 1)[1], seed=cfg.data_seed,
        size=cfg.input_size, per_class=per_class,
    )


def prepare(cfg, split):
    """Assemble ``split`` for the configured variant and model input."""
    spec = cfg.spec(split.num_classes)
    return assemble_split(split, cfg.variant, size=spec.input_shape[0])


@dataclass
class Evaluation(object):
    """Top-1 accuracy (percent) and confusion matrix (rows true)."""

    accuracy: float
    confusion: np.ndarray

    @property
    def total(self):
        """Number of evaluated samples."""
        return int(self.confusion.sum())


def predict(model, inputs):
    """Argmax class of every row of ``inputs``."""
    logits = model.forward(Tape(enabled=False), inputs, training=False)
    return np.argmax(logits.data, axis=1)


def evaluate(model, samples, batch_size=None, dtype=None):
    """Accuracy and confusion matrix of ``model`` on assembled samples."""
    if not samples:
        raise EmptySplitError(message="Cannot evaluate on zero samples")
    batch_size = batch_size or config.FERKIT_BATCH_SIZE
    classes = model.num_classes
    confusion = np.zeros((classes, classes), dtype=np.int64)
    for start in range(0, len(samples), batch_size):
        indices = range(start, min(start + batch_size, len(samples)))
        inputs, labels = stack_samples(samples, indices, dtype=dtype)
        np.add.at(confusion, (labels, predict(model, inputs)), 1)
    accuracy = 100.0 * np.trace(confusion) / confusion.sum()
    return Evaluation(accuracy=float(accuracy), confusion=confusion)


@dataclass
class TrainResult(object):
    """Trained model, its history and the assembled data it saw."""

    model: Any
    split: Any
    history: List[HistoryRecord] = field(default_factory=list)
    best_epoch: int = 0
    best_accuracy: float = float("nan")


def _snapshot(model):
    return OrderedDict(
        (name, np.array(array, copy=True))
        for name, array in model.state().items()
    )


def train_epoch(model, optimizer, samples, cfg, epoch):
    """One pass over ``samples``; returns the sample-weighted mean loss."""
    total, seen = 0.0, 0
    for batch, indices in enumerate(
        shuffle_batches(samples, cfg.batch_size, cfg.seed, epoch)
    ):
        inputs, labels = stack_samples(samples, indices, dtype=cfg.dtype)
        tape = Tape()
        logits = model.forward(tape, inputs, training=True)
        loss = softmax_cross_entropy(tape, logits, labels)
        value = loss.item()
        if not math.isfinite(value):
            raise NonFiniteLossError(epoch, batch, value)
        optimizer.zero_grad()
        tape.backward(loss)
        optimizer.step()
        total += value * len(labels)
        seen += len(labels)
    return total / seen


def train(cfg, split, run=0, assembled=None):
    """Train a fresh model on ``split`` and keep the best-validation state.

    ``split`` holds raw images; pass ``assembled`` to reuse an already
    assembled copy. With zero epochs the initialized model is returned
    with an empty history.
    """
    if not split.train:
        raise EmptySplitError(message="The training split is empty")
    data = assembled or prepare(cfg, split)
    spec = cfg.spec(split.num_classes)
    model = build(spec, cfg.seed, dtype=cfg.dtype)
    optimizer = Adam(model.parameters(), lr=cfg.lr, beta1=cfg.beta1,
                     beta2=cfg.beta2, eps=cfg.eps)
    result = TrainResult(model=model, split=data)
    log_event(logger, "train_start", extra=dict(
        run=run, arch=spec.name, variant=spec.variant, seed=cfg.seed,
        train=len(data.train), validation=len(data.validation),
        parameters=count_params(spec).total,
    ))

    best_state = None
    for epoch in range(1, cfg.epochs + 1):
        loss = train_epoch(model, optimizer, data.train, cfg, epoch)
        _emit(result.history,
              HistoryRecord(run, epoch, "train", "loss", loss))
        if data.validation:
            accuracy = evaluate(
                model, data.validation, cfg.batch_size, cfg.dtype
            ).accuracy
            _emit(result.history,
                  HistoryRecord(run, epoch, "validation", "accuracy",
                                accuracy))
        else:
            # no validation samples: the lowest training loss wins
            accuracy = -loss
        if best_state is None or accuracy > result.best_accuracy:
            result.best_epoch, result.best_accuracy = epoch, accuracy
            best_state = _snapshot(model)

    if best_state is not None:
        model.load_state(best_state)
    if cfg.out:
        save_checkpoint(model, cfg.out)
    log_event(logger, "train_end", extra=dict(
        run=run, best_epoch=result.best_epoch,
        best_accuracy=result.best_accuracy,
    ))
    return result


def train_and_evaluate(cfg, split, run=0, assembled=None):
    """Default multi-run trainer: train, then score the test split."""
    trained = train(cfg, split, run=run, assembled=assembled)
    scored = evaluate(trained.model, trained.split.test, cfg.batch_size,
                      cfg.dtype)
    return RunResult(
        run=run, seed=cfg.seed, accuracy=scored.accuracy,
        confusion=scored.confusion, best_epoch=trained.best_epoch,
    )


def multi_run(cfg, runs=None, split=None, trainer=None, label=None):
    """Repeat training with seeds ``seed + 0 .. seed + runs - 1``.

    ``trainer(cfg, split, run=..., assembled=...)`` returns a
    :class:`RunResult`; it defaults to :func:`train_and_evaluate`.
    """
    runs = config.FERKIT_RUNS if runs is None else runs
    if runs < 1:
        raise ConfigError(message="At least one run is needed")
    trainer = trainer or train_and_evaluate
    split = split if split is not None else load_dataset(cfg)
    spec = cfg.spec(split.num_classes)
    assembled = prepare(cfg, split) if split.train else None

    results = []
    for run in range(runs):
        run_cfg = cfg.with_seed(cfg.seed + run)
        if cfg.out:
            run_cfg = replace(
                run_cfg, out=os.path.join(cfg.out, "run-{0}".format(run))
            )
        results.append(
            trainer(run_cfg, split, run=run, assembled=assembled)
        )
    report = RunReport(
        label=label or "{0} {1}{2}".format(
            spec.name, spec.variant, " +STL" if spec.stl_enabled else ""
        ),
        results=results,
        ledger_total=count_params(spec).total,
        fingerprint=cfg.fingerprint(),
    )
    log_event(logger, "multi_run", extra=dict(
        label=report.label, runs=runs, avg=report.avg, min=report.min,
        max=report.max,
    ))
    return report
