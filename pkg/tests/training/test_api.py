# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Training loop, evaluation and multi-run tests."""

import os
from dataclasses import replace

import numpy as np
import pytest

from ferkit.autograd import Tensor
from ferkit.datasets import DatasetSplit, assemble_split, make_synthetic
from ferkit.layers.errors import UninitializedStatsError
from ferkit.models import load_checkpoint
from ferkit.training import RunResult, TrainConfig, evaluate, \
    load_dataset, multi_run, train, train_and_evaluate
from ferkit.training.errors import ConfigError, EmptySplitError, \
    NonFiniteLossError

from ..helpers import translated_glyphs


class ConstantModel(object):
    """Always votes for class 0."""

    num_classes = 8

    def forward(self, tape, inputs, training=True):
        """Logits favouring the first class."""
        logits = np.zeros((len(inputs[0]), self.num_classes))
        logits[:, 0] = 1.0
        return Tensor(logits)


def test_constant_predictor_scores_chance(tiny_bars):
    """One sample per class, always class 0: 12.5% accuracy."""
    samples = assemble_split(tiny_bars, "plain", size=16).test
    scored = evaluate(ConstantModel(), samples, batch_size=3)
    assert scored.accuracy == pytest.approx(12.5)
    assert scored.total == 8
    np.testing.assert_array_equal(scored.confusion[:, 0], 1)
    assert scored.confusion[:, 1:].sum() == 0


def test_evaluate_needs_samples():
    """An empty split cannot be scored."""
    with pytest.raises(EmptySplitError):
        evaluate(ConstantModel(), [])


def test_load_dataset_synthetic(mini_config):
    """Synthetic sets hold out a quarter of the training count."""
    split = load_dataset(mini_config)
    assert len(split.train) == 4 * 8
    assert len(split.validation) == len(split.test) == 8


def test_load_dataset_needs_data_dir():
    """File datasets without a directory are a configuration error."""
    with pytest.raises(ConfigError):
        load_dataset(TrainConfig(dataset="kdef"))


def test_load_dataset_ferplus(ferplus_dir):
    """FERplus files are read from the data directory."""
    split = load_dataset(
        TrainConfig(dataset="ferplus", data_dir=str(ferplus_dir))
    )
    assert len(split) == 2


def test_training_is_deterministic(mini_config):
    """Same configuration and seed give bit-identical weights."""
    split = load_dataset(mini_config)
    first = train(mini_config, split)
    second = train(mini_config, split)
    assert first.history == second.history
    state, other = first.model.state(), second.model.state()
    assert list(state) == list(other)
    for name in state:
        np.testing.assert_array_equal(state[name], other[name])


def test_history_records(mini_config):
    """One train loss and one validation accuracy per epoch."""
    result = train(mini_config, load_dataset(mini_config))
    assert [(r.epoch, r.split, r.metric) for r in result.history] == [
        (1, "train", "loss"), (1, "validation", "accuracy"),
        (2, "train", "loss"), (2, "validation", "accuracy"),
    ]
    assert 1 <= result.best_epoch <= 2
    accuracies = [r.value for r in result.history
                  if r.metric == "accuracy"]
    assert result.best_accuracy == max(accuracies)


def test_zero_epochs(mini_config):
    """No epochs: an untrained model that cannot be evaluated."""
    cfg = replace(mini_config, epochs=0)
    result = train(cfg, load_dataset(cfg))
    assert result.history == [] and result.best_epoch == 0
    with pytest.raises(UninitializedStatsError):
        evaluate(result.model, result.split.test)


def test_empty_training_split(mini_config):
    """Training needs training samples."""
    with pytest.raises(EmptySplitError):
        train(mini_config, DatasetSplit())


def test_non_finite_loss_stops_training(mini_config, mocker):
    """A NaN loss names the epoch and batch."""
    mocker.patch("ferkit.training.api.softmax_cross_entropy",
                 return_value=Tensor(np.array(np.nan)))
    with pytest.raises(NonFiniteLossError) as excinfo:
        train(mini_config, load_dataset(mini_config))
    assert (excinfo.value.epoch, excinfo.value.batch) == (1, 0)


def test_checkpoint_of_the_best_epoch(mini_config, tmp_path):
    """The saved model scores like the returned one."""
    cfg = replace(mini_config, out=str(tmp_path), dtype="float32")
    result = train(cfg, load_dataset(cfg))
    loaded = load_checkpoint(str(tmp_path))
    expected = evaluate(result.model, result.split.validation)
    actual = evaluate(loaded, result.split.validation)
    assert actual.accuracy == pytest.approx(expected.accuracy)


def test_train_and_evaluate(mini_config):
    """The default trainer scores the test split."""
    result = train_and_evaluate(mini_config, load_dataset(mini_config),
                                run=2)
    assert result.run == 2 and result.seed == mini_config.seed
    assert 0.0 <= result.accuracy <= 100.0
    assert result.confusion.sum() == 8


def test_multi_run_statistics(mini_config, tiny_bars):
    """avg/min/max of four stubbed runs, seeds offset by the run."""
    seen = []

    def trainer(cfg, split, run=0, assembled=None):
        seen.append((run, cfg.seed, assembled is not None))
        return RunResult(run=run, seed=cfg.seed, accuracy=80.0 + 2 * run)

    report = multi_run(mini_config, runs=4, split=tiny_bars, trainer=trainer)
    assert report.accuracies == [80.0, 82.0, 84.0, 86.0]
    assert (report.avg, report.min, report.max) == (83.0, 80.0, 86.0)
    assert seen == [(run, 3 + run, True) for run in range(4)]
    assert report.best.run == 3
    assert report.label == "mini plain"
    assert report.fingerprint == mini_config.fingerprint()


def test_multi_run_output_directories(mini_config, tiny_bars, tmp_path):
    """Each run writes below its own directory."""
    outs = []

    def trainer(cfg, split, run=0, assembled=None):
        outs.append(cfg.out)
        return RunResult(run=run, seed=cfg.seed, accuracy=50.0)

    multi_run(replace(mini_config, out=str(tmp_path)), runs=2,
              split=tiny_bars, trainer=trainer)
    assert outs == [os.path.join(str(tmp_path), "run-0"),
                    os.path.join(str(tmp_path), "run-1")]


def test_multi_run_needs_a_run(mini_config, tiny_bars):
    """Zero repeats are refused."""
    with pytest.raises(ConfigError):
        multi_run(mini_config, runs=0, split=tiny_bars)


@pytest.mark.slow
def test_toy_learning_beats_chance():
    """A few epochs on oriented bars go well beyond 12.5%."""
    cfg = TrainConfig(arch="mini", dataset="synthetic-bars", input_size=16,
                      epochs=8, batch_size=16, samples_per_class=40, seed=0)
    result = train_and_evaluate(cfg, load_dataset(cfg))
    assert result.accuracy > 50.0


def _validation_trainer(cfg, split, run=0, assembled=None):
    trained = train(cfg, split, run=run, assembled=assembled)
    return RunResult(run=run, seed=cfg.seed,
                     accuracy=trained.best_accuracy,
                     best_epoch=trained.best_epoch)


@pytest.mark.slow
def test_base_model_learns_oriented_bars():
    """30 epochs of the base model separate the eight bar classes."""
    cfg = TrainConfig(arch="base", dataset="synthetic-bars", input_size=64,
                      epochs=30, seed=0)
    split = make_synthetic(
        "bars", seed=0, size=64,
        per_class=dict(train=400, validation=100, test=100),
    )
    trained = train(cfg, split)
    train_accuracy = evaluate(
        trained.model, trained.split.train, cfg.batch_size, cfg.dtype
    ).accuracy
    assert train_accuracy >= 95.0
    assert trained.best_accuracy >= 90.0


@pytest.mark.slow
def test_gradient_channels_help_on_directional_ramps():
    """Sobel channels do at least as well as plain on mean-matched ramps."""
    split = make_synthetic(
        "directional", seed=0, size=64,
        per_class=dict(train=100, validation=50, test=10),
    )
    averages = {}
    for variant in ("plain", "sobel-concat"):
        cfg = TrainConfig(arch="base", variant=variant,
                          dataset="synthetic-directional", input_size=64,
                          epochs=10, seed=0)
        averages[variant] = multi_run(
            cfg, runs=4, split=split, trainer=_validation_trainer
        ).avg
    assert averages["sobel-concat"] >= averages["plain"]


@pytest.mark.slow
def test_stl_on_translated_glyphs():
    """The STL model matches or beats the plain one on shifted glyphs."""
    split = translated_glyphs(
        0, dict(train=100, validation=50, test=10), size=32
    )
    averages = {}
    for stl in (False, True):
        cfg = TrainConfig(arch="mini", stl=stl, dataset="synthetic-bars",
                          input_size=32, epochs=10, batch_size=16, seed=0)
        averages[stl] = multi_run(
            cfg, runs=2, split=split, trainer=_validation_trainer
        ).avg
    assert averages[True] >= averages[False]
