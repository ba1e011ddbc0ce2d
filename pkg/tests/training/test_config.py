# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Training configuration and experiment preset tests."""

import pytest

from ferkit.training import EXPERIMENTS, TrainConfig, apply_experiment, \
    experiment_group, get_experiment
from ferkit.training.errors import ConfigError


def test_defaults():
    """Defaults follow the package configuration."""
    cfg = TrainConfig()
    assert cfg.lr == 1e-3
    assert (cfg.beta1, cfg.beta2, cfg.eps) == (0.9, 0.999, 1e-8)
    assert cfg.batch_size == 32
    assert cfg.needs_data_dir


@pytest.mark.parametrize("kwargs", [
    dict(lr=0.0),
    dict(beta1=1.0),
    dict(beta2=-0.1),
    dict(eps=0.0),
    dict(batch_size=0),
    dict(epochs=-1),
    dict(arch="resnet"),
    dict(variant="rgb"),
    dict(dataset="affectnet"),
])
def test_invalid_settings(kwargs):
    """Every invariant violation raises ConfigError."""
    with pytest.raises(ConfigError):
        TrainConfig(**kwargs)


def test_fingerprint_ignores_paths():
    """Moving the output or data directory keeps the fingerprint."""
    cfg = TrainConfig(dataset="kdef", data_dir="/data/a", out="/tmp/x")
    moved = TrainConfig(dataset="kdef", data_dir="/data/b", out="/tmp/y")
    assert cfg.fingerprint() == moved.fingerprint()
    assert cfg.fingerprint() != cfg.with_seed(1).fingerprint()


def test_spec_follows_the_settings():
    """The architecture spec carries arch, variant, STL and classes."""
    cfg = TrainConfig(arch="mini", variant="triple-stream", stl=True,
                      input_size=16)
    spec = cfg.spec(7)
    assert (spec.name, spec.variant, spec.stl_enabled) == \
        ("mini", "triple-stream", True)
    assert spec.num_classes == 7
    assert spec.input_shape == (16, 16, 1)


def test_experiment_groups():
    """Presets come in three groups in table order."""
    assert len(EXPERIMENTS) == 14
    assert [e.name for e in experiment_group("ferplus-vgg13")] == [
        "ferplus-vgg13", "ferplus-vgg13-laplacian-concat",
        "ferplus-vgg13-sobel-concat",
    ]
    assert len(experiment_group("kdef-streams")) == 6
    assert len(experiment_group("ferplus-base")) == 5


def test_apply_experiment():
    """A preset overrides the model and dataset settings only."""
    base = TrainConfig(epochs=3, seed=9)
    cfg = apply_experiment(base, get_experiment("kdef-stl-triple-stream"))
    assert (cfg.dataset, cfg.arch, cfg.variant, cfg.stl) == \
        ("kdef", "base", "triple-stream", True)
    assert (cfg.epochs, cfg.seed) == (3, 9)
    with pytest.raises(ConfigError):
        get_experiment("kdef-unknown")
