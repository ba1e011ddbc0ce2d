# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Batch normalization tests."""

import numpy as np
import pytest

from ferkit.autograd import Tape, Tensor
from ferkit.layers import BatchNormState, batch_norm
from ferkit.layers.errors import ChannelMismatchError, \
    UninitializedStatsError


def test_train_mode_normalizes_the_batch(rng):
    """Outputs have zero mean and near-unit variance per channel."""
    x = Tensor(rng.normal(3.0, 2.0, size=(8, 4, 4, 3)), dtype="float64")
    state = BatchNormState(3, dtype="float64")
    out = batch_norm(Tape(), x, state, "train").data
    np.testing.assert_allclose(out.mean(axis=(0, 1, 2)), 0.0, atol=1e-10)
    np.testing.assert_allclose(out.var(axis=(0, 1, 2)), 1.0, atol=1e-3)


def test_first_batch_seeds_running_statistics(rng):
    """The first batch is copied, later ones blend in with the momentum."""
    state = BatchNormState(2, momentum=0.9, dtype="float64")
    assert not state.initialized
    first = Tensor(np.ones((4, 2)) * [1.0, 3.0], dtype="float64")
    batch_norm(Tape(), first, state, "train")
    np.testing.assert_allclose(state.running_mean, [1.0, 3.0])
    np.testing.assert_allclose(state.running_var, [0.0, 0.0])
    second = Tensor(np.ones((4, 2)) * [11.0, 3.0], dtype="float64")
    batch_norm(Tape(), second, state, "train")
    np.testing.assert_allclose(state.running_mean, [2.0, 3.0])


def test_eval_mode_uses_running_statistics():
    """Eval mode applies (x - mean) / sqrt(var + eps) * scale + shift."""
    state = BatchNormState(1, epsilon=0.0, dtype="float64")
    state.update(np.array([2.0]), np.array([4.0]))
    state.scale.data[...] = 3.0
    state.shift.data[...] = 1.0
    x = Tensor(np.array([[2.0], [4.0]]), dtype="float64")
    out = batch_norm(Tape(), x, state, "eval").data
    np.testing.assert_allclose(out[:, 0], [1.0, 4.0])


def test_eval_before_training_fails():
    """Uninitialized statistics cannot be used for inference."""
    with pytest.raises(UninitializedStatsError):
        batch_norm(Tape(), Tensor(np.zeros((2, 1))), BatchNormState(1),
                   "eval")


def test_eval_does_not_touch_statistics():
    """Inference leaves the running statistics alone."""
    state = BatchNormState(1, dtype="float64")
    state.update(np.array([0.5]), np.array([1.0]))
    batch_norm(Tape(), Tensor(np.full((3, 1), 9.0)), state, "eval")
    np.testing.assert_array_equal(state.running_mean, [0.5])


def test_channel_mismatch():
    """The last axis must match the state."""
    with pytest.raises(ChannelMismatchError):
        batch_norm(Tape(), Tensor(np.zeros((2, 3))), BatchNormState(2))


def test_parameters_are_auxiliary_pair():
    """Scale and shift are the trainable tensors."""
    state = BatchNormState(4)
    assert state.count() == 8
    np.testing.assert_array_equal(state.scale.data, 1.0)
    np.testing.assert_array_equal(state.shift.data, 0.0)
