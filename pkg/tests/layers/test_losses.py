# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Dense layer and loss tests."""

import math

import numpy as np
import pytest

from ferkit.autograd import Tape, Tensor
from ferkit.layers import DenseParams, add_bias, concat, dense, flatten, \
    log_softmax, softmax_cross_entropy
from ferkit.layers.errors import LabelOutOfRangeError


def test_uniform_logits_loss_is_log_k():
    """Equal logits over K classes cost log K."""
    logits = Tensor(np.zeros((3, 8)), dtype="float64")
    loss = softmax_cross_entropy(Tape(), logits, [0, 3, 7])
    assert loss.item() == pytest.approx(math.log(8))


def test_large_logits_stay_finite():
    """Max subtraction keeps huge logits finite."""
    logits = Tensor(np.array([[1000.0, 0.0], [0.0, 1000.0]]),
                    dtype="float64")
    loss = softmax_cross_entropy(Tape(), logits, [0, 0])
    assert math.isfinite(loss.item())
    assert loss.item() == pytest.approx(500.0)


def test_loss_gradient_is_softmax_minus_onehot():
    """d loss / d logits = (softmax - onehot) / N."""
    logits = Tensor(np.array([[1.0, 2.0, 3.0]]), requires_grad=True,
                    dtype="float64")
    tape = Tape()
    tape.backward(softmax_cross_entropy(tape, logits, [2]))
    probs = np.exp(log_softmax(logits.data))
    np.testing.assert_allclose(logits.grad, probs - [0.0, 0.0, 1.0])


@pytest.mark.parametrize("label", [-1, 3])
def test_label_out_of_range(label):
    """Labels must lie in [0, K)."""
    with pytest.raises(LabelOutOfRangeError):
        softmax_cross_entropy(Tape(), Tensor(np.zeros((1, 3))), [label])


def test_dense_and_flatten(rng):
    """flatten then dense is x.reshape(N, -1) @ W + b."""
    x = Tensor(rng.normal(size=(2, 2, 2, 3)), dtype="float64")
    params = DenseParams(
        Tensor(rng.normal(size=(12, 5)), dtype="float64"),
        Tensor(rng.normal(size=5), dtype="float64"),
    )
    tape = Tape()
    out = dense(tape, flatten(tape, x), params)
    np.testing.assert_allclose(
        out.data, x.data.reshape(2, 12) @ params.weight.data
        + params.bias.data
    )
    assert params.count() == 65


def test_concat_channels_and_gradient(rng):
    """Concatenation along channels splits the gradient back."""
    a = Tensor(rng.normal(size=(2, 1, 1, 3)), requires_grad=True,
               dtype="float64")
    b = Tensor(rng.normal(size=(2, 1, 1, 2)), requires_grad=True,
               dtype="float64")
    tape = Tape()
    out = concat(tape, [a, b])
    np.testing.assert_array_equal(
        out.data, np.concatenate([a.data, b.data], axis=-1)
    )
    weights = Tensor(np.arange(10.0).reshape(2, 1, 1, 5))
    tape.backward(tape.record("sum", [tape.record("mul", [out, weights])]))
    np.testing.assert_array_equal(a.grad, weights.data[..., :3])
    np.testing.assert_array_equal(b.grad, weights.data[..., 3:])


def test_add_bias_without_bias_is_identity():
    """A missing bias returns the input tensor itself."""
    x = Tensor(np.ones((1, 2)))
    assert add_bias(Tape(), x, None) is x
