# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Batch normalization over the channel axis."""

import numpy as np

from ferkit import config
from ferkit.autograd import Op, Tensor, register
from ferkit.autograd.errors import ShapeMismatchError
from ferkit.layers.errors import ChannelMismatchError, \
    UninitializedStatsError

MODES = ("train", "eval")


class BatchNormState(object):
    """Affine scale/shift plus running statistics of one channel axis.

    Running statistics stay unset until the first training batch, which
    seeds them; later batches blend in with ``momentum``.
    """

    def __init__(self, channels, momentum=None, epsilon=None, dtype=None):
        """Constructor."""
        self.channels = channels
        self.momentum = config.FERKIT_BN_MOMENTUM \
            if momentum is None else momentum
        self.epsilon = config.FERKIT_BN_EPSILON \
            if epsilon is None else epsilon
        self.scale = Tensor(np.ones(channels), requires_grad=True, dtype=dtype)
        self.shift = Tensor(
            np.zeros(channels), requires_grad=True, dtype=dtype
        )
        self.running_mean = None
        self.running_var = None

    @property
    def initialized(self):
        """Whether a training step has produced running statistics."""
        return self.running_mean is not None

    def update(self, mean, var):
        """Blend batch statistics into the running ones."""
        if not self.initialized:
            self.running_mean = mean.copy()
            self.running_var = var.copy()
            return
        self.running_mean = self.momentum * self.running_mean \
            + (1.0 - self.momentum) * mean
        self.running_var = self.momentum * self.running_var \
            + (1.0 - self.momentum) * var

    def parameters(self):
        """Trainable tensors."""
        return [self.scale, self.shift]

    def count(self):
        """Number of trainable values."""
        return self.scale.size + self.shift.size


@register("batch_norm")
class BatchNorm(Op):
    """Normalize by given statistics, then scale and shift.

    In train mode the statistics are the batch's own, so the gradient flows
    through them as well.
    """

    arity = 3

    def check(self, arrays, attrs):
        """Channel axis must match scale and shift."""
        super().check(arrays, attrs)
        x, scale, shift = arrays
        if scale.shape != (x.shape[-1],) or shift.shape != scale.shape:
            raise ChannelMismatchError(
                self.name, scale.shape[0], x.shape[-1]
            )
        if attrs.get("mode") not in MODES:
            raise ShapeMismatchError(
                self.name, x.shape, detail="mode {0}".format(attrs.get("mode"))
            )

    def forward(self, ctx, x, scale, shift, mode, mean, var, epsilon):
        """scale * (x - mean) / sqrt(var + epsilon) + shift."""
        inv_std = 1.0 / np.sqrt(var + epsilon)
        xhat = (x - mean) * inv_std
        ctx.update(xhat=xhat, inv_std=inv_std, scale=scale)
        return (scale * xhat + shift).astype(x.dtype)

    def backward(self, ctx, grad, needs, mode, mean, var, epsilon):
        """Return (d x, d scale, d shift)."""
        xhat, inv_std = ctx["xhat"], ctx["inv_std"]
        axes = tuple(range(grad.ndim - 1))
        dxhat = grad * ctx["scale"]
        if mode == "train":
            count = grad.size // grad.shape[-1]
            dx = inv_std / count * (
                count * dxhat - dxhat.sum(axis=axes)
                - xhat * (dxhat * xhat).sum(axis=axes)
            )
        else:
            dx = dxhat * inv_std
        return (
            dx if needs[0] else None,
            (grad * xhat).sum(axis=axes) if needs[1] else None,
            grad.sum(axis=axes) if needs[2] else None,
        )


def batch_norm(tape, x, state, mode="train"):
    """Batch normalization of the last axis of ``x``.

    Train mode normalizes by the batch's biased mean and variance over every
    other axis and updates the running statistics; eval mode uses the
    running statistics.
    """
    if x.shape[-1] != state.channels:
        raise ChannelMismatchError("batch_norm", state.channels, x.shape[-1])
    if mode == "train":
        axes = tuple(range(x.ndim - 1))
        mean = x.data.mean(axis=axes)
        var = x.data.var(axis=axes)
        state.update(mean, var)
    else:
        if not state.initialized:
            raise UninitializedStatsError()
        mean = state.running_mean.astype(x.dtype)
        var = state.running_var.astype(x.dtype)
    return tape.record(
        "batch_norm", [x, state.scale, state.shift],
        dict(mode=mode, mean=mean, var=var, epsilon=state.epsilon),
    )
