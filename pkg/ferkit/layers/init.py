# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Seeded parameter initialization."""

import math

import numpy as np

from ferkit.autograd import Tensor
from ferkit.layers.conv import ConvParams
from ferkit.layers.dense import DenseParams
from ferkit.layers.normalization import BatchNormState


def he_uniform(rng, shape, fan_in):
    """Uniform in [-sqrt(6 / fan_in), sqrt(6 / fan_in)]."""
    limit = math.sqrt(6.0 / fan_in)
    return rng.uniform(-limit, limit, size=shape)


def conv_params(rng, k, in_channels, out_channels, stride=1, bias=True,
                padding="same", dtype=None, depthwise=False):
    """He-uniform kernel, zero bias."""
    if depthwise:
        shape, fan_in = (k, k, in_channels, 1), k * k
    else:
        shape, fan_in = (k, k, in_channels, out_channels), \
            k * k * in_channels
    kernel = Tensor(he_uniform(rng, shape, fan_in), requires_grad=True,
                    dtype=dtype)
    channels = shape[3] if not depthwise else in_channels
    return ConvParams(
        kernel=kernel,
        bias=Tensor(np.zeros(channels), requires_grad=True, dtype=dtype)
        if bias else None,
        stride=stride,
        padding=padding,
    )


def dense_params(rng, in_features, out_features, bias=True, dtype=None):
    """He-uniform weight, zero bias."""
    return DenseParams(
        weight=Tensor(
            he_uniform(rng, (in_features, out_features), in_features),
            requires_grad=True, dtype=dtype,
        ),
        bias=Tensor(np.zeros(out_features), requires_grad=True, dtype=dtype)
        if bias else None,
    )


def batch_norm_state(channels, momentum=None, epsilon=None, dtype=None):
    """Unit scale, zero shift, unset running statistics."""
    return BatchNormState(
        channels, momentum=momentum, epsilon=epsilon, dtype=dtype
    )
