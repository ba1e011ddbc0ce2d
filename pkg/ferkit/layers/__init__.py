# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Differentiable network building blocks.

Importing the package registers the composite kernels (``conv2d``,
``depthwise_conv2d``, ``max_pool2d``, ``batch_norm`` and
``softmax_cross_entropy``) with the op registry.
"""

from .bottleneck import BottleneckParams, bottleneck_branch, \
    bottleneck_params, inverted_bottleneck
from .combine import add_bias, concat
from .conv import ConvParams, conv2d, depthwise_conv2d, depthwise_separable
from .dense import DenseParams, dense, flatten
from .init import batch_norm_state, conv_params, dense_params, he_uniform
from .losses import log_softmax, softmax_cross_entropy
from .normalization import BatchNormState, batch_norm
from .pooling import global_avg_pool, max_pool

COMPOSITES = (
    "conv2d",
    "depthwise_conv2d",
    "max_pool2d",
    "batch_norm",
    "softmax_cross_entropy",
)
"""Kernels registered by this package."""

__all__ = (
    "BatchNormState",
    "BottleneckParams",
    "COMPOSITES",
    "ConvParams",
    "DenseParams",
    "add_bias",
    "batch_norm",
    "batch_norm_state",
    "bottleneck_branch",
    "bottleneck_params",
    "concat",
    "conv2d",
    "conv_params",
    "dense",
    "dense_params",
    "depthwise_conv2d",
    "depthwise_separable",
    "flatten",
    "global_avg_pool",
    "he_uniform",
    "inverted_bottleneck",
    "log_softmax",
    "max_pool",
    "softmax_cross_entropy",
)
