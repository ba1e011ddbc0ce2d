# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Inverted bottleneck block: expand, depthwise filter, project."""

from dataclasses import dataclass

from ferkit.layers.conv import ConvParams, conv2d, depthwise_conv2d
from ferkit.layers.errors import ResidualShapeError
from ferkit.layers.init import batch_norm_state, conv_params
from ferkit.layers.normalization import BatchNormState, batch_norm


@dataclass
class BottleneckParams(object):
    """Three bias-free convolutions, each followed by batch norm."""

    expand: ConvParams
    expand_bn: BatchNormState
    depthwise: ConvParams
    depthwise_bn: BatchNormState
    project: ConvParams
    project_bn: BatchNormState
    residual: bool

    def convs(self):
        """The three convolutions in execution order."""
        return [self.expand, self.depthwise, self.project]

    def norms(self):
        """The three batch norm states in execution order."""
        return [self.expand_bn, self.depthwise_bn, self.project_bn]

    def count(self):
        """Convolution weights only; batch norm is counted apart."""
        return sum(conv.count() for conv in self.convs())


def bottleneck_params(rng, in_channels, c, s, t, dtype=None, momentum=None,
                      epsilon=None):
    """Initialize a block; the residual applies iff s == 1 and C_in == c."""
    hidden = in_channels * t

    def norm(channels):
        return batch_norm_state(
            channels, momentum=momentum, epsilon=epsilon, dtype=dtype
        )

    return BottleneckParams(
        expand=conv_params(rng, 1, in_channels, hidden, bias=False,
                           dtype=dtype),
        expand_bn=norm(hidden),
        depthwise=conv_params(rng, 3, hidden, hidden, stride=s, bias=False,
                              dtype=dtype, depthwise=True),
        depthwise_bn=norm(hidden),
        project=conv_params(rng, 1, hidden, c, bias=False, dtype=dtype),
        project_bn=norm(c),
        residual=s == 1 and in_channels == c,
    )


def bottleneck_branch(tape, x, params, mode="train"):
    """The block without its skip connection."""
    h = batch_norm(tape, conv2d(tape, x, params.expand), params.expand_bn,
                   mode)
    h = tape.record("relu6", [h])
    h = batch_norm(
        tape, depthwise_conv2d(tape, h, params.depthwise),
        params.depthwise_bn, mode,
    )
    h = tape.record("relu6", [h])
    return batch_norm(
        tape, conv2d(tape, h, params.project), params.project_bn, mode
    )


def inverted_bottleneck(tape, x, params, mode="train"):
    """Run the block, adding ``x`` back when the residual flag is set."""
    out = bottleneck_branch(tape, x, params, mode)
    if not params.residual:
        return out
    if out.shape != x.shape:
        raise ResidualShapeError(
            message="Residual needs matching shapes, got {0} and {1}".format(
                x.shape, out.shape
            )
        )
    return tape.record("add", [out, x])
