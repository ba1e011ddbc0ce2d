# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Localization network and the spatial transformer forward pass."""

import numpy as np

from ferkit.autograd import Tensor
from ferkit.layers import DenseParams, conv2d, conv_params, dense, \
    dense_params, flatten, max_pool
from ferkit.transformer.grid import affine_grid, bilinear_sample

IDENTITY_THETA = (1.0, 0.0, 0.0, 0.0, 1.0, 0.0)
"""Row-major identity affine transform."""

STAGE_CHANNELS = (8, 10)
HIDDEN_UNITS = 32
POOL = 2


def locnet_feature_size(height, width):
    """Flattened size after the two conv + pool stages."""
    for _ in STAGE_CHANNELS:
        height, width = height // POOL, width // POOL
    return height * width * STAGE_CHANNELS[-1]


class LocNet(object):
    """Regresses one [2, 3] affine matrix per input image.

    The last dense layer starts with zero weights and the identity bias, so
    a fresh network outputs the identity transform for every input.
    """

    def __init__(self, rng, input_shape, dtype=None):
        """Constructor."""
        height, width, channels = input_shape
        self.input_shape = tuple(input_shape)
        self.convs = []
        for out_channels in STAGE_CHANNELS:
            self.convs.append(
                conv_params(rng, 3, channels, out_channels, dtype=dtype)
            )
            channels = out_channels
        self.hidden = dense_params(
            rng, locnet_feature_size(height, width), HIDDEN_UNITS,
            dtype=dtype,
        )
        self.regressor = DenseParams(
            weight=Tensor(
                np.zeros((HIDDEN_UNITS, 6)), requires_grad=True, dtype=dtype
            ),
            bias=Tensor(
                np.array(IDENTITY_THETA), requires_grad=True, dtype=dtype
            ),
        )

    def layers(self):
        """Parameter groups in execution order."""
        return self.convs + [self.hidden, self.regressor]

    def parameters(self):
        """Trainable tensors."""
        return [t for layer in self.layers() for t in layer.tensors()]

    def count(self):
        """Number of trainable values."""
        return sum(layer.count() for layer in self.layers())

    def forward(self, tape, img):
        """Return theta [N, 2, 3]."""
        h = img
        for params in self.convs:
            h = tape.record("relu", [conv2d(tape, h, params)])
            h = max_pool(tape, h, POOL)
        h = tape.record("relu", [dense(tape, flatten(tape, h), self.hidden)])
        theta = dense(tape, h, self.regressor)
        return tape.record(
            "reshape", [theta], dict(shape=(img.shape[0], 2, 3))
        )


def stl_forward(tape, img, locnet):
    """Warp ``img`` by the transform its localization network predicts."""
    theta = locnet.forward(tape, img)
    grid = affine_grid(tape, theta, img.shape[1], img.shape[2])
    return bilinear_sample(tape, img, grid)
