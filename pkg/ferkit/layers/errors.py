# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Layer exceptions."""

from ferkit.errors import FerKitException


class LayerException(FerKitException):
    """Base exception for layer errors."""


class ChannelMismatchError(LayerException):
    """Input channels do not match the kernel."""

    def __init__(self, layer, expected, actual):
        """Constructor."""
        self.layer = layer
        self.expected = expected
        self.actual = actual
        super().__init__(
            message="{0}: expected {1} input channels, got {2}".format(
                layer, expected, actual
            )
        )


class InvalidStrideError(LayerException):
    """Stride must be a positive integer."""

    message = "[INVALID STRIDE]"


class DepthwiseMultiplierError(LayerException):
    """Depthwise separable layers need multiplier 1 and a 1x1 pointwise."""

    message = "[INVALID DEPTHWISE SEPARABLE KERNELS]"


class ResidualShapeError(LayerException):
    """Residual connection requested with mismatched shapes."""

    message = "[RESIDUAL SHAPE MISMATCH]"


class WindowTooLargeError(LayerException):
    """Pooling window is larger than the input."""

    message = "[POOLING WINDOW TOO LARGE]"


class UninitializedStatsError(LayerException):
    """Batch norm evaluated before any training step."""

    message = (
        "Batch norm running statistics are uninitialized; run at least one "
        "training step before evaluating."
    )


class LabelOutOfRangeError(LayerException):
    """Class label outside [0, K)."""

    message = "[LABEL OUT OF RANGE]"
