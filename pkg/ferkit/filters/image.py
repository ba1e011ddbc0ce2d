# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Image value type."""

import numpy as np

from ferkit.filters.errors import ValueRangeError

VALUE_RANGES = {
    "raw": (0.0, 255.0),
    "unit": (0.0, 1.0),
    "signed": (-1.0, 1.0),
}
"""Declared value ranges; derivative images are exempt from the bounds."""


class Image(object):
    """Height x width x channels pixel grid with a declared value range."""

    __slots__ = ("data", "value_range", "derivative")

    def __init__(self, data, value_range="raw", derivative=False):
        """Constructor."""
        data = np.asarray(data, dtype=np.float64)
        if data.ndim == 2:
            data = data[:, :, np.newaxis]
        if data.ndim != 3:
            raise ValueError(
                "Image data must be [H, W] or [H, W, C], got {0}".format(
                    data.shape
                )
            )
        if value_range not in VALUE_RANGES:
            raise ValueError("Unknown value range {0}".format(value_range))
        self.data = data
        self.value_range = value_range
        self.derivative = derivative

    @property
    def height(self):
        """Rows."""
        return self.data.shape[0]

    @property
    def width(self):
        """Columns."""
        return self.data.shape[1]

    @property
    def channels(self):
        """Channels."""
        return self.data.shape[2]

    @property
    def shape(self):
        """(H, W, C)."""
        return self.data.shape

    def channel(self, index):
        """Return channel ``index`` as a single-channel image."""
        return Image(
            self.data[:, :, index:index + 1].copy(),
            value_range=self.value_range,
            derivative=self.derivative,
        )

    def plane(self):
        """Return the 2-D plane of a single-channel image."""
        return self.data[:, :, 0]

    def check_range(self):
        """Scan min/max against the declared range."""
        if self.derivative or self.data.size == 0:
            return self
        low, high = VALUE_RANGES[self.value_range]
        if self.data.min() < low or self.data.max() > high:
            raise ValueRangeError(
                message="Values in [{0}, {1}] exceed {2} range {3}".format(
                    self.data.min(), self.data.max(), self.value_range,
                    (low, high),
                )
            )
        return self

    def __repr__(self):
        """Short representation."""
        return "Image(shape={0}, range={1}{2})".format(
            self.shape, self.value_range,
            ", derivative" if self.derivative else "",
        )
