# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Derivative images and input assembly utilities.

Filters are correlations (no kernel flip) with replicate borders, so every
derivative image keeps the size of its input.
"""

import cv2
import numpy as np

from ferkit.filters.errors import ChannelCountError, ImageSizeMismatch, \
    ImageTooSmallError, InvalidTargetSize
from ferkit.filters.image import Image

SOBEL_X = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.float64)
SOBEL_Y = SOBEL_X.T.copy()
LAPLACIAN = np.array([[0, 1, 0], [1, -4, 1], [0, 1, 0]], dtype=np.float64)
"""Kernels in correlation orientation."""

KERNEL_SIZE = 3


def _check_filterable(img):
    if img.channels != 1:
        raise ChannelCountError(
            message="Expected a single-channel image, got {0} channels"
            .format(img.channels)
        )
    if img.height < KERNEL_SIZE or img.width < KERNEL_SIZE:
        raise ImageTooSmallError(
            message="Image {0}x{1} is smaller than the {2}x{2} kernel".format(
                img.height, img.width, KERNEL_SIZE
            )
        )


def sobel(img):
    """Return the (gx, gy) Sobel first-derivative images."""
    _check_filterable(img)
    plane = np.ascontiguousarray(img.plane(), dtype=np.float64)
    gx = cv2.Sobel(
        plane, cv2.CV_64F, 1, 0, ksize=KERNEL_SIZE,
        borderType=cv2.BORDER_REPLICATE,
    )
    gy = cv2.Sobel(
        plane, cv2.CV_64F, 0, 1, ksize=KERNEL_SIZE,
        borderType=cv2.BORDER_REPLICATE,
    )
    return (
        Image(gx, value_range=img.value_range, derivative=True),
        Image(gy, value_range=img.value_range, derivative=True),
    )


def laplacian(img):
    """Return the 4-neighbor Laplacian second-derivative image."""
    _check_filterable(img)
    plane = np.ascontiguousarray(img.plane(), dtype=np.float64)
    # ksize=1 selects the [[0,1,0],[1,-4,1],[0,1,0]] aperture
    lap = cv2.Laplacian(
        plane, cv2.CV_64F, ksize=1, borderType=cv2.BORDER_REPLICATE
    )
    return Image(lap, value_range=img.value_range, derivative=True)


def _sample_positions(n_in, n_out):
    """Corner-aligned source positions as (low index, high index, weight)."""
    if n_out == 1 or n_in == 1:
        positions = np.zeros(n_out, dtype=np.float64)
    else:
        positions = np.arange(n_out, dtype=np.float64) * (n_in - 1) \
            / (n_out - 1)
    low = np.clip(np.floor(positions).astype(np.int64), 0, n_in - 1)
    high = np.minimum(low + 1, n_in - 1)
    return low, high, positions - low


def resize_bilinear(img, out_h, out_w):
    """Bilinear resize with corner-aligned sampling.

    Interpolation uses ``a + w * (b - a)`` so constant regions stay exact.
    """
    if out_h < 1 or out_w < 1:
        raise InvalidTargetSize(
            message="Target size {0}x{1} must be positive".format(
                out_h, out_w
            )
        )
    if (out_h, out_w) == (img.height, img.width):
        return Image(
            img.data.copy(), value_range=img.value_range,
            derivative=img.derivative,
        )

    y_lo, y_hi, y_w = _sample_positions(img.height, out_h)
    x_lo, x_hi, x_w = _sample_positions(img.width, out_w)
    data = img.data
    top, bottom = data[y_lo], data[y_hi]
    rows = top + y_w[:, None, None] * (bottom - top)
    left, right = rows[:, x_lo], rows[:, x_hi]
    out = left + x_w[None, :, None] * (right - left)
    return Image(out, value_range=img.value_range, derivative=img.derivative)


def concat_channels(imgs):
    """Stack images along channels, in the given order."""
    if not imgs:
        raise ImageSizeMismatch(message="Nothing to concatenate")
    height, width = imgs[0].height, imgs[0].width
    for img in imgs[1:]:
        if (img.height, img.width) != (height, width):
            raise ImageSizeMismatch(
                message="Cannot concatenate {0}x{1} with {2}x{3}".format(
                    height, width, img.height, img.width
                )
            )
    if len(imgs) == 1:
        return imgs[0]
    return Image(
        np.concatenate([img.data for img in imgs], axis=-1),
        value_range=imgs[0].value_range,
        derivative=all(img.derivative for img in imgs),
    )


NORMALIZE_MODES = {
    "unit": (255.0, 0.0),
    "signed": (127.5, -1.0),
}
"""Affine maps (divisor, offset) from the raw 0..255 range."""


def normalize(img, mode="unit"):
    """Apply the raw-to-``mode`` affine map to every channel."""
    try:
        divisor, offset = NORMALIZE_MODES[mode]
    except KeyError:
        raise ValueError("Unknown normalize mode {0}".format(mode))
    return Image(
        img.data / divisor + offset,
        value_range=mode,
        derivative=img.derivative,
    )
