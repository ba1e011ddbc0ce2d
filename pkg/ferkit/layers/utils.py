# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Sliding-window geometry shared by convolution and pooling kernels."""

import math

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

PADDINGS = ("same", "valid")


def output_size(size, k, stride, padding):
    """Return (output size, pad before, pad after) along one axis.

    Same padding follows the usual convention: the output is
    ``ceil(size / stride)`` and odd padding goes after the data.
    """
    if padding == "same":
        out = int(math.ceil(size / stride))
        total = max((out - 1) * stride + k - size, 0)
        return out, total // 2, total - total // 2
    return (size - k) // stride + 1, 0, 0


def window_slice(offset, stride, count):
    """Input positions read by kernel tap ``offset`` over ``count`` steps."""
    return slice(offset, offset + stride * (count - 1) + 1, stride)


def windows(xp, k, stride, out_h, out_w):
    """View of every k x k window of an NHWC array, as [N,Ho,Wo,C,k,k]."""
    view = sliding_window_view(xp, (k, k), axis=(1, 2))
    return view[
        :, window_slice(0, stride, out_h), window_slice(0, stride, out_w)
    ]


def pad_spatial(x, pad_h, pad_w):
    """Zero-pad the two spatial axes of an NHWC array."""
    if not any(pad_h) and not any(pad_w):
        return x
    return np.pad(x, ((0, 0), pad_h, pad_w, (0, 0)), mode="constant")
