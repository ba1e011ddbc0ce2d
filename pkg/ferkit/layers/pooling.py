# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Max and global average pooling."""

import numpy as np

from ferkit.autograd import Op, register
from ferkit.autograd.errors import ShapeMismatchError
from ferkit.layers.errors import InvalidStrideError, WindowTooLargeError
from ferkit.layers.utils import output_size, window_slice, windows


@register("max_pool2d")
class MaxPool2D(Op):
    """Windowed max with valid padding.

    The gradient goes to the first maximum of each window.
    """

    def check(self, arrays, attrs):
        """Window must fit inside the input."""
        super().check(arrays, attrs)
        x = arrays[0]
        window, stride = attrs["window"], attrs["stride"]
        if x.ndim != 4:
            raise ShapeMismatchError(self.name, x.shape, detail="NHWC input")
        if stride < 1:
            raise InvalidStrideError(
                message="max_pool2d: stride must be positive, got {0}".format(
                    stride
                )
            )
        if window < 1 or window > x.shape[1] or window > x.shape[2]:
            raise WindowTooLargeError(
                message="Window {0} does not fit input {1}x{2}".format(
                    window, x.shape[1], x.shape[2]
                )
            )

    def forward(self, ctx, x, window, stride):
        """Take the max of every window."""
        out_h = output_size(x.shape[1], window, stride, "valid")[0]
        out_w = output_size(x.shape[2], window, stride, "valid")[0]
        win = windows(x, window, stride, out_h, out_w)
        flat = win.reshape(win.shape[:4] + (window * window,))
        index = flat.argmax(axis=-1)
        ctx.update(shape=x.shape, index=index, out_hw=(out_h, out_w))
        return np.take_along_axis(flat, index[..., None], axis=-1)[..., 0]

    def backward(self, ctx, grad, needs, window, stride):
        """Scatter each window's gradient onto its maximum."""
        out_h, out_w = ctx["out_hw"]
        index = ctx["index"]
        dx = np.zeros(ctx["shape"], dtype=grad.dtype)
        for i in range(window):
            for j in range(window):
                dx[
                    :, window_slice(i, stride, out_h),
                    window_slice(j, stride, out_w),
                ] += grad * (index == i * window + j)
        return (dx,)


def max_pool(tape, x, window=2, stride=None):
    """Max pooling; ``stride`` defaults to the window size."""
    return tape.record(
        "max_pool2d", [x], dict(window=window, stride=stride or window)
    )


def global_avg_pool(tape, x):
    """Per-channel spatial mean, [N,H,W,C] -> [N,1,1,C]."""
    return tape.record("mean", [x], dict(axis=(1, 2), keepdims=True))
