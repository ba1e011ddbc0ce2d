# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Standard, depthwise and depthwise separable convolutions.

All kernels are cross-correlations over NHWC data with kernels laid out as
[k, k, C_in, C_out] (or [k, k, C, 1] for depthwise filtering).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ferkit.autograd import Op, Tensor, register
from ferkit.autograd.errors import ShapeMismatchError
from ferkit.layers.combine import add_bias
from ferkit.layers.errors import ChannelMismatchError, \
    DepthwiseMultiplierError, InvalidStrideError
from ferkit.layers.utils import PADDINGS, output_size, pad_spatial, \
    window_slice, windows


@dataclass
class ConvParams(object):
    """Kernel, optional bias, stride and padding of one convolution."""

    kernel: Tensor
    bias: Optional[Tensor] = None
    stride: int = 1
    padding: str = "same"

    @property
    def k(self):
        """Spatial kernel size."""
        return self.kernel.shape[0]

    @property
    def in_channels(self):
        """Input channels the kernel expects."""
        return self.kernel.shape[2]

    @property
    def out_channels(self):
        """Output channels (1 per input channel for depthwise kernels)."""
        return self.kernel.shape[3]

    def tensors(self):
        """Kernel, then bias when present."""
        return [self.kernel] + ([self.bias] if self.bias is not None else [])

    def count(self):
        """Number of weights and biases."""
        return sum(tensor.size for tensor in self.tensors())


def _check_geometry(op_name, x, w, stride, padding):
    if not isinstance(stride, (int, np.integer)) or stride < 1:
        raise InvalidStrideError(
            message="{0}: stride must be a positive integer, got {1}".format(
                op_name, stride
            )
        )
    if padding not in PADDINGS:
        raise ShapeMismatchError(
            op_name, x.shape, w.shape, detail="padding {0}".format(padding)
        )
    if x.ndim != 4 or w.ndim != 4 or w.shape[0] != w.shape[1]:
        raise ShapeMismatchError(op_name, x.shape, w.shape)
    if padding == "valid" and (w.shape[0] > x.shape[1] or
                               w.shape[0] > x.shape[2]):
        raise ShapeMismatchError(
            op_name, x.shape, w.shape, detail="kernel larger than input"
        )


def _geometry(x, k, stride, padding):
    out_h, top, bottom = output_size(x.shape[1], k, stride, padding)
    out_w, left, right = output_size(x.shape[2], k, stride, padding)
    return out_h, out_w, (top, bottom), (left, right)


class _WindowedOp(Op):
    """Shared forward bookkeeping for windowed kernels."""

    arity = 2

    def prepare(self, ctx, x, k, stride, padding):
        """Pad ``x`` and return its window view."""
        out_h, out_w, pad_h, pad_w = _geometry(x, k, stride, padding)
        xp = pad_spatial(x, pad_h, pad_w)
        ctx.update(
            in_shape=x.shape, padded_shape=xp.shape, out_hw=(out_h, out_w),
            offsets=(pad_h[0], pad_w[0]),
        )
        win = windows(xp, k, stride, out_h, out_w)
        ctx["win"] = win
        return win

    @staticmethod
    def crop(ctx, dxp):
        """Drop the padding from an input gradient."""
        height, width = ctx["in_shape"][1:3]
        top, left = ctx["offsets"]
        return dxp[:, top:top + height, left:left + width]


@register("conv2d")
class Conv2D(_WindowedOp):
    """Cross-correlation with a [k, k, C_in, C_out] kernel."""

    def check(self, arrays, attrs):
        """Validate stride, padding and channels."""
        super().check(arrays, attrs)
        x, w = arrays
        _check_geometry(
            self.name, x, w, attrs.get("stride", 1),
            attrs.get("padding", "same"),
        )
        if x.shape[3] != w.shape[2]:
            raise ChannelMismatchError(self.name, w.shape[2], x.shape[3])

    def forward(self, ctx, x, w, stride=1, padding="same"):
        """Correlate every window with every output filter."""
        win = self.prepare(ctx, x, w.shape[0], stride, padding)
        ctx["w"] = w
        return np.tensordot(win, w, axes=([4, 5, 3], [0, 1, 2]))

    def backward(self, ctx, grad, needs, stride=1, padding="same"):
        """Return (d input, d kernel)."""
        w = ctx["w"]
        k = w.shape[0]
        out_h, out_w = ctx["out_hw"]
        dx = dw = None
        if needs[1]:
            dw = np.tensordot(
                ctx["win"], grad, axes=([0, 1, 2], [0, 1, 2])
            ).transpose(1, 2, 0, 3)
        if needs[0]:
            dxp = np.zeros(ctx["padded_shape"], dtype=grad.dtype)
            for i in range(k):
                for j in range(k):
                    dxp[
                        :, window_slice(i, stride, out_h),
                        window_slice(j, stride, out_w),
                    ] += grad @ w[i, j].T
            dx = self.crop(ctx, dxp)
        return dx, dw


@register("depthwise_conv2d")
class DepthwiseConv2D(_WindowedOp):
    """Per-channel cross-correlation with a [k, k, C, 1] kernel."""

    def check(self, arrays, attrs):
        """Channel multiplier must be 1."""
        super().check(arrays, attrs)
        x, w = arrays
        _check_geometry(
            self.name, x, w, attrs.get("stride", 1),
            attrs.get("padding", "same"),
        )
        if w.shape[3] != 1:
            raise DepthwiseMultiplierError(
                message="Depthwise channel multiplier must be 1, got {0}"
                .format(w.shape[3])
            )
        if x.shape[3] != w.shape[2]:
            raise ChannelMismatchError(self.name, w.shape[2], x.shape[3])

    def forward(self, ctx, x, w, stride=1, padding="same"):
        """Filter each channel with its own k x k kernel."""
        win = self.prepare(ctx, x, w.shape[0], stride, padding)
        ctx["w"] = w
        return np.einsum("nhwcij,ijc->nhwc", win, w[:, :, :, 0])

    def backward(self, ctx, grad, needs, stride=1, padding="same"):
        """Return (d input, d kernel)."""
        w = ctx["w"]
        k = w.shape[0]
        out_h, out_w = ctx["out_hw"]
        dx = dw = None
        if needs[1]:
            dw = np.einsum("nhwcij,nhwc->ijc", ctx["win"], grad)[..., None]
        if needs[0]:
            dxp = np.zeros(ctx["padded_shape"], dtype=grad.dtype)
            for i in range(k):
                for j in range(k):
                    dxp[
                        :, window_slice(i, stride, out_h),
                        window_slice(j, stride, out_w),
                    ] += grad * w[i, j, :, 0]
            dx = self.crop(ctx, dxp)
        return dx, dw


def conv2d(tape, x, params):
    """Standard convolution, plus bias when the layer has one."""
    out = tape.record(
        "conv2d", [x, params.kernel],
        dict(stride=params.stride, padding=params.padding),
    )
    return add_bias(tape, out, params.bias)


def depthwise_conv2d(tape, x, params):
    """Per-channel convolution, plus bias when the layer has one."""
    out = tape.record(
        "depthwise_conv2d", [x, params.kernel],
        dict(stride=params.stride, padding=params.padding),
    )
    return add_bias(tape, out, params.bias)


def depthwise_separable(tape, x, depthwise, pointwise):
    """Per-channel k x k filtering followed by 1 x 1 channel mixing."""
    if depthwise.out_channels != 1:
        raise DepthwiseMultiplierError(
            message="Depthwise channel multiplier must be 1, got {0}".format(
                depthwise.out_channels
            )
        )
    if pointwise.k != 1:
        raise DepthwiseMultiplierError(
            message="Pointwise kernel must be 1x1, got {0}x{0}".format(
                pointwise.k
            )
        )
    return conv2d(tape, depthwise_conv2d(tape, x, depthwise), pointwise)
