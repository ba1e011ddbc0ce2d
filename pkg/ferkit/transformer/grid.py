# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Affine sampling grids and the bilinear sampler.

Coordinates are corner-aligned and normalized: -1 and 1 address the centers
of the first and last pixels along an axis.
"""

import numpy as np

from ferkit.autograd import Op, register
from ferkit.autograd.errors import NonFiniteError, ShapeMismatchError

SNAP_ULPS = 8
"""Pixel coordinates within this many grid-dtype ulps (scaled by the axis
length) of an integer are sampled at the integer."""


def lattice(out_h, out_w, dtype=np.float64):
    """Normalized output coordinates as homogeneous [out_h, out_w, 3]."""
    xs = np.linspace(-1.0, 1.0, out_w) if out_w > 1 else np.zeros(1)
    ys = np.linspace(-1.0, 1.0, out_h) if out_h > 1 else np.zeros(1)
    grid_x, grid_y = np.meshgrid(xs, ys)
    return np.stack(
        [grid_x, grid_y, np.ones_like(grid_x)], axis=-1
    ).astype(dtype)


@register("affine_grid")
class AffineGrid(Op):
    """Map the output lattice through per-sample [2, 3] affine matrices."""

    def check(self, arrays, attrs):
        """Theta must be [N, 2, 3]."""
        super().check(arrays, attrs)
        theta = arrays[0]
        if theta.ndim != 3 or theta.shape[1:] != (2, 3):
            raise ShapeMismatchError(self.name, theta.shape, (None, 2, 3))

    def forward(self, ctx, theta, out_h, out_w):
        """Source (x, y) = theta . (x_t, y_t, 1) for every output pixel."""
        base = lattice(out_h, out_w, theta.dtype)
        ctx["base"] = base
        return np.einsum("hwk,njk->nhwj", base, theta)

    def backward(self, ctx, grad, needs, out_h, out_w):
        """d theta[n, j, k] = sum over pixels of grad[.., j] * base[.., k]."""
        return (np.einsum("nhwj,hwk->njk", grad, ctx["base"]),)


def _pixel_coords(normalized, size):
    tolerance = SNAP_ULPS * np.finfo(normalized.dtype).eps * max(size, 1)
    coords = (normalized.astype(np.float64) + 1.0) * (size - 1) / 2.0
    nearest = np.round(coords)
    return np.where(
        np.abs(coords - nearest) <= tolerance, nearest, coords
    )


@register("bilinear_sample")
class BilinearSample(Op):
    """Bilinear interpolation at grid positions with zero padding."""

    arity = 2

    def check(self, arrays, attrs):
        """Image is NHWC and the grid is [N, Ho, Wo, 2] and finite."""
        super().check(arrays, attrs)
        img, grid = arrays
        if img.ndim != 4 or grid.ndim != 4 or grid.shape[-1] != 2 or \
                grid.shape[0] != img.shape[0]:
            raise ShapeMismatchError(self.name, img.shape, grid.shape)
        if not np.all(np.isfinite(grid)):
            raise NonFiniteError(message="Sampling grid is not finite")

    def forward(self, ctx, img, grid):
        """Blend the four neighbors of every sample position."""
        height, width = img.shape[1:3]
        px = _pixel_coords(grid[..., 0], width)
        py = _pixel_coords(grid[..., 1], height)
        x0 = np.floor(px).astype(np.int64)
        y0 = np.floor(py).astype(np.int64)
        wx = (px - x0)[..., None].astype(img.dtype)
        wy = (py - y0)[..., None].astype(img.dtype)
        batch = np.arange(img.shape[0])[:, None, None]

        corners = {}
        for dy in (0, 1):
            for dx in (0, 1):
                yi, xi = y0 + dy, x0 + dx
                valid = (yi >= 0) & (yi < height) & (xi >= 0) & (xi < width)
                yc = np.clip(yi, 0, height - 1)
                xc = np.clip(xi, 0, width - 1)
                value = img[batch, yc, xc] * valid[..., None]
                corners[dy, dx] = (yc, xc, valid, value)

        v00, v01 = corners[0, 0][3], corners[0, 1][3]
        v10, v11 = corners[1, 0][3], corners[1, 1][3]
        ctx.update(
            corners=corners, wx=wx, wy=wy, shape=img.shape, batch=batch,
        )
        return (
            (1 - wx) * (1 - wy) * v00 + wx * (1 - wy) * v01
            + (1 - wx) * wy * v10 + wx * wy * v11
        )

    def backward(self, ctx, grad, needs):
        """Return (d image, d grid)."""
        corners, wx, wy = ctx["corners"], ctx["wx"], ctx["wy"]
        height, width = ctx["shape"][1:3]
        dimg = dgrid = None
        if needs[0]:
            dimg = np.zeros(ctx["shape"], dtype=grad.dtype)
            weights = {
                (0, 0): (1 - wx) * (1 - wy), (0, 1): wx * (1 - wy),
                (1, 0): (1 - wx) * wy, (1, 1): wx * wy,
            }
            for key, (yc, xc, valid, _) in corners.items():
                np.add.at(
                    dimg, (ctx["batch"], yc, xc),
                    grad * weights[key] * valid[..., None],
                )
        if needs[1]:
            v00, v01 = corners[0, 0][3], corners[0, 1][3]
            v10, v11 = corners[1, 0][3], corners[1, 1][3]
            dpx = (grad * ((1 - wy) * (v01 - v00) + wy * (v11 - v10))) \
                .sum(axis=-1)
            dpy = (grad * ((1 - wx) * (v10 - v00) + wx * (v11 - v01))) \
                .sum(axis=-1)
            dgrid = np.stack(
                [dpx * (width - 1) / 2.0, dpy * (height - 1) / 2.0], axis=-1
            )
        return dimg, dgrid


def affine_grid(tape, theta, out_h, out_w):
    """Sampling grid [N, out_h, out_w, 2] for ``theta`` [N, 2, 3]."""
    return tape.record("affine_grid", [theta], dict(out_h=out_h, out_w=out_w))


def bilinear_sample(tape, img, grid):
    """Sample ``img`` [N, H, W, C] at ``grid`` [N, Ho, Wo, 2]."""
    return tape.record("bilinear_sample", [img, grid])
