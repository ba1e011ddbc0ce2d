# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""ferkit test helpers: naive nested-loop oracles and file fixtures."""

import math
import os

import numpy as np
from PIL import Image as PILImage

from ferkit.datasets import SPLITS, DatasetSplit, Sample
from ferkit.filters import Image

FERPLUS_HEADER = (
    "usage,Image name,neutral,happiness,surprise,sadness,anger,disgust,"
    "fear,contempt,unknown,NF"
)


def naive_correlate3(plane, kernel):
    """3x3 correlation with replicated borders, one pixel at a time."""
    height, width = plane.shape
    out = np.zeros((height, width))
    for y in range(height):
        for x in range(width):
            total = 0.0
            for dy in range(3):
                for dx in range(3):
                    yy = min(max(y + dy - 1, 0), height - 1)
                    xx = min(max(x + dx - 1, 0), width - 1)
                    total += kernel[dy][dx] * plane[yy, xx]
            out[y, x] = total
    return out


def naive_conv2d(x, w, stride=1, padding="same"):
    """NHWC convolution (correlation) by explicit loops."""
    n, height, width, channels = x.shape
    k, _, _, filters = w.shape
    if padding == "same":
        out_h, out_w = math.ceil(height / stride), math.ceil(width / stride)
        pad_h = max((out_h - 1) * stride + k - height, 0)
        pad_w = max((out_w - 1) * stride + k - width, 0)
        top, left = pad_h // 2, pad_w // 2
    else:
        out_h = (height - k) // stride + 1
        out_w = (width - k) // stride + 1
        top = left = 0
    out = np.zeros((n, out_h, out_w, filters))
    for b in range(n):
        for i in range(out_h):
            for j in range(out_w):
                for f in range(filters):
                    total = 0.0
                    for di in range(k):
                        for dj in range(k):
                            yy = i * stride + di - top
                            xx = j * stride + dj - left
                            if 0 <= yy < height and 0 <= xx < width:
                                for c in range(channels):
                                    total += x[b, yy, xx, c] * w[di, dj, c, f]
                    out[b, i, j, f] = total
    return out


def naive_depthwise_conv2d(x, w, stride=1, padding="same"):
    """Per-channel convolution: one single-channel loop per channel."""
    return np.concatenate([
        naive_conv2d(x[..., c:c + 1], w[:, :, c:c + 1, :], stride, padding)
        for c in range(x.shape[3])
    ], axis=-1)


def naive_max_pool(x, window, stride):
    """Valid max pooling by explicit loops."""
    n, height, width, channels = x.shape
    out_h = (height - window) // stride + 1
    out_w = (width - window) // stride + 1
    out = np.zeros((n, out_h, out_w, channels))
    for b in range(n):
        for i in range(out_h):
            for j in range(out_w):
                for c in range(channels):
                    out[b, i, j, c] = max(
                        x[b, i * stride + di, j * stride + dj, c]
                        for di in range(window) for dj in range(window)
                    )
    return out


def brute_majority(votes, emotions=8):
    """Scan every column: reject if a reject column reaches the maximum."""
    best, winner = -1, None
    for index, count in enumerate(votes):
        if count > best:
            best, winner = count, index
    for index in range(emotions, len(votes)):
        if votes[index] == best:
            return -1
    return winner


def pixels_field(values):
    """FER2013 pixels text for an iterable of integers."""
    return " ".join(str(int(value)) for value in values)


def write_ferplus(directory, rows, header=FERPLUS_HEADER):
    """Write FER2013 pixels and FERplus votes files.

    ``rows`` holds ``(usage, pixel values, votes)`` triples.
    """
    pixels_path = os.path.join(directory, "fer2013.csv")
    votes_path = os.path.join(directory, "fer2013new.csv")
    with open(pixels_path, "w") as fp:
        fp.write("emotion,pixels,Usage\n")
        for usage, pixels, _ in rows:
            fp.write("0,{0},{1}\n".format(pixels_field(pixels), usage))
    with open(votes_path, "w") as fp:
        fp.write(header + "\n")
        for index, (usage, _, votes) in enumerate(rows):
            fp.write("{0},fer{1:07d}.png,{2}\n".format(
                usage, index, ",".join(str(vote) for vote in votes)
            ))
    return pixels_path, votes_path


def write_kdef(directory, stems, size=20, extension=".jpg"):
    """Write one gray image per stem, in per-subject folders."""
    for index, stem in enumerate(stems):
        folder = os.path.join(directory, stem[:4])
        os.makedirs(folder, exist_ok=True)
        data = np.full((size, size, 3), (index * 37) % 256, dtype=np.uint8)
        PILImage.fromarray(data).save(os.path.join(folder, stem + extension))


GLYPHS = (
    np.pad(np.ones((6, 6)), 1),
    np.pad(np.pad(np.zeros((4, 4)), 1, constant_values=1.0), 1),
    np.pad(np.ones((6, 2)), ((1, 1), (3, 3))) +
    np.pad(np.ones((2, 6)), ((3, 3), (1, 1))),
    np.eye(8) + np.eye(8)[::-1],
)
"""8x8 patterns: square, outline, plus and cross."""


def translated_glyphs(seed, per_class, size=32):
    """Glyphs pasted at uniformly random offsets on a noisy canvas."""
    split = DatasetSplit(labels=("square", "outline", "plus", "cross"))
    for index, name in enumerate(SPLITS):
        rng = np.random.default_rng([seed, index])
        part = split.part(name)
        for _ in range(per_class[name]):
            for label, glyph in enumerate(GLYPHS):
                canvas = rng.normal(60.0, 15.0, size=(size, size))
                y, x = rng.integers(0, size - 7, size=2)
                canvas[y:y + 8, x:x + 8] += 160.0 * np.minimum(glyph, 1.0)
                part.append(Sample(
                    image=Image(np.clip(np.rint(canvas), 0.0, 255.0)),
                    label=label,
                    source_id="glyph-{0}-{1:05d}".format(name, len(part)),
                ))
    return split
