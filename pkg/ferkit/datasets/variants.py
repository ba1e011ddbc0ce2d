# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Assembly of model inputs for every input variant."""

from dataclasses import replace

from ferkit import config
from ferkit.filters import concat_channels, laplacian, normalize, \
    resize_bilinear, sobel
from ferkit.filters.errors import ChannelCountError
from ferkit.models.specs import STREAM_CHANNELS, VARIANTS


def _stream(img, tag):
    if tag == "original":
        return img
    if tag == "gradient":
        return concat_channels(list(sobel(img)))
    if tag == "laplacian":
        return laplacian(img)
    raise KeyError(tag)


CONCAT_STREAMS = {
    "plain": ("original",),
    "laplacian-concat": ("original", "laplacian"),
    "sobel-concat": ("original", "gradient"),
}
"""Derived images stacked, in channel order, by the concat variants."""


def variant_streams(variant):
    """Stream tags of ``variant``; ``None`` for single-input variants."""
    if variant not in VARIANTS:
        raise ValueError("Unknown variant {0}".format(variant))
    return VARIANTS[variant]["streams"]


def assemble_variant(img, variant, size=None, mode=None):
    """Resize, normalize and derive the model input(s) of ``variant``.

    Derivatives are taken on the resized raw image, then every channel goes
    through the same normalization map. Parallel variants return one image
    per stream, in stream order.
    """
    if img.channels != 1:
        raise ChannelCountError(
            message="Variant assembly expects a single-channel raw image, "
            "got {0} channels".format(img.channels)
        )
    size = size or config.FERKIT_INPUT_SIZE
    mode = mode or config.FERKIT_NORMALIZE_MODE
    streams = variant_streams(variant)
    if (img.height, img.width) != (size, size):
        img = resize_bilinear(img, size, size)

    def stream(tag):
        return normalize(_stream(img, tag), mode)

    if streams is None:
        return concat_channels(
            [stream(tag) for tag in CONCAT_STREAMS[variant]]
        )
    return tuple(stream(tag) for tag in streams)


def input_channels(variant):
    """Channels of each model input of ``variant``."""
    streams = variant_streams(variant)
    if streams is None:
        return (VARIANTS[variant]["channels"],)
    return tuple(STREAM_CHANNELS[tag] for tag in streams)


def assemble_split(split, variant, size=None, mode=None):
    """Copy of ``split`` with every sample assembled for ``variant``."""
    return split.map(
        lambda sample: replace(
            sample, image=assemble_variant(sample.image, variant, size, mode)
        )
    )
