# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Parallel-stream fusion.

Each stream runs its own backbone on its derived image; the pre-classifier
features are concatenated along channels and classified by one bias-free
head.
"""

from ferkit.layers import concat
from ferkit.models.blocks import BlockContainer, make_block
from ferkit.models.builder import as_tensor, build_backbone, logits_of, \
    mode_of
from ferkit.models.errors import FeatureDimError
from ferkit.models.specs import LayerSpec


def head_layer(feature_shape, num_classes):
    """Bias-free classifier row for a fused feature of ``feature_shape``."""
    if len(feature_shape) == 3:
        return LayerSpec("conv2d", c=num_classes, k=1, bias=False,
                         activation=None)
    return LayerSpec("dense", c=num_classes, bias=False, activation=None)


def fused_feature_shape(feature_shape, streams):
    """Shape of the channel-wise concatenation of ``streams`` features."""
    return tuple(feature_shape[:-1]) + (feature_shape[-1] * streams,)


class FusedModel(BlockContainer):
    """Parallel backbones joined by one classifier head."""

    def __init__(self, streams, head, spec=None, seed=None):
        """Constructor."""
        self.streams = list(streams)
        self.head = head
        self.spec = spec
        self.seed = seed

    @property
    def num_classes(self):
        """Head width."""
        return self.head.layer.c

    @property
    def tags(self):
        """Stream tags in input order."""
        return [tag for tag, _ in self.streams]

    def named_blocks(self):
        """Every stream's blocks (shared blocks once), then the head."""
        seen, named = set(), []
        for _, backbone in self.streams:
            for name, block in backbone.named_blocks():
                if id(block) not in seen:
                    seen.add(id(block))
                    named.append((name, block))
        named.append(("head.{0}".format(self.head.kind), self.head))
        return named

    def forward(self, tape, inputs, training=True):
        """Logits [N, K] from one input per stream, in stream order."""
        if len(inputs) != len(self.streams):
            raise FeatureDimError(
                message="Expected {0} stream inputs, got {1}".format(
                    len(self.streams), len(inputs)
                )
            )
        mode = mode_of(training)
        features = [
            backbone.features(tape, as_tensor(x), mode)
            for (_, backbone), x in zip(self.streams, inputs)
        ]
        fused = concat(tape, features, axis=-1)
        return logits_of(tape, self.head.forward(tape, fused, mode))


def fuse_parallel(streams, head, spec=None, seed=None):
    """Join ``(tag, backbone)`` streams under ``head``.

    Every backbone must end at the same 1x1xC or vector feature.
    """
    if not streams:
        raise FeatureDimError(message="Nothing to fuse")
    shapes = {tuple(backbone.feature_shape) for _, backbone in streams}
    if len(shapes) != 1:
        raise FeatureDimError(
            message="Stream features differ: {0}".format(sorted(shapes))
        )
    (shape,) = shapes
    if len(shape) == 3 and shape[:2] != (1, 1):
        raise FeatureDimError(
            message="Stream features must be pooled to 1x1xC, got {0}"
            .format(shape)
        )
    expected = fused_feature_shape(shape, len(streams))
    head_in = head.params.kernel.shape[2] if head.kind == "conv2d" \
        else head.params.weight.shape[0]
    if head_in != expected[-1]:
        raise FeatureDimError(
            message="Head expects {0} features, streams give {1}".format(
                head_in, expected[-1]
            )
        )
    return FusedModel(streams, head, spec=spec, seed=seed)


def build_fused(spec, seed, rng, dtype=None, momentum=None, epsilon=None):
    """Build every stream of a parallel spec, then its head.

    With ``share_streams`` the streams share every row except the STL and
    the stem convolution, which depend on the stream's own input.
    """
    layers = spec.stream_layers()
    stem = 1 if spec.stl_enabled else 0
    kwargs = dict(dtype=dtype, momentum=momentum, epsilon=epsilon)
    streams = []
    for tag, shape in spec.stream_shapes():
        shared = None
        if spec.share_streams and streams:
            first = streams[0][1]
            shared = {
                index: first.blocks[index]
                for index in range(stem + 1, len(layers))
            }
        streams.append(
            (tag, build_backbone(layers, shape, rng, tag=tag, shared=shared,
                                 **kwargs))
        )
    feature = streams[0][1].feature_shape
    head = make_block(
        head_layer(feature, spec.num_classes),
        fused_feature_shape(feature, len(streams)), rng, **kwargs
    )
    return fuse_parallel(streams, head, spec=spec, seed=seed)
