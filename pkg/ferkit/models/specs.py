# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Declarative architecture specs and the built-in architectures."""

import math
from dataclasses import asdict, dataclass, field, replace
from typing import Optional, Tuple

from ferkit import config
from ferkit.models.errors import SpecError
from ferkit.transformer import locnet_feature_size

KINDS = ("conv2d", "bottleneck", "avg_pool", "max_pool", "dense", "stl")
ACTIVATIONS = (None, "relu", "relu6")

STREAM_CHANNELS = {
    "original": 1,
    "gradient": 2,
    "laplacian": 1,
}
"""Channels of each parallel stream's derived image; gradient is (gx, gy)."""

VARIANTS = {
    "plain": dict(channels=1, streams=None),
    "laplacian-concat": dict(channels=2, streams=None),
    "sobel-concat": dict(channels=3, streams=None),
    "laplacian-parallel": dict(channels=1,
                               streams=("original", "laplacian")),
    "sobel-parallel": dict(channels=1, streams=("original", "gradient")),
    "triple-stream": dict(channels=1,
                          streams=("original", "gradient", "laplacian")),
}
"""Input channels and parallel streams of every input variant."""

FERPLUS_CLASSES = 8
KDEF_CLASSES = 7


@dataclass(frozen=True)
class LayerSpec(object):
    """One row of an architecture table."""

    kind: str
    c: int = 0
    s: int = 1
    t: Optional[int] = None
    k: int = 3
    bias: bool = True
    activation: Optional[str] = "relu"

    def __post_init__(self):
        """Check the per-kind invariants."""
        if self.kind not in KINDS:
            raise SpecError(self.kind, detail="unknown layer kind")
        if (self.t is not None) != (self.kind == "bottleneck"):
            raise SpecError(
                self.kind,
                detail="expansion factor is set iff the layer is a "
                "bottleneck",
            )
        if self.activation not in ACTIVATIONS:
            raise SpecError(
                self.kind, detail="unknown activation {0}".format(
                    self.activation
                )
            )
        if self.s < 1:
            raise SpecError(self.kind, detail="stride must be positive")


@dataclass(frozen=True)
class ArchSpec(object):
    """A named network: input shape, layer rows and input variant.

    For parallel variants ``input_shape`` is the shape of the original
    image; each stream gets the channel count of its derived image.
    """

    name: str
    input_shape: Tuple[int, int, int]
    layers: Tuple[LayerSpec, ...]
    variant: str = "plain"
    stl_enabled: bool = False
    share_streams: bool = False
    bn_momentum: float = field(default_factory=lambda: (
        config.FERKIT_BN_MOMENTUM
    ))
    bn_epsilon: float = field(default_factory=lambda: (
        config.FERKIT_BN_EPSILON
    ))

    def __post_init__(self):
        """Check the variant against the input channels."""
        if self.variant not in VARIANTS:
            raise SpecError(
                self.name, detail="unknown variant {0}".format(self.variant)
            )
        expected = VARIANTS[self.variant]["channels"]
        if self.input_shape[2] != expected:
            raise SpecError(
                self.name, expected=expected, actual=self.input_shape[2],
                detail="input channels of variant {0}".format(self.variant),
            )
        if not self.layers:
            raise SpecError(self.name, detail="no layers")

    @property
    def num_classes(self):
        """Width of the classifier, the last layer."""
        return self.layers[-1].c

    @property
    def streams(self):
        """Stream tags of a parallel variant, None otherwise."""
        return VARIANTS[self.variant]["streams"]

    def stream_shapes(self):
        """(tag, input shape) per stream; one untagged stream if plain."""
        height, width, channels = self.input_shape
        if self.streams is None:
            return [(None, (height, width, channels))]
        return [
            (tag, (height, width, STREAM_CHANNELS[tag]))
            for tag in self.streams
        ]

    def stream_layers(self):
        """Per-stream rows: the optional STL, then all but the classifier."""
        head = (LayerSpec("stl", activation=None),) \
            if self.stl_enabled else ()
        return head + tuple(self.layers[:-1])

    def to_dict(self):
        """Json-serializable description."""
        return dict(
            name=self.name,
            input_shape=list(self.input_shape),
            layers=[asdict(layer) for layer in self.layers],
            variant=self.variant,
            stl_enabled=self.stl_enabled,
            share_streams=self.share_streams,
            bn_momentum=self.bn_momentum,
            bn_epsilon=self.bn_epsilon,
        )

    @classmethod
    def from_dict(cls, data):
        """Inverse of :meth:`to_dict`."""
        data = dict(data)
        data["input_shape"] = tuple(data["input_shape"])
        data["layers"] = tuple(LayerSpec(**row) for row in data["layers"])
        return cls(**data)


def output_shape(layer, shape, position=None):
    """Propagate ``shape`` through ``layer``; raise SpecError on failure."""
    name = position or layer.kind
    if len(shape) == 1 and layer.kind != "dense":
        raise SpecError(
            name, expected="an [H, W, C] input", actual=shape,
            detail="spatial layer after a dense layer",
        )
    if layer.kind in ("conv2d", "bottleneck"):
        height, width, _ = shape
        return (
            int(math.ceil(height / layer.s)), int(math.ceil(width / layer.s)),
            layer.c,
        )
    if layer.kind == "avg_pool":
        return (1, 1, shape[2])
    if layer.kind == "max_pool":
        height, width, channels = shape
        if layer.k > height or layer.k > width:
            raise SpecError(
                name, expected="at least {0}x{0}".format(layer.k),
                actual=shape, detail="pooling window larger than input",
            )
        return (
            (height - layer.k) // layer.s + 1,
            (width - layer.k) // layer.s + 1, channels,
        )
    if layer.kind == "stl":
        if locnet_feature_size(shape[0], shape[1]) == 0:
            raise SpecError(
                name, expected="at least 4x4", actual=shape,
                detail="too small for the localization network",
            )
        return tuple(shape)
    return (layer.c,)


def infer_shapes(layers, input_shape):
    """Input shape of every row, plus the final output shape."""
    shapes = [tuple(input_shape)]
    for index, layer in enumerate(layers):
        shapes.append(
            output_shape(
                layer, shapes[-1], "{0:02d}.{1}".format(index, layer.kind)
            )
        )
    return shapes


def conv(c, s=1, k=3, bias=True, activation="relu"):
    """Standalone convolution row."""
    return LayerSpec("conv2d", c=c, s=s, k=k, bias=bias,
                     activation=activation)


def bottleneck(c, s, t):
    """Inverted bottleneck row."""
    return LayerSpec("bottleneck", c=c, s=s, t=t, k=3, bias=False,
                     activation="relu6")


def _variant_shape(size, variant):
    return (size, size, VARIANTS[variant]["channels"])


def base_spec(variant="plain", stl=False, num_classes=FERPLUS_CLASSES,
              input_size=64, share_streams=False):
    """The inverted-bottleneck base network, row for row."""
    layers = (
        conv(48),
        conv(32),
        bottleneck(32, 2, 6),
        bottleneck(24, 2, 6),
        bottleneck(24, 1, 6),
        bottleneck(32, 2, 6),
        bottleneck(32, 1, 6),
        bottleneck(32, 1, 6),
        bottleneck(64, 1, 6),
        bottleneck(64, 1, 6),
        bottleneck(64, 1, 6),
        bottleneck(64, 1, 6),
        bottleneck(128, 1, 6),
        bottleneck(256, 1, 6),
        LayerSpec("avg_pool", c=256, activation=None),
        conv(num_classes, k=1, bias=False, activation=None),
    )
    return ArchSpec(
        name="base", input_shape=_variant_shape(input_size, variant),
        layers=layers, variant=variant, stl_enabled=stl,
        share_streams=share_streams,
    )


def vgg13_spec(variant="plain", stl=False, num_classes=FERPLUS_CLASSES,
               input_size=64, share_streams=False):
    """Reconstruction of the VGG13 network used for FERplus.

    Ten 3x3 convolutions in four blocks (64, 128, 256, 256 channels) each
    closed by a 2x2 max pool, then two 1024-unit dense layers and the
    classifier. At 64x64x1 and eight classes the ledger is 8,757,704.
    """
    layers = []
    for channels, repeat in ((64, 2), (128, 2), (256, 3), (256, 3)):
        layers.extend(conv(channels) for _ in range(repeat))
        layers.append(LayerSpec("max_pool", c=channels, s=2, k=2,
                                activation=None))
    layers.extend([
        LayerSpec("dense", c=1024),
        LayerSpec("dense", c=1024),
        LayerSpec("dense", c=num_classes, activation=None),
    ])
    return ArchSpec(
        name="vgg13", input_shape=_variant_shape(input_size, variant),
        layers=tuple(layers), variant=variant, stl_enabled=stl,
        share_streams=share_streams,
    )


def mini_spec(variant="plain", stl=False, num_classes=FERPLUS_CLASSES,
              input_size=16, share_streams=False):
    """A small inverted-bottleneck network for smoke runs."""
    layers = (
        conv(8),
        bottleneck(8, 2, 2),
        bottleneck(8, 1, 2),
        bottleneck(16, 2, 2),
        LayerSpec("avg_pool", c=16, activation=None),
        conv(num_classes, k=1, bias=False, activation=None),
    )
    return ArchSpec(
        name="mini", input_shape=_variant_shape(input_size, variant),
        layers=layers, variant=variant, stl_enabled=stl,
        share_streams=share_streams,
    )


ARCHITECTURES = {
    "base": base_spec,
    "vgg13": vgg13_spec,
    "mini": mini_spec,
}
"""Spec factories by architecture name."""


def get_spec(arch, variant="plain", stl=False, num_classes=FERPLUS_CLASSES,
             input_size=None, share_streams=False):
    """Look up and instantiate a built-in architecture."""
    try:
        factory = ARCHITECTURES[arch]
    except KeyError:
        raise SpecError(arch, detail="unknown architecture")
    kwargs = dict(variant=variant, stl=stl, num_classes=num_classes,
                  share_streams=share_streams)
    if input_size:
        kwargs["input_size"] = input_size
    return factory(**kwargs)


def with_classes(spec, num_classes):
    """Copy of ``spec`` whose classifier has ``num_classes`` outputs."""
    layers = spec.layers[:-1] + (replace(spec.layers[-1], c=num_classes),)
    return replace(spec, layers=layers)
