# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Generated toy datasets for smoke runs and learning checks."""

import math

import numpy as np

from ferkit import config
from ferkit.datasets.api import SPLITS, DatasetSplit, Sample
from ferkit.filters import Image

BAR_ANGLES = (0.0, 45.0, 90.0, 135.0)
BAR_PERIODS = (8.0, 16.0)
BAR_LABELS = tuple(
    "bars-{0:g}deg-p{1:g}".format(angle, period)
    for period in BAR_PERIODS for angle in BAR_ANGLES
)
"""Eight classes: four bar orientations at two spatial periods."""

DIRECTIONS = 4
DIRECTION_LABELS = tuple(
    "ramp-{0:g}deg".format(360.0 * index / DIRECTIONS)
    for index in range(DIRECTIONS)
)
"""Intensity ramps rising along one of four directions."""

SPLIT_SIZES = dict(train=400, validation=100, test=100)
"""Default samples per class and split."""


def _grid(size):
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64)
    return yy, xx


def _to_raw(values):
    return Image(np.clip(np.rint(values), 0.0, 255.0), value_range="raw")


def bars_image(rng, label, size):
    """Square-wave bars of class ``label`` with random phase and noise."""
    angle = math.radians(BAR_ANGLES[label % len(BAR_ANGLES)])
    period = BAR_PERIODS[label // len(BAR_ANGLES)]
    yy, xx = _grid(size)
    coord = xx * math.cos(angle) + yy * math.sin(angle)
    phase = rng.uniform(0.0, 2.0 * math.pi)
    wave = np.sign(np.sin(2.0 * math.pi * coord / period + phase))
    noise = rng.normal(0.0, 12.0, size=(size, size))
    return _to_raw(127.5 + 90.0 * wave + noise)


def ramp_image(rng, label, size):
    """Ramp rising along direction ``label``, mean-matched to mid gray.

    Every class has the same mean intensity, so only the direction of the
    gradient separates them.
    """
    angle = 2.0 * math.pi * label / DIRECTIONS
    yy, xx = _grid(size)
    centered = (2.0 * np.stack([xx, yy]) / max(size - 1, 1)) - 1.0
    coord = centered[0] * math.cos(angle) + centered[1] * math.sin(angle)
    amplitude = rng.uniform(20.0, 40.0)
    values = amplitude * coord + rng.normal(0.0, 25.0, size=(size, size))
    return _to_raw(127.5 + values - values.mean())


GENERATORS = {
    "bars": (bars_image, BAR_LABELS),
    "directional": (ramp_image, DIRECTION_LABELS),
}


def make_synthetic(kind, seed=0, size=None, per_class=None):
    """Build a balanced toy split of ``kind`` (``bars`` or ``directional``).

    ``per_class`` maps split names to samples per class and defaults to
    400/100/100. Each split draws from its own seeded generator.
    """
    try:
        generator, labels = GENERATORS[kind]
    except KeyError:
        raise ValueError("Unknown synthetic dataset {0}".format(kind))
    size = size or config.FERKIT_INPUT_SIZE
    per_class = dict(SPLIT_SIZES, **(per_class or {}))

    split = DatasetSplit(
        labels=labels,
        provenance="synthetic {0}, seed {1}, {2}x{2}".format(
            kind, seed, size
        ),
    )
    for index, name in enumerate(SPLITS):
        rng = np.random.default_rng([seed, index])
        part = split.part(name)
        for _ in range(per_class[name]):
            for label in range(len(labels)):
                part.append(Sample(
                    image=generator(rng, label, size),
                    label=label,
                    source_id="{0}-{1}-{2:05d}".format(
                        kind, name, len(part)
                    ),
                ))
    return split
