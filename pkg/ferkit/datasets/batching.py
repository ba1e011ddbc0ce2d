# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Seeded mini-batches and on-disk input arrays."""

import numbers
import os

import numpy as np

from ferkit.datasets.api import SPLITS
from ferkit.datasets.errors import InvalidBatchSize


def epoch_order(count, seed, epoch=0):
    """Permutation of ``range(count)`` for ``epoch`` of a seeded run."""
    rng = np.random.default_rng([seed, epoch])
    return rng.permutation(count)


def shuffle_batches(samples, batch_size, seed, epoch=0):
    """Index batches of one epoch; the last partial batch is kept.

    ``samples`` is a sized collection or a sample count.

    >>> [len(batch) for batch in shuffle_batches(10, 4, seed=0)]
    [4, 4, 2]
    """
    if batch_size < 1:
        raise InvalidBatchSize(
            message="Batch size must be >= 1, got {0}".format(batch_size)
        )
    count = samples if isinstance(samples, numbers.Integral) else len(samples)
    order = epoch_order(count, seed, epoch)
    return iter([
        order[start:start + batch_size]
        for start in range(0, count, batch_size)
    ])


def _planes(image):
    images = image if isinstance(image, tuple) else (image,)
    return [img.data for img in images]


def stack_samples(samples, indices=None, dtype=None):
    """Stack assembled samples into per-stream [N, H, W, C] arrays.

    Returns ``(inputs, labels)`` where ``inputs`` has one array per stream.
    """
    picked = samples if indices is None else [samples[i] for i in indices]
    if not picked:
        return [], np.zeros((0,), dtype=np.int64)
    columns = list(zip(*(_planes(sample.image) for sample in picked)))
    inputs = [np.stack(column).astype(dtype or np.float64, copy=False)
              for column in columns]
    labels = np.array([sample.label for sample in picked], dtype=np.int64)
    return inputs, labels


def write_arrays(split, directory, streams=None):
    """Write ``<directory>/<split>.npz`` for every split of ``split``.

    Each archive holds ``inputs_<stream>``, ``labels`` and ``source_ids``.
    """
    os.makedirs(directory, exist_ok=True)
    streams = streams or ("input",)
    written = {}
    for name in SPLITS:
        samples = split.part(name)
        inputs, labels = stack_samples(samples)
        arrays = {
            "inputs_{0}".format(tag): array
            for tag, array in zip(streams, inputs)
        }
        arrays["labels"] = labels
        arrays["source_ids"] = np.array(
            [sample.source_id for sample in samples], dtype=str
        )
        path = os.path.join(directory, "{0}.npz".format(name))
        np.savez(path, **arrays)
        written[name] = path
    return written
