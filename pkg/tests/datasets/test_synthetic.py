# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Synthetic dataset tests."""

import numpy as np
import pytest

from ferkit.datasets import make_synthetic
from ferkit.datasets.synthetic import BAR_LABELS, DIRECTION_LABELS


def test_default_sizes():
    """Balanced 400/100/100 per class by default."""
    split = make_synthetic("directional", size=4)
    assert split.counts() == dict(
        train=[400] * 4, validation=[100] * 4, test=[100] * 4
    )
    assert split.labels == DIRECTION_LABELS


def test_bars_are_balanced_and_interleaved(tiny_bars):
    """Classes cycle within every split."""
    assert tiny_bars.labels == BAR_LABELS
    assert [s.label for s in tiny_bars.train[:9]] == \
        [0, 1, 2, 3, 4, 5, 6, 7, 0]
    assert tiny_bars.class_counts("validation") == [1] * 8


def test_same_seed_same_pixels():
    """Generation is a pure function of the seed."""
    sizes = dict(train=2, validation=1, test=1)
    first = make_synthetic("bars", seed=3, size=8, per_class=sizes)
    second = make_synthetic("bars", seed=3, size=8, per_class=sizes)
    other = make_synthetic("bars", seed=4, size=8, per_class=sizes)
    np.testing.assert_array_equal(first.test[0].image.data,
                                  second.test[0].image.data)
    assert not np.array_equal(first.test[0].image.data,
                              other.test[0].image.data)


def test_images_are_raw_and_in_range(tiny_bars):
    """Pixels are integers in 0..255."""
    data = np.stack([s.image.data for s in tiny_bars.train])
    assert data.min() >= 0 and data.max() <= 255
    np.testing.assert_array_equal(data, np.rint(data))
    tiny_bars.train[0].image.check_range()


def test_ramps_share_their_mean():
    """Direction, not brightness, separates the ramp classes."""
    split = make_synthetic("directional", size=16,
                           per_class=dict(train=20, validation=0, test=0))
    means = [
        np.mean([s.image.data.mean() for s in split.train
                 if s.label == label])
        for label in range(4)
    ]
    assert np.ptp(means) < 3.0


def test_source_ids_are_unique(tiny_bars):
    """No source appears in two splits."""
    assert tiny_bars.is_disjoint()


def test_unknown_kind():
    """Only bars and directional exist."""
    with pytest.raises(ValueError):
        make_synthetic("faces")
