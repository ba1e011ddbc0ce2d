# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Common pytest fixtures and plugins."""

import os

import numpy as np
import pytest
from click.testing import CliRunner

from ferkit.datasets import make_synthetic
from ferkit.training import TrainConfig

from .helpers import write_ferplus


def pytest_collection_modifyitems(config, items):
    """Skip desktop-scale tests unless ``FERKIT_RUN_SLOW=1``."""
    if os.environ.get("FERKIT_RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set FERKIT_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture()
def rng():
    """Seeded generator."""
    return np.random.default_rng(0)


@pytest.fixture()
def runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture()
def ferplus_dir(tmp_path):
    """Three FERplus rows: neutral, happiness and an all-unknown reject."""
    rows = [
        ("Training", [10] * 2304, (8, 1, 1, 0, 0, 0, 0, 0, 0, 0)),
        ("PublicTest", [200] * 2304, (0, 9, 1, 0, 0, 0, 0, 0, 0, 0)),
        ("PrivateTest", [0] * 2304, (0, 0, 0, 0, 0, 0, 0, 0, 10, 0)),
    ]
    write_ferplus(str(tmp_path), rows)
    return tmp_path


@pytest.fixture(scope="session")
def tiny_bars():
    """Small 16x16 synthetic split: 4 train, 1 validation, 1 test a class."""
    return make_synthetic(
        "bars", seed=0, size=16,
        per_class=dict(train=4, validation=1, test=1),
    )


@pytest.fixture()
def mini_config():
    """Two quick epochs of the mini network on 16x16 inputs."""
    return TrainConfig(
        arch="mini", dataset="synthetic-bars", input_size=16, epochs=2,
        batch_size=8, samples_per_class=4, seed=3, dtype="float64",
    )
