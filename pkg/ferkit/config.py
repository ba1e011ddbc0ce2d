# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Default configuration for ferkit.

Every value can be overridden from the environment with a variable of the
same name, e.g. ``FERKIT_BATCH_SIZE=64``.
"""

import os


def _parse_env_bool(var_name, default=None):
    if str(os.environ.get(var_name)).lower() == "true":
        return True
    elif str(os.environ.get(var_name)).lower() == "false":
        return False
    return default


###############################################################################
# Numerics
###############################################################################
FERKIT_DEFAULT_DTYPE = os.environ.get("FERKIT_DEFAULT_DTYPE", "float32")
"""Element type of tensors created without an explicit dtype."""

FERKIT_GRADCHECK_DTYPE = os.environ.get("FERKIT_GRADCHECK_DTYPE", "float64")
"""Element type used by every finite-difference gradient check."""

FERKIT_GRADCHECK_SEEDS = int(os.environ.get("FERKIT_GRADCHECK_SEEDS", "20"))
"""Random seeds per operation in the gradient-check suite."""

FERKIT_GRADCHECK_EPS = float(os.environ.get("FERKIT_GRADCHECK_EPS", "1e-6"))
"""Central-difference step."""

FERKIT_GRADCHECK_TOLERANCE = float(
    os.environ.get("FERKIT_GRADCHECK_TOLERANCE", "1e-4")
)
"""Maximum relative error |autograd - numeric| / max(1, |numeric|)."""

FERKIT_DEBUG_FINITE = _parse_env_bool("FERKIT_DEBUG_FINITE", False)
"""Assert that every recorded tensor is finite."""

###############################################################################
# Images
###############################################################################
FERKIT_INPUT_SIZE = int(os.environ.get("FERKIT_INPUT_SIZE", "64"))
"""Side of the square model input, in pixels."""

FERKIT_NORMALIZE_MODE = os.environ.get("FERKIT_NORMALIZE_MODE", "unit")
"""Either ``unit`` (x / 255) or ``signed`` (x / 127.5 - 1)."""

###############################################################################
# Layers
###############################################################################
FERKIT_BN_MOMENTUM = float(os.environ.get("FERKIT_BN_MOMENTUM", "0.99"))
"""Weight of the previous running statistic in batch normalization."""

FERKIT_BN_EPSILON = float(os.environ.get("FERKIT_BN_EPSILON", "1e-3"))
"""Variance floor in batch normalization."""

###############################################################################
# Training
###############################################################################
FERKIT_LEARNING_RATE = float(os.environ.get("FERKIT_LEARNING_RATE", "1e-3"))
"""Adam step size."""

FERKIT_ADAM_BETA1 = float(os.environ.get("FERKIT_ADAM_BETA1", "0.9"))
"""Adam first moment decay."""

FERKIT_ADAM_BETA2 = float(os.environ.get("FERKIT_ADAM_BETA2", "0.999"))
"""Adam second moment decay."""

FERKIT_ADAM_EPSILON = float(os.environ.get("FERKIT_ADAM_EPSILON", "1e-8"))
"""Adam denominator floor."""

FERKIT_BATCH_SIZE = int(os.environ.get("FERKIT_BATCH_SIZE", "32"))
"""Mini-batch size."""

FERKIT_EPOCHS = int(os.environ.get("FERKIT_EPOCHS", "30"))
"""Training epochs."""

FERKIT_SEED = int(os.environ.get("FERKIT_SEED", "0"))
"""Base seed; run ``i`` of a multi-run report uses ``seed + i``."""

FERKIT_RUNS = int(os.environ.get("FERKIT_RUNS", "4"))
"""Number of repeated trainings reported as avg/min/max."""

###############################################################################
# Datasets
###############################################################################
FERKIT_FER2013_CSV = os.environ.get("FERKIT_FER2013_CSV", "fer2013.csv")
"""File name of the FER2013 pixels CSV inside the data directory."""

FERKIT_FERPLUS_CSV = os.environ.get("FERKIT_FERPLUS_CSV", "fer2013new.csv")
"""File name of the FERplus votes CSV inside the data directory."""

FERKIT_KDEF_ANGLES = os.environ.get("FERKIT_KDEF_ANGLES", "straight")
"""KDEF camera angles to keep: ``straight`` or ``all``."""

FERKIT_KDEF_SPLIT = (0.8, 0.1, 0.1)
"""Subject-disjoint train/validation/test fractions for KDEF."""

FERKIT_KDEF_EXTENSIONS = (".jpg", ".jpeg", ".pgm", ".pnm", ".png")
"""Image file extensions picked up when walking a KDEF tree."""

###############################################################################
# Output files
###############################################################################
FERKIT_CHECKPOINT_BLOB = "model.bin"
"""Weight blob name inside a checkpoint directory."""

FERKIT_CHECKPOINT_MANIFEST = "model.json"
"""Manifest name inside a checkpoint directory."""

FERKIT_HISTORY_FILE = "history.txt"
"""Line-per-record training history."""

FERKIT_REPORT_FILE = "report.txt"
"""Aligned plain-text multi-run table."""

FERKIT_RUNS_FILE = "runs.txt"
"""Machine-readable line-per-run record file."""

###############################################################################
# Logging
###############################################################################
FERKIT_LOG_LEVEL = os.environ.get("FERKIT_LOG_LEVEL", "INFO")
"""Level of the ferkit loggers."""

FERKIT_SENTRY_DSN = os.environ.get("FERKIT_SENTRY_DSN")
"""Set to report uncaught CLI errors to Sentry."""
