# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Spatial transformer input layer."""

from .grid import affine_grid, bilinear_sample, lattice
from .locnet import IDENTITY_THETA, LocNet, locnet_feature_size, stl_forward

COMPOSITES = ("affine_grid", "bilinear_sample")
"""Kernels registered by this package."""

__all__ = (
    "COMPOSITES",
    "IDENTITY_THETA",
    "LocNet",
    "affine_grid",
    "bilinear_sample",
    "lattice",
    "locnet_feature_size",
    "stl_forward",
)
