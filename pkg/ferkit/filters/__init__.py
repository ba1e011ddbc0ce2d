# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Fixed derivative-image operators and input assembly."""

from .api import concat_channels, laplacian, normalize, resize_bilinear, \
    sobel
from .image import Image

__all__ = (
    "Image",
    "concat_channels",
    "laplacian",
    "normalize",
    "resize_bilinear",
    "sobel",
)
