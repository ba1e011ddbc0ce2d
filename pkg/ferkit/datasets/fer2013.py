# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""FER2013 pixel rows."""

import numpy as np
import pandas as pd

from ferkit.datasets.errors import HeaderError, PixelParseError
from ferkit.filters import Image

FER2013_SIZE = 48
FER2013_COLUMNS = ("emotion", "pixels", "Usage")


def parse_pixels(field, h=FER2013_SIZE, w=FER2013_SIZE, row=None):
    """Parse ``h * w`` space-separated integers into a raw [h, w, 1] image.

    >>> parse_pixels("0 0 0 0", 2, 2).shape
    (2, 2, 1)
    """
    tokens = str(field).split()
    if len(tokens) != h * w:
        raise PixelParseError(
            row,
            "expected {0} pixel values, got {1}".format(h * w, len(tokens)),
        )
    try:
        values = np.array([int(token) for token in tokens], dtype=np.int64)
    except ValueError:
        bad = next(token for token in tokens if not _is_int(token))
        raise PixelParseError(row, "non-numeric pixel {0!r}".format(bad))
    if values.min() < 0 or values.max() > 255:
        raise PixelParseError(
            row, "pixel value outside 0..255: {0}".format(
                values.min() if values.min() < 0 else values.max()
            )
        )
    return Image(values.reshape(h, w), value_range="raw")


def _is_int(token):
    try:
        int(token)
    except ValueError:
        return False
    return True


def read_pixels_csv(path):
    """Read a FER2013 pixels csv, checking its header."""
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    if tuple(frame.columns) != FER2013_COLUMNS:
        raise HeaderError(path, FER2013_COLUMNS, frame.columns)
    return frame
