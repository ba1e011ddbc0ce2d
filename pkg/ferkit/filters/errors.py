# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Image filter exceptions."""

from ferkit.errors import FerKitException


class FilterException(FerKitException):
    """Base exception for image filter errors."""


class ChannelCountError(FilterException):
    """The filter only accepts single-channel images."""

    message = "[SINGLE CHANNEL IMAGE REQUIRED]"


class ImageTooSmallError(FilterException):
    """The image is smaller than the filter kernel."""

    message = "[IMAGE SMALLER THAN KERNEL]"


class ImageSizeMismatch(FilterException):
    """Images to combine do not share height and width."""

    message = "[IMAGE SIZE MISMATCH]"


class InvalidTargetSize(FilterException):
    """Resize target is zero or negative."""

    message = "[INVALID TARGET SIZE]"


class ValueRangeError(FilterException):
    """Pixel values fall outside the declared range."""

    message = "[VALUE OUT OF DECLARED RANGE]"
