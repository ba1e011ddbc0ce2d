# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Gradient and Laplacian augmented facial emotion recognition kit."""

from .version import __version__

__all__ = ("__version__",)
