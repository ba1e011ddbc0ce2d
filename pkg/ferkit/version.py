# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Version information for ferkit.

This file is imported by ``ferkit.__init__``,
and parsed by ``setup.py``.
"""

__version__ = "0.1.0"
