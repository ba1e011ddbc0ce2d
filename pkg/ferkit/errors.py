# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 CERN.
#
# ferkit is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""ferkit exceptions."""


class FerKitException(Exception):
    """Base exception for all ferkit errors."""

    message = "[FERKIT ERROR]"

    def __init__(self, *args, **kwargs):
        """Constructor."""
        message = kwargs.pop("message", None)
        if message:
            self.message = message
        elif args:
            self.message = args[0]
        self.description = self.message
        super().__init__(self.message, *args[1:])

    def __str__(self):
        """Return the human readable message."""
        return str(self.message)
